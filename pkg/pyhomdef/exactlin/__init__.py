#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from pyhomdef.exactlin.rational import Rational, toRational, parseRational, formatRational
from pyhomdef.exactlin.series import TruncSeries, seriesMul, seriesInverse
from pyhomdef.exactlin.matrix import Vector, Matrix, rref, rank, kernelBasis, solveAffine
