#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from pyhomdef.parser.options import OptionParser, parseOption
from pyhomdef.parser.algebra import AlgebraFileParser
