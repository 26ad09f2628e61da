#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from pyhomdef.codegen.jsondoc import JsonCodeGen
from pyhomdef.codegen.text import TextCodeGen
