#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from pyhomdef.reader.callback import CallbackReader
from pyhomdef.reader.localfile import FileReader
