#!/usr/bin/env python
#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Hom-algebra and deformation checking tool
#
import sys
from pyhomdef.cli import main

if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
