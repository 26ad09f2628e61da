#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#


class AbstractWriter(object):
    def putData(self, name, data):
        raise NotImplementedError()
