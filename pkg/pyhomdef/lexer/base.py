#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#


class AbstractLexer(object):
    def reset(self):
        raise NotImplementedError()
