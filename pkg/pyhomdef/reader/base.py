#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
import hashlib


class AbstractReader(object):
    maxDataSize = 10000000  # structure files can't be that large

    def setOptions(self, **kwargs):
        for k in kwargs:
            setattr(self, k, kwargs[k])
        return self

    @staticmethod
    def digest(data):
        return hashlib.sha256(data).hexdigest()

    def getData(self, name, **options):
        raise NotImplementedError()
