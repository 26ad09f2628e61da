#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#


class SourceInfo(object):
    #: URL of the input document
    path = ''

    #: file name as given by the user
    file = ''

    #: file modification time
    mtime = 0

    #: sha256 hex digest of the raw input bytes
    digest = ''

    #: number of bytes read
    size = 0

    def __init__(self, **kwargs):
        for k in kwargs:
            setattr(self, k, kwargs[k])

    def __repr__(self):
        return '%s(path=%r, digest=%r)' % (self.__class__.__name__, self.path, self.digest)
