#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
import os
import sys
import time
from pyhomdef.reader.base import AbstractReader
from pyhomdef.sourceinfo import SourceInfo
from pyhomdef import debug
from pyhomdef import error


class FileReader(AbstractReader):
    """Fetch structure documents from local files.

    Relative names are resolved against the directory the reader serves.
    """

    def __init__(self, path='.'):
        """Create an instance of *FileReader* serving a directory.

           Args:
               path (str): directory to resolve relative file names against
        """
        self._path = os.path.normpath(path)

    def __str__(self):
        return '%s{"%s"}' % (self.__class__.__name__, self._path)

    def getData(self, name, **options):
        f = os.path.join(self._path, name)

        debug.logger & debug.flagReader and debug.logger('trying file %s' % f)

        if not os.path.isfile(f):
            raise error.PyHomDefReaderFileNotFoundError(
                'input file %s not found' % f, file=f, reader=self)

        try:
            mtime = os.stat(f)[8]

            debug.logger & debug.flagReader and debug.logger(
                'source file %s mtime is %s, fetching data...' % (
                    f, time.strftime("%a, %d %b %Y %H:%M:%S GMT", time.gmtime(mtime))))

            with open(f, mode='rb') as fp:
                data = fp.read(self.maxDataSize)

            if len(data) == self.maxDataSize:
                raise IOError('file %s too large' % f)

        except (OSError, IOError):
            raise error.PyHomDefReaderError(
                'file %s access error: %s' % (f, sys.exc_info()[1]), file=f, reader=self)

        try:
            text = data.decode('utf-8')

        except UnicodeDecodeError:
            raise error.PyHomDefReaderError(
                'file %s is not UTF-8 encoded: %s' % (f, sys.exc_info()[1]), file=f, reader=self)

        info = SourceInfo(path='file://%s' % os.path.abspath(f), file=name, mtime=mtime,
                          digest=self.digest(data), size=len(data))

        debug.logger & debug.flagReader and debug.logger(
            'read %s bytes from %s, sha256 %s' % (info.size, f, info.digest))

        return info, text
