#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
import time
from pyhomdef.reader.base import AbstractReader
from pyhomdef.sourceinfo import SourceInfo
from pyhomdef import error
from pyhomdef import debug


class CallbackReader(AbstractReader):
    """Fetch structure documents by calling user-defined callable.

    The command line uses it to read standard input.
    """
    def __init__(self, cbFun, cbCtx=None):
        """Create an instance of *CallbackReader*.

           Args:
               cbFun (callable): user callable accepting *name* and *cbCtx* objects

           Keyword Args:
               cbCtx (object): user object that can be used to communicate state information
                   between user-scope code and the *cbFun* callable scope
        """
        self._cbFun = cbFun
        self._cbCtx = cbCtx

    def __str__(self):
        return '%s{"%s"}' % (self.__class__.__name__, self._cbFun)

    def getData(self, name, **options):
        debug.logger & debug.flagReader and debug.logger('calling user callback %s for %s' % (self._cbFun, name))

        res = self._cbFun(name, self._cbCtx)
        if not res:
            raise error.PyHomDefReaderFileNotFoundError('no data for %s' % name, reader=self)

        if isinstance(res, str):
            data, text = res.encode('utf-8'), res
        else:
            data, text = res, res.decode('utf-8', 'replace')

        return SourceInfo(path='file:///dev/stdin', file=name, mtime=time.time(),
                          digest=self.digest(data), size=len(data)), text
