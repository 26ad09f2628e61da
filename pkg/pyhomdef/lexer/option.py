#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Tokenizer for the small value languages used on the command line and
# in data files: rational literals (`-3/4`), index windows (`-4..4`)
# and parameter assignments (`a=1,b=-1/2`).
#
import ply.lex as lex
from pyhomdef.lexer.base import AbstractLexer
from pyhomdef import error
from pyhomdef import debug


# noinspection PySingleQuotedDocstring,PyMethodMayBeStatic
class OptionLexer(AbstractLexer):
    tokens = [
        'INTEGER',
        'MINUS',
        'SLASH',
        'DOT_DOT',
        'COMMA',
        'EQUALS',
        'NAME',
    ]

    t_MINUS = r'-'
    t_SLASH = r'/'
    t_DOT_DOT = r'\.\.'
    t_COMMA = r','
    t_EQUALS = r'='
    t_NAME = r'[A-Za-z_][A-Za-z0-9_]*'

    t_ignore = ' \t'

    def __init__(self, tempdir=''):
        self._tempdir = tempdir
        self.lexer = None
        self.reset()

    def reset(self):
        if debug.logger & debug.flagLexer:
            logger = debug.logger.getCurrentLogger()
        else:
            logger = lex.NullLogger()

        if debug.logger & debug.flagGrammar:
            debuglogger = debug.logger.getCurrentLogger()
        else:
            debuglogger = None

        self.lexer = lex.lex(module=self,
                             outputdir=self._tempdir,
                             debuglog=debuglogger,
                             errorlog=logger)

    def t_INTEGER(self, t):
        r'\d+'
        t.value = int(t.value)
        return t

    def t_newline(self, t):
        r'\r\n|\n|\r'
        t.lexer.lineno += 1

    def t_error(self, t):
        raise error.PyHomDefLexerError(
            "Illegal character '%s', %s characters left unparsed" % (t.value[0], len(t.value) - 1),
            lineno=t.lineno, colno=t.lexpos + 1)


def lexerFactory():
    return OptionLexer
