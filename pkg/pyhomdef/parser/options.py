#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from fractions import Fraction
import ply.yacc as yacc
from pyhomdef.lexer.option import lexerFactory
from pyhomdef.parser.base import AbstractParser
from pyhomdef import error
from pyhomdef import debug


# noinspection PyMethodMayBeStatic,PyIncorrectDocstring
class OptionParser(AbstractParser):
    """Parse one option value.

    The grammar is shared, `startSym` selects which value language the
    instance accepts: `rational`, `integer`, `window` or `params`.
    """
    defaultLexer = lexerFactory()

    def __init__(self, startSym='rational', tempdir=''):
        self.startSym = startSym

        self.lexer = self.defaultLexer(tempdir=tempdir)

        # tokens are required for parser
        self.tokens = self.lexer.tokens

        if debug.logger & debug.flagParser:
            logger = debug.logger.getCurrentLogger()
        else:
            logger = yacc.NullLogger()

        if debug.logger & debug.flagGrammar:
            debuglogger = debug.logger.getCurrentLogger()
        else:
            debuglogger = None

        self.parser = yacc.yacc(module=self,
                                start=startSym,
                                write_tables=bool(tempdir),
                                debug=False,
                                outputdir=tempdir,
                                debuglog=debuglogger,
                                errorlog=logger)

    def reset(self):
        # Ply requires lexer reinitialization for (at least) resetting lineno
        self.lexer.reset()

    def parse(self, data, **kwargs):
        debug.logger & debug.flagParser and debug.logger(
            'parsing %s from "%s"' % (self.startSym, data))

        if not data.strip():
            raise error.PyHomDefSyntaxError('empty %s' % self.startSym, lineno=1, colno=1)

        try:
            return self.parser.parse(data, lexer=self.lexer.lexer)

        finally:
            self.reset()

    #
    # Value grammar follows
    #

    def p_rational(self, p):
        """rational : signedInteger
                    | signedInteger SLASH INTEGER"""
        if len(p) == 2:
            p[0] = Fraction(p[1])
            return

        if not p[3]:
            raise error.PyHomDefSyntaxError(
                'zero denominator', lineno=p.lineno(3), colno=p.lexpos(3) + 1)

        p[0] = Fraction(p[1], p[3])

    def p_integer(self, p):
        """integer : signedInteger"""
        p[0] = p[1]

    def p_signedInteger(self, p):
        """signedInteger : INTEGER
                         | MINUS INTEGER"""
        if len(p) == 2:
            p[0] = p[1]
        else:
            p[0] = -p[2]

    def p_window(self, p):
        """window : signedInteger DOT_DOT signedInteger"""
        p[0] = (p[1], p[3])

    def p_params(self, p):
        """params : paramList"""
        p[0] = p[1]

    def p_paramList(self, p):
        """paramList : paramList COMMA param
                     | param"""
        if len(p) == 2:
            p[0] = [p[1]]
        else:
            p[0] = p[1] + [p[3]]

    def p_param(self, p):
        """param : NAME EQUALS rational"""
        p[0] = (p[1], p[3])

    def p_error(self, p):
        if p:
            raise error.PyHomDefParserError(
                'Bad grammar near token type %s, value %s' % (p.type, p.value),
                lineno=p.lineno, colno=p.lexpos + 1)

        raise error.PyHomDefParserError(
            'Unexpected end of %s' % self.startSym)


_parsers = {}


def parseOption(startSym, text):
    """Parse `text` as a value of the `startSym` language.

    Parser instances are built on first use and cached per start symbol.
    """
    try:
        parser = _parsers[startSym]

    except KeyError:
        parser = _parsers[startSym] = OptionParser(startSym=startSym)

    return parser.parse(text)
