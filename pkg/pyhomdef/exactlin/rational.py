#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# The scalar field is the rationals: every computation is exact and
# `fractions.Fraction` keeps values in canonical (reduced, positive
# denominator) form.
#
from fractions import Fraction
from pyhomdef import error

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def toRational(value):
    """Coerce an int, Fraction or rational literal into a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value

    if isinstance(value, bool):
        raise error.PyHomDefArithmeticError('not a rational: %r' % (value,))

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, str):
        return parseRational(value)

    raise error.PyHomDefArithmeticError('not a rational: %r' % (value,))


def parseRational(text):
    """Parse `-?digits(/digits)?` into a Fraction.

    Raises:
        PyHomDefSyntaxError: on malformed text or a zero denominator
    """
    # lazy import, the grammar depends on this module
    from pyhomdef.parser.options import parseOption

    return parseOption('rational', text)


def formatRational(value):
    """Canonical text form: `p` or `p/q` in lowest terms."""
    return str(Fraction(value))
