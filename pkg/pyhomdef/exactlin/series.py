#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from fractions import Fraction
from pyhomdef.exactlin.rational import toRational
from pyhomdef import error
from pyhomdef import debug


class TruncSeries(object):
    """Power series in `t` truncated after `t^order`.

    Instances are immutable. All arithmetic is carried out modulo
    `t^(order + 1)`; mixing series of different truncation orders is an
    error rather than a silent coercion.

    Args:
        coeffs: coefficients of `t^0`, `t^1`, ... as ints, Fractions or
            rational literals; missing high coefficients are zero

    Keyword Args:
        order (int): truncation order, defaults to `len(coeffs) - 1`
    """

    def __init__(self, coeffs, order=None):
        coeffs = [toRational(x) for x in coeffs]

        if order is None:
            order = len(coeffs) - 1

        if order < 0:
            raise error.PyHomDefOrderError('negative truncation order %s' % order)

        coeffs = coeffs[:order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))

        self._order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value, order):
        return cls([value], order=order)

    @classmethod
    def variable(cls, order):
        """The series `t`."""
        return cls([0, 1], order=order)

    @property
    def order(self):
        return self._order

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, k):
        return self._coeffs[k]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self._order == other._order and self._coeffs == other._coeffs

        if isinstance(other, (int, Fraction)):
            return self._coeffs == self._lift(other)._coeffs

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __bool__(self):
        return any(self._coeffs)

    def isZero(self):
        return not self

    def __repr__(self):
        return '%s(%r, order=%s)' % (
            self.__class__.__name__, [str(x) for x in self._coeffs], self._order)

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append('%s*t' % c)
            else:
                terms.append('%s*t^%s' % (c, k))

        return (' + '.join(terms) or '0') + ' + O(t^%s)' % (self._order + 1)

    def _lift(self, other):
        if isinstance(other, TruncSeries):
            if other._order != self._order:
                raise error.PyHomDefOrderError(
                    'truncation order mismatch: %s vs %s' % (self._order, other._order))
            return other

        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncSeries([other], order=self._order)

        raise error.PyHomDefArithmeticError(
            'cannot combine series with %r' % (other,))

    def __add__(self, other):
        other = self._lift(other)
        return TruncSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], order=self._order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self._coeffs], order=self._order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncSeries([a * other for a in self._coeffs], order=self._order)

        other = self._lift(other)

        n = self._order
        a, b = self._coeffs, other._coeffs

        coeffs = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if not a[i]:
                continue
            for j in range(n + 1 - i):
                coeffs[i + j] += a[i] * b[j]

        return TruncSeries(coeffs, order=n)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse modulo `t^(order + 1)`.

        Raises:
            PyHomDefArithmeticError: if the constant term is zero
        """
        a = self._coeffs
        if not a[0]:
            raise error.PyHomDefArithmeticError(
                'series with zero constant term is not invertible')

        n = self._order

        b = [Fraction(0)] * (n + 1)
        b[0] = 1 / a[0]
        for k in range(1, n + 1):
            b[k] = -sum(a[i] * b[k - i] for i in range(1, k + 1)) * b[0]

        return TruncSeries(b, order=n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise error.PyHomDefArithmeticError('division by zero')
            return self * (1 / Fraction(other))

        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, exponent):
        """Integer power; negative exponents go through `inverse`."""
        if exponent < 0:
            return self.inverse() ** -exponent

        result = TruncSeries([1], order=self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result


def seriesMul(a, b):
    """Cauchy product of two series of equal truncation order."""
    if a.order != b.order:
        raise error.PyHomDefOrderError(
            'truncation order mismatch: %s vs %s' % (a.order, b.order))

    return a * b


def seriesInverse(a):
    """Inverse series; the constant term must not vanish."""
    debug.logger & debug.flagExactlin and debug.logger(
        'inverting series of order %s' % a.order)

    return a.inverse()
