#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Integer-graded Hom-Lie families on the basis {x_n}: the q-deformed
# Witt algebra, its expansion at q = 1 + t as a formal deformation of
# the Witt algebra and the q-deformed Virasoro central extension.
#
# Every bracket sends x_n, x_m to a multiple of x_{n+m}, so every identity
# is a scalar identity per index tuple. Coefficients are Fractions, or
# TruncSeries when q itself is a series.
#
from fractions import Fraction
from math import comb
from pyhomdef.exactlin.series import TruncSeries
from pyhomdef.checkinfo import CheckInfo, statusPass, statusFail, combine
from pyhomdef import error
from pyhomdef import debug

familyQWitt = 'qwitt'
familyVirasoro = 'virq'
familyWittDeformation = 'witt-deformation'

FAMILIES = (familyQWitt, familyVirasoro, familyWittDeformation)


class GradedElement(object):
    """Finite combination of generators `x_n` plus a multiple of `c`.

    Zero coefficients are never stored.
    """

    def __init__(self, terms=None, central=0):
        self._terms = {}
        for n, coeff in (terms or {}).items():
            if coeff:
                self._terms[n] = coeff

        self._central = central or 0

    @classmethod
    def term(cls, n, coeff):
        return cls({n: coeff})

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def central(self):
        return self._central

    def indices(self):
        return sorted(self._terms)

    def coefficient(self, n):
        return self._terms.get(n, 0)

    def __bool__(self):
        return bool(self._terms) or bool(self._central)

    def isZero(self):
        return not self

    def __add__(self, other):
        terms = dict(self._terms)
        for n, coeff in other._terms.items():
            terms[n] = terms.get(n, 0) + coeff

        return GradedElement(terms, self._central + other._central)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return GradedElement(dict((n, c * scalar) for n, c in self._terms.items()),
                             self._central * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return not (self - other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((tuple(sorted(self._terms.items())), self._central))

    def __str__(self):
        terms = ['(%s)*x_%s' % (self._terms[n], n) for n in self.indices()]
        if self._central:
            terms.append('(%s)*c' % (self._central,))
        return ' + '.join(terms) or '0'

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__, self)


def _isSeries(q):
    return isinstance(q, TruncSeries)


def _requireInvertible(q):
    if (q[0] if _isSeries(q) else q) == 0:
        raise error.PyHomDefPoleError('negative powers of q need q != 0', q=q)


def qPower(q, n):
    """`q^n` for an exact rational or a series `q`.

    Raises:
        PyHomDefPoleError: `q = 0` and `n < 0`
    """
    if n < 0:
        _requireInvertible(q)

    if _isSeries(q):
        return q ** n

    return Fraction(q) ** n


def qInteger(n, q):
    """The q-integer `{n}_q = (q^n - 1) / (q - 1)`.

    Evaluated by the sum `1 + q + ... + q^(n-1)` for `n >= 0` and by
    `-(q^n + ... + q^-1)` for `n < 0`, so `q = 1` needs no special case
    and yields `{n}_1 = n`.

    Raises:
        PyHomDefPoleError: `q = 0` and `n < 0`
    """
    if n >= 0:
        powers = [qPower(q, j) for j in range(n)]
        sign = 1
    else:
        powers = [qPower(q, j) for j in range(n, 0)]
        sign = -1

    total = Fraction(0)
    for x in powers:
        total = total + x

    return total * sign


def expandQSeries(n, order):
    """`{n}_{1+t}` truncated after `t^order`.

    The coefficient of `t^k` is `C(k, k) + C(k+1, k) + ... + C(n-1, k)`.
    """
    _requireNonNegative(n)

    return TruncSeries([sum(comb(j, k) for j in range(k, n)) for k in range(order + 1)],
                       order=order)


def expandQPower(n, order):
    """`(1+t)^n` truncated after `t^order`."""
    _requireNonNegative(n)

    return TruncSeries([comb(n, k) for k in range(order + 1)], order=order)


def _requireNonNegative(*indices):
    for n in indices:
        if n < 0:
            raise error.PyHomDefPreconditionError(
                'Witt deformation is defined on non-negative indices only, got %s' % n, index=n)


def qwittBracket(n, m, q):
    """`[x_n, x_m] = ({n}_q - {m}_q) x_{n+m}`"""
    return GradedElement.term(n + m, qInteger(n, q) - qInteger(m, q))


def qwittAlpha(n, q):
    """Scalar `q^n + 1` with `alpha(x_n) = (q^n + 1) x_n`."""
    return qPower(q, n) + 1


def virasoroCentral(n, q):
    """Central coefficient of `[x_n, x_-n]`.

    Raises:
        PyHomDefPoleError: `1 + q^n = 0`
    """
    denominator = 6 * (1 + qPower(q, n))
    if not (denominator[0] if _isSeries(denominator) else denominator):
        raise error.PyHomDefPoleError('Virasoro bracket has a pole at 1 + q^%s = 0' % n, q=q, index=n)

    return (qPower(q, -n) * qInteger(n - 1, q) * qInteger(n, q) * qInteger(n + 1, q)) / denominator


def virasoroBracket(n, m, q):
    """q-Witt bracket plus the central term on `n + m = 0`."""
    element = qwittBracket(n, m, q)
    if n + m:
        return element

    return element + GradedElement(central=virasoroCentral(n, q))


def wittBracketOrder(n, m, k):
    """Order-`k` bracket of the Witt deformation on `x_n, x_m`, n, m >= 0."""
    _requireNonNegative(n, m)

    return GradedElement.term(n + m, _wittBracketCoefficient(n, m, k))


def _wittBracketCoefficient(n, m, k):
    # sum_{j=k}^{n-1} C(j, k) = C(n, k+1)
    return Fraction(comb(n, k + 1) - comb(m, k + 1))


def wittAlphaOrder(n, k):
    """Scalar of `alpha_k(x_n)`: 2 at order 0, `C(n, k)` beyond."""
    _requireNonNegative(n)

    if not k:
        return Fraction(2)

    return Fraction(comb(n, k))


class GradedFamily(object):
    """A graded Hom-Lie family with closed-form bracket and twist.

    Args:
        name (str): one of `qwitt`, `virq`, `witt-deformation`

    Keyword Args:
        q: exact rational (or series) parameter of `qwitt` and `virq`
        order (int): truncation order of `witt-deformation`, whose
            coefficients are series in `t`
    """

    def __init__(self, name, q=None, order=None):
        if name not in FAMILIES:
            raise error.PyHomDefCatalogError('unknown graded family %s' % name)

        if name == familyWittDeformation:
            if order is None or order < 0:
                raise error.PyHomDefOrderError('witt-deformation needs an order >= 0')
        else:
            if q is None:
                raise error.PyHomDefPreconditionError('%s needs a parameter q' % name)
            _requireInvertible(q)

        self.name = name
        self.q = q
        self.order = order

    def __repr__(self):
        if self.name == familyWittDeformation:
            return '%s(%r, order=%s)' % (self.__class__.__name__, self.name, self.order)
        return '%s(%r, q=%s)' % (self.__class__.__name__, self.name, self.q)

    @property
    def nonNegative(self):
        return self.name == familyWittDeformation

    def bracket(self, n, m):
        if self.name == familyQWitt:
            return qwittBracket(n, m, self.q)

        if self.name == familyVirasoro:
            return virasoroBracket(n, m, self.q)

        _requireNonNegative(n, m)

        return GradedElement.term(n + m, TruncSeries(
            [_wittBracketCoefficient(n, m, k) for k in range(self.order + 1)], order=self.order))

    def alpha(self, n):
        if self.name != familyWittDeformation:
            return qwittAlpha(n, self.q)

        _requireNonNegative(n)

        return TruncSeries([wittAlphaOrder(n, k) for k in range(self.order + 1)], order=self.order)

    def alphaElement(self, u):
        # alpha(c) = 2c
        return GradedElement(dict((n, c * self.alpha(n)) for n, c in u.terms.items()),
                             u.central * 2)

    def bracketElements(self, u, v):
        """Bilinear extension of `bracket`; `c` is central."""
        total = GradedElement()
        for n, a in u.terms.items():
            for m, b in v.terms.items():
                total = total + self.bracket(n, m) * (a * b)

        return total

    def jacobiResidual(self, n, l, m):
        """Cyclic sum of `[alpha(x_n), [x_l, x_m]]`."""
        total = GradedElement()
        for x, y, z in ((n, l, m), (l, m, n), (m, n, l)):
            total = total + self.bracketElements(
                self.alphaElement(GradedElement.term(x, 1)), self.bracket(y, z))

        return total


def sigmaJacobiResidual(n, l, m, q):
    """Left side of the sigma-deformed Jacobi identity, identically zero.

    `(q^n+1)[x_n,[x_l,x_m]] + (q^l+1)[x_l,[x_m,x_n]] + (q^m+1)[x_m,[x_n,x_l]]`
    """
    return GradedFamily(familyQWitt, q=q).jacobiResidual(n, l, m)


def virasoroHomJacobi(n, l, m, q):
    """Hom-Jacobi residual of the q-deformed Virasoro bracket, `alpha(c) = 2c`."""
    return GradedFamily(familyVirasoro, q=q).jacobiResidual(n, l, m)


def _cyclic(n, l, m):
    return (n, l, m), (l, m, n), (m, n, l)


def wittDeformationResidual(n, l, m, s):
    """Coefficient of `x_{n+l+m}` in the order-`s` deformation equation.

    Cyclic sum over `i + j + k = s` of `[alpha_i(x), [y, z]_j]_k`.
    """
    _requireNonNegative(n, l, m)

    total = Fraction(0)
    for x, y, z in _cyclic(n, l, m):
        for i in range(s + 1):
            a = wittAlphaOrder(x, i)
            if not a:
                continue
            for j in range(s + 1 - i):
                inner = _wittBracketCoefficient(y, z, j)
                if inner:
                    total += a * inner * _wittBracketCoefficient(x, y + z, s - i - j)

    return total


def _wittTerm(x, y, z, i, j, k):
    # [alpha_i(x), [y, z]_j]_k on coefficients
    return (wittAlphaOrder(x, i) * _wittBracketCoefficient(y, z, j) *
            _wittBracketCoefficient(x, y + z, k))


def wittTauCondition(p, r, w):
    """Cyclic `[alpha_1(x), [y, z]_0]_0` on `(x_p, x_r, x_w)`, coefficient only."""
    _requireNonNegative(p, r, w)

    return sum(_wittTerm(x, y, z, 1, 0, 0) for x, y, z in _cyclic(p, r, w))


def wittNoncocycleRemark(p, r, w):
    """First-order Witt pair against the 2-Hom-cocycle condition.

    Returns:
        tuple: `(combined, partial)` where `combined` is the cyclic sum of
        `[a0(x),[y,z]0]1 + [a1(x),[y,z]0]0 + [a0(x),[y,z]1]0` (always 0)
        and `partial` drops the `a1` term
    """
    _requireNonNegative(p, r, w)

    partial = Fraction(0)
    for x, y, z in _cyclic(p, r, w):
        partial += _wittTerm(x, y, z, 0, 0, 1) + _wittTerm(x, y, z, 0, 1, 0)

    combined = partial + wittTauCondition(p, r, w)

    debug.logger & debug.flagGraded and debug.logger(
        'Witt first-order pair at (%s, %s, %s): combined %s, partial %s' % (p, r, w, combined, partial))

    return combined, partial


def wittSeriesConsistency(n, l, m, order):
    """Order-by-order residuals against the series residual at `q = 1 + t`."""
    q = TruncSeries([1, 1], order=order)

    series = sigmaJacobiResidual(n, l, m, q).coefficient(n + l + m)
    orderwise = TruncSeries([wittDeformationResidual(n, l, m, s) for s in range(order + 1)],
                            order=order)

    if series == orderwise:
        return CheckInfo(name='witt-series-consistency', status=statusPass, triple=(n, l, m))

    return CheckInfo(name='witt-series-consistency', status=statusFail, triple=(n, l, m),
                     residual=tuple(orderwise - series))


def wittGeneratingSeriesConsistency(n, m, order):
    """Generating series of the order-`k` bracket and twist at `q = 1 + t`."""
    q = TruncSeries([1, 1], order=order)

    bracket = TruncSeries([_wittBracketCoefficient(n, m, k) for k in range(order + 1)], order=order)
    alpha = TruncSeries([wittAlphaOrder(n, k) for k in range(order + 1)], order=order)

    checks = [
        CheckInfo(name='bracket', status=bracket == qwittBracket(n, m, q).coefficient(n + m) and
                  statusPass or statusFail, triple=(n, m)),
        CheckInfo(name='alpha', status=alpha == qwittAlpha(n, q) and statusPass or statusFail,
                  triple=(n,))
    ]

    return combine('witt-generating-series', checks)


def _windowTriples(window):
    lo, hi = window
    for n in range(lo, hi + 1):
        for l in range(lo, hi + 1):
            for m in range(lo, hi + 1):
                yield n, l, m


def _scan(name, window, residual, **details):
    count = 0
    for triple in _windowTriples(window):
        count += 1
        value = residual(*triple)
        if value:
            debug.logger & debug.flagGraded and debug.logger(
                '%s: fail at %s residual %s' % (name, triple, value))
            return CheckInfo(name=name, status=statusFail, triple=triple,
                             residual=_residualTuple(value),
                             details=tuple(sorted(details.items())) + (('window', window),))

    debug.logger & debug.flagGraded and debug.logger(
        '%s: pass on %s triples of window %s..%s' % (name, count, window[0], window[1]))

    return CheckInfo(name=name, status=statusPass,
                     details=tuple(sorted(details.items())) + (('window', window), ('triples', count)))


def _residualTuple(value):
    if isinstance(value, GradedElement):
        result = tuple(value.coefficient(n) for n in value.indices())
        if value.central:
            result += (value.central,)
        return result

    if _isSeries(value):
        return tuple(value)

    return (value,)


def scanQWitt(q, window=(-6, 6)):
    """Sigma-deformed Jacobi identity on every triple of the window."""
    _requireInvertible(q)

    return _scan('sigma-jacobi', window, lambda n, l, m: sigmaJacobiResidual(n, l, m, q), q=q)


def scanVirasoro(q, window=(-6, 6)):
    """Hom-Jacobi of the q-deformed Virasoro bracket on the window.

    Raises:
        PyHomDefPoleError: if `q = 0` or `1 + q^n = 0` for some `n` in the window
    """
    _requireInvertible(q)

    lo, hi = window
    for n in range(lo, hi + 1):
        if not 1 + qPower(q, n):
            raise error.PyHomDefPoleError(
                'Virasoro bracket has a pole at 1 + q^%s = 0' % n, q=q, index=n)

    return _scan('virasoro-hom-jacobi', window, lambda n, l, m: virasoroHomJacobi(n, l, m, q), q=q)


def scanWittDeformation(order, window=(0, 6)):
    """Deformation equations of orders `0..order` on the window."""
    _requireNonNegative(*window)

    checks = []
    for s in range(order + 1):
        check = _scan('order-%02d' % s, window,
                      lambda n, l, m: wittDeformationResidual(n, l, m, s))
        check.order = s
        checks.append(check)

    return combine('witt-deformation', checks, details=(('order', order), ('window', window)))


def _firstFailure(name, checks):
    count = 0
    for check in checks:
        count += 1
        if not check:
            check.name = name
            return check

    return CheckInfo(name=name, status=statusPass, details=(('tuples', count),))


def scanFamily(name, q=None, order=None, window=None):
    """Every applicable identity of a graded family on an index window.

    `qwitt` is scanned for the sigma-deformed Jacobi identity and `virq`
    for Hom-Jacobi of the central extension. `witt-deformation` runs the
    order-by-order deformation equations, both series consistency oracles
    and the first-order pair against the cocycle condition at `(1, 2, 4)`.

    Returns:
        CheckInfo: aggregate named after the family

    Raises:
        PyHomDefPoleError: `q` hits a pole of the family
        PyHomDefPreconditionError: missing `q` or a negative window for
            `witt-deformation`
    """
    if name == familyQWitt:
        return combine(name, [scanQWitt(q, window or (-6, 6))])

    if name == familyVirasoro:
        return combine(name, [scanVirasoro(q, window or (-6, 6))])

    if name != familyWittDeformation:
        raise error.PyHomDefCatalogError('unknown graded family %s' % name)

    if order is None or order < 0:
        raise error.PyHomDefOrderError('witt-deformation needs an order >= 0')

    window = window or (0, 6)
    lo, hi = window

    checks = [scanWittDeformation(order, window)]

    checks.append(_firstFailure(
        'witt-series-consistency',
        (wittSeriesConsistency(n, l, m, order) for n, l, m in _windowTriples(window))))

    checks.append(_firstFailure(
        'witt-generating-series',
        (wittGeneratingSeriesConsistency(n, m, order)
         for n in range(lo, hi + 1) for m in range(lo, hi + 1))))

    combined, partial = wittNoncocycleRemark(1, 2, 4)

    checks.append(CheckInfo(
        name='witt-first-order-pair', triple=(1, 2, 4),
        status=not combined and partial and statusPass or statusFail,
        details=(('combined', combined), ('partial', partial),
                 ('tau-condition', wittTauCondition(1, 2, 4)))))

    return combine(name, checks)
