#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Cochains of degree one and two, the twist constraints rho^1 / rho^2,
# the coboundary operators of both flavors and the exact computation
# of Z^2, B^2 and H^2.
#
# A 2-cochain of the associative flavor has one coordinate per tensor
# entry `(i, j, k)`, row-major. A 2-cochain of the lie flavor is
# alternating and has one coordinate per `(i, j, k)` with `i < j`.
# Every linearized operator uses this fixed ordering.
#
from fractions import Fraction
from pyhomdef.exactlin.matrix import Vector, Matrix, rref, kernelBasis, solveAffine
from pyhomdef.homcore import (LinearMap, BilinearMap, kindHomAssociative, kindHomLie,
                              alphaAssociator, twistedJacobiator, checkIdentity)
from pyhomdef.checkinfo import fromResidual, combine
from pyhomdef import error
from pyhomdef import debug

flavorAssociative = 'associative'
flavorLie = 'lie'

FLAVORS = (flavorAssociative, flavorLie)


def defaultFlavor(a):
    """Cochain flavor matching the kind of `a`."""
    try:
        return {
            kindHomAssociative: flavorAssociative,
            kindHomLie: flavorLie
        }[a.kind]

    except KeyError:
        raise error.PyHomDefKindError('no cochain complex for %s algebras' % a.kind, kind=a.kind)


def _resolveFlavor(a, flavor):
    if flavor is None:
        return defaultFlavor(a)

    if flavor not in FLAVORS:
        raise error.PyHomDefKindError('unknown cochain flavor %s' % flavor)

    expected = flavor == flavorLie and kindHomLie or kindHomAssociative
    if a.kind != expected:
        raise error.PyHomDefKindError(
            '%s flavor needs a %s algebra, got %s' % (flavor, expected, a.kind), kind=a.kind)

    return flavor


def cochainCoordinates(n, flavor):
    """Ordered coordinates `(i, j, k)` of 2-cochains on an `n`-dimensional space."""
    if flavor == flavorLie:
        return [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(n)]

    return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]


def cochainFromVector(vector, n, flavor):
    tensor = [Fraction(0)] * n ** 3
    for (i, j, k), c in zip(cochainCoordinates(n, flavor), vector):
        tensor[(i * n + j) * n + k] = c
        if flavor == flavorLie:
            tensor[(j * n + i) * n + k] = -c

    return BilinearMap(n, tensor, alternating=flavor == flavorLie)


def cochainToVector(phi, flavor):
    if flavor == flavorLie and not phi.isAlternating():
        raise error.PyHomDefKindError('lie flavor cochain must be alternating')

    return Vector([phi.coefficient(i, j, k) for i, j, k in cochainCoordinates(phi.dim, flavor)])


def _linearCoordinates(n):
    return [(i, j) for i in range(n) for j in range(n)]


def linearMapFromVector(vector, n):
    return LinearMap(Matrix(n, n, vector))


def _elementary(n, i, j):
    entries = [0] * (n * n)
    entries[i * n + j] = 1
    return LinearMap(Matrix(n, n, entries))


class HomCochain2(object):
    """Pair `(phi, tau)`; the constraint on `tau` is checked, not assumed."""

    def __init__(self, phi, tau, flavor=flavorAssociative):
        if flavor not in FLAVORS:
            raise error.PyHomDefKindError('unknown cochain flavor %s' % flavor)

        if flavor == flavorLie:
            phi = phi.asAlternating()

        self.phi = phi
        self.tau = tau
        self.flavor = flavor

    def tauResidual(self, a):
        if self.flavor == flavorLie:
            return tauConditionLie(a, self.tau)
        return rho2Assoc(a, self.tau)

    def check(self, a):
        """Verdict on membership in Z^2: tau constraint plus cocycle condition."""
        tau = fromResidual('tau-condition', self.tauResidual(a))
        cocycle = fromResidual('cocycle', delta2(a, self.phi, self.flavor))

        return combine('2-hom-cocycle', (tau, cocycle))


class CohomologyInfo(object):
    #: cochain flavor the numbers refer to
    flavor = flavorAssociative

    #: dimension of the 2-cocycle space (phi part)
    dimZ2 = 0

    #: dimension of the 2-coboundary space (phi part)
    dimB2 = 0

    #: dimZ2 - dimB2
    dimH2 = 0

    #: dimension of the space of admissible second components tau
    dimTau = 0

    #: canonical RREF bases as BilinearMap objects
    basisZ2 = ()
    basisB2 = ()

    def __init__(self, **kwargs):
        for k in kwargs:
            setattr(self, k, kwargs[k])

    def __repr__(self):
        return 'CohomologyInfo(flavor=%s, dimZ2=%s, dimB2=%s, dimH2=%s, dimTau=%s)' % (
            self.flavor, self.dimZ2, self.dimB2, self.dimH2, self.dimTau)


def rho1(a, tau):
    """`tau o alpha - alpha o tau`"""
    return tau.compose(a.alpha) - a.alpha.compose(tau)


def rho2Assoc(a, tau):
    """`mu o_tau mu`"""
    return alphaAssociator(a.product, a.product, tau)


def tauConditionLie(g, tau):
    """Cyclic sum of `[tau(x), [y, z]]`."""
    if g.kind != kindHomLie:
        raise error.PyHomDefKindError('tau condition needs a hom-lie algebra', kind=g.kind)

    return twistedJacobiator(g.product, tau, g.product)


def _delta1(mu, f):
    n = mu.dim
    identity = LinearMap.identity(n)
    return mu.postcompose(f) - mu.precompose(f, identity) - mu.precompose(identity, f)


def delta1Hom(a, f):
    """`f(mu(x, y)) - mu(f(x), y) - mu(x, f(y))`"""
    return _delta1(a.product, f)


def delta2Hom(a, phi):
    """`phi o_alpha mu + mu o_alpha phi`"""
    return alphaAssociator(phi, a.product, a.alpha) + alphaAssociator(a.product, phi, a.alpha)


def delta1HL(g, f):
    """`f([x, y]) - [f(x), y] - [x, f(y)]`, alternating."""
    if g.kind != kindHomLie:
        raise error.PyHomDefKindError('delta1 of lie flavor needs a hom-lie algebra', kind=g.kind)

    return _delta1(g.product, f).asAlternating()


def delta2HL(g, phi):
    """Cyclic sum of `phi(alpha(x), [y, z]) + [alpha(x), phi(y, z)]`."""
    if g.kind != kindHomLie:
        raise error.PyHomDefKindError('delta2 of lie flavor needs a hom-lie algebra', kind=g.kind)

    if not phi.isAlternating():
        raise error.PyHomDefKindError('delta2 of lie flavor needs an alternating cochain')

    return (twistedJacobiator(phi, g.alpha, g.product) +
            twistedJacobiator(g.product, g.alpha, phi))


def delta1(a, f, flavor=None):
    flavor = _resolveFlavor(a, flavor)
    if flavor == flavorLie:
        return delta1HL(a, f)
    return delta1Hom(a, f)


def delta2(a, phi, flavor=None):
    flavor = _resolveFlavor(a, flavor)
    if flavor == flavorLie:
        return delta2HL(a, phi)
    return delta2Hom(a, phi)


def delta2Matrix(a, flavor=None):
    """Matrix of `delta2` from cochain coordinates to flattened trilinear tensors.

    Returns:
        Matrix or None: None when the cochain space is zero-dimensional
    """
    flavor = _resolveFlavor(a, flavor)
    n = a.dim

    columns = []
    for idx in range(len(cochainCoordinates(n, flavor))):
        unit = [0] * len(cochainCoordinates(n, flavor))
        unit[idx] = 1
        phi = cochainFromVector(unit, n, flavor)
        columns.append(delta2(a, phi, flavor).toVector())

    if not columns:
        return None

    m = Matrix.fromColumns(columns)

    debug.logger & debug.flagCochain and debug.logger(
        'linearized delta2 (%s flavor) is %sx%s' % (flavor, m.rows, m.cols))

    return m


def commutantBasis(a):
    """Basis of `{f : f o alpha = alpha o f}` in row-major matrix coordinates."""
    n = a.dim
    columns = [rho1(a, _elementary(n, i, j)).matrix.entries for i, j in _linearCoordinates(n)]

    return [linearMapFromVector(v, n) for v in kernelBasis(Matrix.fromColumns(columns))]


def tauSpaceDimension(a, flavor=None):
    """Dimension of the space of admissible second components `tau`."""
    flavor = _resolveFlavor(a, flavor)
    n = a.dim

    columns = []
    for i, j in _linearCoordinates(n):
        tau = _elementary(n, i, j)
        if flavor == flavorLie:
            columns.append(tauConditionLie(a, tau).toVector())
        else:
            columns.append(rho2Assoc(a, tau).toVector())

    return len(kernelBasis(Matrix.fromColumns(columns)))


def _requireValidBase(a):
    report = checkIdentity(a)
    if not report:
        raise error.PyHomDefPreconditionError(
            'base fails its %s identity check' % a.kind, report=report)


def cohomology2(a, flavor=None):
    """Exact dimensions and bases of Z^2, B^2 and H^2.

    The cocycle and coboundary spaces share the same constraint on the
    second component, so the quotient is computed on the bilinear part:
    `dim H^2 = dim ker(delta2) - dim delta1(commutant of alpha)`.

    Args:
        a (HomAlgebra): base passing its identity check

    Keyword Args:
        flavor (str): `associative` or `lie`, defaults to the kind of `a`

    Returns:
        CohomologyInfo: dimensions and canonical RREF bases

    Raises:
        PyHomDefPreconditionError: `a` fails its identity check
    """
    flavor = _resolveFlavor(a, flavor)

    _requireValidBase(a)

    n = a.dim
    dimTau = tauSpaceDimension(a, flavor)

    d2 = delta2Matrix(a, flavor)
    if d2 is None:
        debug.logger & debug.flagCochain and debug.logger(
            'no 2-cochains of %s flavor in dimension %s' % (flavor, n))
        return CohomologyInfo(flavor=flavor, dimTau=dimTau)

    basisZ2 = [cochainFromVector(v, n, flavor) for v in kernelBasis(d2)]

    images = [cochainToVector(delta1(a, f, flavor), flavor) for f in commutantBasis(a)]

    m, dimB2 = rref(Matrix.fromRows(images))

    basisB2 = [cochainFromVector(m.row(r), n, flavor) for r in range(dimB2)]

    info = CohomologyInfo(flavor=flavor, dimZ2=len(basisZ2), dimB2=dimB2,
                          dimH2=len(basisZ2) - dimB2, dimTau=dimTau,
                          basisZ2=basisZ2, basisB2=basisB2)

    debug.logger & debug.flagCochain and debug.logger('computed %r' % (info,))

    return info


def derivations(a, flavor=None):
    """Basis of `{f : delta1 f = 0, f o alpha = alpha o f}`."""
    flavor = _resolveFlavor(a, flavor)
    n = a.dim

    columns = []
    for i, j in _linearCoordinates(n):
        f = _elementary(n, i, j)
        columns.append(delta1(a, f, flavor).tensor + rho1(a, f).matrix.entries)

    basis = [linearMapFromVector(v, n) for v in kernelBasis(Matrix.fromColumns(columns))]

    debug.logger & debug.flagCochain and debug.logger(
        'derivation space (%s flavor) has dimension %s' % (flavor, len(basis)))

    return basis


def isCoboundary(a, phi, flavor=None):
    """Return `f` commuting with the twist such that `delta1 f = phi`, or None."""
    flavor = _resolveFlavor(a, flavor)

    basis = commutantBasis(a)
    columns = [cochainToVector(delta1(a, f, flavor), flavor) for f in basis]

    solution = solveAffine(Matrix.fromColumns(columns), cochainToVector(phi, flavor))

    if solution is None:
        return None

    f = LinearMap.zero(a.dim)
    for c, g in zip(solution[0], basis):
        if c:
            f = f + g * c

    return f
