#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Formal deformations truncated at an explicit order N: `mu_t = sum mu_i t^i`
# and `alpha_t = sum alpha_i t^i` are exact through `t^N`.
#
from pyhomdef.exactlin.matrix import solveAffine
from pyhomdef.homcore import (LinearMap, BilinearMap, HomAlgebra, TrilinearMap,
                              kindHomAssociative, kindHomLie,
                              alphaAssociator, twistedJacobiator, skewCheck)
from pyhomdef.cochain import (flavorAssociative, flavorLie, FLAVORS,
                              rho2Assoc, tauConditionLie, delta2, delta2Matrix,
                              cochainFromVector)
from pyhomdef.checkinfo import CheckInfo, statusError, fromResidual, combine
from pyhomdef import error
from pyhomdef import debug


class DeformationSeries(object):
    """Truncated formal deformation.

    Args:
        flavor (str): `associative` or `lie`
        products (list): `BilinearMap` per order, index `i` holds `mu_i`
        twists (list): `LinearMap` per order, index `i` holds `alpha_i`

    Keyword Args:
        labels (list): basis labels
    """

    def __init__(self, flavor, products, twists, labels=None):
        if flavor not in FLAVORS:
            raise error.PyHomDefKindError('unknown deformation flavor %s' % flavor)

        products = list(products)
        twists = list(twists)

        if not products or len(products) != len(twists):
            raise error.PyHomDefOrderError(
                '%s products and %s twists do not make a truncated deformation' % (
                    len(products), len(twists)))

        dims = set(x.dim for x in products + twists)
        if len(dims) != 1:
            raise error.PyHomDefDimensionError(
                'deformation terms of mixed dimensions %s' % sorted(dims))

        if flavor == flavorLie:
            products = [p.asAlternating() if p.isAlternating() else p for p in products]

        n = dims.pop()

        if labels is None:
            labels = ['e%d' % (i + 1) for i in range(n)]

        self.flavor = flavor
        self.products = tuple(products)
        self.twists = tuple(twists)
        self.labels = [str(x) for x in labels]

    @property
    def order(self):
        return len(self.products) - 1

    @property
    def dim(self):
        return self.products[0].dim

    @property
    def kind(self):
        return self.flavor == flavorLie and kindHomLie or kindHomAssociative

    def base(self):
        """The undeformed structure `(mu_0, alpha_0)`."""
        return HomAlgebra(self.kind, self.products[0], self.twists[0], labels=self.labels)

    def product(self, i):
        """`mu_i`, zero beyond the truncation order."""
        if i <= self.order:
            return self.products[i]
        return BilinearMap.zero(self.dim, alternating=self.flavor == flavorLie)

    def twist(self, i):
        if i <= self.order:
            return self.twists[i]
        return LinearMap.zero(self.dim)

    def truncated(self, order):
        if not 0 <= order <= self.order:
            raise error.PyHomDefOrderError(
                'cannot truncate order %s deformation at %s' % (self.order, order))

        return DeformationSeries(self.flavor, self.products[:order + 1],
                                 self.twists[:order + 1], labels=self.labels)

    def extended(self, product, twist):
        """Append one more order."""
        return DeformationSeries(self.flavor, self.products + (product,),
                                 self.twists + (twist,), labels=self.labels)

    def replaced(self, i, product=None, twist=None):
        products = list(self.products)
        twists = list(self.twists)
        if product is not None:
            products[i] = product
        if twist is not None:
            twists[i] = twist

        return DeformationSeries(self.flavor, products, twists, labels=self.labels)

    def __eq__(self, other):
        if isinstance(other, DeformationSeries):
            return (self.flavor, self.products, self.twists) == (
                other.flavor, other.products, other.twists)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.flavor, self.products, self.twists))

    def __repr__(self):
        return 'DeformationSeries(%s, dim=%s, order=%s)' % (self.flavor, self.dim, self.order)


class FormalIso(object):
    """`Phi_t = Id + Phi_1 t + Phi_2 t^2 + ...` truncated at order N."""

    def __init__(self, maps):
        maps = list(maps)

        if not maps or not maps[0].isIdentity():
            raise error.PyHomDefPreconditionError(
                'formal isomorphism must start with the identity map')

        dims = set(x.dim for x in maps)
        if len(dims) != 1:
            raise error.PyHomDefDimensionError(
                'formal isomorphism terms of mixed dimensions %s' % sorted(dims))

        self.maps = tuple(maps)

    @classmethod
    def identity(cls, n, order):
        return cls([LinearMap.identity(n)] + [LinearMap.zero(n)] * order)

    @property
    def order(self):
        return len(self.maps) - 1

    @property
    def dim(self):
        return self.maps[0].dim

    def inverse(self):
        """Series inverse, `Psi_k = -sum_{i=1..k} Phi_i Psi_{k-i}`."""
        inverse = [LinearMap.identity(self.dim)]
        for k in range(1, self.order + 1):
            term = LinearMap.zero(self.dim)
            for i in range(1, k + 1):
                term = term - self.maps[i].compose(inverse[k - i])
            inverse.append(term)

        return FormalIso(inverse)


def _requireFlavor(d, flavor):
    if d.flavor != flavor:
        raise error.PyHomDefKindError(
            'expected %s deformation, got %s' % (flavor, d.flavor))


def _requireOrder(d, s):
    if not 0 <= s <= d.order:
        raise error.PyHomDefOrderError(
            'order %s outside of 0..%s' % (s, d.order), order=s)


def residualAssoc(d, s):
    """Degree `s` term of the formal Hom-associativity condition.

    `sum_{k=0..s} sum_{i=0..s-k} mu_i o_{alpha_k} mu_{s-k-i}`
    """
    _requireFlavor(d, flavorAssociative)
    _requireOrder(d, s)

    total = TrilinearMap.zero(d.dim)
    for k in range(s + 1):
        for i in range(s - k + 1):
            total = total + alphaAssociator(d.products[i], d.products[s - k - i], d.twists[k])

    return total


def residualLie(d, s):
    """Degree `s` term of the formal Hom-Jacobi condition.

    `sum_{i+j+k=s} cyclic [alpha_j(x), [y, z]_k]_i`
    """
    _requireFlavor(d, flavorLie)
    _requireOrder(d, s)

    total = TrilinearMap.zero(d.dim)
    for i in range(s + 1):
        for j in range(s - i + 1):
            total = total + twistedJacobiator(d.products[i], d.twists[j], d.products[s - i - j])

    return total


def residual(d, s):
    if d.flavor == flavorLie:
        return residualLie(d, s)
    return residualAssoc(d, s)


def verify(d):
    """Check the deformation equation at every order `0..N`.

    Returns:
        CheckInfo: named `deformation`, one nested check per order
            (`order-00`, `order-01`, ...) plus per-order skew-symmetry
            checks for the lie flavor
    """
    checks = []

    for s in range(d.order + 1):
        if d.flavor == flavorLie:
            skew = skewCheck('skew-%02d' % s, d.products[s])
            skew.order = s
            checks.append(skew)

        checks.append(fromResidual('order-%02d' % s, residual(d, s), order=s))

        debug.logger & debug.flagDeform and debug.logger(
            '%s deformation residual at order %s: %s' % (d.flavor, s, checks[-1].status))

    return combine('deformation', checks)


def skewPerOrder(d):
    """True iff every bracket of a lie deformation is alternating."""
    return all(p.isAlternating() for p in d.products)


def applyEquivalence(d, phi):
    """Transport `d` along a formal isomorphism.

    `mu'_t = Phi_t o mu_t o (Phi_t^-1 x Phi_t^-1)` and
    `alpha'_t = Phi_t o alpha_t o Phi_t^-1`, truncated at N.
    """
    if d.order != phi.order:
        raise error.PyHomDefOrderError(
            'deformation of order %s vs isomorphism of order %s' % (d.order, phi.order))

    if d.dim != phi.dim:
        raise error.PyHomDefDimensionError(
            'deformation of dimension %s vs isomorphism of dimension %s' % (d.dim, phi.dim))

    N = d.order
    n = d.dim
    forward = phi.maps
    backward = phi.inverse().maps

    inner = []
    for s in range(N + 1):
        term = BilinearMap.zero(n)
        for b in range(s + 1):
            for c in range(s - b + 1):
                term = term + d.products[b].precompose(backward[c], backward[s - b - c])
        inner.append(term)

    products = []
    twists = []
    for s in range(N + 1):
        product = BilinearMap.zero(n)
        twist = LinearMap.zero(n)
        for a in range(s + 1):
            product = product + inner[s - a].postcompose(forward[a])
            for b in range(s - a + 1):
                twist = twist + forward[a].compose(d.twists[b]).compose(backward[s - a - b])
        products.append(product)
        twists.append(twist)

    debug.logger & debug.flagDeform and debug.logger(
        'transported %r along formal isomorphism' % (d,))

    return DeformationSeries(d.flavor, products, twists, labels=d.labels)


def hypothesisCheck(d):
    """Vanishing of the twist-only terms assumed at first order.

    Associative flavor: `mu_0 o_{alpha_i} mu_0 = 0` for every `i >= 1`.
    Lie flavor: cyclic `[alpha_1(x), [y, z]_0]_0 = 0`.
    """
    base = d.base()
    checks = []

    if d.flavor == flavorLie:
        if d.order >= 1:
            checks.append(fromResidual('tau-alpha-01', tauConditionLie(base, d.twists[1]), order=1))
    else:
        for i in range(1, d.order + 1):
            checks.append(fromResidual('rho2-alpha-%02d' % i, rho2Assoc(base, d.twists[i]), order=i))

    return combine('hypothesis', checks)


def firstOrderCocycleCheck(d):
    """Is `(mu_1, alpha_1)` a 2-Hom-cocycle of the base?

    Hypothesis violations are reported in their own nested check,
    separately from the cocycle verdict on `delta2 mu_1`; the degree one
    deformation equation is reported alongside.
    """
    if d.order < 1:
        return CheckInfo(name='first-order-cocycle', status=statusError,
                         message='deformation has no first-order term')

    base = d.base()

    hypothesis = hypothesisCheck(d)
    cocycle = fromResidual('cocycle', delta2(base, d.products[1], d.flavor), order=1)
    equation = fromResidual('equation', residual(d, 1), order=1)

    report = combine('first-order-cocycle', (cocycle, equation, hypothesis))

    debug.logger & debug.flagDeform and debug.logger(
        'first order cocycle check: hypothesis %s, cocycle %s, equation %s' % (
            hypothesis.status, cocycle.status, equation.status))

    return report


def _obstructionAssoc(d, s):
    total = TrilinearMap.zero(d.dim)

    for k in range(1, s):
        for p in range(k + 1):
            total = total + alphaAssociator(d.product(s - k), d.product(k - p), d.twist(p))

    for k in range(1, s + 1):
        total = total + alphaAssociator(d.products[0], d.product(s - k), d.twist(k))

    return -total


def obstructionAssoc(d, s):
    """Right-hand side `R_s` with `residual(d, s) = delta2(mu_s) - R_s`.

    `R_s = -sum_{k=1..s-1} sum_{p=0..k} mu_{s-k} o_{alpha_p} mu_{k-p}
           -sum_{k=1..s} mu_0 o_{alpha_k} mu_{s-k}`

    Only orders below `s` of the product and orders up to `s` of the
    twist enter.
    """
    _requireFlavor(d, flavorAssociative)

    if s < 2:
        raise error.PyHomDefOrderError('obstruction is defined for orders 2 and up', order=s)

    _requireOrder(d, s)

    return _obstructionAssoc(d, s)


def obstructionLie(d, s):
    """Hom-Lie counterpart of `obstructionAssoc`, defined from order 1."""
    _requireFlavor(d, flavorLie)

    if s < 1:
        raise error.PyHomDefOrderError('obstruction is defined for orders 1 and up', order=s)

    _requireOrder(d, s)

    total = TrilinearMap.zero(d.dim)
    for i in range(s + 1):
        for j in range(s - i + 1):
            k = s - i - j
            if j == 0 and (i == s or k == s):
                continue
            total = total + twistedJacobiator(d.products[i], d.twists[j], d.products[k])

    return -total


def classicalJacobiator(d, s):
    """Order `s` part of the untwisted Jacobiator of `[.,.]_t`."""
    _requireFlavor(d, flavorLie)
    _requireOrder(d, s)

    identity = LinearMap.identity(d.dim)

    total = TrilinearMap.zero(d.dim)
    for i in range(s + 1):
        total = total + twistedJacobiator(d.products[i], identity, d.products[s - i])

    return total


def extendDeformation(d, alphaNext=None, requireHypothesis=False):
    """Search for `mu_s`, `s = N + 1`, extending `d` by one order.

    Solves `delta2(mu_s) = R_s` exactly.

    Args:
        d (DeformationSeries): deformation verified through its order

    Keyword Args:
        alphaNext (LinearMap): twist `alpha_s`, zero by default
        requireHypothesis (bool): refuse to proceed when the twist-only
            terms do not vanish

    Returns:
        BilinearMap or None: a particular solution, None when the order `s`
        equation has no solution

    Raises:
        PyHomDefPreconditionError: `d` does not verify, or the hypothesis
            is required and violated
    """
    report = verify(d)
    if not report:
        raise error.PyHomDefPreconditionError(
            'deformation fails at order %s' % report.order, report=report)

    s = d.order + 1
    n = d.dim

    if alphaNext is None:
        alphaNext = LinearMap.zero(n)

    extended = d.extended(BilinearMap.zero(n, alternating=d.flavor == flavorLie), alphaNext)

    if requireHypothesis:
        hypothesis = hypothesisCheck(extended)
        if not hypothesis:
            raise error.PyHomDefPreconditionError(
                'hypothesis violated at order %s' % hypothesis.order, report=hypothesis)

    if d.flavor == flavorLie:
        target = obstructionLie(extended, s)
    else:
        target = _obstructionAssoc(extended, s)

    operator = delta2Matrix(d.base(), d.flavor)

    if operator is None:
        debug.logger & debug.flagDeform and debug.logger(
            'no cochains to extend with, obstruction %s' % (target and 'nonzero' or 'zero'))
        if target:
            return None

        return BilinearMap.zero(n, alternating=d.flavor == flavorLie)

    solution = solveAffine(operator, target.toVector())

    debug.logger & debug.flagDeform and debug.logger(
        'extension to order %s %s' % (s, solution is None and 'obstructed' or 'found'))

    if solution is None:
        return None

    return cochainFromVector(solution[0], n, d.flavor)
