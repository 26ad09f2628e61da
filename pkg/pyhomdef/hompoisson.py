#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# A first-order deformation of a commutative Hom-associative algebra
# carries a Hom-Poisson bracket `{x, y} = mu_1(x, y) - mu_1(y, x)`.
#
from pyhomdef.exactlin.matrix import Matrix, kernelBasis
from pyhomdef.homcore import (HomPoissonAlgebra, TrilinearMap, kindHomAssociative,
                              alphaAssociator, twistedJacobiator, composeLeft, composeRight,
                              skewCheck, checkHomAssociative)
from pyhomdef.cochain import flavorAssociative, flavorLie, delta2Hom, cochainCoordinates, cochainFromVector
from pyhomdef.deform import verify
from pyhomdef.checkinfo import CheckInfo, statusPass, statusFail, fromResidual, combine
from pyhomdef import error
from pyhomdef import debug


def bracketFromMu1(mu1):
    """`{x, y} = mu_1(x, y) - mu_1(y, x)`"""
    return mu1.antisymmetrized()


def _commutativityCheck(mu):
    witness = mu.symmetryWitness()
    if witness is None:
        return CheckInfo(name='commutativity', status=statusPass)

    i, j = witness
    return CheckInfo(name='commutativity', status=statusFail, triple=(i, j),
                     residual=tuple(mu.product(i, j) - mu.product(j, i)))


def compatibilityResidual(p):
    """`{alpha(x), mu(y, z)} - mu(alpha(y), {x, z}) - mu(alpha(z), {x, y})`"""
    n = p.dim
    images = [p.alpha.column(i) for i in range(n)]

    def rhs(i, j, k):
        return (p.mu.apply(images[j], p.bracket.product(i, k)) +
                p.mu.apply(images[k], p.bracket.product(i, j)))

    return composeLeft(p.bracket, p.alpha, p.mu) - TrilinearMap.fromFunction(n, rhs)


def leibnizFormResidual(p):
    """`{mu(x, y), alpha(z)} - mu({x, z}, alpha(y)) - mu(alpha(x), {y, z})`"""
    n = p.dim
    images = [p.alpha.column(i) for i in range(n)]

    def rhs(i, j, k):
        return (p.mu.apply(p.bracket.product(i, k), images[j]) +
                p.mu.apply(images[i], p.bracket.product(j, k)))

    return composeRight(p.bracket, p.mu, p.alpha) - TrilinearMap.fromFunction(n, rhs)


def checkHomPoisson(p):
    """Verify all Hom-Poisson axioms of `p`.

    Nested checks: `commutativity` and `hom-associativity` of the
    product, `skew-symmetry` and `hom-jacobi` of the bracket, and the
    compatibility condition in both of its equivalent forms.

    Returns:
        CheckInfo: aggregate verdict named `hom-poisson`
    """
    checks = [
        _commutativityCheck(p.mu),
        fromResidual('hom-associativity', alphaAssociator(p.mu, p.mu, p.alpha)),
        skewCheck('skew-symmetry', p.bracket),
        fromResidual('hom-jacobi', twistedJacobiator(p.bracket, p.alpha, p.bracket)),
        fromResidual('compatibility', compatibilityResidual(p)),
        fromResidual('compatibility-leibniz-form', leibnizFormResidual(p))
    ]

    report = combine('hom-poisson', checks)

    debug.logger & debug.flagPoisson and debug.logger(
        'Hom-Poisson check of %r: %s' % (p, report.status))

    return report


def poissonFromDeformation(d):
    """Assemble `(V, mu_0, {,}, alpha_0)` from a verified deformation.

    Raises:
        PyHomDefKindError: `d` is not of the associative flavor
        PyHomDefPreconditionError: non-commutative base, order below 2
            or a failing deformation equation
    """
    if d.flavor != flavorAssociative:
        raise error.PyHomDefKindError('Hom-Poisson bracket needs an associative deformation')

    if not d.products[0].isSymmetric():
        raise error.PyHomDefPreconditionError('deformation base is not commutative')

    if d.order < 2:
        raise error.PyHomDefPreconditionError(
            'deformation must be known through order 2, got order %s' % d.order, order=d.order)

    report = verify(d)
    if not report:
        raise error.PyHomDefPreconditionError(
            'deformation fails at order %s' % report.order, report=report)

    return HomPoissonAlgebra(d.products[0], bracketFromMu1(d.products[1]),
                             d.twists[0], labels=d.labels)


def alternatingCocycles(a):
    """Basis of the alternating 2-cochains in the kernel of `delta2`."""
    n = a.dim
    coordinates = cochainCoordinates(n, flavorLie)
    if not coordinates:
        return []

    columns = []
    for idx in range(len(coordinates)):
        unit = [0] * len(coordinates)
        unit[idx] = 1
        columns.append(delta2Hom(a, cochainFromVector(unit, n, flavorLie)).toVector())

    return [cochainFromVector(v, n, flavorLie) for v in kernelBasis(Matrix.fromColumns(columns))]


def cocycleLeibnizResidual(a, phi):
    """`phi(alpha(x), mu(y, z)) - mu(alpha(y), phi(x, z)) - mu(alpha(z), phi(x, y))`"""
    n = a.dim
    images = [a.alpha.column(i) for i in range(n)]

    def rhs(i, j, k):
        return (a.product.apply(images[j], phi.product(i, k)) +
                a.product.apply(images[k], phi.product(i, j)))

    return composeLeft(phi, a.alpha, a.product) - TrilinearMap.fromFunction(n, rhs)


def cocycleLeibnizProperty(a, phi):
    """Skew 2-cocycles of a commutative base act as twisted derivations.

    Raises:
        PyHomDefPreconditionError: `a` is not a commutative Hom-associative
            algebra, `phi` is not alternating or not a cocycle
    """
    if a.kind != kindHomAssociative or not checkHomAssociative(a):
        raise error.PyHomDefPreconditionError('base is not Hom-associative')

    if not a.product.isSymmetric():
        raise error.PyHomDefPreconditionError('base is not commutative')

    if not phi.isAlternating():
        raise error.PyHomDefPreconditionError('cochain is not alternating')

    if delta2Hom(a, phi):
        raise error.PyHomDefPreconditionError('cochain is not a 2-cocycle')

    return fromResidual('cocycle-leibniz', cocycleLeibnizResidual(a, phi))


def cyclicDelta2Residual(a, mu2):
    """Cyclic `delta2(mu_2)` minus cyclic `mu_2 o_alpha mu_0`, zero for commutative `mu_0`."""
    return delta2Hom(a, mu2).cyclic() - alphaAssociator(mu2, a.product, a.alpha).cyclic()


def reversedCyclic(tensor):
    """`T(x, z, y) + T(z, y, x) + T(y, x, z)`"""
    return tensor.permuted((0, 2, 1)).cyclic()


def cyclicDifferenceResidual(a, mu2):
    """Cyclic `delta2(mu_2)` over `(x, y, z)` minus the one over `(x, z, y)`."""
    t = delta2Hom(a, mu2)
    return t.cyclic() - reversedCyclic(t)


def cyclicSelfAssociator(mu, alpha):
    """Cyclic sum of `mu o_alpha mu`, zero for commutative `mu` and any `alpha`."""
    return alphaAssociator(mu, mu, alpha).cyclic()
