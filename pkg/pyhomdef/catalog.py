#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Built-in parameterized instances: sl2 in two bases, the Jackson
# deformation, the sl2 twist family, the infinitesimal and non-Lie sl2
# deformations, small commutative algebras and the graded families.
#
import random
from collections import OrderedDict
from fractions import Fraction
from pyhomdef.exactlin.rational import toRational
from pyhomdef.exactlin.matrix import Matrix, kernelBasis
from pyhomdef.homcore import (LinearMap, BilinearMap, HomAlgebra, kindHomAssociative,
                              kindHomLie, twistedJacobiator)
from pyhomdef.cochain import flavorAssociative, flavorLie, tauConditionLie, cohomology2
from pyhomdef.deform import DeformationSeries, verify, classicalJacobiator, extendDeformation
from pyhomdef.graded import GradedFamily, familyQWitt, familyVirasoro, familyWittDeformation
from pyhomdef import error
from pyhomdef import debug

entryAlgebra = 'algebra'
entryDeformation = 'deformation'
entryGraded = 'graded'


class CatalogEntry(object):
    """Named builder with rational parameters defaulting to 1."""

    def __init__(self, name, builder, entryType, params=(), description='',
                 defaultOrder=None, fixedOrder=None):
        self.name = name
        self.builder = builder
        self.entryType = entryType
        self.params = tuple(params)
        self.description = description
        self.defaultOrder = defaultOrder
        self.fixedOrder = fixedOrder

    def __repr__(self):
        return 'CatalogEntry(%s, %s, params=%s)' % (self.name, self.entryType, ','.join(self.params))

    @property
    def takesOrder(self):
        return self.defaultOrder is not None

    def resolveParams(self, params=None):
        resolved = OrderedDict((p, Fraction(1)) for p in self.params)

        for name, value in (params or {}).items():
            if name not in resolved:
                raise error.PyHomDefCatalogError(
                    'unknown parameter %s for catalog entry %s' % (name, self.name), entry=self.name)
            resolved[name] = toRational(value)

        return resolved

    def build(self, params=None, order=None):
        params = self.resolveParams(params)

        if self.fixedOrder is not None:
            if order is not None and order != self.fixedOrder:
                raise error.PyHomDefCatalogError(
                    '%s is only defined at order %s' % (self.name, self.fixedOrder), entry=self.name)
            order = self.fixedOrder

        elif self.defaultOrder is not None:
            if order is None:
                order = self.defaultOrder
            if order < 0:
                raise error.PyHomDefCatalogError('negative order %s' % order, entry=self.name)

        elif order is not None:
            raise error.PyHomDefCatalogError(
                '%s does not take an order' % self.name, entry=self.name)

        debug.logger & debug.flagCatalog and debug.logger(
            'building %s with %s%s' % (self.name, dict(params), order is not None and ', order %s' % order or ''))

        if self.takesOrder:
            return self.builder(params, order)

        return self.builder(params)


_registry = OrderedDict()


def register(entry):
    _registry[entry.name] = entry
    return entry


def listEntries():
    return list(_registry.values())


def getEntry(name):
    try:
        return _registry[name]

    except KeyError:
        raise error.PyHomDefCatalogError('unknown catalog entry %s' % name, entry=name)


def get(name, params=None, order=None):
    """Build a catalog instance.

    Args:
        name (str): entry name, see `listEntries()`

    Keyword Args:
        params (dict): parameter overrides, unspecified parameters are 1
        order (int): truncation order for deformation entries

    Returns:
        HomAlgebra, DeformationSeries or GradedFamily

    Raises:
        PyHomDefCatalogError: unknown name, unknown parameter or bad order
    """
    return getEntry(name).build(params, order)


def _zero(n):
    return LinearMap.zero(n)


#
# sl2
#

SL2_EFH_LABELS = ['e', 'f', 'h']
SL2_X_LABELS = ['x1', 'x2', 'x3']


def sl2EfhBracket():
    # e, f, h = 0, 1, 2
    return BilinearMap.fromProducts(3, {
        (2, 1): {1: -2},
        (2, 0): {0: 2},
        (0, 1): {2: 1}
    }, alternating=True)


def sl2XBracket():
    return BilinearMap.fromProducts(3, {
        (0, 1): {1: 2},
        (0, 2): {2: -2},
        (1, 2): {0: 1}
    }, alternating=True)


def _buildSl2Efh(params):
    return HomAlgebra(kindHomLie, sl2EfhBracket(), LinearMap.identity(3), labels=SL2_EFH_LABELS)


def _buildSl2X(params):
    return HomAlgebra(kindHomLie, sl2XBracket(), LinearMap.identity(3), labels=SL2_X_LABELS)


def sl2TwistMatrix(a, b, c, d, e, f):
    return LinearMap.fromRows([
        [a, d, c],
        [2 * c, b, f],
        [2 * d, e, b]
    ])


def _buildSl2Twist(params):
    return HomAlgebra(kindHomLie, sl2XBracket(), sl2TwistMatrix(*params.values()),
                      labels=SL2_X_LABELS)


def _buildJackson(params, order):
    half = Fraction(1, 2)

    products = [sl2EfhBracket()]
    twists = [LinearMap.identity(3)]

    if order >= 1:
        products.append(BilinearMap.fromProducts(3, {
            (2, 1): {1: -2},
            (0, 1): {2: half}
        }, alternating=True))
        twists.append(LinearMap.fromImages([[-half, 0, 0], [0, half, 0], [0, 0, 0]]))

    for k in range(2, order + 1):
        products.append(BilinearMap.zero(3, alternating=True))
        twists.append(LinearMap.fromImages([[Fraction((-1) ** k, 2), 0, 0], [0, 0, 0], [0, 0, 0]]))

    return DeformationSeries(flavorLie, products, twists, labels=SL2_EFH_LABELS)


def _infinitesimal(bracket, twist):
    return DeformationSeries(flavorLie, [sl2XBracket(), bracket],
                             [LinearMap.identity(3), twist], labels=SL2_X_LABELS)


def _buildInf1(params):
    a1, a2, a3, b1, b2, b3 = params.values()
    return _infinitesimal(
        BilinearMap.fromProducts(3, {
            (0, 1): {1: -a1, 2: 1},
            (0, 2): {1: a2, 2: a1},
            (1, 2): {0: a3}
        }, alternating=True),
        LinearMap.fromRows([
            [b1, 0, 0],
            [0, b2, -b3 * a2],
            [0, b3, b2]
        ]))


def _buildInf2(params):
    a1, a2, b1, b2, b3, b4 = params.values()
    return _infinitesimal(
        BilinearMap.fromProducts(3, {
            (0, 1): {1: -2 * a1},
            (0, 2): {1: a2, 2: 2 * a1},
            (1, 2): {0: -a1}
        }, alternating=True),
        LinearMap.fromRows([
            [b1, 0, b3],
            [2 * b3, b2, b4],
            [0, 0, b2]
        ]))


def _buildInf3(params):
    a1, a2, a3, a4, a5, b = params.values()
    if not a3:
        raise error.PyHomDefCatalogError('sl2-inf-3 needs a3 != 0', entry='sl2-inf-3')

    return _infinitesimal(
        BilinearMap.fromProducts(3, {
            (0, 1): {1: -a1, 2: a2},
            (0, 2): {0: a3, 1: a4, 2: a1},
            (1, 2): {0: a5, 1: -a3}
        }, alternating=True),
        LinearMap.scalar(3, b))


def nonLieFirstOrder(a1, a2, a3, a4, b1, b2):
    """`([.,.]_1, alpha_1)` of the non-Lie family."""
    bracket = BilinearMap.fromProducts(3, {
        (0, 1): {0: a1, 1: -a2},
        (0, 2): {0: a3, 1: a4, 2: a2},
        (1, 2): {0: -a2 / 2}
    }, alternating=True)

    # entry (3, 3) carries t like entry (2, 2)
    twist = LinearMap.fromRows([
        [b1, a1 / 2, (b2 - a3) / 2],
        [b2, -a2 / 2, -a4 / 2],
        [0, 0, -a2 / 2]
    ])

    return bracket, twist


def _buildNonLie(params, order):
    bracket, twist = nonLieFirstOrder(*params.values())

    products = [sl2XBracket()]
    twists = [LinearMap.identity(3)]

    if order >= 1:
        products.append(bracket)
        twists.append(twist)

    for k in range(2, order + 1):
        products.append(BilinearMap.zero(3, alternating=True))
        twists.append(_zero(3))

    return DeformationSeries(flavorLie, products, twists, labels=SL2_X_LABELS)


#
# small commutative algebras
#

def _buildDualNumbers(params):
    product = BilinearMap.fromProducts(2, {
        (0, 0): {0: 1},
        (0, 1): {1: 1},
        (1, 0): {1: 1}
    })
    return HomAlgebra(kindHomAssociative, product, LinearMap.identity(2), labels=['1', 'eps'])


def _buildAbelian2(params):
    return HomAlgebra(kindHomLie, BilinearMap.zero(2, alternating=True),
                      LinearMap.identity(2), labels=['e1', 'e2'])


def _extendTo(d, order):
    while d.order < order:
        mu = extendDeformation(d)
        if mu is None:
            raise error.PyHomDefCatalogError(
                'deformation does not extend to order %s' % (d.order + 1))
        d = d.extended(mu, _zero(d.dim))

    return d


def _buildNilpotentComm(params, order):
    (a,) = params.values()

    mu0 = BilinearMap.fromProducts(3, {(0, 0): {2: 1}})
    mu1 = BilinearMap.fromProducts(3, {(0, 1): {2: a}})
    alpha0 = LinearMap.fromRows([[1, 0, 0], [0, 2, 0], [0, 0, 3]])

    d = DeformationSeries(flavorAssociative, [mu0], [alpha0])
    if order >= 1:
        d = d.extended(mu1, _zero(3))

    return _extendTo(d, order)


#
# graded families
#

def _buildQWitt(params):
    return GradedFamily(familyQWitt, q=params['q'])


def _buildVirasoro(params):
    return GradedFamily(familyVirasoro, q=params['q'])


def _buildWittDeformation(params, order):
    return GradedFamily(familyWittDeformation, order=order)


register(CatalogEntry(
    'sl2-efh', _buildSl2Efh, entryAlgebra,
    description='sl2 on (e, f, h), identity twist'))

register(CatalogEntry(
    'sl2-x', _buildSl2X, entryAlgebra,
    description='sl2 on (x1, x2, x3), identity twist'))

register(CatalogEntry(
    'jackson-sl2', _buildJackson, entryDeformation, defaultOrder=2,
    description='Jackson sl2 as a Hom-Lie deformation of sl2'))

register(CatalogEntry(
    'sl2-twist', _buildSl2Twist, entryAlgebra, params=('a', 'b', 'c', 'd', 'e', 'f'),
    description='sl2 brackets with a twist from the six-parameter family'))

register(CatalogEntry(
    'sl2-inf-1', _buildInf1, entryDeformation, fixedOrder=1,
    params=('a1', 'a2', 'a3', 'b1', 'b2', 'b3'),
    description='infinitesimal Hom-Lie deformation of sl2, family 1'))

register(CatalogEntry(
    'sl2-inf-2', _buildInf2, entryDeformation, fixedOrder=1,
    params=('a1', 'a2', 'b1', 'b2', 'b3', 'b4'),
    description='infinitesimal Hom-Lie deformation of sl2, family 2'))

register(CatalogEntry(
    'sl2-inf-3', _buildInf3, entryDeformation, fixedOrder=1,
    params=('a1', 'a2', 'a3', 'a4', 'a5', 'b'),
    description='infinitesimal Hom-Lie deformation of sl2, family 3 (a3 != 0)'))

register(CatalogEntry(
    'sl2-nonlie', _buildNonLie, entryDeformation, defaultOrder=2,
    params=('a1', 'a2', 'a3', 'a4', 'b1', 'b2'),
    description='Hom-Lie deformation of sl2 that is Lie iff a1 = a3 = 0'))

register(CatalogEntry(
    'dual-numbers', _buildDualNumbers, entryAlgebra,
    description='K[eps]/(eps^2), identity twist'))

register(CatalogEntry(
    'abelian-2', _buildAbelian2, entryAlgebra,
    description='2-dimensional abelian Lie algebra'))

register(CatalogEntry(
    'nilpotent-comm', _buildNilpotentComm, entryDeformation, defaultOrder=2, params=('a',),
    description='commutative nilpotent base with a non-symmetric first-order term'))

register(CatalogEntry(
    'qwitt', _buildQWitt, entryGraded, params=('q',),
    description='q-deformed Witt algebra'))

register(CatalogEntry(
    'virq', _buildVirasoro, entryGraded, params=('q',),
    description='q-deformed Virasoro algebra'))

register(CatalogEntry(
    'witt-deformation', _buildWittDeformation, entryGraded, defaultOrder=2,
    description='Witt algebra deformed through q = 1 + t'))


#
# sl2 twist family
#

# m[i][j] = c * m[k][l], 0-based
SL2_TWIST_RELATIONS = (
    ((1, 0), 2, (0, 2)),
    ((2, 0), 2, (0, 1)),
    ((1, 1), 1, (2, 2))
)


def solveSl2Twists():
    """All twists making the sl2 brackets on `(x1, x2, x3)` Hom-Lie.

    Hom-Jacobi is linear in the twist for fixed brackets, so the nine
    matrix entries are solved for as a homogeneous linear system.

    Returns:
        tuple: `(dimension, basis, relations)` with the basis as a list of
        `LinearMap` and the relations `((i, j), c, (k, l))` meaning
        `m[i][j] = c * m[k][l]` that hold on every basis element
    """
    bracket = sl2XBracket()

    columns = []
    for idx in range(9):
        entries = [0] * 9
        entries[idx] = 1
        columns.append(twistedJacobiator(bracket, LinearMap(Matrix(3, 3, entries)),
                                         bracket).toVector())

    basis = [LinearMap(Matrix(3, 3, v)) for v in kernelBasis(Matrix.fromColumns(columns))]

    relations = [r for r in SL2_TWIST_RELATIONS
                 if all(m[r[0]] == r[1] * m[r[2]] for m in basis)]

    debug.logger & debug.flagCatalog and debug.logger(
        'sl2 twist family has dimension %s, %s relations hold' % (len(basis), len(relations)))

    return len(basis), basis, relations


#
# conjecture probe
#

class ProbeInfo(object):
    """Census of a probe run."""

    #: sampled family
    family = ''

    #: requested sample count and seed
    samples = 0
    seed = 0

    #: deformations drawn
    draws = 0

    #: draws where `(V, [.,.]_0, alpha_1)` is Hom-Lie
    sideCondition = 0

    #: draws satisfying the Hom-Lie deformation equations
    homLie = 0

    #: draws whose bracket satisfies the classical Jacobi identity mod t^2
    classicalJacobi = 0

    #: parameter dicts of draws with side condition and Hom-Lie but no Jacobi
    counterexamples = ()

    def __init__(self, **kwargs):
        for k in kwargs:
            setattr(self, k, kwargs[k])

    def __repr__(self):
        return '%s(family=%r, draws=%s, sideCondition=%s, homLie=%s, classicalJacobi=%s, counterexamples=%s)' % (
            self.__class__.__name__, self.family, self.draws, self.sideCondition,
            self.homLie, self.classicalJacobi, len(self.counterexamples))


PROBE_FAMILIES = ('random', 'inf-1', 'inf-2', 'inf-3', 'nonlie')


def _randomRational(rng):
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def _randomParams(rng, names, nonZero=()):
    params = OrderedDict()
    for name in names:
        value = _randomRational(rng)
        while name in nonZero and not value:
            value = _randomRational(rng)
        params[name] = value
    return params


def _drawRandom(rng, twistBasis, cocycles):
    twist = _zero(3)
    for m in twistBasis:
        twist = twist + m * _randomRational(rng)

    d = DeformationSeries(flavorLie, [sl2XBracket()], [LinearMap.identity(3)],
                          labels=SL2_X_LABELS)

    bracket = extendDeformation(d, alphaNext=twist)
    for phi in cocycles:
        bracket = bracket + phi * _randomRational(rng)

    params = OrderedDict(('alpha1[%d][%d]' % (i, j), twist.matrix[i, j])
                         for i in range(3) for j in range(3))

    return params, d.extended(bracket, twist)


def _drawFamily(rng, family):
    entry = getEntry(family == 'nonlie' and 'sl2-nonlie' or 'sl2-%s' % family)
    params = _randomParams(rng, entry.params, nonZero=family == 'inf-3' and ('a3',) or ())

    if family == 'nonlie':
        return params, entry.build(params, order=1)

    return params, entry.build(params)


def probeConjecture(samples, seed, family='random'):
    """Sample infinitesimal Hom-Lie deformations of sl2, test classical Jacobi.

    Evidence gathering only. A draw counts as a counterexample when
    `(V, [.,.]_0, alpha_1)` is Hom-Lie and the deformation equations hold
    while `[.,.]_0 + t [.,.]_1` violates the classical Jacobi identity
    modulo `t^2`.

    Args:
        samples (int): number of draws
        seed (int): seed of the deterministic generator

    Keyword Args:
        family (str): `random` draws the twist from the sl2 twist family and
            the bracket from the solutions of the first-order equation;
            `inf-1`, `inf-2`, `inf-3` and `nonlie` draw catalog parameters

    Returns:
        ProbeInfo: census of the run
    """
    if family not in PROBE_FAMILIES:
        raise error.PyHomDefCatalogError('unknown probe family %s' % family)

    rng = random.Random(seed)

    twistBasis = cocycles = ()
    if family == 'random' and samples:
        twistBasis = solveSl2Twists()[1]
        cocycles = cohomology2(_buildSl2X({})).basisZ2

    sideCondition = homLie = classical = 0
    counterexamples = []

    for _ in range(samples):
        if family == 'random':
            params, d = _drawRandom(rng, twistBasis, cocycles)
        else:
            params, d = _drawFamily(rng, family)

        side = not tauConditionLie(d.base(), d.twists[1])
        hom = bool(verify(d))
        jacobi = not any(classicalJacobiator(d, s) for s in range(2))

        sideCondition += side
        homLie += hom
        classical += jacobi

        if side and hom and not jacobi:
            counterexamples.append(params)

    info = ProbeInfo(family=family, samples=samples, seed=seed, draws=samples,
                     sideCondition=sideCondition, homLie=homLie, classicalJacobi=classical,
                     counterexamples=tuple(counterexamples))

    debug.logger & debug.flagCatalog and debug.logger('probe finished: %r' % (info,))

    return info
