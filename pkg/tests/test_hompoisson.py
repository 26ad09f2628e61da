#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
import sys
import random
from fractions import Fraction

try:
    import unittest2 as unittest

except ImportError:
    import unittest

from pyhomdef.exactlin.matrix import Vector, Matrix
from pyhomdef.homcore import LinearMap, BilinearMap, HomAlgebra, HomPoissonAlgebra, kindHomAssociative
from pyhomdef.cochain import flavorAssociative, delta1
from pyhomdef.deform import DeformationSeries, extendDeformation, verify
from pyhomdef.hompoisson import (bracketFromMu1, checkHomPoisson, poissonFromDeformation,
                                 alternatingCocycles, cocycleLeibnizProperty,
                                 cyclicDelta2Residual, cyclicDifferenceResidual,
                                 cyclicSelfAssociator)
from pyhomdef.catalog import get
from pyhomdef.checkinfo import statusFail
from pyhomdef import error


def randomRational(rng):
    return Fraction(rng.randint(-3, 3), rng.randint(1, 2))


def randomMap(rng, n):
    return LinearMap(Matrix(n, n, [randomRational(rng) for _ in range(n * n)]))


def randomBilinear(rng, n):
    return BilinearMap(n, [randomRational(rng) for _ in range(n ** 3)])


def randomCommutative(rng, n):
    products = {}
    for i in range(n):
        for j in range(i, n):
            out = dict((k, randomRational(rng)) for k in range(n))
            products[(i, j)] = out
            products[(j, i)] = out

    return BilinearMap.fromProducts(n, products)


def nilpotentBase(alpha):
    # e1 * e1 = e3, every other product vanishes
    return HomAlgebra(kindHomAssociative, BilinearMap.fromProducts(3, {(0, 0): {2: 1}}), alpha)


class BracketFromMu1TestCase(unittest.TestCase):

    def testSymmetric(self):
        mu1 = BilinearMap.fromProducts(2, {(0, 1): {0: 3}, (1, 0): {0: 3}, (1, 1): {1: 1}})
        self.assertFalse(bracketFromMu1(mu1), 'symmetric product has a bracket')

    def testAntisymmetrization(self):
        bracket = bracketFromMu1(BilinearMap.fromProducts(2, {(0, 1): {0: 1}}))

        self.assertEqual(bracket.product(0, 1), Vector([1, 0]), 'bad {e1, e2}')
        self.assertEqual(bracket.product(1, 0), Vector([-1, 0]), 'bad {e2, e1}')
        self.assertTrue(bracket.isAlternating(), 'bracket is not alternating')

    def testZero(self):
        self.assertFalse(bracketFromMu1(BilinearMap.zero(3)), 'zero product has a bracket')


class CheckHomPoissonTestCase(unittest.TestCase):

    def testZeroBracket(self):
        mu = get('dual-numbers').product
        p = HomPoissonAlgebra(mu, BilinearMap.zero(2, alternating=True), LinearMap.identity(2))

        self.assertTrue(checkHomPoisson(p), 'zero bracket over dual numbers fails')

    def testNonCommutative(self):
        mu = BilinearMap.fromProducts(2, {(0, 1): {1: 1}})
        report = checkHomPoisson(HomPoissonAlgebra(mu, BilinearMap.zero(2), LinearMap.identity(2)))

        self.assertEqual(report.status, statusFail, 'non-commutative product passes')
        self.assertEqual(report.checks[0].status, statusFail, 'commutativity not flagged')
        self.assertEqual(report.checks[0].triple, (0, 1), 'bad commutativity witness')

    def testNotAlternating(self):
        mu = get('dual-numbers').product
        p = HomPoissonAlgebra(mu, BilinearMap.fromProducts(2, {(1, 1): {0: 1}}), LinearMap.identity(2))

        verdicts = dict((x.name, x.status) for x in checkHomPoisson(p).checks)

        self.assertEqual(verdicts['skew-symmetry'], statusFail, 'symmetric bracket accepted')


class PoissonFromDeformationTestCase(unittest.TestCase):

    def testNilpotentCommutative(self):
        rng = random.Random(3)

        for _ in range(10):
            a = randomRational(rng)
            d = get('nilpotent-comm', {'a': a}, order=2)
            p = poissonFromDeformation(d)

            self.assertEqual(p.bracket.product(0, 1), Vector([0, 0, a]), 'bad bracket at a=%s' % a)
            self.assertTrue(checkHomPoisson(p), 'Hom-Poisson axioms fail at a=%s' % a)

    def testTrivialDeformation(self):
        base = get('dual-numbers')
        d = DeformationSeries(flavorAssociative, [base.product] + [BilinearMap.zero(2)] * 2,
                              [base.alpha] + [LinearMap.zero(2)] * 2)
        p = poissonFromDeformation(d)

        self.assertFalse(p.bracket, 'trivial deformation has a bracket')
        self.assertTrue(checkHomPoisson(p), 'trivial deformation fails')

    def testExtendedDualNumbers(self):
        # e1 unit, e2 * e2 = 0
        mu = BilinearMap.fromProducts(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})
        base = HomAlgebra(kindHomAssociative, mu, LinearMap.identity(2))

        rng = random.Random(7)

        for idx in range(5):
            mu1 = delta1(base, randomMap(rng, 2))
            d = DeformationSeries(flavorAssociative, [mu, mu1], [base.alpha, LinearMap.zero(2)])

            mu2 = extendDeformation(d)

            self.assertIsNotNone(mu2, 'coboundary does not extend on draw %s' % idx)

            d = d.extended(mu2, LinearMap.zero(2))

            self.assertTrue(verify(d), 'extension does not verify on draw %s' % idx)
            self.assertTrue(checkHomPoisson(poissonFromDeformation(d)),
                            'Hom-Poisson axioms fail on draw %s' % idx)

    def testFirstOrderOnly(self):
        self.assertRaises(error.PyHomDefPreconditionError, poissonFromDeformation,
                          get('nilpotent-comm', order=1))

    def testNonCommutativeBase(self):
        mu = BilinearMap.fromProducts(2, {(0, 1): {1: 1}})
        d = DeformationSeries(flavorAssociative, [mu] * 3, [LinearMap.identity(2)] * 3)

        self.assertRaises(error.PyHomDefPreconditionError, poissonFromDeformation, d)

    def testLieFlavor(self):
        self.assertRaises(error.PyHomDefKindError, poissonFromDeformation, get('jackson-sl2', order=2))

    def testFailingDeformation(self):
        d = get('nilpotent-comm', order=2)
        d = d.replaced(2, product=BilinearMap.fromProducts(3, {(2, 0): {0: 1}}))

        self.assertRaises(error.PyHomDefPreconditionError, poissonFromDeformation, d)


class CocycleLeibnizTestCase(unittest.TestCase):

    def testZeroCochain(self):
        a = nilpotentBase(LinearMap.identity(3))
        self.assertTrue(cocycleLeibnizProperty(a, BilinearMap.zero(3, alternating=True)),
                        'zero cochain fails')

    def testSampledCocycles(self):
        rng = random.Random(11)

        for idx in range(20):
            a = nilpotentBase(randomMap(rng, 3))
            basis = alternatingCocycles(a)

            self.assertTrue(basis, 'no alternating cocycles on draw %s' % idx)

            phi = BilinearMap.zero(3, alternating=True)
            for x in basis:
                phi = phi + x * randomRational(rng)

            self.assertTrue(cocycleLeibnizProperty(a, phi.asAlternating()),
                            'cocycle is not a twisted derivation on draw %s' % idx)

    def testNotCocycle(self):
        a = get('dual-numbers')
        phi = BilinearMap.fromProducts(2, {(0, 1): {1: 1}}, alternating=True)

        self.assertRaises(error.PyHomDefPreconditionError, cocycleLeibnizProperty, a, phi)

    def testNotCommutative(self):
        a = HomAlgebra(kindHomAssociative, BilinearMap.fromProducts(2, {(0, 0): {0: 1}, (0, 1): {1: 1}}),
                       LinearMap.identity(2))

        self.assertRaises(error.PyHomDefPreconditionError, cocycleLeibnizProperty,
                          a, BilinearMap.zero(2, alternating=True))


class LemmaTestCase(unittest.TestCase):

    def testSeededCommutativeBases(self):
        rng = random.Random(100)

        for idx in range(100):
            n = rng.randint(1, 3)
            a = HomAlgebra(kindHomAssociative, randomCommutative(rng, n), randomMap(rng, n))
            mu2 = randomBilinear(rng, n)

            self.assertFalse(cyclicDelta2Residual(a, mu2),
                             'cyclic delta2 differs from cyclic mu2 o mu0 on draw %s' % idx)
            self.assertFalse(cyclicDifferenceResidual(a, mu2),
                             'cyclic difference does not vanish on draw %s' % idx)
            self.assertFalse(cyclicSelfAssociator(a.product, a.alpha),
                             'cyclic self-associator does not vanish on draw %s' % idx)


suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
