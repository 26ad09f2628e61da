#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
import sys
from fractions import Fraction

try:
    import unittest2 as unittest

except ImportError:
    import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from pyhomdef.exactlin.matrix import Vector, Matrix
from pyhomdef.homcore import (LinearMap, BilinearMap, TrilinearMap, HomAlgebra,
                              kindHomAssociative, kindHomLie, kindHomLeibniz,
                              homAssociator, homJacobiator, checkHomAssociative,
                              checkHomLie, checkHomLeibniz, checkIdentity, tensorProduct,
                              isMorphism, isIsomorphism, findUnit, isUnitalMorphism,
                              commutatorAlgebra, twistedJacobiator, alphaAssociator)
from pyhomdef.catalog import sl2XBracket, sl2TwistMatrix
from pyhomdef.checkinfo import statusPass, statusFail
from pyhomdef import error

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def dualNumbers(alpha=None):
    mu = BilinearMap.fromProducts(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})
    return HomAlgebra(kindHomAssociative, mu, alpha or LinearMap.identity(2))


def unitAlgebra(twist):
    return HomAlgebra(kindHomAssociative, BilinearMap.fromProducts(1, {(0, 0): {0: 1}}),
                      LinearMap.fromRows([[twist]]))


def upperTriangular():
    # E11, E12, E22
    mu = BilinearMap.fromProducts(3, {(0, 0): {0: 1}, (0, 1): {1: 1},
                                      (1, 2): {1: 1}, (2, 2): {2: 1}})
    return HomAlgebra(kindHomAssociative, mu, LinearMap.identity(3))


def alternatingBrackets(n=3):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return st.lists(st.lists(rationals, min_size=n, max_size=n),
                    min_size=len(pairs), max_size=len(pairs)).map(
        lambda outs: BilinearMap.fromProducts(
            n, dict((p, dict(enumerate(out))) for p, out in zip(pairs, outs)), alternating=True))


def linearMaps(n=3):
    return st.lists(rationals, min_size=n * n, max_size=n * n).map(
        lambda entries: LinearMap(Matrix(n, n, entries)))


class BilinearMapTestCase(unittest.TestCase):

    def testAlternationImplied(self):
        b = BilinearMap.fromProducts(2, {(0, 1): {1: 3}}, alternating=True)
        self.assertEqual(b.product(1, 0), Vector([0, -3]), 'alternation not implied')

    def testInconsistentAlternation(self):
        self.assertRaises(error.PyHomDefKindError, BilinearMap.fromProducts,
                          2, {(0, 1): {1: 1}, (1, 0): {1: 1}}, alternating=True)

    def testDimensionMismatch(self):
        self.assertRaises(error.PyHomDefDimensionError, BilinearMap, 2, [0] * 7)

    def testLieKindNeedsAlternation(self):
        self.assertRaises(error.PyHomDefKindError, HomAlgebra, kindHomLie,
                          BilinearMap.fromProducts(2, {(0, 0): {1: 1}}), LinearMap.identity(2))


class HomAssociatorTestCase(unittest.TestCase):

    def testAssociativeIdentityTwist(self):
        a = upperTriangular()
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    self.assertFalse(homAssociator(a.product, a.alpha, i, j, k),
                                     'associator does not vanish at %s' % ((i, j, k),))

    def testCommutativeOneDim(self):
        a = unitAlgebra(2)
        self.assertFalse(homAssociator(a.product, a.alpha, 0, 0, 0), 'associator does not vanish')

    def testZeroTwist(self):
        mu = BilinearMap.fromProducts(2, {(0, 0): {1: 1}})
        self.assertTrue(checkHomAssociative(HomAlgebra(kindHomAssociative, mu, LinearMap.zero(2))),
                        'zero twist fails')


class CheckHomAssociativeTestCase(unittest.TestCase):

    def testDualNumbers(self):
        self.assertEqual(checkHomAssociative(dualNumbers()).status, statusPass, 'dual numbers fail')

    def testDualNumbersNilpotentTwist(self):
        # every triple vanishes by hand expansion
        alpha = LinearMap.fromImages([[0, 1], [0, 0]])
        self.assertEqual(checkHomAssociative(dualNumbers(alpha)).status, statusPass,
                         'nilpotent twist fails')

    def testZeroProduct(self):
        a = HomAlgebra(kindHomAssociative, BilinearMap.zero(2), LinearMap.fromRows([[1, 2], [3, 4]]))
        self.assertTrue(checkHomAssociative(a), 'zero product fails')

    def testWitness(self):
        # mu(e1, e1) = e2, mu(e2, e1) = e1 is not associative
        mu = BilinearMap.fromProducts(2, {(0, 0): {1: 1}, (1, 0): {0: 1}})
        report = checkHomAssociative(HomAlgebra(kindHomAssociative, mu, LinearMap.identity(2)))

        self.assertEqual(report.status, statusFail, 'non-associative product passes')
        self.assertEqual(report.triple, (0, 0, 0), 'witness is not the first failing triple')
        self.assertEqual(report.residual, (Fraction(-1), Fraction(0)), 'bad residual')

    def testKindMismatch(self):
        self.assertRaises(error.PyHomDefKindError, checkHomAssociative,
                          HomAlgebra(kindHomLie, sl2XBracket(), LinearMap.identity(3)))


class CheckHomLieTestCase(unittest.TestCase):

    def testSl2(self):
        bracket = sl2XBracket()
        self.assertFalse(homJacobiator(bracket, LinearMap.identity(3), 0, 1, 2), 'Jacobi fails on sl2')
        self.assertTrue(checkHomLie(HomAlgebra(kindHomLie, bracket, LinearMap.identity(3))),
                        'sl2 fails')

    def testTwistFamilyMember(self):
        a = HomAlgebra(kindHomLie, sl2XBracket(), sl2TwistMatrix(1, 2, 3, 4, 5, 6))
        self.assertTrue(checkHomLie(a), 'twist family member fails')

    def testTwistOutsideFamily(self):
        a = HomAlgebra(kindHomLie, sl2XBracket(), LinearMap.fromRows([[0, 0, 0], [1, 0, 0], [0, 0, 0]]))
        report = checkHomLie(a)

        self.assertEqual(report.status, statusFail, 'twist outside the family passes')
        self.assertEqual(report.triple, (0, 1, 2), 'bad witness')

    def testZeroTwist(self):
        self.assertTrue(checkHomLie(HomAlgebra(kindHomLie, sl2XBracket(), LinearMap.zero(3))),
                        'zero twist fails')

    def testNonAlternatingJacobiator(self):
        self.assertRaises(error.PyHomDefKindError, homJacobiator,
                          BilinearMap.fromProducts(2, {(0, 0): {0: 1}}), LinearMap.identity(2), 0, 0, 0)

    @settings(max_examples=40, deadline=None)
    @given(alternatingBrackets(), linearMaps())
    def testJacobiatorSymmetry(self, bracket, alpha):
        t = twistedJacobiator(bracket, alpha, bracket)

        self.assertEqual(t.permuted((1, 2, 0)), t, 'not cyclically invariant')
        self.assertEqual(t.permuted((0, 2, 1)), -t, 'transposition does not negate')


class CheckHomLeibnizTestCase(unittest.TestCase):

    def testZeroBracket(self):
        a = HomAlgebra(kindHomLeibniz, BilinearMap.zero(3), LinearMap.fromRows([[1, 1, 0], [0, 1, 0], [0, 0, 2]]))
        self.assertTrue(checkHomLeibniz(a), 'zero bracket fails')

    def testSl2AsLeibniz(self):
        a = HomAlgebra(kindHomLeibniz, sl2XBracket(), LinearMap.identity(3))
        self.assertTrue(checkIdentity(a), 'sl2 fails as Leibniz')

    @settings(max_examples=40, deadline=None)
    @given(alternatingBrackets(), linearMaps())
    def testSkewLeibnizIsLie(self, bracket, alpha):
        lie = checkHomLie(HomAlgebra(kindHomLie, bracket, alpha))
        leibniz = checkHomLeibniz(HomAlgebra(kindHomLeibniz, bracket, alpha))

        self.assertEqual(lie.status, leibniz.status, 'verdicts disagree')

    @settings(max_examples=20, deadline=None)
    @given(linearMaps())
    def testSl2VerdictsAgree(self, alpha):
        lie = checkHomLie(HomAlgebra(kindHomLie, sl2XBracket(), alpha))
        leibniz = checkHomLeibniz(HomAlgebra(kindHomLeibniz, sl2XBracket(), alpha))

        self.assertEqual(lie.status, leibniz.status, 'verdicts disagree')


class TensorProductTestCase(unittest.TestCase):

    def testUnitFactor(self):
        a = dualNumbers()
        b = tensorProduct(a, unitAlgebra(1))

        self.assertEqual(b.product, a.product, 'unit factor changes structure constants')
        self.assertEqual(b.alpha, a.alpha, 'unit factor changes the twist')

    def testTwistsMultiply(self):
        b = tensorProduct(unitAlgebra(2), unitAlgebra(3))

        self.assertEqual(b.dim, 1, 'bad dimension')
        self.assertEqual(b.alpha, LinearMap.fromRows([[6]]), 'twists do not multiply')
        self.assertEqual(b.product, unitAlgebra(1).product, 'bad product')

    def testPreservesHomAssociativity(self):
        alpha = LinearMap.fromImages([[0, 1], [0, 0]])
        b = tensorProduct(dualNumbers(alpha), upperTriangular())

        self.assertEqual(b.dim, 6, 'bad dimension')
        self.assertTrue(checkHomAssociative(b), 'tensor product is not Hom-associative')


class MorphismTestCase(unittest.TestCase):

    def testIdentity(self):
        a = dualNumbers()
        self.assertTrue(isMorphism(LinearMap.identity(2), a, a), 'identity is not a morphism')
        self.assertTrue(isIsomorphism(LinearMap.identity(2), a, a), 'identity is not an isomorphism')

    def testZeroMap(self):
        a = dualNumbers()
        self.assertTrue(isMorphism(LinearMap.zero(2), a, a), 'zero map is not a morphism')
        self.assertFalse(isIsomorphism(LinearMap.zero(2), a, a), 'zero map is an isomorphism')

    def testRescaling(self):
        a = unitAlgebra(1)
        self.assertFalse(isMorphism(LinearMap.fromRows([[2]]), a, a), 'rescaling is a morphism')

    def testUnitalMorphism(self):
        a = dualNumbers()
        self.assertTrue(isUnitalMorphism(LinearMap.identity(2), a, a), 'identity is not unital')


class FindUnitTestCase(unittest.TestCase):

    def testDualNumbers(self):
        self.assertEqual(findUnit(dualNumbers()), Vector([1, 0]), 'bad unit')

    def testZeroProduct(self):
        self.assertIsNone(findUnit(HomAlgebra(kindHomAssociative, BilinearMap.zero(2), LinearMap.identity(2))),
                          'zero algebra has a unit')

    def testLeftUnitOnly(self):
        mu = BilinearMap.fromProducts(2, {(0, 0): {0: 1}, (0, 1): {1: 1}})
        self.assertIsNone(findUnit(HomAlgebra(kindHomAssociative, mu, LinearMap.identity(2))),
                          'one-sided unit accepted')


class CommutatorAlgebraTestCase(unittest.TestCase):

    def testUpperTriangular(self):
        g = commutatorAlgebra(upperTriangular())

        self.assertEqual(g.kind, kindHomLie, 'bad kind')
        self.assertTrue(checkHomLie(g), 'commutator bracket fails Hom-Jacobi')
        self.assertEqual(g.product.product(0, 1), Vector([0, 1, 0]), 'bad commutator')


class DeterminismTestCase(unittest.TestCase):

    def testRepeatedCheck(self):
        a = HomAlgebra(kindHomLie, sl2XBracket(), LinearMap.fromRows([[0, 0, 0], [1, 0, 0], [0, 0, 0]]))
        first = checkHomLie(a)
        second = checkHomLie(a)

        self.assertEqual((first.status, first.triple, first.residual),
                         (second.status, second.triple, second.residual), 'verdicts differ')

    def testAssociatorBuildingBlock(self):
        a = upperTriangular()
        self.assertEqual(alphaAssociator(a.product, a.product, a.alpha), TrilinearMap.zero(3),
                         'associator tensor does not vanish')


suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
