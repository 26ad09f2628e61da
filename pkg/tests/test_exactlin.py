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

from pyhomdef.exactlin.rational import toRational, parseRational, formatRational
from pyhomdef.exactlin.series import TruncSeries, seriesMul, seriesInverse
from pyhomdef.exactlin.matrix import Vector, Matrix, rref, rank, kernelBasis, solveAffine
from pyhomdef import error

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def matrices(maxRows=4, maxCols=4):
    return st.integers(1, maxRows).flatmap(
        lambda r: st.integers(1, maxCols).flatmap(
            lambda c: st.lists(rationals, min_size=r * c, max_size=r * c).map(
                lambda entries: Matrix(r, c, entries))))


def series(order):
    return st.lists(rationals, min_size=order + 1, max_size=order + 1).map(
        lambda coeffs: TruncSeries(coeffs, order=order))


class RationalTestCase(unittest.TestCase):

    def testParseCanonical(self):
        self.assertEqual(parseRational('-3/6'), Fraction(-1, 2), 'bad reduction')

    def testParseInteger(self):
        self.assertEqual(parseRational('42'), Fraction(42), 'bad integer literal')

    def testZeroDenominator(self):
        self.assertRaises(error.PyHomDefSyntaxError, parseRational, '1/0')

    def testGarbage(self):
        self.assertRaises(error.PyHomDefLexerError, parseRational, '1.5')

    def testFormat(self):
        self.assertEqual(formatRational(Fraction(6, -4)), '-3/2', 'bad canonical text')

    def testFloatRefused(self):
        self.assertRaises(error.PyHomDefArithmeticError, toRational, 0.5)

    @given(rationals)
    def testFormatParse(self, x):
        self.assertEqual(parseRational(formatRational(x)), x)


class RrefTestCase(unittest.TestCase):

    def testIdentity(self):
        m, r = rref(Matrix.identity(2))
        self.assertEqual(m, Matrix.identity(2), 'identity not preserved')
        self.assertEqual(r, 2, 'bad rank')

    def testRankOne(self):
        m, r = rref(Matrix.fromRows([[1, 2], [2, 4]]))
        self.assertEqual(m, Matrix.fromRows([[1, 2], [0, 0]]), 'bad echelon form')
        self.assertEqual(r, 1, 'bad rank')

    def testZero(self):
        m, r = rref(Matrix.zero(3, 3))
        self.assertEqual(m, Matrix.zero(3, 3), 'zero not preserved')
        self.assertEqual(r, 0, 'bad rank')


class KernelTestCase(unittest.TestCase):

    def testInjective(self):
        self.assertEqual(kernelBasis(Matrix.identity(2)), [], 'nonzero kernel of identity')

    def testRankOne(self):
        self.assertEqual(kernelBasis(Matrix.fromRows([[1, 2], [2, 4]])), [Vector([-2, 1])],
                         'bad kernel vector')

    def testZeroMap(self):
        self.assertEqual(
            kernelBasis(Matrix.zero(2, 3)),
            [Vector([1, 0, 0]), Vector([0, 1, 0]), Vector([0, 0, 1])],
            'zero map kernel is not the standard basis'
        )

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def testKernelIsAnnihilated(self, m):
        basis = kernelBasis(m)

        self.assertEqual(rank(m) + len(basis), m.cols, 'rank-nullity violated')

        for v in basis:
            self.assertFalse(m * v, 'kernel vector not annihilated')


class SolveAffineTestCase(unittest.TestCase):

    def testIdentitySystem(self):
        particular, kernel = solveAffine(Matrix.identity(2), Vector([3, 5]))
        self.assertEqual(particular, Vector([3, 5]), 'bad solution')
        self.assertEqual(kernel, [], 'bad kernel')

    def testOneEquation(self):
        particular, kernel = solveAffine(Matrix.fromRows([[1, 1]]), Vector([2]))
        self.assertEqual(particular, Vector([2, 0]), 'bad particular solution')
        self.assertEqual(kernel, [Vector([-1, 1])], 'bad kernel')

    def testInconsistent(self):
        self.assertIsNone(solveAffine(Matrix.fromRows([[1], [1]]), Vector([0, 1])),
                          'contradictory system solved')

    def testShapeMismatch(self):
        self.assertRaises(error.PyHomDefDimensionError,
                          solveAffine, Matrix.identity(2), Vector([1, 2, 3]))

    @settings(max_examples=60, deadline=None)
    @given(matrices(), st.data())
    def testSolutionIsExact(self, m, data):
        x = Vector(data.draw(st.lists(rationals, min_size=m.cols, max_size=m.cols)))
        b = m * x

        particular, kernel = solveAffine(m, b)

        self.assertEqual(m * particular, b, 'particular solution is off')


class SeriesTestCase(unittest.TestCase):

    def testDifferenceOfSquares(self):
        self.assertEqual(seriesMul(TruncSeries([1, 1], order=2), TruncSeries([1, -1], order=2)),
                         TruncSeries([1, 0, -1]), 'bad product')

    def testTruncation(self):
        t = TruncSeries.variable(1)
        self.assertFalse(seriesMul(t, t), 't^2 survives truncation at order 1')

    def testUnit(self):
        a = TruncSeries([1, 2, 3])
        self.assertEqual(seriesMul(a, TruncSeries.constant(1, 2)), a, 'unit is not neutral')

    def testOrderMismatch(self):
        self.assertRaises(error.PyHomDefOrderError, seriesMul,
                          TruncSeries([1, 1], order=1), TruncSeries([1, 1], order=2))

    def testAdditionOrderMismatch(self):
        self.assertRaises(error.PyHomDefOrderError, lambda: TruncSeries([1], order=1) + TruncSeries([1], order=2))

    def testGeometric(self):
        self.assertEqual(seriesInverse(TruncSeries([1, 1], order=2)), TruncSeries([1, -1, 1]),
                         'bad geometric series')

    def testJacksonCoefficients(self):
        a = TruncSeries([2, 1], order=3) * seriesInverse(TruncSeries([2, 2], order=3))
        self.assertEqual(
            a,
            TruncSeries([1, Fraction(-1, 2), Fraction(1, 2), Fraction(-1, 2)]),
            'bad expansion of (2+t)/(2+2t)'
        )

    def testConstantReciprocal(self):
        self.assertEqual(seriesInverse(TruncSeries([Fraction(1, 2)], order=1)),
                         TruncSeries([2, 0]), 'bad reciprocal')

    def testNotInvertible(self):
        self.assertRaises(error.PyHomDefArithmeticError, seriesInverse, TruncSeries([0, 1]))

    @given(series(3), series(3), series(3))
    def testRingLaws(self, a, b, c):
        self.assertEqual(a * b, b * a, 'not commutative')
        self.assertEqual((a * b) * c, a * (b * c), 'not associative')
        self.assertEqual(a * (b + c), a * b + a * c, 'not distributive')

    @given(series(4))
    def testInverseInvolution(self, a):
        if not a[0]:
            return

        self.assertEqual(a * seriesInverse(a), TruncSeries.constant(1, 4), 'not an inverse')
        self.assertEqual(seriesInverse(seriesInverse(a)), a, 'inverse is not an involution')


suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
