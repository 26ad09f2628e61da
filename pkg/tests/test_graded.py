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

from pyhomdef.exactlin.series import TruncSeries
from pyhomdef.graded import (GradedElement, GradedFamily, familyVirasoro, qPower, qInteger,
                             expandQSeries, expandQPower, qwittBracket, qwittAlpha,
                             sigmaJacobiResidual, wittBracketOrder, wittAlphaOrder,
                             wittDeformationResidual, virasoroBracket, virasoroCentral,
                             virasoroHomJacobi, wittTauCondition, wittNoncocycleRemark,
                             wittSeriesConsistency, wittGeneratingSeriesConsistency,
                             scanQWitt, scanVirasoro, scanWittDeformation, scanFamily)
from pyhomdef.checkinfo import statusPass
from pyhomdef import error

indices = st.integers(-6, 6)
nonNegative = st.integers(0, 8)
qs = st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(lambda q: q not in (0, -1))


class GradedElementTestCase(unittest.TestCase):

    def testNoZeroTerms(self):
        self.assertEqual(GradedElement({1: 0, 2: 3}).indices(), [2], 'zero coefficient stored')

    def testCancellation(self):
        u = GradedElement({1: Fraction(1, 2)}, central=1)
        self.assertFalse(u - u, 'difference with itself is not zero')

    def testCentralEquality(self):
        self.assertNotEqual(GradedElement(central=1), GradedElement(), 'central term ignored')


class QIntegerTestCase(unittest.TestCase):

    def testSmall(self):
        self.assertEqual(qInteger(3, 2), 7, 'bad {3}_2')

    def testClassicalLimit(self):
        for n in range(-5, 6):
            self.assertEqual(qInteger(n, 1), n, 'bad {%s}_1' % n)

    def testEmptySum(self):
        self.assertEqual(qInteger(0, Fraction(5, 3)), 0, 'bad {0}_q')

    def testNegativeIndex(self):
        self.assertEqual(qInteger(-2, 2), Fraction(-3, 4), 'bad {-2}_2')

    def testPole(self):
        self.assertRaises(error.PyHomDefPoleError, qInteger, -1, 0)

    @given(indices, qs)
    def testQuotientFormula(self, n, q):
        if q == 1:
            return
        self.assertEqual(qInteger(n, q), (qPower(q, n) - 1) / (q - 1), 'sum formula disagrees')

    def testSeriesArgument(self):
        q = TruncSeries([1, 1], order=3)
        self.assertEqual(qInteger(4, q), expandQSeries(4, 3), 'series q disagrees with expansion')
        self.assertEqual(qPower(q, 4), expandQPower(4, 3), 'bad binomial expansion')


class ExpansionTestCase(unittest.TestCase):

    def testThree(self):
        self.assertEqual(expandQSeries(3, 2), TruncSeries([3, 3, 1]), 'bad expansion of {3}_(1+t)')

    def testZero(self):
        self.assertFalse(expandQSeries(0, 4), 'expansion of {0} is not zero')

    def testLinearCoefficient(self):
        for n in range(10):
            self.assertEqual(expandQSeries(n, 1)[1], Fraction(n * (n - 1), 2), 'bad t coefficient at %s' % n)

    def testNegativeIndex(self):
        self.assertRaises(error.PyHomDefPreconditionError, expandQSeries, -1, 2)


class QWittTestCase(unittest.TestCase):

    def testClassicalBracket(self):
        self.assertEqual(qwittBracket(2, 1, 1), GradedElement.term(3, 1), 'bad [x2, x1] at q = 1')

    def testDiagonal(self):
        self.assertFalse(qwittBracket(4, 4, Fraction(2, 3)), '[x_n, x_n] is not zero')

    def testQ2(self):
        self.assertEqual(qwittBracket(1, 0, 2), GradedElement.term(1, 1), 'bad [x1, x0] at q = 2')

    def testAlpha(self):
        self.assertEqual(qwittAlpha(0, 5), 2, 'bad alpha(x0)')
        self.assertEqual(qwittAlpha(3, 1), 2, 'bad alpha(x3) at q = 1')
        self.assertEqual(qwittAlpha(2, 2), 5, 'bad alpha(x2) at q = 2')

    @given(indices, indices, qs)
    def testAlternating(self, n, m, q):
        self.assertEqual(qwittBracket(n, m, q), -qwittBracket(m, n, q), 'bracket is not alternating')

    def testSigmaJacobiExamples(self):
        self.assertFalse(sigmaJacobiResidual(1, 2, 3, 2), 'residual at (1, 2, 3), q = 2')
        self.assertFalse(sigmaJacobiResidual(0, 1, 2, 7), 'residual at (0, 1, 2), q = 7')
        self.assertFalse(sigmaJacobiResidual(3, 3, -1, Fraction(1, 3)), 'residual at degenerate triple')

    def testSigmaJacobiWindow(self):
        for q in (2, 3, Fraction(1, 2), -2):
            report = scanQWitt(q)
            self.assertEqual(report.status, statusPass, 'sigma-Jacobi fails at q = %s: %r' % (q, report))

    def testZeroQ(self):
        self.assertRaises(error.PyHomDefPoleError, GradedFamily, 'qwitt', q=0)


class WittDeformationTestCase(unittest.TestCase):

    def testLowOrders(self):
        for n in range(9):
            for m in range(9):
                self.assertEqual(wittBracketOrder(n, m, 0), GradedElement.term(n + m, n - m),
                                 'bad order 0 bracket at (%s, %s)' % (n, m))
                self.assertEqual(wittBracketOrder(n, m, 1),
                                 GradedElement.term(n + m, Fraction((n - m) * (n + m - 1), 2)),
                                 'bad order 1 bracket at (%s, %s)' % (n, m))

    def testEmptySums(self):
        self.assertFalse(wittBracketOrder(3, 2, 3), 'order beyond indices is not zero')

    def testAlphaOrders(self):
        self.assertEqual(wittAlphaOrder(5, 0), 2, 'bad alpha_0')
        self.assertEqual(wittAlphaOrder(5, 1), 5, 'bad alpha_1')
        self.assertEqual(wittAlphaOrder(2, 3), 0, 'alpha_k beyond n is not zero')

    def testNegativeIndex(self):
        self.assertRaises(error.PyHomDefPreconditionError, wittBracketOrder, -1, 2, 0)

    def testResidualsVanish(self):
        for s in range(7):
            for n in range(9):
                for l in range(9):
                    for m in range(9):
                        self.assertFalse(wittDeformationResidual(n, l, m, s),
                                         'residual at %s, order %s' % ((n, l, m), s))

    def testSeriesConsistency(self):
        for n in range(5):
            for l in range(5):
                for m in range(5):
                    self.assertTrue(wittSeriesConsistency(n, l, m, 4),
                                    'series and order-wise residuals disagree at %s' % ((n, l, m),))

    def testGeneratingSeries(self):
        for n in range(7):
            for m in range(7):
                self.assertTrue(wittGeneratingSeriesConsistency(n, m, 5),
                                'generating series disagree at %s' % ((n, m),))

    def testSeriesBracket(self):
        family = GradedFamily('witt-deformation', order=2)
        self.assertEqual(family.bracket(3, 1).coefficient(4), TruncSeries([2, 3, 1]),
                         'bad series bracket')

    def testScan(self):
        report = scanWittDeformation(3, window=(0, 4))

        self.assertEqual(report.status, statusPass, 'deformation equations fail')
        self.assertEqual(len(report.checks), 4, 'bad number of orders')


class WittFirstOrderPairTestCase(unittest.TestCase):

    def testTauCondition(self):
        self.assertEqual(wittTauCondition(1, 2, 4), -12, 'bad tau condition value')

    def testRemark(self):
        self.assertEqual(wittNoncocycleRemark(1, 2, 4), (0, 12), 'bad combined and partial values')

    def testSymmetricTriple(self):
        self.assertEqual(wittNoncocycleRemark(3, 3, 3)[1], 0, 'partial does not vanish at (p, p, p)')

    @settings(max_examples=50)
    @given(nonNegative, nonNegative, nonNegative)
    def testCombinedVanishes(self, p, r, w):
        self.assertEqual(wittNoncocycleRemark(p, r, w)[0], 0, 'combined expression does not vanish')


class VirasoroTestCase(unittest.TestCase):

    def testClassicalCentralTerm(self):
        for n in range(7):
            element = virasoroBracket(n, -n, 1)

            self.assertEqual(element.coefficient(0), 2 * n, 'bad x0 coefficient at %s' % n)
            self.assertEqual(element.central, Fraction((n - 1) * n * (n + 1), 12),
                             'bad central coefficient at %s' % n)

    def testOffDiagonal(self):
        self.assertEqual(virasoroBracket(3, 1, 2), qwittBracket(3, 1, 2), 'central term off n + m = 0')

    def testCentralElement(self):
        family = GradedFamily(familyVirasoro, q=2)
        c = GradedElement(central=1)
        x = GradedElement.term(3, 1)

        self.assertFalse(family.bracketElements(x, c), '[x_n, c] is not zero')
        self.assertFalse(family.bracketElements(c, x), '[c, x_n] is not zero')
        self.assertEqual(family.alphaElement(c), GradedElement(central=2), 'alpha(c) is not 2c')

    def testHandChecked(self):
        self.assertFalse(virasoroHomJacobi(2, 1, -3, 2), 'Hom-Jacobi fails at (2, 1, -3)')

    def testHomJacobiWindow(self):
        for q in (2, Fraction(1, 2)):
            report = scanVirasoro(q)
            self.assertEqual(report.status, statusPass, 'Hom-Jacobi fails at q = %s: %r' % (q, report))

    def testPole(self):
        self.assertRaises(error.PyHomDefPoleError, virasoroCentral, 1, -1)
        self.assertRaises(error.PyHomDefPoleError, scanVirasoro, -1, (-2, 2))


class ScanFamilyTestCase(unittest.TestCase):

    def testQWitt(self):
        report = scanFamily('qwitt', q=Fraction(2, 3), window=(-3, 3))

        self.assertEqual(report.status, statusPass, 'qwitt scan fails')
        self.assertEqual(report.checks[0].name, 'sigma-jacobi', 'bad nested check')

    def testWittDeformation(self):
        report = scanFamily('witt-deformation', order=2, window=(0, 4))
        verdicts = dict((x.name, x) for x in report.checks)

        self.assertEqual(report.status, statusPass, 'witt-deformation scan fails: %r' % (report,))
        self.assertEqual(sorted(verdicts), ['witt-deformation', 'witt-first-order-pair',
                                            'witt-generating-series', 'witt-series-consistency'],
                         'bad nested checks')
        self.assertEqual(dict(verdicts['witt-first-order-pair'].details)['tau-condition'], -12,
                         'bad tau condition detail')

    def testVirasoroPole(self):
        self.assertRaises(error.PyHomDefPoleError, scanFamily, 'virq', q=-1)

    def testUnknown(self):
        self.assertRaises(error.PyHomDefCatalogError, scanFamily, 'heisenberg')


suite = unittest.TestLoader().loadTestsFromModule(sys.modules[__name__])

if __name__ == '__main__':
    unittest.TextTestRunner(verbosity=2).run(suite)
