'''
This laboratory checks the correspondence between right coideal subalgebras
and left module factor coalgebras on Sweedler's algebra and group algebras
@author: coideal developers
'''

# Imports
import unittest
import logging
import sys
from random import Random

# Test imports
import __init__

# coideal Imports
from coideal.algebra import catalog
from coideal.algebra.correspondence import (CorrespondenceReport, antipode_transport, check_coideal_subalgebra, codominion,
                                            coidealInvariantViolation, coidealNotCoidealSubalgebra, coinvariants, dominion,
                                            enumerate_coideal_subalgebras, factor_by_subalgebra, factor_coalgebra,
                                            generate_coideal_subalgebra, membership_criterion, random_coideal_subalgebra, roundtrip)
from coideal.algebra.exactla import Field, Subspace, kernel
from coideal.algebra.hopfcore import Side, Status, Verdict


# Setup logger
logger = logging.getLogger()
logger.setLevel(logging.DEBUG)
if not logger.hasHandlers():
    logger.addHandler(logging.StreamHandler(sys.stdout))


def span(H, *labels):
    return Subspace.span(H.field, H.dim, [H.basis_vector(H.labels.index(label)) for label in labels])


# Test coideal subalgebras
class SubalgebraChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.H = catalog.sweedler4(Field.rational())

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testSweedlerSubspaces(self):
        tests = [
                 [('1',), Side.RIGHT, True],
                 [('1', 'g'), Side.RIGHT, True],
                 [('1', 'gx'), Side.RIGHT, True],
                 [('1', 'x'), Side.RIGHT, False],
                 [('1', 'x'), Side.LEFT, True],
                 [('g', 'x'), Side.RIGHT, False],
                 [('1', 'g', 'x', 'gx'), Side.RIGHT, True],
                ]
        for t in tests:
            labels, side, valid = t
            logger.debug(f'span{{{", ".join(labels)}}} is{" " if valid else " not "}a {side.value} coideal subalgebra of H4')
            if valid:
                A = check_coideal_subalgebra(self.H, span(self.H, *labels), side)
                self.assertEqual(A.dim, len(labels), f'span{{{", ".join(labels)}}} changed its dimension')
            else:
                with self.assertRaises(coidealNotCoidealSubalgebra, msg=f'span{{{", ".join(labels)}}} was accepted on the {side.value}'):
                    check_coideal_subalgebra(self.H, span(self.H, *labels), side)

    def testRejectionWitness(self):
        with self.assertRaises(coidealNotCoidealSubalgebra) as context:
            check_coideal_subalgebra(self.H, span(self.H, '1', 'x'), Side.RIGHT)
        self.assertIsNotNone(context.exception.witness, 'The rejection of span{1,x} carries no witness')

    def testGeneration(self):
        x = self.H.basis_vector(2)
        self.assertTrue(generate_coideal_subalgebra(self.H, [x], Side.RIGHT).is_whole(), 'The right coideal subalgebra generated by x is not H4')
        self.assertEqual(generate_coideal_subalgebra(self.H, [x], Side.LEFT).space, span(self.H, '1', 'x'),
                         'The left coideal subalgebra generated by x is not span{1,x}')
        self.assertTrue(generate_coideal_subalgebra(self.H, []).is_trivial(), 'The empty generating set does not give k1')

    def testEnumeration(self):
        found = enumerate_coideal_subalgebras(self.H, 1, Side.RIGHT)
        spaces = [A.space for A in found]
        for labels in [('1',), ('1', 'g'), ('1', 'gx'), ('1', 'g', 'x', 'gx')]:
            self.assertIn(span(self.H, *labels), spaces, f'Enumeration misses span{{{", ".join(labels)}}}')
        self.assertNotIn(span(self.H, '1', 'x'), spaces, 'Enumeration found the left coideal subalgebra span{1,x}')
        self.assertEqual(len(spaces), len(set(spaces)), 'Enumeration returned duplicates')
        self.assertEqual([A.dim for A in found], sorted(A.dim for A in found), 'Enumeration is not ordered by dimension')

    def testRandomSubalgebras(self):
        GF7 = Field.prime(7)
        tests = [
                 [self.H, 'H4/Q', 5],
                 [catalog.sweedler4(GF7), 'H4/GF(7)', 5],
                 [catalog.taft(3, 2, GF7), 'T3/GF(7)', 4],
                 [catalog.group_algebra([2, 2], Field.rational()), 'Q[C2×C2]', 4],
                ]
        rng = Random(3)
        for t in tests:
            H = t[0]
            for _ in range(t[2]):
                A = random_coideal_subalgebra(H, rng)
                logger.debug(f'Random right coideal subalgebra of {t[1]}: {A.space.to_json()}')
                self.assertEqual(check_coideal_subalgebra(H, A.space, Side.RIGHT), A, f'A random coideal subalgebra of {t[1]} fails the axioms')
                coinv = coinvariants(H, factor_by_subalgebra(H, A), Side.RIGHT)
                self.assertEqual(dominion(H, A), coinv, f'The dominion of a random coideal subalgebra of {t[1]} is not coinvariants(H/HA+)')
                self.assertTrue(A.space <= coinv, f'A random coideal subalgebra of {t[1]} is not in its coinvariants')


# Test factor coalgebras
class FactorChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.Q = Field.rational()
        cls.H = catalog.sweedler4(cls.Q)

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testCounitKernel(self):
        G = catalog.group_algebra([2], self.Q)
        self.assertEqual(kernel(G.counit_matrix()).dim, 1, 'The counit kernel of QC2 is not a line')
        C = factor_coalgebra(G, kernel(G.counit_matrix()), Side.LEFT)
        self.assertEqual(C.dim, 1, 'H/H+ is not one-dimensional')

    def testFactorBySubalgebra(self):
        tests = [
                 [('1', 'g'), 2],
                 [('1', 'gx'), 2],
                 [('1',), 4],
                 [('1', 'g', 'x', 'gx'), 1],
                ]
        for t in tests:
            A = check_coideal_subalgebra(self.H, span(self.H, *t[0]))
            C = factor_by_subalgebra(self.H, A)
            logger.debug(f'H4/HA+ for A = span{{{", ".join(t[0])}}}: {C}')
            self.assertEqual(C.dim, t[1], f'H4/HA+ has the wrong dimension for A = span{{{", ".join(t[0])}}}')
            self.assertEqual(coinvariants(self.H, C, Side.RIGHT), A.space, f'The coinvariants of H4/HA+ are not span{{{", ".join(t[0])}}}')
            self.assertTrue(membership_criterion(self.H, A, C).ok, 'The membership criterion fails')
            self.assertEqual(C.coalgebra.counit_of(C.grouplike), self.Q.one, 'The image of 1 has counit different from 1')

    def testAugmentedIdeal(self):
        A = check_coideal_subalgebra(self.H, span(self.H, '1', 'g'))
        C = factor_by_subalgebra(self.H, A)
        g, x, gx = (self.H.basis_vector(i) for i in (1, 2, 3))
        one = self.H.basis_vector(0)
        self.assertTrue(C.ideal.contains([a - b for a, b in zip(one, g)]), 'HA+ misses 1-g')
        self.assertTrue(C.ideal.contains([a + b for a, b in zip(x, gx)]), 'HA+ misses x+gx')

    def testInvalidIdeals(self):
        tests = [
                 ('x',),
                 ('1',),
                 ('g',),
                ]
        for t in tests:
            with self.assertRaises(coidealInvariantViolation, msg=f'span{{{", ".join(t)}}} was accepted as a left ideal coideal'):
                factor_coalgebra(self.H, span(self.H, *t), Side.LEFT)

    def testDominions(self):
        trivial = check_coideal_subalgebra(self.H, span(self.H, '1'))
        self.assertEqual(dominion(self.H, trivial), span(self.H, '1'), 'The dominion of k1 is not k1')
        A = check_coideal_subalgebra(self.H, span(self.H, '1', 'g'))
        self.assertEqual(dominion(self.H, A), A.space, 'span{1,g} is not its own dominion')
        C = factor_by_subalgebra(self.H, A)
        self.assertEqual(codominion(self.H, C), C.ideal, 'H4/HA+ is not a dominion factor coalgebra')
        self.assertTrue(C.is_dominion_factor(), 'H4/HA+ is not a dominion factor coalgebra')

    def testAntipodeTransport(self):
        for labels in [('1', 'g'), ('1', 'gx'), ('1',)]:
            A = check_coideal_subalgebra(self.H, span(self.H, *labels))
            checks = antipode_transport(self.H, A)
            failing = [name for name, verdict in checks.items() if not verdict.ok]
            self.assertEqual(failing, [], f'Antipode transport fails {failing} for span{{{", ".join(labels)}}}')


# Test the round trips
class RoundTripChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.Q = Field.rational()
        cls.H = catalog.sweedler4(cls.Q)

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testFromSubalgebras(self):
        for A in enumerate_coideal_subalgebras(self.H, 1):
            report = roundtrip(self.H, A=A, instance=f'H4 {A.space.to_json()}')
            logger.debug(f'{report}')
            self.assertTrue(report.ok, f'The round trip fails {report.failures()}')
            self.assertIs(report.checks['roundtrip_subalgebra'].status, Status.PASS, f'{A} does not come back')

    def testFromCoalgebra(self):
        C = factor_coalgebra(self.H, kernel(self.H.counit_matrix()), Side.LEFT)
        report = roundtrip(self.H, C=C)
        self.assertTrue(report.ok, f'The round trip from H/H+ fails {report.failures()}')
        self.assertTrue(report.subalgebra.is_whole(), 'The coinvariants of H/H+ are not H')

    def testWithHomology(self):
        A = check_coideal_subalgebra(self.H, span(self.H, '1', 'g'))
        report = roundtrip(self.H, A=A, homology=True)
        self.assertTrue(report.ok, f'The round trip with homology fails {report.failures()}')
        for flag in ('left_projective', 'right_projective', 'left_generator', 'right_generator'):
            self.assertTrue(report.flags[flag], f'H4 is not {flag.replace("_", " ")} over span{{1,g}}')
        self.assertIn('generator_dominion', report.checks, 'The generator statement was not checked')

    def testGroupAlgebra(self):
        G = catalog.group_algebra([4], self.Q)
        for A in enumerate_coideal_subalgebras(G, 1):
            report = roundtrip(G, A=A)
            self.assertTrue(report.ok, f'The round trip on QC4 fails {report.failures()}')
        self.assertEqual(len(enumerate_coideal_subalgebras(G, 1)), 3, 'C4 has not exactly three subgroups')

    def testFiniteFields(self):
        GF7 = Field.prime(7)
        H4, T3 = catalog.sweedler4(GF7), catalog.taft(3, 2, GF7)
        rng = Random(7)
        tests = [[H4, 'H4/GF(7)', A] for A in enumerate_coideal_subalgebras(H4, 1)]
        tests.extend([T3, 'T3/GF(7)', random_coideal_subalgebra(T3, rng)] for _ in range(3))
        tests.append([T3, 'T3/GF(7)', check_coideal_subalgebra(T3, Subspace.whole(GF7, T3.dim))])
        for t in tests:
            report = roundtrip(t[0], A=t[2], instance=f'{t[1]} {t[2].space.to_json()}')
            logger.debug(f'{report}')
            self.assertTrue(report.ok, f'The round trip on {t[1]} fails {report.failures()}')
            self.assertIs(report.checks['dominion'].status, Status.PASS, f'The dominion on {t[1]} is not the coinvariants')
        self.assertGreaterEqual(len([t for t in tests if t[1] == 'H4/GF(7)']), 4, 'H4 over GF(7) has fewer than four right coideal subalgebras')

    def testExactlyOneStart(self):
        with self.assertRaises(coidealInvariantViolation, msg='A round trip without a start was accepted'):
            roundtrip(self.H)

    def testReport(self):
        report = CorrespondenceReport('example', self.H)
        report.record('good', Verdict.passed())
        report.record('skipped', Verdict.not_applicable())
        self.assertTrue(report.ok, 'Passing and not-applicable verdicts make a report fail')
        report.update({'bad': Verdict.failed((0,))}, prefix='broken_')
        self.assertFalse(report.ok, 'A failing verdict does not fail the report')
        self.assertEqual(report.counts(), {'pass': 1, 'fail': 1, 'not-applicable': 1}, 'The report counts are wrong')
        self.assertEqual([name for name, _ in report.failures()], ['broken_bad'], 'The failure list is wrong')
        self.assertEqual(report.to_json()['checks']['broken_bad'], {'status': 'fail', 'witness': (0,)}, 'The report document is wrong')
        self.assertNotIn('samples', report.to_json(), 'A report without samples lists them')
        report.samples['vanishing_tor'] = 3
        self.assertEqual(report.to_json()['samples'], {'vanishing_tor': 3}, 'The sample counts are missing from the report document')


# Main
if __name__ == '__main__':
    unittest.main()
