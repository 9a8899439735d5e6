'''
This laboratory checks projectivity, injectivity, the (co)generator properties,
total integrals, free resolutions and the derived functors Tor, Ext and Cotor
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
from coideal.algebra import homology
from coideal.algebra.correspondence import check_coideal_subalgebra, factor_by_subalgebra
from coideal.algebra.exactla import Field, Subspace
from coideal.algebra.hopfcore import FiniteAlgebra, Side, Status
from coideal.algebra.hopfmod import ComoduleStr, ModuleStr, TensorKind, decorate_tensor


# Setup logger
logger = logging.getLogger()
logger.setLevel(logging.DEBUG)
if not logger.hasHandlers():
    logger.addHandler(logging.StreamHandler(sys.stdout))


def dual_numbers(field):
    '''k[y]/(y²) with basis 1, y'''
    zero, one = field.zero, field.one
    mult = [[[one, zero], [zero, one]], [[zero, one], [zero, zero]]]
    return FiniteAlgebra(field, mult, [one, zero], ['1', 'y'])


def square_zero(field):
    '''k[x,y]/(x,y)² with basis 1, x, y, not Frobenius'''
    zero, one = field.zero, field.one
    mult = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    for i in range(3):
        mult[0][i][i] = mult[i][0][i] = one
    return FiniteAlgebra(field, mult, [one, zero, zero], ['1', 'x', 'y'])


def diagonal(field, n):
    '''k × ⋯ × k with basis the n idempotents'''
    zero, one = field.zero, field.one
    mult = [[[one if i == j == k else zero for k in range(n)] for j in range(n)] for i in range(n)]
    return FiniteAlgebra(field, mult, [one] * n, [f'e{i}' for i in range(n)])


def split_dual_numbers(field):
    '''k × k[y]/(y²) with basis e, f, y where e + f = 1 and fy = yf = y'''
    zero, one = field.zero, field.one
    mult = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    mult[0][0][0] = one
    mult[1][1][1] = mult[1][2][2] = mult[2][1][2] = one
    return FiniteAlgebra(field, mult, [one, one, zero], ['e', 'f', 'y'])


def counit_module(H, side):
    return ModuleStr.trivial(H.algebra, side, [H.counit_of(H.basis_vector(i)) for i in range(H.dim)])


def span(H, *labels):
    return Subspace.span(H.field, H.dim, [H.basis_vector(H.labels.index(label)) for label in labels])


def trivial_module(A, side):
    return ModuleStr.trivial(A.algebra, side, [A.H.counit_of(a) for a in A.space.rows], 1, A.space)


# Test the module and comodule properties
class PropertyChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.Q = Field.rational()
        cls.R = dual_numbers(cls.Q)
        cls.H = catalog.sweedler4(cls.Q)
        cls.A = check_coideal_subalgebra(cls.H, span(cls.H, '1', 'g'))
        cls.C = factor_by_subalgebra(cls.H, cls.A)

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testDualNumbers(self):
        k = ModuleStr.trivial(self.R, Side.LEFT, [self.Q.one, self.Q.zero])
        regular = ModuleStr.regular(self.R, Side.LEFT)
        self.assertFalse(homology.is_projective(k), 'k is projective over k[y]/(y²)')
        self.assertFalse(homology.is_generator(k)[0], 'k generates the k[y]/(y²)-modules')
        self.assertTrue(homology.is_projective(regular), 'k[y]/(y²) is not projective over itself')
        self.assertTrue(homology.is_generator(regular)[0], 'k[y]/(y²) does not generate its modules')
        self.assertFalse(homology.is_semisimple(self.R), 'k[y]/(y²) is semisimple')

    def testSemisimplicity(self):
        tests = [
                 [catalog.group_algebra([2], self.Q).algebra, True],
                 [catalog.group_algebra([3], self.Q).algebra, True],
                 [catalog.group_algebra([2], Field.prime(2)).algebra, False],
                 [self.H.algebra, False],
                 [self.A.algebra, True],
                ]
        for t in tests:
            logger.debug(f'Algebra of dimension {t[0].dim} over {t[0].field.tag} is{" " if t[1] else " not "}semisimple')
            self.assertEqual(homology.is_semisimple(t[0]), t[1], f'Semisimplicity of an algebra of dimension {t[0].dim} is wrong')

    def testFlatness(self):
        flags = homology.faithfully_flat(self.H, self.A)
        self.assertTrue(all(flags.values()), f'H4 is not faithfully flat over span{{1,g}}: {dict(flags)}')
        flags = homology.faithfully_coflat(self.H, self.C)
        self.assertTrue(all(flags.values()), f'H4 is not faithfully coflat over H4/HA+: {dict(flags)}')

    def testTraceIdeal(self):
        generates, trace = homology.is_generator(ModuleStr.by_multiplication(self.H, self.A.space, Side.LEFT), self.H)
        self.assertTrue(generates and trace.is_whole, 'The trace ideal of H4 over span{1,g} is not everything')
        self.assertTrue(trace.costable, 'The trace ideal of H4 over span{1,g} is not stable under Δ')

    def testInjectivity(self):
        C = self.C
        regular = ComoduleStr.regular(C.coalgebra, Side.RIGHT)
        self.assertTrue(homology.is_injective_comodule(regular), 'C is not injective over itself')
        self.assertTrue(homology.is_cogenerator(C.coalgebra, regular), 'C does not cogenerate its comodules')
        trivial = ComoduleStr.trivial(C.coalgebra, Side.RIGHT, C.grouplike)
        self.assertFalse(homology.is_cogenerator(C.coalgebra, trivial), 'The trivial comodule cogenerates')
        for side in Side:
            self.assertEqual(homology.is_split_epimorphism(self.H, C, side), homology.is_cogenerator(C.coalgebra, ComoduleStr.over_factor(C, side)),
                             f'Splitting of π and the cogenerator property disagree on the {side.value}')

    def testTotalIntegral(self):
        phi = homology.total_integral(self.H, self.C)
        self.assertIsNotNone(phi, 'There is no total integral H4/HA+ → H4')
        self.assertEqual(phi.apply(self.C.grouplike), list(self.H.unit), 'The total integral does not send π(1) to 1')
        splittings = homology.doi_splittings(self.H, self.C, phi)
        self.assertIs(splittings.verdict.status, Status.PASS, f'The splittings fail: {splittings.verdict.witness}')

    def testInvalidTotalIntegral(self):
        phi = homology.total_integral(self.H, self.C)
        with self.assertRaises(homology.coidealNotTotalIntegral, msg='Twice a total integral was accepted'):
            homology.doi_splittings(self.H, self.C, phi.scale(self.Q.convert(2)))

    def testCoFrobenius(self):
        for coalgebra in [self.C.coalgebra, self.H.coalgebra, catalog.taft(3, 2, Field.prime(7)).coalgebra]:
            self.assertTrue(homology.cofrobenius_check(coalgebra, 1), f'A coalgebra of dimension {coalgebra.dim} is not coFrobenius')

    def testFrobeniusAlgebras(self):
        GF2, GF3 = Field.prime(2), Field.prime(3)
        tests = [
                 [dual_numbers(self.Q), 8, True],
                 [dual_numbers(GF2), 8, True],
                 [catalog.group_algebra([2, 2], GF2).algebra, 8, True],
                 [square_zero(self.Q), 8, False],
                 [square_zero(GF3), 8, False],
                 [diagonal(GF2, 3), 0, True],
                 [square_zero(GF2), 0, False],
                ]
        for t in tests:
            logger.debug(f'Algebra {t[0].labels} over {t[0].field.tag} with {t[1]} evaluations is{" " if t[2] else " not "}Frobenius')
            self.assertEqual(homology.is_frobenius(t[0], Random(1), t[1]), t[2], f'Frobenius property of {t[0].labels} over {t[0].field.tag} is wrong')

    def testFrobeniusPencil(self):
        pencil = homology.frobenius_pencil(square_zero(self.Q))
        one, zero = self.Q.one, self.Q.zero
        self.assertEqual(len(pencil), 3, 'The pencil does not have one Gram matrix per basis vector')
        tests = [
                 [0, [[one, zero, zero], [zero, zero, zero], [zero, zero, zero]]],
                 [1, [[zero, one, zero], [one, zero, zero], [zero, zero, zero]]],
                 [2, [[zero, zero, one], [zero, zero, zero], [one, zero, zero]]],
                ]
        for t in tests:
            G = pencil[t[0]]
            self.assertEqual([[G[i, j] for j in range(3)] for i in range(3)], t[1], f'The Gram matrix of the coefficient of e{t[0]} is wrong')


# Test resolutions and derived functors
class DerivedChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.Q = Field.rational()
        cls.R = dual_numbers(cls.Q)
        cls.H = catalog.sweedler4(cls.Q)
        cls.A = check_coideal_subalgebra(cls.H, span(cls.H, '1', 'g'))
        cls.C = factor_by_subalgebra(cls.H, cls.A)

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testPeriodicResolution(self):
        k = ModuleStr.trivial(self.R, Side.LEFT, [self.Q.one, self.Q.zero])
        resolution = homology.free_resolution(k, 4)
        self.assertTrue(resolution.verdict.ok, f'The resolution of k is invalid: {resolution.verdict.witness}')
        self.assertFalse(resolution.complete, 'The resolution of k over k[y]/(y²) terminated')
        self.assertEqual([resolution.rank(i) for i in range(resolution.length)], [1] * resolution.length, 'The resolution of k is not periodic of rank 1')
        free = homology.free_resolution(ModuleStr.regular(self.R, Side.LEFT))
        self.assertTrue(free.complete and free.length == 1, 'The resolution of a free module is not a single step')

    def testProjectiveResolutions(self):
        GF2 = Field.prime(2)
        R = split_dual_numbers(self.Q)
        tests = [
                 ['k over k^(C2×C2)', counit_module(catalog.dual_group_algebra([2, 2], self.Q), Side.LEFT)],
                 ['k over k^(C2×C2) in characteristic 2', counit_module(catalog.dual_group_algebra([2, 2], GF2), Side.LEFT)],
                 ['k over k^C4', counit_module(catalog.dual_group_algebra([4], self.Q), Side.LEFT)],
                 ['k over QC2', counit_module(catalog.group_algebra([2], self.Q), Side.LEFT)],
                 ['ke over k × k[y]/(y²)', ModuleStr.trivial(R, Side.LEFT, [self.Q.one, self.Q.zero, self.Q.zero])],
                 ['H4 over itself', ModuleStr.regular(self.H.algebra, Side.LEFT)],
                ]
        for t in tests:
            resolution = homology.free_resolution(t[1], 4)
            logger.debug(f'Resolution of {t[0]}: {resolution}')
            self.assertTrue(resolution.verdict.ok, f'The resolution of {t[0]} is invalid: {resolution.verdict.witness}')
            self.assertTrue(resolution.complete, f'The resolution of the projective {t[0]} did not terminate')
            self.assertEqual([resolution.rank(i) for i in range(resolution.length)], [1], f'The resolution of {t[0]} is not a single term')
            self.assertTrue(homology.is_projective(t[1]), f'{t[0]} is not projective')

    def testNonLocalTorExt(self):
        R, Q = split_dual_numbers(self.Q), self.Q
        k_e = [Q.one, Q.zero, Q.zero]
        k_f = [Q.zero, Q.one, Q.zero]
        H = self.H
        tests = [
                 ['k over H4', counit_module(H, Side.RIGHT), counit_module(H, Side.LEFT), [1, 0, 1, 0, 1], [1, 0, 1, 0, 1]],
                 ['kf over k × k[y]/(y²)', ModuleStr.trivial(R, Side.RIGHT, k_f), ModuleStr.trivial(R, Side.LEFT, k_f), [1, 1, 1, 1, 1], [1, 1, 1, 1, 1]],
                 ['ke over k × k[y]/(y²)', ModuleStr.trivial(R, Side.RIGHT, k_e), ModuleStr.trivial(R, Side.LEFT, k_e), [1, 0, 0, 0, 0], [1, 0, 0, 0, 0]],
                 ['ke, kf over k × k[y]/(y²)', ModuleStr.trivial(R, Side.RIGHT, k_e), ModuleStr.trivial(R, Side.LEFT, k_f), [0, 0, 0, 0, 0], [1, 1, 1, 1, 1]],
                ]
        for t in tests:
            self.assertEqual(homology.tor_series(t[1], t[2], 4), t[3], f'Tor(k, k) of {t[0]} is wrong')
            self.assertEqual(homology.ext_series(t[2], t[2], 4), t[4], f'Ext of the left module of {t[0]} is wrong')
        resolution = homology.free_resolution(counit_module(H, Side.LEFT), 6)
        self.assertTrue(resolution.verdict.ok and not resolution.complete, f'The resolution of k over H4 is wrong: {resolution}')
        ranks = [resolution.rank(i) for i in range(resolution.length)]
        self.assertEqual(ranks, list(range(1, 8)), f'The ranks over H4 do not grow by the free excess alone: {resolution}')

    def testPeriodicTorExt(self):
        k_right = ModuleStr.trivial(self.R, Side.RIGHT, [self.Q.one, self.Q.zero])
        k_left = ModuleStr.trivial(self.R, Side.LEFT, [self.Q.one, self.Q.zero])
        self.assertEqual(homology.tor_series(k_right, k_left, 4), [1, 1, 1, 1, 1], 'Tor(k, k) over k[y]/(y²) is not 1 in every degree')
        self.assertEqual(homology.ext_series(k_left, k_left, 3), [1, 1, 1, 1], 'Ext(k, k) over k[y]/(y²) is not 1 in every degree')
        self.assertEqual(homology.tor(k_right, k_left, 2), 1, 'Tor_2(k, k) is not one-dimensional')

    def testFlatVanishing(self):
        H, A = self.H, self.A
        H_right = ModuleStr.by_multiplication(H, A.space, Side.RIGHT)
        self.assertEqual(homology.tor_series(H_right, trivial_module(A, Side.LEFT), 2), [2, 0, 0], 'Tor(H4, k) over span{1,g} is wrong')
        self.assertEqual(homology.ext_series(H_right, trivial_module(A, Side.RIGHT), 2)[1:], [0, 0], 'Ext(H4, k) over span{1,g} does not vanish')

    def testCotor(self):
        C = self.C
        trivial = ComoduleStr.trivial(C.coalgebra, Side.RIGHT, C.grouplike)
        series = homology.cotor_series(trivial, ComoduleStr.over_factor(C, Side.LEFT), 2)
        self.assertEqual(series, [self.A.dim, 0, 0], 'Cotor(k, H4) over H4/HA+ is not the coinvariants in degree 0')

    def testDegreeErrors(self):
        k = ModuleStr.trivial(self.R, Side.LEFT, [self.Q.one, self.Q.zero])
        with self.assertRaises(homology.coidealDegreeError, msg='A negative degree was accepted'):
            homology.ext_series(k, k, -1)

    def testSideMismatch(self):
        k = ModuleStr.trivial(self.R, Side.LEFT, [self.Q.one, self.Q.zero])
        with self.assertRaises(Exception, msg='Tor of two left modules was computed'):
            homology.tor_series(k, k, 1)

    def testTruncationDegree(self):
        k = ModuleStr.trivial(self.R, Side.LEFT, [self.Q.one, self.Q.zero])
        self.assertEqual(homology.truncation_degree(k), 8, 'The truncation degree over a two-dimensional algebra is not the minimum')


# Test the statements about relative Hopf modules
class HopfModuleChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.H = catalog.sweedler4(Field.rational())
        cls.A = check_coideal_subalgebra(cls.H, span(cls.H, '1', 'g'))
        cls.C = factor_by_subalgebra(cls.H, cls.A)

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testHomComodule(self):
        M = homology.subalgebra_hopf_module(self.H, self.A)
        hom = homology.hom_comodule(self.A, M, M)
        self.assertEqual(hom.comodule.dim, self.A.dim, 'Hom_A(A, A) is not A')
        self.assertTrue(hom.evaluation_colinear, 'The evaluation Hom_A(A, A)⊗A → A is not colinear')
        self.assertTrue(hom.comodule.verify().ok, 'Hom_A(A, A) violates the comodule axioms')

    def testGeneratorCriterion(self):
        M = homology.subalgebra_hopf_module(self.H, self.A)
        verdict = homology.generator_criterion(self.H, self.A, M)
        self.assertIs(verdict.status, Status.PASS, f'The generator criterion fails on A: {verdict.witness}')

    def testNonvanishing(self):
        C = self.C
        V = ComoduleStr.trivial(C.coalgebra, Side.RIGHT, C.grouplike)
        U = ComoduleStr.trivial(self.H.coalgebra, Side.RIGHT, self.H.unit)
        verdict = homology.nonvanishing_check(self.H, C, V, U)
        self.assertIs(verdict.status, Status.PASS, f'k□_C H4 vanishes: {verdict.witness}')

    def testHomAdjunction(self):
        H, A = self.H, self.A
        regular = ModuleStr.by_multiplication(H, A.space, Side.LEFT, A.space)
        M = decorate_tensor(TensorKind.MODULE, H, homology.regular_hopf_module(H), regular)
        verdict = homology.hom_adjunction(A, trivial_module(A, Side.LEFT), M)
        self.assertIs(verdict.status, Status.PASS, f'The Hom adjunction fails: {verdict.witness}')

    def testTransfer(self):
        verdicts = homology.transfer_implications(self.H, self.A)
        failing = [name for name, verdict in verdicts.items() if not verdict.ok]
        self.assertEqual(failing, [], f'Transfer implications fail: {failing}')
        self.assertEqual(len(verdicts), 8, 'Not every transfer implication was checked')

    def testConditions(self):
        verdicts = homology.conditions_0x(self.H, self.A, 3, Random(1))
        self.assertEqual(list(verdicts), list(homology.CONDITIONS), 'Not every condition was sampled')
        failing = [name for name, verdict in verdicts.items() if not verdict.ok]
        self.assertEqual(failing, [], f'Sampled conditions fail: {failing}')

    def testSemisimpleConditions(self):
        verdict = homology.semisimple_conditions(self.H, self.A, 2, Random(1))
        self.assertTrue(verdict.ok, f'The semisimple conditions fail: {verdict.witness}')
        trivial = check_coideal_subalgebra(self.H, span(self.H, '1'))
        self.assertIsNot(homology.semisimple_conditions(self.H, trivial, 2, Random(1)).status, Status.FAIL, 'The conditions over k1 fail')


# Main
if __name__ == '__main__':
    unittest.main()
