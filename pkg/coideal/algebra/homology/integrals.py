'''
Total integrals φ: C → H, the splittings of the inclusions A → H and B → H
built from them, and the coFrobenius test for factor coalgebras.
@author: coideal developers
'''

# Imports
from collections import OrderedDict, namedtuple
from random import Random
from typing import Any, List, Optional
try:
    from sympy import symbols
    from sympy.polys.matrices import DomainMatrix
except ImportError as e:
    from coideal.utils.exceptions import coidealModuleImport
    raise coidealModuleImport(e)

# coideal Imports
from coideal.algebra.exactla import Matrix, solve
from coideal.algebra.hopfcore import FiniteAlgebra, FiniteCoalgebra, FiniteHopfAlgebra, Side, Verdict
from coideal.algebra.correspondence import FactorCoalgebra, coinvariants
from coideal.algebra.hopfmod import ComoduleStr, is_morphism, morphisms
from coideal.defaults import constants
from coideal.utils.exceptions import coidealBaseException
from coideal.utils import logging


class coidealNotTotalIntegral(coidealBaseException):
    '''
    Gets thrown when a map C → H is not colinear or does not send 1_C to 1
    '''
    template = 'Not a total integral ({error})'


DoiSplittings = namedtuple('DoiSplittings', ['p', 'q', 'verdict'])


def total_integral(H: FiniteHopfAlgebra, C: FactorCoalgebra) -> Optional[Matrix]:
    '''
    A right C-colinear φ: C → H with φ(π(1)) = 1, or None if there is none.
    Free coefficients of the solution are set to zero.
    '''
    maps = morphisms(ComoduleStr.regular(C.coalgebra, Side.RIGHT), ComoduleStr.over_factor(C, Side.RIGHT))
    if not maps:
        return None
    system = Matrix.from_columns(H.field, H.dim, [f.apply(C.grouplike) for f in maps])
    coefficients = solve(system, H.unit)
    if coefficients is None:
        logging.getLogger().debug(f'No total integral for a factor coalgebra of dimension {C.dim}')
        return None
    phi = Matrix.zeros(H.field, H.dim, C.dim)
    for c, f in zip(coefficients, maps):
        if c:
            phi = phi + f.scale(c)
    return phi


def _columns_of(H: FiniteHopfAlgebra, build) -> Matrix:
    return Matrix.from_columns(H.field, H.dim, [build(i) for i in range(H.dim)])


def doi_splittings(H: FiniteHopfAlgebra, C: FactorCoalgebra, phi: Matrix) -> DoiSplittings:
    '''
    p(h) = Σ S(φ(π(h₁)))h₂ splits A = ᶜᵒCH → H right A-linearly and
    q(h) = Σ h₁φ(π(S(h₂))) splits B = H^coC → H left B-linearly
    '''
    regular = ComoduleStr.regular(C.coalgebra, Side.RIGHT)
    if not is_morphism(phi, regular, ComoduleStr.over_factor(C, Side.RIGHT)):
        raise coidealNotTotalIntegral('φ is not right C-colinear')
    if phi.apply(C.grouplike) != list(H.unit):
        raise coidealNotTotalIntegral('φ(1_C) ≠ 1')

    left_factor = H.antipode @ phi @ C.proj
    right_factor = phi @ C.proj @ H.antipode
    left_columns, right_columns = left_factor.columns(), right_factor.columns()

    def p_of(i: int) -> List:
        total = [H.field.zero] * H.dim
        for (j, k), c in H.coproduct_terms(i):
            for index, x in enumerate(H.multiply(left_columns[j], H.basis_vector(k))):
                total[index] += c * x
        return total

    def q_of(i: int) -> List:
        total = [H.field.zero] * H.dim
        for (j, k), c in H.coproduct_terms(i):
            for index, x in enumerate(H.multiply(H.basis_vector(j), right_columns[k])):
                total[index] += c * x
        return total

    p, q = _columns_of(H, p_of), _columns_of(H, q_of)
    A, B = coinvariants(H, C, Side.RIGHT), coinvariants(H, C, Side.LEFT)
    checks = OrderedDict()
    checks['p_image'] = all(A.contains(v) for v in p.columns())
    checks['p_retracts'] = all(p.apply(a) == list(a) for a in A.rows)
    checks['p_right_linear'] = all(p @ H.right_matrix(a) == H.right_matrix(a) @ p for a in A.rows)
    checks['q_image'] = all(B.contains(v) for v in q.columns())
    checks['q_retracts'] = all(q.apply(b) == list(b) for b in B.rows)
    checks['q_left_linear'] = all(q @ H.left_matrix(b) == H.left_matrix(b) @ q for b in B.rows)
    failing = [name for name, ok in checks.items() if not ok]
    verdict = Verdict.failed({'checks': failing}) if failing else Verdict.passed(f'splittings onto dim {A.dim} and dim {B.dim}')
    return DoiSplittings(p, q, verdict)


def frobenius_pencil(R: FiniteAlgebra) -> List[Matrix]:
    '''
    G_k with G_k[i][j] the coefficient of e_k in e_i·e_j. The form (a, b) ↦ λ(ab)
    of a functional λ has the Gram matrix Σ λ_k G_k.
    '''
    n = R.dim
    return [Matrix(R.field, n, n, [[R.mult[i][j][k] for j in range(n)] for i in range(n)]) for k in range(n)]


def _generic_determinant(R: FiniteAlgebra, pencil: List[Matrix]) -> Any:
    '''det(Σ t_k G_k) in the polynomial ring over the ground field'''
    ring = R.field.domain.poly_ring(*symbols(f't0:{R.dim}'))
    n = R.dim
    entries = [[ring.zero] * n for _ in range(n)]
    for t, G in zip(ring.gens, pencil):
        for i in range(n):
            for j in range(n):
                if G[i, j]:
                    entries[i][j] += t * G[i, j]
    return ring, DomainMatrix(entries, (n, n), ring).det()


def is_frobenius(R: FiniteAlgebra, rng: Optional[Random]=None, tries: int=8) -> bool:
    '''
    R is Frobenius iff some functional λ makes (a, b) ↦ λ(ab) nondegenerate, i.e.
    iff det(Σ t_k G_k) is a nonzero polynomial. Seeded evaluations certify a
    nondegenerate form quickly; a negative answer always comes from the symbolic
    determinant. Frobenius algebras stay Frobenius under field extension and back,
    so the polynomial decides the question over GF(p) as well.
    '''
    if R.dim == 0:
        return True
    rng = Random(constants.SEED) if rng is None else rng
    pencil = frobenius_pencil(R)
    box = R.field.box(constants.COEFFICIENT_BOX)
    for _ in range(tries):
        gram = Matrix.zeros(R.field, R.dim, R.dim)
        for G in pencil:
            c = rng.choice(box)
            if c:
                gram = gram + G.scale(c)
        if gram.is_invertible():
            return True
    ring, det = _generic_determinant(R, pencil)
    logging.getLogger().debug(f'Generic Gram determinant of an algebra of dimension {R.dim}: {"zero" if ring.is_zero(det) else "nonzero"}')
    return not ring.is_zero(det)


def cofrobenius_check(coalgebra: FiniteCoalgebra, seed: Optional[int]=None) -> bool:
    '''
    C is left and right coFrobenius iff C ≅ C* as left and as right C*-modules,
    i.e. iff the dual algebra C* is Frobenius (a property symmetric in the sides)
    '''
    return is_frobenius(coalgebra.dual_algebra(), Random(constants.SEED if seed is None else seed))
