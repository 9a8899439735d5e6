'''
Projectivity, generators, injectivity and cogenerators of finite-dimensional
modules and comodules. Every property is decided by a finite linear system:
a splitting of a free cover, a colinear retraction of the coaction into a
cofree comodule, or the joint kernel of all maps into the object.

At finite dimension flat means projective and coflat means injective, so
faithfully (co)flat is tested as projective generator (injective cogenerator).
@author: coideal developers
'''

# Imports
from collections import OrderedDict
from random import Random
from typing import Any, Dict, List, Optional, Tuple

# coideal Imports
from coideal.algebra.exactla import Matrix, Subspace, kernel, kron, solve, unit_vector
from coideal.algebra.hopfcore import FiniteAlgebra, FiniteCoalgebra, FiniteHopfAlgebra, Side
from coideal.algebra.correspondence import CoidealSubalgebra, FactorCoalgebra
from coideal.algebra.hopfmod import ComoduleStr, HopfModule, ModuleStr, morphisms
from coideal.algebra.hopfmod.structures import vectorize
from coideal.defaults import constants
from coideal.utils import logging

# Random candidates tried per generator before the unit vectors
GENERIC_CANDIDATES = 4


class TraceIdeal(object):
    '''
    T_M = Σ f(M) over all f ∈ Hom_A(M, A), a two-sided ideal of A in the
    coordinates of A. costable is None when M is not known to be a Hopf module.
    '''

    def __init__(self, space: Subspace, costable: Optional[bool]=None) -> None:
        self.space = space
        self.costable = costable

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_whole(self) -> bool:
        return self.space.dim == self.space.ambient_dim

    def to_json(self) -> Dict[str, Any]:
        return {'dim': self.dim, 'basis': self.space.to_json(), 'costable': self.costable}

    def __repr__(self) -> str:
        return f'TraceIdeal(dim={self.dim} of {self.space.ambient_dim}, costable={self.costable})'


def comodule_as_module(V: ComoduleStr) -> ModuleStr:
    '''A right C-comodule as a left C*-module, a left one as a right C*-module'''
    return V.as_module()


def _free_module(M: ModuleStr, rank: int) -> ModuleStr:
    '''R^rank with R acting by multiplication on each copy, index (k, j) -> k * dim R + j'''
    regular = ModuleStr.regular(M.algebra, M.side)
    identity = Matrix.identity(M.field, rank)
    return ModuleStr(M.algebra, M.side, [kron(identity, m) for m in regular.matrices], rank * M.algebra.dim, M.ring)


def _cover_map(M: ModuleStr, generators: List[List]) -> Matrix:
    '''R^r → M sending the k-th copy of e_j to e_j·g_k (resp. g_k·e_j)'''
    columns = []
    for g in generators:
        for m in M.matrices:
            columns.append(m.apply(g))
    return Matrix.from_columns(M.field, M.dim, columns)


def _submodule(M: ModuleStr, vectors: List[List]) -> Subspace:
    '''The submodule generated by the vectors: the span of their images under the basis of R'''
    return Subspace.span(M.field, M.dim, [list(v) for v in vectors] + [m.apply(v) for v in vectors for m in M.matrices])


def _generators(M: ModuleStr) -> List[List]:
    '''
    Grows a generating set greedily: every round adds, among a few seeded random
    vectors and the unit vectors off the pivots of the current submodule, the one
    generating the largest submodule. Generators made redundant by later ones are
    dropped at the end.
    '''
    field, n = M.field, M.dim
    rng = Random(f'{n}/{M.algebra.dim}')
    box = field.box(constants.COEFFICIENT_BOX)
    generators: List[List] = []
    generated = Subspace.zero(field, n)
    while generated.dim < n:
        candidates = [[rng.choice(box) for _ in range(n)] for _ in range(GENERIC_CANDIDATES)]
        candidates += [unit_vector(field, n, i) for i in generated.free_axes]
        best, grown = None, generated
        for v in candidates:
            space = generated + _submodule(M, [v])
            if space.dim > grown.dim:
                best, grown = v, space
                if grown.dim == n:
                    break
        generators.append(best)
        generated = grown
    for g in list(reversed(generators)):
        rest = [h for h in generators if h is not g]
        if _submodule(M, rest).dim == n:
            generators = rest
    return generators


def free_cover(M: ModuleStr) -> Tuple[ModuleStr, Matrix]:
    '''
    A surjection φ: F = R^r → M from a free module on an irredundant generating set.
    Over a local algebra every irredundant generating set is minimal, so r is the
    least number of generators of M. Over other algebras the greedy choice of
    generic generators may exceed that number; the excess is a projective summand
    of ker φ, which free_resolution ends on instead of covering it again.
    '''
    generators = _generators(M)
    return _free_module(M, len(generators)), _cover_map(M, generators)


def cover_splits(M: ModuleStr, F: ModuleStr, cover: Matrix) -> bool:
    '''A module map s: M → F with cover∘s = id exists'''
    sections = morphisms(M, F)
    if not sections:
        return False
    system = Matrix.from_columns(M.field, M.dim * M.dim, [vectorize(cover @ s) for s in sections])
    return solve(system, vectorize(Matrix.identity(M.field, M.dim))) is not None


def is_projective(M: ModuleStr) -> bool:
    '''
    M is projective iff its free cover φ: F → M admits a module map s with φs = id
    '''
    if M.dim == 0:
        return True
    F, cover = free_cover(M)
    split = cover_splits(M, F, cover)
    logging.getLogger().debug(f'Projectivity of {M}: cover of rank {F.dim // M.algebra.dim}, split {split}')
    return split


def _trace(M: ModuleStr) -> Subspace:
    regular = ModuleStr.regular(M.algebra, M.side)
    vectors = []
    for f in morphisms(M, regular):
        vectors.extend(f.columns())
    return Subspace.span(M.field, M.algebra.dim, vectors)


def _costable(H: FiniteHopfAlgebra, ring: Subspace, trace: Subspace) -> bool:
    '''Δ(T) ⊆ T⊗H for the trace ideal written in H'''
    inside = trace.image_under(ring.inclusion())
    target = inside.tensor(Subspace.whole(H.field, H.dim))
    return all(target.contains(H.coproduct_vector(t)) for t in inside.rows)


def is_generator(M, H: Optional[FiniteHopfAlgebra]=None) -> Tuple[bool, TraceIdeal]:
    '''
    M generates the module category of its side iff the trace ideal is all of A.
    For a Hopf module (or when H is given for a module over a subalgebra of H)
    the trace ideal's stability under Δ is recorded as well.
    '''
    if isinstance(M, HopfModule):
        H, M = M.H, M.module
    trace = _trace(M)
    costable = None
    if H is not None and M.ring is not None:
        costable = _costable(H, M.ring, trace)
    result = TraceIdeal(trace, costable)
    return result.is_whole, result


def is_semisimple(R: FiniteAlgebra) -> bool:
    '''
    R is separable (hence semisimple) iff there is e ∈ R⊗R with
    (a⊗1)e = e(1⊗a) for all a and μ(e) = 1. Over ℚ and GF(p) both notions agree.
    '''
    field, d = R.field, R.dim
    identity = Matrix.identity(field, d)
    blocks = []
    for i in range(d):
        a = R.basis_vector(i)
        blocks.append(kron(R.left_matrix(a), identity) - kron(identity, R.right_matrix(a)))
    blocks.append(R.mult_matrix())
    system = Matrix.vstack(*blocks)
    rhs = [field.zero] * (d * d * d) + list(R.unit)
    return solve(system, rhs) is not None


def _cofree(V: ComoduleStr) -> ComoduleStr:
    '''V⊗C with id⊗Δ for a right comodule, C⊗V with Δ⊗id for a left one'''
    identity = Matrix.identity(V.field, V.dim)
    delta = V.coalgebra.comult_matrix()
    coaction = kron(identity, delta) if V.side is Side.RIGHT else kron(delta, identity)
    return ComoduleStr(V.coalgebra, V.side, coaction)


def is_injective_comodule(V: ComoduleStr) -> bool:
    '''
    V is injective iff ρ: V → V⊗C (a colinear embedding into a cofree comodule)
    has a colinear retraction
    '''
    if V.dim == 0:
        return True
    cofree = _cofree(V)
    retractions = morphisms(cofree, V)
    if not retractions:
        return False
    system = Matrix.from_columns(V.field, V.dim * V.dim, [vectorize(r @ V.coaction) for r in retractions])
    return solve(system, vectorize(Matrix.identity(V.field, V.dim))) is not None


def is_cogenerator(coalgebra: FiniteCoalgebra, V: ComoduleStr) -> bool:
    '''
    V cogenerates iff C embeds colinearly into a finite power of V, i.e. the maps
    C → V have no common kernel. Such an embedding splits since C is injective.
    '''
    field, k = coalgebra.field, coalgebra.dim
    regular = ComoduleStr.regular(coalgebra, V.side)
    common = Subspace.whole(field, k)
    for f in morphisms(regular, V):
        inclusion = common.inclusion()
        common = kernel(f @ inclusion).image_under(inclusion)
        if common.dim == 0:
            break
    return common.dim == 0


def is_split_epimorphism(H: FiniteHopfAlgebra, C: FactorCoalgebra, side: Side=Side.RIGHT) -> bool:
    '''
    π: H → C has a colinear section, H coacted on by (id⊗π)Δ (RIGHT) or (π⊗id)Δ (LEFT)
    '''
    side = Side(side)
    sections = morphisms(ComoduleStr.regular(C.coalgebra, side), ComoduleStr.over_factor(C, side))
    if not sections:
        return False
    system = Matrix.from_columns(H.field, C.dim * C.dim, [vectorize(C.proj @ s) for s in sections])
    return solve(system, vectorize(Matrix.identity(H.field, C.dim))) is not None


def faithfully_flat(H: FiniteHopfAlgebra, A: CoidealSubalgebra) -> 'OrderedDict[str, bool]':
    '''
    Projectivity and the generator property of H as a left and as a right A-module
    '''
    flags = OrderedDict()
    for side in (Side.LEFT, Side.RIGHT):
        M = ModuleStr.by_multiplication(H, A.space, side)
        flags[f'{side.value}_projective'] = is_projective(M)
        flags[f'{side.value}_generator'] = is_generator(M)[0]
    logging.getLogger().debug(f'Flatness of H over A (dim {A.dim}): {dict(flags)}')
    return flags


def faithfully_coflat(H: FiniteHopfAlgebra, C: FactorCoalgebra) -> 'OrderedDict[str, bool]':
    '''
    Injectivity and the cogenerator property of H as a left and as a right C-comodule
    '''
    flags = OrderedDict()
    for side in (Side.LEFT, Side.RIGHT):
        V = ComoduleStr.over_factor(C, side)
        flags[f'{side.value}_injective'] = is_injective_comodule(V)
        flags[f'{side.value}_cogenerator'] = is_cogenerator(C.coalgebra, V)
    logging.getLogger().debug(f'Coflatness of H over C (dim {C.dim}): {dict(flags)}')
    return flags
