'''
Free resolutions of finite-dimensional modules and the derived functors
Tor, Ext and Cotor computed from them.

A resolution ⋯ → F₁ → F₀ → M → 0 is built by covering M, then covering the
kernel of each differential in turn. It stops at a projective kernel, which
becomes its last term, or when the truncation degree max(TRUNCATION_MIN, 2·dim R)
is reached. Over a semisimple algebra every resolution is M itself. Cotor over C
is computed as Ext over the dual algebra C*.
@author: coideal developers
'''

# Imports
from collections import namedtuple
from typing import Dict, List, Optional, Tuple

# coideal Imports
from coideal.algebra.exactla import Matrix, kernel, kron
from coideal.algebra.hopfcore import FiniteAlgebra, Side, Verdict
from coideal.algebra.hopfmod import Carrier, ComoduleStr, ModuleStr, TensorOverAlgebra, coidealCategoryMismatch, morphism_space
from coideal.algebra.hopfmod.structures import as_matrix, vectorize
from coideal.algebra.homology.modules import cover_splits, free_cover, is_semisimple
from coideal.defaults import constants
from coideal.utils.exceptions import coidealBaseException
from coideal.utils import logging


class coidealDegreeError(coidealBaseException):
    '''
    Gets thrown for negative homological degrees
    '''
    template = 'Invalid homological degree ({error})'


ResolutionStep = namedtuple('ResolutionStep', ['module', 'differential', 'rank'])


class Resolution(object):
    '''
    steps[i].module is F_i; steps[i].differential is d_i: F_i → F_{i-1} for i ≥ 1
    and the augmentation F₀ → M for i = 0. All terms are free except possibly the
    last one, a projective kernel. complete is True when the resolution ended
    before the truncation degree.
    '''

    def __init__(self, M: ModuleStr, steps: List[ResolutionStep], truncation: int, complete: bool) -> None:
        self.M = M
        self.steps = steps
        self.truncation = truncation
        self.complete = complete
        self.verdict = self._validate()

    @property
    def augmentation(self) -> Optional[Matrix]:
        return self.steps[0].differential if self.steps else None

    @property
    def length(self) -> int:
        return len(self.steps)

    def module(self, i: int) -> Optional[ModuleStr]:
        '''F_i, or None when it vanishes'''
        return self.steps[i].module if 0 <= i < len(self.steps) else None

    def differential(self, i: int) -> Optional[Matrix]:
        '''d_i for i ≥ 1, or None when it is a map from or to zero'''
        return self.steps[i].differential if 1 <= i < len(self.steps) else None

    def rank(self, i: int) -> int:
        '''The number of generators of F_i, its rank when it is free'''
        return self.steps[i].rank if 0 <= i < len(self.steps) else 0

    def _validate(self) -> Verdict:
        '''dd = 0 and exactness at every degree below the last computed one'''
        if not self.steps:
            return Verdict.passed('zero module')
        if self.augmentation.rank() != self.M.dim:
            return Verdict.failed({'degree': 0, 'reason': 'augmentation is not onto'})
        maps = [self.augmentation] + [self.differential(i) for i in range(1, len(self.steps))]
        for i in range(1, len(maps)):
            if not (maps[i - 1] @ maps[i]).is_zero():
                return Verdict.failed({'degree': i, 'reason': 'differentials do not compose to zero'})
        for i in range(len(maps) - 1):
            source = maps[i].cols
            if source - maps[i].rank() != maps[i + 1].rank():
                return Verdict.failed({'degree': i, 'reason': 'not exact'})
        suffix = '' if self.complete else ' (truncated)'
        return Verdict.passed(f'exact up to degree {len(maps) - 1}{suffix}')

    def to_json(self):
        return {'ranks': [self.rank(i) for i in range(self.length)], 'complete': self.complete,
                'truncation': self.truncation, 'verdict': self.verdict.to_json()}

    def __repr__(self) -> str:
        return f'Resolution(ranks={[self.rank(i) for i in range(self.length)]}, complete={self.complete})'


def truncation_degree(M: ModuleStr) -> int:
    return max(constants.TRUNCATION_MIN, 2 * M.algebra.dim)


# Semisimplicity of the algebras resolved over, keyed by their structure constants
_SEMISIMPLE: Dict[Tuple, bool] = {}


def _semisimple(R: FiniteAlgebra) -> bool:
    key = (R.field.tag, repr(R.mult), repr(R.unit))
    if key not in _SEMISIMPLE:
        _SEMISIMPLE[key] = is_semisimple(R)
    return _SEMISIMPLE[key]


def _step(X: ModuleStr, write: Matrix, semisimple: bool) -> Tuple[ResolutionStep, bool]:
    '''
    The next term for the module X sitting in the previous term through write:
    X itself when it is projective (the resolution ends), its free cover otherwise
    '''
    F, cover = free_cover(X)
    rank = F.dim // X.algebra.dim if X.algebra.dim else 0
    if semisimple or cover_splits(X, F, cover):
        return ResolutionStep(X, write, rank), True
    return ResolutionStep(F, write @ cover, rank), False


def free_resolution(M: ModuleStr, length: Optional[int]=None) -> Resolution:
    '''
    Resolves M by F₀, …, F_length (at most). Each F_i is the free cover of the
    kernel of the previous differential, or that kernel itself when it is
    projective, which completes the resolution. A projective M is resolved by
    itself alone.
    '''
    length = truncation_degree(M) if length is None else int(length)
    steps: List[ResolutionStep] = []
    if M.dim == 0:
        return Resolution(M, steps, length, True)
    semisimple = _semisimple(M.algebra)
    X, write = M, Matrix.identity(M.field, M.dim)
    complete = False
    for degree in range(length + 1):
        step, projective = _step(X, write, semisimple)
        steps.append(step)
        if projective:
            complete = True
            break
        K = kernel(step.differential)
        if K.dim == 0:
            complete = True
            break
        carrier = Carrier.sub(K)
        X, write = step.module.restrict(carrier), carrier.write
    resolution = Resolution(M, steps, length, complete)
    logging.getLogger().debug(f'Resolved {M}: {resolution}')
    if not resolution.verdict.ok:
        logging.getLogger().warning(f'Invalid resolution of {M}: {resolution.verdict.witness}')
    return resolution


def _homology(dims: List[int], ranks: List[int], i: int) -> int:
    '''dim of ker t_i / im t_{i+1} for a complex with t_i: X_i → X_{i-1}, ranks[0] = 0'''
    if i >= len(dims):
        return 0
    outgoing = ranks[i] if i < len(ranks) else 0
    incoming = ranks[i + 1] if i + 1 < len(ranks) else 0
    return dims[i] - outgoing - incoming


def _cohomology(dims: List[int], ranks: List[int], i: int) -> int:
    '''dim of ker δ^{i+1} / im δ^i for a complex with δ^i: X^{i-1} → X^i, ranks[0] = 0'''
    if i >= len(dims):
        return 0
    outgoing = ranks[i + 1] if i + 1 < len(ranks) else 0
    incoming = ranks[i] if i < len(ranks) else 0
    return dims[i] - outgoing - incoming


def _check_degree(top: int) -> int:
    top = int(top)
    if top < 0:
        raise coidealDegreeError(top)
    return top


def tor_series(M: ModuleStr, V: ModuleStr, top: int) -> List[int]:
    '''
    dim Tor_i(M, V) for i = 0, …, top, for a right module M and a left module V
    over the same algebra, from one free resolution of V tensored with M
    '''
    top = _check_degree(top)
    if M.side is not Side.RIGHT or V.side is not Side.LEFT:
        raise coidealCategoryMismatch('Tor needs a right and a left module')
    if M.dim == 0:
        return [0] * (top + 1)
    resolution = free_resolution(V, top + 1)
    tensors = [TensorOverAlgebra(M, resolution.module(degree)) for degree in range(min(top + 2, resolution.length))]
    I_M = Matrix.identity(M.field, M.dim)
    dims = [t.dim for t in tensors]
    ranks = [0]
    for degree in range(1, len(tensors)):
        induced = tensors[degree - 1].projection @ kron(I_M, resolution.differential(degree)) @ tensors[degree].section
        ranks.append(induced.rank())
    return [_homology(dims, ranks, i) for i in range(top + 1)]


def tor(M: ModuleStr, V: ModuleStr, i: int) -> int:
    '''dim Tor_i(M, V) for a right module M and a left module V over the same algebra'''
    return tor_series(M, V, i)[i]


def ext_series(M: ModuleStr, V: ModuleStr, top: int) -> List[int]:
    '''
    dim Ext^i(M, V) for i = 0, …, top, for modules of the same side, from one
    free resolution of M and the module maps out of it
    '''
    top = _check_degree(top)
    if M.side is not V.side:
        raise coidealCategoryMismatch('Ext needs two modules of the same side')
    if V.dim == 0:
        return [0] * (top + 1)
    resolution = free_resolution(M, top + 1)
    homs = [morphism_space(resolution.module(degree), V) for degree in range(min(top + 2, resolution.length))]
    dims = [h.dim for h in homs]
    ranks = [0]
    for degree in range(1, len(homs)):
        # f ↦ f∘d from Hom(F_{degree-1}, V) to Hom(F_degree, V)
        d = resolution.differential(degree)
        source, target = homs[degree - 1], homs[degree]
        rows, cols = V.dim, resolution.module(degree - 1).dim
        columns = [target.coordinates(vectorize(as_matrix(V.field, f, rows, cols) @ d)) for f in source.rows]
        ranks.append(Matrix.from_columns(V.field, target.dim, columns).rank() if columns and target.dim else 0)
    return [_cohomology(dims, ranks, i) for i in range(top + 1)]


def ext(M: ModuleStr, V: ModuleStr, i: int) -> int:
    '''dim Ext^i(M, V) for modules of the same side'''
    return ext_series(M, V, i)[i]


def dual_comodule_module(V: ComoduleStr) -> ModuleStr:
    '''V* for a right comodule V as a right C*-module through the transposed components'''
    if V.side is not Side.RIGHT:
        raise coidealCategoryMismatch('expects a right comodule')
    return ModuleStr(V.coalgebra.dual_algebra(), Side.RIGHT, [T.transpose() for T in V.components()], V.dim)


def cotor_series(V: ComoduleStr, W: ComoduleStr, top: int) -> List[int]:
    '''
    dim Cotor^i_C(V, W) for i = 0, …, top, for a right comodule V and a left
    comodule W, computed as Ext of right C*-modules between V* and W, since
    V□_C W ≅ Hom^C(V*, W)
    '''
    if V.side is not Side.RIGHT or W.side is not Side.LEFT:
        raise coidealCategoryMismatch('Cotor needs a right and a left comodule')
    return ext_series(dual_comodule_module(V), W.as_module(), top)


def cotor(V: ComoduleStr, W: ComoduleStr, i: int) -> int:
    '''dim Cotor^i_C(V, W) for a right comodule V and a left comodule W'''
    return cotor_series(V, W, i)[i]
