'''
Homological statements about relative Hopf modules: the comodule structure on
Hom_A(M, N), sampled projectivity and injectivity of Hopf modules in the four
categories M_A^H, ᴴᶜM, ᴀM^H and ᴴMᶜ, and the transfer of (co)flatness
properties between A and C.
@author: coideal developers
'''

# Imports
from collections import OrderedDict, namedtuple
from random import Random
from typing import Callable, Dict, List, Optional, Tuple

# coideal Imports
from coideal.algebra.exactla import Matrix, kron
from coideal.algebra.hopfcore import FiniteHopfAlgebra, Side, Verdict
from coideal.algebra.correspondence import CoidealSubalgebra, FactorCoalgebra, coinvariants, factor_by_subalgebra
from coideal.algebra.hopfmod import (Carrier, Category, ComoduleStr, CotensorOverCoalgebra, HopfModule, ModuleStr, Pair, TakeuchiContext,
                                     TensorKind, coidealStructureError, decorate_tensor, generated_subobject, is_morphism, morphism_space,
                                     takeuchi_phi, takeuchi_psi)
from coideal.algebra.hopfmod.structures import as_matrix, vectorize
from coideal.algebra.homology.modules import (faithfully_coflat, faithfully_flat, is_generator, is_injective_comodule, is_projective,
                                              is_semisimple)
from coideal.defaults import constants
from coideal.utils import logging


HomComodule = namedtuple('HomComodule', ['comodule', 'inclusion', 'evaluation_colinear'])


def regular_hopf_module(H: FiniteHopfAlgebra) -> HopfModule:
    '''H in ᴴM^H by left multiplication and Δ'''
    return HopfModule(Category.HOPF_LEFT, ModuleStr.regular(H.algebra, Side.LEFT), ComoduleStr.regular(H.coalgebra, Side.RIGHT), H)


def subalgebra_hopf_module(H: FiniteHopfAlgebra, A: CoidealSubalgebra) -> HopfModule:
    '''A ∈ M_A^H by right multiplication and the restriction of Δ'''
    module = ModuleStr.by_multiplication(H, A.space, Side.RIGHT, A.space)
    coaction = kron(A.space.extraction(), Matrix.identity(H.field, H.dim)) @ H.comult_matrix() @ A.space.inclusion()
    return HopfModule(Category.HOPF_RIGHT, module, ComoduleStr(H.coalgebra, Side.RIGHT, coaction), H)


def hom_comodule(A: CoidealSubalgebra, M: HopfModule, N: HopfModule) -> HomComodule:
    '''
    Hom_A(M, N) for M, N ∈ M_A^H as a right H-comodule: inside Hom(M, N) the
    coaction is determined by f₀(m)⊗f₁ = f(m₀)₀⊗f(m₀)₁S(m₁). Maps are vectorized
    at p * dim M + i. evaluation_colinear records whether Hom_A(M, N)⊗M → N is colinear.
    '''
    for X in (M, N):
        if not isinstance(X, HopfModule) or X.category is not Category.HOPF_RIGHT or X.ring != A.space:
            raise coidealStructureError('expects Hopf modules in M_A^H')
    H, field, n = M.H, M.field, M.H.dim
    dM, dN = M.dim, N.dim
    antipode = H.antipode.columns()
    products = [[[(h, z) for h, z in enumerate(H.multiply(H.basis_vector(d), antipode[c])) if z] for c in range(n)] for d in range(n)]
    incoming: List[List[Tuple[int, int, object]]] = [[] for _ in range(dM)]
    for q in range(dM):
        for i, c, x in M.comodule.terms(q):
            incoming[i].append((q, c, x))
    outgoing = [N.comodule.terms(p) for p in range(dN)]
    columns = []
    for p in range(dN):
        for i in range(dM):
            column: Dict[int, object] = {}
            for q, c, x in incoming[i]:
                for p2, d, y in outgoing[p]:
                    for h, z in products[d][c]:
                        index = (p2 * dM + q) * n + h
                        column[index] = column.get(index, field.zero) + x * y * z
            columns.append(column)
    rho = Matrix.from_columns(field, dN * dM * n, columns)

    space = morphism_space(M.module, N.module)
    if space.dim == 0:
        logging.getLogger().debug('Hom_A(M, N) vanishes')
        return HomComodule(None, None, True)
    carrier = Carrier.sub(space)
    identity = Matrix.identity(field, n)
    restricted = kron(carrier.read, identity) @ rho @ carrier.write
    if kron(carrier.write, identity) @ restricted != rho @ carrier.write:
        raise coidealStructureError('Hom_A(M, N) is no subcomodule of Hom(M, N)')
    comodule = ComoduleStr(H.coalgebra, Side.RIGHT, restricted)

    maps = [as_matrix(field, v, dN, dM) for v in space.rows]
    evaluation = Matrix.from_columns(field, dN, [f.column(q) for f in maps for q in range(dM)])
    tensor = decorate_tensor(TensorKind.COMODULE, H, comodule, M.comodule)
    colinear = is_morphism(evaluation, tensor, N.comodule)
    return HomComodule(comodule, carrier.write, colinear)


class HopfModuleSampler(object):
    '''
    Random objects of the four categories: decorated tensor products and functor
    values of small modules and comodules, followed by one random subobject or
    quotient step
    '''

    def __init__(self, ctx: TakeuchiContext, rng: Random) -> None:
        self.ctx = ctx
        self.rng = rng
        self.H = ctx.H
        self.A = ctx.A
        self.C = ctx.C
        self.box = ctx.field.box(constants.COEFFICIENT_BOX)
        self.H_hopf = regular_hopf_module(self.H)
        self.A_hopf = subalgebra_hopf_module(self.H, self.A)

    @property
    def logger(self):
        '''The logger of this class'''
        return logging.getLogger()

    def vector(self, dim: int) -> List:
        v = [self.rng.choice(self.box) for _ in range(dim)]
        if not any(v):
            v[self.rng.randrange(dim)] = self.ctx.field.one
        return v

    def perturb(self, X):
        '''X, a generated subobject of X or the quotient of X by one'''
        if X.dim == 0:
            return X
        step = self.rng.choice(('keep', 'sub', 'quotient'))
        if step == 'keep':
            return X
        space = generated_subobject(X, [self.vector(X.dim)])
        if step == 'sub':
            return X.restrict(Carrier.sub(space))
        if space.dim == X.dim:
            return X
        return X.restrict(Carrier.quotient(space))

    def bounded(self, X, limit: Optional[int]=None):
        '''Cuts X down to generated subobjects until it fits the limit (SAMPLE_MAX_DIM), None if it cannot'''
        limit = constants.SAMPLE_MAX_DIM if limit is None else limit
        for _ in range(4):
            if X.dim <= limit:
                return X
            space = generated_subobject(X, [self.vector(X.dim)])
            if space.dim == X.dim:
                continue
            X = X.restrict(Carrier.sub(space))
        return X if X.dim <= limit else None

    def h_comodule(self) -> ComoduleStr:
        '''A right H-comodule'''
        H = self.H
        choice = self.rng.choice(('regular', 'trivial', 'sub'))
        if choice == 'trivial':
            return ComoduleStr.trivial(H.coalgebra, Side.RIGHT, H.unit, self.rng.choice((1, 2)))
        regular = ComoduleStr.regular(H.coalgebra, Side.RIGHT)
        if choice == 'regular':
            return regular
        return regular.restrict(Carrier.sub(generated_subobject(regular, [self.vector(H.dim)])))

    def h_module(self) -> ModuleStr:
        '''A left H-module'''
        H = self.H
        choice = self.rng.choice(('regular', 'trivial', 'sub'))
        if choice == 'trivial':
            return ModuleStr.trivial(H.algebra, Side.LEFT, H.counit, self.rng.choice((1, 2)))
        regular = ModuleStr.regular(H.algebra, Side.LEFT)
        if choice == 'regular':
            return regular
        return regular.restrict(Carrier.sub(generated_subobject(regular, [self.vector(H.dim)])))

    def c_comodule(self, side: Side=Side.RIGHT) -> ComoduleStr:
        '''A right (or left) C-comodule'''
        C = self.C
        choice = self.rng.choice(('regular', 'trivial', 'sub'))
        if choice == 'regular':
            return ComoduleStr.regular(C.coalgebra, side)
        if choice == 'trivial':
            return ComoduleStr.trivial(C.coalgebra, side, C.grouplike, self.rng.choice((1, 2)))
        over = ComoduleStr.over_factor(C, side)
        return over.restrict(Carrier.sub(generated_subobject(over, [self.vector(over.dim)])))

    def a_module(self, side: Side=Side.LEFT) -> ModuleStr:
        '''A left (or right) A-module'''
        H, A = self.H, self.A
        choice = self.rng.choice(('regular', 'trivial', 'H', 'quotient'))
        if choice == 'trivial':
            character = [H.counit_of(a) for a in A.space.rows]
            return ModuleStr.trivial(A.algebra, side, character, self.rng.choice((1, 2)), A.space)
        if choice == 'H':
            return ModuleStr.by_multiplication(H, A.space, side)
        regular = ModuleStr.by_multiplication(H, A.space, side, A.space)
        if choice == 'regular':
            return regular
        space = generated_subobject(regular, [self.vector(regular.dim)])
        return regular if space.dim == regular.dim else regular.restrict(Carrier.quotient(space))

    def right_hopf(self) -> Tuple[str, HopfModule]:
        '''An object of M_A^H: U⊗A or V□_C H'''
        if self.rng.random() < 0.5:
            return 'U⊗A', decorate_tensor(TensorKind.COMODULE, self.H, self.h_comodule(), self.A_hopf)
        return 'V□_C H', takeuchi_psi(self.ctx, Pair.HOPF_RIGHT, self.c_comodule())

    def left_hopf(self) -> Tuple[str, HopfModule]:
        '''An object of ᴀM^H: V⊗H'''
        return 'V⊗H', decorate_tensor(TensorKind.MODULE, self.H, self.H_hopf, self.a_module())

    def induced_left(self) -> Tuple[str, HopfModule]:
        '''An object of ᴴᶜM: H⊗_A V'''
        return 'H⊗_A V', takeuchi_phi(self.ctx, Pair.INDUCED_LEFT, self.a_module())

    def induced_right(self) -> Tuple[str, HopfModule]:
        '''An object of ᴴMᶜ: H⊗W'''
        return 'H⊗W', decorate_tensor(TensorKind.COMODULE, self.H, self.H_hopf, self.c_comodule(), self.C)

    def sample(self, build: Callable[[], Tuple[str, HopfModule]], limit: Optional[int]=None) -> Optional[Tuple[str, HopfModule]]:
        origin, X = build()
        X = self.bounded(self.perturb(X), limit)
        if X is None:
            self.logger.debug(f'Skipped a sampled {origin} beyond dimension {limit or constants.SAMPLE_MAX_DIM}')
            return None
        return origin, X


CONDITIONS = OrderedDict([
    ('hopf_right_projective', ('right_hopf', lambda X: is_projective(X.module))),
    ('induced_left_injective', ('induced_left', lambda X: is_injective_comodule(X.comodule))),
    ('hopf_left_projective', ('left_hopf', lambda X: is_projective(X.module))),
    ('induced_right_injective', ('induced_right', lambda X: is_injective_comodule(X.comodule))),
])


def conditions_0x(H: FiniteHopfAlgebra, A: CoidealSubalgebra, sample_size: Optional[int]=None, rng: Optional[Random]=None) -> 'OrderedDict[str, Verdict]':
    '''
    Samples Hopf modules in M_A^H, ᴴᶜM, ᴀM^H and ᴴMᶜ and tests whether they are
    projective over A (the module categories) or injective over C (the comodule
    categories). A passing verdict covers the samples only.
    '''
    sample_size = constants.SAMPLE_SIZE if sample_size is None else int(sample_size)
    rng = Random(constants.SEED) if rng is None else rng
    sampler = HopfModuleSampler(TakeuchiContext(H, A), rng)
    logger = logging.getLogger()
    verdicts = OrderedDict()
    for name, (category, test) in CONDITIONS.items():
        tested, verdict = 0, None
        for index in range(sample_size):
            try:
                sampled = sampler.sample(getattr(sampler, category))
            except coidealStructureError as e:
                logger.debug(f'Sample {index} of {name} could not be built: {e}')
                continue
            if sampled is None:
                continue
            origin, X = sampled
            tested += 1
            if not test(X):
                verdict = Verdict.failed({'sample': index, 'origin': origin, 'dim': X.dim}, f'{name} fails on a sampled {origin}')
                break
        verdicts[name] = verdict or Verdict.passed(f'{tested} sampled objects')
        logger.debug(f'Condition {name} over A of dim {A.dim}: {verdicts[name]}')
    return verdicts


def _implication(premise: bool, conclusion: bool, premise_name: str, conclusion_name: str) -> Verdict:
    if not premise:
        return Verdict.not_applicable(f'{premise_name} does not hold')
    return Verdict.of(conclusion, {premise_name: premise, conclusion_name: conclusion})


def transfer_implications(H: FiniteHopfAlgebra, A: CoidealSubalgebra, C: Optional[FactorCoalgebra]=None) -> 'OrderedDict[str, Verdict]':
    '''
    Properties of H over A passed to H over C = H/HA⁺, and properties of H over C
    passed to H over ᶜᵒCH:
        projective over A ⇒ cogenerator over C      generator over A ⇒ injective over C
        injective over C ⇒ generator over ᶜᵒCH      cogenerator over C ⇒ projective over ᶜᵒCH
    each on the left and on the right
    '''
    C = factor_by_subalgebra(H, A) if C is None else C
    flat = faithfully_flat(H, A)
    coflat = faithfully_coflat(H, C)
    if coinvariants(H, C, Side.RIGHT) == A.space:
        flat_coinvariants = flat
    else:
        flat_coinvariants = faithfully_flat(H, CoidealSubalgebra(H, coinvariants(H, C, Side.RIGHT), Side.RIGHT))
    verdicts = OrderedDict()
    for side in ('left', 'right'):
        pairs = ((flat, 'projective', coflat, 'cogenerator', ''), (flat, 'generator', coflat, 'injective', ''),
                 (coflat, 'injective', flat_coinvariants, 'generator', '_over_coinvariants'),
                 (coflat, 'cogenerator', flat_coinvariants, 'projective', '_over_coinvariants'))
        for source, premise, target, conclusion, suffix in pairs:
            p, c = f'{side}_{premise}', f'{side}_{conclusion}'
            verdicts[f'{p}_implies_{c}{suffix}'] = _implication(source[p], target[c], p, c + suffix)
    return verdicts


def generator_criterion(H: FiniteHopfAlgebra, A: CoidealSubalgebra, M: HopfModule) -> Verdict:
    '''
    When H is a generator in ᴀM, M ∈ M_A^H generates M_A iff Hom_A(M, A) ≠ 0;
    the trace ideal of M is stable under Δ in any case
    '''
    if not is_generator(ModuleStr.by_multiplication(H, A.space, Side.LEFT))[0]:
        return Verdict.not_applicable('H is no generator in ᴀM')
    generates, trace = is_generator(M)
    regular = ModuleStr.by_multiplication(H, A.space, Side.RIGHT, A.space)
    nonzero = morphism_space(M.module, regular).dim > 0
    witness = {'generator': generates, 'hom_nonzero': nonzero, 'trace': trace.to_json()}
    return Verdict.of(generates == nonzero and trace.costable is not False, witness)


def nonvanishing_check(H: FiniteHopfAlgebra, C: FactorCoalgebra, V: ComoduleStr, U: ComoduleStr) -> Verdict:
    '''
    V□_C H ≠ 0 for a right C-comodule V and a right H-comodule U whenever a
    nonzero colinear map U → V exists, or a nonzero one V → U exists and H is
    injective as a left C-comodule
    '''
    U_C = ComoduleStr(C.coalgebra, Side.RIGHT, kron(Matrix.identity(H.field, U.dim), C.proj) @ U.coaction)
    into = morphism_space(U_C, V).dim > 0
    out_of = morphism_space(V, U_C).dim > 0
    H_left = ComoduleStr.over_factor(C, Side.LEFT)
    if not into and not (out_of and is_injective_comodule(H_left)):
        return Verdict.not_applicable('no nonzero colinear map in a usable direction')
    dim = CotensorOverCoalgebra(V, H_left).dim
    return Verdict.of(dim > 0, {'maps_into': into, 'maps_out_of': out_of, 'cotensor_dim': dim})


def hom_adjunction(A: CoidealSubalgebra, V: ModuleStr, M: HopfModule) -> Verdict:
    '''
    For M ∈ ᴀM^H and a left A-module V, composing with id⊗ε maps the colinear
    A-maps M → V⊗H bijectively onto the A-maps M → V
    '''
    H = M.H
    induced = decorate_tensor(TensorKind.MODULE, H, regular_hopf_module(H), V)
    colinear = morphism_space(M, induced)
    linear = morphism_space(M.module, V)
    collapse = kron(Matrix.identity(H.field, V.dim), H.counit_matrix())
    images = [vectorize(collapse @ as_matrix(H.field, f, induced.dim, M.dim)) for f in colinear.rows]
    rank = Matrix.from_columns(H.field, V.dim * M.dim, images).rank() if images else 0
    return Verdict.of(colinear.dim == linear.dim == rank, {'colinear': colinear.dim, 'linear': linear.dim, 'rank': rank})


def semisimple_conditions(H: FiniteHopfAlgebra, A: CoidealSubalgebra, sample_size: Optional[int]=None, rng: Optional[Random]=None) -> Verdict:
    '''
    If H is faithfully flat over A on both sides and A is semisimple, every sampled
    Hopf module is projective or injective as required. Higher weak global
    dimension of A is reported as unknown.
    '''
    flat = faithfully_flat(H, A)
    if not all(flat.values()):
        return Verdict.not_applicable('H is not faithfully flat over A on both sides')
    if not is_semisimple(A.algebra):
        return Verdict.not_applicable('weak global dimension of A unknown')
    verdicts = conditions_0x(H, A, sample_size, rng)
    failing = [name for name, verdict in verdicts.items() if not verdict.ok]
    return Verdict.of(not failing, {'failing': failing})
