'''
Tensor products over a subalgebra, cotensor products over a coalgebra and
the decorated tensor products by H-modules and H-comodules.
@author: coideal developers
'''

# Imports
from enum import Enum
from typing import Dict, Optional, Union

# coideal Imports
from coideal.algebra.exactla import Field, Matrix, Scalar, Subspace, equalizer, kron
from coideal.algebra.hopfcore import FiniteHopfAlgebra, Side
from coideal.algebra.correspondence import FactorCoalgebra
from coideal.algebra.hopfmod.structures import (Carrier, Category, ComoduleStr, HopfModule, ModuleStr, coidealCategoryMismatch,
                                                coidealStructureError, split_coproduct)


class TensorKind(Enum):
    COMODULE = 'comodule'                       # u⊗v ↦ (u₀⊗v₀)⊗u₁v₁
    ANTIPODE_COMODULE = 'antipode-comodule'     # w⊗u ↦ S(u₁)w₋₁⊗(w₀⊗u₀)
    MODULE = 'module'                           # a·(v⊗u) = a₁v⊗a₂u
    ANTIPODE_MODULE = 'antipode-module'         # (u⊗w)·a = S(a₂)u⊗wa₁


def coalgebra_action(H: FiniteHopfAlgebra, factor: Optional[FactorCoalgebra], i: int) -> Matrix:
    '''Left action of e_i on C (on H itself when no factor coalgebra is given)'''
    if factor is None:
        return H.left_matrix(H.basis_vector(i))
    return Matrix.from_columns(H.field, factor.dim, factor.action[i])


class TensorOverAlgebra(object):
    '''
    M⊗_R N for a right R-module M and a left R-module N: the quotient of M⊗N by the
    relations m·r⊗n − m⊗r·n, index (m, n) -> m * dim N + n
    '''

    def __init__(self, M: ModuleStr, N: ModuleStr) -> None:
        if M.side is not Side.RIGHT or N.side is not Side.LEFT:
            raise coidealCategoryMismatch(f'tensor product of a {M.side.value} and a {N.side.value} module')
        if M.algebra.dim != N.algebra.dim or (M.ring is not None and N.ring is not None and M.ring != N.ring):
            raise coidealCategoryMismatch('modules over different algebras')
        self.M = M
        self.N = N
        field = M.field
        I_M, I_N = Matrix.identity(field, M.dim), Matrix.identity(field, N.dim)
        vectors = []
        for m_op, n_op in zip(M.matrices, N.matrices):
            vectors.extend((kron(m_op, I_N) - kron(I_M, n_op)).columns())
        self.relations = Subspace.span(field, M.dim * N.dim, vectors)
        self.carrier = Carrier.quotient(self.relations)

    @property
    def field(self) -> Field:
        return self.M.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def projection(self) -> Matrix:
        return self.carrier.read

    @property
    def section(self) -> Matrix:
        return self.carrier.write

    def induce(self, op: Matrix) -> Matrix:
        '''An operator on M⊗N preserving the relations, transported to M⊗_R N'''
        if not self.carrier.is_invariant(op):
            raise coidealStructureError('operator does not descend to the tensor product')
        return self.carrier.induce(op)

    def induce_coaction(self, coaction: Matrix, k: int, side: Side) -> Matrix:
        '''A coaction on M⊗N (right index x * k + c, left c * dim + x) descended to M⊗_R N'''
        identity = Matrix.identity(self.field, k)
        if Side(side) is Side.RIGHT:
            return kron(self.projection, identity) @ coaction @ self.section
        return kron(identity, self.projection) @ coaction @ self.section

    def __repr__(self) -> str:
        return f'TensorOverAlgebra(dim={self.dim} from {self.M.dim}x{self.N.dim})'


def tensor_over_A(M: ModuleStr, N: ModuleStr) -> TensorOverAlgebra:
    return TensorOverAlgebra(M, N)


class CotensorOverCoalgebra(object):
    '''
    V□_C W ⊆ V⊗W for a right C-comodule V and a left C-comodule W: the equalizer
    of ρ⊗id and id⊗λ
    '''

    def __init__(self, V: ComoduleStr, W: ComoduleStr) -> None:
        if V.side is not Side.RIGHT or W.side is not Side.LEFT:
            raise coidealCategoryMismatch(f'cotensor product of a {V.side.value} and a {W.side.value} comodule')
        if V.coalgebra.dim != W.coalgebra.dim:
            raise coidealCategoryMismatch('comodules over different coalgebras')
        self.V = V
        self.W = W
        field = V.field
        self.space = equalizer(kron(V.coaction, Matrix.identity(field, W.dim)), kron(Matrix.identity(field, V.dim), W.coaction))
        self.carrier = Carrier.sub(self.space)

    @property
    def field(self) -> Field:
        return self.V.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def inclusion(self) -> Matrix:
        return self.carrier.write

    @property
    def extraction(self) -> Matrix:
        return self.carrier.read

    def induce(self, op: Matrix) -> Matrix:
        '''An operator on V⊗W preserving the cotensor product, restricted to it'''
        if not self.carrier.is_invariant(op):
            raise coidealStructureError('operator does not preserve the cotensor product')
        return self.carrier.induce(op)

    def induce_coaction(self, coaction: Matrix, k: int, side: Side) -> Matrix:
        identity = Matrix.identity(self.field, k)
        if Side(side) is Side.RIGHT:
            read, write = kron(self.extraction, identity), kron(self.inclusion, identity)
        else:
            read, write = kron(identity, self.extraction), kron(identity, self.inclusion)
        restricted = read @ coaction @ self.inclusion
        if write @ restricted != coaction @ self.inclusion:
            raise coidealStructureError('coaction does not preserve the cotensor product')
        return restricted

    def __repr__(self) -> str:
        return f'CotensorOverCoalgebra(dim={self.dim} in {self.V.dim}x{self.W.dim})'


def cotensor_over_C(V: ComoduleStr, W: ComoduleStr) -> CotensorOverCoalgebra:
    return CotensorOverCoalgebra(V, W)


Decorated = Union[ModuleStr, ComoduleStr, HopfModule]


def _comodule_part(X: Decorated) -> ComoduleStr:
    return X.comodule if isinstance(X, HopfModule) else X


def _module_part(X: Decorated) -> ModuleStr:
    return X.module if isinstance(X, HopfModule) else X


def act_by(module: ModuleStr, h) -> Matrix:
    '''The action of h ∈ H on a module over H itself or over a subalgebra of H'''
    return module.act(h) if module.ring is None else module.act_element(h)


def _tensor_comodule(H: FiniteHopfAlgebra, U: Decorated, X: Decorated, factor: Optional[FactorCoalgebra]) -> Decorated:
    '''U⊗X with u⊗x ↦ (u₀⊗x₀)⊗u₁·x₁ for a right H-comodule U and a right C-comodule X'''
    field = H.field
    u_com, x_com = _comodule_part(U), _comodule_part(X)
    if u_com.side is not Side.RIGHT or x_com.side is not Side.RIGHT or u_com.coalgebra.dim != H.dim:
        raise coidealCategoryMismatch('needs a right H-comodule and a right comodule')
    du, dx, k = u_com.dim, x_com.dim, x_com.coalgebra.dim
    acting = [coalgebra_action(H, factor, j).sparse_columns() for j in range(H.dim)]
    columns = []
    for u in range(du):
        u_terms = u_com.terms(u)
        for x in range(dx):
            column: Dict[int, Scalar] = {}
            for u2, j, a in u_terms:
                for x2, c, b in x_com.terms(x):
                    for c2, d in acting[j][c]:
                        index = (u2 * dx + x2) * k + c2
                        column[index] = column.get(index, field.zero) + a * b * d
            columns.append(column)
    comodule = ComoduleStr(x_com.coalgebra, Side.RIGHT, Matrix.from_columns(field, du * dx * k, columns))
    if isinstance(X, HopfModule) and isinstance(U, HopfModule):
        raise coidealCategoryMismatch('only one tensorand may carry a module structure')
    if isinstance(X, HopfModule):
        # the acting algebra passes through to X
        I_U = Matrix.identity(field, du)
        module = ModuleStr(X.module.algebra, X.module.side, [kron(I_U, m) for m in X.module.matrices], du * dx, X.module.ring)
        return HopfModule(X.category, module, comodule, H, X.factor)
    if isinstance(U, HopfModule):
        I_X = Matrix.identity(field, dx)
        module = ModuleStr(U.module.algebra, U.module.side, [kron(m, I_X) for m in U.module.matrices], du * dx, U.module.ring)
        return HopfModule(Category.INDUCED_RIGHT, module, comodule, H, factor)
    return comodule


def _tensor_antipode_comodule(H: FiniteHopfAlgebra, W: ComoduleStr, U: Decorated, factor: Optional[FactorCoalgebra]) -> ComoduleStr:
    '''W⊗U with w⊗u ↦ S(u₁)·w₋₁⊗(w₀⊗u₀) for a left C-comodule W and a right H-comodule U'''
    field = H.field
    u_com = _comodule_part(U)
    if W.side is not Side.LEFT or u_com.side is not Side.RIGHT:
        raise coidealCategoryMismatch('needs a left comodule and a right H-comodule')
    dw, du, k = W.dim, u_com.dim, W.coalgebra.dim
    S = H.antipode
    acting = []
    for j in range(H.dim):
        total = Matrix.zeros(field, k, k)
        for i, s in enumerate(S.column(j)):
            if s:
                total = total + coalgebra_action(H, factor, i).scale(s)
        acting.append(total.sparse_columns())
    columns = []
    for w in range(dw):
        w_terms = W.terms(w)
        for u in range(du):
            column: Dict[int, Scalar] = {}
            for u2, j, a in u_com.terms(u):
                for w2, c, b in w_terms:
                    for c2, d in acting[j][c]:
                        index = c2 * (dw * du) + w2 * du + u2
                        column[index] = column.get(index, field.zero) + a * b * d
            columns.append(column)
    return ComoduleStr(W.coalgebra, Side.LEFT, Matrix.from_columns(field, k * dw * du, columns))


def _tensor_module(H: FiniteHopfAlgebra, V: ModuleStr, U: Decorated) -> Decorated:
    '''V⊗U with a·(v⊗u) = Σ a₁v⊗a₂u for a left A-module V and a left H-module U'''
    u_mod = _module_part(U)
    if V.side is not Side.LEFT or u_mod.side is not Side.LEFT or V.ring is None:
        raise coidealCategoryMismatch('needs a left module over a right coideal subalgebra and a left H-module')
    field = H.field
    matrices = []
    for a in V.ring.rows:
        total = Matrix.zeros(field, V.dim * u_mod.dim, V.dim * u_mod.dim)
        for leg, k in split_coproduct(H, a, True):
            total = total + kron(V.act_element(leg), act_by(u_mod, H.basis_vector(k)))
        matrices.append(total)
    module = ModuleStr(V.algebra, Side.LEFT, matrices, V.dim * u_mod.dim, V.ring)
    if isinstance(U, HopfModule):
        # V⊗U is a Hopf module through the coaction on U
        coaction = kron(Matrix.identity(field, V.dim), U.comodule.coaction)
        comodule = ComoduleStr(U.comodule.coalgebra, Side.RIGHT, coaction)
        return HopfModule(Category.HOPF_LEFT, module, comodule, H)
    return module


def _tensor_antipode_module(H: FiniteHopfAlgebra, U: ModuleStr, W: Decorated) -> ModuleStr:
    '''U⊗W with (u⊗w)·a = Σ S(a₂)u⊗w·a₁ for a left H-module U and a right A-module W'''
    w_mod = _module_part(W)
    if U.side is not Side.LEFT or w_mod.side is not Side.RIGHT or w_mod.ring is None:
        raise coidealCategoryMismatch('needs a left H-module and a right module over a right coideal subalgebra')
    field = H.field
    matrices = []
    for a in w_mod.ring.rows:
        total = Matrix.zeros(field, U.dim * w_mod.dim, U.dim * w_mod.dim)
        for leg, k in split_coproduct(H, a, True):
            total = total + kron(act_by(U, H.apply_antipode(H.basis_vector(k))), w_mod.act_element(leg))
        matrices.append(total)
    return ModuleStr(w_mod.algebra, Side.RIGHT, matrices, U.dim * w_mod.dim, w_mod.ring)


def decorate_tensor(kind: TensorKind, H: FiniteHopfAlgebra, U: Decorated, X: Decorated, factor: Optional[FactorCoalgebra]=None) -> Decorated:
    '''
    Structure tables of the decorated tensor products:
        COMODULE            U⊗X, U a right H-comodule, X a right C-comodule (or X ∈ M_A^H)
        ANTIPODE_COMODULE   X⊗U, X a left C-comodule, U a right H-comodule
        MODULE              X⊗U, X a left A-module, U a left H-module (or U ∈ ᴴM^H)
        ANTIPODE_MODULE     U⊗X, U a left H-module, X a right A-module
    factor is the left H-module factor coalgebra C; without it C = H.
    '''
    kind = TensorKind(kind)
    if kind is TensorKind.COMODULE:
        result = _tensor_comodule(H, U, X, factor)
    elif kind is TensorKind.ANTIPODE_COMODULE:
        result = _tensor_antipode_comodule(H, _comodule_part(X), U, factor)
    elif kind is TensorKind.MODULE:
        result = _tensor_module(H, _module_part(X), U)
    else:
        result = _tensor_antipode_module(H, _module_part(U), X)
    verdict = result.verify()
    if not verdict.ok:
        raise coidealStructureError(f'{kind.value} tensor product fails its axioms: {verdict.witness}')
    return result
