'''
Modules, comodules and relative Hopf modules given by structure matrices.

A module over an algebra R stores one action matrix per basis element of R.
R is either a subalgebra of H in the echelon coordinates of its subspace
(the ring attribute) or an abstract algebra such as the dual algebra C*.
A comodule over a coalgebra K stores its coaction as one matrix:
    right coaction V → V⊗K   index (v, c) -> v * dim K + c
    left coaction  V → K⊗V   index (c, v) -> c * dim V + v
Morphisms are plain matrices; a morphism space is the kernel of the linear
system saying that a matrix commutes with every structure operator.
@author: coideal developers
'''

# Imports
import itertools
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

# coideal Imports
from coideal.algebra.exactla import Field, Matrix, Scalar, Subspace, Vector, kernel, kron, quotient, unit_vector
from coideal.algebra.hopfcore import FiniteAlgebra, FiniteCoalgebra, FiniteHopfAlgebra, Side, Verdict
from coideal.algebra.correspondence import FactorCoalgebra
from coideal.utils.exceptions import coidealBaseException
from coideal.utils import logging


class coidealCategoryMismatch(coidealBaseException):
    '''
    Gets thrown when an object is passed to a construction expecting another category
    '''
    template = 'Object does not belong to the expected category ({error})'


class coidealStructureError(coidealBaseException):
    '''
    Gets thrown when structure matrices violate the module or comodule axioms
    '''
    template = 'Invalid structure ({error})'


class Category(Enum):
    HOPF_RIGHT = 'hopf-right'          # right A-module, right H-comodule
    HOPF_LEFT = 'hopf-left'            # left A-module, right H-comodule
    INDUCED_LEFT = 'induced-left'      # left H-module, left C-comodule
    INDUCED_RIGHT = 'induced-right'    # left H-module, right C-comodule

    @property
    def module_side(self) -> Side:
        return Side.RIGHT if self is Category.HOPF_RIGHT else Side.LEFT

    @property
    def comodule_side(self) -> Side:
        return Side.LEFT if self is Category.INDUCED_LEFT else Side.RIGHT

    @property
    def over_factor(self) -> bool:
        '''The coaction is one of a factor coalgebra C rather than of H'''
        return self in (Category.INDUCED_LEFT, Category.INDUCED_RIGHT)


def subalgebra_structure(H: FiniteHopfAlgebra, ring: Subspace) -> FiniteAlgebra:
    '''
    Structure constants of a unital subalgebra of H in the echelon basis of its subspace
    '''
    rows = ring.rows
    mult = [[ring.coordinates(H.multiply(a, b)) for b in rows] for a in rows]
    return FiniteAlgebra(H.field, mult, ring.coordinates(H.unit), [f'r{i}' for i in range(ring.dim)])


def split_coproduct(H: FiniteHopfAlgebra, r: Sequence[Scalar], first: bool=True) -> List[Tuple[Vector, int]]:
    '''
    Writes Δ(r) = Σ_k leg_k⊗e_k (first=True) or Σ_k e_k⊗leg_k and returns the pairs (leg_k, k)
    '''
    legs: Dict[int, Vector] = {}
    for (j, k), c in H.coproduct(r).items():
        leg, other = (j, k) if first else (k, j)
        legs.setdefault(other, [H.field.zero] * H.dim)[leg] += c
    return [(legs[other], other) for other in sorted(legs)]


def _sum(field: Field, dim: int, terms: Iterable[Tuple[Scalar, Matrix]]) -> Matrix:
    total = Matrix.zeros(field, dim, dim)
    for c, matrix in terms:
        if c:
            total = total + matrix.scale(c)
    return total


class ModuleStr(object):
    '''
    A finite-dimensional left or right module over a finite-dimensional algebra
    '''

    def __init__(self, algebra: FiniteAlgebra, side: Side, matrices: Sequence[Matrix], dim: Optional[int]=None, ring: Optional[Subspace]=None) -> None:
        self.algebra = algebra
        self.side = Side(side)
        self.matrices = tuple(matrices)
        if len(self.matrices) != algebra.dim:
            raise coidealStructureError(f'{len(self.matrices)} action matrices for an algebra of dimension {algebra.dim}')
        self.dim = self.matrices[0].rows if dim is None else int(dim)
        if any(m.shape != (self.dim, self.dim) for m in self.matrices):
            raise coidealStructureError(f'action matrices must be {self.dim}x{self.dim}')
        self.ring = ring

    @property
    def field(self) -> Field:
        return self.algebra.field

    @classmethod
    def regular(cls, algebra: FiniteAlgebra, side: Side) -> 'ModuleStr':
        '''The algebra acting on itself by left or right multiplication'''
        side = Side(side)
        basis = [algebra.basis_vector(i) for i in range(algebra.dim)]
        matrices = [algebra.left_matrix(e) if side is Side.LEFT else algebra.right_matrix(e) for e in basis]
        return cls(algebra, side, matrices, algebra.dim)

    @classmethod
    def by_multiplication(cls, H: FiniteHopfAlgebra, ring: Subspace, side: Side, target: Optional[Subspace]=None) -> 'ModuleStr':
        '''
        The subalgebra ring ⊆ H acting by multiplication on target ⊆ H (default H),
        which has to be stable under this multiplication
        '''
        side = Side(side)
        target = target or Subspace.whole(H.field, H.dim)
        read, write = target.extraction(), target.inclusion()
        matrices = []
        for a in ring.rows:
            f = H.left_matrix(a) if side is Side.LEFT else H.right_matrix(a)
            image = f @ write
            if not all(target.contains(v) for v in image.columns()):
                raise coidealStructureError('target is not stable under multiplication by the ring')
            matrices.append(read @ image)
        return cls(subalgebra_structure(H, ring), side, matrices, target.dim, ring)

    @classmethod
    def trivial(cls, algebra: FiniteAlgebra, side: Side, character: Sequence[Scalar], dim: int=1, ring: Optional[Subspace]=None) -> 'ModuleStr':
        '''dim copies of the one-dimensional module on which e_i acts by character[i]'''
        identity = Matrix.identity(algebra.field, dim)
        return cls(algebra, side, [identity.scale(c) for c in character], dim, ring)

    def act(self, coordinates: Sequence[Scalar]) -> Matrix:
        '''The action of Σ c_i e_i as a matrix'''
        return _sum(self.field, self.dim, zip(coordinates, self.matrices))

    def act_element(self, h: Sequence[Scalar]) -> Matrix:
        '''The action of an element of H lying in the ring'''
        if self.ring is None:
            raise coidealStructureError('module is not over a subalgebra of H')
        if not self.ring.contains(h):
            raise coidealCategoryMismatch('element does not lie in the acting subalgebra')
        return self.act(self.ring.coordinates(h))

    def operators(self) -> List[Matrix]:
        return list(self.matrices)

    def verify(self) -> Verdict:
        '''
        Unit acts as identity and e_i(e_j m) = (e_i e_j)m, for right modules (m e_i)e_j = m(e_i e_j)
        '''
        if self.act(self.algebra.unit) != Matrix.identity(self.field, self.dim):
            return Verdict.failed({'axiom': 'unit'})
        n = self.algebra.dim
        for i, j in itertools.product(range(n), repeat=2):
            product = self.act(self.algebra.multiply(self.algebra.basis_vector(i), self.algebra.basis_vector(j)))
            composed = self.matrices[i] @ self.matrices[j] if self.side is Side.LEFT else self.matrices[j] @ self.matrices[i]
            if composed != product:
                return Verdict.failed({'axiom': 'associativity', 'basis': [i, j]})
        return Verdict.passed()

    def restrict(self, carrier: 'Carrier') -> 'ModuleStr':
        '''The structure induced on a submodule or quotient module'''
        for m in self.matrices:
            if not carrier.is_invariant(m):
                raise coidealStructureError(f'{carrier.kind} space is not a submodule')
        return ModuleStr(self.algebra, self.side, [carrier.induce(m) for m in self.matrices], carrier.dim, self.ring)

    def restrict_ring(self, H: FiniteHopfAlgebra, ring: Subspace) -> 'ModuleStr':
        '''Restriction of scalars to a smaller subalgebra of H'''
        return ModuleStr(subalgebra_structure(H, ring), self.side, [self.act_element(b) for b in ring.rows], self.dim, ring)

    def mirrored(self, algebra: FiniteAlgebra) -> 'ModuleStr':
        '''The same matrices as a module of the other side over the opposite algebra'''
        return ModuleStr(algebra, self.side.mirror, self.matrices, self.dim, self.ring)

    def __repr__(self) -> str:
        return f'ModuleStr({self.side.value}, dim={self.dim} over dim {self.algebra.dim})'


class ComoduleStr(object):
    '''
    A finite-dimensional left or right comodule over a finite-dimensional coalgebra
    '''

    def __init__(self, coalgebra: FiniteCoalgebra, side: Side, coaction: Matrix) -> None:
        self.coalgebra = coalgebra
        self.side = Side(side)
        self.coaction = coaction
        self.dim = coaction.cols
        if coaction.rows != self.dim * coalgebra.dim:
            raise coidealStructureError(f'coaction of shape {coaction.shape} over a coalgebra of dimension {coalgebra.dim}')
        self._components = None

    @property
    def field(self) -> Field:
        return self.coalgebra.field

    @classmethod
    def regular(cls, coalgebra: FiniteCoalgebra, side: Side) -> 'ComoduleStr':
        '''C coacting on itself by Δ; both index conventions agree with Δ's'''
        return cls(coalgebra, side, coalgebra.comult_matrix())

    @classmethod
    def trivial(cls, coalgebra: FiniteCoalgebra, side: Side, grouplike: Sequence[Scalar], dim: int=1) -> 'ComoduleStr':
        '''v ↦ v⊗g (or g⊗v) for a grouplike g'''
        field, k = coalgebra.field, coalgebra.dim
        side = Side(side)
        columns = []
        for v in range(dim):
            if side is Side.RIGHT:
                columns.append({v * k + c: x for c, x in enumerate(grouplike) if x})
            else:
                columns.append({c * dim + v: x for c, x in enumerate(grouplike) if x})
        return cls(coalgebra, side, Matrix.from_columns(field, dim * k, columns))

    @classmethod
    def over_factor(cls, C: FactorCoalgebra, side: Side) -> 'ComoduleStr':
        '''H as a right comodule by (id⊗π)Δ or a left one by (π⊗id)Δ'''
        side = Side(side)
        return cls(C.coalgebra, side, C.right_coaction() if side is Side.RIGHT else C.left_coaction())

    def components(self) -> List[Matrix]:
        '''
        Matrices T_c with ρ(v) = Σ_c T_c(v)⊗c (or Σ_c c⊗T_c(v)); T_c is the action of
        the dual basis element c* under the induced C*-module structure
        '''
        if self._components is None:
            d, k = self.dim, self.coalgebra.dim
            entries = [[[self.field.zero] * d for _ in range(d)] for _ in range(k)]
            for v, column in enumerate(self.coaction.sparse_columns()):
                for index, x in column:
                    w, c = divmod(index, k) if self.side is Side.RIGHT else reversed(divmod(index, d))
                    entries[c][w][v] = x
            self._components = [Matrix(self.field, d, d, e) for e in entries]
        return self._components

    def terms(self, v: int) -> List[Tuple[int, int, Scalar]]:
        '''The coaction of a basis vector as triples (comodule index, coalgebra index, coefficient)'''
        d, k = self.dim, self.coalgebra.dim
        result = []
        for index, x in self.coaction.sparse_columns()[v]:
            w, c = divmod(index, k) if self.side is Side.RIGHT else reversed(divmod(index, d))
            result.append((w, c, x))
        return result

    def operators(self) -> List[Matrix]:
        return self.components()

    def as_module(self) -> ModuleStr:
        '''A right comodule is a left C*-module, a left comodule a right C*-module'''
        return ModuleStr(self.coalgebra.dual_algebra(), self.side.mirror, self.components(), self.dim)

    def verify(self) -> Verdict:
        '''Coassociativity and the counit law'''
        field, d, k = self.field, self.dim, self.coalgebra.dim
        rho = self.coaction
        I_d, I_k = Matrix.identity(field, d), Matrix.identity(field, k)
        delta, counit = self.coalgebra.comult_matrix(), self.coalgebra.counit_matrix()
        if self.side is Side.RIGHT:
            coassociative = kron(rho, I_k) @ rho == kron(I_d, delta) @ rho
            counital = kron(I_d, counit) @ rho == I_d
        else:
            coassociative = kron(I_k, rho) @ rho == kron(delta, I_d) @ rho
            counital = kron(counit, I_d) @ rho == I_d
        if not coassociative:
            return Verdict.failed({'axiom': 'coassociativity'})
        if not counital:
            return Verdict.failed({'axiom': 'counit'})
        return Verdict.passed()

    def restrict(self, carrier: 'Carrier') -> 'ComoduleStr':
        '''The structure induced on a subcomodule or quotient comodule'''
        for m in self.components():
            if not carrier.is_invariant(m):
                raise coidealStructureError(f'{carrier.kind} space is not a subcomodule')
        k = self.coalgebra.dim
        identity = Matrix.identity(self.field, k)
        if self.side is Side.RIGHT:
            coaction = kron(carrier.read, identity) @ self.coaction @ carrier.write
        else:
            coaction = kron(identity, carrier.read) @ self.coaction @ carrier.write
        return ComoduleStr(self.coalgebra, self.side, coaction)

    def __repr__(self) -> str:
        return f'ComoduleStr({self.side.value}, dim={self.dim} over dim {self.coalgebra.dim})'


class HopfModule(object):
    '''
    A module and a comodule on the same space satisfying the compatibility law of
    its category. The coefficients of the comodule are H itself or a left
    H-module factor coalgebra C (for the induced categories).
    '''

    def __init__(self, category: Category, module: ModuleStr, comodule: ComoduleStr, H: FiniteHopfAlgebra, factor: Optional[FactorCoalgebra]=None) -> None:
        self.category = Category(category)
        self.module = module
        self.comodule = comodule
        self.H = H
        self.factor = factor
        if module.dim != comodule.dim:
            raise coidealStructureError(f'module of dimension {module.dim} with comodule of dimension {comodule.dim}')
        if module.side is not self.category.module_side or comodule.side is not self.category.comodule_side:
            raise coidealCategoryMismatch(f'{module.side.value} module and {comodule.side.value} comodule in category {self.category.value}')
        if self.category.over_factor and factor is None:
            raise coidealCategoryMismatch(f'category {self.category.value} needs a factor coalgebra')

    @property
    def logger(self):
        '''The logger of this class'''
        return logging.getLogger()

    @property
    def field(self) -> Field:
        return self.H.field

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def ring(self) -> Subspace:
        return self.module.ring

    def operators(self) -> List[Matrix]:
        return self.module.operators() + self.comodule.operators()

    def coefficient_action(self, i: int) -> Matrix:
        '''How e_i acts on the coalgebra the comodule is over'''
        e = self.H.basis_vector(i)
        if self.category is Category.HOPF_RIGHT:
            return self.H.right_matrix(e)
        if self.category is Category.HOPF_LEFT:
            return self.H.left_matrix(e)
        return Matrix.from_columns(self.field, self.factor.dim, self.factor.action[i])

    def split_coproduct(self, r: Sequence[Scalar]) -> List[Tuple[Vector, int]]:
        '''
        Δ(r) split into (module leg, coefficient basis index). The module receives the
        first leg except in INDUCED_LEFT, where the coalgebra receives it.
        '''
        return split_coproduct(self.H, r, self.category is not Category.INDUCED_LEFT)

    def verify(self) -> Verdict:
        '''
        The module and comodule axioms and the compatibility law, e.g. for HOPF_RIGHT
        ρ(m·a) = Σ m₀·a₁ ⊗ m₁a₂
        '''
        for name, part in (('module', self.module), ('comodule', self.comodule)):
            verdict = part.verify()
            if not verdict.ok:
                return Verdict.failed({name: verdict.witness})
        expected_coalgebra = self.factor.coalgebra if self.category.over_factor else self.H.coalgebra
        if self.comodule.coalgebra.dim != expected_coalgebra.dim:
            return Verdict.failed({'coefficients': self.comodule.coalgebra.dim})
        rho = self.comodule.coaction
        ring = self.ring if self.ring is not None else Subspace.whole(self.field, self.H.dim)
        for r in ring.rows:
            expected = Matrix.zeros(self.field, rho.rows, rho.rows)
            for leg, other in self.split_coproduct(r):
                if not ring.contains(leg):
                    return Verdict.failed({'leg_outside_ring': [self.field.serialize(x) for x in leg]})
                acting = self.module.act_element(leg) if self.ring is not None else self.module.act(leg)
                coefficient = self.coefficient_action(other)
                pair = (acting, coefficient) if self.comodule.side is Side.RIGHT else (coefficient, acting)
                expected = expected + kron(*pair)
            action = self.module.act_element(r) if self.ring is not None else self.module.act(r)
            if rho @ action != expected @ rho:
                return Verdict.failed({'compatibility': [self.field.serialize(x) for x in r]})
        return Verdict.passed()

    def restrict(self, carrier: 'Carrier') -> 'HopfModule':
        return HopfModule(self.category, self.module.restrict(carrier), self.comodule.restrict(carrier), self.H, self.factor)

    def __repr__(self) -> str:
        return f'HopfModule({self.category.value}, dim={self.dim})'


Structure = Union[ModuleStr, ComoduleStr, HopfModule]


class Carrier(object):
    '''
    The read/write matrices of a subobject (extraction, inclusion) or of a quotient
    (projection, section). Structures are transported by read @ op @ write.
    '''

    def __init__(self, read: Matrix, write: Matrix, space: Subspace, kind: str) -> None:
        self.read = read
        self.write = write
        self.space = space
        self.kind = kind

    @classmethod
    def sub(cls, space: Subspace) -> 'Carrier':
        return cls(space.extraction(), space.inclusion(), space, 'sub')

    @classmethod
    def quotient(cls, space: Subspace) -> 'Carrier':
        projection, section = quotient(space.ambient_dim, space)
        return cls(projection, section, space, 'quotient')

    @property
    def dim(self) -> int:
        return self.read.rows

    def induce(self, op: Matrix) -> Matrix:
        return self.read @ op @ self.write

    def induce_map(self, f: Matrix, target: 'Carrier') -> Matrix:
        '''A map between the ambient spaces transported to the carried spaces'''
        return target.read @ f @ self.write

    def is_invariant(self, op: Matrix) -> bool:
        '''op maps the carried subspace into itself (needed by sub and quotient alike)'''
        return all(self.space.contains(op.apply(v)) for v in self.space.rows)

    def __repr__(self) -> str:
        return f'Carrier({self.kind}, dim={self.dim})'


def generated_subobject(X: Structure, vectors: Iterable[Sequence[Scalar]]) -> Subspace:
    '''The smallest subspace containing the vectors and stable under all structure operators'''
    operators = X.operators()
    space = Subspace.span(X.field, X.dim, [list(v) for v in vectors])
    while True:
        images = [op.apply(v) for op in operators for v in space.rows]
        grown = Subspace.span(X.field, X.dim, space.vectors + images)
        if grown.dim == space.dim:
            return space
        space = grown


def commutation_system(X: Structure, Y: Structure) -> Matrix:
    '''
    Equations T X_k − Y_k T = 0 for all operator pairs; T is vectorized at i * dim X + j
    '''
    xs, ys = X.operators(), Y.operators()
    if len(xs) != len(ys):
        raise coidealCategoryMismatch(f'objects with {len(xs)} and {len(ys)} structure operators')
    field, dx, dy = X.field, X.dim, Y.dim
    rows = []
    for x_op, y_op in zip(xs, ys):
        x_columns = x_op.sparse_columns()
        y_rows = y_op.sparse_rows()
        for p in range(dy):
            for j in range(dx):
                row = [field.zero] * (dy * dx)
                for i, c in x_columns[j]:
                    row[p * dx + i] += c
                for i, c in y_rows[p]:
                    row[i * dx + j] -= c
                if any(row):
                    rows.append(row)
    return Matrix.from_rows(field, dy * dx, rows)


def morphism_space(X: Structure, Y: Structure) -> Subspace:
    '''All structure preserving linear maps X → Y as vectorized matrices'''
    return kernel(commutation_system(X, Y))


def as_matrix(field: Field, vector: Sequence[Scalar], rows: int, cols: int) -> Matrix:
    return Matrix(field, rows, cols, [list(vector[i * cols:(i + 1) * cols]) for i in range(rows)])


def morphisms(X: Structure, Y: Structure) -> List[Matrix]:
    '''A basis of the morphism space as matrices'''
    return [as_matrix(X.field, v, Y.dim, X.dim) for v in morphism_space(X, Y).rows]


def is_morphism(f: Matrix, X: Structure, Y: Structure) -> bool:
    if f.shape != (Y.dim, X.dim):
        return False
    return all(f @ x == y @ f for x, y in zip(X.operators(), Y.operators()))


def vectorize(f: Matrix) -> Vector:
    return [x for row in f.entries for x in row]


def tensor_basis(*dims: int) -> Iterable[Tuple[int, ...]]:
    '''Basis indices of a tensor product in the order of the flattened index'''
    return itertools.product(*[range(d) for d in dims])


def flat_index(indices: Sequence[int], dims: Sequence[int]) -> int:
    index = 0
    for i, d in zip(indices, dims):
        index = index * d + i
    return index


def permutation_matrix(field: Field, dims: Sequence[int], order: Sequence[int]) -> Matrix:
    '''
    The map x_0⊗x_1⊗… ↦ x_order[0]⊗x_order[1]⊗… on a tensor product with the given factor dimensions
    '''
    size = 1
    for d in dims:
        size *= d
    target_dims = [dims[o] for o in order]
    columns = []
    for indices in tensor_basis(*dims):
        columns.append({flat_index([indices[o] for o in order], target_dims): field.one})
    return Matrix.from_columns(field, size, columns)


def unit_column(field: Field, n: int, i: int) -> Matrix:
    return Matrix.from_columns(field, n, [unit_vector(field, n, i)])
