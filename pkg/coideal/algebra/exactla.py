'''
Exact linear algebra over the rationals and prime fields.
Every kernel, image, quotient, equalizer and coequalizer used by the
Hopf algebra modules is computed here. Elimination is delegated to
sympy's DomainMatrix; this module only fixes the conventions
(column vectors, canonical echelon bases, deterministic complements).
@author: coideal developers
'''

# Imports
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
try:
    from sympy import GF, QQ, isprime
    from sympy.polys.matrices import DomainMatrix
    from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
except ImportError as e:
    from coideal.utils.exceptions import coidealModuleImport
    raise coidealModuleImport(e)

# coideal Imports
from coideal.utils.exceptions import coidealBaseException
from coideal.utils.types import FRACTION, FIELD

# Type aliases
Scalar = Any
Vector = List[Scalar]
Column = Union[Sequence[Scalar], Mapping[int, Scalar]]


class coidealFieldError(coidealBaseException):
    '''
    Gets thrown when a ground field or a scalar cannot be constructed
    '''
    template = 'Invalid field or scalar ({error})'


class coidealShapeMismatch(coidealBaseException):
    '''
    Gets thrown when matrices or vectors of incompatible shapes are combined
    '''
    template = 'Shape mismatch ({error})'


class coidealSingularMatrix(coidealBaseException):
    '''
    Gets thrown when a singular matrix is inverted
    '''
    template = 'Matrix is not invertible ({error})'


class Field:
    '''
    An exact ground field: the rationals (characteristic 0) or GF(p) for a prime p
    '''
    __slots__ = ('characteristic', 'domain')

    def __init__(self, characteristic: int=0) -> None:
        characteristic = int(characteristic)
        if characteristic == 0:
            self.domain = QQ
        elif characteristic > 1 and isprime(characteristic):
            self.domain = GF(characteristic)
        else:
            raise coidealFieldError(f'characteristic {characteristic} is not a prime')
        self.characteristic = characteristic

    @classmethod
    def rational(cls) -> 'Field':
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> 'Field':
        return cls(p)

    @classmethod
    def parse(cls, descriptor: str) -> 'Field':
        '''
        Builds the field named by a descriptor "Q" or "p=<prime>"
        '''
        match = FIELD.match(descriptor) if isinstance(descriptor, str) else None
        if not match:
            raise coidealFieldError(f'unknown field descriptor "{descriptor}"')
        return cls(int(match.group(2))) if match.group(2) else cls(0)

    @property
    def tag(self) -> str:
        return 'Q' if self.characteristic == 0 else f'p={self.characteristic}'

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def convert(self, value: Any) -> Scalar:
        '''
        Converts integers, fractions, "a/b" strings and field elements into an exact field element
        '''
        if isinstance(value, bool):
            raise coidealFieldError(f'boolean "{value}" is no scalar')
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, Fraction):
            return self._fraction(value.numerator, value.denominator)
        if isinstance(value, str):
            match = FRACTION.match(value)
            if not match:
                raise coidealFieldError(f'cannot parse scalar "{value}"')
            return self._fraction(int(match.group(1)), int(match.group(2) or 1))
        if self.domain.of_type(value):
            return value
        raise coidealFieldError(f'cannot convert {value!r} into {self.tag}')

    def _fraction(self, numerator: int, denominator: int) -> Scalar:
        if denominator == 0 or (self.characteristic and denominator % self.characteristic == 0):
            raise coidealFieldError(f'denominator {denominator} is not invertible in {self.tag}')
        if self.characteristic == 0:
            return self.domain(numerator, denominator)
        return self.domain(numerator) / self.domain(denominator)

    def serialize(self, value: Scalar) -> Union[int, str]:
        '''
        Returns an integer or an "a/b" string representing the element exactly
        '''
        if self.characteristic:
            return int(value) % self.characteristic
        numerator, denominator = int(self.domain.numer(value)), int(self.domain.denom(value))
        return numerator if denominator == 1 else f'{numerator}/{denominator}'

    def box(self, bound: int) -> List[Scalar]:
        '''
        The coefficient box used by samplers: {-bound..bound} over Q and all residues over GF(p)
        '''
        if self.characteristic:
            return [self.domain(i) for i in range(self.characteristic)]
        return [self.domain(i) for i in range(-bound, bound + 1)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(('Field', self.characteristic))

    def __repr__(self) -> str:
        return f'Field({self.tag})'


def zero_vector(field: Field, n: int) -> Vector:
    return [field.zero] * n


def unit_vector(field: Field, n: int, i: int) -> Vector:
    v = [field.zero] * n
    v[i] = field.one
    return v


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return not any(v)


def combine(field: Field, n: int, terms: Iterable[Tuple[Scalar, Sequence[Scalar]]]) -> Vector:
    '''
    Returns the linear combination sum(c * v) of dense vectors of length n
    '''
    result = [field.zero] * n
    for c, v in terms:
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                result[i] += c * x
    return result


class Matrix:
    '''
    A dense exact matrix acting on column vectors. Matrices are immutable;
    the DomainMatrix used for elimination is built on demand.
    '''
    __slots__ = ('field', 'rows', 'cols', 'entries', '_sparse_rows', '_sparse_columns')

    def __init__(self, field: Field, rows: int, cols: int, entries: Optional[Sequence[Sequence[Scalar]]]=None) -> None:
        self.field = field
        self.rows = int(rows)
        self.cols = int(cols)
        if entries is None:
            entries = [[field.zero] * self.cols for _ in range(self.rows)]
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise coidealShapeMismatch(f'entries do not form a {self.rows}x{self.cols} table')
        self.entries = tuple(tuple(row) for row in entries)
        self._sparse_rows = None
        self._sparse_columns = None

    # Constructors
    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> 'Matrix':
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> 'Matrix':
        return cls(field, n, n, [unit_vector(field, n, i) for i in range(n)])

    @classmethod
    def from_rows(cls, field: Field, cols: int, rows: Sequence[Sequence[Scalar]]) -> 'Matrix':
        return cls(field, len(rows), cols, [list(row) for row in rows])

    @classmethod
    def from_columns(cls, field: Field, rows: int, columns: Sequence[Column]) -> 'Matrix':
        '''
        Builds a matrix from its columns, each given densely or as a {row: value} mapping
        '''
        entries = [[field.zero] * len(columns) for _ in range(rows)]
        for j, column in enumerate(columns):
            items = column.items() if isinstance(column, Mapping) else enumerate(column)
            for i, value in items:
                if i >= rows:
                    raise coidealShapeMismatch(f'column {j} has an entry in row {i} beyond {rows} rows')
                entries[i][j] = value
        return cls(field, rows, len(columns), entries)

    @classmethod
    def from_domain_matrix(cls, field: Field, rep: DomainMatrix) -> 'Matrix':
        rows, cols = rep.shape
        return cls(field, rows, cols, rep.to_list() if rows and cols else None)

    # Access
    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def rep(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.entries], self.shape, self.field.domain)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return list(self.entries[i])

    def column(self, j: int) -> Vector:
        return [row[j] for row in self.entries]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def sparse_rows(self) -> List[List[Tuple[int, Scalar]]]:
        if self._sparse_rows is None:
            self._sparse_rows = [[(j, x) for j, x in enumerate(row) if x] for row in self.entries]
        return self._sparse_rows

    def sparse_columns(self) -> List[List[Tuple[int, Scalar]]]:
        if self._sparse_columns is None:
            columns = [[] for _ in range(self.cols)]
            for i, row in enumerate(self.entries):
                for j, x in enumerate(row):
                    if x:
                        columns[j].append((i, x))
            self._sparse_columns = columns
        return self._sparse_columns

    def apply(self, v: Sequence[Scalar]) -> Vector:
        '''
        Returns the matrix-vector product M·v
        '''
        if len(v) != self.cols:
            raise coidealShapeMismatch(f'cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(v)}')
        result = [self.field.zero] * self.rows
        for j, x in enumerate(v):
            if x:
                for i, y in self.sparse_columns()[j]:
                    result[i] += y * x
        return result

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    # Arithmetic
    def _check_same_shape(self, other: 'Matrix', op: str) -> None:
        if not isinstance(other, Matrix) or other.shape != self.shape or other.field != self.field:
            raise coidealShapeMismatch(f'{self.shape} {op} {getattr(other, "shape", other)}')

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other, '+')
        if not self.rows or not self.cols:
            return self
        return Matrix.from_domain_matrix(self.field, self.rep.add(other.rep))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_same_shape(other, '-')
        if not self.rows or not self.cols:
            return self
        return Matrix.from_domain_matrix(self.field, self.rep.sub(other.rep))

    def __neg__(self) -> 'Matrix':
        if not self.rows or not self.cols:
            return self
        return Matrix.from_domain_matrix(self.field, self.rep.neg())

    def scale(self, c: Scalar) -> 'Matrix':
        return Matrix(self.field, self.rows, self.cols, [[c * x for x in row] for row in self.entries])

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if not isinstance(other, Matrix) or self.cols != other.rows or self.field != other.field:
            raise coidealShapeMismatch(f'{self.shape} @ {getattr(other, "shape", other)}')
        if not self.rows or not other.cols or not self.cols:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix.from_domain_matrix(self.field, self.rep.matmul(other.rep))

    def transpose(self) -> 'Matrix':
        if not self.rows or not self.cols:
            return Matrix.zeros(self.field, self.cols, self.rows)
        return Matrix.from_domain_matrix(self.field, self.rep.transpose())

    @property
    def T(self) -> 'Matrix':
        return self.transpose()

    def rref(self) -> Tuple[List[Vector], Tuple[int, ...]]:
        '''
        Returns the nonzero rows of the reduced row echelon form and the pivot columns
        '''
        if not self.rows or not self.cols:
            return [], ()
        reduced, pivots = self.rep.rref()
        pivots = tuple(pivots)
        return [list(row) for row in reduced.to_list()[:len(pivots)]], pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> 'Matrix':
        if self.rows != self.cols:
            raise coidealShapeMismatch(f'cannot invert a {self.rows}x{self.cols} matrix')
        if not self.rows:
            return self
        try:
            return Matrix.from_domain_matrix(self.field, self.rep.inv())
        except (DMNonInvertibleMatrixError, ZeroDivisionError) as e:
            raise coidealSingularMatrix(e)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    @staticmethod
    def hstack(*matrices: 'Matrix') -> 'Matrix':
        first = matrices[0]
        if any(m.rows != first.rows for m in matrices):
            raise coidealShapeMismatch('hstack needs equal row counts')
        entries = [sum((list(m.entries[i]) for m in matrices), []) for i in range(first.rows)]
        return Matrix(first.field, first.rows, sum(m.cols for m in matrices), entries)

    @staticmethod
    def vstack(*matrices: 'Matrix') -> 'Matrix':
        first = matrices[0]
        if any(m.cols != first.cols for m in matrices):
            raise coidealShapeMismatch('vstack needs equal column counts')
        entries = [list(row) for m in matrices for row in m.entries]
        return Matrix(first.field, len(entries), first.cols, entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and other.field == self.field and other.shape == self.shape and other.entries == self.entries

    __hash__ = None

    def to_json(self) -> List[List[Union[int, str]]]:
        return [[self.field.serialize(x) for x in row] for row in self.entries]

    def __repr__(self) -> str:
        return f'Matrix({self.rows}x{self.cols} over {self.field.tag})'


def kron(a: Matrix, b: Matrix) -> Matrix:
    '''
    Kronecker product a⊗b with the tensor index convention (i, k) -> i * b.rows + k
    '''
    field = a.field
    entries = [[field.zero] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for i, arow in enumerate(a.sparse_rows()):
        for j, x in arow:
            for k, brow in enumerate(b.sparse_rows()):
                for l, y in brow:
                    entries[i * b.rows + k][j * b.cols + l] = x * y
    return Matrix(field, a.rows * b.rows, a.cols * b.cols, entries)


class Subspace:
    '''
    A linear subspace of field^n stored by its reduced row echelon basis,
    which makes equality of subspaces an equality of tables
    '''
    __slots__ = ('field', 'ambient_dim', 'rows', 'pivots', '_key')

    def __init__(self, field: Field, ambient_dim: int, rows: Sequence[Sequence[Scalar]], pivots: Sequence[int]) -> None:
        self.field = field
        self.ambient_dim = int(ambient_dim)
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self._key = None

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence[Scalar]]) -> 'Subspace':
        vectors = [list(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise coidealShapeMismatch(f'spanning vectors must have length {ambient_dim}')
        vectors = [v for v in vectors if any(v)]
        if not vectors:
            return cls(field, ambient_dim, [], [])
        rows, pivots = Matrix.from_rows(field, ambient_dim, vectors).rref()
        return cls(field, ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, [], [])

    @classmethod
    def whole(cls, field: Field, ambient_dim: int) -> 'Subspace':
        return cls(field, ambient_dim, [unit_vector(field, ambient_dim, i) for i in range(ambient_dim)], range(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.rows)

    @property
    def vectors(self) -> List[Vector]:
        return [list(r) for r in self.rows]

    @property
    def basis(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient_dim, self.rows)

    @property
    def free_axes(self) -> Tuple[int, ...]:
        pivots = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in pivots)

    def inclusion(self) -> Matrix:
        '''
        The ambient_dim x dim matrix whose columns are the basis vectors
        '''
        return Matrix.from_columns(self.field, self.ambient_dim, self.vectors)

    def extraction(self) -> Matrix:
        '''
        The dim x ambient_dim matrix reading off coordinates of vectors lying in the subspace
        '''
        return Matrix.from_rows(self.field, self.ambient_dim, [unit_vector(self.field, self.ambient_dim, p) for p in self.pivots])

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        '''
        Coordinates of a member vector with respect to the echelon basis
        '''
        if not self.contains(v):
            raise coidealShapeMismatch('vector does not lie in the subspace')
        return [v[p] for p in self.pivots]

    def contains(self, v: Sequence[Scalar]) -> bool:
        if len(v) != self.ambient_dim:
            raise coidealShapeMismatch(f'vector of length {len(v)} in a space of dimension {self.ambient_dim}')
        residual = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = residual[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        residual[j] -= c * x
        return not any(residual)

    def __contains__(self, v: Sequence[Scalar]) -> bool:
        return self.contains(v)

    def __le__(self, other: 'Subspace') -> bool:
        return all(other.contains(v) for v in self.rows)

    def __ge__(self, other: 'Subspace') -> bool:
        return other <= self

    def __add__(self, other: 'Subspace') -> 'Subspace':
        return Subspace.span(self.field, self.ambient_dim, self.vectors + other.vectors)

    def intersection(self, other: 'Subspace') -> 'Subspace':
        if not self.dim or not other.dim:
            return Subspace.zero(self.field, self.ambient_dim)
        projection, _ = quotient(other.ambient_dim, other)
        relations = kernel(projection @ self.inclusion())
        return Subspace.span(self.field, self.ambient_dim, [combine(self.field, self.ambient_dim, zip(c, self.rows)) for c in relations.rows])

    def __and__(self, other: 'Subspace') -> 'Subspace':
        return self.intersection(other)

    def image_under(self, f: Matrix) -> 'Subspace':
        return Subspace.span(self.field, f.rows, [f.apply(v) for v in self.rows])

    def tensor(self, other: 'Subspace') -> 'Subspace':
        '''
        The subspace U⊗W of the tensor product of the ambient spaces, index (i, j) -> i * m + j
        '''
        m = other.ambient_dim
        vectors = []
        for u in self.rows:
            for w in other.rows:
                v = [self.field.zero] * (self.ambient_dim * m)
                for i, x in enumerate(u):
                    if x:
                        for j, y in enumerate(w):
                            if y:
                                v[i * m + j] = x * y
                vectors.append(v)
        return Subspace.span(self.field, self.ambient_dim * m, vectors)

    def key(self) -> Tuple:
        if self._key is None:
            self._key = (self.field.characteristic, self.ambient_dim, tuple(tuple(self.field.serialize(x) for x in r) for r in self.rows))
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def to_json(self) -> List[List[Union[int, str]]]:
        return [[self.field.serialize(x) for x in r] for r in self.rows]

    def __repr__(self) -> str:
        return f'Subspace(dim={self.dim} in {self.ambient_dim} over {self.field.tag})'


def kernel(f: Matrix) -> Subspace:
    '''
    Returns {v : f·v = 0} in canonical form
    '''
    if not f.rows:
        return Subspace.whole(f.field, f.cols)
    rows, pivots = f.rref()
    field = f.field
    pivot_set = set(pivots)
    vectors = []
    for c in range(f.cols):
        if c in pivot_set:
            continue
        v = unit_vector(field, f.cols, c)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][c]
        vectors.append(v)
    return Subspace.span(field, f.cols, vectors)


def image(f: Matrix) -> Subspace:
    '''
    Returns the column space of f
    '''
    return Subspace.span(f.field, f.rows, f.columns())


def quotient(ambient_dim: int, U: Subspace) -> Tuple[Matrix, Matrix]:
    '''
    Returns (projection, section) for field^n -> field^n / U. The section spans
    the coordinate axes that are not pivots of U's echelon basis.
    '''
    if U.ambient_dim != ambient_dim:
        raise coidealShapeMismatch(f'subspace lives in dimension {U.ambient_dim}, not {ambient_dim}')
    field = U.field
    free = U.free_axes
    position = {j: t for t, j in enumerate(free)}
    columns: List[Dict[int, Scalar]] = [dict() for _ in range(ambient_dim)]
    for j in free:
        columns[j][position[j]] = field.one
    for row, p in zip(U.rows, U.pivots):
        column = columns[p]
        for j in free:
            if row[j]:
                column[position[j]] = -row[j]
    projection = Matrix.from_columns(field, len(free), columns)
    section = Matrix.from_columns(field, ambient_dim, [{j: field.one} for j in free])
    return projection, section


def equalizer(f: Matrix, g: Matrix) -> Subspace:
    if f.shape != g.shape:
        raise coidealShapeMismatch(f'equalizer of {f.shape} and {g.shape}')
    return kernel(f - g)


def coequalizer(f: Matrix, g: Matrix) -> Matrix:
    if f.shape != g.shape:
        raise coidealShapeMismatch(f'coequalizer of {f.shape} and {g.shape}')
    return quotient(f.rows, image(f - g))[0]


def solve(f: Matrix, b: Sequence[Scalar]) -> Optional[Vector]:
    '''
    Returns the solution of f·x = b with all free variables set to zero, or None
    '''
    if len(b) != f.rows:
        raise coidealShapeMismatch(f'right hand side of length {len(b)} for {f.rows} equations')
    field = f.field
    if not f.rows:
        return zero_vector(field, f.cols)
    augmented = Matrix.hstack(f, Matrix.from_columns(field, f.rows, [list(b)]))
    rows, pivots = augmented.rref()
    if pivots and pivots[-1] == f.cols:
        return None
    x = zero_vector(field, f.cols)
    for row, p in zip(rows, pivots):
        x[p] = row[f.cols]
    return x
