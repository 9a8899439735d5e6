'''
Builders for the concrete Hopf algebras exercised by the verifier and the
JSON structure-constant interchange format (save/load).
@author: coideal developers
'''

# Imports
import json
import itertools
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

# coideal Imports
from coideal import models
from coideal.algebra.exactla import Field, coidealFieldError
from coideal.algebra.hopfcore import FiniteAlgebra, FiniteHopfAlgebra, Terms, add_term
from coideal.utils.exceptions import coidealBaseException
from coideal.utils.formatters import dumpJson
from coideal.utils import logging

# Names of the generators of the cyclic factors of a group
GENERATORS = 'ghkl'


class coidealSpecError(coidealBaseException):
    '''
    Gets thrown when an algebra specification cannot be built
    '''
    template = 'Invalid algebra specification ({error})'


class coidealParseError(coidealBaseException):
    '''
    Gets thrown when an algebra document cannot be parsed
    '''
    template = 'Cannot parse algebra document ({error})'


class Family(Enum):
    GROUP_ALGEBRA = 'group_algebra'
    DUAL_GROUP_ALGEBRA = 'dual_group_algebra'
    SWEEDLER4 = 'sweedler4'
    TAFT = 'taft'


class AlgebraSpec(object):
    '''
    Describes a catalog algebra: a group algebra or its dual over a product of
    cyclic groups, Sweedler's four-dimensional algebra or a Taft algebra
    '''

    def __init__(self, family: Family, field: Field, orders: Sequence[int]=(2,), n: int=2, q: Any=-1, name: Optional[str]=None) -> None:
        self.family = Family(family)
        self.field = field
        self.orders = tuple(int(o) for o in orders)
        self.n = int(n)
        self.q = q
        self.name = name or self.default_name()

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'AlgebraSpec':
        valid, cause = models.isValidValue('algebra.spec', data)
        if not valid:
            raise coidealSpecError(cause)
        data = models.withDefaults('algebra.spec', data)
        return cls(data['family'], Field.parse(data['field']), data['orders'], data['n'], data['q'], data.get('name'))

    def to_json(self) -> Dict[str, Any]:
        data = {'family': self.family.value, 'field': self.field.tag, 'name': self.name}
        if self.family in (Family.GROUP_ALGEBRA, Family.DUAL_GROUP_ALGEBRA):
            data['orders'] = list(self.orders)
        if self.family is Family.TAFT:
            data['n'] = self.n
            data['q'] = self.q
        return data

    def default_name(self) -> str:
        group = 'x'.join(f'C{o}' for o in self.orders)
        return {
            Family.GROUP_ALGEBRA: f'k[{group}]/{self.field.tag}',
            Family.DUAL_GROUP_ALGEBRA: f'k^{group}/{self.field.tag}',
            Family.SWEEDLER4: f'H4/{self.field.tag}',
            Family.TAFT: f'Taft({self.n},{self.q})/{self.field.tag}',
            }[self.family]

    def __repr__(self) -> str:
        return f'AlgebraSpec({self.name})'


def _group(orders: Sequence[int]) -> Tuple[List[Tuple[int, ...]], Dict[Tuple[int, ...], int], List[str]]:
    '''
    Elements of a product of cyclic groups in itertools.product order, their index and labels
    '''
    if not orders or any(o < 1 for o in orders):
        raise coidealSpecError(f'group orders {list(orders)} must be positive')
    if len(orders) > len(GENERATORS):
        raise coidealSpecError(f'at most {len(GENERATORS)} cyclic factors are supported')
    elements = list(itertools.product(*[range(o) for o in orders]))
    index = {g: i for i, g in enumerate(elements)}
    labels = []
    for g in elements:
        label = ''.join(GENERATORS[f] + (f'^{e}' if e > 1 else '') for f, e in enumerate(g) if e)
        labels.append(label or '1')
    return elements, index, labels


def group_algebra(orders: Sequence[int], field: Field) -> FiniteHopfAlgebra:
    '''
    The group algebra kG of an abelian group G = C_o1 x C_o2 ...: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹
    '''
    elements, index, labels = _group(orders)
    n = len(elements)
    zero, one = field.zero, field.one
    mult = [[[zero] * n for _ in range(n)] for _ in range(n)]
    comult = [[[zero] * n for _ in range(n)] for _ in range(n)]
    antipode = [[zero] * n for _ in range(n)]
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            mult[i][j][index[tuple((a + b) % o for a, b, o in zip(g, h, orders))]] = one
        comult[i][i][i] = one
        antipode[index[tuple(-a % o for a, o in zip(g, orders))]][i] = one
    unit = [one if i == 0 else zero for i in range(n)]
    counit = [one] * n
    return FiniteHopfAlgebra(field, labels, mult, unit, comult, counit, antipode)


def dual_group_algebra(orders: Sequence[int], field: Field) -> FiniteHopfAlgebra:
    '''
    The function algebra k^G with basis δ_g: δ_gδ_h = [g=h]δ_g, Δδ_g = Σ_{ab=g} δ_a⊗δ_b, S(δ_g) = δ_{g⁻¹}
    '''
    elements, index, labels = _group(orders)
    n = len(elements)
    zero, one = field.zero, field.one
    mult = [[[zero] * n for _ in range(n)] for _ in range(n)]
    comult = [[[zero] * n for _ in range(n)] for _ in range(n)]
    antipode = [[zero] * n for _ in range(n)]
    for i, g in enumerate(elements):
        mult[i][i][i] = one
        for j, h in enumerate(elements):
            comult[index[tuple((a + b) % o for a, b, o in zip(g, h, orders))]][i][j] = one
        antipode[index[tuple(-a % o for a, o in zip(g, orders))]][i] = one
    unit = [one] * n
    counit = [one if i == 0 else zero for i in range(n)]
    return FiniteHopfAlgebra(field, [f'd_{label}' for label in labels], mult, unit, comult, counit, antipode)


def _is_primitive_root(field: Field, q: Any, n: int) -> bool:
    power = field.one
    for k in range(1, n + 1):
        power *= q
        if power == field.one:
            return k == n
    return False


def taft(n: int, q: Any, field: Field) -> FiniteHopfAlgebra:
    '''
    The Taft algebra of dimension n²: g^n = 1, x^n = 0, xg = q·gx, Δg = g⊗g,
    Δx = x⊗1 + g⊗x. The basis element g^i x^j has index j·n + i.
    '''
    n = int(n)
    if n < 2:
        raise coidealSpecError(f'Taft algebras need degree n >= 2, got {n}')
    try:
        q = field.convert(q)
    except coidealFieldError as e:
        raise coidealSpecError(e.message)
    if not _is_primitive_root(field, q, n):
        if field.characteristic and (field.characteristic - 1) % n:
            raise coidealSpecError(f'{field.tag} is too small to contain a primitive {n}-th root of unity')
        raise coidealSpecError(f'{field.serialize(q)} is not a primitive {n}-th root of unity in {field.tag}')
    dim = n * n
    zero, one = field.zero, field.one
    powers = [one]
    for _ in range(n * n):
        powers.append(powers[-1] * q)

    def index(i: int, j: int) -> int:
        return j * n + i

    mult = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i1, j1, i2, j2 in itertools.product(range(n), repeat=4):
        if j1 + j2 < n:
            mult[index(i1, j1)][index(i2, j2)][index((i1 + i2) % n, j1 + j2)] = powers[(j1 * i2) % n]
    algebra = FiniteAlgebra(field, mult, [one if k == 0 else zero for k in range(dim)])

    def tensor_product(s: Terms, t: Terms) -> Terms:
        result: Terms = {}
        for (a, b), c in s.items():
            for (x, y), d in t.items():
                for k, e in algebra.product_terms(a, x):
                    for l, f in algebra.product_terms(b, y):
                        add_term(result, (k, l), c * d * e * f)
        return result

    delta_g = {(index(1, 0), index(1, 0)): one}
    delta_x = {(index(0, 1), 0): one, (index(1, 0), index(0, 1)): one}
    comult = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    antipode = [[zero] * dim for _ in range(dim)]
    s_g = algebra.basis_vector(index(n - 1, 0))
    s_x = [-c for c in algebra.basis_vector(index(n - 1, 1))]
    for i, j in itertools.product(range(n), range(n)):
        terms: Terms = {(0, 0): one}
        for _ in range(i):
            terms = tensor_product(terms, delta_g)
        for _ in range(j):
            terms = tensor_product(terms, delta_x)
        for (a, b), c in terms.items():
            comult[index(i, j)][a][b] = c
        # S is an antimorphism: S(g^i x^j) = S(x)^j S(g)^i
        image = algebra.unit
        for _ in range(j):
            image = algebra.multiply(image, s_x)
        for _ in range(i):
            image = algebra.multiply(image, s_g)
        for k, c in enumerate(image):
            antipode[k][index(i, j)] = c
    counit = [one if k < n else zero for k in range(dim)]
    labels = []
    for j, i in itertools.product(range(n), range(n)):
        g = '' if i == 0 else ('g' if i == 1 else f'g^{i}')
        x = '' if j == 0 else ('x' if j == 1 else f'x^{j}')
        labels.append(g + x or '1')
    return FiniteHopfAlgebra(field, labels, mult, algebra.unit, comult, counit, antipode)


def sweedler4(field: Field) -> FiniteHopfAlgebra:
    '''
    Sweedler's Hopf algebra H₄ with basis 1, g, x, gx
    '''
    return taft(2, -1, field)


def build(spec: AlgebraSpec) -> FiniteHopfAlgebra:
    '''
    Builds and verifies the algebra described by a specification
    '''
    logger = logging.getLogger()
    logger.debug(f'Building catalog algebra {spec.name}')
    if spec.family is Family.GROUP_ALGEBRA:
        return group_algebra(spec.orders, spec.field)
    if spec.family is Family.DUAL_GROUP_ALGEBRA:
        return dual_group_algebra(spec.orders, spec.field)
    if spec.family is Family.SWEEDLER4:
        return sweedler4(spec.field)
    return taft(spec.n, spec.q, spec.field)


def to_json(H: FiniteHopfAlgebra) -> Dict[str, Any]:
    serialize = H.field.serialize
    return {
        'dim': H.dim,
        'field': H.field.tag,
        'labels': list(H.labels),
        'mult': [[[serialize(c) for c in row] for row in plane] for plane in H.mult],
        'unit': [serialize(c) for c in H.unit],
        'comult': [[[serialize(c) for c in row] for row in plane] for plane in H.comult],
        'counit': [serialize(c) for c in H.counit],
        'antipode': H.antipode.to_json(),
        }


def save(H: FiniteHopfAlgebra) -> bytes:
    '''
    Serializes the structure constants of H; scalars travel as integers or "a/b" strings
    '''
    return dumpJson(to_json(H)).encode('utf-8')


def from_json(data: Dict[str, Any], verify: bool=True) -> FiniteHopfAlgebra:
    valid, cause = models.isValidValue('algebra.document', data)
    if not valid:
        raise coidealParseError(cause)
    field = Field.parse(data['field'])
    n = data['dim']
    if len(data['unit']) != n:
        raise coidealParseError(f'unit has length {len(data["unit"])} but dim is {n}')
    return FiniteHopfAlgebra(field, data.get('labels'), data['mult'], data['unit'], data['comult'], data['counit'], data['antipode'], verify=verify)


def load(document: bytes) -> FiniteHopfAlgebra:
    '''
    Parses an algebra document and re-runs the axiom verification
    '''
    try:
        data = json.loads(document.decode('utf-8') if isinstance(document, (bytes, bytearray)) else document)
    except (ValueError, UnicodeDecodeError) as e:
        raise coidealParseError(e)
    if not isinstance(data, dict):
        raise coidealParseError('document is not a JSON object')
    return from_json(data)
