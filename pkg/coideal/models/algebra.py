'''
Schemas of the algebra interchange documents
@author: coideal developers
'''

scalar = {
    'description': 'An exact scalar: an integer or a string "a/b"',
    'oneOf': [
        {'type': 'integer'},
        {'type': 'string', 'pattern': r'^\s*[+-]?\d+\s*(/\s*\d+\s*)?$'}
        ]
    }

field = {
    'type': 'string',
    'description': 'The ground field: "Q" for the rationals or "p=<prime>"',
    'pattern': r'^(Q|p=\d+)$',
    'default': 'Q'
    }

vector = {'type': 'array', 'items': scalar}
matrix = {'type': 'array', 'items': vector}
table = {'type': 'array', 'items': matrix}

document = {
    'type': 'object',
    'description': 'Structure constants of a finite-dimensional Hopf algebra',
    'properties': {
        'dim': {'type': 'integer', 'minimum': 1},
        'field': field,
        'labels': {'type': 'array', 'items': {'type': 'string'}},
        'mult': table,
        'unit': vector,
        'comult': table,
        'counit': vector,
        'antipode': matrix
        },
    'required': ['dim', 'field', 'mult', 'unit', 'comult', 'counit', 'antipode'],
    'additionalProperties': False
    }

spec = {
    'type': 'object',
    'description': 'A catalog algebra to build',
    'properties': {
        'family': {
            'type': 'string',
            'enum': ['group_algebra', 'dual_group_algebra', 'sweedler4', 'taft']
            },
        'field': field,
        'orders': {
            'type': 'array',
            'description': 'Orders of the cyclic factors of an abelian group',
            'items': {'type': 'integer', 'minimum': 1},
            'default': [2]
            },
        'n': {'type': 'integer', 'description': 'Degree of a Taft algebra', 'minimum': 2, 'default': 2},
        'q': {**scalar, 'description': 'Primitive n-th root of unity of a Taft algebra', 'default': -1},
        'name': {'type': 'string', 'description': 'Optional instance name used in reports'}
        },
    'required': ['family'],
    'additionalProperties': False
    }
