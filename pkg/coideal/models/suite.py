'''
Schema of the verifier suite configuration
@author: coideal developers
'''

# coideal Imports
from coideal.models.algebra import spec as algebra_spec
from coideal.defaults import constants

# Names of the check groups a suite can run
CHECKS = ['axioms', 'correspondence', 'isomorphisms', 'homology', 'conditions0x', 'openquestion']

# The catalog the suite runs on when no algebras are configured
CATALOG = [
    {'family': 'group_algebra', 'field': 'Q', 'orders': [2]},
    {'family': 'group_algebra', 'field': 'Q', 'orders': [4]},
    {'family': 'group_algebra', 'field': 'p=7', 'orders': [3]},
    {'family': 'dual_group_algebra', 'field': 'Q', 'orders': [2]},
    {'family': 'dual_group_algebra', 'field': 'Q', 'orders': [2, 2]},
    {'family': 'sweedler4', 'field': 'Q'},
    {'family': 'sweedler4', 'field': 'p=7'},
    {'family': 'taft', 'field': 'p=7', 'n': 3, 'q': 2},
    ]

config = {
    'type': 'object',
    'description': 'A verifier suite run',
    'properties': {
        'algebras': {
            'type': 'array',
            'description': 'Catalog specifications or paths of algebra documents',
            'items': {
                'oneOf': [
                    algebra_spec,
                    {'type': 'string', 'minLength': 1}
                    ]
                },
            'minItems': 1,
            'default': CATALOG
            },
        'mode': {
            'type': 'string',
            'description': 'How coideal subalgebras are generated',
            'enum': ['exhaustive-small', 'randomized'],
            'default': 'exhaustive-small'
            },
        'count': {
            'type': 'integer',
            'description': 'Random subalgebras per algebra (randomized mode and algebras too large to enumerate)',
            'minimum': 1,
            'default': 3
            },
        'seed': {'type': 'integer', 'default': constants.SEED},
        'checks': {
            'type': 'array',
            'items': {'type': 'string', 'enum': CHECKS},
            'uniqueItems': True,
            'default': CHECKS
            },
        'truncation': {
            'description': 'Highest homological degree checked, null for max(8, 2·dim)',
            'oneOf': [{'type': 'integer', 'minimum': 1}, {'type': 'null'}],
            'default': None
            },
        'sample_size': {
            'type': 'integer',
            'description': 'Sampled Hopf modules per category and instance',
            'minimum': 1,
            'default': constants.SAMPLE_SIZE
            },
        'iso_samples': {
            'type': 'integer',
            'description': 'Sampled object tuples per canonical isomorphism and instance',
            'minimum': 1,
            'default': constants.ISO_SAMPLES
            },
        'draws': {
            'type': 'integer',
            'description': 'Random coideal subalgebras per algebra checked for dominion = coinvariants',
            'minimum': 0,
            'default': constants.DRAWS
            },
        'workers': {'type': 'integer', 'minimum': 1, 'default': constants.WORKERS},
        'format': {
            'type': 'string',
            'enum': ['json', 'markdown'],
            'default': 'json'
            }
        },
    'additionalProperties': False
    }
