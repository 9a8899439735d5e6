'''
Schema of the reports written by the verifier. Reports carry the semantic
version of this schema in "schema_version"; wall-clock data lives in
"metadata" only.
@author: coideal developers
'''

# coideal Imports
from coideal.models.suite import config as suite_config

verdict = {
    'type': 'object',
    'properties': {
        'status': {'type': 'string', 'enum': ['pass', 'fail', 'not-applicable']},
        'witness': {},
        'detail': {'type': 'string'}
        },
    'required': ['status'],
    'additionalProperties': False
    }

checks = {'type': 'object', 'additionalProperties': verdict}

counts = {
    'type': 'object',
    'properties': {
        'pass': {'type': 'integer', 'minimum': 0},
        'fail': {'type': 'integer', 'minimum': 0},
        'not-applicable': {'type': 'integer', 'minimum': 0}
        },
    'required': ['pass', 'fail', 'not-applicable'],
    'additionalProperties': False
    }

algebra = {
    'type': 'object',
    'properties': {
        'name': {'type': 'string'},
        'source': {},
        'dim': {'type': 'integer', 'minimum': 0},
        'field': {'type': 'string'},
        'checks': checks,
        'draws': {'type': 'integer', 'minimum': 0},
        'error': {'type': 'string'}
        },
    'required': ['name', 'checks']
    }

instance = {
    'type': 'object',
    'properties': {
        'instance': {'type': 'string'},
        'algebra': {'type': 'string'},
        'checks': checks,
        'flags': {'type': 'object', 'additionalProperties': {'type': 'boolean'}},
        'samples': {'type': 'object', 'additionalProperties': {'type': 'integer', 'minimum': 0}},
        'subalgebra': {'type': 'object'},
        'factor_coalgebra': {'type': 'object'}
        },
    'required': ['instance', 'algebra', 'checks', 'flags']
    }

coverage = {
    'type': 'object',
    'description': 'Sample counts of a run against the counts a full run needs, not verdicts',
    'additionalProperties': {
        'type': 'object',
        'properties': {
            'samples': {'type': 'integer', 'minimum': 0},
            'required': {'type': 'integer', 'minimum': 0},
            'met': {'type': 'boolean'}
            },
        'required': ['samples', 'required', 'met'],
        'additionalProperties': False
        }
    }

failure = {
    'type': 'object',
    'properties': {
        'instance': {'type': 'string'},
        'check': {'type': 'string'},
        'verdict': verdict
        },
    'required': ['instance', 'check', 'verdict'],
    'additionalProperties': False
    }

metadata = {
    'type': 'object',
    'properties': {
        'started': {'type': 'string'},
        'finished': {'type': 'string'},
        'timings': {'type': 'object', 'additionalProperties': {'type': 'number', 'minimum': 0}}
        },
    'required': ['started', 'finished', 'timings']
    }

document = {
    'type': 'object',
    'description': 'A verifier report',
    'properties': {
        'schema_version': {'type': 'string', 'pattern': r'^\d+\.\d+\.\d+$'},
        'kind': {'type': 'string', 'enum': ['verify', 'search-open-question']},
        'config': suite_config,
        'algebras': {'type': 'array', 'items': algebra},
        'instances': {'type': 'array', 'items': instance},
        'controls': checks,
        'candidates': {'type': 'array', 'items': instance},
        'coverage': coverage,
        'counts': counts,
        'failures': {'type': 'array', 'items': failure},
        'ok': {'type': 'boolean'},
        'metadata': metadata
        },
    'required': ['schema_version', 'kind', 'config', 'algebras', 'instances', 'counts', 'failures', 'ok', 'metadata'],
    'additionalProperties': False
    }
