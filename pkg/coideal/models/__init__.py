'''
JSON schemas of the documents coideal reads and writes, and the two ways of using them:
validating a value and filling in the defaults of an object. Schemas live as
dictionaries in the modules of this package and are addressed by tokens
"<module>.<schema>[.<property>...]", e.g. "suite.config.seed".
@author: coideal developers
'''

# Imports
from copy import deepcopy
from importlib import import_module
from typing import Any, Dict, Optional, Tuple
try:
    from jsonschema import Draft7Validator
    from jsonschema.exceptions import SchemaError, best_match
except ImportError as e:
    from coideal.utils.exceptions import coidealModuleImport
    raise coidealModuleImport(e)

# coideal Imports
from coideal.utils import logging
from coideal.utils.formatters import ellipsis


def _schema(token: str) -> Optional[Dict[str, Any]]:
    '''
    Finds the (sub-)schema a token refers to. Array items are addressed by "[]".
    '''
    domain, _, key = str(token).partition('.')
    try:
        module = import_module(f'{__package__}.{domain}')
    except ImportError:
        return None
    path = key.split('.') if key else []
    schema = getattr(module, path.pop(0), None) if path else None
    for step in path:
        if not isinstance(schema, dict):
            return None
        schema = schema.get('items') if step == '[]' else (schema.get('properties') or {}).get(step)
    return schema if isinstance(schema, dict) else None


def _defaults(schema: Dict[str, Any]) -> Any:
    '''
    The default of a schema. Objects without a declared default collect the
    defaults of their properties; properties without any default are left out.
    '''
    if 'default' in schema:
        return deepcopy(schema['default'])
    if schema.get('type') == 'object':
        return {key: _defaults(p) for key, p in (schema.get('properties') or {}).items()
                if 'default' in p or p.get('type') == 'object'}
    return [] if schema.get('type') == 'array' else None


def _where(error) -> str:
    path = '/'.join(str(p) for p in error.absolute_path)
    return f'{path}: {error.message}' if path else error.message


def isValidValue(token: str, value: Any) -> Tuple[bool, Any]:
    '''
    Validates a value against the schema of the token.
    :returns: (True, value) or (False, the most relevant failure with its JSON path)
    '''
    logger = logging.getLogger()
    schema = _schema(token)
    if schema is None:
        logger.warning(f'No schema "{token}" in coideal.models')
        return False, f'unknown schema "{token}"'
    try:
        error = best_match(Draft7Validator(schema).iter_errors(value))
    except SchemaError as e:
        logger.warning(f'Schema "{token}" is malformed ({e.message})')
        return False, e.message
    if error is not None:
        logger.debug(f'Value "{ellipsis(str(value), 40)}" does not match schema "{token}" ({error.message})')
        return False, _where(error)
    return True, value


def withDefaults(token: str, value: Dict[str, Any]) -> Dict[str, Any]:
    '''
    Returns a copy of an object value with missing properties filled from the schema defaults
    '''
    schema = _schema(token)
    data = (_defaults(schema) if schema else None) or {}
    data.update(deepcopy(value))
    return data
