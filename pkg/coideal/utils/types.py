'''
Type checks for values crossing the JSON boundary: scalars of the algebra
documents, field descriptors and the paths of the suite configuration.
@author: coideal developers
'''

# Imports
import re
from pathlib import Path
from typing import Any, Optional

# Scalars travel as integers or as "a/b" strings
FRACTION = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')
FIELD = re.compile(r'^(Q|p=(\d+))$')


class TypeChecker:

    @staticmethod
    def is_integer(obj: Any) -> bool:
        '''
        Checks if a number is an integer or if a string represents an integer.
        Booleans are not integers here.
        '''
        if isinstance(obj, str):
            return obj.lstrip('+-').isdigit()
        return isinstance(obj, int) and not isinstance(obj, bool)

    @staticmethod
    def is_fraction(obj: Any) -> bool:
        '''
        Checks if a string represents an exact rational number like "-3/4" or "5"
        '''
        return isinstance(obj, str) and FRACTION.match(obj) is not None

    @classmethod
    def is_scalar(cls, obj: Any) -> bool:
        return cls.is_integer(obj) or cls.is_fraction(obj)

    @staticmethod
    def is_field_descriptor(obj: Any) -> bool:
        '''
        Checks if a string names a ground field ("Q" or "p=<number>")
        '''
        return isinstance(obj, str) and FIELD.match(obj) is not None

    @staticmethod
    def is_function(obj: Any) -> bool:
        return callable(obj)

    @staticmethod
    def is_file(obj: Any) -> bool:
        try:
            return Path(obj).is_file()
        except (TypeError, OSError):
            return False

    @staticmethod
    def get_exact_type(obj: Any) -> Optional[str]:
        '''
        Returns the type of a decoded value with its module path, e.g. "builtins.list"
        '''
        cls = type(obj)
        return f'{getattr(cls, "__module__", "builtins")}.{cls.__qualname__}'
