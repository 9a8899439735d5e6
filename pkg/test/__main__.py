'''
Runs the coideal laboratories: all of them, or the ones named on the command line,
e.g. "python test hopf homologies"
@author: coideal developers
'''

# Imports
import unittest
import sys
from importlib import import_module
from pathlib import Path
from typing import List, Optional

# Test imports
import __init__


def laboratories() -> List[str]:
    return sorted(p.stem for p in Path(__file__).resolve().parent.glob('*.py') if not p.stem.startswith('__'))


def run(names: Optional[List[str]]=None) -> unittest.TestResult:
    known = laboratories()
    unknown = [n for n in names or [] if n not in known]
    if unknown:
        sys.exit(f'Unknown laboratories {unknown}, choose from {known}')
    loader = unittest.TestLoader()
    suite = unittest.TestSuite(loader.loadTestsFromModule(import_module(n)) for n in names or known)
    return unittest.TextTestRunner(verbosity=2 if names else 1).run(suite)


# Main
if __name__ == "__main__":
    result = run(sys.argv[1:])
    sys.exit(0 if result.wasSuccessful() else 1)
