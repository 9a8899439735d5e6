'''
Allows running the verifier as "python -m coideal"
@author: coideal developers
'''

# Imports
import sys

# coideal Imports
from coideal.verifier.cli import main


if __name__ == '__main__':
    sys.exit(main())
