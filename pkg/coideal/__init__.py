'''
This module initializes the coideal package
@author: coideal developers
'''

# coideal Imports
from coideal.utils.exceptions import ExceptionHandler


# Create a default exception handler
ExceptionHandler()
