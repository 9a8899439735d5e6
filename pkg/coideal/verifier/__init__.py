'''
This package runs the verification suite over catalog algebras and their
coideal subalgebras and provides the command line interface.
@author: coideal developers
'''

# coideal Imports
from coideal.verifier.suite import (SuiteConfig, SuiteReport, coidealConfigError, is_compatible, periodic_control, render_markdown,
                                    run_suite, search_open_question, validate_report)
