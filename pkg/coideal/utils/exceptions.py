'''
The exception base of coideal and the process-wide handler for uncaught errors.
Every coideal error renders a message from its template and may carry a witness,
the data (basis vectors, index tuples, failing checks) that lets a reader
re-check the failure by hand.
@author: coideal developers
'''

# Imports
import sys
import traceback
from typing import Any, Callable, Dict, Optional, Type, Union

# coideal Imports
from . import logging


class ExceptionHandler:
    '''
    Installs a sys.excepthook matching a run mode of coideal.defaults.constants.MODE:
        product                 one line naming the error
        staging, development    the message together with the witness
        debug                   the message and the full traceback
    Fatal coideal errors end the process with their exit code.
    '''
    # Logger
    logger = None

    def __init__(self, mode: Optional[str]=None, logger: Optional[logging.logging.Logger]=None) -> None:
        self.__class__.logger = logger or logging.getLogger()
        handlers: Dict[str, Callable] = {
            'product': self.product_handler,
            'staging': self.witness_handler,
            'development': self.witness_handler,
            'debug': self.debug_handler,
            }
        mode = (mode or 'default').lower()
        method = handlers.get(mode, self.default_handler)
        if mode != 'default' and mode not in handlers:
            self.logger.error(f'Exception handler "{mode}" is not implemented')

        def exception_handler(error_type, error, error_trace):
            try:
                method(error_type, error, error_trace)
            except Exception as e:
                ExceptionHandler.logger.error(f'Cannot handle exception ({e})', exc_info=False)
            finally:
                if getattr(error, 'fatal', False):
                    sys.exit(getattr(error, 'exit_code', 2))
        replaced = sys.excepthook.__name__ == 'exception_handler'
        sys.excepthook = exception_handler
        self.mode = mode
        self.logger.debug(f'{"Changed" if replaced else "Setup"} exception handler "{mode.upper()}"')

    @staticmethod
    def _logger():
        return ExceptionHandler.logger or logging.getLogger()

    @staticmethod
    def default_handler(error_type, error, error_trace) -> None:
        ExceptionHandler._logger().error(f'{error_type.__name__}: "{getattr(error, "message", error)}"')

    @staticmethod
    def product_handler(error_type, error, error_trace) -> None:
        ExceptionHandler._logger().error(f'Exception "{error_type.__name__}" occurred!')

    @staticmethod
    def witness_handler(error_type, error, error_trace) -> None:
        logger = ExceptionHandler._logger()
        logger.error(f'{error_type.__name__}: "{getattr(error, "message", error)}"')
        witness = getattr(error, 'witness', None)
        if witness is not None:
            logger.error(f'Witness: {witness}')

    @staticmethod
    def debug_handler(error_type, error, error_trace) -> None:
        logger = ExceptionHandler._logger()
        try:
            ExceptionHandler.witness_handler(error_type, error, error_trace)
        finally:
            if logger.level == logging.DEBUG:
                traceback.print_exception(error_type, error, error_trace, chain=True)


class coidealBaseException(Exception):
    '''
    The base class for all coideal module exceptions.
    '''
    # A template string or function for string representations of this exception
    template: Union[str, Callable] = None

    # A flag causing the program to halt when fatal is True
    fatal: bool = False

    # The process exit status used for fatal errors and by the command line
    exit_code: int = 2

    def __init__(self, error, witness: Any=None) -> None:
        super().__init__(error)
        self.witness = witness
        try:
            if isinstance(self.template, str):
                self.message = self.template.format(error=error)
            elif callable(self.template):
                self.message = self.template(error)
            else:
                self.message = error
        except Exception as e:
            self.message = f'Error when building exception "{error.__class__.__name__}" message ({e})'

    def to_json(self) -> Dict[str, Any]:
        data = {'error': self.__class__.__name__, 'message': str(self.message)}
        if self.witness is not None:
            data['witness'] = self.witness
        return data

    def __str__(self) -> str:
        return str(self.message)


class coidealModuleImport(coidealBaseException):
    '''
    Gets thrown when a third-party package (sympy, jsonschema, semver, jinja2) cannot be imported
    '''
    fatal = True

    def template(self, error: Type[Exception]) -> str:
        if getattr(error, 'name', None):
            return f'Missing module dependency ({error.name}): Please install via "pip install -r requirements.txt"'
        return f'Missing module dependency ({error})'
