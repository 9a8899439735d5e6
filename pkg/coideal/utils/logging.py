'''
Logging for coideal. Every module logs through getLogger() so that the command line
verbosity and the debug mode reach the whole verifier, including its worker threads.
@author: coideal developers
'''

# Imports
import os
import time
import logging
from contextlib import contextmanager
from typing import Dict, Iterator, Optional, Union

# coideal Imports
from coideal.defaults import constants

# Set logging module
logging = logging

# Constants
DEBUG = logging.DEBUG

# Formats
FORMAT_DATE = '%d.%m.%Y %H:%M:%S'
FORMATS = {
    False: '%(asctime)s %(levelname)-8s %(message)s',
    True: '%(asctime)s %(levelname)-8s %(message)s [%(threadName)s %(module)s.%(funcName)s():#%(lineno)s]',
    }

# Colored level names on terminals
COLORS = {
    logging.INFO: '1;32',
    logging.WARNING: '1;33',
    logging.ERROR: '1;31',
    logging.CRITICAL: '1;41',
    }


class LevelFormatter(logging.Formatter):
    '''
    Colors the level name when the handler writes to a terminal
    '''

    def __init__(self, debug: bool=False, color: bool=False) -> None:
        super().__init__(FORMATS[debug], FORMAT_DATE)
        self.debug = debug
        self.color = color

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        code = COLORS.get(record.levelno)
        if self.color and code:
            text = text.replace(record.levelname, f'\033[{code}m{record.levelname}\033[0m', 1)
        return text


def getLevelName(level: int) -> str:
    return logging.getLevelName(level)


def levelFromVerbosity(verbosity: Optional[int]) -> int:
    '''
    Translates a command line verbosity (1 = critical only ... 5 = debug) into a logging level
    '''
    try:
        verbosity = int(verbosity)
    except (TypeError, ValueError):
        verbosity = constants.VERBOSITY
    return (6 - min(max(verbosity, 1), 5)) * 10


def getLogger(name: Optional[Union[int, str]]=None, level: Optional[int]=None, handler: Optional[logging.Handler]=None) -> logging.Logger:
    '''
    Returns the named logger (the process id by default). A new logger gets one
    stream handler; an existing logger only has its level and format updated.
    The debug mode forces the debug level.
    '''
    if constants.MODE == 'debug':
        level = DEBUG
    elif level:
        level = int(level)
    name = str(os.getpid() if name is None else name)
    known = name in logging.Logger.manager.loggerDict
    logger = logging.getLogger(name)

    if not known:
        logger.setLevel(level or levelFromVerbosity(constants.VERBOSITY))
        handler = handler or logging.StreamHandler()
        logger.addHandler(handler)
    elif level and logger.level != level:
        logger.setLevel(level)
        logger.debug(f'Changed level of logger "{name}" to "{getLevelName(level)}"')
    if not known or level:
        for h in logger.handlers:
            stream = getattr(h, 'stream', None)
            h.setFormatter(LevelFormatter(logger.level == DEBUG, bool(getattr(stream, 'isatty', lambda: False)())))
    if not known:
        logger.debug(f'Setup logger "{name}" with level "{getLevelName(logger.level)}"')
    return logger


@contextmanager
def timed(label: str, timings: Optional[Dict[str, float]]=None, logger: Optional[logging.Logger]=None) -> Iterator[None]:
    '''
    Measures the wall-clock time of the with-block, logs it at debug level
    and accumulates it under "label" in the optional timings dictionary
    '''
    logger = logger or getLogger()
    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed = time.perf_counter() - start
        if timings is not None:
            timings[label] = timings.get(label, 0.0) + elapsed
        logger.debug(f'Check "{label}" took {elapsed:.3f}s')
