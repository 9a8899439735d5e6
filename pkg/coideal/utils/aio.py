'''
Runs the verification of independent instances on a worker pool driven by an asyncio loop.
Results always come back in task order so that reports do not depend on scheduling.
@author: coideal developers
'''

# Imports
import sys
import asyncio
try:
    import uvloop
except ImportError:
    uvloop = None
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Any, Callable, Iterable, List, Optional

# coideal Imports
from coideal.utils import logging
from coideal.utils.types import TypeChecker as checker
from coideal.utils.exceptions import coidealBaseException


class coidealAsyncLoopCreation(coidealBaseException):
    '''
    Gets thrown when no asyncio loop can be created
    '''
    template = 'Cannot create asyncio loop ({error})'


class coidealAsyncLoopException(coidealBaseException):
    '''
    Wraps an exception the loop reports outside of a gathered worker
    '''
    template = 'Caught async loop exception ({error})'


def get_loop() -> asyncio.AbstractEventLoop:
    '''
    Returns a new event loop, a uvloop one when the package is installed.
    Exceptions the loop cannot deliver to a caller go to sys.excepthook.
    '''
    try:
        loop = uvloop.new_event_loop() if uvloop else asyncio.new_event_loop()
    except Exception as e:
        raise coidealAsyncLoopCreation(e)

    def handle_exception(loop, context):
        cause = context.get('exception')
        error = coidealAsyncLoopException(cause or context.get('message'))
        sys.excepthook(type(error), error, cause.__traceback__ if cause else None)
    loop.set_exception_handler(handle_exception)
    return loop


def run_concurrently(function: Callable, tasks: Iterable[Any], *args, max_threads: Optional[int]=None, timeout: Optional[float]=None) -> List[Any]:
    '''
    Calls function(task, *args) for every task item and returns the results in task order.
    :param int max_threads: The pool size; one thread per task when unset, no pool at all for 1
    :param float timeout: Seconds after which waiting for the pool is abandoned
    The first exception raised by a call is re-raised here.
    '''
    tasks = list(tasks)
    if not checker.is_function(function) or not tasks:
        return []
    threads = int(max_threads) if checker.is_integer(max_threads) else len(tasks)
    if threads <= 1:
        return [function(t, *args) for t in tasks]

    logger = logging.getLogger()
    name = getattr(function, '__name__', function)
    loop = get_loop()
    try:
        with ThreadPoolExecutor(max_workers=min(threads, len(tasks)), thread_name_prefix='coideal') as executor:
            workers = [loop.run_in_executor(executor, partial(function, t, *args)) for t in tasks]
            logger.debug(f'Running {len(workers)} tasks of "{name}" on {min(threads, len(tasks))} threads')
            return loop.run_until_complete(asyncio.wait_for(asyncio.gather(*workers), timeout=timeout))
    finally:
        loop.close()
