'''
This laboratory checks the functionality of the coideal utils: the type checker,
the formatters, timing, concurrency, the exception templates and the schema helpers
@author: coideal developers
'''

# Imports
import unittest
import logging
import sys
import json
from collections import OrderedDict
from fractions import Fraction

# Test imports
import __init__

# coideal Imports
from coideal.utils.types import TypeChecker as checker
from coideal.utils.formatters import MarkdownTableFormatter, dumpJson, ellipsis
from coideal.utils.aio import run_concurrently
from coideal.utils.exceptions import coidealBaseException
from coideal.utils import logging as L
from coideal import models


# Setup logger
logger = logging.getLogger()
logger.setLevel(logging.DEBUG)
if not logger.hasHandlers():
    logger.addHandler(logging.StreamHandler(sys.stdout))


class coidealExample(coidealBaseException):
    template = 'Example failure ({error})'


# Test type checking
class TypeChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testIntegers(self):
        tests = [
                 [5, True],
                 ['-12', True],
                 ['+3', True],
                 [True, False],
                 [1.0, False],
                 ['1/2', False],
                 ['one', False],
                ]
        for t in tests:
            logger.debug(f'Value {t[0]!r} is{" " if t[1] else " not "}an integer')
            self.assertEqual(checker.is_integer(t[0]), t[1], f'Testing integers failed for {t[0]!r}')

    def testScalars(self):
        tests = [
                 ['-3/4', True],
                 [' 7 / 2 ', True],
                 ['5', True],
                 [5, True],
                 ['3/-4', False],
                 ['1.5', False],
                 [Fraction(1, 2), False],
                 [None, False],
                ]
        for t in tests:
            logger.debug(f'Value {t[0]!r} is{" " if t[1] else " not "}a transportable scalar')
            self.assertEqual(checker.is_scalar(t[0]), t[1], f'Testing scalars failed for {t[0]!r}')

    def testFieldDescriptors(self):
        tests = [
                 ['Q', True],
                 ['p=7', True],
                 ['p=', False],
                 ['q', False],
                 ['R', False],
                 [7, False],
                ]
        for t in tests:
            self.assertEqual(checker.is_field_descriptor(t[0]), t[1], f'Testing field descriptors failed for {t[0]!r}')

    def testExactTypes(self):
        self.assertEqual(checker.get_exact_type(Fraction(1, 2)), 'fractions.Fraction', 'The exact type of a fraction is wrong')
        self.assertEqual(checker.get_exact_type(1), 'builtins.int', 'The exact type of a builtin is wrong')
        self.assertFalse(checker.is_file('/this/path/does/not/exist'), 'A missing path is a file')
        self.assertTrue(checker.is_file(__file__), 'This laboratory is not a file')


# Test formatters
class FormatterChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testDumpJson(self):
        text = dumpJson({'b': Fraction(1, 2), 'a': [1, 2]})
        self.assertTrue(text.endswith('\n'), 'Dumped JSON does not end with a newline')
        self.assertLess(text.index('"a"'), text.index('"b"'), 'Dumped JSON keys are not sorted')
        self.assertEqual(json.loads(text)['b'], '1/2', 'A fraction was not dumped as its string')
        self.assertEqual(dumpJson({'x': 1, 'y': 2}), dumpJson({'y': 2, 'x': 1}), 'Equal data dumped differently')

    def testMarkdownTable(self):
        columns = OrderedDict([('check', 'Check'), ('status', 'Status')])
        table = MarkdownTableFormatter(columns, [{'check': 'antipode', 'status': 'pass'}, {'check': 'a|b', 'status': 'fail'}]).render()
        lines = table.split('\n')
        self.assertEqual(len(lines), 4, 'The table does not have a header, a rule and two rows')
        self.assertTrue(lines[0].startswith('| Check'), 'The table header is wrong')
        self.assertIn('a\\|b', lines[3], 'A pipe inside a cell was not escaped')

    def testEllipsis(self):
        self.assertEqual(ellipsis('short', 30), 'short', 'A short text was shortened')
        self.assertTrue(ellipsis('many words in a rather long sentence', 15).endswith('...'), 'A long text has no ellipsis')


# Test logging, concurrency and exceptions
class RuntimeChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testTimed(self):
        timings = {}
        for _ in range(2):
            with L.timed('work', timings):
                sum(range(1000))
        self.assertIn('work', timings, 'The timing was not recorded')
        self.assertGreaterEqual(timings['work'], 0.0, 'A negative duration was recorded')
        with self.assertRaises(ValueError, msg='timed swallowed an exception'):
            with L.timed('broken', timings):
                raise ValueError('broken')
        self.assertIn('broken', timings, 'A failing block was not timed')

    def testVerbosity(self):
        tests = [
                 [1, logging.CRITICAL],
                 [3, logging.WARNING],
                 [5, logging.DEBUG],
                ]
        for t in tests:
            self.assertEqual(L.levelFromVerbosity(t[0]), t[1], f'Verbosity {t[0]} maps to the wrong level')

    def testConcurrency(self):
        tasks = list(range(10))
        for threads in (1, 3, None):
            results = run_concurrently(lambda x, y: x * y, tasks, 2, max_threads=threads)
            self.assertEqual(results, [2 * t for t in tasks], f'Results lost their order with {threads} threads')
        self.assertEqual(run_concurrently(lambda x: x, []), [], 'Running nothing returned results')

    def testExceptionTemplates(self):
        e = coidealExample('broken')
        self.assertEqual(e.message, 'Example failure (broken)', 'The exception template was not applied')
        self.assertEqual(str(e), e.message, 'The exception string is not its message')
        self.assertEqual(coidealBaseException('plain').message, 'plain', 'An exception without template changed its message')

    def testExceptionWitness(self):
        tests = [
                 [coidealExample('broken'), None, {'error': 'coidealExample', 'message': 'Example failure (broken)'}],
                 [coidealExample('broken', [0, 1]), [0, 1], {'error': 'coidealExample', 'message': 'Example failure (broken)', 'witness': [0, 1]}],
                ]
        for t in tests:
            self.assertEqual(t[0].witness, t[1], f'The witness of {t[0]!r} is wrong')
            self.assertEqual(t[0].to_json(), t[2], f'The JSON of {t[0]!r} is wrong')
        self.assertEqual(coidealExample.exit_code, 2, 'coideal errors do not exit with a usage error')


# Test schema validation and defaults
class SchemaChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testValidation(self):
        tests = [
                 ['suite.config', {'seed': 3}, True],
                 ['suite.config.seed', 3, True],
                 ['suite.config', {'seed': 'one'}, False],
                 ['algebra.spec', {'family': 'taft', 'field': 'p=7', 'n': 3, 'q': 2}, True],
                 ['algebra.spec', {'field': 'Q'}, False],
                 ['nothing.here', {}, False],
                ]
        for t in tests:
            valid, cause = models.isValidValue(t[0], t[1])
            logger.debug(f'Schema "{t[0]}" on {t[1]}: {cause}')
            self.assertEqual(valid, t[2], f'Validating {t[1]} against "{t[0]}" failed')
        self.assertIn('seed', models.isValidValue('suite.config', {'seed': 'one'})[1], 'The failure does not name its property')

    def testDefaults(self):
        data = models.withDefaults('suite.config', {'seed': 5})
        self.assertEqual(data['seed'], 5, 'A given value was replaced by its default')
        self.assertEqual(data['mode'], 'exhaustive-small', 'A missing value was not filled in')
        self.assertIsNone(data['truncation'], 'A null default was dropped')
        self.assertEqual(models.withDefaults('nothing.here', {'a': 1}), {'a': 1}, 'An unknown schema changed the value')


# Main
if __name__ == '__main__':
    unittest.main()
