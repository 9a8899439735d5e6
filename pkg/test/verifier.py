'''
This laboratory checks the verification suite: configuration handling, suite
runs and their reports, the open question search and the command line interface
@author: coideal developers
'''

# Imports
import unittest
import logging
import sys
import json
import os
import tempfile

# Test imports
import __init__

# coideal Imports
from coideal.algebra import catalog
from coideal.algebra.correspondence import check_coideal_subalgebra, factor_by_subalgebra
from coideal.algebra.exactla import Field, Subspace
from coideal.algebra.hopfcore import Status
from coideal.algebra.hopfmod import CanonicalIso
from coideal.defaults import constants
from coideal.utils.formatters import dumpJson
from coideal.verifier import (SuiteConfig, coidealConfigError, is_compatible, periodic_control, render_markdown, run_suite,
                              search_open_question, validate_report)
from coideal.verifier import cli
from coideal.verifier.suite import open_question, random_dominions, VANISHING


# Setup logger
logger = logging.getLogger()
logger.setLevel(logging.DEBUG)
if not logger.hasHandlers():
    logger.addHandler(logging.StreamHandler(sys.stdout))

QC2 = {'family': 'group_algebra', 'field': 'Q', 'orders': [2]}
H4 = {'family': 'sweedler4', 'field': 'Q'}
SMALL = {'algebras': [QC2], 'sample_size': 2, 'iso_samples': 1, 'truncation': 3, 'workers': 1}


def document(report):
    '''The report as it is written to disk, without its wall-clock metadata'''
    data = json.loads(dumpJson(report.to_json()))
    del data['metadata']
    return data


# Test suite configurations
class ConfigChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testDefaults(self):
        config = SuiteConfig()
        self.assertEqual(config.mode, 'exhaustive-small', 'The default mode is not exhaustive')
        self.assertEqual(config.seed, 1, 'The default seed is not 1')
        self.assertIsNone(config.truncation, 'The default truncation is not derived from the algebra')
        self.assertEqual(config.format, 'json', 'The default format is not JSON')
        self.assertTrue(all(config.runs(c) for c in ('axioms', 'correspondence', 'homology')), 'The default config skips check groups')
        self.assertEqual(len(config.algebras), 8, 'The default catalog is incomplete')

    def testDefaultCoverage(self):
        config = SuiteConfig()
        self.assertGreaterEqual(config.draws * len(config.algebras), constants.REQUIRED_DRAWS, 'The default run draws too few coideal subalgebras')
        self.assertEqual(config.iso_samples, constants.ISO_SAMPLES, 'The default samples per isomorphism moved away from the constant')
        self.assertEqual(config.sample_size, constants.SAMPLE_SIZE, 'The default sample size moved away from the constant')

    def testOverrides(self):
        config = SuiteConfig(SMALL).with_values(seed=7, format=None)
        self.assertEqual(config.seed, 7, 'The seed was not overridden')
        self.assertEqual(config.format, 'json', 'A None override replaced the format')
        self.assertEqual(config.algebras, [QC2], 'Overriding the seed changed the algebras')

    def testInvalidConfigs(self):
        tests = [
                 {'mode': 'everything'},
                 {'seed': 'one'},
                 {'checks': ['axioms', 'telepathy']},
                 {'algebras': []},
                 {'workers': 0},
                 {'truncation': 0},
                 {'draws': -1},
                 {'colour': 'blue'},
                ]
        for t in tests:
            logger.debug(f'Rejecting configuration {t}')
            with self.assertRaises(coidealConfigError, msg=f'Configuration {t} was accepted'):
                SuiteConfig(t)

    def testLoad(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'suite.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(SMALL, f)
            config = SuiteConfig.load(path)
            self.assertEqual(config.algebras, [QC2], 'Loading a configuration changed its algebras')
            self.assertEqual(config.base, directory, 'Relative paths do not resolve against the configuration file')
            broken = os.path.join(directory, 'broken.json')
            with open(broken, 'w', encoding='utf-8') as f:
                f.write('{"algebras": [')
            with self.assertRaises(coidealConfigError, msg='A truncated configuration file was accepted'):
                SuiteConfig.load(broken)
            with self.assertRaises(coidealConfigError, msg='A missing configuration file was accepted'):
                SuiteConfig.load(os.path.join(directory, 'missing.json'))


# Test suite runs and their reports
class SuiteChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')
        cls.config = SuiteConfig(SMALL)
        cls.report = run_suite(cls.config)

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testRun(self):
        report = self.report
        logger.debug(f'{report}')
        self.assertTrue(report.ok, f'The suite fails on QC2: {report.failures()}')
        self.assertEqual(len(report.instances), 2, 'QC2 does not have exactly two right coideal subalgebras')
        self.assertIn('periodic_tor', report.controls, 'The periodic control did not run')
        self.assertEqual(report.counts()['fail'], 0, 'The counts record failures')

    def testCoverage(self):
        coverage = self.report.to_json()['coverage']
        tests = [
                 ['random_dominion', self.config.draws, constants.REQUIRED_DRAWS],
                 ['vanishing', sum(r.samples.get(name, 0) for _, r in self.report.instances for name in VANISHING), constants.REQUIRED_VANISHING_SAMPLES],
                ]
        tests.extend([f'iso_{name.value}', sum(r.samples.get(f'iso_{name.value}', 0) for _, r in self.report.instances), constants.REQUIRED_ISO_SAMPLES]
                     for name in CanonicalIso)
        for t in tests:
            self.assertIn(t[0], coverage, f'The coverage does not count "{t[0]}"')
            self.assertEqual(coverage[t[0]], {'samples': t[1], 'required': t[2], 'met': t[1] >= t[2]}, f'The coverage of "{t[0]}" is wrong')
        self.assertFalse(coverage['random_dominion']['met'], 'Thirteen draws on one algebra met the full run')
        self.assertTrue(self.report.ok, 'Unmet coverage turned into a failure')
        verdict = self.report.algebras[0]['checks']['random_dominion']
        self.assertIs(verdict.status, Status.PASS, f'A dominion differs from its coinvariants on QC2: {verdict.witness}')
        self.assertEqual(self.report.algebras[0]['draws'], self.config.draws, 'Not every draw was made')

    def testRandomDominions(self):
        tests = [
                 [catalog.sweedler4(Field.rational()), 'H4/Q'],
                 [catalog.sweedler4(Field.prime(7)), 'H4/GF(7)'],
                 [catalog.taft(3, 2, Field.prime(7)), 'T3/GF(7)'],
                 [catalog.dual_group_algebra([2, 2], Field.rational()), 'k^(C2×C2)'],
                ]
        config = SuiteConfig(SMALL).with_values(draws=8)
        for t in tests:
            verdict, made = random_dominions(t[0], config, t[1])
            logger.debug(f'Random dominions of {t[1]}: {verdict.detail}')
            self.assertIs(verdict.status, Status.PASS, f'A dominion of {t[1]} differs from its coinvariants: {verdict.witness}')
            self.assertEqual(made, 8, f'Not every draw on {t[1]} was made')

    def testAllChecksOnH4(self):
        config = SuiteConfig({'algebras': [H4], 'mode': 'exhaustive-small', 'sample_size': 4, 'iso_samples': 2, 'truncation': 3, 'draws': 4, 'workers': 1})
        report = run_suite(config)
        self.assertTrue(report.ok, f'The full suite fails on H4: {report.failures()}')
        self.assertEqual(report.counts()['fail'], 0, 'The counts of the full suite on H4 record failures')
        self.assertGreaterEqual(len(report.instances), 4, 'H4 over Q has fewer than four right coideal subalgebras')
        for _, instance in report.instances:
            self.assertIn('open_question', instance.checks, f'The open question was not checked on {instance.instance}')
            self.assertIn('condition_semisimple', instance.checks, f'The conditions were not sampled on {instance.instance}')
        self.assertTrue(validate_report(json.loads(dumpJson(report.to_json())))[0], 'The report of the full suite does not match its schema')

    def testDeterminism(self):
        again = run_suite(SuiteConfig(SMALL).with_values(workers=2))
        self.assertEqual(document(again), document(self.report), 'Equal configurations gave different reports')

    def testReportDocument(self):
        data = json.loads(dumpJson(self.report.to_json()))
        valid, cause = validate_report(data)
        self.assertTrue(valid, f'The report does not match its schema: {cause}')
        self.assertTrue(is_compatible(data['schema_version']), 'The report is incompatible with its own schema version')
        data['schema_version'] = '2.0.0'
        self.assertFalse(validate_report(data)[0], 'A report of another major version was accepted')
        del data['counts']
        self.assertFalse(validate_report(data)[0], 'A report without counts was accepted')

    def testMarkdown(self):
        text = render_markdown(json.loads(dumpJson(self.report.to_json())))
        self.assertIn('|', text, 'The Markdown report holds no table')
        self.assertIn('k[C2]/Q', text, 'The Markdown report does not name the algebra')
        self.assertEqual(self.report.render('markdown'), render_markdown(self.report.to_json()), 'Rendering to Markdown is inconsistent')

    def testSubsetOfChecks(self):
        config = SuiteConfig({'algebras': [H4], 'checks': ['axioms', 'correspondence', 'openquestion'], 'workers': 1})
        report = run_suite(config)
        self.assertTrue(report.ok, f'The correspondence on H4 fails: {report.failures()}')
        self.assertGreaterEqual(len(report.instances), 4, 'H4 over Q has fewer than four right coideal subalgebras')
        self.assertFalse(report.controls, 'The periodic control ran without the homology checks')

    def testBrokenAlgebra(self):
        H = catalog.sweedler4(Field.rational())
        data = catalog.to_json(H)
        data['antipode'] = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        with tempfile.TemporaryDirectory() as directory:
            with open(os.path.join(directory, 'broken.json'), 'w', encoding='utf-8') as f:
                json.dump(data, f)
            config = SuiteConfig({'algebras': ['broken.json'], 'checks': ['axioms'], 'workers': 1}, directory)
            report = run_suite(config)
        self.assertFalse(report.ok, 'A broken antipode passed the suite')
        self.assertEqual(report.instances, [], 'Instances were built on a broken algebra')
        self.assertIn('antipode', [f['check'] for f in report.failures()], 'The failure does not name the antipode')


# Test the open question search and the controls
class OpenQuestionChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testSearch(self):
        report = search_open_question(SuiteConfig({'algebras': [QC2, H4], 'workers': 1}))
        self.assertEqual(report.candidates, [], 'Finite-dimensional algebras gave an open question candidate')
        self.assertTrue(report.ok, f'The search fails: {report.failures()}')
        self.assertIn('candidates', report.to_json(), 'The search report lists no candidates')

    def testWholeAlgebra(self):
        H = catalog.sweedler4(Field.rational())
        A = check_coideal_subalgebra(H, Subspace.whole(H.field, H.dim))
        verdict = open_question(A, factor_by_subalgebra(H, A), {})
        self.assertIs(verdict.status, Status.NOT_APPLICABLE, 'The open question applies to C = k')

    def testPeriodicControl(self):
        for field in [Field.rational(), Field.prime(3)]:
            controls = periodic_control(field, 3)
            failing = [name for name, verdict in controls.items() if not verdict.ok]
            self.assertEqual(failing, [], f'The periodic control fails over {field.tag}: {failing}')

    def testCompatibility(self):
        tests = [
                 ['1.0.0', True],
                 ['1.4.2', True],
                 ['2.0.0', False],
                 ['one', False],
                 [None, False],
                ]
        for t in tests:
            self.assertEqual(is_compatible(t[0]), t[1], f'Compatibility of schema version {t[0]!r} is wrong')


# Test the command line interface
class CommandLineChecks(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        logger.info(f'Starting unittest: {cls.__name__}')

    @classmethod
    def tearDownClass(cls):
        logger.info(f'Ending unittest: {cls.__name__}')

    def testBuild(self):
        with tempfile.TemporaryDirectory() as directory:
            out = os.path.join(directory, 'h4.json')
            self.assertEqual(cli.main(['build', '--spec', json.dumps(H4), '--out', out]), cli.EXIT_OK, 'Building H4 failed')
            with open(out, 'rb') as f:
                H = catalog.load(f.read())
        self.assertEqual(H, catalog.sweedler4(Field.rational()), 'The built document does not load as H4')

    def testVerify(self):
        with tempfile.TemporaryDirectory() as directory:
            config, out = os.path.join(directory, 'suite.json'), os.path.join(directory, 'report.json')
            with open(config, 'w', encoding='utf-8') as f:
                json.dump(SMALL, f)
            self.assertEqual(cli.main(['verify', '--config', config, '--out', out]), cli.EXIT_OK, 'Verifying QC2 failed')
            with open(out, 'rb') as f:
                data = json.loads(f.read().decode('utf-8'))
        self.assertTrue(validate_report(data)[0], 'The written report does not match its schema')
        self.assertTrue(data['ok'], 'The written report is not ok')

    def testFailingSuite(self):
        data = catalog.to_json(catalog.sweedler4(Field.rational()))
        data['antipode'] = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        with tempfile.TemporaryDirectory() as directory:
            config, out = os.path.join(directory, 'suite.json'), os.path.join(directory, 'report.json')
            with open(os.path.join(directory, 'broken.json'), 'w', encoding='utf-8') as f:
                json.dump(data, f)
            with open(config, 'w', encoding='utf-8') as f:
                json.dump({'algebras': ['broken.json'], 'checks': ['axioms'], 'workers': 1}, f)
            self.assertEqual(cli.main(['verify', '--config', config, '--out', out]), cli.EXIT_FAILED, 'A failing suite did not exit with status 1')
            self.assertEqual(cli.EXIT_FAILED, 1, 'Failing suites do not exit with status 1')
            with open(out, 'rb') as f:
                data = json.loads(f.read().decode('utf-8'))
        self.assertFalse(data['ok'], 'The written report of a failing suite is ok')
        self.assertTrue(validate_report(data)[0], 'The written report of a failing suite does not match its schema')

    def testUsageErrors(self):
        tests = [
                 [],
                 ['frobnicate'],
                 ['build'],
                 ['build', '--spec', '{"family": "quantum_group", "field": "Q"}'],
                 ['verify', '--config', os.path.join(tempfile.gettempdir(), 'coideal-missing', 'suite.json')],
                ]
        for t in tests:
            logger.debug(f'Running coideal {" ".join(t)}')
            self.assertEqual(cli.main(t), cli.EXIT_USAGE, f'Arguments {t} did not exit with a usage error')


# Main
if __name__ == '__main__':
    unittest.main()
