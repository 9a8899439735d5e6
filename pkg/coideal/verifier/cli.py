'''
Command line interface of the verifier:
    build                   builds a catalog algebra and prints its structure constants
    verify                  runs the verification suite
    search-open-question    searches factor coalgebras for coflat non-cogenerator cases
Exit codes: 0 if every check passed, 1 if a check failed, 2 on usage or I/O errors.
@author: coideal developers
'''

# Imports
import argparse
import json
import sys
from typing import List, Optional

# coideal Imports
from coideal.algebra import catalog
from coideal.defaults import constants as G
from coideal.utils.exceptions import ExceptionHandler, coidealBaseException
from coideal.utils.formatters import dumpJson
from coideal.utils import logging as L
from coideal.verifier.suite import SuiteConfig, run_suite, search_open_question

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _spec(value: str) -> dict:
    '''An inline JSON specification or the path of a file holding one'''
    if value.lstrip().startswith('{'):
        return json.loads(value)
    with open(value, 'rb') as f:
        return json.loads(f.read().decode('utf-8'))


def buildHandler(arguments: argparse.Namespace) -> int:
    try:
        spec = _spec(arguments.spec)
    except (OSError, ValueError) as e:
        raise catalog.coidealSpecError(f'cannot read "{arguments.spec}": {e}')
    if not isinstance(spec, dict):
        raise catalog.coidealSpecError(f'"{arguments.spec}" is no JSON object')
    H = catalog.build(catalog.AlgebraSpec.from_json(spec))
    _write(dumpJson(catalog.to_json(H)), arguments.out)
    return EXIT_OK


def _config(arguments: argparse.Namespace) -> SuiteConfig:
    config = SuiteConfig.load(arguments.config) if arguments.config else SuiteConfig()
    return config.with_values(seed=arguments.seed, format=arguments.format, workers=arguments.workers)


def verifyHandler(arguments: argparse.Namespace) -> int:
    report = run_suite(_config(arguments))
    _write(report.render(), arguments.out)
    L.getLogger().info(f'Verified {len(report.instances)} instances: {report.counts()}')
    return EXIT_OK if report.ok else EXIT_FAILED


def searchHandler(arguments: argparse.Namespace) -> int:
    report = search_open_question(_config(arguments))
    _write(report.render(), arguments.out)
    L.getLogger().info(f'Searched {len(report.instances)} factor coalgebras, {len(report.candidates)} candidates')
    return EXIT_OK if report.ok else EXIT_FAILED


def parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='coideal',
        description='Exact verification of the coideal subalgebra and quotient coalgebra correspondence:',
        add_help=True
        )
    subparser = parser.add_subparsers(
        help='Command description',
        dest='module'
        )
    subparser_defaults = argparse.ArgumentParser(add_help=False)
    subparser_defaults.add_argument(
        '--verbosity',
        type=int,
        metavar='INT',
        help=f'Regulate the output verbosity from 1 to 5 (Default={G.VERBOSITY})',
        default=G.VERBOSITY
        )
    subparser_defaults.add_argument(
        '--debug',
        action='store_true',
        help='Set the debug mode',
        default=False
        )
    subparser_defaults.add_argument(
        '--out',
        type=str,
        metavar='PATH',
        help='Write the output to a file instead of stdout',
        default=None
        )

    # Suite options
    suite_defaults = argparse.ArgumentParser(add_help=False)
    suite_defaults.add_argument(
        '--config',
        type=str,
        metavar='PATH',
        help='A suite configuration file (Default: the built-in catalog)',
        default=None
        )
    suite_defaults.add_argument(
        '--format',
        type=str,
        choices=['json', 'markdown', 'md'],
        help='The report format (Default: from the configuration)',
        default=None
        )
    suite_defaults.add_argument(
        '--seed',
        type=int,
        metavar='INT',
        help='Override the seed of the configuration',
        default=None
        )
    suite_defaults.add_argument(
        '--workers',
        type=int,
        metavar='INT',
        help='Override the size of the worker pool',
        default=None
        )

    # Build subparser
    parser_build = subparser.add_parser(
        'build',
        help='Build a catalog algebra',
        description='Build a catalog algebra and print its structure constants:',
        parents=[subparser_defaults]
        )
    parser_build.set_defaults(handler=buildHandler)
    parser_build.add_argument(
        '--spec',
        type=str,
        required=True,
        metavar='JSON|PATH',
        help='An algebra specification as inline JSON or a file path'
        )

    # Verify subparser
    parser_verify = subparser.add_parser(
        'verify',
        help='Run the verification suite',
        description='Run the verification suite and write its report:',
        parents=[subparser_defaults, suite_defaults]
        )
    parser_verify.set_defaults(handler=verifyHandler)

    # Open question subparser
    parser_search = subparser.add_parser(
        'search-open-question',
        help='Search for injective non-cogenerator factor coalgebras',
        description='Search factor coalgebras over which H is injective but no cogenerator:',
        parents=[subparser_defaults, suite_defaults]
        )
    parser_search.set_defaults(handler=searchHandler)
    return parser


def main(argv: Optional[List[str]]=None) -> int:
    '''
    Parses the arguments, sets verbosity and mode and runs the chosen command
    '''
    try:
        arguments = parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if not hasattr(arguments, 'handler'):
        parser().print_help()
        return EXIT_USAGE
    if getattr(arguments, 'format', None) == 'md':
        arguments.format = 'markdown'

    # Set verbosity level
    if arguments.verbosity in range(1, 6):
        G.VERBOSITY = arguments.verbosity
    level = L.levelFromVerbosity(G.VERBOSITY)

    # Set debug mode based on arguments
    if arguments.debug:
        G.MODE = 'debug'
        level = L.levelFromVerbosity(5)
    logger = L.getLogger(level=level)

    # Set Error handler (Only after we set the G.MODE)
    G.ERROR = ExceptionHandler(G.MODE)
    try:
        return arguments.handler(arguments)
    except coidealBaseException as e:
        logger.error(e.message)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f'Cannot write "{arguments.out}": {e.strerror or e}' if arguments.out else str(e))
        return EXIT_USAGE
