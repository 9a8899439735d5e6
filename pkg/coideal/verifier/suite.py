'''
The verification suite: builds or loads the configured Hopf algebras, generates
right coideal subalgebras, runs every check group on each (H, A) instance and
assembles the results into a report. Instances run concurrently; the report is
assembled in input order so equal configurations give equal reports.
@author: coideal developers
'''

# Imports
import json
import os
from collections import OrderedDict
from datetime import datetime, timezone
from random import Random
from typing import Any, Dict, List, Optional, Tuple
try:
    import semver
except ImportError as e:
    from coideal.utils.exceptions import coidealModuleImport
    raise coidealModuleImport(e)

# coideal Imports
from coideal import models
from coideal.algebra import catalog
from coideal.algebra.exactla import Field
from coideal.algebra.hopfcore import (FiniteAlgebra, FiniteHopfAlgebra, Side, Status, Verdict, antimorphism_report,
                                      coidealAxiomFailure, verify_axioms)
from coideal.algebra.correspondence import (CoidealSubalgebra, CorrespondenceReport, FactorCoalgebra, coinvariants, dominion,
                                            enumerate_coideal_subalgebras, factor_by_subalgebra, random_coideal_subalgebra, roundtrip)
from coideal.algebra.hopfmod import (CanonicalIso, ComoduleStr, CotensorOverCoalgebra, ModuleStr, TakeuchiContext, TensorOverAlgebra,
                                     canonical_iso, coidealStructureError, fundamental_theorem, morphism_space)
from coideal.algebra import homology
from coideal.algebra.homology import HopfModuleSampler
from coideal.defaults import constants
from coideal.templates import report as templates
from coideal.utils.exceptions import coidealBaseException
from coideal.utils.formatters import MarkdownTableFormatter, dumpJson
from coideal.utils.aio import run_concurrently
from coideal.utils.types import TypeChecker as checker
from coideal.utils import logging

# An instance: algebra name, instance name, H and A
Task = Tuple[str, str, FiniteHopfAlgebra, CoidealSubalgebra]

# The vanishing statements of higher Tor, Ext and Cotor on sampled Hopf modules
VANISHING = ('vanishing_tor', 'vanishing_ext', 'vanishing_cotor', 'vanishing_comodule_ext')


class coidealConfigError(coidealBaseException):
    '''
    Gets thrown when a suite configuration cannot be read or is invalid
    '''
    template = 'Invalid suite configuration ({error})'


class SuiteConfig(object):
    '''
    A validated suite configuration with all defaults of the "suite.config" model
    filled in. Relative algebra document paths resolve against base.
    '''

    def __init__(self, data: Optional[Dict[str, Any]]=None, base: Optional[str]=None) -> None:
        data = {} if data is None else data
        valid, cause = models.isValidValue('suite.config', data)
        if not valid:
            raise coidealConfigError(cause)
        self.data = models.withDefaults('suite.config', data)
        self.base = base or os.getcwd()

    @classmethod
    def from_json(cls, data: Dict[str, Any], base: Optional[str]=None) -> 'SuiteConfig':
        return cls(data, base)

    @classmethod
    def load(cls, path: str) -> 'SuiteConfig':
        '''
        Reads a configuration file; unreadable or malformed files raise a
        coidealConfigError naming the file
        '''
        try:
            with open(path, 'rb') as f:
                data = json.loads(f.read().decode('utf-8'))
        except OSError as e:
            raise coidealConfigError(f'cannot read "{path}": {e.strerror or e}')
        except (ValueError, UnicodeDecodeError) as e:
            raise coidealConfigError(f'cannot parse "{path}": {e}')
        if not isinstance(data, dict):
            raise coidealConfigError(f'"{path}" holds {checker.get_exact_type(data)} instead of a JSON object')
        return cls(data, os.path.dirname(os.path.abspath(path)))

    def __getattr__(self, key: str) -> Any:
        data = self.__dict__.get('data') or {}
        if key in data:
            return data[key]
        raise AttributeError(key)

    def runs(self, check: str) -> bool:
        return check in self.data['checks']

    def with_values(self, **values) -> 'SuiteConfig':
        '''A copy with some values replaced, None values are ignored'''
        data = dict(self.data)
        data.update({k: v for k, v in values.items() if v is not None})
        return SuiteConfig(data, self.base)

    def to_json(self) -> Dict[str, Any]:
        return dict(self.data)

    def __repr__(self) -> str:
        return f'SuiteConfig({self.data["mode"]}, seed={self.data["seed"]}, {len(self.data["algebras"])} algebras)'


class SuiteReport(object):
    '''
    Per-algebra axiom verdicts, per-instance correspondence reports, global
    controls and open-question candidates. Counts and failures are derived from
    the recorded verdicts; wall-clock data is kept apart in the metadata.
    '''

    def __init__(self, kind: str, config: SuiteConfig) -> None:
        self.kind = kind
        self.config = config
        self.algebras: List[Dict[str, Any]] = []
        self.instances: List[Tuple[str, CorrespondenceReport]] = []
        self.controls: 'OrderedDict[str, Verdict]' = OrderedDict()
        self.candidates: List[Tuple[str, CorrespondenceReport]] = []
        self.timings: Dict[str, float] = {}
        self.started = datetime.now(timezone.utc).isoformat()
        self.finished = None

    def _verdicts(self) -> List[Tuple[str, str, Verdict]]:
        verdicts = []
        for algebra in self.algebras:
            verdicts.extend((algebra['name'], name, v) for name, v in algebra['checks'].items())
        for _, report in self.instances:
            verdicts.extend((report.instance, name, v) for name, v in report.checks.items())
        verdicts.extend(('controls', name, v) for name, v in self.controls.items())
        return verdicts

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for _, _, verdict in self._verdicts():
            counts[verdict.status.value] += 1
        return counts

    def failures(self) -> List[Dict[str, Any]]:
        return [{'instance': instance, 'check': name, 'verdict': v.to_json()} for instance, name, v in self._verdicts() if not v.ok]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def coverage(self) -> 'OrderedDict[str, Dict[str, Any]]':
        '''
        How many samples the run drew for its sampled statements, next to the
        number a full run needs. Coverage is no verdict and leaves ok alone.
        '''
        def covered(samples: int, required: int) -> Dict[str, Any]:
            return {'samples': samples, 'required': required, 'met': samples >= required}

        def tallied(key: str) -> int:
            return sum(report.samples.get(key, 0) for _, report in self.instances)

        coverage = OrderedDict()
        if self.kind != 'verify':
            return coverage
        if self.config.runs('correspondence'):
            coverage['random_dominion'] = covered(sum(a.get('draws', 0) for a in self.algebras), constants.REQUIRED_DRAWS)
        if self.config.runs('isomorphisms'):
            for name in CanonicalIso:
                coverage[f'iso_{name.value}'] = covered(tallied(f'iso_{name.value}'), constants.REQUIRED_ISO_SAMPLES)
        if self.config.runs('homology'):
            coverage['vanishing'] = covered(sum(tallied(name) for name in VANISHING), constants.REQUIRED_VANISHING_SAMPLES)
        return coverage

    def add_timings(self, timings: Dict[str, float]) -> None:
        for label, seconds in timings.items():
            self.timings[label] = self.timings.get(label, 0.0) + seconds

    def finish(self) -> 'SuiteReport':
        self.finished = datetime.now(timezone.utc).isoformat()
        return self

    def to_json(self) -> Dict[str, Any]:
        def instance(algebra: str, report: CorrespondenceReport) -> Dict[str, Any]:
            return {**report.to_json(), 'algebra': algebra}

        data = {
            'schema_version': str(semver.Version.parse(constants.REPORT_VERSION)),
            'kind': self.kind,
            'config': self.config.to_json(),
            'algebras': [{**a, 'checks': {n: v.to_json() for n, v in a['checks'].items()}} for a in self.algebras],
            'instances': [instance(a, r) for a, r in self.instances],
            'counts': self.counts(),
            'failures': self.failures(),
            'ok': self.ok,
            'metadata': {
                'started': self.started,
                'finished': self.finished or self.started,
                'timings': {label: round(seconds, 6) for label, seconds in self.timings.items()},
                },
            }
        if self.controls:
            data['controls'] = {name: v.to_json() for name, v in self.controls.items()}
        coverage = self.coverage()
        if coverage:
            data['coverage'] = coverage
        if self.kind == 'search-open-question':
            data['candidates'] = [instance(a, r) for a, r in self.candidates]
        return data

    def render(self, fmt: Optional[str]=None) -> str:
        '''The report as sorted JSON or as a Markdown document'''
        fmt = fmt or self.config.format
        data = self.to_json()
        if fmt in ('json', None):
            return dumpJson(data)
        return render_markdown(data)

    def __repr__(self) -> str:
        return f'SuiteReport({self.kind}, {len(self.instances)} instances, {self.counts()})'


def is_compatible(version: str) -> bool:
    '''Reports of the same major schema version share their layout'''
    try:
        return semver.Version.parse(version).major == semver.Version.parse(constants.REPORT_VERSION).major
    except (ValueError, TypeError):
        return False


def validate_report(data: Dict[str, Any]) -> Tuple[bool, Any]:
    '''Checks a report document against the "report.document" model and its schema version'''
    valid, cause = models.isValidValue('report.document', data)
    if valid and not is_compatible(data.get('schema_version')):
        return False, f'incompatible schema version {data.get("schema_version")}'
    return valid, cause


def render_markdown(data: Dict[str, Any]) -> str:
    '''
    Renders a report document with the Markdown templates
    '''
    try:
        from jinja2 import Template
    except ImportError as e:
        from coideal.utils.exceptions import coidealModuleImport
        raise coidealModuleImport(e)

    def createTable(columns, rowdata, **kwargs):
        return MarkdownTableFormatter(OrderedDict(columns), rowdata, **kwargs).render()

    def status(checks: Dict[str, Any]) -> str:
        failing = [name for name, v in checks.items() if v['status'] == Status.FAIL.value]
        return f'fail ({", ".join(failing)})' if failing else 'pass'

    def counted(checks: Dict[str, Any]) -> Dict[str, int]:
        counts = {s.value: 0 for s in Status}
        for v in checks.values():
            counts[v['status']] += 1
        return counts

    context = dict(data)
    context['controls'] = [{'check': name, 'status': v['status'], 'detail': v.get('detail', '')} for name, v in data.get('controls', {}).items()]
    context['algebras'] = [{**a, 'status': a.get('error') or status(a['checks'])} for a in data['algebras']]
    rows = []
    for i in data['instances']:
        row = {'instance': i['instance'], 'dim_A': i.get('subalgebra', {}).get('dim', ''), 'dim_C': i.get('factor_coalgebra', {}).get('dim', '')}
        verdict = i['checks'].get('open_question', {})
        row.update(status=verdict.get('status', ''), detail=verdict.get('detail', ''))
        row.update(counted(i['checks']))
        rows.append(row)
    context['instances'] = rows
    context['failures'] = [{'instance': f['instance'], 'check': f['check'], 'detail': f['verdict'].get('detail', ''),
                            'witness': dumpJson(f['verdict'].get('witness')).strip()} for f in data['failures']]
    context['candidates'] = [{'instance': c['instance'], 'dump': dumpJson(c).strip()} for c in data.get('candidates', [])]
    context['coverage'] = [{'statement': name, **c, 'met': 'yes' if c['met'] else 'no'} for name, c in data.get('coverage', {}).items()]
    context['timings'] = [{'check': label, 'seconds': f'{seconds:.3f}'} for label, seconds in sorted(data['metadata']['timings'].items())]
    source = templates.OpenQuestionReport if data['kind'] == 'search-open-question' else templates.VerifyReport
    template = Template(source)
    template.globals['createTable'] = createTable
    return template.render(context)


# Algebras

def load_algebra(source: Any, config: SuiteConfig) -> Tuple[Dict[str, Any], Optional[FiniteHopfAlgebra]]:
    '''
    Builds a catalog specification or loads an algebra document and verifies
    the Hopf axioms. Returns the algebra entry of the report and the algebra, or
    None in its place when the axioms fail.
    '''
    checks: 'OrderedDict[str, Verdict]' = OrderedDict()
    if isinstance(source, dict):
        spec = catalog.AlgebraSpec.from_json(source)
        entry = {'name': spec.name, 'source': spec.to_json()}
        try:
            H = catalog.build(spec)
        except coidealAxiomFailure as e:
            checks.update(e.report)
            return {**entry, 'checks': checks, 'error': e.message}, None
    else:
        path = source if os.path.isabs(source) else os.path.join(config.base, source)
        if not checker.is_file(path):
            raise coidealConfigError(f'algebra document "{source}" does not exist')
        try:
            with open(path, 'rb') as f:
                document = f.read()
        except OSError as e:
            raise coidealConfigError(f'cannot read algebra document "{source}": {e.strerror or e}')
        try:
            data = json.loads(document.decode('utf-8'))
        except (ValueError, UnicodeDecodeError) as e:
            raise catalog.coidealParseError(f'"{source}": {e}')
        if not isinstance(data, dict):
            raise catalog.coidealParseError(f'"{source}" holds {checker.get_exact_type(data)} instead of a JSON object')
        H = catalog.from_json(data, verify=False)
        entry = {'name': os.path.splitext(os.path.basename(source))[0], 'source': source}
    entry.update(dim=H.dim, field=H.field.tag)
    if config.runs('axioms') or not isinstance(source, dict):
        report = verify_axioms(H)
        checks.update(report)
        checks.update((f'antimorphism_{name}', v) for name, v in antimorphism_report(H).items())
        if not report.ok:
            return {**entry, 'checks': checks, 'error': 'Hopf axioms violated'}, None
    return {**entry, 'checks': checks}, H


def subalgebras(H: FiniteHopfAlgebra, config: SuiteConfig, rng: Random) -> List[CoidealSubalgebra]:
    '''
    All right coideal subalgebras for small H in exhaustive mode, otherwise
    config.count random ones (without repetitions)
    '''
    if config.mode == 'exhaustive-small' and H.dim <= constants.EXHAUSTIVE_MAX_DIM:
        return enumerate_coideal_subalgebras(H)
    found: 'OrderedDict[Any, CoidealSubalgebra]' = OrderedDict()
    for _ in range(config.count):
        A = random_coideal_subalgebra(H, rng)
        found.setdefault(A.space, A)
    return list(found.values())


# Check groups of an instance

def _trivial_module(H: FiniteHopfAlgebra, A: CoidealSubalgebra, side: Side) -> ModuleStr:
    return ModuleStr.trivial(A.algebra, side, [H.counit_of(a) for a in A.space.rows], 1, A.space)


def _sampled(sampler: HopfModuleSampler, category: str, limit: Optional[int]=None):
    try:
        sampled = sampler.sample(getattr(sampler, category), limit)
    except coidealStructureError as e:
        sampler.logger.debug(f'Sampling {category} failed: {e}')
        return None
    return None if sampled is None else sampled[1]


def _small(sampler: HopfModuleSampler, build, *args):
    try:
        return sampler.bounded(build(*args), constants.ISO_MAX_DIM)
    except coidealStructureError as e:
        sampler.logger.debug(f'Sampling an object failed: {e}')
        return None


def iso_objects(sampler: HopfModuleSampler, name: CanonicalIso) -> Optional[Dict[str, Any]]:
    '''
    Samples objects in the roles a canonical isomorphism expects; None when a
    sample could not be cut down to ISO_MAX_DIM
    '''
    hopf = lambda category: _sampled(sampler, category, constants.ISO_MAX_DIM)  # noqa: E731
    small = lambda build, *args: _small(sampler, build, *args)  # noqa: E731
    flip = sampler.rng.random() < 0.5
    if name is CanonicalIso.HOPF_MODULE_SPLIT:
        objects = {'M': hopf('right_hopf')}
    elif name is CanonicalIso.COTENSOR_SPLIT:
        objects = {'M': hopf('induced_left')}
    elif name is CanonicalIso.TENSOR_IDENTITY:
        objects = {'U': small(sampler.h_comodule), 'V': small(sampler.c_comodule)}
    elif name is CanonicalIso.COTENSOR_SWAP:
        objects = {'U': small(sampler.h_comodule), 'V': small(sampler.c_comodule), 'W': small(sampler.c_comodule, Side.LEFT)}
    elif name is CanonicalIso.COTENSOR_SWAP_HOPF:
        objects = {'U': small(sampler.h_comodule)}
        if flip:
            objects.update(V=hopf('induced_right'), W=small(sampler.c_comodule, Side.LEFT))
        else:
            objects.update(V=small(sampler.c_comodule), W=hopf('induced_left'))
    elif name is CanonicalIso.TENSOR_SWAP:
        objects = {'U': small(sampler.h_module), 'W': small(sampler.a_module, Side.RIGHT), 'V': small(sampler.a_module)}
    elif name is CanonicalIso.TENSOR_SWAP_HOPF:
        objects = {'U': small(sampler.h_module)}
        if flip:
            objects.update(V=hopf('left_hopf'), W=small(sampler.a_module, Side.RIGHT))
        else:
            objects.update(V=small(sampler.a_module), W=hopf('right_hopf'))
    elif name is CanonicalIso.COMODULE_TRIVIALIZE:
        objects = {'U': small(sampler.h_comodule)}
        objects.update({'V': hopf('induced_right')} if flip else {'W': hopf('induced_left')})
    elif name is CanonicalIso.MODULE_TRIVIALIZE:
        objects = {'U': small(sampler.h_module)}
        objects.update({'V': hopf('left_hopf')} if flip else {'W': hopf('right_hopf')})
    elif name is CanonicalIso.COTENSOR_TENSOR_ASSOC:
        objects = {'V': small(sampler.c_comodule), 'W': small(sampler.a_module)}
    elif name is CanonicalIso.INDUCTION_TRANSPORT:
        objects = {'V': small(sampler.a_module)}
    else:
        objects = {'V': small(sampler.c_comodule)}
    return None if any(X is None for X in objects.values()) else objects


def check_isomorphisms(ctx: TakeuchiContext, sampler: HopfModuleSampler, samples: int,
                       tally: Optional[Dict[str, int]]=None) -> 'OrderedDict[str, Verdict]':
    '''
    Every canonical isomorphism on sampled objects: failed on the first failing
    sample, not applicable when no sample met the hypotheses. The passing samples
    of each isomorphism are counted into tally.
    '''
    verdicts = OrderedDict()
    for name in CanonicalIso:
        passed, skipped, verdict = 0, 0, None
        for index in range(samples):
            objects = iso_objects(sampler, name)
            if objects is None:
                skipped += 1
                continue
            result = canonical_iso(ctx, name, **objects)
            if result.verdict.status is Status.FAIL:
                dims = {role: X.dim for role, X in objects.items()}
                verdict = Verdict.failed({'sample': index, 'dims': dims, 'checks': result.verdict.witness}, result.verdict.detail)
                break
            if result.verdict.status is Status.PASS:
                passed += 1
        if verdict is None:
            verdict = Verdict.passed(f'{passed} of {samples} samples') if passed else Verdict.not_applicable(f'no applicable sample ({skipped} skipped)')
        verdicts[f'iso_{name.value}'] = verdict
        if tally is not None:
            tally[f'iso_{name.value}'] = passed
    return verdicts


def _vanishing(series: List[int], index: int, origin: str, dim: int) -> Optional[Verdict]:
    if any(series[1:]):
        return Verdict.failed({'sample': index, 'origin': origin, 'dim': dim, 'dims': series})
    return None


def check_homology(H: FiniteHopfAlgebra, A: CoidealSubalgebra, C: FactorCoalgebra, report: CorrespondenceReport,
                   sampler: HopfModuleSampler, config: SuiteConfig) -> None:
    '''
    Transfer implications, split epimorphisms, total integrals and Doi splittings,
    coFrobenius factor coalgebras, derived functors in degree zero, and the
    vanishing of higher Tor, Ext and Cotor on sampled Hopf modules
    '''
    flags = report.flags
    report.update(homology.transfer_implications(H, A, C), 'transfer_')
    for side in (Side.LEFT, Side.RIGHT):
        split = homology.is_split_epimorphism(H, C, side)
        cogenerator = flags[f'{side.value}_cogenerator']
        report.record(f'split_epimorphism_{side.value}', Verdict.of(split == cogenerator, {'split': split, 'cogenerator': cogenerator}))

    phi = homology.total_integral(H, C)
    report.record('total_integral', Verdict.of((phi is not None) == flags['right_injective'],
                                               {'total_integral': phi is not None, 'right_injective': flags['right_injective']}))
    report.record('doi_splittings', homology.doi_splittings(H, C, phi).verdict if phi is not None else Verdict.not_applicable('no total integral'))
    report.record('cofrobenius', Verdict.of(homology.cofrobenius_check(C.coalgebra, config.seed), {'dim_C': C.dim}))

    k_left, k_right = _trivial_module(H, A, Side.LEFT), _trivial_module(H, A, Side.RIGHT)
    H_left = ModuleStr.by_multiplication(H, A.space, Side.LEFT)
    H_right = ModuleStr.by_multiplication(H, A.space, Side.RIGHT)
    k_C = ComoduleStr.trivial(C.coalgebra, Side.RIGHT, C.grouplike)
    H_C = ComoduleStr.over_factor(C, Side.LEFT)
    degree_zero = (
        ('tor_degree_zero', homology.tor(H_right, k_left, 0), TensorOverAlgebra(H_right, k_left).dim),
        ('ext_degree_zero', homology.ext(k_right, H_right, 0), morphism_space(k_right, H_right).dim),
        ('cotor_degree_zero', homology.cotor(k_C, H_C, 0), CotensorOverCoalgebra(k_C, H_C).dim),
        )
    for name, derived, direct in degree_zero:
        report.record(name, Verdict.of(derived == direct, {'derived': derived, 'direct': direct}))

    flat = all(flags[f'{s}_{p}'] for s in ('left', 'right') for p in ('projective', 'generator'))
    if not flat:
        for name in VANISHING:
            report.record(name, Verdict.not_applicable('H is not faithfully flat over A'))
    else:
        top = config.truncation or homology.truncation_degree(k_left)
        k_C_module = k_C.as_module()
        statements = (
            ('right_hopf', lambda M: homology.tor_series(M.module, k_left, top)),
            ('left_hopf', lambda M: homology.ext_series(M.module, k_left, top)),
            ('induced_left', lambda M: homology.cotor_series(k_C, M.comodule, top)),
            ('induced_right', lambda M: homology.ext_series(k_C_module, M.comodule.as_module(), top)),
            )
        samples = max(1, config.sample_size // 4)
        for name, (category, series) in zip(VANISHING, statements):
            tested, verdict = 0, None
            for index in range(samples):
                M = _sampled(sampler, category)
                if M is None or M.dim == 0:
                    continue
                tested += 1
                verdict = _vanishing(series(M), index, category, M.dim)
                if verdict is not None:
                    break
            report.samples[name] = tested
            report.record(name, verdict or Verdict.passed(f'degrees 1 to {top} on {tested} sampled objects'))

    M = _sampled(sampler, 'right_hopf')
    if M is not None:
        report.record('generator_criterion', homology.generator_criterion(H, A, M))
        hom = homology.hom_comodule(A, M, homology.subalgebra_hopf_module(H, A))
        report.record('hom_comodule', Verdict.of(hom.evaluation_colinear, {'dim': hom.comodule.dim if hom.comodule else 0}))
    V, U = _small(sampler, sampler.c_comodule), _small(sampler, sampler.h_comodule)
    if V is not None and U is not None:
        report.record('nonvanishing', homology.nonvanishing_check(H, C, V, U))
    V, M = _small(sampler, sampler.a_module), _sampled(sampler, 'left_hopf', constants.ISO_MAX_DIM)
    if V is not None and M is not None:
        report.record('hom_adjunction', homology.hom_adjunction(A, V, M))


def check_conditions(H: FiniteHopfAlgebra, A: CoidealSubalgebra, report: CorrespondenceReport, config: SuiteConfig, rng: Random) -> None:
    '''
    The four sampled projectivity and injectivity conditions, the implication from
    the first of them to faithful flatness and the semisimple case
    '''
    verdicts = homology.conditions_0x(H, A, config.sample_size, rng)
    report.update(verdicts, 'condition_')
    flags = report.flags
    flat = all(flags[f'{s}_{p}'] for s in ('left', 'right') for p in ('projective', 'generator'))
    if verdicts['hopf_right_projective'].status is Status.PASS:
        report.record('condition_implies_faithfully_flat', Verdict.of(flat, {k: v for k, v in flags.items() if 'projective' in k or 'generator' in k}))
    else:
        report.record('condition_implies_faithfully_flat', Verdict.not_applicable('sampled Hopf modules in M_A^H are not all projective'))
    if flat and homology.is_semisimple(A.algebra):
        failing = [name for name, v in verdicts.items() if not v.ok]
        report.record('condition_semisimple', Verdict.of(not failing, {'failing': failing}))
    else:
        report.record('condition_semisimple', Verdict.not_applicable('A is not semisimple or H is not faithfully flat over A'))


def open_question(A: CoidealSubalgebra, C: FactorCoalgebra, flags: Dict[str, bool]) -> Verdict:
    '''
    Fails when H is injective but no cogenerator as a left or as a right C-comodule
    '''
    if A.is_whole():
        return Verdict.not_applicable('C = k is faithfully coflat')
    sides = [side for side in ('left', 'right') if flags[f'{side}_injective'] and not flags[f'{side}_cogenerator']]
    if sides:
        return Verdict.failed({'sides': sides, 'ideal': C.ideal.to_json()}, 'H is injective but no cogenerator over C')
    return Verdict.passed(f'dim C = {C.dim}')


def run_instance(task: Task, config: SuiteConfig) -> Tuple[str, CorrespondenceReport, Dict[str, float]]:
    '''
    The full pipeline of one (H, A) instance. Errors raised inside are recorded as
    a failing "internal" check of the instance.
    '''
    algebra, name, H, A = task
    logger = logging.getLogger()
    timings: Dict[str, float] = {}
    rng = Random(f'{config.seed}/{name}')
    flags_needed = any(config.runs(c) for c in ('homology', 'conditions0x', 'openquestion'))
    report = CorrespondenceReport(name, H, A)
    try:
        with logging.timed('correspondence', timings, logger):
            if config.runs('correspondence'):
                report = roundtrip(H, A, homology=flags_needed, instance=name)
                report.record('fundamental_theorem', fundamental_theorem(H, A))
            else:
                report.coalgebra = factor_by_subalgebra(H, A)
                if flags_needed:
                    report.flags.update(homology.faithfully_flat(H, A))
                    report.flags.update(homology.faithfully_coflat(H, report.coalgebra))
        if not report.ok and report.coalgebra is None:
            return algebra, report, timings
        C = report.coalgebra
        ctx = TakeuchiContext(H, report.subalgebra or A, C)
        sampler = HopfModuleSampler(ctx, rng)
        if config.runs('isomorphisms'):
            with logging.timed('isomorphisms', timings, logger):
                report.update(check_isomorphisms(ctx, sampler, config.iso_samples, report.samples))
        if config.runs('homology'):
            with logging.timed('homology', timings, logger):
                check_homology(H, ctx.A, C, report, sampler, config)
        if config.runs('conditions0x'):
            with logging.timed('conditions0x', timings, logger):
                check_conditions(H, ctx.A, report, config, rng)
        if config.runs('openquestion'):
            report.record('open_question', open_question(ctx.A, C, report.flags))
    except coidealBaseException as e:
        logger.error(f'Instance {name} raised {e.__class__.__name__}: {e.message}')
        report.record('internal', Verdict.failed(dict(e.to_json(), instance=name), e.message))
    return algebra, report, timings


def periodic_control(field: Field, top: int) -> 'OrderedDict[str, Verdict]':
    '''
    k over k[y]/(y²) has a periodic free resolution: Tor_i(k, k) and Ext^i(k, k)
    are one-dimensional in every degree and k is not projective
    '''
    one, zero = field.one, field.zero
    R = FiniteAlgebra(field, [[[one, zero], [zero, one]], [[zero, one], [zero, zero]]], [one, zero], ['1', 'y'])
    k_left = ModuleStr.trivial(R, Side.LEFT, [one, zero])
    k_right = ModuleStr.trivial(R, Side.RIGHT, [one, zero])
    expected = [1] * (top + 1)
    controls = OrderedDict()
    tor = homology.tor_series(k_right, k_left, top)
    controls['periodic_tor'] = Verdict.of(tor == expected, {'dims': tor}, f'Tor_i(k, k) for i ≤ {top}')
    ext = homology.ext_series(k_left, k_left, top)
    controls['periodic_ext'] = Verdict.of(ext == expected, {'dims': ext}, f'Ext^i(k, k) for i ≤ {top}')
    controls['periodic_not_projective'] = Verdict.of(not homology.is_projective(k_left), None, 'k is not projective over k[y]/(y²)')
    return controls


def random_dominions(H: FiniteHopfAlgebra, config: SuiteConfig, name: str) -> Tuple[Verdict, int]:
    '''
    Draws config.draws random right coideal subalgebras A of H and compares the
    dominion of each with the coinvariants of H/HA⁺. Returns the verdict and the
    number of draws made, which stops at the first disagreement.
    '''
    rng = Random(f'{config.seed}/{name}/draws')
    seen: Dict[Any, bool] = {}
    made = 0
    try:
        for index in range(config.draws):
            made += 1
            A = random_coideal_subalgebra(H, rng)
            if A.space in seen:
                continue
            dom, coinv = dominion(H, A), coinvariants(H, factor_by_subalgebra(H, A))
            seen[A.space] = dom == coinv
            if not seen[A.space]:
                return Verdict.failed({'draw': index, 'subalgebra': A.space.to_json(), 'dominion': dom.dim, 'coinvariants': coinv.dim},
                                      'the dominion is not the space of coinvariants'), made
    except coidealBaseException as e:
        logging.getLogger().error(f'Drawing coideal subalgebras of {name} raised {e.__class__.__name__}: {e.message}')
        return Verdict.failed(dict(e.to_json(), algebra=name), e.message), made - 1
    return Verdict.passed(f'{config.draws} draws, {len(seen)} distinct subalgebras'), config.draws


def _instances(config: SuiteConfig, report: SuiteReport, draws: bool=False) -> List[Task]:
    '''
    Loads the algebras and lists their instances. With draws, every algebra also
    gets its dominions checked on config.draws random coideal subalgebras.
    '''
    tasks = []
    with logging.timed('axioms', report.timings):
        for source in config.algebras:
            entry, H = load_algebra(source, config)
            report.algebras.append(entry)
            if H is None:
                continue
            if draws and config.draws:
                verdict, entry['draws'] = random_dominions(H, config, entry['name'])
                entry['checks']['random_dominion'] = verdict
            rng = Random(f'{config.seed}/{entry["name"]}')
            for index, A in enumerate(subalgebras(H, config, rng)):
                tasks.append((entry['name'], f'{entry["name"]}#{index}', H, A))
    logging.getLogger().info(f'Running {len(tasks)} instances on {len(report.algebras)} algebras')
    return tasks


def run_suite(config: SuiteConfig) -> SuiteReport:
    '''
    Runs every configured check group on all instances. The report depends on the
    configuration and its seed only, apart from the metadata block.
    '''
    report = SuiteReport('verify', config)
    tasks = _instances(config, report, draws=config.runs('correspondence'))
    for algebra, result, timings in run_concurrently(run_instance, tasks, config, max_threads=config.workers):
        report.instances.append((algebra, result))
        report.add_timings(timings)
    if config.runs('homology'):
        with logging.timed('controls', report.timings):
            report.controls.update(periodic_control(Field.rational(), config.truncation or constants.TRUNCATION_MIN))
    return report.finish()


def _search_instance(task: Task, config: SuiteConfig) -> Tuple[str, CorrespondenceReport, Dict[str, float]]:
    algebra, name, H, A = task
    timings: Dict[str, float] = {}
    report = CorrespondenceReport(name, H, A)
    try:
        with logging.timed('openquestion', timings):
            C = factor_by_subalgebra(H, A)
            report.coalgebra = C
            report.flags.update(homology.faithfully_coflat(H, C))
            report.record('open_question', open_question(A, C, report.flags))
    except coidealBaseException as e:
        report.record('internal', Verdict.failed(dict(e.to_json(), instance=name), e.message))
    return algebra, report, timings


def search_open_question(config: SuiteConfig) -> SuiteReport:
    '''
    Looks for factor coalgebras C = H/HA⁺ over which H is injective but not a
    cogenerator on one side. Flagged instances are listed in full as candidates.
    '''
    report = SuiteReport('search-open-question', config)
    tasks = _instances(config, report)
    for algebra, result, timings in run_concurrently(_search_instance, tasks, config, max_threads=config.workers):
        report.instances.append((algebra, result))
        report.add_timings(timings)
        verdict = result.checks.get('open_question')
        if verdict is not None and verdict.status is Status.FAIL:
            report.candidates.append((algebra, result))
            logging.getLogger().warning(f'Open question candidate {result.instance}: {result.checks["open_question"].witness}')
    return report.finish()
