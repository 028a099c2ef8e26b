# -*- coding: utf-8 -*-

"""Command line front end. Every command reads its parameters from an
optional INI run file overridden by command line flags, writes a text or json
report to stdout and returns exit code 0 (pass), 1 (failed verdict) or
2 (invalid input).
"""

import argparse
import collections
import itertools
import logging
import sys

from ..conf import Config, project
from ..conf import validators as val
from ..utils import set_logging
from . import bijection
from . import identities
from . import reports
from . import runners
from . import tableaux
from . import walks
from .partitions import Partition, partitions_of


LOG = logging.getLogger('branchrule.backend')

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
FORMATS = ('text', 'json')


VERIFY_CONFIGURATION = [
    {'name': 'verify/identity',
     'usage': 'Identity to verify',
     'default': identities.CWBR,
     'processors': [val.process_identity],
     'validators': [val.validate_identity]},
    {'name': 'verify/partition',
     'usage': 'Partition given as digit string or comma separated parts',
     'default': '',
     'processors': [val.process_partition],
     'validators': [val.validate_partition]},
    {'name': 'verify/n',
     'usage': 'Verify identity for every partition of n',
     'default': '',
     'processors': [val.process_integer],
     'validators': [val.validate_non_negative]},
    {'name': 'verify/mode',
     'usage': 'Verification mode (full_expansion or random_eval)',
     'default': identities.FULL_EXPANSION,
     'processors': [val.process_mode],
     'validators': [val.validate_mode]},
    {'name': 'verify/trials',
     'usage': 'Count of random evaluation points',
     'default': '',
     'processors': [val.process_integer],
     'validators': [val.validate_positive]},
    {'name': 'verify/seed',
     'usage': 'Seed of random evaluation points',
     'default': '0',
     'processors': [val.process_integer],
     'validators': [val.validate_integer]},
    {'name': 'verify/complement',
     'usage': ('Check also that the reduced identity equals the reduced '
               'corner identity of the complementary partition'),
     'default': 'false',
     'processors': [val.process_bool]},
]

BIJECTION_CONFIGURATION = [
    {'name': 'bijection/partition',
     'usage': 'Partition given as digit string or comma separated parts',
     'default': '',
     'processors': [val.process_partition],
     'validators': [val.validate_partition]},
    {'name': 'bijection/exhaustive',
     'usage': 'Run round trips over all arrangements and check surjectivity',
     'default': 'false',
     'processors': [val.process_bool]},
    {'name': 'bijection/demo',
     'usage': 'Replay the worked example of given partition',
     'default': '',
     'processors': [val.process_partition],
     'validators': [val.validate_partition]},
    {'name': 'bijection/variant',
     'usage': 'Variant of the bijection',
     'default': '',
     'options': list(bijection.VARIANTS)},
]

WALK_CONFIGURATION = [
    {'name': 'walk/partition',
     'usage': 'Partition given as digit string or comma separated parts',
     'default': '',
     'processors': [val.process_partition],
     'validators': [val.validate_not_empty, val.validate_partition]},
    {'name': 'walk/region',
     'usage': 'Starting region R1..R10, unconditional walk if empty',
     'default': '',
     'processors': [val.process_region],
     'validators': [val.validate_region]},
    {'name': 'walk/uniform',
     'usage': 'Use unit weights around the diagram, required unless '
              '--weights is given',
     'default': 'false',
     'processors': [val.process_bool]},
    {'name': 'walk/weights',
     'usage': 'Yaml or json file with weights {"x": {i: w}, "y": {j: w}}',
     'default': '',
     'validators': [val.validate_file]},
    {'name': 'walk/trials',
     'usage': 'Count of sampled walks',
     'default': str(project.MONTE_CARLO_TRIALS),
     'processors': [val.process_integer],
     'validators': [val.validate_positive]},
    {'name': 'walk/seed',
     'usage': 'Seed of sampled walks',
     'default': '0',
     'processors': [val.process_integer],
     'validators': [val.validate_integer]},
    {'name': 'walk/workers',
     'usage': 'Count of cooperative walk workers',
     'default': str(project.MONTE_CARLO_WORKERS),
     'processors': [val.process_integer],
     'validators': [val.validate_positive]},
    {'name': 'walk/sigma',
     'usage': 'Accepted deviation in binomial standard errors',
     'default': str(project.MONTE_CARLO_SIGMA),
     'processors': [val.process_integer],
     'validators': [val.validate_positive]},
]

STATS_CONFIGURATION = [
    {'name': 'stats/partition',
     'usage': 'Partition given as digit string or comma separated parts',
     'default': '',
     'processors': [val.process_partition],
     'validators': [val.validate_partition]},
    {'name': 'stats/content',
     'usage': 'Print distribution of the content of the added square',
     'default': 'false',
     'processors': [val.process_bool]},
    {'name': 'stats/recursions',
     'usage': 'Check recursions of numbers of standard Young tableaux',
     'default': 'false',
     'processors': [val.process_bool]},
    {'name': 'stats/sum_squares',
     'usage': 'Check that squares of f^lambda over partitions of n sum to n!',
     'default': 'false',
     'processors': [val.process_bool]},
    {'name': 'stats/n',
     'usage': 'Size used by the sum of squares check',
     'default': '',
     'processors': [val.process_integer],
     'validators': [val.validate_non_negative]},
]

COMMANDS = collections.OrderedDict([
    ('verify', VERIFY_CONFIGURATION),
    ('bijection', BIJECTION_CONFIGURATION),
    ('walk', WALK_CONFIGURATION),
    ('stats', STATS_CONFIGURATION),
])


def meta_builder(configurations):
    """Builds meta dictionary for Config class from lists of parameters."""
    meta = collections.OrderedDict()
    for configuration in configurations:
        for parameter in configuration:
            key = parameter['name']
            # CLI parameter
            parameter['cli'] = key.split('/', 1)[1].replace('_', '-')
            if key in meta:
                raise ValueError('Duplicated parameter found: %s.' % key)
            meta[key] = parameter
    return meta


def simple_reporter(unit_type, unit_name, unit_status, stream=None):
    """Prints status to stdout"""
    stream = stream or sys.stdout
    unit_name = unit_name.replace('_', ' ').capitalize()
    stream.write(
        '[{unit_type}] {unit_name}: {unit_status}\n'.format(**locals())
    )


def _config_dict(config):
    result = {}
    for key, value in config.items():
        variable = key.split('/', 1)[1]
        if isinstance(value, Partition):
            value = str(value)
        result[variable] = value if value != '' else None
    return result


def _partitions(config, section):
    lam, n = config['%s/partition' % section], config['%s/n' % section]
    if lam != '' and n != '':
        raise ValueError('Options --partition and --n are mutually '
                         'exclusive.')
    if lam != '':
        return [lam]
    if n != '':
        return partitions_of(n)
    raise ValueError('Either --partition or --n has to be given.')


# --------------------------------------------------------------- commands
def cmd_verify(config):
    """Returns (passed, results, context) of identity verification."""
    identity = config['verify/identity']
    mode = config['verify/mode']
    trials = config['verify/trials'] or None
    seed = config['verify/seed']
    complement = config['verify/complement']
    if complement and identity not in identities.COMPLEMENT_PAIRS and \
            identity != identities.Y2_REDUCED:
        raise ValueError('Identity %s has no complement pairing.' % identity)

    def _check(lam):
        result = [identities.verify(identity, lam, mode=mode, trials=trials,
                                    seed=seed)]
        if complement:
            result.append(identities.complement_equivalence_check(
                lam, identity, mode=mode, trials=trials or 16, seed=seed
            ))
        return result

    lams = _partitions(config, 'verify')
    checked = runners.run_partitioned(_check, lams, project.SWEEP_WORKERS)
    results = [report.to_dict() for report in itertools.chain(*checked)]
    passed = all(r['verdict'] for r in results)
    LOG.info('Verified %s for %d partitions: %s'
             % (identity, len(lams), passed))
    return passed, results, {'identity': identity, 'results': results}


def _merge_round_trips(lam, variant, parts, limit):
    total = sum(p.total for p in parts)
    passed = sum(p.passed for p in parts)
    images = sum(p.images for p in parts)
    failures = list(itertools.chain(*(p.failures for p in parts)))[:limit]
    return bijection.RoundTrip(lam, variant, total, passed, images,
                               bijection.count_G(lam, variant), failures)


def _round_trips(lam, variant, exhaustive):
    arrangements = bijection.enumerate_F(lam, variant)
    if not exhaustive:
        arrangements = itertools.islice(arrangements,
                                        project.BIJECTION_SAMPLE_SIZE)
    chunks = runners.split(list(arrangements), project.SWEEP_WORKERS)
    parts = runners.run_workers(
        lambda chunk: bijection.check_round_trips(lam, variant, chunk),
        [(chunk,) for offset, chunk in chunks]
    )
    result = _merge_round_trips(lam, variant, parts, 10)
    passed = result.passed == result.total
    if exhaustive:
        passed = passed and result.images == result.codomain
    return passed, result


def _demo(lam):
    demo = reports.load_demo_arrangement()
    if lam != demo.partition:
        raise ValueError('No worked example exists for partition %s, '
                         'available: %s' % (lam, demo.partition))
    F = demo.arrangement
    trace = bijection.hook_walk_from_F(F)
    G = bijection.phi(F)
    inverse = bijection.phi_inverse(G)
    result = {
        'partition': str(lam),
        'walk': [list(c) for c in trace.cells],
        'walk_matches': list(trace.cells) == demo.walk,
        'image': bijection.format_arrangement(G),
        'image_matches': G == demo.image,
        'inverse_matches': inverse == F,
        'weight_preserved': bijection.weight(G) == bijection.weight(F),
    }
    passed = all(v for k, v in result.items() if k.endswith(('matches',
                                                             'preserved')))
    return passed, result


def cmd_bijection(config):
    """Returns (passed, results, context) of bijection round trips or of the
    worked example replay.
    """
    demo = config['bijection/demo']
    lam = config['bijection/partition']
    variant = config['bijection/variant'] or ''
    if demo != '':
        passed, result = _demo(demo)
        return passed, [result], {'demo': result}
    if lam == '':
        raise ValueError('Either --partition or --demo has to be given.')
    exhaustive = config['bijection/exhaustive']
    passed, trips = _round_trips(lam, variant, exhaustive)
    result = {
        'partition': str(lam),
        'variant': variant or None,
        'exhaustive': exhaustive,
        'total': trips.total,
        'passed': trips.passed,
        'images': trips.images,
        'codomain': trips.codomain,
        'failures': trips.failures,
        'pass': passed,
    }
    return passed, [result], {'trips': result}


def _weight_system(config, lam):
    path = config['walk/weights']
    if path and config['walk/uniform']:
        raise ValueError('Options --uniform and --weights are mutually '
                         'exclusive.')
    if path:
        return walks.WeightSystem.from_file(path)
    if not config['walk/uniform']:
        raise ValueError('Either --uniform or --weights has to be given.')
    return walks.WeightSystem.uniform(lam)


def cmd_walk(config):
    """Returns (passed, results, context) of the comparison of exact and
    sampled terminal probabilities.
    """
    lam = config['walk/partition']
    region = config['walk/region']
    trials = config['walk/trials']
    W = _weight_system(config, lam)
    exact = walks.terminal_distribution(lam, region, W)
    oracle = walks.exact_walk_distribution(lam, region, W)
    estimates = walks.monte_carlo_estimate(
        lam, region, W, trials=trials, seed=config['walk/seed'],
        workers=config['walk/workers']
    )
    agreements = walks.compare_estimates(estimates, exact, trials,
                                         sigma=config['walk/sigma'])
    results = [{
        'terminal': list(a.terminal),
        'exact': str(a.exact),
        'estimate': float(a.estimate),
        'stderr': a.stderr,
        'pass': a.passed,
    } for a in agreements]
    normalized = exact.total() == 1
    passed = normalized and exact == oracle and all(a.passed
                                                     for a in agreements)
    context = {
        'partition': str(lam), 'region': region or 'unconditional',
        'trials': trials, 'results': results, 'normalized': normalized,
        'oracle_matches': exact == oracle,
    }
    return passed, results, context


def cmd_stats(config):
    """Returns (passed, results, context) of tableau statistics."""
    lam = config['stats/partition']
    n = config['stats/n']
    results = []
    context = {}
    if lam != '':
        context['syt_count'] = tableaux.syt_count(lam)
        results.append({'check': 'syt_count', 'partition': str(lam),
                        'value': context['syt_count'], 'pass': True})
    if config['stats/content']:
        if lam == '':
            raise ValueError('Option --content requires --partition.')
        stats = tableaux.content_statistics(lam)
        ok = stats.mean == 0 and stats.variance == lam.size
        context['content'] = stats
        result = stats.to_dict()
        result.update({'check': 'content', 'pass': ok})
        results.append(result)
    if config['stats/recursions']:
        if lam == '':
            raise ValueError('Option --recursions requires --partition.')
        removal = tableaux.check_removal_recursion(lam)
        addition = tableaux.check_addition_recursion(lam)
        checks = [
            tableaux.RecursionCheck('f = sum f(-c)', 'corners',
                                    holds=removal),
            tableaux.RecursionCheck('(n+1)f = sum f(+c)', 'outer corners',
                                    holds=addition),
        ] + tableaux.check_new_recursions(lam)
        context['recursions'] = checks
        for check in checks:
            result = check.to_dict()
            result.update({'check': 'recursion', 'pass': bool(check)})
            results.append(result)
    if config['stats/sum_squares']:
        if n == '':
            raise ValueError('Option --sum-squares requires --n.')
        ok = tableaux.check_sum_squares(n)
        context['sum_squares'] = {'n': n, 'value': tableaux.sum_squares(n),
                                  'pass': ok}
        results.append({'check': 'sum_squares', 'n': n,
                        'value': context['sum_squares']['value'],
                        'pass': ok})
    if not results:
        raise ValueError('Nothing to compute, give --partition or '
                         '--sum-squares with --n.')
    passed = all(r['pass'] for r in results)
    return passed, results, context


HANDLERS = {
    'verify': cmd_verify,
    'bijection': cmd_bijection,
    'walk': cmd_walk,
    'stats': cmd_stats,
}


# ------------------------------------------------------------------ main
def main(command, config_path=None, overrides=None, log_path=None,
         debug=False, output_format='text', reporter=simple_reporter,
         stream=None):
    """Runs given command and writes its report. Returns exit code."""
    stream = stream or sys.stdout
    if log_path or debug:
        set_logging(logfile=log_path, loglevel='DEBUG' if debug else 'INFO')
    else:
        set_logging()
    meta = meta_builder([COMMANDS[command]])
    overrides = dict(('%s/%s' % (command, k), v)
                     for k, v in (overrides or {}).items())
    try:
        config = Config(config_path, meta, overrides)
        passed, results, context = HANDLERS[command](config)
    except ValueError as ex:
        LOG.debug('Command %s failed: %s' % (command, ex))
        sys.stderr.write('Error: %s\n' % ex)
        return EXIT_ERROR
    if output_format == 'json':
        document = reports.make_document(command, _config_dict(config),
                                         results, passed)
        stream.write(reports.dump_json(document))
    else:
        context = dict(context, config=_config_dict(config), passed=passed)
        stream.write(reports.ReportLibrary().render(command, context))
        reporter(command, 'summary', 'PASS' if passed else 'FAIL',
                 stream=stream)
    return EXIT_PASS if passed else EXIT_FAIL


def _flag_options(parameter):
    if parameter.get('processors') == [val.process_bool]:
        return {'action': 'store_const', 'const': 'true', 'default': None}
    options = {'default': None}
    if parameter.get('options'):
        options['choices'] = parameter['options']
    return options


def build_parser():
    parser = argparse.ArgumentParser(
        prog='branchrule',
        description='Verifies the complementary weighted branching rule.'
    )
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    for command, configuration in COMMANDS.items():
        sub = subparsers.add_parser(command)
        for key, parameter in meta_builder([configuration]).items():
            sub.add_argument('--%s' % parameter['cli'],
                             dest=key.split('/', 1)[1],
                             help=parameter['usage'],
                             **_flag_options(parameter))
        sub.add_argument('--format', choices=FORMATS, default='text')
        sub.add_argument('--config', default=None,
                         help='INI run file, flags take precedence')
        sub.add_argument('--log-file', default=None)
        sub.add_argument('--debug', action='store_true')
    return parser


def run(argv=None, stream=None):
    """Console entry point. Returns exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code
    variables = [p['name'].split('/', 1)[1] for p in COMMANDS[args.command]]
    overrides = dict((v, getattr(args, v)) for v in variables)
    return main(args.command, config_path=args.config, overrides=overrides,
                log_path=args.log_file, debug=args.debug,
                output_format=args.format, stream=stream)


if __name__ == '__main__':
    sys.exit(run())
