"""
Command-line interface
Word and stream analysis, directive sequences, Sturmian morphisms and the verify harness.
"""

import functools
import logging
import sys

import click
from flask import current_app, has_app_context

from models.words import LetterOrder
from services.report_service import AnalysisService, envelope, render_json, verdict_badge
from services.verify_service import VerificationHarness
from utils.errors import QuasiwordsError

logger = logging.getLogger(__name__)

json_option = click.option('--json', 'as_json', is_flag=True, help='Print the JSON report instead of text')
order_option = click.option('--order', type=click.Choice(['ab', 'ba']), default='ab', show_default=True,
                            help='Letter order for Lyndon tests')
prefix_option = click.option('--prefix', 'prefix_length', type=int, help='Prefix length N to analyze')
max_qp_option = click.option('--max-qp', 'max_qp', type=int, help='Longest quasiperiod candidate L')
budget_option = click.option('--budget', type=int, help='Block-pair budget for directive generation')


def reports_errors(func):
    """Turn library errors into a ❌ line on stderr and the error's exit code."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except QuasiwordsError as e:
            logger.debug(f"{type(e).__name__}: {e}", exc_info=True)
            click.echo(f"❌ {e}", err=True)
            sys.exit(e.exit_code)
    return wrapper


def _service() -> AnalysisService:
    if has_app_context():
        return AnalysisService.from_config(current_app.config)
    return AnalysisService()


def _read_argument(value: str) -> str:
    """'-' reads the value from stdin."""
    if value == '-':
        return click.get_text_stream('stdin').read().strip()
    return value


def _yes_no(flag) -> str:
    return 'yes' if flag else 'no'


def _echo(report: dict, as_json: bool, render_text):
    if as_json:
        click.echo(render_json(report))
    else:
        render_text(report)


def _echo_word(report: dict):
    results = report['results']
    word = report['inputs']['word']
    click.echo(f"📚 {word or 'ε'} (length {results['length']}, {results['count_a']} a, {results['count_b']} b)")
    click.echo(f"  quasiperiods: {', '.join(results['quasiperiods']) or 'none'}")
    click.echo(f"  smallest quasiperiod: {results['smallest_quasiperiod'] or 'none'}")
    click.echo(f"  superprimitive: {_yes_no(results['superprimitive'])}")
    click.echo(f"  balanced: {_yes_no(results['balanced'])}")
    click.echo(f"  unbordered: {_yes_no(results['unbordered'])}")
    click.echo(f"  Lyndon (a<b): {_yes_no(results['lyndon']['ab'])}")
    click.echo(f"  Lyndon (b<a): {_yes_no(results['lyndon']['ba'])}")
    click.echo(f"  overlap-free: {_yes_no(results['overlap_free'])}")


def _echo_stream(report: dict):
    inputs = report['inputs']
    results = report['results']
    qp = results['quasiperiod_report']
    click.echo(f"📚 {inputs['spec']} (N={inputs['prefix']}, L={inputs['max_qp']})")
    click.echo(f"  prefix: {results['prefix_sample']}...")
    click.echo(f"  {verdict_badge(qp['verdict'])} {qp['verdict']}")
    if qp['found']:
        click.echo(f"  smallest quasiperiod: {qp['smallest']}")
        click.echo(f"  candidates with evidence: {', '.join(item['quasiperiod'] for item in qp['found'])}")
    for order in ('ab', 'ba'):
        status = results['lyndon'][order]
        position = f" at position {status['position']}" if status['position'] is not None else ''
        click.echo(f"  Lyndon ({order[0]}<{order[1]}): {status['outcome']}{position}")
    click.echo(f"  overlap-free prefix: {_yes_no(results['overlap_free'])}")
    click.echo(f"  balanced prefix: {_yes_no(results['balanced'])}")
    if results['exact_decision']:
        decision = results['exact_decision']
        click.echo(f"  {verdict_badge(decision['verdict'])} exact: {decision['verdict']}")


def _echo_decision(report: dict):
    decision = report['results']['decision']
    line = f"{verdict_badge(decision['verdict'])} {decision['verdict']}"
    if decision['lyndon_order']:
        order = decision['lyndon_order']
        line += f" (Lyndon under {order[0]}<{order[1]})"
    click.echo(line)
    click.echo(f"  generators: {report['results']['generators']}")
    click.echo(f"  standard: {_yes_no(report['results']['standard'])}")


def _echo_classification(report: dict):
    results = report['results']
    click.echo(f"📚 {report['inputs']['generators']}: a -> {results['morphism']['a']}, b -> {results['morphism']['b']}")
    click.echo(f"  {results['classification']} / {results['on_sturmian']}")
    witness = results['witness']
    if witness:
        click.echo(f"  witness: {witness['pattern_id']} on {' '.join(witness['f2'])} "
                   f"in {' '.join(witness['representative'])}")
    click.echo(f"  relation class: {len(results['closure'])} spelling(s)")
    lyndon = results['preserves_lyndon']
    click.echo(f"  preserves Lyndon words: a<b {_yes_no(lyndon['ab'])}, b<a {_yes_no(lyndon['ba'])}")


@click.group()
@click.option('-v', '--verbose', count=True, help='Log to stderr (-v info, -vv debug)')
def cli(verbose):
    """Quasiperiodicity of binary words and Sturmian morphisms."""
    if verbose:
        level = logging.DEBUG if verbose > 1 else logging.INFO
        logging.basicConfig(level=level, stream=sys.stderr,
                            format='%(asctime)s %(levelname)s %(name)s: %(message)s')


@cli.group()
def word():
    """Finite word analysis"""


@word.command('analyze')
@click.argument('text')
@order_option
@json_option
@reports_errors
def word_analyze(text, order, as_json):
    """Quasiperiods, borders, balance and Lyndon flags of a finite word ('-' reads stdin)"""
    report = _service().word_report(_read_argument(text), LetterOrder.parse(order))
    _echo(report, as_json, _echo_word)


@cli.group()
def stream():
    """Infinite word prefixes"""


@stream.command('analyze')
@click.argument('spec')
@prefix_option
@max_qp_option
@order_option
@budget_option
@json_option
@reports_errors
def stream_analyze(spec, prefix_length, max_qp, order, budget, as_json):
    """Quasiperiod evidence and Lyndon status on a stream prefix"""
    report = _service().stream_report(
        _read_argument(spec), prefix_length, max_qp, LetterOrder.parse(order), budget,
    )
    _echo(report, as_json, _echo_stream)


@cli.group()
def sturmian():
    """Sturmian words from directive sequences"""


@sturmian.command('decide')
@click.argument('directive')
@json_option
@reports_errors
def sturmian_decide(directive, as_json):
    """Exact quasiperiodicity verdict for an eventually periodic directive sequence"""
    report = _service().decide_report(_read_argument(directive))
    _echo(report, as_json, _echo_decision)


@sturmian.command('gen')
@click.argument('directive')
@prefix_option
@budget_option
@json_option
@reports_errors
def sturmian_gen(directive, prefix_length, budget, as_json):
    """Print the length-N prefix of the Sturmian word"""
    report = _service().generate_report(_read_argument(directive), prefix_length, budget)
    _echo(report, as_json, lambda r: click.echo(r['results']['prefix']))


@cli.group()
def morphism():
    """Sturmian morphisms as generator words over E, La, Lb, Ra, Rb"""


@morphism.command('classify')
@click.argument('generators')
@json_option
@reports_errors
def morphism_classify(generators, as_json):
    """Quasiperiodicity class, plain and on Sturmian words"""
    report = _service().classify_report(_read_argument(generators))
    _echo(report, as_json, _echo_classification)


@morphism.command('apply')
@click.argument('generators')
@click.argument('text')
@json_option
@reports_errors
def morphism_apply(generators, text, as_json):
    """Image of a finite word"""
    report = _service().apply_report(_read_argument(generators), _read_argument(text))
    _echo(report, as_json, lambda r: click.echo(r['results']['image']))


@morphism.command('normalize')
@click.argument('generators')
@json_option
@reports_errors
def morphism_normalize(generators, as_json):
    """Move every E to the right end"""
    def render(report):
        results = report['results']
        core = ' '.join(results['core']) or 'Id'
        click.echo(f"{core} E" if results['flip'] else core)

    _echo(_service().normalize_report(_read_argument(generators)), as_json, render)


@morphism.command('equal')
@click.argument('left')
@click.argument('right')
@json_option
@reports_errors
def morphism_equal(left, right, as_json):
    """Whether two generator words denote the same morphism"""
    def render(report):
        equal = report['results']['equal']
        click.echo(f"{'✅' if equal else '❌'} {str(equal).lower()}")

    _echo(_service().equal_report(_read_argument(left), _read_argument(right)), as_json, render)


@cli.command()
@click.argument('suite', default='all')
@click.option('--seed', type=int, help='Seed for randomized checks')
@prefix_option
@max_qp_option
@budget_option
@json_option
@reports_errors
def verify(suite, seed, prefix_length, max_qp, budget, as_json):
    """Run a verification suite, or all of them"""
    service = _service()
    harness = VerificationHarness(
        seed=seed,
        prefix_length=prefix_length,
        max_quasiperiod=max_qp,
        budget=budget or service.pair_budget,
        cap=service.closure_cap,
    )
    names = harness.resolve(suite)
    stderr = click.get_text_stream('stderr')

    outcomes = []
    with click.progressbar(names, label='Running suites', file=stderr) as bar:
        for name in bar:
            outcomes.append(harness.run_suite(name))

    all_passed = all(outcome.all_passed for outcome in outcomes)
    if as_json:
        click.echo(render_json(envelope(
            'verify',
            {'suite': suite, 'seed': harness.context.seed},
            {'suites': [outcome.to_dict() for outcome in outcomes], 'all_passed': all_passed},
            {'checks': 'EXACT'},
        )))
    else:
        click.echo(f"\n🔬 Verify {suite} (seed {harness.context.seed})")
        for outcome in outcomes:
            click.echo(f"\n📚 {outcome.suite}")
            for result in outcome.checks:
                if result.passed:
                    click.echo(f"  ✅ {result.id} {result.description}")
                else:
                    click.echo(f"  ❌ {result.id} {result.description}: {result.details}")
        passed = sum(outcome.passed_count for outcome in outcomes)
        failed = sum(outcome.failed_count for outcome in outcomes)
        click.echo(f"\n✅ Passed: {passed} checks")
        if failed > 0:
            click.echo(f"❌ Failed: {failed} checks")

    sys.exit(0 if all_passed else 1)


def register_commands(app):
    """Register the analysis commands with the Flask app"""
    for name, command in cli.commands.items():
        app.cli.add_command(command, name)
