"""
================================================================================
CLI MODULE - Subcommands
================================================================================

Each subcommand turns a RunConfig into a CommandResult: an exit code and a
JSON-ready report. Exit codes depend on the verdict only:

    0  success / holds / complete / equal
    1  fails / incomplete / distinct
    2  undetermined (step budget exhausted)
    3  input error

Inputs ending in .json are presentation files; anything else is read as an
arrangement file.
================================================================================
"""

import argparse
import logging
import random
import sys
import textwrap
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from modules.common.json_files import dumps
from modules.fan_graph.graph import (
    build_fan_graph,
    certify_conjugation_free,
    classify,
    classify_line_addition,
    graph_to_json,
)
from modules.geometry.arrangement import (
    Arrangement,
    ArrangementError,
    format_arrangement,
    parse_arrangement,
    pencil,
    random_arrangement,
    read_arrangement,
)
from modules.geometry.lattice import build_lattice, is_transversal, pair_count_identity_holds
from modules.monoid.classes import DEFAULT_MAX_LENGTH, DEFAULT_SIZE_CAP, MonoidError, enumerate_classes
from modules.monoid.structure import check_left_cancellativity, check_lcm_existence
from modules.presentation.relations import (
    Presentation,
    PresentationError,
    generate_presentation,
    is_complemented,
)
from modules.presentation.storage import presentation_to_json, read_presentation, write_presentation
from modules.reversing.cube import COMPLETE, EQUAL, INCOMPLETE, DISTINCT, is_complete, word_problem
from modules.reversing.engine import (
    DEFAULT_BUDGET,
    STUCK,
    TERMINAL,
    BudgetExhaustedError,
    reverse,
)
from modules.reversing.words import WordSyntaxError, parse_positive_word, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_UNDETERMINED = 2
EXIT_INPUT_ERROR = 3

FORMATS = ('json', 'text')

class ConfigError(ValueError):
    """Invalid command-line configuration."""


INPUT_ERRORS = (ArrangementError, PresentationError, WordSyntaxError, MonoidError, ConfigError, OSError)


# =============================================================================
# CONFIGURATION AND RESULTS
# =============================================================================
@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: Tuple[str, ...] = ()
    words: Tuple[str, ...] = ()
    budget: int = DEFAULT_BUDGET
    max_length: int = DEFAULT_MAX_LENGTH
    size_cap: int = DEFAULT_SIZE_CAP
    output_format: str = 'json'
    trace: bool = False
    seed: Optional[int] = None
    workers: int = 1
    output: Optional[str] = None
    list_classes: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.budget < 1:
            raise ConfigError("budget must be at least 1")
        if self.max_length < 1:
            raise ConfigError("max-length must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.output_format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}")


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    report: dict
    # raw output that replaces the report, e.g. a generated arrangement file
    text: Optional[str] = None


@dataclass(frozen=True)
class LoadedInput:
    presentation: Presentation
    arrangement: Optional[Arrangement] = None
    certificate: Optional[object] = None


def load_input(path: str) -> LoadedInput:
    """A presentation file, or the presentation generated from an arrangement."""
    if path.endswith('.json'):
        return LoadedInput(read_presentation(path))
    arr = read_arrangement(path)
    certificate = certify_conjugation_free(arr)
    p = generate_presentation(build_lattice(arr), certified=certificate.applicable)
    return LoadedInput(p, arr, certificate)


def _one_input(config: RunConfig) -> str:
    if len(config.inputs) != 1:
        raise ConfigError(f"{config.command} takes exactly one input file")
    return config.inputs[0]


# =============================================================================
# GEOMETRY AND GRAPH COMMANDS
# =============================================================================
def cmd_lattice(config: RunConfig) -> CommandResult:
    lat = build_lattice(read_arrangement(_one_input(config)))
    report = lat.to_dict()
    report['pair_count_identity'] = pair_count_identity_holds(lat)
    return CommandResult(EXIT_OK, report)


def cmd_graph(config: RunConfig) -> CommandResult:
    g = build_fan_graph(build_lattice(read_arrangement(_one_input(config))))
    return CommandResult(EXIT_OK, graph_to_json(g))


def cmd_classify(config: RunConfig) -> CommandResult:
    arr = read_arrangement(_one_input(config))
    report = classify(build_fan_graph(build_lattice(arr))).to_dict()
    certificate = certify_conjugation_free(arr)
    report['certified'] = certificate.applicable
    report['reason'] = certificate.reason
    return CommandResult(EXIT_OK, report)


def cmd_transversal(config: RunConfig) -> CommandResult:
    if len(config.inputs) != 2:
        raise ConfigError("transversal takes two arrangement files")
    arr_a, arr_b = (read_arrangement(path) for path in config.inputs)
    transversal = is_transversal(arr_a, arr_b)
    report = {'transversal': transversal, 'degrees': [len(arr_a), len(arr_b)]}
    return CommandResult(EXIT_OK if transversal else EXIT_FAILS, report)


def cmd_add_line(config: RunConfig) -> CommandResult:
    if len(config.words) != 1:
        raise ConfigError('add-line takes one line "a b c"')
    arr = read_arrangement(_one_input(config))
    new = parse_arrangement(config.words[0])
    if len(new) != 1:
        raise ConfigError('add-line takes one line "a b c"')
    addition = classify_line_addition(arr, new[0])
    return CommandResult(EXIT_OK, addition.to_dict())


def cmd_generate(config: RunConfig) -> CommandResult:
    if len(config.words) != 2 or config.words[0] not in ('pencil', 'random'):
        raise ConfigError("generate takes 'pencil M' or 'random N'")
    kind, size = config.words
    try:
        size = int(size)
    except ValueError:
        raise ConfigError(f"generate size must be an integer, got {size!r}")
    if size < 1:
        raise ConfigError("generate needs at least one line")
    if kind == 'pencil':
        arr = pencil(size)
    else:
        seed = 0 if config.seed is None else config.seed
        arr = random_arrangement(random.Random(seed), size)
    return CommandResult(EXIT_OK, {'lines': [str(line) for line in arr]}, format_arrangement(arr))


# =============================================================================
# PRESENTATION COMMANDS
# =============================================================================
def cmd_present(config: RunConfig) -> CommandResult:
    loaded = load_input(_one_input(config))
    if config.output:
        write_presentation(config.output, loaded.presentation)
        logger.info("presentation written to %s", config.output)
    return CommandResult(EXIT_OK, presentation_to_json(loaded.presentation))


def cmd_check_complemented(config: RunConfig) -> CommandResult:
    report = is_complemented(load_input(_one_input(config)).presentation)
    return CommandResult(EXIT_OK if report.ok else EXIT_FAILS, report.to_dict())


def cmd_check_complete(config: RunConfig) -> CommandResult:
    p = load_input(_one_input(config)).presentation
    every = max(1, p.rank ** 3 // 10)

    def progress(checked, total):
        if checked % every == 0 or checked == total:
            logger.info("checked %d/%d triples", checked, total)

    verdict = is_complete(p, config.budget, workers=config.workers, progress=progress)
    exit_code = {COMPLETE: EXIT_OK, INCOMPLETE: EXIT_FAILS}.get(verdict.verdict, EXIT_UNDETERMINED)
    return CommandResult(exit_code, verdict.to_dict(p))


# =============================================================================
# REVERSING COMMANDS
# =============================================================================
def cmd_reverse(config: RunConfig) -> CommandResult:
    if len(config.words) != 1:
        raise ConfigError("reverse takes one signed word")
    p = load_input(_one_input(config)).presentation
    w = parse_word(config.words[0], p)
    rng = random.Random(config.seed) if config.seed is not None else None
    trace = reverse(p, w, config.budget, rng=rng, record=config.trace)

    report = trace.to_dict(p)
    if not config.trace:
        del report['steps']
    if trace.status == TERMINAL:
        v_prime, v = trace.final.split_terminal()
        report['complements'] = {'v_prime': p.spell(v_prime) or 'e', 'v': p.spell(v) or 'e'}
    exit_code = {TERMINAL: EXIT_OK, STUCK: EXIT_FAILS}.get(trace.status, EXIT_UNDETERMINED)
    return CommandResult(exit_code, report)


def cmd_word_problem(config: RunConfig) -> CommandResult:
    if len(config.words) != 2:
        raise ConfigError("word-problem takes two positive words")
    loaded = load_input(_one_input(config))
    p = loaded.presentation
    w, w_prime = (parse_positive_word(text, p) for text in config.words)
    verdict = word_problem(p, w, w_prime, config.budget)
    report = {'verdict': verdict, 'w': p.spell(w) or 'e', 'w_prime': p.spell(w_prime) or 'e'}
    exit_code = {EQUAL: EXIT_OK, DISTINCT: EXIT_FAILS}.get(verdict, EXIT_UNDETERMINED)
    return CommandResult(exit_code, report)


# =============================================================================
# MONOID COMMANDS
# =============================================================================
def cmd_monoid_explore(config: RunConfig) -> CommandResult:
    loaded = load_input(_one_input(config))
    p = loaded.presentation
    gc = enumerate_classes(p, config.max_length, config.size_cap)
    cancellativity = check_left_cancellativity(gc)
    lcm = check_lcm_existence(gc, p, config.budget)

    report = {
        'classes': gc.to_dict(p, config.list_classes),
        'left_cancellativity': cancellativity.to_dict(p),
        'lcm': lcm.to_dict(),
    }
    if loaded.arrangement is not None:
        has_no_edges = classify(build_fan_graph(build_lattice(loaded.arrangement))).has_no_edges
        report['fan_graph'] = {
            'has_no_edges': has_no_edges,
            'certified': loaded.certificate.applicable,
            'reason': loaded.certificate.reason,
        }
        if has_no_edges:
            # edgeless graph: the presentation is complete, so both must hold
            report['corollary'] = {'applies': True, 'holds': cancellativity.ok and lcm.ok}

    ok = cancellativity.ok and lcm.ok
    return CommandResult(EXIT_OK if ok else EXIT_FAILS, report)


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    'lattice': cmd_lattice,
    'graph': cmd_graph,
    'classify': cmd_classify,
    'present': cmd_present,
    'check-complemented': cmd_check_complemented,
    'check-complete': cmd_check_complete,
    'reverse': cmd_reverse,
    'word-problem': cmd_word_problem,
    'monoid-explore': cmd_monoid_explore,
    'generate': cmd_generate,
    'transversal': cmd_transversal,
    'add-line': cmd_add_line,
}


def run(config: RunConfig) -> CommandResult:
    """Run one subcommand, mapping library errors to exit codes."""
    try:
        return COMMANDS[config.command](config)
    except BudgetExhaustedError as e:
        return CommandResult(EXIT_UNDETERMINED, {'error': str(e), 'verdict': 'undetermined'})
    except INPUT_ERRORS as e:
        return CommandResult(EXIT_INPUT_ERROR, {'error': str(e)})


# =============================================================================
# OUTPUT
# =============================================================================
SUMMARY = {
    EXIT_OK: '✅ Success',
    EXIT_FAILS: '❌ Check failed',
    EXIT_UNDETERMINED: '⚠️  Undetermined within the step budget',
    EXIT_INPUT_ERROR: '❌ Input error',
}


def render_text(config: RunConfig, result: CommandResult) -> str:
    lines = ['=' * 60, f"ARRANGEMENT MONOIDS - {config.command.upper()}", '=' * 60]
    for key, value in result.report.items():
        if isinstance(value, (dict, list)):
            lines.append(f"{key}:")
            lines.append(textwrap.indent(dumps(value), '  '))
        else:
            lines.append(f"{key}: {value}")
    lines.append('=' * 60)
    lines.append(SUMMARY[result.exit_code])
    return '\n'.join(lines) + '\n'


def emit(config: RunConfig, result: CommandResult, stream=None) -> None:
    stream = stream or sys.stdout
    if result.exit_code == EXIT_INPUT_ERROR:
        print(f"❌ Error: {result.report.get('error')}", file=sys.stderr)
    if result.text is not None:
        stream.write(result.text)
    elif config.output_format == 'text':
        stream.write(render_text(config, result))
    else:
        stream.write(dumps(result.report) + '\n')


# =============================================================================
# ARGUMENT PARSING
# =============================================================================
class CliParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the input-error exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = CliParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, help='Report format (default from settings)')
    common.add_argument('--budget', type=int, help='Reversing step budget')
    common.add_argument('--max-length', type=int, help='Longest word length explored')
    common.add_argument('--size-cap', type=int, help='Maximum words per length in monoid-explore')
    common.add_argument('--seed', type=int, help='Seed for randomized choices')
    common.add_argument('--workers', type=int, help='Processes for check-complete')
    common.add_argument('--settings', type=str, help='Settings file (default: data/settings.json)')
    common.add_argument('--log-level', type=str, help='Logging level (default from settings)')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = CliParser(
        description='Line arrangements, conjugation-free presentations and subword reversing',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    for name, help_text in (('lattice', 'Incidence lattice of an arrangement'),
                            ('graph', 'Fan graph of an arrangement'),
                            ('classify', 'Fan graph classification and certificate'),
                            ('check-complemented', 'Check the complemented property'),
                            ('check-complete', 'Cube condition on all generator triples')):
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.add_argument('input', help='Arrangement (.arr) or presentation (.json) file')

    present = sub.add_parser('present', parents=[common], help='Conjugation-free presentation')
    present.add_argument('input')
    present.add_argument('--output', type=str, help='Also write the presentation JSON to this file')

    rev = sub.add_parser('reverse', parents=[common], help='Reverse a signed word')
    rev.add_argument('input')
    rev.add_argument('word', help='e.g. "x0^-1 x1"')
    rev.add_argument('--trace', action='store_true', help='Include every intermediate word')

    wp = sub.add_parser('word-problem', parents=[common], help='Decide w = w\' by reversing')
    wp.add_argument('input')
    wp.add_argument('w')
    wp.add_argument('w_prime')

    explore = sub.add_parser('monoid-explore', parents=[common], help='Graded classes and structure checks')
    explore.add_argument('input')
    explore.add_argument('--list-classes', action='store_true', help='Include every class in the report')

    generate = sub.add_parser('generate', parents=[common], help='Write an arrangement file to stdout')
    generate.add_argument('kind', choices=('pencil', 'random'))
    generate.add_argument('size', type=int)

    transversal = sub.add_parser('transversal', parents=[common], help='Check two arrangements meet only in new simple points')
    transversal.add_argument('first')
    transversal.add_argument('second')

    add_line = sub.add_parser('add-line', parents=[common], help='Classify adding a line')
    add_line.add_argument('input')
    add_line.add_argument('line', help='Coefficients "a b c" of ax + by = c')

    return parser


def config_from_args(args: argparse.Namespace, settings: dict) -> RunConfig:
    def pick(flag, section, key):
        value = getattr(args, flag, None)
        return settings[section][key] if value is None else value

    command = args.command
    if command == 'transversal':
        inputs, words = (args.first, args.second), ()
    elif command == 'generate':
        inputs, words = (), (args.kind, str(args.size))
    else:
        inputs = (args.input,)
        words = {
            'reverse': lambda: (args.word,),
            'word-problem': lambda: (args.w, args.w_prime),
            'add-line': lambda: (args.line,),
        }.get(command, tuple)()

    return RunConfig(
        command=command,
        inputs=inputs,
        words=words,
        budget=pick('budget', 'reversing', 'budget'),
        max_length=pick('max_length', 'monoid', 'max_length'),
        size_cap=pick('size_cap', 'monoid', 'size_cap'),
        output_format=pick('format', 'cli', 'format'),
        trace=getattr(args, 'trace', False),
        seed=args.seed,
        workers=pick('workers', 'cli', 'workers'),
        output=getattr(args, 'output', None),
        list_classes=getattr(args, 'list_classes', False),
    )
