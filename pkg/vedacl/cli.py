"""Command line front end: ``vedacl prove|gen|check|search|bench``."""
import argparse
import sys

from vedacore.fileio import dump
from vedacore.misc import DictAction
from vedacl.assembler import (input_format, load_config, load_formula,
                              prove)
from vedacl.bench import (BenchParams, gen_suite, print_bench_table,
                          run_bench)
from vedacl.engine import ProofError, extract_proof
from vedacl.formula import FormulaSyntaxError
from vedacl.misc import get_root_logger
from vedacl.semantics import (Bounds, BoundsExceeded, ModelSyntaxError,
                              bounded_search, check_problem, dump_model,
                              evaluate, load_model)
from vedacl.snf import CoalitionProblem, ProblemSyntaxError, load_problem

ERROR_EXIT = 1
HOLDS_EXIT, FAILS_EXIT = 0, 2
FOUND_EXIT, NOT_FOUND_EXIT = 0, 2

ERRORS = (FormulaSyntaxError, ProblemSyntaxError, ModelSyntaxError,
          ProofError, BoundsExceeded, ValueError, OSError)


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1, the code every other failure uses."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ERROR_EXIT, f'{self.prog}: error: {message}\n')


def _on_off(value):
    if value not in ('on', 'off'):
        raise argparse.ArgumentTypeError(f'expected on or off, got {value}')
    return value == 'on'


def _positive_float(value):
    value = float(value)
    if value <= 0:
        raise argparse.ArgumentTypeError('must be positive')
    return value


def _add_common(parser):
    parser.add_argument('--config', help='config file path')
    parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override settings, e.g. engine.timeout=5')


def _add_format(parser):
    parser.add_argument(
        '--format',
        choices=['formula', 'problem'],
        help='input kind; by default .clp files are problems')


def build_parser():
    parser = ArgumentParser(
        prog='vedacl',
        description='Resolution prover for Coalition Logic')
    sub = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    sub.required = True

    p = sub.add_parser('prove', help='decide satisfiability of an input')
    p.add_argument('input', help='formula or problem file')
    _add_format(p)
    p.add_argument(
        '--valid',
        action='store_true',
        help='prove validity: refute the negated formula')
    p.add_argument('--trace', action='store_true', help='print the trace')
    p.add_argument('--timeout', type=_positive_float, help='seconds')
    p.add_argument('--seed', type=int, help='resolvent shuffling seed')
    p.add_argument('--sigma-rule', type=_on_off, help='on or off')
    p.add_argument('--max-clauses', type=int, help='stored clause cap')
    p.add_argument(
        '--porcelain',
        action='store_true',
        help='print the report as key=value lines')
    _add_common(p)

    g = sub.add_parser('gen', help='generate a random benchmark set')
    g.add_argument('out', help='output directory')
    g.add_argument('-N', type=int, default=5, help='propositions')
    g.add_argument('-A', type=int, default=2, help='agents')
    g.add_argument('-L', type=int, default=5, help='clauses per formula')
    g.add_argument('-D', type=int, default=1, help='modal degree')
    g.add_argument('-P', type=float, default=1.0, help='modal probability')
    g.add_argument('--count', type=int, default=10, help='formulas per set')
    g.add_argument('--seed', type=int, default=0)

    c = sub.add_parser('check', help='model check an input')
    c.add_argument('model', help='model file')
    c.add_argument('input', help='formula or problem file')
    _add_format(c)

    s = sub.add_parser('search', help='look for a small model')
    s.add_argument('input', help='formula or problem file')
    _add_format(s)
    s.add_argument('--max-states', type=int)
    s.add_argument('--max-moves', type=int)
    _add_common(s)

    b = sub.add_parser('bench', help='prove every benchmark problem')
    b.add_argument('dir', help='directory of benchmark sets')
    b.add_argument('--timeout', type=_positive_float, help='seconds')
    b.add_argument('--jobs', type=int, help='parallel workers')
    b.add_argument('--dump', help='write results to a .json/.yaml file')
    _add_common(b)
    return parser


def _config(args):
    cfg = load_config(args.config, args.cfg_options)
    logger = get_root_logger(log_level=cfg.get('log_level', 'INFO'))
    return cfg, logger


def cmd_prove(args):
    cfg, logger = _config(args)
    if args.timeout is not None:
        cfg.engine.timeout = args.timeout
    if args.seed is not None:
        cfg.engine.seed = args.seed
    if args.sigma_rule is not None:
        cfg.engine.sigma_rule = args.sigma_rule
    if args.max_clauses is not None:
        cfg.engine.max_clauses = args.max_clauses
    verdict = prove(args.input, cfg, args.format, args.valid, logger)
    stats = verdict.stats
    if args.porcelain:
        report = dict(verdict=verdict.tag, elapsed=f'{verdict.elapsed:.6f}')
        report.update((k, v) for k, v in stats.items() if k != 'elapsed')
        if verdict.tag == 'TIMEOUT':
            report['reason'] = verdict.reason
        if verdict.tag == 'UNSAT':
            report['proof_steps'] = len(verdict.proof)
        for key, value in report.items():
            print(f'{key}={value}')
    else:
        print(verdict.tag)
    if args.trace:
        steps = extract_proof(verdict) if verdict.tag == 'UNSAT' else \
            verdict.derivation
        for line in steps.trace():
            print(line)
    return verdict.exit_code


def cmd_gen(args):
    params = BenchParams(
        n_props=args.N,
        n_agents=args.A,
        n_conjuncts=args.L,
        modal_degree=args.D,
        probability=args.P,
        seed=args.seed)
    print(gen_suite(params, args.count, args.out))
    return 0


def _read_target(filename, fmt):
    if input_format(filename, fmt) == 'problem':
        return load_problem(filename)
    return load_formula(filename)


def cmd_check(args):
    model = load_model(args.model)
    target = _read_target(args.input, args.format)
    if isinstance(target, CoalitionProblem):
        holds = check_problem(model, target)
    else:
        holds = evaluate(model, model.init, target)
    print('HOLDS' if holds else 'FAILS')
    return HOLDS_EXIT if holds else FAILS_EXIT


def cmd_search(args):
    cfg, _ = _config(args)
    search = dict(cfg.get('search', {}))
    if args.max_states is not None:
        search['max_states'] = args.max_states
    if args.max_moves is not None:
        search['max_moves'] = args.max_moves
    target = _read_target(args.input, args.format)
    model = bounded_search(target, Bounds(**search))
    if model is None:
        print('NO MODEL WITHIN BOUNDS')
        return NOT_FOUND_EXIT
    print(dump_model(model), end='')
    return FOUND_EXIT


def cmd_bench(args):
    cfg, logger = _config(args)
    bench = cfg.get('bench', {})
    timeout = args.timeout or bench.get('timeout', cfg.engine.timeout)
    jobs = args.jobs or bench.get('jobs', 1)
    cfg.engine.timeout = timeout
    results = run_bench(args.dir, cfg, jobs)
    print_bench_table(results)
    if args.dump:
        dump(results, args.dump)
        logger.info(f'results written to {args.dump}')
    return 0


COMMANDS = dict(
    prove=cmd_prove,
    gen=cmd_gen,
    check=cmd_check,
    search=cmd_search,
    bench=cmd_bench)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ERRORS as e:
        print(f'vedacl: error: {e}', file=sys.stderr)
        return ERROR_EXIT


def run():
    sys.exit(main())
