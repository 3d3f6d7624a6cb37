import copy
import os.path as osp

from vedacore.misc import Config
from vedacl.engine import build_engine
from vedacl.formula import negate_for_validity, parse
from vedacl.snf import load_problem, normalize

PROBLEM_EXTENSIONS = ('.clp', )

DEFAULT_CFG = dict(
    engine=dict(
        typename='GivenClauseEngine',
        timeout=100.0,
        sigma_rule=True,
        seed=None,
        max_clauses=None),
    hooks=[dict(typename='LoggerHook', interval=500)],
    search=dict(max_states=3, max_moves=2),
    bench=dict(timeout=100.0, jobs=1),
    log_level='INFO')


def load_config(filename=None, options=None):
    """Settings from ``filename`` (defaults when ``None``) with dotted
    ``options`` merged on top."""
    if filename is None:
        cfg = Config(copy.deepcopy(DEFAULT_CFG))
    else:
        cfg = Config.fromfile(filename)
    if options:
        cfg.merge_from_dict(options)
    return cfg


def input_format(filename, fmt=None):
    if fmt is not None:
        return fmt
    if osp.splitext(filename)[1] in PROBLEM_EXTENSIONS:
        return 'problem'
    return 'formula'


def load_formula(filename):
    with open(filename, 'r') as f:
        return parse(f.read())


def load_input(filename, fmt=None, valid=False):
    """Read a formula or problem file as a coalition problem.

    Formulas are normalized; with ``valid`` their negation is, so that
    unsatisfiability certifies validity.

    Returns:
        tuple: ``(problem, formula)``, ``formula`` being ``None`` for
        problem files.
    """
    fmt = input_format(filename, fmt)
    if fmt == 'problem':
        if valid:
            raise ValueError('--valid applies to formula inputs only')
        return load_problem(filename), None
    if fmt != 'formula':
        raise ValueError(f'unknown input format {fmt!r}')
    formula = load_formula(filename)
    if valid:
        formula = negate_for_validity(formula)
    return normalize(formula), formula


def prove(filename, cfg, fmt=None, valid=False, logger=None, hooks=None):
    """Saturate the input at ``filename`` with the engine of ``cfg``."""
    problem, _ = load_input(filename, fmt, valid)
    if hooks is None:
        hooks = cfg.get('hooks', [])
    engine = build_engine(cfg.engine, hooks=hooks, logger=logger)
    if logger is not None:
        logger.debug(f'{filename}: {len(problem)} clauses, agents '
                     f'{sorted(problem.sigma)}')
    return engine.saturate(problem, origin=filename)
