import os
import os.path as osp
from collections import OrderedDict

from joblib import Parallel, delayed
from terminaltables import AsciiTable

from vedacore.misc import Config, ProgressBar, natural_key, print_log
from vedacl.assembler import PROBLEM_EXTENSIONS, prove

INPUT_EXTENSIONS = ('.cl', ) + PROBLEM_EXTENSIONS


def _inputs(directory):
    return sorted((f for f in os.listdir(directory)
                   if osp.splitext(f)[1] in INPUT_EXTENSIONS),
                  key=natural_key)


def collect_problems(root):
    """``(set name, path)`` of every input below ``root``: the files in
    ``root`` itself form a set named after it, each subdirectory another."""
    if not osp.isdir(root):
        raise FileNotFoundError(f'no directory {root}')
    problems = []
    root = osp.normpath(root)
    for name in _inputs(root):
        problems.append((osp.basename(root), osp.join(root, name)))
    subdirs = sorted((d for d in os.listdir(root)
                      if osp.isdir(osp.join(root, d))),
                     key=natural_key)
    for d in subdirs:
        for name in _inputs(osp.join(root, d)):
            problems.append((d, osp.join(root, d, name)))
    return problems


def run_problem(set_name, filename, cfg):
    """One saturation; a timeout counts as ``cap`` seconds."""
    if not isinstance(cfg, Config):
        cfg = Config(cfg)
    verdict = prove(filename, cfg, hooks=[])
    cap = cfg.engine.timeout
    elapsed = verdict.elapsed
    if verdict.tag == 'TIMEOUT' and cap is not None:
        elapsed = cap
    return dict(
        set=set_name,
        file=osp.basename(filename),
        verdict=verdict.tag,
        time=elapsed,
        given=verdict.stats.get('given', 0),
        derived=verdict.stats.get('derived', 0))


def run_bench(root, cfg, jobs=1):
    """Prove every input below ``root``.

    Returns:
        list[dict]: one record per problem, in the order of
        :func:`collect_problems`.
    """
    problems = collect_problems(root)
    if not problems:
        raise ValueError(f'no .cl or .clp inputs below {root}')
    if jobs == 1:
        results = []
        prog_bar = ProgressBar(len(problems))
        for set_name, filename in problems:
            results.append(run_problem(set_name, filename, cfg))
            prog_bar.update()
        prog_bar.finish()
    else:
        # workers get plain dicts; results keep the input order
        cfg_dict = cfg.to_dict()
        results = Parallel(n_jobs=jobs)(
            delayed(run_problem)(set_name, filename, cfg_dict)
            for set_name, filename in problems)
    return results


def summarize(results):
    """Per set counts and average time, in first appearance order."""
    sets = OrderedDict()
    for r in results:
        row = sets.setdefault(
            r['set'],
            dict(problems=0, solved=0, sat=0, unsat=0, timeout=0, time=0.0))
        row['problems'] += 1
        row['time'] += r['time']
        key = r['verdict'].lower()
        row[key] += 1
        if key != 'timeout':
            row['solved'] += 1
    return sets


def bench_table(results):
    header = [
        'set', 'problems', 'solved', 'sat', 'unsat', 'timeout', 'avg time'
    ]
    table_data = [header]
    total = dict(problems=0, solved=0, sat=0, unsat=0, timeout=0, time=0.0)
    for name, row in summarize(results).items():
        table_data.append([
            name, row['problems'], row['solved'], row['sat'], row['unsat'],
            row['timeout'], f'{row["time"] / row["problems"]:.3f}'
        ])
        for key in total:
            total[key] += row[key]
    table_data.append([
        'total', total['problems'], total['solved'], total['sat'],
        total['unsat'], total['timeout'],
        f'{total["time"] / max(total["problems"], 1):.3f}'
    ])
    table = AsciiTable(table_data)
    table.inner_footing_row_border = True
    return table


def print_bench_table(results, logger=None):
    print_log('\n' + bench_table(results).table, logger=logger)
