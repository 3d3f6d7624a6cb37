import os.path as osp

from vedacore.fileio import dict_from_file
from vedacore.misc import mkdir_or_exist
from vedacl.formula import render
from .generator import FORMAT_VERSION, BenchParams, gen_formula

MANIFEST = 'manifest.txt'


def problem_name(index):
    return f'problem_{index}.cl'


def gen_suite(params, count, out_dir):
    """Write ``count`` formulas of ``params`` under ``out_dir/<set name>``.

    Files are ``problem_1.cl`` onwards, plus a ``key=value`` manifest.
    Rerunning with equal arguments reproduces every byte.

    Returns:
        str: path of the manifest.
    """
    if count < 0:
        raise ValueError(f'count must not be negative, got {count}')
    set_dir = osp.join(out_dir, params.set_name)
    mkdir_or_exist(set_dir)
    for index in range(1, count + 1):
        formula = gen_formula(params, params.rng(index))
        with open(osp.join(set_dir, problem_name(index)), 'w') as f:
            f.write(render(formula) + '\n')
    manifest = osp.join(set_dir, MANIFEST)
    with open(manifest, 'w') as f:
        f.write(
            '\n'.join([
                f'format_version={FORMAT_VERSION}',
                f'n_props={params.n_props}',
                f'n_agents={params.n_agents}',
                f'n_conjuncts={params.n_conjuncts}',
                f'modal_degree={params.modal_degree}',
                f'probability={params.probability}',
                f'seed={params.seed}',
                f'count={count}',
                'rng=PCG64',
            ]) + '\n')
    return manifest


def read_manifest(filename):
    """Parse a manifest back into ``(params, count)``."""
    entries = dict_from_file(filename, sep='=')
    version = int(entries.get('format_version', 0))
    if version != FORMAT_VERSION:
        raise ValueError(f'unsupported manifest version {version}')
    params = BenchParams(
        n_props=int(entries['n_props']),
        n_agents=int(entries['n_agents']),
        n_conjuncts=int(entries['n_conjuncts']),
        modal_degree=int(entries['modal_degree']),
        probability=float(entries['probability']),
        seed=int(entries['seed']))
    return params, int(entries['count'])
