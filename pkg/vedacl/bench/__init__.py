from .generator import FORMAT_VERSION, BenchParams, gen_formula
from .runner import (bench_table, collect_problems, print_bench_table,
                     run_bench, run_problem, summarize)
from .suite import MANIFEST, gen_suite, problem_name, read_manifest

__all__ = [
    'FORMAT_VERSION', 'BenchParams', 'gen_formula', 'bench_table',
    'collect_problems', 'print_bench_table', 'run_bench', 'run_problem',
    'summarize', 'MANIFEST', 'gen_suite', 'problem_name', 'read_manifest'
]
