from .clause import (COALITION_KINDS, GIVEN, GLOBAL, INITIAL, KINDS, NEGATIVE,
                     POSITIVE, TAUTOLOGY, Clause, Derived, clause_key,
                     format_clause, sort_literals)
from .io import (ProblemSyntaxError, dump_problem, format_trace_line,
                 load_problem, parse_clause, parse_line, parse_literal,
                 parse_problem)
from .normalize import FRESH_PREFIX, Normalizer, normalize
from .problem import CoalitionProblem

__all__ = [
    'COALITION_KINDS', 'GIVEN', 'GLOBAL', 'INITIAL', 'KINDS', 'NEGATIVE',
    'POSITIVE', 'TAUTOLOGY', 'Clause', 'Derived', 'clause_key',
    'format_clause', 'sort_literals', 'ProblemSyntaxError', 'dump_problem',
    'format_trace_line', 'load_problem', 'parse_clause', 'parse_line',
    'parse_literal', 'parse_problem', 'FRESH_PREFIX', 'Normalizer',
    'normalize', 'CoalitionProblem'
]
