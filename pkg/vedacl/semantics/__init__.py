from .cgm import AMove, Cgm, a_moves, outcomes
from .evaluate import check_problem, evaluate, extension, lift_model
from .io import (ModelSyntaxError, dump_model, load_model, parse_model,
                 parse_model_lines)
from .search import (Bounds, BoundsExceeded, bounded_search, iter_models,
                     iter_rows, search_formula, search_problem, unique_rows)

__all__ = [
    'AMove', 'Cgm', 'a_moves', 'outcomes', 'check_problem', 'evaluate',
    'extension', 'lift_model', 'ModelSyntaxError', 'dump_model',
    'load_model', 'parse_model', 'parse_model_lines', 'Bounds',
    'BoundsExceeded', 'bounded_search', 'iter_models', 'iter_rows',
    'search_formula', 'search_problem', 'unique_rows'
]
