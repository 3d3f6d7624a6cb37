from .nnf import negate_for_validity, nnf
from .parser import FormulaSyntaxError, parse
from .render import format_coalition, render
from .syntax import (FALSE, TRUE, And, Bottom, Coalition, Coop, DualCoop,
                     Formula, Iff, Implies, Literal, Not, Or, Prop, Top,
                     agents_of, as_literal, conjoin, disjoin, is_modal_free,
                     modal_depth, props_of, subformulas)

__all__ = [
    'negate_for_validity', 'nnf', 'FormulaSyntaxError', 'parse',
    'format_coalition', 'render', 'FALSE', 'TRUE', 'And', 'Bottom',
    'Coalition', 'Coop', 'DualCoop', 'Formula', 'Iff', 'Implies', 'Literal',
    'Not', 'Or', 'Prop', 'Top', 'agents_of', 'as_literal', 'conjoin',
    'disjoin', 'is_modal_free', 'modal_depth', 'props_of', 'subformulas'
]
