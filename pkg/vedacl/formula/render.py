from .syntax import (And, Bottom, Coop, DualCoop, Iff, Implies, Not, Or, Prop,
                     Top)

IFF, IMP, OR, AND, UNARY = 1, 2, 3, 4, 5


def format_coalition(coalition):
    return ','.join(str(a) for a in sorted(coalition))


def _binary(f, op, level, left_level, right_level):
    return f'{_render(f.left, left_level)} {op} ' \
           f'{_render(f.right, right_level)}', level


def _node(f):
    if isinstance(f, Top):
        return 'true', UNARY
    if isinstance(f, Bottom):
        return 'false', UNARY
    if isinstance(f, Prop):
        return f.name, UNARY
    if isinstance(f, Not):
        return f'~{_render(f.arg, UNARY)}', UNARY
    if isinstance(f, Coop):
        return f'<{format_coalition(f.coalition)}> ' \
               f'{_render(f.arg, UNARY)}', UNARY
    if isinstance(f, DualCoop):
        return f'[{format_coalition(f.coalition)}] ' \
               f'{_render(f.arg, UNARY)}', UNARY
    if isinstance(f, And):
        return _binary(f, '&', AND, AND, AND + 1)
    if isinstance(f, Or):
        return _binary(f, '|', OR, OR, OR + 1)
    if isinstance(f, Implies):
        return _binary(f, '->', IMP, IMP + 1, IMP)
    if isinstance(f, Iff):
        return _binary(f, '<->', IFF, IFF, IFF + 1)
    raise TypeError(f'not a formula: {f!r}')


def _render(f, required):
    text, level = _node(f)
    return f'({text})' if level < required else text


def render(f):
    """Concrete syntax of ``f`` with the fewest parentheses that parse back
    to the same tree."""
    return _render(f, IFF)
