from .syntax import (FALSE, TRUE, And, Bottom, Coop, DualCoop, Iff, Implies,
                     Not, Or, Prop, Top, is_modal_free)


def _and(x, y):
    if x == TRUE:
        return y
    if y == TRUE:
        return x
    # absorbing only modality free operands keeps the agent set intact
    if x == FALSE and is_modal_free(y) or y == FALSE and is_modal_free(x):
        return FALSE
    return And(x, y)


def _or(x, y):
    if x == FALSE:
        return y
    if y == FALSE:
        return x
    if x == TRUE and is_modal_free(y) or y == TRUE and is_modal_free(x):
        return TRUE
    return Or(x, y)


def _nnf(f, positive):
    if isinstance(f, Top):
        return TRUE if positive else FALSE
    if isinstance(f, Bottom):
        return FALSE if positive else TRUE
    if isinstance(f, Prop):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return _nnf(f.arg, not positive)
    if isinstance(f, And):
        if positive:
            return _and(_nnf(f.left, True), _nnf(f.right, True))
        return _or(_nnf(f.left, False), _nnf(f.right, False))
    if isinstance(f, Or):
        if positive:
            return _or(_nnf(f.left, True), _nnf(f.right, True))
        return _and(_nnf(f.left, False), _nnf(f.right, False))
    if isinstance(f, Implies):
        if positive:
            return _or(_nnf(f.left, False), _nnf(f.right, True))
        return _and(_nnf(f.left, True), _nnf(f.right, False))
    if isinstance(f, Iff):
        pos_l, neg_l = _nnf(f.left, True), _nnf(f.left, False)
        pos_r, neg_r = _nnf(f.right, True), _nnf(f.right, False)
        if positive:
            return _and(_or(neg_l, pos_r), _or(pos_l, neg_r))
        return _and(_or(pos_l, pos_r), _or(neg_l, neg_r))
    if isinstance(f, Coop):
        if positive:
            return Coop(f.coalition, _nnf(f.arg, True))
        return DualCoop(f.coalition, _nnf(f.arg, False))
    if isinstance(f, DualCoop):
        if positive:
            return DualCoop(f.coalition, _nnf(f.arg, True))
        return Coop(f.coalition, _nnf(f.arg, False))
    raise TypeError(f'not a formula: {f!r}')


def nnf(f):
    """Negation normal form of ``f``.

    Implications and biconditionals are expanded, negations are pushed down
    to propositions, ``~<A>`` becomes ``[A]~`` and ``~[A]`` becomes ``<A>~``.
    Boolean constants are folded on the way up.
    """
    return _nnf(f, True)


def negate_for_validity(f):
    """``f`` is valid iff the result is unsatisfiable."""
    return nnf(Not(f))
