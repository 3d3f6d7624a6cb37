from dataclasses import dataclass
from typing import FrozenSet, NamedTuple

Coalition = FrozenSet[int]


class Literal(NamedTuple):
    """A proposition or its negation; ``~~l`` is ``l`` again."""
    name: str
    negated: bool = False

    def __invert__(self):
        return Literal(self.name, not self.negated)

    def __str__(self):
        return f'~{self.name}' if self.negated else self.name

    def to_formula(self):
        atom = Prop(self.name)
        return Not(atom) if self.negated else atom


class Formula:
    """Base of the immutable formula tree."""

    def __str__(self):
        from .render import render
        return render(self)


@dataclass(frozen=True, repr=False)
class Top(Formula):

    def __repr__(self):
        return 'TRUE'


@dataclass(frozen=True, repr=False)
class Bottom(Formula):

    def __repr__(self):
        return 'FALSE'


TRUE = Top()
FALSE = Bottom()


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Coop(Formula):
    """``<A> arg``: the coalition has a joint move forcing ``arg``."""
    coalition: Coalition
    arg: Formula

    def __post_init__(self):
        object.__setattr__(self, 'coalition', frozenset(self.coalition))


@dataclass(frozen=True)
class DualCoop(Formula):
    """``[A] arg``, read as ``~<A> ~arg``."""
    coalition: Coalition
    arg: Formula

    def __post_init__(self):
        object.__setattr__(self, 'coalition', frozenset(self.coalition))


BINARY = (And, Or, Implies, Iff)
MODAL = (Coop, DualCoop)


def conjoin(formulas):
    """Left nested conjunction, ``true`` for no operands."""
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TRUE if result is None else result


def disjoin(formulas):
    """Left nested disjunction, ``false`` for no operands."""
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return FALSE if result is None else result


def as_literal(f):
    """The :class:`Literal` of ``p`` or ``~p``, else ``None``."""
    if isinstance(f, Prop):
        return Literal(f.name)
    if isinstance(f, Not) and isinstance(f.arg, Prop):
        return Literal(f.arg.name, True)
    return None


def subformulas(f):
    """Yield every node of ``f`` in pre-order."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, BINARY):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, (Not, ) + MODAL):
            stack.append(node.arg)


def agents_of(f):
    """Union of all coalitions occurring in ``f``."""
    agents = set()
    for node in subformulas(f):
        if isinstance(node, MODAL):
            agents |= node.coalition
    return frozenset(agents)


def props_of(f):
    return frozenset(node.name for node in subformulas(f)
                     if isinstance(node, Prop))


def is_modal_free(f):
    return not any(isinstance(node, MODAL) for node in subformulas(f))


def modal_depth(f):
    if isinstance(f, MODAL):
        return 1 + modal_depth(f.arg)
    if isinstance(f, Not):
        return modal_depth(f.arg)
    if isinstance(f, BINARY):
        return max(modal_depth(f.left), modal_depth(f.right))
    return 0
