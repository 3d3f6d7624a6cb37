from dataclasses import dataclass, field, replace
from typing import FrozenSet, Optional, Tuple

from vedacl.formula import (FALSE, TRUE, Coop, DualCoop, Implies, Literal,
                            conjoin, disjoin, format_coalition)

INITIAL = 'I'
GLOBAL = 'U'
POSITIVE = 'P'
NEGATIVE = 'N'
KINDS = (INITIAL, GLOBAL, POSITIVE, NEGATIVE)
COALITION_KINDS = (POSITIVE, NEGATIVE)


class Given:
    """Justification of an input clause."""

    rule = 'given'
    premises = ()
    pivot = None

    def __repr__(self):
        return 'GIVEN'

    def __eq__(self, other):
        return isinstance(other, Given)

    def __hash__(self):
        return hash('given')


GIVEN = Given()


@dataclass(frozen=True)
class Derived:
    rule: str
    premises: Tuple[int, ...]
    pivot: Optional[Literal] = None


class _Tautology:

    def __repr__(self):
        return 'TAUTOLOGY'

    def __bool__(self):
        return False


TAUTOLOGY = _Tautology()


def sort_literals(literals):
    return sorted(literals, key=lambda lit: (lit.name, lit.negated))


def clause_key(clause):
    """Total order on simplified clauses: kind, antecedent, coalition, then
    consequent, literals compared by name and sign."""

    def literals(items):
        return tuple((lit.name, lit.negated) for lit in sort_literals(items))

    return (KINDS.index(clause.kind), literals(clause.antecedent),
            tuple(sorted(clause.coalition or ())),
            literals(clause.consequent))


def _has_complement(literals):
    return any(~lit in literals for lit in literals)


@dataclass(frozen=True)
class Clause:
    """A clause of a coalition problem.

    ``kind`` is one of ``I`` (initial), ``U`` (global), ``P`` (positive
    coalition, ``C => <A> D``) and ``N`` (negative coalition,
    ``C => [A] D``). ``antecedent`` is a conjunction and ``consequent`` a
    disjunction of literals; empty sets stand for ``true`` and ``false``.
    Before :meth:`simplify` both may also hold the constants ``True`` and
    ``False``.

    ``id`` and ``justification`` take no part in equality.
    """
    kind: str
    consequent: FrozenSet = frozenset()
    antecedent: FrozenSet = frozenset()
    coalition: Optional[FrozenSet[int]] = None
    id: Optional[int] = field(default=None, compare=False)
    justification: object = field(default=GIVEN, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f'unknown clause kind {self.kind!r}')
        object.__setattr__(self, 'consequent', frozenset(self.consequent))
        object.__setattr__(self, 'antecedent', frozenset(self.antecedent))
        if self.kind in COALITION_KINDS:
            if self.coalition is None:
                raise ValueError('coalition clauses need a coalition')
            object.__setattr__(self, 'coalition', frozenset(self.coalition))
        elif self.antecedent or self.coalition is not None:
            raise ValueError('initial and global clauses have no antecedent '
                             'and no coalition')

    @classmethod
    def initial(cls, consequent, **kwargs):
        return cls(INITIAL, consequent, **kwargs)

    @classmethod
    def globally(cls, consequent, **kwargs):
        return cls(GLOBAL, consequent, **kwargs)

    @classmethod
    def positive(cls, antecedent, coalition, consequent, **kwargs):
        return cls(POSITIVE, consequent, antecedent, coalition, **kwargs)

    @classmethod
    def negative(cls, antecedent, coalition, consequent, **kwargs):
        return cls(NEGATIVE, consequent, antecedent, coalition, **kwargs)

    @property
    def is_coalition(self):
        return self.kind in COALITION_KINDS

    @property
    def section(self):
        """Problem section the clause is listed under: I, U or N."""
        return NEGATIVE if self.is_coalition else self.kind

    @property
    def is_false(self):
        return not self.consequent and not self.is_coalition

    @property
    def rule(self):
        return self.justification.rule

    def with_id(self, id, justification=None):
        if justification is None:
            justification = self.justification
        return replace(self, id=id, justification=justification)

    def simplify(self):
        """Boolean simplification, or :data:`TAUTOLOGY`.

        Drops ``true`` from the antecedent and ``false`` from the
        consequent. Complementary literals or ``true`` in the consequent, and
        complementary literals or ``false`` in the antecedent, make the
        clause a tautology.
        """
        consequent, antecedent = self.consequent, self.antecedent
        if True in consequent or _has_complement(
                consequent - {True, False}):
            return TAUTOLOGY
        if False in antecedent or _has_complement(
                antecedent - {True, False}):
            return TAUTOLOGY
        consequent = consequent - {False}
        antecedent = antecedent - {True}
        if consequent == self.consequent and antecedent == self.antecedent:
            return self
        return replace(self, consequent=consequent, antecedent=antecedent)

    def core(self):
        """``(antecedent, agents, consequent)`` with literals sorted; the
        agents entry is ``None`` for initial and global clauses."""
        agents = None
        if self.is_coalition:
            agents = tuple(sorted(self.coalition))
        return (tuple(sort_literals(self.antecedent)), agents,
                tuple(sort_literals(self.consequent)))

    def to_formula(self):
        """The clause as a formula, ``C -> <A> D`` for coalition clauses."""
        disjunction = disjoin(
            lit.to_formula() if isinstance(lit, Literal) else
            (TRUE if lit else FALSE)
            for lit in sort_literals(self.consequent))
        if not self.is_coalition:
            return disjunction
        conjunction = conjoin(
            lit.to_formula() if isinstance(lit, Literal) else
            (TRUE if lit else FALSE)
            for lit in sort_literals(self.antecedent))
        modality = Coop if self.kind == POSITIVE else DualCoop
        return Implies(conjunction, modality(self.coalition, disjunction))

    def __str__(self):
        return format_clause(self)


def _format_item(item):
    if isinstance(item, Literal):
        return str(item)
    return 'true' if item else 'false'


def format_clause(clause):
    """``l1 | l2`` or ``c1 & c2 => <A> d1 | d2``."""
    items = sorted(clause.consequent,
                   key=lambda x: (x.name, x.negated)
                   if isinstance(x, Literal) else ('', x))
    consequent = ' | '.join(_format_item(x) for x in items) or 'false'
    if not clause.is_coalition:
        return consequent
    items = sorted(clause.antecedent,
                   key=lambda x: (x.name, x.negated)
                   if isinstance(x, Literal) else ('', x))
    antecedent = ' & '.join(_format_item(x) for x in items) or 'true'
    agents = format_coalition(clause.coalition)
    modality = f'<{agents}>' if clause.kind == POSITIVE else f'[{agents}]'
    return f'{antecedent} => {modality} {consequent}'
