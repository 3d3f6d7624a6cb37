from collections import defaultdict

from vedacl.snf import GLOBAL, INITIAL, NEGATIVE, POSITIVE


def subsumes(c1, c2):
    """Whether ``c1`` makes ``c2`` redundant.

    A global clause subsumes an initial or global clause, an initial clause
    only an initial one, when its disjunction is a subset. A positive clause
    ``C' => <A'> D'`` subsumes ``C => <A> D`` when ``C' <= C``, ``A' <= A``
    and ``D' <= D``; for negative clauses the coalition inclusion is
    reversed, ``A <= A'``. No other pair subsumes.
    """
    if c1.kind == GLOBAL and c2.kind in (INITIAL, GLOBAL) or \
            c1.kind == INITIAL and c2.kind == INITIAL:
        return c1.consequent <= c2.consequent
    if c1.kind == POSITIVE and c2.kind == POSITIVE:
        return c1.antecedent <= c2.antecedent and \
            c1.coalition <= c2.coalition and \
            c1.consequent <= c2.consequent
    if c1.kind == NEGATIVE and c2.kind == NEGATIVE:
        return c1.antecedent <= c2.antecedent and \
            c2.coalition <= c1.coalition and \
            c1.consequent <= c2.consequent
    return False


SUBSUMERS = {
    INITIAL: (INITIAL, GLOBAL),
    GLOBAL: (GLOBAL, ),
    POSITIVE: (POSITIVE, ),
    NEGATIVE: (NEGATIVE, ),
}


def _key(literal):
    return (literal.name, literal.negated)


class ClauseIndex:
    """Stored clauses bucketed by kind and by the least literal of their
    consequent, so a candidate only meets clauses whose least literal it
    contains (or whose consequent is empty)."""

    def __init__(self):
        self._buckets = defaultdict(list)
        self._size = 0

    def __len__(self):
        return self._size

    def add(self, clause):
        least = min(clause.consequent, key=_key, default=None)
        self._buckets[clause.kind, least].append(clause)
        self._size += 1

    def candidates(self, clause):
        keys = [None] + list(clause.consequent)
        for kind in SUBSUMERS[clause.kind]:
            for key in keys:
                yield from self._buckets.get((kind, key), ())

    def find_subsumer(self, clause):
        for other in self.candidates(clause):
            if subsumes(other, clause):
                return other
        return None

    def is_subsumed(self, clause):
        return self.find_subsumer(clause) is not None
