"""Inference rules of the coalition resolution calculus.

Every binary rule resolves on ``pivot`` taken from the consequent of its
first premise against ``~pivot`` in the consequent of the second, and
returns the simplified resolvent (possibly :data:`TAUTOLOGY`) carrying a
:class:`Derived` justification that names both premises in argument order.
"""
from vedacl.snf import (GLOBAL, INITIAL, KINDS, NEGATIVE, POSITIVE, Clause,
                        Derived)


class RuleNotApplicable(ValueError):
    pass


def _expect(clause, kinds, rule, position):
    if clause.kind not in kinds:
        raise RuleNotApplicable(
            f'{rule}: premise {position} must be of kind '
            f'{"/".join(kinds)}, got {clause.kind}')


def _resolve(rule, c1, c2, pivot):
    if pivot not in c1.consequent or ~pivot not in c2.consequent:
        raise RuleNotApplicable(
            f'{rule}: needs {pivot} in premise 1 and {~pivot} in premise 2')
    return (c1.consequent - {pivot}) | (c2.consequent - {~pivot})


def _justify(rule, premises, pivot=None):
    return Derived(rule, tuple(c.id for c in premises), pivot)


def ires1(c1, c2, pivot):
    """Initial resolution: I with I or U gives I."""
    _expect(c1, (INITIAL, ), 'ires1', 1)
    _expect(c2, (INITIAL, GLOBAL), 'ires1', 2)
    consequent = _resolve('ires1', c1, c2, pivot)
    return Clause.initial(
        consequent, justification=_justify('ires1', (c1, c2),
                                           pivot)).simplify()


def gres1(c1, c2, pivot):
    """Global resolution: U with U gives U."""
    _expect(c1, (GLOBAL, ), 'gres1', 1)
    _expect(c2, (GLOBAL, ), 'gres1', 2)
    consequent = _resolve('gres1', c1, c2, pivot)
    return Clause.globally(
        consequent, justification=_justify('gres1', (c1, c2),
                                           pivot)).simplify()


def cres1(c1, c2, pivot):
    """Two positive clauses of disjoint coalitions A and B give a positive
    clause of A | B."""
    _expect(c1, (POSITIVE, ), 'cres1', 1)
    _expect(c2, (POSITIVE, ), 'cres1', 2)
    if c1.coalition & c2.coalition:
        raise RuleNotApplicable('cres1: coalitions must be disjoint')
    consequent = _resolve('cres1', c1, c2, pivot)
    return Clause.positive(
        c1.antecedent | c2.antecedent,
        c1.coalition | c2.coalition,
        consequent,
        justification=_justify('cres1', (c1, c2), pivot)).simplify()


def cres2(c1, c2, pivot):
    """A global clause resolved into a positive clause."""
    _expect(c1, (GLOBAL, ), 'cres2', 1)
    _expect(c2, (POSITIVE, ), 'cres2', 2)
    consequent = _resolve('cres2', c1, c2, pivot)
    return Clause.positive(
        c2.antecedent,
        c2.coalition,
        consequent,
        justification=_justify('cres2', (c1, c2), pivot)).simplify()


def cres3(c1, c2, pivot):
    """Positive clause of A with negative clause of B, A <= B, gives a
    negative clause of B - A."""
    _expect(c1, (POSITIVE, ), 'cres3', 1)
    _expect(c2, (NEGATIVE, ), 'cres3', 2)
    if not c1.coalition <= c2.coalition:
        raise RuleNotApplicable(
            'cres3: the positive coalition must be contained in the '
            'negative one')
    consequent = _resolve('cres3', c1, c2, pivot)
    return Clause.negative(
        c1.antecedent | c2.antecedent,
        c2.coalition - c1.coalition,
        consequent,
        justification=_justify('cres3', (c1, c2), pivot)).simplify()


def cres4(c1, c2, pivot):
    """A global clause resolved into a negative clause."""
    _expect(c1, (GLOBAL, ), 'cres4', 1)
    _expect(c2, (NEGATIVE, ), 'cres4', 2)
    consequent = _resolve('cres4', c1, c2, pivot)
    return Clause.negative(
        c2.antecedent,
        c2.coalition,
        consequent,
        justification=_justify('cres4', (c1, c2), pivot)).simplify()


def _rewrite(rule, c, kind):
    _expect(c, (kind, ), rule, 1)
    if c.consequent:
        raise RuleNotApplicable(f'{rule}: the consequent must be false')
    return Clause.globally(
        frozenset(~lit for lit in c.antecedent),
        justification=_justify(rule, (c, ))).simplify()


def rw1(c):
    """``C => <A> false`` gives the global clause ``~C``."""
    return _rewrite('rw1', c, POSITIVE)


def rw2(c):
    """``C => [A] false`` gives the global clause ``~C``."""
    return _rewrite('rw2', c, NEGATIVE)


def sigma_lift(c, sigma):
    """``C => [] D`` gives ``C => <sigma> D``."""
    _expect(c, (NEGATIVE, ), 'sigma', 1)
    if c.coalition:
        raise RuleNotApplicable('sigma: the coalition must be empty')
    return Clause.positive(
        c.antecedent,
        sigma,
        c.consequent,
        justification=_justify('sigma', (c, ))).simplify()


BINARY_RULES = {
    (INITIAL, INITIAL): ires1,
    (INITIAL, GLOBAL): ires1,
    (GLOBAL, GLOBAL): gres1,
    (POSITIVE, POSITIVE): cres1,
    (GLOBAL, POSITIVE): cres2,
    (POSITIVE, NEGATIVE): cres3,
    (GLOBAL, NEGATIVE): cres4,
}


def _partner_kinds():
    kinds = {kind: set() for kind in KINDS}
    for first, second in BINARY_RULES:
        kinds[first].add(second)
        kinds[second].add(first)
    return kinds


# kinds a clause of the key's kind can be resolved with, in either order
PARTNER_KINDS = _partner_kinds()
UNARY_RULES = {'rw1': rw1, 'rw2': rw2, 'sigma': sigma_lift}
RULES = dict({fn.__name__: fn for fn in BINARY_RULES.values()}, **UNARY_RULES)


def applicable(c1, c2):
    """The binary rule taking ``c1`` and ``c2`` in this order, if the kinds
    and coalition side conditions allow one."""
    rule = BINARY_RULES.get((c1.kind, c2.kind))
    if rule is cres1 and c1.coalition & c2.coalition:
        return None
    if rule is cres3 and not c1.coalition <= c2.coalition:
        return None
    return rule


def resolvents(given, partner):
    """All resolvents between two clauses, over every complementary pair and
    both premise orders; tautologies are included as :data:`TAUTOLOGY`."""
    orders = [(given, partner)]
    symmetric = given.kind == partner.kind and given.kind != NEGATIVE
    if given is not partner and not symmetric:
        orders.append((partner, given))
    for c1, c2 in orders:
        rule = applicable(c1, c2)
        if rule is None:
            continue
        for pivot in sorted(c1.consequent,
                            key=lambda lit: (lit.name, lit.negated)):
            if ~pivot in c2.consequent:
                yield rule(c1, c2, pivot)


def unary_consequences(clause, sigma=None):
    """Rewrites of an empty coalition consequent, and the lift of an empty
    coalition negative clause when ``sigma`` is given."""
    if clause.kind == POSITIVE and not clause.consequent:
        yield rw1(clause)
    elif clause.kind == NEGATIVE:
        if not clause.consequent:
            yield rw2(clause)
        if sigma is not None and not clause.coalition:
            yield sigma_lift(clause, sigma)
