import numpy as np

from vedacl.formula import (And, Bottom, Coop, DualCoop, Iff, Implies, Not, Or,
                            Prop, Top, agents_of)
from .cgm import Cgm


def _check_agents(m, agents):
    missing = set(agents) - set(m.agents)
    if missing:
        raise ValueError(f'agents {sorted(missing)} do not occur in the '
                         f'model, whose agents are {list(m.agents)}')


def _modal(m, f, inner):
    members, others = m.axes(f.coalition)
    result = np.empty(m.n_states, dtype=bool)
    for s in m.states:
        table = inner[m.delta[s]]
        if isinstance(f, Coop):
            # some member choice whose every completion lands inside
            result[s] = table.all(axis=others).any()
        else:
            result[s] = table.any(axis=others).all()
    return result


def extension(m, f):
    """Boolean array over the states of ``m`` telling where ``f`` holds.

    Propositions missing from a valuation are false.
    """
    if isinstance(f, Top):
        return np.ones(m.n_states, dtype=bool)
    if isinstance(f, Bottom):
        return np.zeros(m.n_states, dtype=bool)
    if isinstance(f, Prop):
        return np.array([f.name in v for v in m.valuation], dtype=bool)
    if isinstance(f, Not):
        return ~extension(m, f.arg)
    if isinstance(f, (And, Or, Implies, Iff)):
        left, right = extension(m, f.left), extension(m, f.right)
        if isinstance(f, And):
            return left & right
        if isinstance(f, Or):
            return left | right
        if isinstance(f, Implies):
            return ~left | right
        return left == right
    if isinstance(f, (Coop, DualCoop)):
        _check_agents(m, f.coalition)
        return _modal(m, f, extension(m, f.arg))
    raise TypeError(f'not a formula: {f!r}')


def evaluate(m, s, f):
    """Whether ``f`` holds at state ``s`` of ``m``.

    Raises:
        ValueError: if ``f`` names agents outside the model or ``s`` is out
            of range.
    """
    m.check_state(s)
    _check_agents(m, agents_of(f))
    return bool(extension(m, f)[s])


def check_problem(m, problem):
    """Whether the initial clauses hold at the initial state of ``m`` and
    the global and coalition clauses at every state."""
    _check_agents(m, problem.sigma)
    if not extension(m, problem.initial_formula())[m.init]:
        return False
    return bool(extension(m, problem.global_formula()).all())


def lift_model(m, problem):
    """Extend the valuation of ``m`` with the symbols ``problem`` introduced,
    each true exactly where the formula it names holds."""
    valuation = [set(v) for v in m.valuation]
    for name, definition in problem.definitions.items():
        for s in np.flatnonzero(extension(m, definition)):
            valuation[s].add(name)
    return Cgm(m.agents, m.moves, m.delta, valuation, m.init)
