"""Exhaustive search for small models.

Frames are assembled state by state from *rows*: the move counts and the
transition table of one state. Rows are told apart only by their forcing
tables, which record for every set of target states (a bitmask) whether a
coalition can force the play into it (``<A>``) or cannot avoid it
(``[A]``). Rows with equal tables are interchangeable, so only the first of
each kind is kept.
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Optional

import numpy as np

from vedacl.formula import (And, Bottom, Coop, DualCoop, Formula, Iff,
                            Implies, Not, Or, Prop, Top, agents_of, props_of,
                            subformulas)
from vedacl.snf import POSITIVE, CoalitionProblem
from .cgm import Cgm

DUMMY_AGENTS = (1, )


class BoundsExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Bounds:
    """Search limits. ``ceiling`` caps the cells evaluated per frame size."""
    max_states: int = 3
    max_moves: int = 2
    max_props: Optional[int] = None
    ceiling: int = 2**22

    def __post_init__(self):
        if self.max_states < 1 or self.max_moves < 1:
            raise ValueError('bounds must allow one state and one move')


def _agents_and_moves(agents, bounds):
    agents = tuple(sorted(agents))
    if not agents:
        return DUMMY_AGENTS, 1
    return agents, bounds.max_moves


def _check_props(props, bounds):
    if bounds.max_props is not None and len(props) > bounds.max_props:
        raise BoundsExceeded(f'{len(props)} propositions exceed the bound '
                             f'of {bounds.max_props}')


def iter_rows(n_states, n_agents, max_moves):
    """Every ``(profile, table)`` for one state, in lexicographic order."""
    for profile in product(range(1, max_moves + 1), repeat=n_agents):
        size = int(np.prod(profile))
        for targets in product(range(n_states), repeat=size):
            yield profile, np.array(targets, dtype=np.int64).reshape(profile)


def forcing_table(table, others, n_states, positive):
    """Forcing of every target bitmask by the A-moves of one row."""
    outcome_masks = np.bitwise_or.reduce(
        np.left_shift(1, table), axis=others) if others else \
        np.left_shift(1, table)
    outcome_masks = np.unique(outcome_masks)
    targets = np.arange(2**n_states)
    if positive:
        inside = (outcome_masks[:, None] & ~targets[None, :]) == 0
        return inside.any(axis=0)
    meets = (outcome_masks[:, None] & targets[None, :]) != 0
    return meets.all(axis=0)


def unique_rows(n_states, agents, max_moves, keys):
    """Rows with pairwise distinct forcing tables for ``keys``, a list of
    ``(coalition, positive)`` pairs.

    Returns:
        tuple: representative rows and an array ``(len(keys), R, 2**n)`` of
        their tables.
    """
    axes = []
    for coalition, positive in keys:
        others = tuple(i for i, a in enumerate(agents) if a not in coalition)
        axes.append((others, positive))
    seen = {}
    rows, tables = [], []
    for profile, table in iter_rows(n_states, len(agents), max_moves):
        forcing = [
            forcing_table(table, others, n_states, positive)
            for others, positive in axes
        ]
        signature = b''.join(np.packbits(f).tobytes() for f in forcing)
        if signature in seen:
            continue
        seen[signature] = len(rows)
        rows.append((profile, table))
        tables.append(forcing)
    if keys:
        stacked = np.array(tables, dtype=bool).transpose(1, 0, 2)
    else:
        stacked = np.zeros((0, len(rows), 2**n_states), dtype=bool)
    return rows, stacked


def _assignments(n_props):
    """All truth assignments, ``(2**n_props, n_props)``, first proposition
    most significant."""
    codes = np.arange(2**n_props)
    shifts = np.arange(n_props - 1, -1, -1)
    return ((codes[:, None] >> shifts[None, :]) & 1).astype(bool)


def _build(agents, rows, row_ids, props, assignments, codes):
    moves = [rows[r][0] for r in row_ids]
    delta = [rows[r][1] for r in row_ids]
    valuation = [
        frozenset(p for p, v in zip(props, assignments[c]) if v)
        for c in codes
    ]
    return Cgm(agents, moves, delta, valuation, init=0)


def _modal_keys(formulas):
    keys = []
    for f in formulas:
        for node in subformulas(f):
            if isinstance(node, (Coop, DualCoop)):
                key = (node.coalition, isinstance(node, Coop))
                if key not in keys:
                    keys.append(key)
    return keys


class _FormulaGrid:
    """Extensions of subformulas over a grid of frames and valuations,
    arrays broadcastable to ``(F, V, n)``."""

    def __init__(self, n_states, frames, tables, keys, prop_values):
        self.n = n_states
        self.frames = frames
        self.tables = tables
        self.keys = {key: i for i, key in enumerate(keys)}
        self.prop_values = prop_values
        self.weights = np.left_shift(1, np.arange(n_states))

    def extension(self, f):
        if isinstance(f, Top):
            return np.ones((1, 1, self.n), dtype=bool)
        if isinstance(f, Bottom):
            return np.zeros((1, 1, self.n), dtype=bool)
        if isinstance(f, Prop):
            return self.prop_values[f.name][None, :, :]
        if isinstance(f, Not):
            return ~self.extension(f.arg)
        if isinstance(f, (And, Or, Implies, Iff)):
            left, right = self.extension(f.left), self.extension(f.right)
            if isinstance(f, And):
                return left & right
            if isinstance(f, Or):
                return left | right
            if isinstance(f, Implies):
                return ~left | right
            return left == right
        if isinstance(f, (Coop, DualCoop)):
            inner = self.extension(f.arg)
            masks = (inner * self.weights).sum(axis=-1)
            table = self.tables[self.keys[f.coalition,
                                          isinstance(f, Coop)]]
            return np.stack([
                table[self.frames[:, s][:, None], masks]
                for s in range(self.n)
            ], axis=-1)
        raise TypeError(f'not a formula: {f!r}')


def search_formula(f, bounds):
    """First model, by size, valuation and frame, of ``f`` at state 0."""
    agents, max_moves = _agents_and_moves(agents_of(f), bounds)
    props = sorted(props_of(f))
    _check_props(props, bounds)
    keys = _modal_keys([f])
    n_props = len(props)
    for n in range(1, bounds.max_states + 1):
        rows, tables = unique_rows(n, agents, max_moves, keys)
        n_frames = len(rows)**n
        n_valuations = 2**(n_props * n)
        if n_frames * n_valuations > bounds.ceiling:
            raise BoundsExceeded(
                f'{n_frames} frames x {n_valuations} valuations at {n} '
                f'states exceed the ceiling of {bounds.ceiling}')
        frames = np.array(list(product(range(len(rows)), repeat=n)),
                          dtype=np.int64).reshape(n_frames, n)
        # codes[v, s]: assignment of state s in valuation v
        codes = np.array(list(product(range(2**n_props), repeat=n)),
                         dtype=np.int64).reshape(n_valuations, n)
        assignments = _assignments(n_props)
        prop_values = {
            p: assignments[codes, j]
            for j, p in enumerate(props)
        }
        grid = _FormulaGrid(n, frames, tables, keys, prop_values)
        holds = np.broadcast_to(
            grid.extension(f)[..., 0], (n_frames, n_valuations))
        order = holds.T.reshape(-1)
        if order.any():
            v, fr = divmod(int(order.argmax()), n_frames)
            return _build(agents, rows, frames[fr], props, assignments,
                          codes[v])
    return None


def _literal_values(literals, index, assignments):
    values = np.zeros(len(assignments), dtype=bool)
    for lit in literals:
        values |= assignments[:, index[lit.name]] ^ lit.negated
    return values


def _valuation_tuples(initial, others, n):
    for v0 in initial:
        for rest in combinations_with_replacement(others, n - 1):
            yield (v0, ) + rest


def search_problem(problem, bounds, chunk=4096):
    """First model of ``problem``, initial state 0.

    Non-initial states are interchangeable, so their assignments are taken
    in non-decreasing order only. For a fixed valuation every state needs
    its own row that satisfies the coalition clauses there, which is
    checked per state independently.
    """
    agents, max_moves = _agents_and_moves(problem.sigma, bounds)
    props = sorted(problem.props)
    _check_props(props, bounds)
    index = {p: j for j, p in enumerate(props)}
    assignments = _assignments(len(props))
    all_true = np.ones(len(assignments), dtype=bool)

    universal_ok = all_true.copy()
    for clause in problem.universal:
        universal_ok &= _literal_values(clause.consequent, index, assignments)
    initial_ok = universal_ok.copy()
    for clause in problem.initial:
        initial_ok &= _literal_values(clause.consequent, index, assignments)
    candidates = np.flatnonzero(universal_ok)
    initial = np.flatnonzero(initial_ok)
    if not len(initial):
        return None

    keys = []
    for clause in problem.coalition:
        key = (clause.coalition, clause.kind == POSITIVE)
        if key not in keys:
            keys.append(key)
    key_of = [keys.index((c.coalition, c.kind == POSITIVE))
              for c in problem.coalition]
    antecedents = np.array([
        ~_literal_values((~lit for lit in c.antecedent), index, assignments)
        for c in problem.coalition
    ], dtype=bool).reshape(len(problem.coalition), len(assignments))
    consequents = np.array([
        _literal_values(c.consequent, index, assignments)
        for c in problem.coalition
    ], dtype=bool).reshape(len(problem.coalition), len(assignments))

    for n in range(1, bounds.max_states + 1):
        rows, tables = unique_rows(n, agents, max_moves, keys)
        n_tuples = len(initial) * comb(len(candidates) + n - 2, n - 1)
        cells = n_tuples * len(rows) * max(1, len(problem.coalition))
        if cells > bounds.ceiling:
            raise BoundsExceeded(
                f'{n_tuples} valuations x {len(rows)} rows at {n} states '
                f'exceed the ceiling of {bounds.ceiling}')
        weights = np.left_shift(1, np.arange(n))
        tuples = _valuation_tuples(initial.tolist(), candidates.tolist(), n)
        while True:
            block = np.array(list(_take(tuples, chunk)), dtype=np.int64)
            if not len(block):
                break
            block = block.reshape(-1, n)
            # works[t, s, r]: row r satisfies every coalition clause at s
            works = np.ones((len(block), n, len(rows)), dtype=bool)
            for c, key in enumerate(key_of):
                masks = (consequents[c][block] * weights).sum(axis=-1)
                forced = tables[key][:, masks].T
                active = antecedents[c][block]
                works &= ~active[:, :, None] | forced[:, None, :]
            usable = works.any(axis=-1)
            complete = usable.all(axis=-1)
            if complete.any():
                t = int(complete.argmax())
                row_ids = works[t].argmax(axis=-1)
                return _build(agents, rows, row_ids, props, assignments,
                              block[t])
    return None


def _take(iterator, n):
    for _, item in zip(range(n), iterator):
        yield item


def bounded_search(target, bounds=None):
    """A model of a formula or a coalition problem within ``bounds``, or
    ``None``.

    ``None`` only means no model exists within the bounds. Enumeration is
    deterministic: fewer states first, then valuations in lexicographic
    order, then transition tables.

    Raises:
        BoundsExceeded: when a frame size needs more cells than
            ``bounds.ceiling``.
    """
    bounds = bounds or Bounds()
    if isinstance(target, CoalitionProblem):
        return search_problem(target, bounds)
    if isinstance(target, Formula):
        return search_formula(target, bounds)
    raise TypeError(f'cannot search models of {type(target)}')


def iter_models(agents, props, bounds):
    """Every model over ``agents`` and ``props`` within ``bounds``."""
    agents, max_moves = _agents_and_moves(agents, bounds)
    props = sorted(props)
    assignments = _assignments(len(props))
    for n in range(1, bounds.max_states + 1):
        rows = list(iter_rows(n, len(agents), max_moves))
        for codes in product(range(len(assignments)), repeat=n):
            for row_ids in product(range(len(rows)), repeat=n):
                yield _build(agents, rows, row_ids, props, assignments,
                             codes)
