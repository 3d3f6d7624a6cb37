import re
from itertools import product

import numpy as np

from vedacore.fileio import list_from_file
from vedacl.formula import format_coalition
from .cgm import Cgm


class ModelSyntaxError(ValueError):

    def __init__(self, message, line=None):
        self.line = line
        prefix = f'line {line}: ' if line is not None else ''
        super(ModelSyntaxError, self).__init__(prefix + message)


LINE_RE = re.compile(r'^(agents|states|init|moves|delta|val):\s*(.*)$')
DELTA_RE = re.compile(r'^(\d+)\s*\(([\d,\s]*)\)\s*(\d+)$')


def _ints(text, line):
    try:
        return [int(x) for x in text.replace(',', ' ').split()]
    except ValueError:
        raise ModelSyntaxError(f'expected integers, got {text!r}', line)


def parse_model_lines(lines):
    """Read a model from ``agents:``, ``states:``, ``init:``, ``moves: a s k``,
    ``delta: s (m1,...) t`` and ``val: s p q ...`` lines.

    Unlisted move counts are 1; every move vector of every state needs
    exactly one ``delta`` line.
    """
    agents, n_states, init = None, None, 0
    moves, deltas, valuation = [], [], {}
    for lineno, raw in enumerate(lines, 1):
        text = raw.split('#', 1)[0].strip()
        if not text:
            continue
        match = LINE_RE.match(text)
        if match is None:
            raise ModelSyntaxError(f'unknown line {text!r}', lineno)
        key, value = match.groups()
        if key == 'agents':
            agents = tuple(_ints(value, lineno))
        elif key in ('states', 'init'):
            numbers = _ints(value, lineno)
            if len(numbers) != 1:
                raise ModelSyntaxError(f'{key} takes one number', lineno)
            if key == 'states':
                n_states = numbers[0]
            else:
                init = numbers[0]
        elif key == 'moves':
            numbers = _ints(value, lineno)
            if len(numbers) != 3:
                raise ModelSyntaxError('moves takes agent, state, count',
                                       lineno)
            moves.append((lineno, *numbers))
        elif key == 'delta':
            match = DELTA_RE.match(value)
            if match is None:
                raise ModelSyntaxError(f'bad transition {value!r}', lineno)
            source, vector, target = match.groups()
            deltas.append((lineno, int(source), tuple(_ints(vector, lineno)),
                           int(target)))
        else:
            items = value.split()
            if not items or not items[0].isdigit():
                raise ModelSyntaxError('val takes a state and propositions',
                                       lineno)
            valuation.setdefault(int(items[0]), set()).update(items[1:])

    if not agents:
        raise ModelSyntaxError('missing agents line')
    if n_states is None or n_states < 1:
        raise ModelSyntaxError('missing or empty states line')
    agent_index = {a: i for i, a in enumerate(sorted(agents))}
    move_counts = np.ones((n_states, len(agents)), dtype=np.int64)
    for lineno, agent, state, count in moves:
        if agent not in agent_index or not 0 <= state < n_states:
            raise ModelSyntaxError(f'no agent {agent} or state {state}',
                                   lineno)
        move_counts[state, agent_index[agent]] = count
    tables = [
        np.full(tuple(move_counts[s]), -1, dtype=np.int64)
        for s in range(n_states)
    ]
    for lineno, source, vector, target in deltas:
        if not 0 <= source < n_states:
            raise ModelSyntaxError(f'no state {source}', lineno)
        if len(vector) != len(agents) or any(
                not 0 <= m < k for m, k in zip(vector, move_counts[source])):
            raise ModelSyntaxError(f'bad move vector {vector} at {source}',
                                   lineno)
        if tables[source][vector] != -1:
            raise ModelSyntaxError(f'repeated move vector {vector} at '
                                   f'{source}', lineno)
        tables[source][vector] = target
    for s, table in enumerate(tables):
        if (table == -1).any():
            raise ModelSyntaxError(f'delta is not total at state {s}')
    if set(valuation) - set(range(n_states)):
        raise ModelSyntaxError('valuation of a state that does not exist')
    try:
        return Cgm(agents, move_counts, tables,
                   [valuation.get(s, set()) for s in range(n_states)], init)
    except ValueError as e:
        raise ModelSyntaxError(str(e))


def parse_model(text):
    return parse_model_lines(text.splitlines())


def load_model(filename):
    return parse_model_lines(list_from_file(filename))


def dump_model(m, file=None):
    """Write ``m`` in the format read by :func:`parse_model`."""
    lines = [
        f'agents: {format_coalition(m.agents)}', f'states: {m.n_states}',
        f'init: {m.init}'
    ]
    for s in m.states:
        for i, a in enumerate(m.agents):
            if m.moves[s, i] != 1:
                lines.append(f'moves: {a} {s} {m.moves[s, i]}')
    for s in m.states:
        for vector in product(*(range(k) for k in m.moves[s])):
            moves = ','.join(str(k) for k in vector)
            lines.append(f'delta: {s} ({moves}) {m.delta[s][vector]}')
    for s in m.states:
        lines.append(' '.join([f'val: {s}'] + sorted(m.valuation[s])))
    text = '\n'.join(lines) + '\n'
    if file is None:
        return text
    with open(file, 'w') as f:
        f.write(text)
