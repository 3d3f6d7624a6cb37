import re

from vedacore.fileio import list_from_file
from vedacl.formula import Literal, format_coalition
from .clause import (GIVEN, NEGATIVE, POSITIVE, TAUTOLOGY, Clause, Derived,
                     format_clause)
from .problem import CoalitionProblem


class ProblemSyntaxError(ValueError):

    def __init__(self, message, line=None):
        self.line = line
        prefix = f'line {line}: ' if line is not None else ''
        super(ProblemSyntaxError, self).__init__(prefix + message)


SECTION_RE = re.compile(r'^([IUN]):\s*(.*)$')
AGENTS_RE = re.compile(r'^agents:\s*([\d,\s]*)$')
ID_RE = re.compile(r'^(\d+)\.\s+(.*)$')
TAG_RE = re.compile(r'^(.*?)\s+\(([IUN]),\s*([a-z0-9]+)'
                    r'(?:,\s*(-|\d+(?:\s+\d+)*))?'
                    r'(?:,\s*pivot=(~?[A-Za-z_][A-Za-z0-9_]*))?\)$')
MODALITY_RE = re.compile(r'^([<\[])([\d,\s]*)([>\]])\s*(.*)$')
LITERAL_RE = re.compile(r'^(~?)([A-Za-z_][A-Za-z0-9_]*)$')

RULE_NAMES = ('given', 'ires1', 'gres1', 'cres1', 'cres2', 'cres3', 'cres4',
              'rw1', 'rw2', 'sigma')


def parse_literal(text, line=None):
    match = LITERAL_RE.match(text.strip())
    if match is None:
        raise ProblemSyntaxError(f'bad literal {text.strip()!r}', line)
    negated, name = match.groups()
    if name in ('true', 'false'):
        if negated:
            return name == 'false'
        return name == 'true'
    return Literal(name, bool(negated))


def _items(text, sep, line):
    return frozenset(
        parse_literal(item, line) for item in text.split(sep))


def parse_coalition(text, line=None):
    agents = set()
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        if not item.isdigit() or int(item) < 1:
            raise ProblemSyntaxError(f'bad agent {item!r}', line)
        agents.add(int(item))
    return frozenset(agents)


def parse_clause(text, section=None, line=None):
    """Parse one clause body, e.g. ``t1 & t4 => <1> false`` or ``~t0 | l``.

    ``section`` (I, U or N) picks the kind of a plain disjunction; coalition
    clauses are recognised by their modality. The result is simplified, so
    ``true`` and ``false`` leave no trace, and may be :data:`TAUTOLOGY`.
    """
    text = text.strip()
    if not text:
        raise ProblemSyntaxError('empty clause', line)
    antecedent = None
    if '=>' in text:
        antecedent, text = (part.strip() for part in text.split('=>', 1))
    match = MODALITY_RE.match(text)
    if match is None:
        if antecedent is not None:
            raise ProblemSyntaxError('missing <A> or [A] after =>', line)
        if section not in ('I', 'U'):
            raise ProblemSyntaxError(
                'initial and global clauses belong to I: or U:', line)
        return Clause(section, _items(text, '|', line)).simplify()
    opening, agents, closing, consequent = match.groups()
    if (opening, closing) not in (('<', '>'), ('[', ']')):
        raise ProblemSyntaxError('unbalanced modality', line)
    if section not in (None, 'N'):
        raise ProblemSyntaxError('coalition clauses belong to N:', line)
    kind = POSITIVE if opening == '<' else NEGATIVE
    return Clause(kind, _items(consequent, '|', line),
                  _items(antecedent or 'true', '&', line),
                  parse_coalition(agents, line)).simplify()


def parse_line(text, section=None, line=None):
    """Parse a problem line or a trace line.

    Trace lines carry an ``<id>.`` prefix and a ``(tag, rule, premises,
    pivot=l)`` suffix; the tag then decides the section.

    Returns:
        tuple: ``(clause, justification)``, the latter ``None`` for plain
        problem lines.
    """
    clause_id, justification = None, None
    match = ID_RE.match(text)
    if match is not None:
        clause_id, text = int(match.group(1)), match.group(2)
    match = TAG_RE.match(text)
    if match is not None:
        text, section, rule, premises, pivot = match.groups()
        if rule not in RULE_NAMES:
            raise ProblemSyntaxError(f'unknown rule {rule!r}', line)
        if rule == 'given':
            justification = GIVEN
        else:
            premises = tuple(int(p) for p in (premises or '').split()
                             if p != '-')
            if pivot is not None:
                pivot = parse_literal(pivot, line)
            justification = Derived(rule, premises, pivot)
    clause = parse_clause(text, section, line)
    if clause is TAUTOLOGY:
        if clause_id is not None or justification is not None:
            raise ProblemSyntaxError('a derived step cannot be a tautology',
                                     line)
        return clause, None
    if clause_id is not None or justification is not None:
        clause = clause.with_id(clause_id, justification or GIVEN)
    return clause, justification


def _strip_comment(line):
    return line.split('#', 1)[0].strip()


def parse_problem_lines(lines):
    section = None
    sigma = set()
    clauses = []
    for lineno, raw in enumerate(lines, 1):
        text = _strip_comment(raw)
        if not text:
            continue
        match = AGENTS_RE.match(text)
        if match is not None:
            sigma |= parse_coalition(match.group(1), lineno)
            continue
        match = SECTION_RE.match(text)
        if match is not None:
            section, text = match.groups()
            if not text:
                continue
        clause, _ = parse_line(text, section, lineno)
        if clause is not TAUTOLOGY:
            clauses.append(clause)
    sigma |= frozenset().union(
        *(c.coalition for c in clauses if c.is_coalition))
    try:
        return CoalitionProblem.from_clauses(clauses, sigma).numbered()
    except ValueError as e:
        raise ProblemSyntaxError(str(e))


def parse_problem(text):
    """Read a problem from text with ``I:``, ``U:`` and ``N:`` sections.

    An optional ``agents: 1,2`` line widens the agent universe beyond the
    agents of the coalition clauses. Tautologies are dropped.
    """
    return parse_problem_lines(text.splitlines())


def load_problem(filename):
    return parse_problem_lines(list_from_file(filename))


def dump_problem(problem, file=None):
    """Write ``problem`` in the format read by :func:`parse_problem`."""
    lines = []
    if problem.sigma:
        lines.append(f'agents: {format_coalition(problem.sigma)}')
    for tag, section in (('I', problem.initial), ('U', problem.universal),
                         ('N', problem.coalition)):
        lines.append(f'{tag}:')
        lines.extend(format_clause(c) for c in section)
    text = '\n'.join(lines) + '\n'
    if file is None:
        return text
    with open(file, 'w') as f:
        f.write(text)


def format_trace_line(clause):
    """``<id>. <clause>  (<section>, <rule>, <premises>[, pivot=<lit>])``"""
    justification = clause.justification
    premises = ' '.join(str(p) for p in justification.premises) or '-'
    suffix = f'{clause.section}, {justification.rule}, {premises}'
    if justification.pivot is not None:
        suffix += f', pivot={justification.pivot}'
    return f'{clause.id}. {format_clause(clause)}  ({suffix})'
