from dataclasses import dataclass
from typing import Optional, Tuple

from vedacl.snf import Clause, format_trace_line, parse_line
from .rules import RULES, RuleNotApplicable


class ProofError(RuntimeError):
    pass


@dataclass(frozen=True)
class Derivation:
    """Clauses in the order they were stored, each with its justification."""
    steps: Tuple[Clause, ...] = ()
    origin: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(self.steps))

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    def by_id(self):
        return {c.id: c for c in self.steps}

    @property
    def derived(self):
        return tuple(c for c in self.steps if c.rule != 'given')

    @property
    def given(self):
        return tuple(c for c in self.steps if c.rule == 'given')

    def validate(self):
        """Check ids are unique and premises are stored earlier."""
        seen = set()
        for c in self.steps:
            if c.id is None or c.id in seen:
                raise ProofError(f'missing or repeated clause id {c.id}')
            for p in c.justification.premises:
                if p not in seen:
                    raise ProofError(
                        f'clause {c.id} refers to {p}, not stored before it')
            seen.add(c.id)
        return self

    def trace(self):
        return [format_trace_line(c) for c in self.steps]


def extract_proof(verdict):
    """The clauses a refutation depends on, in derivation order.

    Raises:
        ProofError: if ``verdict`` is no refutation or a premise is missing.
    """
    derivation = getattr(verdict, 'derivation', None)
    if verdict.tag != 'UNSAT' or derivation is None:
        raise ProofError(f'no proof in a {verdict.tag} verdict')
    return refutation_of(derivation)


def refutation_of(derivation):
    steps = derivation.by_id()
    roots = [c for c in derivation if c.is_false]
    if not roots:
        raise ProofError('the derivation contains no false clause')
    needed = set()
    stack = [roots[0].id]
    while stack:
        clause_id = stack.pop()
        if clause_id in needed:
            continue
        if clause_id not in steps:
            raise ProofError(f'premise {clause_id} is not in the derivation')
        needed.add(clause_id)
        stack.extend(steps[clause_id].justification.premises)
    return Derivation(
        tuple(c for c in derivation if c.id in needed),
        origin=derivation.origin).validate()


def replay_step(step, steps):
    """Re-derive ``step`` from its stored premises."""
    justification = step.justification
    rule = RULES.get(justification.rule)
    if rule is None:
        raise ProofError(f'clause {step.id}: unknown rule '
                         f'{justification.rule!r}')
    try:
        premises = [steps[p] for p in justification.premises]
    except KeyError as e:
        raise ProofError(f'clause {step.id}: premise {e} is missing')
    try:
        if justification.rule == 'sigma':
            return rule(*premises, step.coalition)
        if justification.pivot is None:
            return rule(*premises)
        return rule(*premises, justification.pivot)
    except (RuleNotApplicable, TypeError) as e:
        raise ProofError(f'clause {step.id}: {e}')


def replay(derivation):
    """Re-run every derived step through its rule and demand the stored
    clause back.

    Returns:
        int: number of replayed steps.
    """
    steps = derivation.by_id()
    count = 0
    for step in derivation.validate():
        if step.rule == 'given':
            continue
        result = replay_step(step, steps)
        if result != step:
            raise ProofError(f'clause {step.id}: replay gives {result}, '
                             f'stored {step}')
        count += 1
    return count


def parse_trace(text):
    """Read trace lines back into a :class:`Derivation`; lines without an
    ``<id>.`` prefix (verdicts, blank lines) are skipped."""
    steps = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or not line[0].isdigit():
            continue
        clause, justification = parse_line(line, line=lineno)
        if justification is None:
            raise ProofError(f'line {lineno}: no justification')
        steps.append(clause)
    return Derivation(steps)
