from vedacl.formula import (And, Bottom, Coop, DualCoop, Literal, Or, Top,
                            agents_of, as_literal, nnf, props_of)
from .clause import TAUTOLOGY, Clause
from .problem import CoalitionProblem

FRESH_PREFIX = '_t'


def _disjuncts(f):
    if isinstance(f, Or):
        return _disjuncts(f.left) + _disjuncts(f.right)
    return [f]


def _literal_clause(f):
    """Literals of a disjunction of literals, else ``None``."""
    literals = []
    for d in _disjuncts(f):
        lit = as_literal(d)
        if lit is None:
            return None
        literals.append(lit)
    return literals


class Normalizer:
    """Definitional renaming of an NNF formula into clauses.

    Each introduced symbol ``t`` is defined by clauses ``t -> phi`` that hold
    in every state; the initial clause asserts the root symbol only.
    """

    def __init__(self, reserved=()):
        self.reserved = set(reserved)
        self.counter = 0
        self.universal = []
        self.coalition = []
        self.definitions = {}

    def fresh(self, formula):
        while f'{FRESH_PREFIX}{self.counter}' in self.reserved:
            self.counter += 1
        name = f'{FRESH_PREFIX}{self.counter}'
        self.counter += 1
        self.definitions[name] = formula
        return Literal(name)

    def _emit(self, clause, out):
        clause = clause.simplify()
        if clause is not TAUTOLOGY:
            out.append(clause)

    def define(self, t, f):
        """Clauses for ``t -> f`` with ``f`` in negation normal form."""
        if isinstance(f, Top):
            return
        if isinstance(f, Bottom):
            self._emit(Clause.globally([~t]), self.universal)
            return
        if isinstance(f, And):
            self.define(t, f.left)
            self.define(t, f.right)
            return
        literals = [~t]
        pending = []
        for d in _disjuncts(f):
            lit = as_literal(d)
            if lit is not None:
                literals.append(lit)
            elif isinstance(d, Top):
                return
            elif isinstance(d, Bottom):
                continue
            else:
                name = self.fresh(d)
                literals.append(name)
                pending.append((name, d))
        self._emit(Clause.globally(literals), self.universal)
        for name, d in pending:
            if isinstance(d, (Coop, DualCoop)):
                self.define_modal(name, d)
            else:
                self.define(name, d)

    def define_modal(self, t, f):
        """Coalition clause for ``t -> <A> psi`` or ``t -> [A] psi``."""
        make = Clause.positive if isinstance(f, Coop) else Clause.negative
        arg = f.arg
        if isinstance(arg, Top):
            return
        if isinstance(arg, Bottom):
            literals = []
        else:
            literals = _literal_clause(arg)
        if literals is None:
            r = self.fresh(arg)
            self._emit(make([t], f.coalition, [r]), self.coalition)
            self.define(r, arg)
        else:
            self._emit(make([t], f.coalition, literals), self.coalition)

    def run(self, f):
        f = nnf(f)
        root = self.fresh(f)
        self.define(root, f)
        return CoalitionProblem(
            [Clause.initial([root])],
            self.universal,
            self.coalition,
            sigma=agents_of(f),
            definitions=dict(self.definitions)).numbered()


def normalize(f):
    """Translate a formula into an equisatisfiable coalition problem.

    Introduced symbols carry the ``_t`` prefix and avoid every proposition of
    ``f``. Clause ids follow the order I, U, N; ``sigma`` is the set of
    agents of ``f``.
    """
    return Normalizer(reserved=props_of(f)).run(f)
