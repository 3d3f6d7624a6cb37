import logging
from collections import OrderedDict, defaultdict, deque
from operator import attrgetter

import numpy as np

from vedacore.hooks import HookPool
from vedacore.misc import Timer, registry
from vedacl.snf import (GIVEN, GLOBAL, INITIAL, TAUTOLOGY, CoalitionProblem,
                        clause_key)
from .derivation import Derivation
from .rules import PARTNER_KINDS, ires1, resolvents, unary_consequences
from .subsumption import ClauseIndex
from .verdict import Satisfiable, Timeout, Unsatisfiable


class _Refuted(Exception):

    def __init__(self, clause):
        self.clause = clause


class _LimitReached(Exception):

    def __init__(self, reason):
        self.reason = reason


@registry.register_module('engine')
class GivenClauseEngine:
    """Saturation by the given-clause loop with forward subsumption.

    Unprocessed clauses are picked first in, first out, initial clauses only
    once no global or coalition clause is waiting. A given clause meets the
    processed clauses that hold a complementary literal and whose kind has a
    rule with its own. The resolvents of one given clause are stored in
    :func:`~vedacl.snf.clause_key` order. New clauses are simplified, dropped
    when they are tautologies or subsumed by a stored clause, and rewritten
    eagerly when their coalition consequent is false. A unit initial or
    global clause that contradicts a stored initial unit yields ``false`` at
    once.

    Args:
        timeout (float | None): wall clock cap in seconds.
        sigma_rule (bool): lift ``C => [] D`` to ``C => <sigma> D``.
        seed (int | None): shuffle each batch of resolvents before storing.
        max_clauses (int | None): cap on stored clauses.
        hooks (list[dict]): hook configs, see :mod:`vedacore.hooks`.
        logger (logging.Logger | None): defaults to the ``vedacl`` logger.
    """

    def __init__(self,
                 timeout=100.0,
                 sigma_rule=True,
                 seed=None,
                 max_clauses=None,
                 hooks=None,
                 logger=None):
        if timeout is not None and timeout <= 0:
            raise ValueError(f'timeout must be positive, got {timeout}')
        if max_clauses is not None and max_clauses < 1:
            raise ValueError(
                f'max_clauses must be positive, got {max_clauses}')
        self.timeout = timeout
        self.sigma_rule = sigma_rule
        self.seed = seed
        self.max_clauses = max_clauses
        self.logger = logger or logging.getLogger('vedacl')
        self.hook_pool = HookPool(hooks or [], ['prove'], self.logger)

    def _reset(self, problem):
        self.problem = problem
        self.sigma = problem.sigma if self.sigma_rule else None
        self.rng = None if self.seed is None else np.random.default_rng(
            self.seed)
        self.steps = []
        self.index = ClauseIndex()
        self.queue = deque()
        self.initial_queue = deque()
        # processed clauses by consequent literal
        self.partners = defaultdict(list)
        self.initial_units = {}
        self.iter = 0
        self.next_id = max((c.id or 0 for c in problem.clauses),
                           default=0) + 1
        self.stats = OrderedDict(
            input=len(problem),
            given=0,
            derived=0,
            subsumed=0,
            tautologies=0,
            rewrites=0,
            stored=0,
            unprocessed=0,
            elapsed=0.0)

    def _store(self, clause):
        """Simplify, filter and keep ``clause``; returns the stored clause or
        ``None``."""
        clause = clause.simplify()
        if clause is TAUTOLOGY:
            self.stats['tautologies'] += 1
            return None
        if self.index.is_subsumed(clause):
            self.stats['subsumed'] += 1
            return None
        if clause.id is None:
            clause = clause.with_id(self.next_id)
            self.next_id += 1
        if self.max_clauses is not None and \
                len(self.steps) >= self.max_clauses:
            raise _LimitReached('max_clauses')
        self.steps.append(clause)
        self.index.add(clause)
        if clause.kind == INITIAL:
            self.initial_queue.append(clause)
        else:
            self.queue.append(clause)
        self.stats['stored'] += 1
        if clause.rule != 'given':
            self.stats['derived'] += 1
        if clause.is_false:
            raise _Refuted(clause)
        if clause.kind in (INITIAL, GLOBAL) and len(clause.consequent) == 1:
            self._check_unit(clause)
        for consequence in unary_consequences(clause, self.sigma):
            if consequence is not TAUTOLOGY:
                self.stats['rewrites'] += 1
            self._store_derived(consequence)
        return clause

    def _store_derived(self, clause):
        if clause is TAUTOLOGY:
            self.stats['tautologies'] += 1
            return None
        return self._store(clause)

    def _check_unit(self, clause):
        literal, = clause.consequent
        if clause.kind == INITIAL:
            self.initial_units.setdefault(literal, clause)
        opposite = self.initial_units.get(~literal)
        if opposite is not None:
            self._store_derived(ires1(opposite, clause, ~literal))

    def _load(self, problem):
        for clause in problem.clauses:
            self._store(clause.with_id(clause.id, GIVEN))

    def _select(self):
        if self.queue:
            return self.queue.popleft()
        return self.initial_queue.popleft()

    def _partners(self, given):
        kinds = PARTNER_KINDS[given.kind]
        found = {}
        for literal in given.consequent:
            for partner in self.partners[~literal]:
                if partner.kind in kinds:
                    found.setdefault(partner.id, partner)
        return sorted(found.values(), key=attrgetter('id'))

    def _resolve(self, given):
        batch = []
        for partner in self._partners(given):
            for clause in resolvents(given, partner):
                if clause is TAUTOLOGY:
                    self.stats['tautologies'] += 1
                else:
                    batch.append(clause)
        batch.sort(key=clause_key)
        if self.rng is not None:
            self.rng.shuffle(batch)
        return batch

    def _saturate(self):
        while self.queue or self.initial_queue:
            if self.timer.is_expired(self.timeout):
                raise _LimitReached('time')
            self.hook_pool.fire('before_iter', self)
            given = self._select()
            self.stats['given'] += 1
            batch = self._resolve(given)
            for literal in given.consequent:
                self.partners[literal].append(given)
            for clause in batch:
                self._store(clause)
            self.iter += 1
            self._update_stats()
            self.hook_pool.fire('after_iter', self)

    def _update_stats(self):
        self.stats['unprocessed'] = len(self.queue) + len(self.initial_queue)
        self.stats['elapsed'] = self.timer.since_start()

    def saturate(self, problem, origin=None):
        """Run the loop on ``problem`` and return a verdict.

        ``origin`` names the input in the derivation, e.g. its path.
        """
        self._reset(problem)
        self.timer = Timer()
        self.hook_pool.fire('before_run', self)
        try:
            self._load(problem)
            self._saturate()
        except _Refuted:
            verdict_cls, extra = Unsatisfiable, {}
        except _LimitReached as e:
            verdict_cls, extra = Timeout, dict(reason=e.reason)
        else:
            verdict_cls = Satisfiable
            extra = dict(
                saturated=CoalitionProblem.from_clauses(
                    self.steps, problem.sigma))
        self._update_stats()
        self.hook_pool.fire('after_run', self)
        derivation = Derivation(self.steps, origin=origin)
        return verdict_cls(derivation, dict(self.stats), **extra)


def saturate(problem, timeout=100.0, sigma_rule=True, seed=None,
             max_clauses=None):
    """Functional entry point around :class:`GivenClauseEngine`."""
    engine = GivenClauseEngine(
        timeout=timeout,
        sigma_rule=sigma_rule,
        seed=seed,
        max_clauses=max_clauses)
    return engine.saturate(problem)
