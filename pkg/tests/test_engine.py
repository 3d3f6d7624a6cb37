import os.path as osp
from itertools import product

import numpy as np
import pytest

from vedacore.misc import Config
from vedacl.engine import (ClauseIndex, Derivation, GivenClauseEngine,
                           ProofError, RuleNotApplicable, Satisfiable,
                           Timeout, Unsatisfiable, applicable, build_engine,
                           cres1, cres2, cres3, cres4, extract_proof, gres1,
                           ires1, parse_trace, replay, resolvents, rw1, rw2,
                           saturate, sigma_lift, subsumes, unary_consequences)
from vedacl.formula import Literal, negate_for_validity, parse
from vedacl.snf import TAUTOLOGY, Clause, normalize, parse_problem

ROOT = osp.dirname(osp.dirname(osp.abspath(__file__)))
AXIOMS = osp.join(ROOT, 'data', 'axioms')

t0, t1, t4, l = (Literal(n) for n in ('t0', 't1', 't4', 'l'))
tog1 = Literal('tog1')
p, q = Literal('p'), Literal('q')


def test_golden_light_derivation(light):
    """Derive the refutation of the light switch problem step by step."""
    c = {clause.id: clause for clause in light.clauses}

    def step(id, clause):
        c[id] = clause.with_id(id)
        return c[id]

    assert step(15, gres1(c[3], c[4], t1)) == Clause.globally([~t0, t4])
    assert step(16, cres1(c[5], c[14], l)) == Clause.positive(
        [t4, tog1, ~l], {1}, [])
    assert step(17, cres2(c[4], c[13], ~t1)) == Clause.positive(
        [t1], set(), [t4])
    assert step(18, rw1(c[16])) == Clause.globally([l, ~t4, ~tog1])
    assert step(19, cres2(c[18], c[17], ~t4)) == Clause.positive(
        [t1], set(), [l, ~tog1])
    assert step(20, cres1(c[19], c[9], ~tog1)) == Clause.positive(
        [t1], {1}, [l])
    assert step(21, cres1(c[20], c[14], l)) == Clause.positive(
        [t1, t4], {1}, [])
    assert step(22, rw1(c[21])) == Clause.globally([~t1, ~t4])
    assert step(23, gres1(c[22], c[15], ~t4)) == Clause.globally([~t1, ~t0])
    assert step(24, gres1(c[23], c[3], ~t1)) == Clause.globally([~t0])
    assert step(25, ires1(c[1], c[24], t0)) == Clause.initial([])
    assert c[25].is_false
    assert c[25].justification.premises == (1, 24)

    derivation = Derivation([c[i] for i in range(1, 26)])
    assert replay(derivation) == 11


LIGHT_REFUTATION = [
    Clause.globally([~t0, t4]),
    Clause.positive([t4, tog1, ~l], {1}, []),
    Clause.positive([t1], set(), [t4]),
    Clause.globally([l, ~t4, ~tog1]),
    Clause.positive([t1], set(), [l, ~tog1]),
    Clause.positive([t1], {1}, [l]),
    Clause.positive([t1, t4], {1}, []),
    Clause.globally([~t1, ~t4]),
    Clause.globally([~t1, ~t0]),
    Clause.globally([~t0]),
    Clause.initial([]),
]


def test_light_proof_is_the_hand_derivation(light):
    verdict = saturate(light)
    assert verdict.tag == 'UNSAT'
    assert verdict.stats['elapsed'] < 1.0
    proof = extract_proof(verdict)
    assert len(proof.derived) == len(LIGHT_REFUTATION)
    assert set(proof.derived) == set(LIGHT_REFUTATION)
    assert [c.id for c in proof.given] == [1, 3, 4, 5, 9, 13, 14]
    last = proof[-1]
    assert last.rule == 'ires1'
    assert last.justification.pivot == t0
    assert proof.by_id()[last.justification.premises[1]] == Clause.globally(
        [~t0])
    assert replay(proof) == len(LIGHT_REFUTATION)


def test_initial_clauses_are_given_last(light):
    engine = GivenClauseEngine()
    engine._reset(light)
    engine._load(light)
    assert [c.id for c in engine.initial_queue] == [1]
    assert engine.queue[0].id == 2
    assert engine._select().id == 2
    engine.queue.clear()
    assert engine._select().id == 1


def test_unit_conflict_refutes_at_once():
    problem = parse_problem('I:\np\nU:\n~p | q\n~q\n')
    verdict = saturate(problem)
    assert verdict.tag == 'UNSAT'
    proof = extract_proof(verdict)
    assert proof[-1].rule == 'ires1'
    assert proof[-1].justification.premises[0] == 1
    assert verdict.stats['given'] <= 3


def test_partners_share_a_complementary_literal(light):
    engine = GivenClauseEngine()
    engine._reset(light)
    by_id = {c.id: c for c in light.clauses}
    for clause in light.clauses:
        for literal in clause.consequent:
            engine.partners[literal].append(clause)
    # ~t1 | t4 meets the clauses holding t1
    assert [c.id for c in engine._partners(by_id[4])] == [3, 13]
    # t4 => <> ~l meets the positive clauses promising l
    assert [c.id for c in engine._partners(by_id[14])] == [5, 6]


def test_saturate_light(light):
    verdict = saturate(light, timeout=30.0)
    assert isinstance(verdict, Unsatisfiable)
    assert verdict.tag == 'UNSAT'
    assert verdict.exit_code == 20
    proof = extract_proof(verdict)
    assert proof[-1].is_false
    assert proof[-1].kind in ('I', 'U')
    assert replay(verdict.derivation) == len(verdict.derivation.derived)
    assert replay(proof) == len(proof.derived)
    assert verdict.stats['given'] >= 1
    assert verdict.stats['derived'] >= len(proof.derived)


def test_saturate_light_without_sigma_rule(light):
    verdict = saturate(light, timeout=30.0, sigma_rule=False)
    assert verdict.tag == 'UNSAT'
    assert 'sigma' not in {c.rule for c in verdict.derivation}


def test_trace_re_reads_and_replays(light):
    verdict = saturate(light, timeout=30.0)
    text = '\n'.join(['UNSAT'] + extract_proof(verdict).trace())
    derivation = parse_trace(text)
    assert derivation.steps == extract_proof(verdict).steps
    assert replay(derivation) == len(derivation.derived)


def test_seeded_runs_agree(light):
    a = saturate(light, timeout=30.0, seed=3)
    b = saturate(light, timeout=30.0, seed=3)
    assert a.tag == b.tag == 'UNSAT'
    assert a.derivation.trace() == b.derivation.trace()


@pytest.mark.parametrize('name', [
    'bottom.cl', 'top.cl', 'monotonicity.cl', 'superadditivity.cl',
    'grand_coalition.cl', 'lemma.cl'
])
def test_axiom_fixtures_are_valid(name):
    with open(osp.join(AXIOMS, name)) as f:
        formula = parse(f.read())
    verdict = saturate(normalize(negate_for_validity(formula)), timeout=30.0)
    assert verdict.tag == 'UNSAT'
    assert replay(verdict.derivation) == len(verdict.derivation.derived)


SUBSETS = [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]


def _c(agents):
    return ','.join(str(a) for a in sorted(agents))


def _axiom_instances():
    for a in SUBSETS:
        yield f'~<{_c(a)}> false'
        yield f'<{_c(a)}> true'
        yield f'<{_c(a)}> (p & q) -> <{_c(a)}> p'
        for b in SUBSETS:
            if a <= b:
                yield (f'<{_c(a)}> p & [{_c(b)}] q -> '
                       f'[{_c(b - a)}] (p & q)')
            if not a & b:
                yield (f'<{_c(a)}> p & <{_c(b)}> q -> '
                       f'<{_c(a | b)}> (p & q)')
        yield f'~<> ~p -> <{_c(a)}> p'


@pytest.mark.parametrize('text', list(_axiom_instances()))
def test_axiom_instances_are_valid(text):
    problem = normalize(negate_for_validity(parse(text)))
    verdict = saturate(problem, timeout=30.0)
    assert verdict.tag == 'UNSAT', text
    assert replay(extract_proof(verdict)) >= 1


def test_grand_coalition_needs_sigma_rule():
    problem = normalize(negate_for_validity(parse('~<> ~p -> <1,2> p')))
    assert saturate(problem, timeout=30.0, sigma_rule=False).tag == 'SAT'
    assert saturate(problem, timeout=30.0).tag == 'UNSAT'


def test_additivity_is_not_valid():
    problem = normalize(negate_for_validity(
        parse('<1> p & <1> q -> <1> (p & q)')))
    verdict = saturate(problem, timeout=30.0)
    assert isinstance(verdict, Satisfiable)
    assert verdict.exit_code == 10
    assert verdict.saturated is not None
    with pytest.raises(ProofError):
        extract_proof(verdict)


def test_empty_problem_is_satisfiable():
    verdict = saturate(parse_problem(''))
    assert verdict.tag == 'SAT'
    assert len(verdict.derivation) == 0


def test_false_input_is_refuted():
    verdict = saturate(parse_problem('U:\nfalse\n'))
    assert verdict.tag == 'UNSAT'
    assert len(extract_proof(verdict)) == 1


def test_max_clauses_limit(light):
    verdict = saturate(light, max_clauses=15)
    assert isinstance(verdict, Timeout)
    assert verdict.reason == 'max_clauses'
    assert verdict.exit_code == 30
    assert len(verdict.partial) == 15


def test_engine_arguments_are_checked():
    with pytest.raises(ValueError):
        GivenClauseEngine(timeout=0)
    with pytest.raises(ValueError):
        GivenClauseEngine(max_clauses=0)


def test_build_engine_from_config(light):
    cfg = Config(
        dict(
            engine=dict(
                typename='GivenClauseEngine',
                timeout=30.0,
                sigma_rule=False,
                seed=None,
                max_clauses=None)))
    engine = build_engine(
        cfg.engine, hooks=[dict(typename='LoggerHook', interval=1)])
    assert engine.sigma_rule is False
    assert len(engine.hook_pool.hooks) == 1
    assert engine.saturate(light, origin='light.clp').tag == 'UNSAT'


def test_ires1_and_gres1():
    a = Clause.initial([t0]).with_id(1)
    b = Clause.globally([~t0]).with_id(24)
    assert ires1(a, b, t0) == Clause.initial([])
    assert gres1(Clause.globally([~t0, t1]).with_id(3),
                 Clause.globally([~t1, t4]).with_id(4),
                 t1) == Clause.globally([~t0, t4])
    assert gres1(Clause.globally([~t0, ~t1]).with_id(1),
                 Clause.globally([~t0, t1]).with_id(2),
                 ~t1) == Clause.globally([~t0])
    assert gres1(Clause.globally([p, q]).with_id(1),
                 Clause.globally([~p, ~q]).with_id(2), p) is TAUTOLOGY


def test_rule_preconditions():
    pos1 = Clause.positive([t1], {1}, [l]).with_id(1)
    pos12 = Clause.positive([t4], {1, 2}, [~l]).with_id(2)
    neg2 = Clause.negative([t4], {2}, [~l]).with_id(3)
    with pytest.raises(RuleNotApplicable):
        cres1(pos1, pos12, l)
    with pytest.raises(RuleNotApplicable):
        cres3(pos1, neg2, l)
    with pytest.raises(RuleNotApplicable):
        gres1(pos1, pos1, l)
    with pytest.raises(RuleNotApplicable):
        ires1(Clause.initial([t0]).with_id(4), Clause.initial([t1]), t0)
    with pytest.raises(RuleNotApplicable):
        rw1(pos1)
    assert applicable(pos1, pos12) is None
    assert applicable(pos1, neg2) is None
    assert applicable(Clause.globally([l]), pos1) is cres2


def test_cres3_and_cres4():
    pos = Clause.positive([t1], {1}, [p]).with_id(1)
    neg = Clause.negative([t4], {1, 2}, [~p, q]).with_id(2)
    assert cres3(pos, neg, p) == Clause.negative([t1, t4], {2}, [q])
    glob = Clause.globally([~q]).with_id(3)
    assert cres4(glob, neg, ~q) == Clause.negative([t4], {1, 2}, [~p])


def test_rewrites_and_sigma_lift():
    assert rw1(Clause.positive([t1, t4], {1}, []).with_id(21)) == \
        Clause.globally([~t1, ~t4])
    assert rw2(Clause.negative([], {1}, []).with_id(2)) == Clause.globally(
        [])
    neg = Clause.negative([t1], set(), [p]).with_id(5)
    lifted = sigma_lift(neg, frozenset({1, 2}))
    assert lifted == Clause.positive([t1], {1, 2}, [p])
    assert lifted.justification.premises == (5, )
    with pytest.raises(RuleNotApplicable):
        sigma_lift(Clause.negative([t1], {1}, [p]), frozenset({1}))
    assert list(unary_consequences(neg)) == []
    assert list(unary_consequences(neg, frozenset({1}))) == [
        Clause.positive([t1], {1}, [p])
    ]


def test_resolvents_cover_both_orders():
    glob = Clause.globally([~t1, t4]).with_id(4)
    pos = Clause.positive([t1], set(), [t1]).with_id(13)
    assert list(resolvents(pos, glob)) == [Clause.positive([t1], set(), [t4])]
    assert list(resolvents(glob, pos)) == [Clause.positive([t1], set(), [t4])]
    a = Clause.globally([p, q]).with_id(1)
    b = Clause.globally([~p, ~q]).with_id(2)
    assert list(resolvents(a, b)) == [TAUTOLOGY, TAUTOLOGY]


def _random_clause(rng, kind):
    names = ['a', 'b', 'c']

    def literals(k):
        return {Literal(str(x), bool(neg))
                for x, neg in zip(rng.choice(names, k), rng.integers(0, 2, k))}

    coalition = {a + 1 for a in range(3) if rng.random() < 0.5}
    if kind in ('I', 'U'):
        return Clause(kind, literals(rng.integers(0, 3)))
    return Clause(kind, literals(rng.integers(0, 3)),
                  literals(rng.integers(0, 3)), coalition)


def _brute_subsumes(c1, c2):
    allowed = {
        ('U', 'I'), ('U', 'U'), ('I', 'I'), ('P', 'P'), ('N', 'N')
    }
    if (c1.kind, c2.kind) not in allowed:
        return False
    if not all(lit in c2.consequent for lit in c1.consequent):
        return False
    if not c1.is_coalition:
        return True
    if not all(lit in c2.antecedent for lit in c1.antecedent):
        return False
    if c1.kind == 'P':
        return all(a in c2.coalition for a in c1.coalition)
    return all(a in c1.coalition for a in c2.coalition)


def test_rule_properties_on_random_pairs():
    rng = np.random.default_rng(0)
    kinds = ['I', 'U', 'P', 'N']
    for _ in range(10000):
        c1 = _random_clause(rng, kinds[rng.integers(4)]).with_id(1)
        c2 = _random_clause(rng, kinds[rng.integers(4)]).with_id(2)
        assert subsumes(c1, c2) == _brute_subsumes(c1, c2)
        for r in resolvents(c1, c2):
            if r is TAUTOLOGY:
                continue
            first, second = (c1, c2) if r.justification.premises == (1, 2) \
                else (c2, c1)
            if r.rule == 'cres1':
                assert not first.coalition & second.coalition
                assert r.coalition == first.coalition | second.coalition
            elif r.rule == 'cres3':
                assert first.coalition <= second.coalition
                assert r.coalition == second.coalition - first.coalition


def test_clause_index_finds_subsumers():
    index = ClauseIndex()
    index.add(Clause.globally([~t0]))
    index.add(Clause.positive([t1], {1}, [l]))
    index.add(Clause.negative([], {1, 2}, []))
    assert index.is_subsumed(Clause.initial([~t0, t1]))
    assert index.is_subsumed(Clause.globally([~t0, t4]))
    assert not index.is_subsumed(Clause.globally([t0, t4]))
    assert index.is_subsumed(Clause.positive([t1, t4], {1, 2}, [l, p]))
    assert not index.is_subsumed(Clause.positive([t1], set(), [l]))
    assert index.is_subsumed(Clause.negative([p], {1}, [q]))
    assert len(index) == 3


def test_derivation_checks():
    a = Clause.globally([p]).with_id(1)
    b = Clause.globally([~p]).with_id(2)
    c = gres1(a, b, p).with_id(3)
    Derivation([a, b, c]).validate()
    with pytest.raises(ProofError):
        Derivation([c, a, b]).validate()
    with pytest.raises(ProofError):
        Derivation([a, a]).validate()
    forged = Clause.globally([q]).with_id(3, c.justification)
    with pytest.raises(ProofError):
        replay(Derivation([a, b, forged]))


def test_exhaustive_pairs_of_unit_problems():
    # every pair of one literal clauses over one symbol
    lits = [p, ~p]
    for kind1, kind2, x, y in product('IU', 'IU', lits, lits):
        clauses = f'{kind1}:\n{x}\n{kind2}:\n{y}\n'
        verdict = saturate(parse_problem(clauses))
        expected = 'UNSAT' if x == ~y else 'SAT'
        assert verdict.tag == expected, clauses
