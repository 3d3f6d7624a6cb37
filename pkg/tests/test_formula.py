import numpy as np
import pytest

from vedacl.bench import BenchParams, gen_formula
from vedacl.formula import (FALSE, TRUE, And, Coop, DualCoop,
                            FormulaSyntaxError, Iff, Implies, Literal, Not, Or,
                            Prop, agents_of, as_literal, conjoin, disjoin,
                            is_modal_free, modal_depth, negate_for_validity,
                            nnf, parse, props_of, render, subformulas)
from vedacl.semantics import Bounds, extension, iter_models

p, q, r, l = Prop('p'), Prop('q'), Prop('r'), Prop('l')


def test_parse_switch_clause():
    assert parse('(tog1 & ~l) -> <1> l') == Implies(
        And(Prop('tog1'), Not(l)), Coop(frozenset({1}), l))


@pytest.mark.parametrize('text, expected', [
    ('p | q & r', Or(p, And(q, r))),
    ('p -> q -> r', Implies(p, Implies(q, r))),
    ('p <-> q <-> r', Iff(Iff(p, q), r)),
    ('p & q & r', And(And(p, q), r)),
    ('~~p', Not(Not(p))),
    ('<> p', Coop(frozenset(), p)),
    ('[1,2] ~p', DualCoop(frozenset({1, 2}), Not(p))),
    ('<2,1> p & q', And(Coop(frozenset({1, 2}), p), q)),
    ('true | false', Or(TRUE, FALSE)),
    ('p # a comment\n & q', And(p, q)),
])
def test_parse_precedence(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize('text', [
    '', 'p &', '(p', 'p q', '<1 p', '[1> p', '<0> p', 'P', '<a> p', 'p $ q'
])
def test_parse_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse(text)


def test_parse_error_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse('p &\n  & q')
    assert info.value.line == 2
    assert info.value.column == 3


def test_parse_rejects_agent_zero():
    with pytest.raises(FormulaSyntaxError, match='agent ids start at 1'):
        parse('<0,1> p')


@pytest.mark.parametrize('text', [
    '(tog1 & ~l) -> <1> l',
    '~<1> (p | q) & [1,2] (p -> q)',
    'p -> (q -> r) -> p',
    '((p -> q) -> r) <-> ~(p | q & r)',
    '<> [1] <1,2> ~false',
    '~(p & q) | ~~r',
])
def test_render_parses_back(text):
    f = parse(text)
    assert parse(render(f)) == f


def test_render_is_minimal():
    assert render(parse('(p & q) | r')) == 'p & q | r'
    assert render(parse('<1> (p & q)')) == '<1> (p & q)'
    assert render(parse('~(<1> p)')) == '~<1> p'
    assert str(parse('p -> (q -> r)')) == 'p -> q -> r'


def test_agents_props_and_depth():
    f = parse('<1> l & [2] <1> ~tog2 | t0')
    assert agents_of(f) == {1, 2}
    assert props_of(f) == {'l', 'tog2', 't0'}
    assert modal_depth(f) == 2
    assert not is_modal_free(f)
    assert agents_of(parse('p & q')) == frozenset()
    assert modal_depth(parse('p & q')) == 0


def test_conjunction_of_switch_problem_names_both_agents():
    f = parse('t0 & (tog1 & ~l -> <1> l) & (tog2 & ~l -> <2> l) '
              '& ~<1,2> l')
    assert agents_of(f) == {1, 2}


def test_subformulas_pre_order():
    f = parse('p & <1> q')
    assert list(subformulas(f)) == [f, p, Coop(frozenset({1}), q), q]


def test_conjoin_disjoin():
    assert conjoin([]) == TRUE
    assert disjoin([]) == FALSE
    assert conjoin([p, q, r]) == And(And(p, q), r)
    assert disjoin([p]) == p


def test_literals():
    lit = Literal('p')
    assert ~lit == Literal('p', True)
    assert ~~lit == lit
    assert str(~lit) == '~p'
    assert (~lit).to_formula() == Not(p)
    assert as_literal(Not(p)) == ~lit
    assert as_literal(Not(Not(p))) is None


@pytest.mark.parametrize('text, expected', [
    ('~<1> p', '[1] ~p'),
    ('~[1,2] p', '<1,2> ~p'),
    ('~(p & q)', '~p | ~q'),
    ('~(p -> q)', 'p & ~q'),
    ('p <-> q', '(~p | q) & (p | ~q)'),
    ('~(p <-> q)', '(p | q) & (~p | ~q)'),
    ('~<1> true', '[1] false'),
    ('p & true', 'p'),
    ('p | true', 'true'),
    ('~~p', 'p'),
])
def test_nnf(text, expected):
    assert nnf(parse(text)) == parse(expected)


def test_nnf_keeps_agents():
    f = parse('false & <2> p')
    assert agents_of(nnf(f)) == {2}
    assert nnf(parse('q | ~<1> false')) == parse('q | [1] true')


def test_nnf_negations_only_on_propositions():
    f = nnf(parse('~(<1> (p -> [2] ~(q | r)) <-> ~p)'))
    for node in subformulas(f):
        if isinstance(node, Not):
            assert isinstance(node.arg, Prop)
        assert not isinstance(node, (Implies, Iff))


def test_negate_for_validity():
    assert negate_for_validity(parse('<1> p -> <1> p')) == parse(
        '<1> p & [1] ~p')


def test_random_formulas_render_and_parse_back():
    params = BenchParams(3, 3, 3, 2, 0.5, seed=4)
    for index in range(1000):
        f = gen_formula(params, params.rng(index))
        assert parse(render(f)) == f, render(f)


def test_nnf_is_idempotent():
    params = BenchParams(3, 2, 3, 2, 0.5, seed=5)
    for index in range(200):
        f = gen_formula(params, params.rng(index))
        for g in (f, Not(f), Implies(f, Not(f))):
            once = nnf(g)
            assert nnf(once) == once


NNF_SAMPLES = [
    '~(p1 <-> [1] p2)',
    '(p1 -> <> ~p2) -> ~[] (p1 | false)',
    '~<1> (p1 & ~[1] p2) <-> true',
]


def test_nnf_is_equivalent_on_every_small_model():
    params = BenchParams(2, 1, 2, 1, 0.5, seed=6)
    formulas = [parse(t) for t in NNF_SAMPLES]
    for index in range(20):
        f = gen_formula(params, params.rng(index))
        formulas += [f, Not(f)]
    models = list(
        iter_models((1, ), ('p1', 'p2'), Bounds(max_states=2, max_moves=2)))
    # 8 one-state and 576 two-state models
    assert len(models) == 584
    for f in formulas:
        g = nnf(f)
        for m in models:
            np.testing.assert_array_equal(extension(m, f), extension(m, g))
