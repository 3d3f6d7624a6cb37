import os
import os.path as osp
import shutil
from collections import Counter

import pytest

from vedacl.assembler import load_config
from vedacl.bench import (MANIFEST, BenchParams, bench_table,
                          collect_problems, gen_formula, gen_suite,
                          read_manifest, run_bench, summarize)
from vedacl.formula import And, Coop, Not, Or, agents_of, parse, props_of

DATA = osp.join(osp.dirname(osp.dirname(osp.abspath(__file__))), 'data')


def _clauses(f):
    if isinstance(f, And):
        return _clauses(f.left) + _clauses(f.right)
    return [f]


def _literals(clause):
    if isinstance(clause, Or):
        yield from _literals(clause.left)
        yield from _literals(clause.right)
    else:
        yield clause


def test_set_name():
    assert BenchParams(5, 2, 9, 1, 1.0).set_name == '5-2-009-1'
    assert BenchParams(12, 3, 120, 2, 0.5).set_name == '12-3-120-2'


@pytest.mark.parametrize('kwargs', [
    dict(n_props=0), dict(n_agents=0), dict(n_conjuncts=0),
    dict(modal_degree=-1), dict(probability=1.5), dict(seed=-1)
])
def test_params_checked(kwargs):
    args = dict(n_props=5, n_agents=2, n_conjuncts=5, modal_degree=1,
                probability=1.0)
    args.update(kwargs)
    with pytest.raises(ValueError):
        BenchParams(**args)


def test_gen_suite_layout(tmp_path):
    params = BenchParams(5, 2, 9, 1, 1.0)
    manifest = gen_suite(params, 10, str(tmp_path))
    set_dir = tmp_path / '5-2-009-1'
    assert manifest == str(set_dir / MANIFEST)
    names = sorted(os.listdir(set_dir))
    assert len(names) == 11
    assert MANIFEST in names
    for index in range(1, 11):
        text = (set_dir / f'problem_{index}.cl').read_text()
        f = parse(text)
        assert props_of(f) <= {f'p{i}' for i in range(1, 6)}
        assert agents_of(f) <= {1, 2}


def test_gen_suite_reproducible(tmp_path):
    params = BenchParams(4, 3, 6, 2, 0.5, seed=7)
    gen_suite(params, 5, str(tmp_path / 'a'))
    gen_suite(params, 5, str(tmp_path / 'b'))
    for name in os.listdir(tmp_path / 'a' / params.set_name):
        first = (tmp_path / 'a' / params.set_name / name).read_bytes()
        second = (tmp_path / 'b' / params.set_name / name).read_bytes()
        assert first == second


def test_problems_independent_of_count(tmp_path):
    params = BenchParams(5, 2, 5, 1, 1.0, seed=3)
    gen_suite(params, 2, str(tmp_path / 'few'))
    gen_suite(params, 6, str(tmp_path / 'many'))
    for index in (1, 2):
        name = f'problem_{index}.cl'
        assert (tmp_path / 'few' / params.set_name / name).read_text() == \
            (tmp_path / 'many' / params.set_name / name).read_text()


def test_gen_suite_empty(tmp_path):
    params = BenchParams(5, 2, 5, 1, 1.0)
    gen_suite(params, 0, str(tmp_path))
    assert os.listdir(tmp_path / params.set_name) == [MANIFEST]
    with pytest.raises(ValueError):
        gen_suite(params, -1, str(tmp_path))


def test_manifest_round_trip(tmp_path):
    params = BenchParams(6, 3, 12, 2, 0.25, seed=11)
    manifest = gen_suite(params, 3, str(tmp_path))
    assert read_manifest(manifest) == (params, 3)


def test_manifest_version(write):
    path = write('manifest.txt', 'format_version=9\nn_props=1\n')
    with pytest.raises(ValueError):
        read_manifest(path)


@pytest.mark.parametrize('degree,probability', [(0, 1.0), (2, 0.0)])
def test_formula_without_modalities(degree, probability):
    params = BenchParams(5, 2, 7, degree, probability)
    for index in range(1, 6):
        f = gen_formula(params, params.rng(index))
        assert agents_of(f) == frozenset()
        assert props_of(f)


def test_formula_shape():
    params = BenchParams(5, 3, 7, 2, 1.0)
    f = gen_formula(params, params.rng(1))
    clauses = list(_clauses(f))
    assert len(clauses) == 7
    for clause in clauses:
        literals = list(_literals(clause))
        assert len(literals) == 3
        for lit in literals:
            atom = lit.arg if isinstance(lit, Not) else lit
            # degree 2 with P = 1 nests a clause of degree 1
            assert isinstance(atom, Coop)
            assert len(list(_literals(atom.arg))) == 3
    assert agents_of(f) <= {1, 2, 3}


def test_literal_statistics():
    params = BenchParams(5, 2, 1, 1, 0.5)
    modal = negated = total = 0
    coalitions, props = Counter(), Counter()
    for index in range(1, 10001):
        f = gen_formula(params, params.rng(index))
        for lit in _literals(f):
            total += 1
            atom = lit.arg if isinstance(lit, Not) else lit
            negated += isinstance(lit, Not)
            if isinstance(atom, Coop):
                modal += 1
                coalitions[atom.coalition] += 1
            else:
                props[atom.name] += 1
    assert total == 3 * 10**4
    assert abs(modal / total - 0.5) < 0.02
    assert abs(negated / total - 0.5) < 0.02
    assert len(coalitions) == 4
    for count in coalitions.values():
        assert abs(count / modal - 0.25) < 0.02
    assert sorted(props) == ['p1', 'p2', 'p3', 'p4', 'p5']
    for count in props.values():
        assert abs(count / (total - modal) - 0.2) < 0.02


def test_collect_problems(tmp_path, write):
    write('top.cl', 'p\n')
    write('set_b/problem_10.cl', 'p\n')
    write('set_b/problem_2.cl', 'p\n')
    write('set_a/x.clp', 'I:\np\n')
    write('set_a/notes.txt', 'ignored\n')
    found = [(s, osp.basename(f)) for s, f in collect_problems(str(tmp_path))]
    assert found == [(tmp_path.name, 'top.cl'), ('set_a', 'x.clp'),
                     ('set_b', 'problem_2.cl'), ('set_b', 'problem_10.cl')]
    with pytest.raises(FileNotFoundError):
        collect_problems(str(tmp_path / 'missing'))


def test_run_bench(tmp_path):
    sat_dir = tmp_path / 'sat'
    sat_dir.mkdir()
    shutil.copy(osp.join(DATA, 'sat', 'additivity_neg.cl'), str(sat_dir))
    shutil.copy(osp.join(DATA, 'problems', 'light.clp'), str(sat_dir))
    cfg = load_config(options={'engine.timeout': 20.0})
    results = run_bench(str(tmp_path), cfg)
    assert [r['file'] for r in results] == ['additivity_neg.cl', 'light.clp']
    assert [r['verdict'] for r in results] == ['SAT', 'UNSAT']
    row = summarize(results)['sat']
    assert row['problems'] == row['solved'] == 2
    assert row['sat'] == row['unsat'] == 1
    table = bench_table(results).table
    assert 'total' in table
    assert 'avg time' in table


def test_run_bench_empty(tmp_path):
    with pytest.raises(ValueError):
        run_bench(str(tmp_path), load_config())


def test_timeouts_count_at_the_cap():
    results = [
        dict(set='s', verdict='TIMEOUT', time=5.0),
        dict(set='s', verdict='SAT', time=1.0)
    ]
    row = summarize(results)['s']
    assert row['solved'] == 1
    assert row['timeout'] == 1
    assert row['time'] == 6.0


@pytest.mark.slow
def test_desk_scale_suite(tmp_path):
    for n_conjuncts in range(5, 11):
        gen_suite(BenchParams(5, 2, n_conjuncts, 1, 1.0), 10, str(tmp_path))
    cfg = load_config(options={'engine.timeout': 100.0})
    results = run_bench(str(tmp_path), cfg, jobs=2)
    sets = summarize(results)
    assert list(sets) == [f'5-2-{n:03d}-1' for n in range(5, 11)]
    assert all(row['solved'] == 10 for row in sets.values())
