import random

import pytest

from src.calculus import enumerate as gen
from src.calculus.formulas import TOP, Conj, Impl, Letter
from src.calculus.parser import parse_arrow_term
from src.calculus.pointed import Holds, check_equation, equation_letters, small_valuations
from src.calculus.relations import (
    Equal,
    Relation,
    Unequal,
    decide_remon_eq,
    identity_relation,
    rel_of,
)
from src.calculus.terms import Comp, CSym, DUnitR, Eps, Equation, Id, Tens, WDiag
from src.calculus.theories import (
    Theory,
    compose_closure,
    find_schema,
    instantiate,
    random_axiom_instances,
    tensor_closure,
)
from src.calculus.typecheck import infer_type
from src.core.exceptions import FragmentError

p, q, r = Letter("p"), Letter("q"), Letter("r")


def test_relations_of_primitives():
    assert rel_of(WDiag(p)) == Relation(1, 2, frozenset({(0, 0), (0, 1)}))
    assert rel_of(CSym(p, q)).pairs == frozenset({(0, 1), (1, 0)})
    assert rel_of(DUnitR(p)) == Relation(1, 1, frozenset({(0, 0)}))
    assert rel_of(Id(TOP)) == identity_relation(0)


def test_relation_bounds():
    with pytest.raises(ValueError):
        Relation(1, 1, frozenset({(0, 1)}))


def test_relation_text():
    assert str(rel_of(WDiag(p))) == "1→2 {0-0, 0-1}"


def test_fragment_is_enforced():
    with pytest.raises(FragmentError):
        rel_of(Eps(p, q))
    with pytest.raises(FragmentError):
        rel_of(Id(Impl(p, q)))


def test_swap_after_diagonal():
    verdict = decide_remon_eq(WDiag(p), Comp(CSym(p, p), WDiag(p)))
    assert isinstance(verdict, Equal)


def test_mid_interchange_axiom_is_equal():
    eq = instantiate(find_schema("bcw", Theory.REMON), {"A": p, "B": q})
    assert isinstance(decide_remon_eq(eq.lhs, eq.rhs), Equal)


def test_type_difference_is_unequal():
    verdict = decide_remon_eq(Tens(Id(p), WDiag(p)), WDiag(p))
    assert isinstance(verdict, Unequal)
    assert verdict.reason == "type"


def test_relation_difference_is_unequal():
    verdict = decide_remon_eq(CSym(p, p), Id(Conj(p, p)))
    assert isinstance(verdict, Unequal)
    assert verdict.reason == "relation"
    assert verdict.left != verdict.right


def test_functoriality_on_random_terms():
    rng = random.Random(3)
    pool = (TOP, p, q)
    for _ in range(100):
        source = gen.random_formula(rng, ["p", "q"], 3, gen.REMON)
        f, middle = gen.random_term(source, rng, 2, gen.REMON, pool)
        g, _ = gen.random_term(middle, rng, 2, gen.REMON, pool)
        assert rel_of(Comp(g, f)) == rel_of(f).then(rel_of(g))
        assert rel_of(Id(source)) == identity_relation(rel_of(Id(source)).src_size)


def test_diagonal_is_natural_relationally():
    rng = random.Random(5)
    for _ in range(50):
        source = gen.random_formula(rng, ["p", "q"], 2, gen.REMON)
        f, target = gen.random_term(source, rng, 2, gen.REMON, (TOP, p, q))
        assert rel_of(Comp(Tens(f, f), WDiag(source))) == rel_of(Comp(WDiag(target), f))


def test_remon_axioms_are_relationally_sound():
    for eq in random_axiom_instances(Theory.REMON, 3, 100, seed=42):
        assert rel_of(eq.lhs) == rel_of(eq.rhs), eq.name


def _equal_pairs(count, seed):
    """ReMon axiom instances put in context by composition and tensoring."""
    rng = random.Random(seed)
    pool = (TOP, p, q, r)
    pairs = []
    for eq in random_axiom_instances(Theory.REMON, 2, count, seed):
        h, _ = gen.random_term(infer_type(eq.lhs).target, rng, 2, gen.REMON, pool)
        eq = compose_closure(eq, h)
        side = gen.random_formula(rng, ["p", "q", "r"], 1, gen.REMON)
        g, _ = gen.random_term(side, rng, 1, gen.REMON, pool)
        pairs.append(tensor_closure(eq, g, on_left=rng.random() < 0.5))
    return pairs


def _assert_equal_and_holds(equations):
    for eq in equations:
        assert isinstance(decide_remon_eq(eq.lhs, eq.rhs), Equal), eq.name
        names = equation_letters(eq)
        valuations = small_valuations(names, [1, 2, 3], limit=3 ** len(names))
        assert isinstance(check_equation(eq, valuations), Holds), eq.name


def test_equal_implies_model_equal():
    _assert_equal_and_holds(_equal_pairs(40, seed=11))


@pytest.mark.slow
def test_equal_implies_model_equal_exhaustive():
    pairs = _equal_pairs(500, seed=7)
    assert len(pairs) == 500
    _assert_equal_and_holds(pairs)


def test_parsed_terms():
    f = parse_arrow_term("w[p]")
    g = parse_arrow_term("c[p,p] . w[p]")
    assert infer_type(f) == infer_type(g)
    assert isinstance(decide_remon_eq(f, g), Equal)
