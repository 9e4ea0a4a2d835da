import random

import pytest

from src.calculus import enumerate as gen
from src.calculus.formulas import TOP, Conj, Impl, Letter, diversified, size
from src.calculus.terms import CSym, DUnitL, DUnitR, Eps, Id, WDiag
from src.calculus.typecheck import infer_type

p, q = Letter("p"), Letter("q")


@pytest.mark.parametrize("max_size,names", [(0, ["p"]), (2, ["p", "q"]), (3, ["p"])])
def test_count_matches_enumeration(max_size, names):
    formulae = gen.enumerate_formulae(max_size, names)
    assert len(formulae) == gen.count_formulae(max_size, len(names))
    assert len(set(formulae)) == len(formulae)


@pytest.mark.parametrize("max_size,names", [(2, ["p", "q"]), (3, ["p", "q", "r"])])
def test_diversified_count_matches_enumeration(max_size, names):
    formulae = gen.enumerate_formulae(max_size, names, diversified_only=True)
    assert all(diversified(f) for f in formulae)
    assert len(formulae) == gen.count_formulae(max_size, len(names), diversified_only=True)
    every = gen.enumerate_formulae(max_size, names)
    assert len(formulae) == sum(1 for f in every if diversified(f))


def test_enumeration_is_smallest_first():
    sizes = [size(f) for f in gen.enumerate_formulae(2, ["p"])]
    assert sizes == sorted(sizes)


def test_random_formula_respects_signature():
    rng = random.Random(0)
    for _ in range(100):
        formula = gen.random_formula(rng, ["p", "q"], 3, gen.SYMON)
        assert size(formula) <= 3
        assert not isinstance(formula, Impl)


def test_random_diversified():
    rng = random.Random(1)
    formula = gen.random_diversified(rng, ["p", "q", "r"], 3)
    assert formula is not None and diversified(formula)


def test_root_steps():
    targets = dict((type(term), target) for term, target in gen.steps(Conj(p, TOP), gen.RMC, (TOP,)))
    assert targets[DUnitR] == p
    assert targets[CSym] == Conj(TOP, p)
    assert targets[WDiag] == Conj(Conj(p, TOP), Conj(p, TOP))
    assert targets[DUnitL] == Conj(Conj(p, TOP), TOP)
    eps = [t for t, _ in gen.steps(Conj(p, Impl(p, q)), gen.SMC) if isinstance(t, Eps)]
    assert eps == [Eps(p, q)]


def test_steps_are_well_typed():
    formula = Conj(Impl(p, Conj(q, TOP)), p)
    for term, target in gen.steps(formula, gen.ADDITIVE, (TOP, p)):
        arrow = infer_type(term)
        assert arrow.source == formula
        assert arrow.target == target


def test_random_term_types():
    rng = random.Random(2)
    for _ in range(50):
        source = gen.random_formula(rng, ["p", "q"], 2, gen.RMC)
        term, target = gen.random_term(source, rng, 3, gen.RMC, (TOP, p))
        arrow = infer_type(term)
        assert (arrow.source, arrow.target) == (source, target)


def test_reachable_keeps_shortest_first():
    found = gen.reachable(Conj(p, q), 2, gen.SYMON)
    assert found[Conj(p, q)][0] == Id(Conj(p, q))
    assert found[Conj(q, p)][0] == CSym(p, q)
    for target, chains in found.items():
        for term in chains:
            assert infer_type(term).target == target


def test_chain_applies_first_term_first():
    term = gen.chain([DUnitL(p), DUnitR(p)])
    assert infer_type(term).source == p
    assert infer_type(term).target == p
