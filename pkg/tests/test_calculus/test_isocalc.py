import itertools

import pytest

from src.calculus import enumerate as gen
from src.calculus.arith import EqualUpTo, arith_equal, arith_eval
from src.calculus.formulas import TOP, Conj, Impl, Letter, Prod
from src.calculus.isocalc import (
    NImpl,
    cardinality_mismatch,
    bounded_iso_search,
    classify,
    formula_keys,
    normalize_S,
    render_nf,
    s_equal,
    scan_formulae,
    to_formula,
)
from src.calculus.parser import parse_formula
from src.calculus.pointed import interp_formula, valuation_from_sizes
from src.calculus.terms import CSym, DUnitL, DUnitR, Id
from src.core.exceptions import FragmentError

p, q, r, s = Letter("p"), Letter("q"), Letter("r"), Letter("s")


def test_normal_forms():
    assert normalize_S(Impl(Conj(p, q), r)) == normalize_S(Impl(q, Impl(p, r)))
    assert normalize_S(Impl(TOP, p)) == normalize_S(p)
    assert normalize_S(Conj(p, TOP)) == ("p",)
    assert normalize_S(TOP) == ()
    assert normalize_S(Impl(p, q)) == (NImpl("p", ("q",)),)


def test_currying_sorts_antecedents():
    nf = normalize_S(parse_formula("q -> p -> r"))
    assert nf == (NImpl("p", (NImpl("q", ("r",)),)),)
    assert render_nf(nf) == "p → q → r"


def test_s_equal():
    assert s_equal(Impl(Conj(p, q), r), Impl(q, Impl(p, r)))
    assert not s_equal(p, q)
    assert s_equal(Impl(Conj(Conj(p, q), r), s), Impl(r, Impl(q, Impl(p, s))))
    assert not s_equal(Conj(p, p), p)


def test_normalize_rejects_additives():
    with pytest.raises(FragmentError):
        normalize_S(Prod(p, q))


def test_normalize_is_idempotent():
    for formula in gen.enumerate_formulae(3, ["p", "q"]):
        nf = normalize_S(formula)
        assert normalize_S(to_formula(nf)) == nf


def test_s_equal_is_a_congruence():
    formulae = gen.enumerate_formulae(1, ["p", "q"])
    for a, b in itertools.product(formulae, repeat=2):
        if not s_equal(a, b):
            continue
        for c in formulae[:4]:
            assert s_equal(Conj(a, c), Conj(b, c))
            assert s_equal(Impl(c, a), Impl(c, b))
            assert s_equal(Impl(a, c), Impl(b, c))


def test_s_is_sound_for_arithmetic_and_model():
    formulae = gen.enumerate_formulae(2, ["p", "q"])
    classes = {}
    for formula in formulae:
        classes.setdefault(normalize_S(formula), []).append(formula)
    for members in classes.values():
        first = members[0]
        for other in members[1:]:
            for a, b in itertools.product(range(6), repeat=2):
                sigma = {"p": a, "q": b}
                assert arith_eval(first, sigma) == arith_eval(other, sigma)
            for a, b in itertools.product(range(1, 4), repeat=2):
                v = valuation_from_sizes({"p": a, "q": b})
                assert interp_formula(first, v).size == interp_formula(other, v).size


def test_formula_keys():
    keys = formula_keys([Impl(p, q), Impl(Conj(TOP, p), q)], ["p", "q"], 2)
    assert keys[0].nf == keys[1].nf
    assert keys[0].signature == keys[1].signature
    assert keys[0].text == "p -> q"
    assert keys[0].values[:3] == ("0", "0", "0")


def test_scan_is_sound_for_one_letter():
    formulae, sampled = scan_formulae(3, ["p"], seed=0)
    assert not sampled
    assert len(formulae) == 714
    report = classify(formula_keys(formulae, ["p"], 4), ["p"], 4, 3)
    assert report.unsound == []
    assert report.formulae == 714
    assert report.signature_classes <= report.nf_classes


def test_scan_reports_known_candidate():
    formulae = [parse_formula("p ∧ p"), parse_formula("p"), parse_formula("p ∧ ⊤")]
    report = classify(formula_keys(formulae, ["p"], 4), ["p"], 4)
    assert report.unsound == []
    assert report.candidates == []
    assert report.nf_classes == 2


def test_scan_samples_above_limit():
    formulae, sampled = scan_formulae(4, ["p", "q"], seed=3, limit=50)
    assert sampled
    assert len(formulae) == 50
    again, _ = scan_formulae(4, ["p", "q"], seed=3, limit=50)
    assert again == formulae


def test_scan_report_lines():
    formulae, _ = scan_formulae(2, ["p"], seed=0)
    report = classify(formula_keys(formulae, ["p"], 3), ["p"], 3, 2)
    lines = report.lines()
    assert lines[0].startswith(f"formulae {len(formulae)} letters p max-size 2 bound 3")
    assert lines[-1].startswith("unsound 0 candidates")


def test_diversified_completeness_small():
    formulae = gen.enumerate_formulae(3, ["p", "q"], diversified_only=True)
    report = classify(formula_keys(formulae, ["p", "q"], 4), ["p", "q"], 4, 3)
    assert report.unsound == []
    assert report.diversified_discrepancies == []


@pytest.mark.slow
def test_diversified_completeness_acceptance():
    names = ["p", "q", "r"]
    formulae = gen.enumerate_formulae(4, names, diversified_only=True)
    report = classify(formula_keys(formulae, names, 4), names, 4, 4)
    assert report.unsound == []
    assert report.diversified_discrepancies == []


def test_diversified_pairs_agree_with_arithmetic():
    formulae = gen.enumerate_formulae(2, ["p", "q"], diversified_only=True)
    for a, b in itertools.combinations(formulae, 2):
        agree = isinstance(arith_equal(a, b, 4), EqualUpTo)
        assert s_equal(a, b) == agree, (a, b)


def test_cardinality_mismatch():
    assert cardinality_mismatch(p, q) == {"p": 1, "q": 2}
    assert cardinality_mismatch(Conj(p, TOP), p) is None


def test_iso_search_finds_unit_and_symmetry():
    found = bounded_iso_search(Conj(p, TOP), p, 1)
    assert (found.forward, found.backward) == (DUnitR(p), DUnitL(p))
    found = bounded_iso_search(Conj(p, q), Conj(q, p), 1)
    assert (found.forward, found.backward) == (CSym(p, q), CSym(q, p))
    found = bounded_iso_search(p, p, 0)
    assert found.forward == Id(p)


def test_iso_search_gives_up():
    assert bounded_iso_search(p, q, 3) is None
    with pytest.raises(FragmentError):
        bounded_iso_search(Prod(p, q), p, 1)
