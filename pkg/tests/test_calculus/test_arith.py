import itertools

import pytest

from src.calculus.arith import (
    ArithValue,
    Differ,
    EqualUpTo,
    arith_equal,
    arith_eval,
    arith_value,
    assignments,
    const,
    format_sigma,
    implication,
    multiply,
)
from src.calculus.formulas import TOP, Conj, Impl, Letter, Prod
from src.calculus.parser import parse_formula
from src.core.exceptions import ArithOverflow, FragmentError, UnboundLetter

p, q, r = Letter("p"), Letter("q"), Letter("r")


def test_documented_values():
    assert arith_eval(TOP, {}) == 1
    assert arith_eval(Impl(p, q), {"p": 2, "q": 3}) == 15
    assert arith_eval(Conj(p, q), {"p": 2, "q": 3}) == 6


def test_zero_absorbs():
    assert arith_eval(Impl(p, q), {"p": 0, "q": 7}) == 0
    assert arith_eval(Impl(p, q), {"p": 7, "q": 0}) == 0
    assert arith_eval(Conj(p, q), {"p": 0, "q": 7}) == 0


def test_errors():
    with pytest.raises(UnboundLetter):
        arith_eval(Conj(p, q), {"p": 1})
    with pytest.raises(FragmentError):
        arith_eval(Prod(p, q), {"p": 1, "q": 1})


def test_huge_values_overflow_but_compare():
    tower = parse_formula("((p -> p) -> p) -> p")
    with pytest.raises(ArithOverflow):
        arith_eval(tower, {"p": 9})
    value = arith_value(tower, {"p": 9})
    assert not value.is_exact
    assert value == arith_value(tower, {"p": 9})
    assert value != arith_value(tower, {"p": 8})
    assert value.key().startswith("~")


def test_residues_of_huge_values():
    # 2**5000 - 1 is (1+1)**5000 - 1
    big = implication(const(5000), const(1))
    assert not big.is_exact
    modulus = 1000000007
    assert big.residue(modulus) == (pow(2, 5000, modulus) - 1) % modulus
    doubled = multiply(big, const(3))
    assert doubled.residue(modulus) == (3 * (pow(2, 5000, modulus) - 1)) % modulus


def test_residue_through_huge_exponent():
    big = implication(const(5000), const(1))
    tower = implication(big, const(2))
    modulus = 1000000007
    exponent = pow(2, 5000) - 1
    assert tower.residue(modulus) == (pow(3, exponent, modulus) - 1) % modulus


def test_exact_values_compare_exactly():
    assert const(5) == ArithValue(5)
    assert hash(const(5)) == hash(ArithValue(5))
    assert str(const(12)) == "12"


def test_arith_equal():
    assert arith_equal(Impl(Conj(p, q), r), Impl(q, Impl(p, r)), 4) == EqualUpTo(4)
    assert arith_equal(Impl(TOP, p), p, 5) == EqualUpTo(5)
    verdict = arith_equal(Conj(p, p), p, 4)
    assert isinstance(verdict, Differ)
    assert verdict.sigma == {"p": 2}
    assert (verdict.left, verdict.right) == ("4", "2")
    assert format_sigma(verdict.sigma) == "p=2"


def test_assignments_are_lexicographic():
    family = assignments(["p", "q"], 1)
    assert family == [{"p": 0, "q": 0}, {"p": 0, "q": 1}, {"p": 1, "q": 0}, {"p": 1, "q": 1}]


def test_s_axioms_hold_arithmetically():
    for a, b, c in itertools.product(range(5), repeat=3):
        sigma = {"p": a, "q": b, "r": c}
        assert arith_eval(Impl(Conj(p, q), r), sigma) == arith_eval(Impl(q, Impl(p, r)), sigma)
        assert arith_eval(Impl(TOP, r), sigma) == c
