import pytest

from src.calculus.arith import Differ, EqualUpTo
from src.calculus.formulas import TOP, Conj, Letter
from src.calculus.parser import parse_arrow_term, parse_equation, parse_formula
from src.calculus.pointed import Fails, Holds
from src.calculus.relations import Equal, Unequal
from src.calculus.terms import Equation, Eps
from src.calculus.theories import Theory, random_axiom_instances
from src.core.exceptions import FragmentError, InvalidSize, UnboundLetter
from src.services.coherence import CoherenceService
from src.services.conjecture_scan import ConjectureScanner, _chunks
from src.services.iso_search import IsoService, IsoVerdict
from src.services.model_checker import ModelChecker

p, q = Letter("p"), Letter("q")


def test_model_checker_check():
    checker = ModelChecker()
    lhs, rhs = parse_equation("c[p,p] . w[p] = w[p]")
    assert isinstance(checker.check(Equation(lhs, rhs)), Holds)
    lhs, rhs = parse_equation("c[p,p] = id[p ∧ p]")
    verdict = checker.check(Equation(lhs, rhs), sizes=[2, 3])
    assert isinstance(verdict, Fails)
    assert verdict.valuation == {"p": 3}


async def test_model_checker_check_many_keeps_order():
    equations = random_axiom_instances(Theory.REMON, 2, 6, seed=1)
    lhs, rhs = parse_equation("c[p,p] = id[p ∧ p]")
    equations.append(Equation(lhs, rhs, "swap"))
    verdicts = await ModelChecker().check_many(equations, workers=1)
    assert len(verdicts) == 7
    assert all(isinstance(v, Holds) for v in verdicts[:-1])
    assert isinstance(verdicts[-1], Fails)


def test_model_checker_evaluate():
    table = ModelChecker().evaluate(parse_arrow_term("w[p]"), {"p": 3})
    assert table.table.tolist() == [0, 1, 4]
    assert table.lines()[1] == "1 -> 1"


def test_model_checker_evaluate_checks_letters_first():
    with pytest.raises(UnboundLetter) as caught:
        ModelChecker().evaluate(parse_arrow_term("c[p,q]"), {"p": 2})
    assert caught.value.letter == "q"
    with pytest.raises(InvalidSize):
        ModelChecker().evaluate(parse_arrow_term("w[p]"), {"p": 0})


def test_model_checker_marks_sampled_families():
    lhs, rhs = parse_equation("id[p] * (id[q] * (id[r] * id[s])) = id[p ∧ (q ∧ (r ∧ s))]")
    verdict = ModelChecker().check(Equation(lhs, rhs))
    assert verdict == Holds(27, 0, truncated=True)
    lhs, rhs = parse_equation("c[p,p] . w[p] = w[p]")
    assert ModelChecker().check(Equation(lhs, rhs)) == Holds(3)


def test_model_checker_witness():
    assert ModelChecker().witness_nonnatural(3).verify()


def test_coherence_service():
    service = CoherenceService()
    verdict = service.decide(parse_arrow_term("w[p]"), parse_arrow_term("c[p,p] . w[p]"))
    assert isinstance(verdict, Equal)
    assert str(verdict.relation) == "1→2 {0-0, 0-1}"
    verdict = service.decide(parse_arrow_term("c[p,p]"), parse_arrow_term("id[p ∧ p]"))
    assert isinstance(verdict, Unequal)
    with pytest.raises(FragmentError):
        service.decide(Eps(p, q), Eps(p, q))


def test_iso_service_compare():
    service = IsoService()
    assert service.compare(parse_formula("(p ∧ q) -> r"), parse_formula("q -> p -> r")).text() == "S-EQUAL"
    verdict = service.compare(Conj(p, p), p)
    assert isinstance(verdict.arith, Differ)
    assert verdict.text() == "S-DIFFERENT arith-differ(p=2)"


def test_iso_verdict_agree_text():
    assert IsoVerdict(False, EqualUpTo(3)).text() == "S-DIFFERENT arith-agree(bound=3)"


def test_iso_service_arith_and_search():
    service = IsoService()
    assert service.arith(parse_formula("p -> q"), {"p": 2, "q": 3}) == 15
    found = service.search(Conj(p, TOP), p, 1)
    assert found is not None
    assert service.search(p, q, 2) is None


def test_chunks_are_contiguous():
    items = list(range(10))
    parts = _chunks(items, 3)
    assert [x for part in parts for x in part] == items
    assert len(parts) == 3


async def test_conjecture_scanner():
    report = await ConjectureScanner(workers=1).scan(2, ["p"], 3)
    assert report.unsound == []
    assert report.letters == ("p",)


async def test_conjecture_scanner_workers_do_not_change_results():
    single = await ConjectureScanner(workers=1).scan(2, ["q", "p"], 2)
    pooled = await ConjectureScanner(workers=2).scan(2, ["p", "q"], 2)
    assert single.lines() == pooled.lines()
