import json

import click
import pytest

from src.cli import cli, parse_assignment, parse_sizes
from src.core.logging import setup_logging


def invoke(runner, *args):
    result = runner.invoke(cli, list(args), obj={})
    # the command attached loguru to the runner's stderr, which is now closed
    setup_logging()
    return result


def test_parse_assignment():
    assert parse_assignment("p=3, q=4") == {"p": 3, "q": 4}
    assert parse_assignment("") == {}
    with pytest.raises(click.BadParameter):
        parse_assignment("p")
    with pytest.raises(click.BadParameter):
        parse_assignment("p=-1")


def test_parse_sizes():
    assert parse_sizes("1..3") == [1, 2, 3]
    assert parse_sizes("2,4") == [2, 4]
    with pytest.raises(click.BadParameter):
        parse_sizes("0..2")
    with pytest.raises(click.BadParameter):
        parse_sizes("1..99")


def test_typecheck(runner):
    result = invoke(runner, "typecheck", "eps[p,q]")
    assert result.exit_code == 0
    assert result.stdout.strip() == "p ∧ (p → q) ⊢ q"


def test_typecheck_ascii(runner):
    result = invoke(runner, "--ascii", "typecheck", "w[p]")
    assert result.stdout.strip() == "p |- p /\\ p"


def test_parse_error_exits_with_usage_status(runner):
    result = invoke(runner, "typecheck", "w[p")
    assert result.exit_code == 2


def test_type_error_exits_with_usage_status(runner):
    result = invoke(runner, "typecheck", "eps[p,q] . w[p]")
    assert result.exit_code == 2


def test_eval(runner):
    result = invoke(runner, "eval", "w[p]", "--val", "p=3")
    assert result.exit_code == 0
    assert "(3 -> 5)" in result.stdout.splitlines()[0]


def test_check_holds(runner):
    result = invoke(runner, "check", "c[p,p] . w[p] = w[p]")
    assert result.exit_code == 0
    assert result.stdout.strip() == "HOLDS checked=3 skipped=0"


def test_check_fails(runner):
    result = invoke(runner, "check", "c[p,p] = id[p ∧ p]", "--sizes", "1..3")
    assert result.exit_code == 1
    assert result.stdout.startswith("FAILS at p=3")


def test_check_rejects_bad_sizes(runner):
    result = invoke(runner, "check", "w[p] = w[p]", "--sizes", "0..2")
    assert result.exit_code == 2


def test_eval_rejects_empty_letter(runner):
    result = invoke(runner, "eval", "w[p]", "--val", "p=0")
    assert result.exit_code == 2
    assert "size 0" in result.stderr


def test_check_four_letters_fails_at_the_largest_size(runner):
    result = invoke(
        runner,
        "check",
        "c[p,p] * (id[q] * (id[r] * id[s])) = id[p /\\ p] * (id[q] * (id[r] * id[s]))",
    )
    assert result.exit_code == 1
    assert result.stdout.startswith("FAILS at p=3")


def test_check_reports_a_sampled_family(runner):
    result = invoke(
        runner, "check", "id[p] * (id[q] * (id[r] * id[s])) = id[p /\\ (q /\\ (r /\\ s))]"
    )
    assert result.exit_code == 0
    assert result.stdout.strip() == "HOLDS checked=27 skipped=0 (sampled family)"


def test_releq_equal(runner):
    result = invoke(runner, "releq", "w[p]", "c[p,p] . w[p]")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["Equal", "  1→2 {0-0, 0-1}"]


def test_releq_unequal(runner):
    result = invoke(runner, "releq", "c[p,p]", "id[p ∧ p]")
    assert result.exit_code == 1
    assert result.stdout.startswith("Unequal (relation)")


def test_iso(runner):
    result = invoke(runner, "iso", "(p ∧ q) -> r", "q -> p -> r")
    assert result.exit_code == 0
    assert result.stdout.strip() == "S-EQUAL"
    result = invoke(runner, "iso", "p ∧ p", "p")
    assert result.exit_code == 1
    assert result.stdout.strip() == "S-DIFFERENT arith-differ(p=2)"


def test_iso_search_depth(runner):
    result = invoke(runner, "iso", "p ∧ q", "q ∧ p", "--search-depth", "1")
    assert result.exit_code == 0
    assert "forward  c[p, q]" in result.stdout


def test_arith(runner):
    result = invoke(runner, "arith", "p->q", "--assign", "p=2,q=3")
    assert result.exit_code == 0
    assert result.stdout.strip() == "15"


def test_scan(runner):
    result = invoke(runner, "scan", "--max-size", "2", "--letters", "p", "--bound", "3")
    assert result.exit_code == 0
    assert result.stdout.startswith("formulae")


def test_scan_json(runner):
    result = invoke(runner, "scan", "--max-size", "1", "--letters", "p,q", "--json")
    report = json.loads(result.stdout)
    assert report["letters"] == ["p", "q"]
    assert report["unsound"] == []


def test_scan_rejects_non_letters(runner):
    result = invoke(runner, "scan", "--letters", "p,T")
    assert result.exit_code == 2


def test_axioms(runner):
    result = invoke(runner, "axioms")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "27 schemata"
    result = invoke(runner, "axioms", "--theory", "SyMon", "--json")
    assert json.loads(result.stdout)["count"] == 16


def test_witness_nonnatural(runner):
    result = invoke(runner, "witness-nonnatural")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "verified"


def test_soundness(runner):
    result = invoke(runner, "soundness", "--theory", "ReMon", "--count", "10", "--size-bound", "2")
    assert result.exit_code == 0
    assert result.stdout.strip() == "ReMon instances 10 seed 42 failures 0"
