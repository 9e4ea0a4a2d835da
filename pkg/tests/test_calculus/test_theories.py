import pytest

from src.calculus import enumerate as gen
from src.calculus.formulas import TOP, Conj, Letter, Meta
from src.calculus.pointed import Holds, check_equation, equation_letters, small_valuations
from src.calculus.terms import (
    CLOSED,
    Comp,
    CSym,
    DUnitL,
    Eps,
    Eta,
    Id,
    Tens,
    WDiag,
    subterms,
)
from src.calculus.theories import (
    Theory,
    axiom_counts,
    axioms,
    catalog_entries,
    compose_closure,
    find_schema,
    hom_closure,
    instances_of,
    instantiate,
    mid_interchange,
    precompose_closure,
    random_axiom_instances,
    tensor_closure,
)
from src.calculus.typecheck import infer_type
from src.core.exceptions import TypeMismatch

p, q, r, s = Letter("p"), Letter("q"), Letter("r"), Letter("s")


def test_axiom_counts():
    assert axiom_counts() == {"SyMon": 16, "ReMon": 21, "SMC": 22, "RMC": 27, "Additive": 35}


def test_schema_names_are_unique():
    names = [schema.name for schema in axioms(Theory.ADDITIVE)]
    assert len(names) == len(set(names))


def test_catalog_contains_the_documented_laws():
    remon = {schema.name for schema in axioms(Theory.REMON)}
    assert {"cw", "bcw", "wd", "bb-left", "bb-right"} <= remon
    assert "eps-eta-tens" in {schema.name for schema in axioms(Theory.SMC)}
    assert "eps-eta-tens" not in remon


def test_swap_diagonal_instance():
    eq = instantiate(find_schema("cw", Theory.REMON), {"A": p})
    assert eq.lhs == Comp(CSym(p, p), WDiag(p))
    assert eq.rhs == WDiag(p)


def test_unit_diagonal_has_no_metavariables():
    schema = find_schema("wd", Theory.REMON)
    assert schema.metavariables == []
    eq = instantiate(schema, {})
    assert (eq.lhs, eq.rhs) == (WDiag(TOP), DUnitL(TOP))


def test_pentagon_instance_type_checks():
    eq = instantiate(find_schema("b5", Theory.SYMON), {"A": p, "B": q, "C": r, "D": s})
    assert infer_type(eq.lhs) == infer_type(eq.rhs)


def test_instantiate_errors():
    with pytest.raises(TypeMismatch):
        instantiate(find_schema("cw", Theory.REMON), {})
    with pytest.raises(TypeMismatch):
        # f must have type p ⊢ A' and the filler has type q ⊢ q
        instantiate(find_schema("w-nat", Theory.REMON), {"A": p, "A'": q, "f": Id(q)})


def test_mid_interchange_type():
    arrow = infer_type(mid_interchange(p, q, r, s))
    assert arrow.source == Conj(Conj(p, q), Conj(r, s))
    assert arrow.target == Conj(Conj(p, r), Conj(q, s))
    infer_type(mid_interchange(TOP, TOP, TOP, TOP))


def test_hole_order_respects_dependencies():
    names = [hole.name for hole in find_schema("tens2", Theory.SYMON).holes]
    assert names.index("f") < names.index("g1")
    assert names.index("f2") < names.index("g2")


@pytest.mark.parametrize("theory", list(Theory))
def test_hole_free_schemata_are_type_balanced(theory):
    formulae = gen.enumerate_formulae(2, ["p", "q"])
    for schema in axioms(theory):
        if schema.holes:
            continue
        names = schema.metavariables
        for i in range(len(formulae)):
            subst = {name: formulae[(i + k) % len(formulae)] for k, name in enumerate(names)}
            eq = instantiate(schema, subst)
            assert infer_type(eq.lhs) == infer_type(eq.rhs)


def test_random_instances_are_deterministic():
    first = random_axiom_instances(Theory.RMC, 4, 100, seed=42)
    second = random_axiom_instances(Theory.RMC, 4, 100, seed=42)
    assert first == second
    assert len(first) == 100
    for eq in first:
        assert infer_type(eq.lhs) == infer_type(eq.rhs)


def test_random_instances_validate_size_bound():
    with pytest.raises(ValueError):
        random_axiom_instances(Theory.RMC, 0, 1, seed=0)


def test_symon_instances_avoid_diagonal_and_closure():
    for eq in random_axiom_instances(Theory.SYMON, 3, 100, seed=42):
        for side in (eq.lhs, eq.rhs):
            for sub in subterms(side):
                assert not isinstance(sub, (WDiag,) + CLOSED)


def test_rmc_instances_mix_diagonal_and_closure():
    kinds = set()
    for eq in random_axiom_instances(Theory.RMC, 3, 300, seed=42):
        for sub in subterms(eq.lhs):
            if isinstance(sub, WDiag):
                kinds.add("w")
            if isinstance(sub, (Eps, Eta)):
                kinds.add("closed")
    assert kinds == {"w", "closed"}


def _holds(eq):
    valuations = small_valuations(equation_letters(eq), [1, 2, 3])
    return check_equation(eq, valuations)


@pytest.mark.parametrize("schema", axioms(Theory.ADDITIVE), ids=lambda s: s.name)
def test_axiom_instances_hold_in_pointed_sets(schema):
    for eq in instances_of(schema, Theory.ADDITIVE, 3, 5, seed=42):
        assert isinstance(_holds(eq), Holds), eq.name


@pytest.mark.slow
@pytest.mark.parametrize("schema", axioms(Theory.RMC), ids=lambda s: s.name)
def test_axiom_soundness_acceptance(schema):
    for eq in instances_of(schema, Theory.RMC, 4, 100, seed=42):
        assert isinstance(_holds(eq), Holds), eq.name


def test_congruence_closures():
    eq = instantiate(find_schema("cw", Theory.REMON), {"A": p})
    closed = [
        compose_closure(eq, CSym(p, p)),
        precompose_closure(eq, Id(p)),
        tensor_closure(eq, Id(q)),
        tensor_closure(eq, WDiag(q), on_left=True),
        hom_closure(eq, q),
    ]
    for derived in closed:
        assert infer_type(derived.lhs) == infer_type(derived.rhs)
        assert isinstance(_holds(derived), Holds)
    with pytest.raises(TypeMismatch):
        compose_closure(eq, WDiag(q))


def test_catalog_entries():
    entries = catalog_entries(Theory.SMC, ascii=True)
    assert len(entries) == 22
    eps_eta = next(e for e in entries if e["name"] == "eps-eta-tens")
    assert eps_eta["rhs"] == "id[A /\\ B]"
    assert eps_eta["type"] == "A /\\ B |- A /\\ B"
    cat = next(e for e in entries if e["name"] == "cat1-right")
    assert cat["holes"] == ["f: A |- A'"]


def test_schema_patterns_use_metavariables():
    schema = find_schema("bcw", Theory.REMON)
    assert schema.metavariables == ["A", "B"]
    assert isinstance(schema.lhs, WDiag) and schema.lhs.a == Conj(Meta("A"), Meta("B"))
    assert isinstance(schema.rhs, Comp) and isinstance(schema.rhs.g, Tens)
