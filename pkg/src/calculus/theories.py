"""Equational theories of the free categories as instantiable schemata.

A schema is an equation between arrow-term patterns whose formulae may
contain ``Meta`` letters and whose operands may be typed ``Hole``s.
Theories are cumulative: ReMon and SMC extend SyMon, RMC extends both,
and Additive adds the bicartesian laws for ⊓, ⊔ and ⊤ₐ to RMC.
"""
import random
from dataclasses import dataclass, fields
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from src.calculus import enumerate as gen
from src.calculus.formulas import (
    ADD_UNIT,
    TOP,
    AddUnit,
    Conj,
    Coprod,
    Formula,
    Impl,
    Letter,
    Meta,
    Prod,
    subformulae,
)
from src.calculus.printer import render, render_term
from src.calculus.terms import (
    ArrowTerm,
    BAssocL,
    BAssocR,
    Comp,
    Copair,
    CSym,
    DUnitL,
    DUnitR,
    Eps,
    Equation,
    Eta,
    FromInitial,
    Hole,
    HomFun,
    Id,
    Inj1,
    Inj2,
    Pair,
    Proj1,
    Proj2,
    Tens,
    ToTerminal,
    WDiag,
    subscripts,
    subterms,
)
from src.calculus.typecheck import infer_type
from src.core.config import get_settings
from src.core.exceptions import EncodingError, TypeMismatch

settings = get_settings()

Binding = Union[Formula, ArrowTerm]
Substitution = Mapping[str, Binding]


class Theory(str, Enum):
    SYMON = "SyMon"
    REMON = "ReMon"
    SMC = "SMC"
    RMC = "RMC"
    ADDITIVE = "Additive"


SIGNATURES: Dict[Theory, gen.Signature] = {
    Theory.SYMON: gen.SYMON,
    Theory.REMON: gen.REMON,
    Theory.SMC: gen.SMC,
    Theory.RMC: gen.RMC,
    Theory.ADDITIVE: gen.ADDITIVE,
}


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    theory: Theory
    lhs: ArrowTerm
    rhs: ArrowTerm

    @property
    def holes(self) -> List[Hole]:
        """Term metavariables in fill order.

        A hole comes after every hole whose target mentions a metavariable
        of its source; otherwise first occurrence, left side first, decides.
        """
        seen: Dict[str, Hole] = {}
        for side in (self.lhs, self.rhs):
            for sub in subterms(side):
                if isinstance(sub, Hole) and sub.name not in seen:
                    seen[sub.name] = sub
        pending = list(seen.values())
        ordered: List[Hole] = []
        while pending:
            for hole in pending:
                needs = _meta_names(hole.source)
                if not any(needs & _meta_names(other.target) for other in pending if other is not hole):
                    break
            else:
                hole = pending[0]
            pending.remove(hole)
            ordered.append(hole)
        return ordered

    @property
    def metavariables(self) -> List[str]:
        names: List[str] = []
        for hole in self.holes:
            for formula in (hole.source, hole.target):
                _collect_metas(formula, names)
        for side in (self.lhs, self.rhs):
            for sub in subterms(side):
                for formula in _pattern_formulae(sub):
                    _collect_metas(formula, names)
        return names


def _meta_names(formula: Formula) -> set:
    return {sub.name for sub in subformulae(formula) if isinstance(sub, Meta)}


def _collect_metas(formula: Formula, names: List[str]) -> None:
    for sub in subformulae(formula):
        if isinstance(sub, Meta) and sub.name not in names:
            names.append(sub.name)


def _pattern_formulae(term: ArrowTerm) -> Tuple[Formula, ...]:
    if isinstance(term, HomFun):
        return (term.a,)
    if isinstance(term, (Comp, Tens, Pair, Copair, Hole)):
        return ()
    return subscripts(term)


# --- derived arrows --------------------------------------------------------------


def mid_interchange(a: Formula, b: Formula, c: Formula, d: Formula) -> ArrowTerm:
    """(A∧B)∧(C∧D) ⊢ (A∧C)∧(B∧D), built from associativity and symmetry."""
    inner = Comp(
        BAssocL(c, b, d),
        Comp(Tens(CSym(b, c), Id(d)), BAssocR(b, c, d)),
    )
    return Comp(
        BAssocR(a, c, Conj(b, d)),
        Comp(Tens(Id(a), inner), BAssocL(a, b, Conj(c, d))),
    )


def _compose(*terms: ArrowTerm) -> ArrowTerm:
    """Right-nested composite; the last term is applied first."""
    result = terms[-1]
    for term in reversed(terms[:-1]):
        result = Comp(term, result)
    return result


# --- schema catalog --------------------------------------------------------------

A, B, C, D = Meta("A"), Meta("B"), Meta("C"), Meta("D")
A1, B1, C1 = Meta("A'"), Meta("B'"), Meta("C'")
A2, B2 = Meta("A''"), Meta("B''")

f = Hole("f", A, A1)
g = Hole("g", B, B1)
h = Hole("h", C, C1)


def _symon() -> List[AxiomSchema]:
    t = Theory.SYMON
    f1, g1, h1 = Hole("f", A, B), Hole("g", B, C), Hole("h", C, D)
    f2, g2 = Hole("f2", B, B1), Hole("g2", B1, B2)
    g_after_f = Hole("g1", A1, A2)
    return [
        AxiomSchema("cat1-right", t, Comp(f, Id(A)), f),
        AxiomSchema("cat1-left", t, Comp(Id(A1), f), f),
        AxiomSchema("cat2", t, Comp(h1, Comp(g1, f1)), Comp(Comp(h1, g1), f1)),
        AxiomSchema("tens1", t, Tens(Id(A), Id(B)), Id(Conj(A, B))),
        AxiomSchema(
            "tens2",
            t,
            Comp(Tens(g_after_f, g2), Tens(f, f2)),
            Tens(Comp(g_after_f, f), Comp(g2, f2)),
        ),
        AxiomSchema(
            "b-nat",
            t,
            Comp(BAssocR(A1, B1, C1), Tens(f, Tens(g, h))),
            Comp(Tens(Tens(f, g), h), BAssocR(A, B, C)),
        ),
        AxiomSchema(
            "c-nat",
            t,
            Comp(CSym(A1, B1), Tens(f, g)),
            Comp(Tens(g, f), CSym(A, B)),
        ),
        AxiomSchema(
            "d-nat",
            t,
            Comp(DUnitR(A1), Tens(f, Id(TOP))),
            Comp(f, DUnitR(A)),
        ),
        AxiomSchema(
            "bb-left", t, Comp(BAssocL(A, B, C), BAssocR(A, B, C)), Id(Conj(A, Conj(B, C)))
        ),
        AxiomSchema(
            "bb-right", t, Comp(BAssocR(A, B, C), BAssocL(A, B, C)), Id(Conj(Conj(A, B), C))
        ),
        AxiomSchema(
            "b5",
            t,
            Comp(BAssocR(Conj(A, B), C, D), BAssocR(A, B, Conj(C, D))),
            _compose(
                Tens(BAssocR(A, B, C), Id(D)),
                BAssocR(A, Conj(B, C), D),
                Tens(Id(A), BAssocR(B, C, D)),
            ),
        ),
        AxiomSchema("cc", t, Comp(CSym(B, A), CSym(A, B)), Id(Conj(A, B))),
        AxiomSchema(
            "bc",
            t,
            CSym(A, Conj(B, C)),
            _compose(
                BAssocR(B, C, A),
                Tens(Id(B), CSym(A, C)),
                BAssocL(B, A, C),
                Tens(CSym(A, B), Id(C)),
                BAssocR(A, B, C),
            ),
        ),
        AxiomSchema("dd-left", t, Comp(DUnitL(A), DUnitR(A)), Id(Conj(A, TOP))),
        AxiomSchema("dd-right", t, Comp(DUnitR(A), DUnitL(A)), Id(A)),
        AxiomSchema(
            "bd",
            t,
            BAssocR(A, B, TOP),
            Comp(DUnitL(Conj(A, B)), Tens(Id(A), DUnitR(B))),
        ),
    ]


def _remon() -> List[AxiomSchema]:
    t = Theory.REMON
    return [
        AxiomSchema("w-nat", t, Comp(Tens(f, f), WDiag(A)), Comp(WDiag(A1), f)),
        AxiomSchema(
            "bw",
            t,
            _compose(BAssocR(A, A, A), Tens(Id(A), WDiag(A)), WDiag(A)),
            Comp(Tens(WDiag(A), Id(A)), WDiag(A)),
        ),
        AxiomSchema("cw", t, Comp(CSym(A, A), WDiag(A)), WDiag(A)),
        AxiomSchema(
            "bcw",
            t,
            WDiag(Conj(A, B)),
            Comp(mid_interchange(A, A, B, B), Tens(WDiag(A), WDiag(B))),
        ),
        AxiomSchema("wd", t, WDiag(TOP), DUnitL(TOP)),
    ]


def _smc() -> List[AxiomSchema]:
    t = Theory.SMC
    f1, g1 = Hole("f", B, C), Hole("g", C, D)
    return [
        AxiomSchema("hom1", t, HomFun(A, Id(B)), Id(Impl(A, B))),
        AxiomSchema(
            "hom2", t, HomFun(A, Comp(g1, f1)), Comp(HomFun(A, g1), HomFun(A, f1))
        ),
        AxiomSchema(
            "eps-nat",
            t,
            Comp(g, Eps(A, B)),
            Comp(Eps(A, B1), Tens(Id(A), HomFun(A, g))),
        ),
        AxiomSchema(
            "eta-nat",
            t,
            Comp(HomFun(A, Tens(Id(A), g)), Eta(A, B)),
            Comp(Eta(A, B1), g),
        ),
        AxiomSchema(
            "eps-eta-tens",
            t,
            Comp(Eps(A, Conj(A, B)), Tens(Id(A), Eta(A, B))),
            Id(Conj(A, B)),
        ),
        AxiomSchema(
            "eps-eta-hom",
            t,
            Comp(HomFun(A, Eps(A, B)), Eta(A, Impl(A, B))),
            Id(Impl(A, B)),
        ),
    ]


def _additive() -> List[AxiomSchema]:
    t = Theory.ADDITIVE
    into_a, into_b = Hole("f", C, A1), Hole("g", C, B1)
    from_a, from_b = Hole("f", A, C), Hole("g", B, C)
    into_prod = Hole("h", C, Prod(A, B))
    from_coprod = Hole("h", Coprod(A, B), C)
    into_unit = Hole("h", A, ADD_UNIT)
    from_unit = Hole("h", ADD_UNIT, A)
    return [
        AxiomSchema("pair-beta1", t, Comp(Proj1(A1, B1), Pair(into_a, into_b)), into_a),
        AxiomSchema("pair-beta2", t, Comp(Proj2(A1, B1), Pair(into_a, into_b)), into_b),
        AxiomSchema(
            "pair-eta",
            t,
            Pair(Comp(Proj1(A, B), into_prod), Comp(Proj2(A, B), into_prod)),
            into_prod,
        ),
        AxiomSchema("copair-beta1", t, Comp(Copair(from_a, from_b), Inj1(A, B)), from_a),
        AxiomSchema("copair-beta2", t, Comp(Copair(from_a, from_b), Inj2(A, B)), from_b),
        AxiomSchema(
            "copair-eta",
            t,
            Copair(Comp(from_coprod, Inj1(A, B)), Comp(from_coprod, Inj2(A, B))),
            from_coprod,
        ),
        AxiomSchema("terminal", t, into_unit, ToTerminal(A)),
        AxiomSchema("initial", t, from_unit, FromInitial(A)),
    ]


_OWN: Dict[Theory, List[AxiomSchema]] = {
    Theory.SYMON: _symon(),
    Theory.REMON: _remon(),
    Theory.SMC: _smc(),
    Theory.ADDITIVE: _additive(),
}

_INCLUDES: Dict[Theory, Tuple[Theory, ...]] = {
    Theory.SYMON: (Theory.SYMON,),
    Theory.REMON: (Theory.SYMON, Theory.REMON),
    Theory.SMC: (Theory.SYMON, Theory.SMC),
    Theory.RMC: (Theory.SYMON, Theory.REMON, Theory.SMC),
    Theory.ADDITIVE: (Theory.SYMON, Theory.REMON, Theory.SMC, Theory.ADDITIVE),
}


def axioms(theory: Theory) -> List[AxiomSchema]:
    theory = Theory(theory)
    return [schema for part in _INCLUDES[theory] for schema in _OWN[part]]


def find_schema(name: str, theory: Theory = Theory.ADDITIVE) -> AxiomSchema:
    for schema in axioms(theory):
        if schema.name == name:
            return schema
    raise KeyError(name)


# --- substitution ---------------------------------------------------------------


def substitute_formula(formula: Formula, subst: Substitution) -> Formula:
    match formula:
        case Meta(name):
            bound = subst.get(name)
            if bound is None:
                return formula
            return bound  # type: ignore[return-value]
        case Conj(left, right):
            return Conj(substitute_formula(left, subst), substitute_formula(right, subst))
        case Impl(antecedent, consequent):
            return Impl(
                substitute_formula(antecedent, subst), substitute_formula(consequent, subst)
            )
        case Prod(left, right):
            return Prod(substitute_formula(left, subst), substitute_formula(right, subst))
        case Coprod(left, right):
            return Coprod(substitute_formula(left, subst), substitute_formula(right, subst))
    return formula


def substitute_term(term: ArrowTerm, subst: Substitution) -> ArrowTerm:
    match term:
        case Hole(name, source, target):
            bound = subst.get(name)
            if bound is None:
                return Hole(name, substitute_formula(source, subst), substitute_formula(target, subst))
            return bound  # type: ignore[return-value]
        case Comp(a, b) | Tens(a, b) | Pair(a, b) | Copair(a, b):
            return type(term)(substitute_term(a, subst), substitute_term(b, subst))
        case HomFun(a, inner):
            return HomFun(substitute_formula(a, subst), substitute_term(inner, subst))
    return type(term)(*(substitute_formula(x, subst) for x in subscripts(term)))


def _is_ground(formula: Formula) -> bool:
    return not any(isinstance(sub, Meta) for sub in subformulae(formula))


def instantiate(schema: AxiomSchema, subst: Substitution) -> Equation:
    """Replace every metavariable of ``schema`` and check both sides.

    Hole fillers must have the hole's type after formula substitution.
    """
    missing = [name for name in schema.metavariables if name not in subst]
    missing += [hole.name for hole in schema.holes if hole.name not in subst]
    if missing:
        raise TypeMismatch(f"{schema.name}: no binding for {', '.join(missing)}")
    for hole in schema.holes:
        source = substitute_formula(hole.source, subst)
        target = substitute_formula(hole.target, subst)
        found = infer_type(subst[hole.name])  # type: ignore[arg-type]
        if (found.source, found.target) != (source, target):
            raise TypeMismatch(
                f"{schema.name}: {hole.name} must have type "
                f"{render(source)} ⊢ {render(target)}",
                expected=(source, target),
                found=(found.source, found.target),
            )
    lhs = substitute_term(schema.lhs, subst)
    rhs = substitute_term(schema.rhs, subst)
    left, right = infer_type(lhs), infer_type(rhs)
    if left != right:
        raise TypeMismatch(
            f"{schema.name}: sides have different types", expected=left, found=right
        )
    return Equation(lhs, rhs, schema.name)


def match_formula(pattern: Formula, formula: Formula, subst: Dict[str, Binding]) -> bool:
    """Extend ``subst`` so that ``pattern`` becomes ``formula``; False on conflict."""
    if isinstance(pattern, Meta):
        bound = subst.get(pattern.name)
        if bound is None:
            subst[pattern.name] = formula
            return True
        return bound == formula
    if type(pattern) is not type(formula):
        return False
    return all(
        match_formula(getattr(pattern, fld.name), getattr(formula, fld.name), subst)
        for fld in fields(pattern)
    )


# --- random instances -------------------------------------------------------------

LETTERS = ("p", "q", "r")
_EXACT_ATTEMPTS = 50
_REDRAWS = 20


def _zero_map(source: Formula, target: Formula) -> ArrowTerm:
    return Comp(FromInitial(target), ToTerminal(source))


class _Instantiator:
    def __init__(self, theory: Theory, size_bound: int, rng: random.Random, depth: int):
        self.signature = SIGNATURES[theory]
        self.size_bound = size_bound
        self.rng = rng
        self.depth = depth
        self.letters = LETTERS[: rng.randint(2, 3)]
        self.pool: Tuple[Formula, ...] = (TOP,) + tuple(Letter(x) for x in self.letters)

    def formula(self) -> Formula:
        return gen.random_formula(self.rng, self.letters, self.size_bound, self.signature)

    def ground(self, pattern: Formula, subst: Dict[str, Binding]) -> Formula:
        for sub in subformulae(pattern):
            if isinstance(sub, Meta) and sub.name not in subst:
                subst[sub.name] = self.formula()
        return substitute_formula(pattern, subst)

    def term(self, source: Formula) -> Tuple[ArrowTerm, Formula]:
        return gen.random_term(source, self.rng, self.depth, self.signature, self.pool)

    def fill(self, hole: Hole, subst: Dict[str, Binding]) -> ArrowTerm:
        source = self.ground(hole.source, subst)
        target = substitute_formula(hole.target, subst)
        if isinstance(target, AddUnit):
            inner, inner_target = self.term(source)
            return Comp(ToTerminal(inner_target), inner)
        if _is_ground(target):
            return self._exact(source, target)
        if isinstance(target, Prod):
            left, left_target = self.term(source)
            right, right_target = self.term(source)
            term: ArrowTerm = Pair(left, right)
            match_formula(target, Prod(left_target, right_target), subst)
            return term
        for _ in range(_EXACT_ATTEMPTS):
            term, reached = self.term(source)
            trial = dict(subst)
            if match_formula(target, reached, trial):
                subst.update(trial)
                return term
        raise EncodingError(f"no filler for {hole.name} from {render(source)}")

    def _exact(self, source: Formula, target: Formula) -> ArrowTerm:
        if source == target:
            return Id(source)
        for _ in range(_EXACT_ATTEMPTS):
            term, reached = self.term(source)
            if reached == target:
                return term
        if self.signature.allow_additive:
            return _zero_map(source, target)
        raise EncodingError(f"no term {render(source)} ⊢ {render(target)}")

    def instance(self, schema: AxiomSchema) -> Equation:
        subst: Dict[str, Binding] = {}
        for hole in schema.holes:
            subst[hole.name] = self.fill(hole, subst)
        for name in schema.metavariables:
            if name not in subst:
                subst[name] = self.formula()
        return instantiate(schema, subst)


def _draw(schema: AxiomSchema, theory: Theory, size_bound: int, rng: random.Random,
          depth: int) -> Equation:
    """Instance of ``schema``, drawing fresh metavariables when a hole has no filler."""
    for _ in range(_REDRAWS - 1):
        try:
            return _Instantiator(theory, size_bound, rng, depth).instance(schema)
        except EncodingError:
            continue
    return _Instantiator(theory, size_bound, rng, depth).instance(schema)


def random_axiom_instances(
    theory: Theory,
    size_bound: int,
    count: int,
    seed: int,
    depth: Optional[int] = None,
) -> List[Equation]:
    """``count`` instances of schemata drawn uniformly from ``axioms(theory)``.

    The same seed always yields the same list.
    """
    if size_bound < 1:
        raise ValueError("size_bound must be at least 1")
    theory = Theory(theory)
    rng = random.Random(seed)
    schemata = axioms(theory)
    depth = settings.RANDOM_TERM_DEPTH if depth is None else depth
    result = []
    for _ in range(count):
        schema = rng.choice(schemata)
        result.append(_draw(schema, theory, size_bound, rng, depth))
    return result


def instances_of(
    schema: AxiomSchema, theory: Theory, size_bound: int, count: int, seed: int
) -> List[Equation]:
    rng = random.Random(seed)
    return [
        _draw(schema, theory, size_bound, rng, settings.RANDOM_TERM_DEPTH)
        for _ in range(count)
    ]


# --- congruence closure ------------------------------------------------------------


def _checked(lhs: ArrowTerm, rhs: ArrowTerm, name: str) -> Equation:
    infer_type(lhs)
    infer_type(rhs)
    return Equation(lhs, rhs, name)


def compose_closure(eq: Equation, h: ArrowTerm) -> Equation:
    """h ∘ lhs = h ∘ rhs."""
    return _checked(Comp(h, eq.lhs), Comp(h, eq.rhs), f"{eq.name}∘" if eq.name else "")


def precompose_closure(eq: Equation, h: ArrowTerm) -> Equation:
    """lhs ∘ h = rhs ∘ h."""
    return _checked(Comp(eq.lhs, h), Comp(eq.rhs, h), f"∘{eq.name}" if eq.name else "")


def tensor_closure(eq: Equation, h: ArrowTerm, on_left: bool = False) -> Equation:
    if on_left:
        return _checked(Tens(h, eq.lhs), Tens(h, eq.rhs), eq.name)
    return _checked(Tens(eq.lhs, h), Tens(eq.rhs, h), eq.name)


def hom_closure(eq: Equation, a: Formula) -> Equation:
    return _checked(HomFun(a, eq.lhs), HomFun(a, eq.rhs), eq.name)


# --- catalog export ------------------------------------------------------------------


def catalog_entries(theory: Theory, ascii: bool = False) -> List[Dict[str, object]]:
    """Plain dictionaries describing every schema of ``theory``."""
    entries = []
    for schema in axioms(theory):
        arrow = infer_type(schema.lhs)
        entries.append(
            {
                "name": schema.name,
                "theory": schema.theory.value,
                "lhs": render_term(schema.lhs, ascii),
                "rhs": render_term(schema.rhs, ascii),
                "type": f"{render(arrow.source, ascii)} "
                f"{'|-' if ascii else '⊢'} {render(arrow.target, ascii)}",
                "holes": [
                    f"{hole.name}: {render(hole.source, ascii)} "
                    f"{'|-' if ascii else '⊢'} {render(hole.target, ascii)}"
                    for hole in schema.holes
                ],
            }
        )
    return entries


def axiom_counts() -> Dict[str, int]:
    return {theory.value: len(axioms(theory)) for theory in Theory}


def schema_letters(equations: Sequence[Equation]) -> List[str]:
    names = set()
    for eq in equations:
        for side in (eq.lhs, eq.rhs):
            for sub in subterms(side):
                for formula in _pattern_formulae(sub):
                    names |= {x.name for x in subformulae(formula) if isinstance(x, Letter)}
    return sorted(names)
