"""Arrow-term syntax.

Every constructor is a frozen dataclass; subscripts are formulae and
operands are arrow terms. The surface name of each primitive (used by the
parser and the printer) is kept in ``PRIMITIVES``.
"""
from dataclasses import dataclass, fields
from typing import Dict, Iterator, Tuple, Type, Union

from src.calculus.formulas import Formula, subformulae


@dataclass(frozen=True)
class ArrowType:
    source: Formula
    target: Formula


@dataclass(frozen=True)
class Id:
    a: Formula


@dataclass(frozen=True)
class BAssocR:
    """b→ : A∧(B∧C) ⊢ (A∧B)∧C"""

    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class BAssocL:
    """b← : (A∧B)∧C ⊢ A∧(B∧C)"""

    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class CSym:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class DUnitR:
    """d→ : A∧⊤ ⊢ A"""

    a: Formula


@dataclass(frozen=True)
class DUnitL:
    """d← : A ⊢ A∧⊤"""

    a: Formula


@dataclass(frozen=True)
class WDiag:
    a: Formula


@dataclass(frozen=True)
class Eps:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Eta:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Proj1:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Proj2:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Inj1:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Inj2:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class ToTerminal:
    a: Formula


@dataclass(frozen=True)
class FromInitial:
    a: Formula


@dataclass(frozen=True)
class Comp:
    """f ∘ g: first g, then f."""

    f: "ArrowTerm"
    g: "ArrowTerm"


@dataclass(frozen=True)
class Tens:
    f: "ArrowTerm"
    g: "ArrowTerm"


@dataclass(frozen=True)
class HomFun:
    """A→f"""

    a: Formula
    f: "ArrowTerm"


@dataclass(frozen=True)
class Pair:
    f: "ArrowTerm"
    g: "ArrowTerm"


@dataclass(frozen=True)
class Copair:
    f: "ArrowTerm"
    g: "ArrowTerm"


@dataclass(frozen=True)
class Hole:
    """Typed term metavariable of an axiom schema."""

    name: str
    source: Formula
    target: Formula


Primitive = Union[
    Id, BAssocR, BAssocL, CSym, DUnitR, DUnitL, WDiag, Eps, Eta,
    Proj1, Proj2, Inj1, Inj2, ToTerminal, FromInitial,
]
ArrowTerm = Union[Primitive, Comp, Tens, HomFun, Pair, Copair, Hole]

# Surface name -> constructor taking formula subscripts only.
PRIMITIVES: Dict[str, Type[Primitive]] = {
    "id": Id,
    "bR": BAssocR,
    "bL": BAssocL,
    "c": CSym,
    "dR": DUnitR,
    "dL": DUnitL,
    "w": WDiag,
    "eps": Eps,
    "eta": Eta,
    "p1": Proj1,
    "p2": Proj2,
    "i1": Inj1,
    "i2": Inj2,
    "term": ToTerminal,
    "init": FromInitial,
}
PRIMITIVE_NAMES: Dict[type, str] = {cls: name for name, cls in PRIMITIVES.items()}

# Constructors taking two arrow terms written ``name(f, g)``.
TERM_PAIRINGS: Dict[str, type] = {"pair": Pair, "copair": Copair}

STRUCTURAL = (Id, BAssocR, BAssocL, CSym, DUnitR, DUnitL)
CLOSED = (Eps, Eta, HomFun)
ADDITIVE = (Proj1, Proj2, Inj1, Inj2, ToTerminal, FromInitial, Pair, Copair)


def arity(cls: type) -> int:
    return len(fields(cls))


def subscripts(term: ArrowTerm) -> Tuple[Formula, ...]:
    """Formula subscripts of a primitive, in declaration order."""
    return tuple(getattr(term, f.name) for f in fields(term))


def subterms(term: ArrowTerm) -> Iterator[ArrowTerm]:
    yield term
    if isinstance(term, (Comp, Tens, Pair, Copair)):
        yield from subterms(term.f)
        yield from subterms(term.g)
    elif isinstance(term, HomFun):
        yield from subterms(term.f)


def term_formulae(term: ArrowTerm) -> Iterator[Formula]:
    """Every formula written anywhere in the term, with its subformulae."""
    for sub in subterms(term):
        if isinstance(sub, Hole):
            yield from subformulae(sub.source)
            yield from subformulae(sub.target)
        elif isinstance(sub, HomFun):
            yield from subformulae(sub.a)
        elif not isinstance(sub, (Comp, Tens, Pair, Copair)):
            for formula in subscripts(sub):
                yield from subformulae(formula)


def depth(term: ArrowTerm) -> int:
    if isinstance(term, (Comp, Tens, Pair, Copair)):
        return 1 + max(depth(term.f), depth(term.g))
    if isinstance(term, HomFun):
        return 1 + depth(term.f)
    return 0


@dataclass(frozen=True)
class Equation:
    """``lhs = rhs`` between arrow terms of the same type."""

    lhs: ArrowTerm
    rhs: ArrowTerm
    name: str = ""
