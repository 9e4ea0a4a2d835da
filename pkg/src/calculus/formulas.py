"""Object language: formulae over letters, ⊤, ⊤ₐ, ∧, →, ⊓ and ⊔.

Formulae are immutable trees compared syntactically; nothing here knows
about associativity or units.
"""
from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple, Union


@dataclass(frozen=True)
class Letter:
    name: str


@dataclass(frozen=True)
class Top:
    """Multiplicative unit ⊤."""


@dataclass(frozen=True)
class AddUnit:
    """Additive unit ⊤ₐ, the zero object of the additive structure."""


@dataclass(frozen=True)
class Meta:
    """Metavariable standing for a formula inside an axiom schema."""

    name: str


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Impl:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class Prod:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Coprod:
    left: "Formula"
    right: "Formula"


Formula = Union[Letter, Top, AddUnit, Meta, Conj, Impl, Prod, Coprod]
Binary = (Conj, Impl, Prod, Coprod)

TOP = Top()
ADD_UNIT = AddUnit()


def children(formula: Formula) -> Tuple[Formula, ...]:
    if isinstance(formula, (Conj, Prod, Coprod)):
        return (formula.left, formula.right)
    if isinstance(formula, Impl):
        return (formula.antecedent, formula.consequent)
    return ()


def subformulae(formula: Formula) -> Iterator[Formula]:
    """Pre-order walk over every subformula, the formula itself first."""
    yield formula
    for child in children(formula):
        yield from subformulae(child)


def occurrences(formula: Formula) -> List[Tuple[str, int]]:
    """Letter occurrences in left-to-right order as (letter, position) pairs.

    ⊤ contributes nothing, so ``occurrences(Conj(a, b))`` is the
    concatenation of the occurrences of ``a`` and ``b``.
    """
    names = [f.name for f in subformulae(formula) if isinstance(f, Letter)]
    return [(name, position) for position, name in enumerate(names)]


def letters(formula: Formula) -> Set[str]:
    return {f.name for f in subformulae(formula) if isinstance(f, Letter)}


def size(formula: Formula) -> int:
    """Number of binary connectives."""
    return sum(1 for f in subformulae(formula) if isinstance(f, Binary))


def diversified(formula: Formula) -> bool:
    names = [name for name, _ in occurrences(formula)]
    return len(names) == len(set(names))


def is_multiplicative(formula: Formula) -> bool:
    """True when the formula uses only letters, ⊤, ∧ and →."""
    return all(
        isinstance(f, (Letter, Top, Conj, Impl)) for f in subformulae(formula)
    )


def is_remon(formula: Formula) -> bool:
    """True when the formula uses only letters, ⊤ and ∧."""
    return all(isinstance(f, (Letter, Top, Conj)) for f in subformulae(formula))


def conj_all(factors: List[Formula]) -> Formula:
    """Right-nested conjunction of ``factors``; ⊤ when empty."""
    if not factors:
        return TOP
    result = factors[-1]
    for factor in reversed(factors[:-1]):
        result = Conj(factor, result)
    return result
