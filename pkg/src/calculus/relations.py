"""Relations between finite ordinals as the denotation of ReMon arrows.

An arrow of the ∧/⊤/w fragment relates letter occurrences of its source
to letter occurrences of its target. ⊤ has no occurrences, so the unit
goes to the empty ordinal and d-arrows become bijections.
"""
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple, Union

from src.calculus.formulas import Formula, is_remon, occurrences
from src.calculus.printer import render
from src.calculus.terms import (
    ArrowTerm,
    BAssocL,
    BAssocR,
    Comp,
    CSym,
    DUnitL,
    DUnitR,
    Id,
    Tens,
    WDiag,
    term_formulae,
)
from src.calculus.typecheck import infer_type
from src.core.exceptions import FragmentError

Pairs = FrozenSet[Tuple[int, int]]


@dataclass(frozen=True)
class Relation:
    src_size: int
    tgt_size: int
    pairs: Pairs

    def __post_init__(self) -> None:
        for i, j in self.pairs:
            if not (0 <= i < self.src_size and 0 <= j < self.tgt_size):
                raise ValueError(f"pair ({i}, {j}) out of bounds")

    def then(self, other: "Relation") -> "Relation":
        """Relational composition: first ``self``, then ``other``."""
        if self.tgt_size != other.src_size:
            raise ValueError("relations are not composable")
        pairs = frozenset(
            (i, k) for i, j in self.pairs for j2, k in other.pairs if j == j2
        )
        return Relation(self.src_size, other.tgt_size, pairs)

    def beside(self, other: "Relation") -> "Relation":
        """Disjoint union, ``other`` shifted past ``self``."""
        shifted = {(i + self.src_size, j + self.tgt_size) for i, j in other.pairs}
        return Relation(
            self.src_size + other.src_size,
            self.tgt_size + other.tgt_size,
            frozenset(self.pairs | shifted),
        )

    def sorted_pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.pairs)

    def __str__(self) -> str:
        body = ", ".join(f"{i}-{j}" for i, j in self.sorted_pairs())
        return f"{self.src_size}→{self.tgt_size} {{{body}}}"


def identity_relation(n: int) -> Relation:
    return Relation(n, n, frozenset((i, i) for i in range(n)))


def _count(formula: Formula) -> int:
    return len(occurrences(formula))


def check_remon_fragment(term: ArrowTerm) -> None:
    for formula in term_formulae(term):
        if not is_remon(formula):
            raise FragmentError(
                f"{render(formula)} is outside the ∧/⊤ fragment of ReMon"
            )


def rel_of(term: ArrowTerm) -> Relation:
    check_remon_fragment(term)
    return _rel(term)


def _rel(term: ArrowTerm) -> Relation:
    match term:
        case Id(a):
            return identity_relation(_count(a))
        case BAssocR(a, b, c) | BAssocL(a, b, c):
            return identity_relation(_count(a) + _count(b) + _count(c))
        case DUnitR(a) | DUnitL(a):
            return identity_relation(_count(a))
        case CSym(a, b):
            n, m = _count(a), _count(b)
            pairs = {(i, i + m) for i in range(n)} | {(n + j, j) for j in range(m)}
            return Relation(n + m, n + m, frozenset(pairs))
        case WDiag(a):
            n = _count(a)
            pairs = {(i, i) for i in range(n)} | {(i, i + n) for i in range(n)}
            return Relation(n, 2 * n, frozenset(pairs))
        case Comp(f, g):
            infer_type(term)
            return _rel(g).then(_rel(f))
        case Tens(f, g):
            return _rel(f).beside(_rel(g))
    raise FragmentError(f"{type(term).__name__} is outside the ReMon fragment")


@dataclass(frozen=True)
class Equal:
    relation: Relation


@dataclass(frozen=True)
class Unequal:
    reason: str
    detail: str
    left: Union[Relation, None] = None
    right: Union[Relation, None] = None


def decide_remon_eq(f: ArrowTerm, g: ArrowTerm) -> Union[Equal, Unequal]:
    """Decide f = g in the free relevant monoidal category.

    Equal exactly when the types agree and the occurrence relations agree.
    """
    check_remon_fragment(f)
    check_remon_fragment(g)
    tf, tg = infer_type(f), infer_type(g)
    if tf != tg:
        return Unequal(
            "type",
            f"{render(tf.source)} ⊢ {render(tf.target)} vs "
            f"{render(tg.source)} ⊢ {render(tg.target)}",
        )
    left, right = _rel(f), _rel(g)
    if left != right:
        return Unequal("relation", f"{left} vs {right}", left, right)
    return Equal(left)
