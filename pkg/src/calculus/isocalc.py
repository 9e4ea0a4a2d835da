"""The isomorphism calculus S over ∧, ⊤ and →.

S is the commutative-monoid theory of ∧/⊤ together with ⊤→C = C and
(A∧B)→C = B→(A→C). Every formula has a canonical normal form: a sorted
multiset of factors, each a letter or an implication whose antecedent is
a single factor. Currying merges an implication with a body that is
itself a single implication, so a chain of antecedents is one sorted
multiset. Both rewrites shrink a well-founded measure (total antecedent
size, then tree size), so normalization terminates.

This module also holds the pure parts of the conjecture scan and of the
bounded isomorphism search; orchestration lives in ``src.services``.
"""
import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import polars as pl

from src.calculus import enumerate as gen
from src.calculus.arith import ArithValue, arith_value, assignments, check_s_fragment
from src.calculus.formulas import (
    TOP,
    Conj,
    Formula,
    Impl,
    Letter,
    Top,
    conj_all,
    diversified,
    letters,
    size,
)
from src.calculus.pointed import SetModel, small_valuations
from src.calculus.printer import render
from src.calculus.terms import ArrowTerm, Comp, Id
from src.core.config import get_settings
from src.core.exceptions import ArithOverflow, FragmentError, ModelTooLarge

settings = get_settings()


@dataclass(frozen=True)
class NImpl:
    antecedent: "Factor"
    body: "NormalForm"


Factor = Union[str, NImpl]
NormalForm = Tuple[Factor, ...]


def _key(factor: Factor) -> tuple:
    if isinstance(factor, str):
        return (0, factor)
    return (1, _key(factor.antecedent), tuple(_key(x) for x in factor.body))


def _sorted(factors: Iterable[Factor]) -> NormalForm:
    return tuple(sorted(factors, key=_key))


@lru_cache(maxsize=65536)
def _normalize(formula: Formula) -> NormalForm:
    match formula:
        case Letter(name):
            return (name,)
        case Top():
            return ()
        case Conj(left, right):
            return _sorted(_normalize(left) + _normalize(right))
        case Impl(antecedent, consequent):
            antecedents = list(_normalize(antecedent))
            body = _normalize(consequent)
            while len(body) == 1 and isinstance(body[0], NImpl):
                antecedents.append(body[0].antecedent)
                body = body[0].body
            if not antecedents:
                return body
            for factor in reversed(_sorted(antecedents)):
                body = (NImpl(factor, body),)
            return body
    raise FragmentError(f"{render(formula)} is outside the ∧/⊤/→ fragment")


def normalize_S(formula: Formula) -> NormalForm:
    check_s_fragment(formula)
    return _normalize(formula)


def s_equal(a: Formula, b: Formula) -> bool:
    return normalize_S(a) == normalize_S(b)


def factor_formula(factor: Factor) -> Formula:
    if isinstance(factor, str):
        return Letter(factor)
    return Impl(factor_formula(factor.antecedent), to_formula(factor.body))


def to_formula(nf: NormalForm) -> Formula:
    """A formula whose normal form is ``nf``: right-nested ∧, ⊤ if empty."""
    return conj_all([factor_formula(f) for f in nf])


def render_nf(nf: NormalForm, ascii: bool = False) -> str:
    return render(to_formula(nf), ascii)


# --- conjecture scan ------------------------------------------------------------


@dataclass(frozen=True)
class FormulaKeys:
    """Classification keys of one scanned formula."""

    text: str
    nf: str
    signature: str
    cardinality: str
    diversified: bool
    values: Tuple[str, ...] = field(repr=False)


def formula_keys(
    formulae: Sequence[Formula], names: Sequence[str], bound: int
) -> List[FormulaKeys]:
    """Normal form, arithmetic signature over [0, bound] and model
    cardinality signature (sizes 1..4, i.e. values 0..3) of each formula.

    Subformula values are shared through one memo per assignment.
    """
    top = max(bound, 3)
    family = assignments(names, top)
    in_bound = [i for i, s in enumerate(family) if max(s.values(), default=0) <= bound]
    in_model = [i for i, s in enumerate(family) if max(s.values(), default=0) <= 3]
    memos: List[Dict[Formula, ArithValue]] = [{} for _ in family]
    result = []
    for formula in formulae:
        keys = tuple(
            arith_value(formula, sigma, memo).key() for sigma, memo in zip(family, memos)
        )
        values = tuple(keys[i] for i in in_bound)
        result.append(
            FormulaKeys(
                text=render(formula, ascii=True),
                nf=render_nf(normalize_S(formula), ascii=True),
                signature="|".join(values),
                cardinality="|".join(keys[i] for i in in_model),
                diversified=diversified(formula),
                values=values,
            )
        )
    return result


@dataclass(frozen=True)
class ScanPair:
    left: str
    right: str
    kind: str
    sigma: Optional[Dict[str, int]] = None
    diversified: bool = False


@dataclass
class ScanReport:
    max_size: int
    letters: Tuple[str, ...]
    bound: int
    seed: int
    formulae: int
    sampled: bool
    nf_classes: int
    signature_classes: int
    unsound: List[ScanPair]
    candidates: List[ScanPair]
    cardinality_only: List[ScanPair]

    @property
    def diversified_discrepancies(self) -> List[ScanPair]:
        return [p for p in self.unsound + self.candidates if p.diversified]

    def lines(self) -> List[str]:
        out = [
            f"formulae {self.formulae}{' (sampled)' if self.sampled else ''} "
            f"letters {','.join(self.letters)} max-size {self.max_size} bound {self.bound}",
            f"nf-classes {self.nf_classes} signature-classes {self.signature_classes}",
        ]
        for pair in self.unsound:
            out.append(
                f"UNSOUND {pair.left}  ~  {pair.right}  at "
                + ",".join(f"{k}={v}" for k, v in sorted((pair.sigma or {}).items()))
            )
        for pair in self.candidates:
            tag = " diversified" if pair.diversified else ""
            out.append(f"CANDIDATE{tag} {pair.left}  ~  {pair.right}")
        out.append(
            f"unsound {len(self.unsound)} candidates {len(self.candidates)} "
            f"diversified-discrepancies {len(self.diversified_discrepancies)}"
        )
        return out


def scan_formulae(
    max_size: int,
    names: Sequence[str],
    seed: int,
    diversified_only: bool = False,
    limit: Optional[int] = None,
) -> Tuple[List[Formula], bool]:
    """All ∧/⊤/→ formulae up to ``max_size``, or a seeded sample of
    ``limit`` distinct ones when there are more."""
    limit = limit or settings.SCAN_ENUMERATION_LIMIT
    total = gen.count_formulae(max_size, len(names), diversified_only=diversified_only)
    if total <= limit:
        return gen.enumerate_formulae(max_size, names, diversified_only=diversified_only), False
    rng = random.Random(seed)
    chosen: Dict[Formula, None] = {}
    attempts = 0
    while len(chosen) < limit and attempts < 20 * limit:
        attempts += 1
        formula = gen.random_formula(rng, names, max_size, gen.SMC)
        if diversified_only and not diversified(formula):
            continue
        chosen.setdefault(formula, None)
    return sorted(chosen, key=lambda f: (size(f), render(f, ascii=True))), True


def _witness(left: FormulaKeys, right: FormulaKeys, family: List[Dict[str, int]]) -> Dict[str, int]:
    for sigma, a, b in zip(family, left.values, right.values):
        if a != b:
            return sigma
    return {}


def classify(
    keys: Sequence[FormulaKeys],
    names: Sequence[str],
    bound: int,
    max_size: int = 0,
    seed: int = 0,
    sampled: bool = False,
) -> ScanReport:
    """Decide every pair through class structure instead of visiting pairs.

    A normal-form class spanning several signatures is an S-soundness
    violation; a signature class spanning several normal-form classes holds
    pairs that are arithmetically equal but not S-equal.
    """
    frame = pl.DataFrame(
        {
            "idx": list(range(len(keys))),
            "text": [k.text for k in keys],
            "nf": [k.nf for k in keys],
            "sig": [k.signature for k in keys],
            "card": [k.cardinality for k in keys],
            "div": [k.diversified for k in keys],
        }
    )
    family = assignments(names, bound)
    if frame.is_empty():
        return ScanReport(max_size, tuple(names), bound, seed, 0, sampled, 0, 0, [], [], [])

    # one representative per (class, subclass), smallest index first
    reps = frame.group_by(["nf", "sig"]).agg(pl.col("idx").min()).sort("idx")
    unsound: List[ScanPair] = []
    for nf, group in _groups(reps, "nf"):
        rows = group["idx"].to_list()
        first = keys[rows[0]]
        for other in rows[1:]:
            right = keys[other]
            unsound.append(
                ScanPair(
                    first.text,
                    right.text,
                    "unsound",
                    _witness(first, right, family),
                    first.diversified and right.diversified,
                )
            )

    by_sig = frame.group_by(["sig", "nf"]).agg(
        pl.col("idx").min(),
        pl.col("div").any().alias("any_div"),
        pl.col("idx").filter(pl.col("div")).min().alias("div_idx"),
    ).sort("idx")
    candidates: List[ScanPair] = []
    for sig, group in _groups(by_sig, "sig"):
        rows = group.to_dicts()
        first = rows[0]
        for other in rows[1:]:
            both_div = first["any_div"] and other["any_div"]
            if both_div:
                left, right = keys[first["div_idx"]], keys[other["div_idx"]]
            else:
                left, right = keys[first["idx"]], keys[other["idx"]]
            candidates.append(ScanPair(left.text, right.text, "candidate", None, bool(both_div)))

    by_card = frame.group_by(["card", "sig"]).agg(pl.col("idx").min()).sort("idx")
    cardinality_only: List[ScanPair] = []
    for card, group in _groups(by_card, "card"):
        rows = group["idx"].to_list()
        for other in rows[1:]:
            cardinality_only.append(
                ScanPair(keys[rows[0]].text, keys[other].text, "cardinality")
            )

    return ScanReport(
        max_size=max_size,
        letters=tuple(names),
        bound=bound,
        seed=seed,
        formulae=len(keys),
        sampled=sampled,
        nf_classes=frame["nf"].n_unique(),
        signature_classes=frame["sig"].n_unique(),
        unsound=unsound,
        candidates=candidates,
        cardinality_only=cardinality_only,
    )


def _groups(frame: pl.DataFrame, column: str) -> List[Tuple[str, pl.DataFrame]]:
    """Groups with more than one row, ordered by their smallest index."""
    out = []
    for (value,), group in frame.group_by([column], maintain_order=True):
        if group.height > 1:
            out.append((value, group.sort("idx")))
    return out


# --- bounded isomorphism search -----------------------------------------------------


@dataclass(frozen=True)
class IsoPair:
    forward: ArrowTerm
    backward: ArrowTerm


def cardinality_mismatch(
    a: Formula, b: Formula, sizes: Sequence[int] = (1, 2, 3)
) -> Optional[Dict[str, int]]:
    """A valuation under which the interpretations differ in size, if any."""
    names = sorted(letters(a) | letters(b))
    for valuation in small_valuations(names, sizes, limit=len(sizes) ** len(names)):
        model = SetModel(valuation)
        try:
            if model.interp(a).size != model.interp(b).size:
                return {name: obj.size for name, obj in valuation.items()}
        except (ModelTooLarge, ArithOverflow):
            continue
    return None


def _antecedent_pool(a: Formula, b: Formula) -> Tuple[Formula, ...]:
    pool: List[Formula] = [TOP]
    for formula in (a, b):
        for sub in _subformulae_of_impls(formula):
            if sub not in pool:
                pool.append(sub)
    for name in sorted(letters(a) | letters(b)):
        if Letter(name) not in pool:
            pool.append(Letter(name))
    return tuple(pool)


def _subformulae_of_impls(formula: Formula) -> Iterable[Formula]:
    if isinstance(formula, Impl):
        yield formula.antecedent
        yield from _subformulae_of_impls(formula.consequent)
    elif isinstance(formula, Conj):
        yield from _subformulae_of_impls(formula.left)
        yield from _subformulae_of_impls(formula.right)


def inverse_on_models(
    forward: ArrowTerm, backward: ArrowTerm, names: Sequence[str], sizes: Sequence[int] = (1, 2, 3)
) -> bool:
    """Both composites evaluate to identities under every valuation tried."""
    there, back = Comp(backward, forward), Comp(forward, backward)
    tried = 0
    for valuation in small_valuations(names, sizes, limit=len(sizes) ** len(names)):
        model = SetModel(valuation)
        try:
            if not (model.eval(there).is_identity() and model.eval(back).is_identity()):
                return False
        except (ModelTooLarge, ArithOverflow):
            continue
        tried += 1
    return tried > 0


def bounded_iso_search(
    a: Formula,
    b: Formula,
    depth: int,
    signature: gen.Signature = gen.RMC,
    limit: Optional[int] = None,
) -> Optional[IsoPair]:
    """Look for mutually inverse chains of at most ``depth`` steps.

    Finding nothing does not show the formulae are not isomorphic.
    """
    check_s_fragment(a)
    check_s_fragment(b)
    depth = min(depth, settings.ISO_SEARCH_MAX_DEPTH)
    limit = limit or settings.ISO_SEARCH_MAX_CANDIDATES
    if cardinality_mismatch(a, b) is not None:
        return None
    if a == b:
        return IsoPair(Id(a), Id(b))
    pool = _antecedent_pool(a, b)
    forwards = gen.reachable(a, depth, signature, pool, limit).get(b, [])
    if not forwards:
        return None
    backwards = gen.reachable(b, depth, signature, pool, limit).get(a, [])
    names = sorted(letters(a) | letters(b))
    for forward, backward in itertools.product(forwards, backwards):
        if inverse_on_models(forward, backward, names):
            return IsoPair(forward, backward)
    return None
