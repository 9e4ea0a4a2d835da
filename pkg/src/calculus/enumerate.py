"""Formula and arrow-term generation.

Exhaustive formula enumeration (optionally restricted to diversified
formulae), exact counting for the sampling decision, seeded random
formulae, and one-step rewrites ("steps") of a source formula used to
build random terms and to search for isomorphisms.
"""
import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.calculus.formulas import (
    ADD_UNIT,
    TOP,
    Conj,
    Coprod,
    Formula,
    Impl,
    Letter,
    Prod,
    diversified,
)
from src.calculus.terms import (
    ArrowTerm,
    BAssocL,
    BAssocR,
    Comp,
    CSym,
    DUnitL,
    DUnitR,
    Eps,
    Eta,
    HomFun,
    Id,
    Inj1,
    Proj1,
    Proj2,
    Tens,
    ToTerminal,
    WDiag,
)

Step = Tuple[ArrowTerm, Formula]


@dataclass(frozen=True)
class Signature:
    """Which arrows and connectives a generator may use."""

    allow_w: bool = False
    allow_closed: bool = False
    allow_additive: bool = False

    @property
    def connectives(self) -> Tuple[type, ...]:
        result: Tuple[type, ...] = (Conj,)
        if self.allow_closed:
            result += (Impl,)
        if self.allow_additive:
            result += (Prod, Coprod)
        return result

    @property
    def units(self) -> Tuple[Formula, ...]:
        return (TOP, ADD_UNIT) if self.allow_additive else (TOP,)


SYMON = Signature()
REMON = Signature(allow_w=True)
SMC = Signature(allow_closed=True)
RMC = Signature(allow_w=True, allow_closed=True)
ADDITIVE = Signature(allow_w=True, allow_closed=True, allow_additive=True)

S_CONNECTIVES = (Conj, Impl)


# --- enumeration ---------------------------------------------------------------


def enumerate_formulae(
    max_size: int,
    letters: Sequence[str],
    connectives: Sequence[type] = S_CONNECTIVES,
    units: Sequence[Formula] = (TOP,),
    diversified_only: bool = False,
) -> List[Formula]:
    """All formulae with at most ``max_size`` connectives, smallest first."""
    atoms = list(units) + [Letter(name) for name in letters]
    if diversified_only:
        return [f for f, _ in _diversified(max_size, tuple(letters), tuple(connectives), tuple(units))]
    by_size: List[List[Formula]] = [atoms]
    for n in range(1, max_size + 1):
        level: List[Formula] = []
        for left_size in range(n):
            lefts, rights = by_size[left_size], by_size[n - 1 - left_size]
            for cls in connectives:
                level.extend(cls(a, b) for a in lefts for b in rights)
        by_size.append(level)
    return list(itertools.chain.from_iterable(by_size))


def _diversified(
    max_size: int,
    letters: Tuple[str, ...],
    connectives: Tuple[type, ...],
    units: Tuple[Formula, ...],
) -> List[Tuple[Formula, frozenset]]:
    by_size: List[List[Tuple[Formula, frozenset]]] = [
        [(u, frozenset()) for u in units]
        + [(Letter(name), frozenset([name])) for name in letters]
    ]
    for n in range(1, max_size + 1):
        level: List[Tuple[Formula, frozenset]] = []
        for left_size in range(n):
            for cls in connectives:
                for a, used_a in by_size[left_size]:
                    for b, used_b in by_size[n - 1 - left_size]:
                        if not used_a & used_b:
                            level.append((cls(a, b), used_a | used_b))
        by_size.append(level)
    return list(itertools.chain.from_iterable(by_size))


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def count_formulae(
    max_size: int,
    n_letters: int,
    n_connectives: int = 2,
    n_units: int = 1,
    diversified_only: bool = False,
) -> int:
    """Number of formulae ``enumerate_formulae`` would return, without building them."""
    if not diversified_only:
        atoms = n_units + n_letters
        return sum(
            _catalan(n) * n_connectives**n * atoms ** (n + 1)
            for n in range(max_size + 1)
        )
    # counts[n][k]: formulae with n connectives over a fixed set of k letters,
    # each used exactly once
    counts: List[Dict[int, int]] = [{0: n_units, 1: 1}]
    for n in range(1, max_size + 1):
        level: Dict[int, int] = {}
        for left_size in range(n):
            for ka, ca in counts[left_size].items():
                for kb, cb in counts[n - 1 - left_size].items():
                    k = ka + kb
                    level[k] = level.get(k, 0) + n_connectives * comb(k, ka) * ca * cb
        counts.append(level)
    return sum(
        comb(n_letters, k) * count
        for level in counts
        for k, count in level.items()
        if k <= n_letters
    )


# --- random formulae -------------------------------------------------------------


def random_formula(
    rng: random.Random,
    letters: Sequence[str],
    max_size: int,
    signature: Signature = SMC,
) -> Formula:
    """A random formula with between 0 and ``max_size`` connectives."""
    return _random_tree(rng, rng.randint(0, max_size), letters, signature)


def _random_tree(
    rng: random.Random, n: int, letters: Sequence[str], signature: Signature
) -> Formula:
    if n == 0:
        atoms: List[Formula] = [Letter(name) for name in letters] + list(signature.units)
        return rng.choice(atoms)
    left_size = rng.randint(0, n - 1)
    cls = rng.choice(signature.connectives)
    return cls(
        _random_tree(rng, left_size, letters, signature),
        _random_tree(rng, n - 1 - left_size, letters, signature),
    )


def random_diversified(
    rng: random.Random, letters: Sequence[str], max_size: int, attempts: int = 1000
) -> Optional[Formula]:
    for _ in range(attempts):
        formula = random_formula(rng, letters, max_size, SMC)
        if diversified(formula):
            return formula
    return None


# --- one-step rewrites ------------------------------------------------------------


def steps(
    formula: Formula, signature: Signature, pool: Sequence[Formula] = ()
) -> List[Step]:
    """Every single primitive applied at one position of ``formula``.

    Positions are reached through ∧ on either side and through the
    consequent of →. ``pool`` supplies the antecedents η may introduce.
    """
    return list(_steps(formula, signature, tuple(pool)))


def _steps(formula: Formula, signature: Signature, pool: Tuple[Formula, ...]) -> Iterator[Step]:
    yield from _root_steps(formula, signature, pool)
    if isinstance(formula, Conj):
        a, b = formula.left, formula.right
        for term, target in _steps(a, signature, pool):
            yield Tens(term, Id(b)), Conj(target, b)
        for term, target in _steps(b, signature, pool):
            yield Tens(Id(a), term), Conj(a, target)
    elif isinstance(formula, Impl) and signature.allow_closed:
        a, c = formula.antecedent, formula.consequent
        for term, target in _steps(c, signature, pool):
            yield HomFun(a, term), Impl(a, target)


def _root_steps(formula: Formula, signature: Signature, pool: Tuple[Formula, ...]) -> Iterator[Step]:
    if isinstance(formula, Conj):
        a, b = formula.left, formula.right
        if isinstance(b, Conj):
            yield BAssocR(a, b.left, b.right), Conj(Conj(a, b.left), b.right)
        if isinstance(a, Conj):
            yield BAssocL(a.left, a.right, b), Conj(a.left, Conj(a.right, b))
        yield CSym(a, b), Conj(b, a)
        if b == TOP:
            yield DUnitR(a), a
        if signature.allow_closed and isinstance(b, Impl) and b.antecedent == a:
            yield Eps(a, b.consequent), b.consequent
    yield DUnitL(formula), Conj(formula, TOP)
    if signature.allow_w:
        yield WDiag(formula), Conj(formula, formula)
    if signature.allow_closed:
        for antecedent in pool:
            yield Eta(antecedent, formula), Impl(antecedent, Conj(antecedent, formula))
    if signature.allow_additive:
        yield ToTerminal(formula), ADD_UNIT
        if isinstance(formula, Prod):
            yield Proj1(formula.left, formula.right), formula.left
            yield Proj2(formula.left, formula.right), formula.right
        for other in pool:
            yield Inj1(formula, other), Coprod(formula, other)


def chain(terms: Sequence[ArrowTerm]) -> ArrowTerm:
    """Compose ``terms`` in application order (first applied first)."""
    result = terms[0]
    for term in terms[1:]:
        result = Comp(term, result)
    return result


def random_term(
    source: Formula,
    rng: random.Random,
    depth: int,
    signature: Signature,
    pool: Sequence[Formula] = (TOP,),
) -> Tuple[ArrowTerm, Formula]:
    """A random composite of up to ``depth`` steps starting at ``source``."""
    terms: List[ArrowTerm] = []
    current = source
    for _ in range(rng.randint(0, depth)):
        term, current = rng.choice(steps(current, signature, pool))
        terms.append(term)
    if not terms:
        return Id(source), source
    return chain(terms), current


@lru_cache(maxsize=1024)
def _reachable_cached(
    source: Formula, depth: int, signature: Signature, pool: Tuple[Formula, ...], limit: int
) -> Tuple[Tuple[Formula, Tuple[ArrowTerm, ...]], ...]:
    found: Dict[Formula, List[ArrowTerm]] = {source: [Id(source)]}
    first: Dict[Formula, ArrowTerm] = {source: Id(source)}
    frontier = [source]
    total = 1
    for _ in range(depth):
        next_frontier: List[Formula] = []
        for formula in frontier:
            prefix = first[formula]
            for term, target in _steps(formula, signature, pool):
                composite = term if isinstance(prefix, Id) else Comp(term, prefix)
                found.setdefault(target, []).append(composite)
                total += 1
                if target not in first:
                    first[target] = composite
                    next_frontier.append(target)
                if total >= limit:
                    return tuple((f, tuple(ts)) for f, ts in found.items())
        frontier = next_frontier
    return tuple((f, tuple(ts)) for f, ts in found.items())


def reachable(
    source: Formula,
    depth: int,
    signature: Signature,
    pool: Sequence[Formula] = (),
    limit: int = 20_000,
) -> Dict[Formula, List[ArrowTerm]]:
    """Breadth-first chains of at most ``depth`` steps from ``source``.

    Each intermediate formula is expanded once, through the first chain
    that reached it; every chain ending at a formula is kept, shortest
    first. Enumeration stops after ``limit`` chains.
    """
    return {
        formula: list(terms)
        for formula, terms in _reachable_cached(source, depth, signature, tuple(pool), limit)
    }
