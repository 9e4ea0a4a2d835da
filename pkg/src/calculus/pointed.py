"""Finite pointed sets and point-preserving maps.

Element 0 of every pointed set is the point ∗. Compound objects use fixed
integer encodings so that maps can be compared as tables:

* smash ``a ⊗ b``: non-point pair (x, y) is ``(x-1)*(|b|-1) + (y-1) + 1``;
* product ``a ⊠ b``: the smash block, then (x, ∗) for x ≥ 1, then (∗, y);
* coproduct ``a ⊞ b``: left elements keep their index, right element y
  becomes ``|a|-1 + y``;
* internal hom ``a → b``: a point-preserving map is its value vector on
  the non-point inputs read as a base-|b| numeral, first input most
  significant. The constant-∗ map is numeral 0, which is also the point.

Tables are numpy int64 vectors.
"""
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.calculus.formulas import (
    AddUnit,
    Conj,
    Coprod,
    Formula,
    Impl,
    Letter,
    Meta,
    Prod,
    Top,
    letters,
)
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
    term_formulae,
)
from src.calculus.typecheck import infer_type
from src.core.config import get_settings
from src.core.exceptions import (
    ArithOverflow,
    EncodingError,
    FragmentError,
    InvalidSize,
    ModelTooLarge,
    TypeMismatch,
    UnboundLetter,
)

settings = get_settings()


@dataclass(frozen=True)
class PointedSet:
    size: int
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("a pointed set has at least its point")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("one label per element")

    @property
    def non_point(self) -> int:
        return self.size - 1

    def label(self, element: int) -> str:
        if self.labels is not None:
            return self.labels[element]
        return "∗" if element == 0 else str(element)


I = PointedSet(1, ("∗",))
TOP_OBJECT = PointedSet(2, ("∗", "x"))

Valuation = Mapping[str, PointedSet]


def valuation_from_sizes(sizes: Mapping[str, int]) -> Dict[str, PointedSet]:
    for name, size in sizes.items():
        if size < 1:
            raise InvalidSize(f"letter {name!r} has size {size}; a pointed set has at least the point")
    return {name: PointedSet(size) for name, size in sizes.items()}


def valuation_sizes(valuation: Valuation) -> Dict[str, int]:
    return {name: obj.size for name, obj in sorted(valuation.items())}


# --- element encodings -------------------------------------------------------

IntArray = np.ndarray


def smash_encode(x: IntArray, y: IntArray, right_size: int) -> IntArray:
    x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
    code = (x - 1) * (right_size - 1) + (y - 1) + 1
    return np.where((x > 0) & (y > 0), code, 0)


def smash_decode(i: IntArray, right_size: int) -> Tuple[IntArray, IntArray]:
    i = np.asarray(i, dtype=np.int64)
    width = max(right_size - 1, 1)
    x = np.where(i > 0, (i - 1) // width + 1, 0)
    y = np.where(i > 0, (i - 1) % width + 1, 0)
    return x, y


def product_encode(x: IntArray, y: IntArray, left_size: int, right_size: int) -> IntArray:
    x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
    block = (left_size - 1) * (right_size - 1)
    return np.select(
        [(x > 0) & (y > 0), x > 0, y > 0],
        [smash_encode(x, y, right_size), block + x, block + (left_size - 1) + y],
        default=0,
    )


def product_decode(
    i: IntArray, left_size: int, right_size: int
) -> Tuple[IntArray, IntArray]:
    i = np.asarray(i, dtype=np.int64)
    block = (left_size - 1) * (right_size - 1)
    sx, sy = smash_decode(np.minimum(i, block), right_size)
    in_left = (i > block) & (i <= block + left_size - 1)
    in_right = i > block + left_size - 1
    x = np.select([i == 0, i <= block, in_left], [0, sx, i - block], default=0)
    y = np.select(
        [i == 0, i <= block, in_right],
        [0, sy, i - block - (left_size - 1)],
        default=0,
    )
    return x, y


def _powers(base: int, length: int) -> IntArray:
    return base ** np.arange(length - 1, -1, -1, dtype=np.int64)


def hom_digits(h: IntArray, dom_size: int, cod_size: int) -> IntArray:
    """Value vectors (one row per element) of internal-hom elements."""
    h = np.asarray(h, dtype=np.int64)
    return (h[:, None] // _powers(cod_size, dom_size - 1)[None, :]) % cod_size


def hom_encode(values: IntArray, cod_size: int) -> IntArray:
    values = np.asarray(values, dtype=np.int64)
    if values.shape[-1] == 0:
        return np.zeros(values.shape[:-1], dtype=np.int64)
    return values @ _powers(cod_size, values.shape[-1])


# --- objects -------------------------------------------------------------------


def _checked_power(base: int, exponent: int) -> int:
    if exponent * base.bit_length() > settings.ARITH_EXACT_BITS:
        raise ModelTooLarge(f"{base}^{exponent} exceeds the exact size limit")
    return base**exponent


def smash(a: PointedSet, b: PointedSet) -> PointedSet:
    return PointedSet(a.non_point * b.non_point + 1)


def internal_hom(a: PointedSet, b: PointedSet) -> PointedSet:
    return PointedSet(_checked_power(b.size, a.non_point))


def product(a: PointedSet, b: PointedSet) -> PointedSet:
    return PointedSet(a.size * b.size)


def coproduct(a: PointedSet, b: PointedSet) -> PointedSet:
    return PointedSet(a.non_point + b.non_point + 1)


def iso_check(a: PointedSet, b: PointedSet) -> bool:
    """Finite pointed sets are isomorphic exactly when equinumerous."""
    return a.size == b.size


# --- maps ----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PointedMap:
    dom: PointedSet
    cod: PointedSet
    table: IntArray

    def __post_init__(self) -> None:
        table = np.array(self.table, dtype=np.int64)
        if table.shape != (self.dom.size,):
            raise ValueError(
                f"table has {table.shape[0] if table.ndim else 0} entries, "
                f"domain has {self.dom.size}"
            )
        if table.size and (table.min() < 0 or table.max() >= self.cod.size):
            raise ValueError("table value outside the codomain")
        if table[0] != 0:
            raise ValueError("a point-preserving map sends ∗ to ∗")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def __call__(self, element: int) -> int:
        return int(self.table[element])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointedMap):
            return NotImplemented
        return map_equal(self, other)

    def __hash__(self) -> int:
        return hash((self.dom.size, self.cod.size, self.table.tobytes()))

    def after(self, other: "PointedMap") -> "PointedMap":
        """``self ∘ other``."""
        if other.cod.size != self.dom.size:
            raise TypeMismatch(
                "maps are not composable", expected=self.dom.size, found=other.cod.size
            )
        return PointedMap(other.dom, self.cod, self.table[other.table])

    def is_identity(self) -> bool:
        return self.dom.size == self.cod.size and bool(
            np.array_equal(self.table, np.arange(self.dom.size))
        )

    def lines(self) -> List[str]:
        return [
            f"{self.dom.label(i)} -> {self.cod.label(int(j))}"
            for i, j in enumerate(self.table)
        ]


def identity(a: PointedSet) -> PointedMap:
    return PointedMap(a, a, np.arange(a.size))


def constant_point(a: PointedSet, b: PointedSet) -> PointedMap:
    return PointedMap(a, b, np.zeros(a.size, dtype=np.int64))


def all_maps(a: PointedSet, b: PointedSet) -> Iterator[PointedMap]:
    """Every point-preserving map a → b, in internal-hom order."""
    for values in itertools.product(range(b.size), repeat=a.non_point):
        yield PointedMap(a, b, np.array((0,) + values, dtype=np.int64))


def map_equal(f: PointedMap, g: PointedMap) -> bool:
    if f.dom.size != g.dom.size or f.cod.size != g.cod.size:
        raise TypeMismatch(
            "maps of different shapes",
            expected=(f.dom.size, f.cod.size),
            found=(g.dom.size, g.cod.size),
        )
    return bool(np.array_equal(f.table, g.table))


def hom_element(f: PointedMap) -> int:
    """Encode a map as an element of ``internal_hom(f.dom, f.cod)``."""
    return int(hom_encode(f.table[1:], f.cod.size))


def hom_decode(a: PointedSet, b: PointedSet, element: int) -> PointedMap:
    """The map a → b named by a non-point element of ``internal_hom(a, b)``."""
    hom = internal_hom(a, b)
    if not 0 < element < hom.size:
        raise EncodingError(f"{element} is not a non-point element of a → b")
    digits = hom_digits(np.array([element]), a.size, b.size)[0]
    return PointedMap(a, b, np.concatenate(([0], digits)))


def tensor_maps(f: PointedMap, g: PointedMap) -> PointedMap:
    """f ⊗ g on smash products; a pair collapses when either side hits ∗."""
    dom = smash(f.dom, g.dom)
    x, y = smash_decode(np.arange(dom.size), g.dom.size)
    table = smash_encode(f.table[x], g.table[y], g.cod.size)
    return PointedMap(dom, smash(f.cod, g.cod), table)


def smash_projection(index: int, a: PointedSet, b: PointedSet) -> PointedMap:
    if index not in (1, 2):
        raise ValueError("projection index is 1 or 2")
    dom = smash(a, b)
    x, y = smash_decode(np.arange(dom.size), b.size)
    return PointedMap(dom, a if index == 1 else b, x if index == 1 else y)


# --- interpretation ------------------------------------------------------------


class SetModel:
    """Interpretation of formulae and arrow terms under one valuation.

    Multiplicative ⊤ is the two-element set I ∪ {x}; ⊤ₐ is I, which is both
    terminal and initial. Sizes are memoized per formula.
    """

    def __init__(self, valuation: Valuation):
        for name, obj in valuation.items():
            if obj.size > settings.RELCAT_SIZE_CAP:
                raise ModelTooLarge(
                    f"{name} has size {obj.size}, above the cap {settings.RELCAT_SIZE_CAP}"
                )
        self.valuation = dict(valuation)
        self._objects: Dict[Formula, PointedSet] = {}
        self._maps: Dict[ArrowTerm, PointedMap] = {}

    def interp(self, formula: Formula) -> PointedSet:
        cached = self._objects.get(formula)
        if cached is not None:
            return cached
        match formula:
            case Letter(name):
                if name not in self.valuation:
                    raise UnboundLetter(name)
                obj = self.valuation[name]
            case Top():
                obj = TOP_OBJECT
            case AddUnit():
                obj = I
            case Conj(left, right):
                obj = smash(self.interp(left), self.interp(right))
            case Impl(antecedent, consequent):
                obj = internal_hom(self.interp(antecedent), self.interp(consequent))
            case Prod(left, right):
                obj = product(self.interp(left), self.interp(right))
            case Coprod(left, right):
                obj = coproduct(self.interp(left), self.interp(right))
            case Meta(name):
                raise FragmentError(f"schema metavariable {name} has no interpretation")
            case _:
                raise TypeError(f"not a formula: {formula!r}")
        self._objects[formula] = obj
        return obj

    def _sized(self, formula: Formula) -> int:
        size = self.interp(formula).size
        if size > settings.MAX_TABLE_SIZE:
            raise ModelTooLarge(
                f"object of size {size} exceeds MAX_TABLE_SIZE={settings.MAX_TABLE_SIZE}"
            )
        return size

    def eval(self, term: ArrowTerm) -> PointedMap:
        cached = self._maps.get(term)
        if cached is not None:
            return cached
        arrow_type = infer_type(term)
        dom_size = self._sized(arrow_type.source)
        cod_size = self._sized(arrow_type.target)
        table = self._table(term, dom_size)
        result = PointedMap(PointedSet(dom_size), PointedSet(cod_size), table)
        self._maps[term] = result
        return result

    def _table(self, term: ArrowTerm, n: int) -> IntArray:
        size = self._sized
        i = np.arange(n, dtype=np.int64)
        match term:
            case Id(_):
                return i
            case BAssocR(_, b, c):
                x, yz = smash_decode(i, size(Conj(b, c)))
                y, z = smash_decode(yz, size(c))
                return smash_encode(smash_encode(x, y, size(b)), z, size(c))
            case BAssocL(_, b, c):
                xy, z = smash_decode(i, size(c))
                x, y = smash_decode(xy, size(b))
                return smash_encode(x, smash_encode(y, z, size(c)), size(Conj(b, c)))
            case CSym(a, b):
                x, y = smash_decode(i, size(b))
                return smash_encode(y, x, size(a))
            case DUnitR(_):
                x, _ = smash_decode(i, 2)
                return x
            case DUnitL(_):
                return smash_encode(i, np.ones_like(i), 2)
            case WDiag(a):
                return smash_encode(i, i, size(a))
            case Eps(a, b):
                a_size, b_size = size(a), size(b)
                x, h = smash_decode(i, size(Impl(a, b)))
                shift = np.maximum(a_size - 1 - x, 0)
                value = (h // np.power(b_size, shift, dtype=np.int64)) % b_size
                return np.where(x > 0, value, 0)
            case Eta(a, b):
                a_size, b_size = size(a), size(b)
                xs = np.arange(1, a_size, dtype=np.int64)
                pairs = smash_encode(xs[None, :], i[:, None], b_size)
                return hom_encode(pairs, size(Conj(a, b)))
            case HomFun(a, f):
                inner = self.eval(f)
                digits = hom_digits(i, size(a), inner.dom.size)
                return hom_encode(inner.table[digits], inner.cod.size)
            case Comp(f, g):
                return self.eval(f).table[self.eval(g).table]
            case Tens(f, g):
                fm, gm = self.eval(f), self.eval(g)
                x, y = smash_decode(i, gm.dom.size)
                return smash_encode(fm.table[x], gm.table[y], gm.cod.size)
            case Proj1(a, b):
                return product_decode(i, size(a), size(b))[0]
            case Proj2(a, b):
                return product_decode(i, size(a), size(b))[1]
            case Pair(f, g):
                fm, gm = self.eval(f), self.eval(g)
                return product_encode(fm.table, gm.table, fm.cod.size, gm.cod.size)
            case Inj1(_, _):
                return i
            case Inj2(a, _):
                return np.where(i > 0, size(a) - 1 + i, 0)
            case Copair(f, g):
                fm, gm = self.eval(f), self.eval(g)
                split = fm.dom.size - 1
                left = fm.table[np.minimum(i, split)]
                right = gm.table[np.clip(i - split, 0, gm.dom.size - 1)]
                return np.where(i <= split, left, right)
            case ToTerminal(_) | FromInitial(_):
                return np.zeros(n, dtype=np.int64)
            case Hole(name, _, _):
                raise FragmentError(f"term metavariable {name} has no interpretation")
        raise EncodingError(f"no interpretation for {term!r}")


def interp_formula(formula: Formula, valuation: Valuation) -> PointedSet:
    return SetModel(valuation).interp(formula)


def eval_term(term: ArrowTerm, valuation: Valuation) -> PointedMap:
    return SetModel(valuation).eval(term)


# --- equation checking ---------------------------------------------------------


@dataclass(frozen=True)
class Holds:
    checked: int
    skipped: int = 0
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return True


@dataclass(frozen=True)
class Fails:
    valuation: Dict[str, int]
    element: int
    lhs_value: int
    rhs_value: int

    @property
    def ok(self) -> bool:
        return False


Verdict = Union[Holds, Fails]


def equation_letters(equation: Equation) -> List[str]:
    names: set = set()
    for term in (equation.lhs, equation.rhs):
        for formula in term_formulae(term):
            names |= letters(formula)
    return sorted(names)


def full_family_size(names: Sequence[str], sizes: Optional[Sequence[int]] = None) -> int:
    return len(set(sizes or settings.CHECK_SIZES)) ** len(names)


def small_valuations(
    names: Sequence[str],
    sizes: Optional[Sequence[int]] = None,
    limit: Optional[int] = None,
    seed: int = 0,
) -> List[Dict[str, PointedSet]]:
    """Assignments of ``sizes`` to ``names`` in lexicographic order.

    When the whole product has more than ``limit`` rows, every letter still
    takes every size: the constant rows come first, then the cyclic shifts
    of ``sizes``, then rows drawn with ``seed`` until the limit is reached.
    """
    sizes = list(dict.fromkeys(sizes or settings.CHECK_SIZES))
    limit = limit or settings.CHECK_MAX_VALUATIONS
    n = len(names)
    if len(sizes) ** n <= limit:
        family = list(itertools.product(sizes, repeat=n))
    else:
        chosen = dict.fromkeys(tuple([s] * n) for s in sizes)
        for shift in range(len(sizes)):
            chosen.setdefault(tuple(sizes[(i + shift) % len(sizes)] for i in range(n)))
        rng = np.random.default_rng(seed)
        for _ in range(20 * limit):
            if len(chosen) >= limit:
                break
            chosen.setdefault(tuple(int(s) for s in rng.choice(sizes, size=n)))
        rank = {s: k for k, s in enumerate(sizes)}
        family = sorted(list(chosen)[:limit], key=lambda row: [rank[s] for s in row])
    return [valuation_from_sizes(dict(zip(names, combo))) for combo in family]


def check_equation(equation: Equation, valuations: Sequence[Valuation]) -> Verdict:
    """Evaluate both sides under each valuation and report the first mismatch.

    Valuations whose interpreted objects exceed the table limit are skipped
    and counted.
    """
    lhs, rhs = equation.lhs, equation.rhs
    left_type, right_type = infer_type(lhs), infer_type(rhs)
    if left_type != right_type:
        raise TypeMismatch(
            "sides of the equation have different types",
            expected=left_type,
            found=right_type,
        )
    checked = skipped = 0
    for valuation in valuations:
        model = SetModel(valuation)
        try:
            left, right = model.eval(lhs), model.eval(rhs)
        except (ModelTooLarge, ArithOverflow):
            skipped += 1
            continue
        checked += 1
        differ = np.flatnonzero(left.table != right.table)
        if differ.size:
            element = int(differ[0])
            return Fails(
                valuation_sizes(valuation),
                element,
                left(element),
                right(element),
            )
    return Holds(checked, skipped)


# --- non-naturality of smash projections ---------------------------------------


@dataclass(frozen=True)
class NaturalityWitness:
    """proj ∘ (f ⊗ g) and f ∘ proj (or g ∘ proj) disagree at ``element``."""

    projection: int
    f: PointedMap
    g: PointedMap
    element: int
    lhs: PointedMap
    rhs: PointedMap

    def verify(self) -> bool:
        return (
            self.element != 0
            and self.lhs(self.element) != self.rhs(self.element)
            and not map_equal(self.lhs, self.rhs)
        )


def naturality_failure_witness(max_size: int = 3) -> NaturalityWitness:
    """Search sets of size ≤ ``max_size`` for a failing naturality square."""
    sizes = range(1, max_size + 1)
    for a, a2, b, b2 in itertools.product(sizes, repeat=4):
        A, A2, B, B2 = PointedSet(a), PointedSet(a2), PointedSet(b), PointedSet(b2)
        for f in all_maps(A, A2):
            for g in all_maps(B, B2):
                tensor = tensor_maps(f, g)
                for index, side in ((1, f), (2, g)):
                    lhs = smash_projection(index, A2, B2).after(tensor)
                    rhs = side.after(smash_projection(index, A, B))
                    differ = np.flatnonzero(lhs.table != rhs.table)
                    if differ.size:
                        return NaturalityWitness(index, f, g, int(differ[0]), lhs, rhs)
    raise EncodingError(f"no naturality failure among sets of size ≤ {max_size}")


# --- partial functions ---------------------------------------------------------


@dataclass(frozen=True)
class PartialFn:
    """Single-valued relation; ``graph[i]`` is None where undefined."""

    dom_size: int
    cod_size: int
    graph: Tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        if len(self.graph) != self.dom_size:
            raise ValueError("graph length must equal the domain size")
        if any(v is not None and not 0 <= v < self.cod_size for v in self.graph):
            raise ValueError("graph value outside the codomain")

    def after(self, other: "PartialFn") -> "PartialFn":
        if other.cod_size != self.dom_size:
            raise TypeMismatch(
                "partial functions are not composable",
                expected=self.dom_size,
                found=other.cod_size,
            )
        graph = tuple(None if v is None else self.graph[v] for v in other.graph)
        return PartialFn(other.dom_size, self.cod_size, graph)

    def lines(self) -> List[str]:
        return [
            f"{i} -> {'undef' if v is None else v}" for i, v in enumerate(self.graph)
        ]


def to_partial(f: PointedMap) -> PartialFn:
    graph = tuple(None if v == 0 else int(v) - 1 for v in f.table[1:])
    return PartialFn(f.dom.non_point, f.cod.non_point, graph)


def from_partial(p: PartialFn) -> PointedMap:
    table = [0] + [0 if v is None else v + 1 for v in p.graph]
    return PointedMap(PointedSet(p.dom_size + 1), PointedSet(p.cod_size + 1), np.array(table))


# --- bicartesian, not cartesian --------------------------------------------------


def smash_is_cartesian(a: PointedSet, b: PointedSet) -> bool:
    """Whether ``a ⊗ b`` has the size of the categorical product ``a ⊠ b``."""
    return smash(a, b).size == product(a, b).size


def distribution_counterexample(
    a: PointedSet = PointedSet(2), b: PointedSet = PointedSet(2), c: PointedSet = PointedSet(2)
) -> Tuple[int, int]:
    """Sizes of a ⊠ (b ⊞ c) and (a ⊠ b) ⊞ (a ⊠ c)."""
    return product(a, coproduct(b, c)).size, coproduct(product(a, b), product(a, c)).size
