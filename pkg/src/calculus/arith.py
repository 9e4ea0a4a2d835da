"""Arithmetic reading of ∧/⊤/→ formulae.

⊤ is 1, ∧ is multiplication, and m→n is (n+1)^m − 1. Values grow as
towers of exponentials, so every value is an ``ArithValue``: exact when
it is below 2**ARITH_EXACT_BITS, otherwise an expression node whose
residues modulo any M are computed on demand (generalized Euler reduction
for huge exponents). Zero is always exact.
"""
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import totient

from src.calculus.formulas import Conj, Formula, Impl, Letter, Top, letters
from src.calculus.printer import render
from src.core.config import get_settings
from src.core.exceptions import ArithOverflow, FragmentError, UnboundLetter

settings = get_settings()

Assignment = Mapping[str, int]


@dataclass(frozen=True, eq=False)
class ArithValue:
    """A natural number; ``exact`` is None when it is too large to hold."""

    exact: Optional[int]
    op: str = "const"
    args: Tuple["ArithValue", ...] = ()
    _residues: Dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def residue(self, modulus: int) -> int:
        return _residue(self, modulus)

    def fingerprint(self) -> Tuple[int, ...]:
        return tuple(self.residue(m) for m in settings.ARITH_MODULI)

    def key(self) -> str:
        """Canonical text key: the number itself, or ``~`` plus residues."""
        if self.exact is not None:
            return str(self.exact)
        return "~" + ":".join(str(r) for r in self.fingerprint())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArithValue):
            return NotImplemented
        if self.exact is not None or other.exact is not None:
            return self.exact == other.exact
        return self.fingerprint() == other.fingerprint()

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return f"<huge ≡ {self.fingerprint()[0]} mod {settings.ARITH_MODULI[0]}>"


def const(n: int) -> ArithValue:
    if n < 0:
        raise ValueError("arithmetic values are natural numbers")
    if n.bit_length() > settings.ARITH_EXACT_BITS:
        raise ArithOverflow(f"constant of {n.bit_length()} bits exceeds the exact limit")
    return ArithValue(n)


ZERO = const(0)
ONE = const(1)


def multiply(a: ArithValue, b: ArithValue) -> ArithValue:
    if a.exact == 0 or b.exact == 0:
        return ZERO
    if a.exact is not None and b.exact is not None:
        product = a.exact * b.exact
        if product.bit_length() <= settings.ARITH_EXACT_BITS:
            return ArithValue(product)
    return ArithValue(None, "mul", (a, b))


def implication(m: ArithValue, n: ArithValue) -> ArithValue:
    """(n+1)^m − 1 for antecedent value m and consequent value n."""
    if m.exact == 0 or n.exact == 0:
        return ZERO
    if m.exact is not None and n.exact is not None:
        base = n.exact + 1
        # base ≥ 2, so base**m ≥ 2**(m * (bit_length - 1)) ≥ 2**(m * bit_length / 2)
        if m.exact * base.bit_length() <= 2 * settings.ARITH_EXACT_BITS:
            value = base**m.exact - 1
            if value.bit_length() <= settings.ARITH_EXACT_BITS:
                return ArithValue(value)
    return ArithValue(None, "pow", (m, n))


@lru_cache(maxsize=None)
def _totient(modulus: int) -> int:
    return int(totient(modulus))


def _residue(value: ArithValue, modulus: int) -> int:
    cached = value._residues.get(modulus)
    if cached is None:
        cached = value._residues[modulus] = _compute_residue(value, modulus)
    return cached


def _compute_residue(value: ArithValue, modulus: int) -> int:
    if modulus == 1:
        return 0
    if value.exact is not None:
        return value.exact % modulus
    if value.op == "mul":
        a, b = value.args
        return (_residue(a, modulus) * _residue(b, modulus)) % modulus
    m, n = value.args
    base = (_residue(n, modulus) + 1) % modulus
    if m.exact is not None:
        power = pow(base, m.exact, modulus)
    else:
        # m ≥ 2**ARITH_EXACT_BITS ≥ log2(modulus): a**m ≡ a**(m mod φ + φ)
        phi = _totient(modulus)
        power = pow(base, _residue(m, phi) + phi, modulus)
    return (power - 1) % modulus


# --- evaluation ---------------------------------------------------------------


def check_s_fragment(formula: Formula) -> None:
    if not _in_fragment(formula):
        raise FragmentError(f"{render(formula)} is outside the ∧/⊤/→ fragment")


def _in_fragment(formula: Formula) -> bool:
    match formula:
        case Letter() | Top():
            return True
        case Conj(left, right):
            return _in_fragment(left) and _in_fragment(right)
        case Impl(antecedent, consequent):
            return _in_fragment(antecedent) and _in_fragment(consequent)
    return False


def arith_value(
    formula: Formula,
    sigma: Assignment,
    memo: Optional[Dict[Formula, ArithValue]] = None,
) -> ArithValue:
    """Evaluate ``formula`` under ``sigma``, sharing ``memo`` across calls
    that use the same assignment."""
    memo = {} if memo is None else memo
    cached = memo.get(formula)
    if cached is not None:
        return cached
    match formula:
        case Letter(name):
            if name not in sigma:
                raise UnboundLetter(name)
            value = const(sigma[name])
        case Top():
            value = ONE
        case Conj(left, right):
            value = multiply(arith_value(left, sigma, memo), arith_value(right, sigma, memo))
        case Impl(antecedent, consequent):
            value = implication(
                arith_value(antecedent, sigma, memo), arith_value(consequent, sigma, memo)
            )
        case _:
            raise FragmentError(f"{render(formula)} is outside the ∧/⊤/→ fragment")
    memo[formula] = value
    return value


def arith_eval(formula: Formula, sigma: Assignment) -> int:
    """Exact natural-number value; ArithOverflow past the exact limit."""
    check_s_fragment(formula)
    value = arith_value(formula, sigma)
    if value.exact is None:
        raise ArithOverflow(
            f"{render(formula)} exceeds {settings.ARITH_EXACT_BITS} bits; "
            f"fingerprint {value.fingerprint()}"
        )
    return value.exact


# --- comparison -----------------------------------------------------------------


@dataclass(frozen=True)
class EqualUpTo:
    bound: int

    @property
    def ok(self) -> bool:
        return True


@dataclass(frozen=True)
class Differ:
    sigma: Dict[str, int]
    left: str
    right: str

    @property
    def ok(self) -> bool:
        return False


ArithVerdict = Union[EqualUpTo, Differ]


def assignments(names: Sequence[str], bound: int) -> List[Dict[str, int]]:
    """Every map from ``names`` to [0, bound], lexicographic."""
    return [
        dict(zip(names, values))
        for values in itertools.product(range(bound + 1), repeat=len(names))
    ]


def arith_equal(a: Formula, b: Formula, bound: int) -> ArithVerdict:
    """Compare the two values at every assignment with entries in [0, bound]."""
    check_s_fragment(a)
    check_s_fragment(b)
    names = sorted(letters(a) | letters(b))
    for sigma in assignments(names, bound):
        left, right = arith_value(a, sigma), arith_value(b, sigma)
        if left != right:
            return Differ(sigma, str(left), str(right))
    return EqualUpTo(bound)


def format_sigma(sigma: Mapping[str, int]) -> str:
    return ",".join(f"{name}={value}" for name, value in sorted(sigma.items()))
