"""Printers for formulae, types and arrow terms.

Output is minimally parenthesized for the grammar in ``parser``: → is
right-associative and binds loosest, then ⊔, ⊓, ∧; the binary
connectives other than → never chain without parentheses. Arrow terms
use ∘ (loosest) and ∧, both right-associative.
"""
from typing import Dict, Tuple

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
)
from src.calculus.terms import (
    PRIMITIVE_NAMES,
    ArrowTerm,
    Comp,
    Copair,
    Hole,
    HomFun,
    Pair,
    Tens,
    subscripts,
)

UNICODE: Dict[str, str] = {
    "conj": "∧",
    "impl": "→",
    "prod": "⊓",
    "coprod": "⊔",
    "top": "⊤",
    "add_unit": "⊤ₐ",
    "turnstile": "⊢",
    "comp": "∘",
    "tens": "∧",
}
ASCII: Dict[str, str] = {
    "conj": "/\\",
    "impl": "->",
    "prod": "x",
    "coprod": "+",
    "top": "T",
    "add_unit": "Ta",
    "turnstile": "|-",
    "comp": ".",
    "tens": "*",
}

_LEVEL = {Impl: 1, Coprod: 2, Prod: 3, Conj: 4}
_SYMBOL = {Impl: "impl", Coprod: "coprod", Prod: "prod", Conj: "conj"}


def _level(formula: Formula) -> int:
    return _LEVEL.get(type(formula), 5)


def _operands(formula: Formula) -> Tuple[Formula, Formula]:
    if isinstance(formula, Impl):
        return formula.antecedent, formula.consequent
    return formula.left, formula.right  # type: ignore[union-attr]


def render(formula: Formula, ascii: bool = False) -> str:
    symbols = ASCII if ascii else UNICODE
    match formula:
        case Letter(name) | Meta(name):
            return name
        case Top():
            return symbols["top"]
        case AddUnit():
            return symbols["add_unit"]
    level = _level(formula)
    left, right = _operands(formula)
    left_text = render(left, ascii)
    right_text = render(right, ascii)
    if _level(left) <= level:
        left_text = f"({left_text})"
    # → is right-associative; everything else refuses to chain.
    if _level(right) < level or (_level(right) == level and level != 1):
        right_text = f"({right_text})"
    return f"{left_text} {symbols[_SYMBOL[type(formula)]]} {right_text}"


def render_type(source: Formula, target: Formula, ascii: bool = False) -> str:
    symbols = ASCII if ascii else UNICODE
    return f"{render(source, ascii)} {symbols['turnstile']} {render(target, ascii)}"


def _term_level(term: ArrowTerm) -> int:
    if isinstance(term, Comp):
        return 1
    if isinstance(term, Tens):
        return 2
    return 3


def render_term(term: ArrowTerm, ascii: bool = False) -> str:
    symbols = ASCII if ascii else UNICODE
    match term:
        case Hole(name, _, _):
            return name
        case HomFun(a, f):
            return f"({render(a, ascii)} {symbols['impl']} {render_term(f, ascii)})"
        case Pair(f, g):
            return f"pair({render_term(f, ascii)}, {render_term(g, ascii)})"
        case Copair(f, g):
            return f"copair({render_term(f, ascii)}, {render_term(g, ascii)})"
        case Comp(f, g) | Tens(f, g):
            level = _term_level(term)
            symbol = symbols["comp"] if isinstance(term, Comp) else symbols["tens"]
            left, right = render_term(f, ascii), render_term(g, ascii)
            if _term_level(f) <= level:
                left = f"({left})"
            if _term_level(g) < level:
                right = f"({right})"
            return f"{left} {symbol} {right}"
    args = ", ".join(render(formula, ascii) for formula in subscripts(term))
    return f"{PRIMITIVE_NAMES[type(term)]}[{args}]"
