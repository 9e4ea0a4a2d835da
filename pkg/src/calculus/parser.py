"""Surface syntax for formulae, arrow terms and equations.

Unicode and ASCII spellings are interchangeable:

    ∧ /\\    → ->    ⊓ x    ⊔ +    ⊤ T    ⊤ₐ Ta    ∘ .    (tensor) ∧ *

Formula precedence, loosest first: → (right-associative), ⊔, ⊓, ∧. The
connectives ⊔, ⊓ and ∧ take exactly two operands; chains need
parentheses. Arrow terms are primitives ``name[A, ...]``, pairings
``pair(f, g)`` / ``copair(f, g)``, lifts ``(A -> f)``, and the
right-associative composition and tensor operators.
"""
from functools import lru_cache
from typing import Any, List, Tuple

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from src.calculus.formulas import ADD_UNIT, TOP, Conj, Coprod, Formula, Impl, Letter, Prod
from src.calculus.terms import PRIMITIVES, TERM_PAIRINGS, ArrowTerm, Comp, HomFun, Tens, arity
from src.core.exceptions import ArityError, FormulaSyntaxError, RelcatError

GRAMMAR = r"""
formula_start: formula
term_start: term
equation_start: term "=" term

?formula: coprod
        | coprod IMPL formula      -> impl
?coprod: prod
       | prod COPROD prod          -> coprod
?prod: conj
     | conj PROD conj              -> prod
?conj: atom
     | atom WEDGE atom             -> conj
?atom: NAME                        -> letter
     | TOP                         -> top
     | ADD_UNIT                    -> add_unit
     | "(" formula ")"

?term: tens
     | tens COMP term              -> comp
?tens: term_atom
     | term_atom (WEDGE | STAR) tens -> tens
?term_atom: NAME "[" formula ("," formula)* "]"  -> primitive
          | NAME "(" term "," term ")"           -> pairing
          | "(" formula IMPL term ")"            -> hom
          | "(" term ")"

IMPL: "->" | "→"
COPROD: "+" | "⊔"
PROD: "⊓" | /x(?![A-Za-z0-9_'])/
WEDGE: "/\\" | "∧"
STAR: "*"
COMP: "." | "∘"
TOP: "⊤" | /T(?![A-Za-z0-9_'ₐ])/
ADD_UNIT: "⊤ₐ" | /Ta(?![A-Za-z0-9_'])/
NAME: /(?!(?:Ta|T|x)(?![A-Za-z0-9_']))[A-Za-z_][A-Za-z0-9_']*/

%import common.WS
%ignore WS
"""


class _SyntaxBuilder(Transformer):
    def formula_start(self, children: List[Any]) -> Formula:
        return children[0]

    def term_start(self, children: List[Any]) -> ArrowTerm:
        return children[0]

    def equation_start(self, children: List[Any]) -> Tuple[ArrowTerm, ArrowTerm]:
        return children[0], children[1]

    def letter(self, children: List[Token]) -> Formula:
        return Letter(str(children[0]))

    def top(self, _: List[Token]) -> Formula:
        return TOP

    def add_unit(self, _: List[Token]) -> Formula:
        return ADD_UNIT

    def impl(self, children: List[Any]) -> Formula:
        return Impl(children[0], children[-1])

    def coprod(self, children: List[Any]) -> Formula:
        return Coprod(children[0], children[-1])

    def prod(self, children: List[Any]) -> Formula:
        return Prod(children[0], children[-1])

    def conj(self, children: List[Any]) -> Formula:
        return Conj(children[0], children[-1])

    def comp(self, children: List[Any]) -> ArrowTerm:
        return Comp(children[0], children[-1])

    def tens(self, children: List[Any]) -> ArrowTerm:
        return Tens(children[0], children[-1])

    def hom(self, children: List[Any]) -> ArrowTerm:
        return HomFun(children[0], children[-1])

    def primitive(self, children: List[Any]) -> ArrowTerm:
        name, args = str(children[0]), children[1:]
        if name not in PRIMITIVES:
            raise ArityError(f"unknown primitive {name!r}")
        cls = PRIMITIVES[name]
        if len(args) != arity(cls):
            raise ArityError(
                f"{name} takes {arity(cls)} formula(e), got {len(args)}"
            )
        return cls(*args)

    def pairing(self, children: List[Any]) -> ArrowTerm:
        name = str(children[0])
        if name not in TERM_PAIRINGS:
            raise ArityError(f"{name!r} does not take arrow-term operands")
        return TERM_PAIRINGS[name](children[1], children[2])


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(
        GRAMMAR,
        start=["formula_start", "term_start", "equation_start"],
        parser="earley",
        lexer="dynamic",
        ambiguity="resolve",
    )


def _parse(text: str, start: str) -> Any:
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedEOF as e:
        raise FormulaSyntaxError("unexpected end of input", text) from e
    except UnexpectedInput as e:
        line = getattr(e, "line", None)
        column = getattr(e, "column", None)
        if line is not None and line < 0:
            line = column = None
        raise FormulaSyntaxError("syntax error", text, line, column) from e
    try:
        return _SyntaxBuilder().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, RelcatError):
            raise e.orig_exc from None
        raise


@lru_cache(maxsize=4096)
def parse_formula(text: str) -> Formula:
    return _parse(text, "formula_start")


@lru_cache(maxsize=4096)
def parse_arrow_term(text: str) -> ArrowTerm:
    return _parse(text, "term_start")


def parse_equation(text: str) -> Tuple[ArrowTerm, ArrowTerm]:
    """Parse ``lhs = rhs``; types are not checked here."""
    return _parse(text, "equation_start")
