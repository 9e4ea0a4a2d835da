from fastapi import APIRouter

from src.api.v1.errors import to_http
from src.calculus.arith import check_s_fragment
from src.calculus.formulas import diversified, letters, occurrences, size
from src.calculus.isocalc import normalize_S, render_nf
from src.calculus.parser import parse_arrow_term, parse_formula
from src.calculus.printer import render, render_term, render_type
from src.calculus.typecheck import infer_type
from src.core.exceptions import FragmentError
from src.schemas.syntax import FormulaRequest, FormulaResponse, TermRequest, TypeResponse

router = APIRouter()


@router.post("/typecheck", response_model=TypeResponse)
async def typecheck(request: TermRequest):
    """Parse an arrow term and infer its type"""
    try:
        term = parse_arrow_term(request.term)
        arrow = infer_type(term)
    except Exception as e:
        raise to_http(e)
    return TypeResponse(
        term=render_term(term, request.ascii),
        source=render(arrow.source, request.ascii),
        target=render(arrow.target, request.ascii),
        type=render_type(arrow.source, arrow.target, request.ascii),
    )


@router.post("/formula", response_model=FormulaResponse)
async def formula(request: FormulaRequest):
    """Parse a formula and describe it"""
    try:
        parsed = parse_formula(request.formula)
    except Exception as e:
        raise to_http(e)
    try:
        check_s_fragment(parsed)
        normal_form = render_nf(normalize_S(parsed), request.ascii)
    except FragmentError:
        normal_form = None
    return FormulaResponse(
        formula=render(parsed, request.ascii),
        size=size(parsed),
        letters=sorted(letters(parsed)),
        diversified=diversified(parsed),
        occurrences=occurrences(parsed),
        normal_form=normal_form,
    )
