from fastapi import APIRouter

from src.api.v1.errors import to_http
from src.calculus.arith import Differ
from src.calculus.isocalc import normalize_S, render_nf
from src.calculus.parser import parse_formula
from src.calculus.printer import render_term
from src.schemas.iso import (
    ArithRequest,
    ArithResponse,
    CompareRequest,
    CompareResponse,
    SearchRequest,
    SearchResponse,
)
from src.services.iso_search import IsoService

router = APIRouter()
iso_service = IsoService()


@router.post("/compare", response_model=CompareResponse)
async def compare(request: CompareRequest):
    """S-equality plus arithmetic comparison of two formulae"""
    try:
        left, right = parse_formula(request.left), parse_formula(request.right)
        verdict = iso_service.compare(left, right, request.bound)
        left_nf, right_nf = render_nf(normalize_S(left)), render_nf(normalize_S(right))
    except Exception as e:
        raise to_http(e)
    return CompareResponse(
        verdict=verdict.text(),
        s_equal=verdict.s_equal,
        left_normal_form=left_nf,
        right_normal_form=right_nf,
        witness=verdict.arith.sigma if isinstance(verdict.arith, Differ) else None,
    )


@router.post("/arith", response_model=ArithResponse)
async def arith(request: ArithRequest):
    """Natural number denoted by a formula"""
    try:
        value = iso_service.arith(parse_formula(request.formula), request.assign)
    except Exception as e:
        raise to_http(e)
    return ArithResponse(formula=request.formula, value=str(value))


@router.post("/search", response_model=SearchResponse)
async def search(request: SearchRequest):
    """Bounded search for inverse arrows"""
    try:
        found = iso_service.search(
            parse_formula(request.left), parse_formula(request.right), request.depth
        )
    except Exception as e:
        raise to_http(e)
    if found is None:
        return SearchResponse(found=False)
    return SearchResponse(
        found=True,
        forward=render_term(found.forward),
        backward=render_term(found.backward),
    )
