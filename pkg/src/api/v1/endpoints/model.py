from fastapi import APIRouter

from src.api.v1.errors import to_http
from src.calculus.parser import parse_arrow_term, parse_equation
from src.calculus.pointed import Fails
from src.calculus.printer import render_type
from src.calculus.terms import Equation
from src.calculus.typecheck import infer_type
from src.schemas.model import (
    CheckRequest,
    CheckResponse,
    EvalRequest,
    EvalResponse,
    WitnessResponse,
)
from src.services.model_checker import ModelChecker

router = APIRouter()
model_checker = ModelChecker()


@router.post("/eval", response_model=EvalResponse)
async def evaluate(request: EvalRequest):
    """Evaluate an arrow term in finite pointed sets"""
    try:
        term = parse_arrow_term(request.term)
        arrow = infer_type(term)
        table = model_checker.evaluate(term, request.sizes)
    except Exception as e:
        raise to_http(e)
    return EvalResponse(
        term=request.term,
        type=render_type(arrow.source, arrow.target),
        dom_size=table.dom.size,
        cod_size=table.cod.size,
        table=table.table.tolist(),
    )


@router.post("/check", response_model=CheckResponse)
async def check(request: CheckRequest):
    """Check an equation under all small valuations"""
    try:
        lhs, rhs = parse_equation(request.equation)
        verdict = model_checker.check(Equation(lhs, rhs), request.sizes)
    except Exception as e:
        raise to_http(e)
    if isinstance(verdict, Fails):
        return CheckResponse(
            holds=False,
            valuation=verdict.valuation,
            element=verdict.element,
            lhs_value=verdict.lhs_value,
            rhs_value=verdict.rhs_value,
        )
    return CheckResponse(
        holds=True,
        checked=verdict.checked,
        skipped=verdict.skipped,
        truncated=verdict.truncated,
    )


@router.get("/witness-nonnatural", response_model=WitnessResponse)
async def witness_nonnatural(max_size: int = 3):
    """Counterexample to naturality of the smash projections"""
    try:
        witness = model_checker.witness_nonnatural(max_size)
    except Exception as e:
        raise to_http(e)
    return WitnessResponse(
        projection=witness.projection,
        f=witness.f.table.tolist(),
        g=witness.g.table.tolist(),
        element=witness.element,
        lhs=witness.lhs.table.tolist(),
        rhs=witness.rhs.table.tolist(),
        verified=witness.verify(),
    )
