from fastapi import APIRouter

from src.api.v1.errors import to_http
from src.calculus.parser import parse_arrow_term
from src.calculus.relations import Equal
from src.schemas.coherence import RelationModel, RelEqRequest, RelEqResponse
from src.services.coherence import CoherenceService

router = APIRouter()
coherence_service = CoherenceService()


@router.post("/releq", response_model=RelEqResponse)
async def releq(request: RelEqRequest):
    """Decide equality of two ReMon arrows"""
    try:
        verdict = coherence_service.decide(
            parse_arrow_term(request.left), parse_arrow_term(request.right)
        )
    except Exception as e:
        raise to_http(e)
    if isinstance(verdict, Equal):
        relation = RelationModel.from_relation(verdict.relation)
        return RelEqResponse(equal=True, left=relation, right=relation)
    return RelEqResponse(
        equal=False,
        reason=verdict.reason,
        detail=verdict.detail,
        left=RelationModel.from_relation(verdict.left) if verdict.left else None,
        right=RelationModel.from_relation(verdict.right) if verdict.right else None,
    )
