from pydantic import BaseModel, Field
from typing import Dict, List, Optional


class EvalRequest(BaseModel):
    """Evaluate a term; sizes give |v(p)| for each letter"""
    term: str = Field(..., min_length=1)
    sizes: Dict[str, int] = Field(default_factory=dict)


class EvalResponse(BaseModel):
    term: str
    type: str
    dom_size: int
    cod_size: int
    table: List[int]


class CheckRequest(BaseModel):
    """Equation ``lhs = rhs`` checked under all small valuations"""
    equation: str = Field(..., min_length=1)
    sizes: Optional[List[int]] = None


class CheckResponse(BaseModel):
    holds: bool
    checked: int = 0
    skipped: int = 0
    truncated: bool = False
    valuation: Optional[Dict[str, int]] = None
    element: Optional[int] = None
    lhs_value: Optional[int] = None
    rhs_value: Optional[int] = None


class WitnessResponse(BaseModel):
    projection: int
    f: List[int]
    g: List[int]
    element: int
    lhs: List[int]
    rhs: List[int]
    verified: bool
