from pydantic import BaseModel, Field
from typing import List, Optional, Tuple


class TermRequest(BaseModel):
    """Arrow term in surface syntax"""
    term: str = Field(..., min_length=1)
    ascii: bool = False


class TypeResponse(BaseModel):
    term: str
    source: str
    target: str
    type: str


class FormulaRequest(BaseModel):
    formula: str = Field(..., min_length=1)
    ascii: bool = False


class FormulaResponse(BaseModel):
    formula: str
    size: int
    letters: List[str]
    diversified: bool
    occurrences: List[Tuple[str, int]]
    normal_form: Optional[str] = None
