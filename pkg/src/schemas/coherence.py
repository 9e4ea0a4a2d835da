from pydantic import BaseModel, Field
from typing import List, Optional, Tuple

from src.calculus.relations import Relation


class RelEqRequest(BaseModel):
    left: str = Field(..., min_length=1)
    right: str = Field(..., min_length=1)


class RelationModel(BaseModel):
    src_size: int
    tgt_size: int
    pairs: List[Tuple[int, int]]

    @classmethod
    def from_relation(cls, relation: Relation) -> "RelationModel":
        return cls(
            src_size=relation.src_size,
            tgt_size=relation.tgt_size,
            pairs=relation.sorted_pairs(),
        )


class RelEqResponse(BaseModel):
    equal: bool
    reason: Optional[str] = None
    detail: Optional[str] = None
    left: Optional[RelationModel] = None
    right: Optional[RelationModel] = None
