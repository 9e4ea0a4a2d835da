from pydantic import BaseModel
from typing import List

from src.calculus.theories import Theory, catalog_entries


class AxiomEntry(BaseModel):
    name: str
    theory: str
    lhs: str
    rhs: str
    type: str
    holes: List[str]


class AxiomCatalog(BaseModel):
    """Exported axiom schemata of one theory"""
    theory: str
    count: int
    axioms: List[AxiomEntry]

    @classmethod
    def for_theory(cls, theory: Theory, ascii: bool = False) -> "AxiomCatalog":
        entries = [AxiomEntry(**entry) for entry in catalog_entries(theory, ascii)]
        return cls(theory=Theory(theory).value, count=len(entries), axioms=entries)
