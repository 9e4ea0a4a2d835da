from pydantic import BaseModel, Field
from typing import Dict, List, Optional

from src.calculus.isocalc import ScanPair, ScanReport


class CompareRequest(BaseModel):
    left: str = Field(..., min_length=1)
    right: str = Field(..., min_length=1)
    bound: int = Field(default=4, ge=0, le=8)


class CompareResponse(BaseModel):
    verdict: str
    s_equal: bool
    left_normal_form: str
    right_normal_form: str
    witness: Optional[Dict[str, int]] = None


class ArithRequest(BaseModel):
    formula: str = Field(..., min_length=1)
    assign: Dict[str, int] = Field(default_factory=dict)


class ArithResponse(BaseModel):
    formula: str
    value: str


class SearchRequest(BaseModel):
    left: str = Field(..., min_length=1)
    right: str = Field(..., min_length=1)
    depth: int = Field(default=2, ge=0)


class SearchResponse(BaseModel):
    found: bool
    forward: Optional[str] = None
    backward: Optional[str] = None


class ScanPairModel(BaseModel):
    left: str
    right: str
    kind: str
    sigma: Optional[Dict[str, int]] = None
    diversified: bool = False

    @classmethod
    def from_pair(cls, pair: ScanPair) -> "ScanPairModel":
        return cls(
            left=pair.left,
            right=pair.right,
            kind=pair.kind,
            sigma=pair.sigma,
            diversified=pair.diversified,
        )


class ScanReportModel(BaseModel):
    """Machine-readable scan report"""
    max_size: int
    letters: List[str]
    bound: int
    seed: int
    formulae: int
    sampled: bool
    nf_classes: int
    signature_classes: int
    unsound: List[ScanPairModel]
    candidates: List[ScanPairModel]
    diversified_discrepancies: int

    @classmethod
    def from_report(cls, report: ScanReport) -> "ScanReportModel":
        return cls(
            max_size=report.max_size,
            letters=list(report.letters),
            bound=report.bound,
            seed=report.seed,
            formulae=report.formulae,
            sampled=report.sampled,
            nf_classes=report.nf_classes,
            signature_classes=report.signature_classes,
            unsound=[ScanPairModel.from_pair(p) for p in report.unsound],
            candidates=[ScanPairModel.from_pair(p) for p in report.candidates],
            diversified_discrepancies=len(report.diversified_discrepancies),
        )
