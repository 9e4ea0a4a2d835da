from dataclasses import dataclass
from typing import Optional

from loguru import logger

from src.calculus.arith import ArithVerdict, Differ, arith_equal, arith_eval, format_sigma
from src.calculus.formulas import Formula
from src.calculus.isocalc import IsoPair, bounded_iso_search, normalize_S, render_nf, s_equal
from src.calculus.printer import render
from src.core.config import get_settings
from src.services.monitoring import monitoring

settings = get_settings()

DEFAULT_BOUND = 4


@dataclass(frozen=True)
class IsoVerdict:
    s_equal: bool
    arith: Optional[ArithVerdict] = None

    @property
    def ok(self) -> bool:
        return self.s_equal

    def text(self) -> str:
        if self.s_equal:
            return "S-EQUAL"
        if isinstance(self.arith, Differ):
            return f"S-DIFFERENT arith-differ({format_sigma(self.arith.sigma)})"
        return f"S-DIFFERENT arith-agree(bound={self.arith.bound})"


class IsoService:
    """Front end for S-equality, arithmetic comparison and iso search."""

    def compare(self, a: Formula, b: Formula, bound: int = DEFAULT_BOUND) -> IsoVerdict:
        """Decide S-equality; on disagreement compare arithmetically"""
        with monitoring.track_latency("iso_compare"):
            if s_equal(a, b):
                verdict = IsoVerdict(True)
            else:
                verdict = IsoVerdict(False, arith_equal(a, b, bound))
        logger.debug(
            f"{render(a)} vs {render(b)}: {verdict.text()} "
            f"(normal forms {render_nf(normalize_S(a))} / {render_nf(normalize_S(b))})"
        )
        return verdict

    def arith(self, formula: Formula, sigma: dict) -> int:
        with monitoring.track_latency("arith"):
            return arith_eval(formula, sigma)

    def search(self, a: Formula, b: Formula, depth: Optional[int] = None) -> Optional[IsoPair]:
        """Bounded search for inverse arrows; None proves nothing"""
        depth = settings.ISO_SEARCH_MAX_DEPTH if depth is None else depth
        if depth > settings.ISO_SEARCH_MAX_DEPTH:
            logger.warning(
                f"Depth {depth} capped at ISO_SEARCH_MAX_DEPTH={settings.ISO_SEARCH_MAX_DEPTH}"
            )
        with monitoring.track_latency("iso_search") as timer:
            found = bounded_iso_search(a, b, depth)
        monitoring.track_iso("found" if found else "none")
        logger.info(
            f"Iso search {render(a)} / {render(b)} depth {depth}: "
            f"{'found' if found else 'nothing'} in {timer.elapsed:.2f}s"
        )
        return found
