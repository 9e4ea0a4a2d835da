from typing import Union

from loguru import logger

from src.calculus.relations import Equal, Relation, Unequal, decide_remon_eq, rel_of
from src.calculus.printer import render_term
from src.calculus.terms import ArrowTerm
from src.core.exceptions import RelcatError
from src.services.monitoring import monitoring


class CoherenceService:
    """Decides equality of arrows in the free relevant monoidal category."""

    def relation(self, term: ArrowTerm) -> Relation:
        return rel_of(term)

    def decide(self, f: ArrowTerm, g: ArrowTerm) -> Union[Equal, Unequal]:
        """Compare types and occurrence relations of two terms"""
        try:
            with monitoring.track_latency("releq"):
                verdict = decide_remon_eq(f, g)
        except RelcatError as e:
            monitoring.track_error("coherence", type(e).__name__)
            logger.warning(f"Cannot decide {render_term(f)} = {render_term(g)}: {e}")
            raise
        if isinstance(verdict, Equal):
            monitoring.track_releq("equal")
        else:
            monitoring.track_releq(f"unequal_{verdict.reason}")
            logger.debug(f"Unequal ({verdict.reason}): {verdict.detail}")
        return verdict
