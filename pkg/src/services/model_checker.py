import asyncio
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Dict, List, Optional, Sequence

from loguru import logger

from src.calculus.pointed import (
    Fails,
    Holds,
    NaturalityWitness,
    PointedMap,
    Verdict,
    check_equation,
    equation_letters,
    eval_term,
    full_family_size,
    naturality_failure_witness,
    small_valuations,
    valuation_from_sizes,
)
from src.calculus.terms import ArrowTerm, Equation, term_formulae
from src.calculus.formulas import letters
from src.core.config import get_settings
from src.core.exceptions import RelcatError, UnboundLetter
from src.services.monitoring import monitoring

settings = get_settings()


def _check_one(equation: Equation, sizes: Optional[Sequence[int]]) -> Verdict:
    names = equation_letters(equation)
    valuations = small_valuations(names, sizes)
    verdict = check_equation(equation, valuations)
    if isinstance(verdict, Holds) and len(valuations) < full_family_size(names, sizes):
        return replace(verdict, truncated=True)
    return verdict


class ModelChecker:
    """Checks equations and evaluates terms in finite pointed sets."""

    def __init__(self, sizes: Optional[Sequence[int]] = None):
        self.sizes = list(sizes or settings.CHECK_SIZES)

    def check(self, equation: Equation, sizes: Optional[Sequence[int]] = None) -> Verdict:
        """Check one equation under every small valuation of its letters"""
        sizes = list(sizes or self.sizes)
        try:
            with monitoring.track_latency("check") as timer:
                verdict = _check_one(equation, sizes)
        except RelcatError as e:
            monitoring.track_error("model_checker", type(e).__name__)
            raise
        outcome = "fails" if isinstance(verdict, Fails) else "holds"
        monitoring.track_check(outcome)
        if isinstance(verdict, Fails):
            logger.info(
                f"{equation.name or 'equation'} fails at {verdict.valuation}, "
                f"element {verdict.element}: {verdict.lhs_value} vs {verdict.rhs_value}"
            )
        else:
            if verdict.truncated:
                logger.warning(
                    f"{equation.name or 'equation'}: checked {verdict.checked} of "
                    f"{full_family_size(equation_letters(equation), sizes)} valuations"
                )
            if verdict.skipped:
                logger.warning(
                    f"{equation.name or 'equation'}: skipped {verdict.skipped} oversized valuations"
                )
            logger.debug(
                f"{equation.name or 'equation'} holds on {verdict.checked} valuations "
                f"({timer.elapsed:.3f}s)"
            )
        return verdict

    async def check_many(
        self,
        equations: Sequence[Equation],
        sizes: Optional[Sequence[int]] = None,
        workers: Optional[int] = None,
    ) -> List[Verdict]:
        """Check equations across worker processes; results keep input order"""
        sizes = list(sizes or self.sizes)
        workers = workers or settings.SCAN_WORKERS
        with monitoring.track_latency("check_many") as timer:
            if workers <= 1:
                verdicts = [_check_one(eq, sizes) for eq in equations]
            else:
                loop = asyncio.get_running_loop()
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    verdicts = list(
                        await asyncio.gather(
                            *(loop.run_in_executor(pool, _check_one, eq, sizes) for eq in equations)
                        )
                    )
        failures = sum(isinstance(v, Fails) for v in verdicts)
        for verdict in verdicts:
            monitoring.track_check("fails" if isinstance(verdict, Fails) else "holds")
        logger.info(
            f"Checked {len(verdicts)} equations with {workers} worker(s): "
            f"{failures} failure(s) in {timer.elapsed:.2f}s"
        )
        return verdicts

    def evaluate(self, term: ArrowTerm, sizes: Dict[str, int]) -> PointedMap:
        """Evaluate a term under a valuation given as letter sizes"""
        needed = set()
        for formula in term_formulae(term):
            needed |= letters(formula)
        missing = sorted(needed - sizes.keys())
        if missing:
            raise UnboundLetter(missing[0])
        logger.debug(f"Evaluating term over {sorted(needed)} with sizes {sizes}")
        with monitoring.track_latency("eval"):
            return eval_term(term, valuation_from_sizes(sizes))

    def witness_nonnatural(self, max_size: int = 3) -> NaturalityWitness:
        with monitoring.track_latency("witness_nonnatural"):
            witness = naturality_failure_witness(max_size)
        logger.info(
            f"Smash projection {witness.projection} is not natural: "
            f"element {witness.element} maps to {witness.lhs(witness.element)} "
            f"vs {witness.rhs(witness.element)}"
        )
        return witness
