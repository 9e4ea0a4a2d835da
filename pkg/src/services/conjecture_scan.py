import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from loguru import logger

from src.calculus.formulas import Formula
from src.calculus.isocalc import (
    FormulaKeys,
    ScanReport,
    classify,
    formula_keys,
    scan_formulae,
)
from src.core.config import get_settings
from src.services.monitoring import monitoring

settings = get_settings()


def _chunks(items: Sequence[Formula], parts: int) -> List[List[Formula]]:
    size = max(1, -(-len(items) // parts))
    return [list(items[i:i + size]) for i in range(0, len(items), size)]


class ConjectureScanner:
    """Classifies all pairs of small ∧/⊤/→ formulae by S-equality and
    arithmetic equality."""

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers or settings.SCAN_WORKERS

    async def _keys(
        self, formulae: Sequence[Formula], letters: Sequence[str], bound: int
    ) -> List[FormulaKeys]:
        if self.workers <= 1 or len(formulae) < 2:
            return formula_keys(formulae, letters, bound)
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            parts = await asyncio.gather(
                *(
                    loop.run_in_executor(pool, formula_keys, chunk, list(letters), bound)
                    for chunk in _chunks(formulae, self.workers)
                )
            )
        # chunks are contiguous, so concatenation restores input order
        return [keys for part in parts for keys in part]

    async def scan(
        self,
        max_size: int,
        letters: Sequence[str],
        bound: int,
        seed: int = 0,
        diversified_only: bool = False,
    ) -> ScanReport:
        letters = sorted(set(letters))
        with monitoring.track_latency("scan") as timer:
            formulae, sampled = scan_formulae(max_size, letters, seed, diversified_only)
            if sampled:
                logger.warning(
                    f"More than {settings.SCAN_ENUMERATION_LIMIT} formulae; "
                    f"sampling {len(formulae)} with seed {seed}"
                )
            logger.info(
                f"Scanning {len(formulae)} formulae over {','.join(letters)} "
                f"(max size {max_size}, bound {bound}, {self.workers} worker(s))"
            )
            keys = await self._keys(formulae, letters, bound)
            report = classify(keys, letters, bound, max_size, seed, sampled)
        monitoring.track_scan(
            {
                "unsound": len(report.unsound),
                "candidate": len(report.candidates),
                "diversified_discrepancy": len(report.diversified_discrepancies),
            }
        )
        if report.unsound:
            logger.error(f"{len(report.unsound)} S-equal pair(s) differ arithmetically")
        logger.info(
            f"Scan finished in {timer.elapsed:.2f}s: {report.nf_classes} normal forms, "
            f"{report.signature_classes} signatures, {len(report.candidates)} candidate(s)"
        )
        return report
