from prometheus_client import Counter, Histogram, Info
from typing import Dict
import time


class MonitoringService:
    def __init__(self):
        # Counters
        self.check_counter = Counter(
            'relcat_equation_checks_total',
            'Equation checks in the pointed-set model',
            ['verdict']
        )

        self.releq_counter = Counter(
            'relcat_relational_decisions_total',
            'ReMon equality decisions',
            ['verdict']
        )

        self.iso_counter = Counter(
            'relcat_iso_searches_total',
            'Bounded isomorphism searches',
            ['outcome']
        )

        self.scan_counter = Counter(
            'relcat_scan_pairs_total',
            'Conjecture scan pairs by classification',
            ['kind']
        )

        self.error_counter = Counter(
            'relcat_errors_total',
            'Errors raised by services',
            ['service', 'error_type']
        )

        # Histograms
        self.latency_histogram = Histogram(
            'relcat_operation_latency_seconds',
            'Latency of workbench operations',
            ['operation'],
            buckets=(0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0, 120.0)
        )

        # System Info
        self.system_info = Info('relcat_system', 'Workbench information')

    def track_check(self, verdict: str):
        self.check_counter.labels(verdict=verdict).inc()

    def track_releq(self, verdict: str):
        self.releq_counter.labels(verdict=verdict).inc()

    def track_iso(self, outcome: str):
        self.iso_counter.labels(outcome=outcome).inc()

    def track_scan(self, counts: Dict[str, int]):
        """Add scan pair counts keyed by classification"""
        for kind, count in counts.items():
            self.scan_counter.labels(kind=kind).inc(count)

    def track_error(self, service: str, error_type: str):
        """Track service error"""
        self.error_counter.labels(
            service=service,
            error_type=error_type
        ).inc()

    def track_latency(self, operation: str):
        """Context manager for tracking operation latency"""
        class LatencyTimer:
            def __init__(self, histogram, operation):
                self.histogram = histogram
                self.operation = operation
                self.start_time = None
                self.elapsed = 0.0

            def __enter__(self):
                self.start_time = time.time()
                return self

            def __exit__(self, exc_type, exc_val, exc_tb):
                self.elapsed = time.time() - self.start_time
                self.histogram.labels(operation=self.operation).observe(self.elapsed)

        return LatencyTimer(self.latency_histogram, operation)

    def update_system_info(self, info: Dict[str, str]):
        """Update system information"""
        self.system_info.info(info)


# Metrics register once per process.
monitoring = MonitoringService()
