import time

from prometheus_client import Counter, Histogram
from starlette.types import ASGIApp, Message, Receive, Scope, Send

from src.core.config import get_settings

settings = get_settings()

# Metrics
http_requests_total = Counter(
    "relcat_http_requests_total",
    "API requests by area and operation",
    ["method", "area", "operation", "status"],
)

http_request_errors_total = Counter(
    "relcat_http_request_errors_total",
    "Rejected API requests (parse, type, fragment or size errors)",
    ["area", "status"],
)

http_request_duration_seconds = Histogram(
    "relcat_http_request_duration_seconds",
    "API request duration",
    ["area", "operation"],
    buckets=(0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0),
)


def route_labels(path: str) -> tuple:
    """``/api/v1/model/check`` to ``("model", "check")``; other paths keep their first segment."""
    if path.startswith(settings.API_V1_STR + "/"):
        parts = path[len(settings.API_V1_STR) + 1:].split("/")
        return parts[0], "/".join(parts[1:]) or "-"
    return path.strip("/").split("/")[0] or "root", "-"


class PrometheusMiddleware:
    """Counts API requests per area and operation; /metrics itself is not counted."""

    def __init__(self, app: ASGIApp):
        self.app = app

    async def __call__(self, scope: Scope, receive: Receive, send: Send):
        if scope["type"] != "http" or scope["path"].startswith("/metrics"):
            return await self.app(scope, receive, send)

        method = scope["method"]
        area, operation = route_labels(scope["path"])
        start_time = time.perf_counter()

        async def wrapped_send(message: Message):
            if message["type"] == "http.response.start":
                status = message["status"]
                http_requests_total.labels(
                    method=method, area=area, operation=operation, status=status
                ).inc()
                if status >= 400:
                    http_request_errors_total.labels(area=area, status=status).inc()
                http_request_duration_seconds.labels(
                    area=area, operation=operation
                ).observe(time.perf_counter() - start_time)
            await send(message)

        await self.app(scope, receive, wrapped_send)
