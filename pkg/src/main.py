from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from loguru import logger
from prometheus_client import make_asgi_app

from src.api.v1.router import api_router
from src.calculus.theories import axiom_counts
from src.core.config import get_settings
from src.core.logging import setup_logging
from src.core.middleware import PrometheusMiddleware
from src.services.monitoring import monitoring

settings = get_settings()


def create_app() -> FastAPI:
    app = FastAPI(
        title=settings.PROJECT_NAME,
        version="1.0.0",
        description="Relevant and symmetric monoidal closed categories workbench API"
    )

    # CORS middleware
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    # Add Prometheus middleware
    app.add_middleware(PrometheusMiddleware)

    # Mount Prometheus metrics endpoint
    app.mount("/metrics", make_asgi_app())

    # Include API router
    app.include_router(api_router, prefix=settings.API_V1_STR)

    @app.on_event("startup")
    async def startup_event():
        setup_logging()
        monitoring.update_system_info(
            {"environment": settings.ENVIRONMENT, "size_cap": str(settings.RELCAT_SIZE_CAP)}
        )
        logger.info(f"{settings.PROJECT_NAME} API started ({settings.ENVIRONMENT})")

    @app.get("/health")
    async def health_check():
        """Health check endpoint"""
        return {
            "status": "healthy",
            "theories": axiom_counts(),
            "size_cap": settings.RELCAT_SIZE_CAP,
        }

    return app


app = create_app()

if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=settings.API_PORT)
