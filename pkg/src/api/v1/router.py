from fastapi import APIRouter
from src.api.v1.endpoints import coherence, iso, model, syntax, theories

api_router = APIRouter()

# Syntax endpoints
api_router.include_router(
    syntax.router,
    prefix="/syntax",
    tags=["syntax"]
)

# Model endpoints
api_router.include_router(
    model.router,
    prefix="/model",
    tags=["model"]
)

# Coherence endpoints
api_router.include_router(
    coherence.router,
    prefix="/coherence",
    tags=["coherence"]
)

# Isomorphism endpoints
api_router.include_router(
    iso.router,
    prefix="/iso",
    tags=["iso"]
)

# Theory catalog endpoints
api_router.include_router(
    theories.router,
    prefix="/theories",
    tags=["theories"]
)
