from aiocache import Cache
from fastapi import APIRouter

from src.calculus.theories import Theory
from src.core.config import get_settings
from src.schemas.theories import AxiomCatalog

settings = get_settings()

router = APIRouter()
cache = Cache(Cache.MEMORY)


@router.get("/axioms", response_model=AxiomCatalog)
async def get_axioms(theory: Theory = Theory.RMC, ascii: bool = False):
    """Axiom schemata of a theory"""
    key = f"axioms:{theory.value}:{ascii}"
    cached = await cache.get(key)
    if cached is not None:
        return cached
    catalog = AxiomCatalog.for_theory(theory, ascii)
    await cache.set(key, catalog, ttl=settings.CACHE_TTL)
    return catalog
