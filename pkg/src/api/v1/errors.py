from fastapi import HTTPException

from src.core.exceptions import ModelTooLarge, RelcatError


def to_http(error: Exception) -> HTTPException:
    """Map workbench errors onto HTTP status codes"""
    if isinstance(error, ModelTooLarge):
        return HTTPException(status_code=413, detail=str(error))
    if isinstance(error, RelcatError):
        return HTTPException(
            status_code=422,
            detail={"error": type(error).__name__, "message": str(error)},
        )
    return HTTPException(status_code=500, detail=str(error))
