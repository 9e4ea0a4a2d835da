import pytest
from click.testing import CliRunner
from httpx import ASGITransport, AsyncClient

from src.calculus.parser import parse_arrow_term, parse_formula
from src.calculus.pointed import small_valuations
from src.core.config import get_settings
from src.main import create_app

settings = get_settings()


@pytest.fixture
def f():
    """Shorthand for parse_formula"""
    return parse_formula


@pytest.fixture
def t():
    """Shorthand for parse_arrow_term"""
    return parse_arrow_term


@pytest.fixture
def pq_valuations():
    return small_valuations(["p", "q"], [1, 2, 3])


@pytest.fixture(scope="session")
def app():
    return create_app()


@pytest.fixture
async def client(app):
    async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
        yield client


@pytest.fixture
def runner():
    return CliRunner()
