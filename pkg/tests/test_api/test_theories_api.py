import pytest
from httpx import AsyncClient


@pytest.mark.asyncio
async def test_axioms_default_theory(client: AsyncClient):
    response = await client.get("/api/v1/theories/axioms")
    assert response.status_code == 200
    body = response.json()
    assert body["theory"] == "RMC"
    assert body["count"] == 27


@pytest.mark.asyncio
async def test_axioms_cached_response_is_stable(client: AsyncClient):
    first = await client.get("/api/v1/theories/axioms", params={"theory": "SyMon"})
    second = await client.get("/api/v1/theories/axioms", params={"theory": "SyMon"})
    assert first.json() == second.json()
    assert first.json()["count"] == 16


@pytest.mark.asyncio
async def test_axioms_ascii(client: AsyncClient):
    response = await client.get(
        "/api/v1/theories/axioms", params={"theory": "ReMon", "ascii": "true"}
    )
    names = {entry["name"]: entry for entry in response.json()["axioms"]}
    assert names["cw"]["lhs"] == "c[A, A] . w[A]"


@pytest.mark.asyncio
async def test_unknown_theory(client: AsyncClient):
    response = await client.get("/api/v1/theories/axioms", params={"theory": "Cartesian"})
    assert response.status_code == 422
