import pytest
from fastapi import FastAPI
from fastapi.testclient import TestClient

from rdfpaths.registry import Registry, ServiceConfig
from rdfpaths.sparql import ChainQuery, create_sparql_router, generate, table_from_json

from .conftest import N, NOBEL_PREFIXES

from rdfpaths.rdf import PrefixMap

PM = PrefixMap(NOBEL_PREFIXES)


@pytest.fixture()
def client(f1, f2):
    app = FastAPI()
    app.include_router(create_sparql_router(Registry([f1, f2], ServiceConfig())))
    return TestClient(app)


def test_get_query(client):
    q = generate(ChainQuery("terminal-values-distinct", N + "Laureate", (N + "year",)), PM)
    response = client.get("/ds/nobel/sparql", params={"query": q})
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("application/sparql-results+json")
    table = table_from_json(response.json())
    assert len(table.rows) == 1
    assert table.rows[0]["o"].value == "1903"


def test_form_post(client):
    q = generate(ChainQuery("entity-total", N + "Laureate"), PM)
    response = client.post("/ds/nobel/sparql", data={"query": q})
    assert response.status_code == 200
    assert table_from_json(response.json()).single_int() == 2


def test_unknown_dataset_404(client):
    response = client.get("/ds/nope/sparql", params={"query": "SELECT ?o WHERE { }"})
    assert response.status_code == 404


def test_unsupported_query_400(client):
    response = client.post("/ds/nobel/sparql", data={"query": "ASK {}"})
    assert response.status_code == 400
    assert "unsupported" in response.text


def test_missing_query_400(client):
    assert client.get("/ds/nobel/sparql").status_code == 400


def test_service_clause_resolved_against_registry(client):
    q = generate(
        ChainQuery(
            "extension-discovery",
            N + "Laureate",
            (N + "affiliation", N + "city", "http://www.w3.org/2002/07/owl#sameAs"),
            service="http://anything.test/ds/dbp/sparql",
        ),
        PM,
    )
    response = client.get("/ds/nobel/sparql", params={"query": q})
    assert response.status_code == 200
    values = {row["p"].value for row in table_from_json(response.json()).rows}
    assert values == {
        "http://www.w3.org/2003/01/geo/wgs84_pos#lat",
        "http://www.w3.org/2003/01/geo/wgs84_pos#long",
    }
