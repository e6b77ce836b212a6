import pytest
from fastapi.testclient import TestClient

from rdfpaths.registry import Registry, ServiceConfig, load_manifest
from rdfpaths.service import create_app

from .conftest import N


@pytest.fixture(scope="module")
def client(f1, f2):
    app = create_app(Registry([f1, f2], ServiceConfig()))
    return TestClient(app)


class TestDatasets:
    def test_listing(self, client):
        body = client.get("/api/datasets").json()
        by_id = {entry["id"]: entry for entry in body}
        assert set(by_id) == {"nobel", "dbp"}
        assert by_id["nobel"]["tripleCount"] == 10
        assert by_id["nobel"]["classCount"] == 3
        assert by_id["nobel"]["linkedDatasetIds"] == ["dbp"]
        assert by_id["dbp"]["tripleCount"] == 2
        assert by_id["dbp"]["linkedDatasetIds"] == []

    def test_empty_registry(self):
        app = create_app(Registry([], ServiceConfig()))
        assert TestClient(app).get("/api/datasets").json() == []


class TestClasses:
    def test_sorted_listing(self, client):
        body = client.get("/api/datasets/nobel/classes").json()
        assert [(c["label"], c["entityCount"]) for c in body] == [
            ("n:Laureate", 2),
            ("n:City", 1),
            ("n:University", 1),
        ]

    def test_unknown_dataset(self, client):
        response = client.get("/api/datasets/nope/classes")
        assert response.status_code == 404
        assert response.json()["code"] == "unknown-dataset"

    def test_dataset_without_classes(self, client):
        assert client.get("/api/datasets/dbp/classes").json() == []


class TestOutlines:
    def test_depth1(self, client):
        body = client.get("/api/datasets/nobel/classes/n:Laureate/outlines?depth=1").json()
        assert body["total"] == 3
        assert [o["template"] for o in body["outlines"]] == [
            "n:Laureate/n:year/*",
            "n:Laureate/foaf:name/*",
            "n:Laureate/n:affiliation/*",
        ]
        year = body["outlines"][0]["measures"]
        assert year["coverage"] == 100.0
        assert year["datatypes"] == {"xsd:integer": 2}
        assert year["minValue"] == "1903"
        assert "minValue" not in body["outlines"][2]["measures"]  # iri-only

    def test_min_coverage_filter(self, client):
        body = client.get("/api/datasets/nobel/classes/n:Laureate/outlines?depth=1&minCoverage=80").json()
        assert body["total"] == 1
        assert body["outlines"][0]["template"] == "n:Laureate/n:year/*"
        # feature ranges describe the unfiltered enumeration
        assert body["featureRanges"]["coverageMin"] == 50.0

    def test_column_substring(self, client):
        body = client.get("/api/datasets/nobel/classes/n:Laureate/outlines?depth=3&q1=affiliation").json()
        assert body["total"] == 1
        assert body["outlines"][0]["template"] == "n:Laureate/n:affiliation/*/n:city/*/owl:sameAs/*"
        assert body["outlines"][0]["intermediateTypes"] == {
            "1": {"n:University": 1},
            "2": {"n:City": 1},
            "3": {"untyped": 1},
        }

    def test_browser_model_follows_filter(self, client):
        body = client.get("/api/datasets/nobel/classes/n:Laureate/outlines?depth=1&kind=literal-only").json()
        assert body["total"] == 2
        bars = body["browserModel"]["columns"][0]
        assert {(b["label"], b["frequency"]) for b in bars} == {("n:year", 1), ("foaf:name", 1)}
        assert sum(b["heightFraction"] for b in bars) == pytest.approx(1.0)

    def test_pagination(self, client):
        body = client.get("/api/datasets/nobel/classes/n:Laureate/outlines?depth=1&limit=2&offset=2").json()
        assert body["total"] == 3
        assert len(body["outlines"]) == 1
        # the browser model covers the whole filtered set regardless of the page
        assert len(body["browserModel"]["outlines"]) == 3

    def test_bad_depth(self, client):
        response = client.get("/api/datasets/nobel/classes/n:Laureate/outlines?depth=9")
        assert response.status_code == 400
        assert response.json()["code"] == "bad-depth"

    def test_unknown_class_404(self, client):
        assert client.get("/api/datasets/nobel/classes/n:Ghost/outlines?depth=1").status_code == 404

    def test_full_iri_class_reference(self, client):
        body = client.get(f"/api/datasets/nobel/classes/{N}Laureate/outlines?depth=1").json()
        assert body["total"] == 3


class TestOutlineDetail:
    def test_detail_with_extensions(self, client):
        response = client.get(
            "/api/datasets/nobel/outline",
            params={"template": "n:Laureate/n:affiliation/*/n:city/*/owl:sameAs/*", "target": "dbp"},
        )
        body = response.json()
        assert body["measures"]["coverage"] == 50.0
        assert body["sampleValues"] == [{"type": "uri", "value": "http://dbpedia.example.org/resource/Paris"}]
        assert body["linkedDatasets"] == [
            {"id": "dbp", "name": "DBpedia sample", "predicate": "http://www.w3.org/2002/07/owl#sameAs"}
        ]
        ext = body["extensions"]
        assert ext["joinCount"] == 1
        assert [(e["label"], e["measures"]["minValue"]) for e in ext["extensions"]] == [
            ("geo:lat", "48.856701"),
            ("geo:long", "2.350800"),
        ]

    def test_zero_coverage_detail(self, client):
        body = client.get(
            "/api/datasets/nobel/outline", params={"template": "n:Laureate/n:city/*"}
        ).json()
        assert body["measures"]["coverage"] == 0.0
        assert body["measures"]["count"] == 0
        assert body["sampleValues"] == []

    def test_malformed_template(self, client):
        response = client.get("/api/datasets/nobel/outline", params={"template": "n:Laureate/n:year"})
        assert response.status_code == 400
        assert response.json()["code"] == "bad-template"

    def test_target_not_linked(self, client):
        response = client.get(
            "/api/datasets/nobel/outline",
            params={"template": "n:Laureate/n:year/*", "target": "nobel"},
        )
        assert response.status_code == 400
        assert response.json()["code"] == "not-linked"


class TestSparqlEndpointRoute:
    def test_generated_query(self, client):
        response = client.get(
            "/api/datasets/nobel/outline/sparql",
            params={"template": "n:Laureate/n:year/*", "shape": "terminal-values-distinct"},
        )
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/plain")
        assert "SELECT DISTINCT ?o" in response.text
        assert "?s n:year ?o ." in response.text

    def test_unsupported_shape(self, client):
        response = client.get(
            "/api/datasets/nobel/outline/sparql",
            params={"template": "n:Laureate/n:year/*", "shape": "drop-table"},
        )
        assert response.status_code == 400


class TestLayoutRoute:
    def test_geometry(self, client):
        body = client.get("/api/datasets/nobel/classes/n:Laureate/layout?maxdepth=3").json()
        assert body["entityCircle"]["r"] == body["container"]["r"] / 3
        assert len(body["groups"]) == 3
        radii = [g["greyCircle"]["r"] for g in body["groups"]]
        assert radii == sorted(radii)

    def test_bad_maxdepth(self, client):
        assert client.get("/api/datasets/nobel/classes/n:Laureate/layout?maxdepth=0").status_code == 400

    def test_unknown_class(self, client):
        assert client.get("/api/datasets/nobel/classes/n:Ghost/layout").status_code == 404


class TestStatelessAndCache:
    def test_identical_requests_identical_bodies(self, client):
        url = "/api/datasets/nobel/classes/n:Laureate/outlines?depth=3"
        assert client.get(url).content == client.get(url).content

    def test_cache_transparency(self, f1, f2, tmp_path):
        cold_app = create_app(Registry([f1, f2], ServiceConfig(cache_dir=tmp_path / "c")))
        url = "/api/datasets/nobel/classes/n:Laureate/outlines?depth=3"
        with TestClient(cold_app) as cold:
            first = cold.get(url).content           # fills the cache
            warm_hit = cold.get(url).content        # served from cache
        assert warm_hit == first
        # a fresh app over the same cache dir serves byte-identical bodies
        warm_app = create_app(Registry([f1, f2], ServiceConfig(cache_dir=tmp_path / "c")))
        with TestClient(warm_app) as warm:
            assert warm.get(url).content == first

    def test_stale_cache_ignored(self, f1, f2, f1_mutated, tmp_path):
        cache_dir = tmp_path / "c"
        url = "/api/datasets/nobel/classes/n:Laureate/outlines?depth=1"
        with TestClient(create_app(Registry([f1, f2], ServiceConfig(cache_dir=cache_dir)))) as client_a:
            total_before = client_a.get(url).json()["total"]
        with TestClient(create_app(Registry([f1_mutated, f2], ServiceConfig(cache_dir=cache_dir)))) as client_b:
            total_after = client_b.get(url).json()["total"]
        assert total_before == 3
        assert total_after == 4


@pytest.fixture(scope="module")
def f1_mutated(f2):
    from rdfpaths.rdf import PrefixMap, build_dataset, iri, literal, make_triple
    from rdfpaths.rdf.dataset import DatasetLink

    from .conftest import NOBEL_PREFIXES, OWL, f1_triples

    extra = make_triple(iri(N + "MarieCurie"), iri(N + "prize"), literal("Physics"))
    return build_dataset(
        "nobel",
        "Nobel",
        f1_triples() + [extra],
        PrefixMap(NOBEL_PREFIXES),
        links=[DatasetLink("dbp", OWL + "sameAs")],
        known_ids=["nobel", "dbp"],
    )


def test_manifest_service_integration(fixture_manifest):
    registry = load_manifest(fixture_manifest)
    client = TestClient(create_app(registry))
    body = client.get("/api/datasets").json()
    assert {d["id"] for d in body} == {"nobel", "dbp"}
    outlines = client.get("/api/datasets/nobel/classes/n:Laureate/outlines?depth=1").json()
    assert outlines["total"] == 3
