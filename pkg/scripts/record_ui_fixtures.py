"""Record API responses from the fixture registry for the frontend tests.

Run from the repository root:  python3 scripts/record_ui_fixtures.py
"""
import json
from pathlib import Path

from fastapi.testclient import TestClient

from rdfpaths.registry import load_manifest
from rdfpaths.service import create_app

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "tests" / "fixtures"

CHAIN = "n:Laureate/n:affiliation/*/n:city/*/owl:sameAs/*"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    registry = load_manifest(ROOT / "tests" / "data" / "manifest.json")
    client = TestClient(create_app(registry))

    recordings = {
        "datasets.json": "/api/datasets",
        "classes_nobel.json": "/api/datasets/nobel/classes",
        "layout_nobel_laureate.json": "/api/datasets/nobel/classes/n:Laureate/layout?maxdepth=3",
        "outlines_d1.json": "/api/datasets/nobel/classes/n:Laureate/outlines?depth=1",
        "outlines_d1_lowcov.json": "/api/datasets/nobel/classes/n:Laureate/outlines?depth=1&maxCoverage=60",
        "outlines_d3.json": "/api/datasets/nobel/classes/n:Laureate/outlines?depth=3",
        "outlines_d3_q1affiliation.json": "/api/datasets/nobel/classes/n:Laureate/outlines?depth=3&q1=affiliation",
        "outlines_d3_pattern_full.json": (
            "/api/datasets/nobel/classes/n:Laureate/outlines?depth=3&q1=affiliation&q2=n:city&q3=owl:sameAs"
        ),
        "detail_name.json": "/api/datasets/nobel/outline?template=n:Laureate/foaf:name/*",
        "detail_chain.json": f"/api/datasets/nobel/outline?template={CHAIN}",
        "detail_chain_dbp.json": f"/api/datasets/nobel/outline?template={CHAIN}&target=dbp",
    }
    for name, url in recordings.items():
        response = client.get(url)
        response.raise_for_status()
        (OUT / name).write_text(json.dumps(response.json(), indent=2) + "\n")
        print(f"recorded {name}")

    query = client.get(
        "/api/datasets/nobel/outline/sparql",
        params={"template": "n:Laureate/foaf:name/*", "shape": "terminal-values-distinct"},
    )
    query.raise_for_status()
    (OUT / "sparql_name_distinct.txt").write_text(query.text)
    print("recorded sparql_name_distinct.txt")


if __name__ == "__main__":
    main()
