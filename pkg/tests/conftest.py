import json
from pathlib import Path

import pytest

from rdfpaths.rdf import PrefixMap, build_dataset, iri, literal, make_triple
from rdfpaths.rdf.dataset import DatasetLink
from rdfpaths.rdf.terms import RDF_TYPE, XSD_NS

N = "http://nobel.example.org/"
D = "http://dbpedia.example.org/resource/"
FOAF = "http://xmlns.com/foaf/0.1/"
OWL = "http://www.w3.org/2002/07/owl#"
GEO = "http://www.w3.org/2003/01/geo/wgs84_pos#"

NOBEL_PREFIXES = {
    "n": N,
    "d": D,
    "foaf": FOAF,
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "owl": OWL,
    "xsd": XSD_NS,
}
DBP_PREFIXES = {"d": D, "geo": GEO, "xsd": XSD_NS}


def f1_triples():
    t = lambda s, p, o: make_triple(s, p, o)  # noqa: E731
    return [
        t(iri(N + "MarieCurie"), iri(RDF_TYPE), iri(N + "Laureate")),
        t(iri(N + "PierreCurie"), iri(RDF_TYPE), iri(N + "Laureate")),
        t(iri(N + "MarieCurie"), iri(FOAF + "name"), literal("Marie Curie", language="en")),
        t(iri(N + "MarieCurie"), iri(N + "affiliation"), iri(N + "Sorbonne")),
        t(iri(N + "Sorbonne"), iri(RDF_TYPE), iri(N + "University")),
        t(iri(N + "Sorbonne"), iri(N + "city"), iri(N + "Paris")),
        t(iri(N + "Paris"), iri(RDF_TYPE), iri(N + "City")),
        t(iri(N + "Paris"), iri(OWL + "sameAs"), iri(D + "Paris")),
        t(iri(N + "MarieCurie"), iri(N + "year"), literal("1903", datatype=XSD_NS + "integer")),
        t(iri(N + "PierreCurie"), iri(N + "year"), literal("1903", datatype=XSD_NS + "integer")),
    ]


def f2_triples():
    return [
        make_triple(iri(D + "Paris"), iri(GEO + "lat"), literal("48.856701", datatype=XSD_NS + "float")),
        make_triple(iri(D + "Paris"), iri(GEO + "long"), literal("2.350800", datatype=XSD_NS + "float")),
    ]


@pytest.fixture(scope="session")
def f1():
    return build_dataset(
        "nobel",
        "Nobel",
        f1_triples(),
        PrefixMap(NOBEL_PREFIXES),
        links=[DatasetLink("dbp", OWL + "sameAs")],
        known_ids=["nobel", "dbp"],
    )


@pytest.fixture(scope="session")
def f2():
    return build_dataset("dbp", "DBpedia sample", f2_triples(), PrefixMap(DBP_PREFIXES))


DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture()
def fixture_manifest(tmp_path):
    """Copy of the checked-in fixture manifest rooted in a tmp dir."""
    manifest = json.loads((DATA_DIR / "manifest.json").read_text())
    for entry in manifest["datasets"]:
        for name in entry["files"]:
            (tmp_path / name).write_bytes((DATA_DIR / name).read_bytes())
    path = tmp_path / "manifest.json"
    path.write_text(json.dumps(manifest))
    return path
