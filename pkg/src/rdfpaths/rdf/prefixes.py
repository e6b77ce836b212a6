"""Prefix maps: CURIE compaction and expansion."""
from __future__ import annotations

import re

from .terms import OWL_NS, RDF_NS, RDFS_NS, XSD_NS


class PrefixError(KeyError):
    """Expansion asked for a prefix with no binding."""


# Local names kept safe for CURIE display: one token, no separators that
# would collide with template or SPARQL syntax.
_SAFE_LOCAL = re.compile(r"^[A-Za-z_][A-Za-z0-9_.-]*$|^$")


class PrefixMap:
    """Bidirectional prefix-label / namespace mapping.

    Compaction picks the longest matching namespace, so round-tripping
    ``expand(compact(iri))`` is the identity whenever a binding applies.
    """

    def __init__(self, bindings: dict[str, str] | None = None):
        self._by_label: dict[str, str] = {}
        if bindings:
            for label, ns in bindings.items():
                self.bind(label, ns)

    def bind(self, label: str, namespace: str) -> None:
        if not namespace:
            raise ValueError("empty namespace")
        if label in self._by_label and self._by_label[label] != namespace:
            raise ValueError(f"prefix {label!r} already bound to {self._by_label[label]!r}")
        self._by_label[label] = namespace

    def bindings(self) -> dict[str, str]:
        return dict(self._by_label)

    def __contains__(self, label: str) -> bool:
        return label in self._by_label

    def __len__(self) -> int:
        return len(self._by_label)

    def namespace(self, label: str) -> str:
        try:
            return self._by_label[label]
        except KeyError:
            raise PrefixError(label) from None

    def compact(self, iri: str) -> str:
        """CURIE form of ``iri``, or the IRI unchanged if nothing matches."""
        best_label = None
        best_ns = ""
        for label, ns in self._by_label.items():
            if iri.startswith(ns) and len(ns) > len(best_ns):
                local = iri[len(ns):]
                if _SAFE_LOCAL.match(local):
                    best_label, best_ns = label, ns
        if best_label is None:
            return iri
        return f"{best_label}:{iri[len(best_ns):]}"

    def expand(self, curie: str) -> str:
        """Absolute IRI for a CURIE; raises PrefixError on unbound prefixes."""
        label, sep, local = curie.partition(":")
        if not sep:
            raise ValueError(f"not a CURIE: {curie!r}")
        return self.namespace(label) + local

    def merged(self, other: "PrefixMap") -> "PrefixMap":
        out = PrefixMap(self._by_label)
        for label, ns in other._by_label.items():
            if label not in out._by_label:
                out.bind(label, ns)
        return out


#: Prefixes that may appear in manifests and CLI arguments without an
#: explicit declaration.
WELL_KNOWN = PrefixMap(
    {
        "rdf": RDF_NS,
        "rdfs": RDFS_NS,
        "xsd": XSD_NS,
        "owl": OWL_NS,
        "foaf": "http://xmlns.com/foaf/0.1/",
        "geo": "http://www.w3.org/2003/01/geo/wgs84_pos#",
        "skos": "http://www.w3.org/2004/02/skos/core#",
        "dct": "http://purl.org/dc/terms/",
    }
)


def resolve_iri(text: str, prefixes: PrefixMap) -> str:
    """Interpret ``text`` as a full IRI (contains ://) or a CURIE."""
    if "://" in text:
        return text
    return prefixes.expand(text)
