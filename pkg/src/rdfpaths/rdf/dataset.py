"""Immutable, indexed triple collections.

Terms are interned to integer handles at build time; traversal and
aggregation in the engine work on handles only. A Dataset never changes
after ``build_dataset`` returns, so concurrent readers need no locking.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .prefixes import PrefixMap
from .terms import RDF_TYPE, Term, Triple, ntriples_line


@dataclass(frozen=True)
class DatasetLink:
    target_id: str
    predicate: str


class Dataset:
    """A named triple set with by-subject, by-(predicate,subject) and
    by-class indexes."""

    def __init__(
        self,
        id: str,
        name: str,
        triples: Iterable[Triple],
        prefixes: PrefixMap | None = None,
        links: Sequence[DatasetLink] = (),
    ):
        self.id = id
        self.name = name
        self.prefixes = prefixes or PrefixMap()
        self.links = tuple(links)

        self._terms: list[Term] = []
        self._handles: dict[Term, int] = {}

        unique = sorted(set(triples), key=lambda t: (t.subject.sort_key(), t.predicate.sort_key(), t.object.sort_key()))
        self.triple_count = len(unique)

        rdf_type = self._intern(Term("iri", RDF_TYPE))
        spo: dict[int, list[tuple[int, int]]] = {}
        pos: dict[int, dict[int, list[int]]] = {}
        classes: dict[int, set[int]] = {}
        types: dict[int, list[int]] = {}
        for t in unique:
            s = self._intern(t.subject)
            p = self._intern(t.predicate)
            o = self._intern(t.object)
            spo.setdefault(s, []).append((p, o))
            pos.setdefault(p, {}).setdefault(s, []).append(o)
            if p == rdf_type and t.object.is_iri:
                classes.setdefault(o, set()).add(s)
                types.setdefault(s, []).append(o)

        self._rdf_type = rdf_type
        self._spo = {s: tuple(pairs) for s, pairs in spo.items()}
        self._pos = {p: {s: tuple(objs) for s, objs in by_s.items()} for p, by_s in pos.items()}
        self._classes = {c: frozenset(members) for c, members in classes.items()}
        self._types = {s: tuple(ts) for s, ts in types.items()}
        self._literal = tuple(term.is_literal for term in self._terms)

        digest = hashlib.sha256()
        for t in unique:
            digest.update(ntriples_line(t).encode("utf-8"))
            digest.update(b"\n")
        self.content_hash = digest.hexdigest()

    def _intern(self, term: Term) -> int:
        handle = self._handles.get(term)
        if handle is None:
            handle = len(self._terms)
            self._terms.append(term)
            self._handles[term] = handle
        return handle

    # -- handle-level access (engine) ------------------------------------

    def term(self, handle: int) -> Term:
        return self._terms[handle]

    def handle(self, term: Term) -> int | None:
        return self._handles.get(term)

    def handle_for_iri(self, iri_value: str) -> int | None:
        return self._handles.get(Term("iri", iri_value))

    def is_literal_handle(self, handle: int) -> bool:
        return self._literal[handle]

    def outgoing(self, subject: int) -> tuple[tuple[int, int], ...]:
        """All (predicate, object) pairs for a subject handle."""
        return self._spo.get(subject, ())

    def objects(self, predicate: int, subject: int) -> tuple[int, ...]:
        by_s = self._pos.get(predicate)
        if by_s is None:
            return ()
        return by_s.get(subject, ())

    def class_members(self, class_handle: int) -> frozenset[int]:
        return self._classes.get(class_handle, frozenset())

    def class_handles(self) -> list[int]:
        return list(self._classes)

    def is_class(self, handle: int) -> bool:
        return handle in self._classes

    def types_of(self, handle: int) -> tuple[int, ...]:
        return self._types.get(handle, ())

    def is_subject(self, handle: int) -> bool:
        return handle in self._spo

    # -- term-level access -------------------------------------------------

    def triples(self) -> list[Triple]:
        out = []
        for s, pairs in self._spo.items():
            for p, o in pairs:
                out.append(Triple(self._terms[s], self._terms[p], self._terms[o]))
        return out

    def classes(self) -> dict[str, int]:
        """Class IRI -> number of distinct member entities."""
        return {self._terms[c].value: len(members) for c, members in self._classes.items()}

    @property
    def class_count(self) -> int:
        return len(self._classes)


class DuplicateDatasetError(ValueError):
    pass


class UnknownDatasetError(KeyError):
    pass


def build_dataset(
    id: str,
    name: str,
    triples: Iterable[Triple],
    prefixes: PrefixMap | None = None,
    links: Sequence[DatasetLink] = (),
    known_ids: Iterable[str] | None = None,
) -> Dataset:
    """Build an immutable dataset; validates link targets against the ids
    being registered when ``known_ids`` is given."""
    ds = Dataset(id, name, triples, prefixes, links)
    if known_ids is not None:
        known = set(known_ids)
        for link in ds.links:
            if link.target_id not in known:
                raise UnknownDatasetError(f"dataset {id!r} links to unknown dataset {link.target_id!r}")
    return ds
