"""Evaluation of the six chain query shapes against a local dataset.

This is deliberately not a SPARQL engine: a dedicated parser recognizes
exactly the queries ``generate`` emits (modulo whitespace) and anything
else is rejected with an unsupported-query error naming the construct.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Mapping

from ..rdf.dataset import Dataset
from ..rdf.prefixes import PrefixMap
from ..rdf.terms import RDF_TYPE, XSD_INTEGER, Term, literal
from .queries import (
    COVERAGE_NUMERATOR,
    ENTITY_TOTAL,
    EXTENSION_DISCOVERY,
    PREDICATE_DISCOVERY,
    TERMINAL_VALUES,
    TERMINAL_VALUES_DISTINCT,
)


class UnsupportedQueryError(ValueError):
    pass


@dataclass(frozen=True)
class ResultTable:
    variables: tuple[str, ...]
    rows: tuple[Mapping[str, Term], ...]

    def __post_init__(self):
        for row in self.rows:
            if set(row) != set(self.variables):
                raise ValueError("row does not bind exactly the projected variables")

    def single_int(self) -> int:
        (row,) = self.rows
        (term,) = row.values()
        return int(term.value)

    def column(self, var: str) -> list[Term]:
        return [row[var] for row in self.rows]


_Q_TOKEN = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<comment>\#[^\n]*)
    | (?P<iriref><[^<>"{}|^`\\\x00-\x20]*>)
    | (?P<var>\?[A-Za-z_][A-Za-z0-9_]*)
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<lbrace>\{)
    | (?P<rbrace>\})
    | (?P<dot>\.)
    | (?P<number>\d+)
    | (?P<word>[A-Za-z_][A-Za-z0-9_.-]*:?[A-Za-z0-9_.-]*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"prefix", "select", "distinct", "where", "count", "as", "service", "limit"}


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _Q_TOKEN.match(text, pos)
        if m is None:
            raise UnsupportedQueryError(f"unexpected character {text[pos]!r} in query")
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append((kind, m.group()))
        pos = m.end()
    return tokens


@dataclass
class ParsedQuery:
    shape: str
    class_iri: str
    predicates: tuple[str, ...]
    service: str | None = None
    limit: int | None = None
    prefixes: PrefixMap = field(default_factory=PrefixMap)


class _QueryParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.prefixes = PrefixMap()

    def fail(self, message: str):
        raise UnsupportedQueryError(message)

    def peek_kind(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self, what: str) -> tuple[str, str]:
        if self.pos >= len(self.tokens):
            self.fail(f"unexpected end of query, expected {what}")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def keyword(self) -> str | None:
        """Consume a keyword if the next token is one; returns lowercase text."""
        if self.pos < len(self.tokens):
            kind, text = self.tokens[self.pos]
            if kind == "word" and text.lower() in _KEYWORDS:
                self.pos += 1
                return text.lower()
        return None

    def expect_keyword(self, word: str):
        kind, text = self.next(word.upper())
        if kind != "word" or text.lower() != word:
            self.fail(f"expected {word.upper()}, found {text!r}")

    def expect(self, kind: str, what: str) -> str:
        got_kind, text = self.next(what)
        if got_kind != kind:
            self.fail(f"expected {what}, found {text!r}")
        return text

    def iri(self, what: str) -> str:
        kind, text = self.next(what)
        if kind == "iriref":
            return text[1:-1]
        if kind == "word" and ":" in text:
            label, _, local = text.partition(":")
            if label not in self.prefixes:
                self.fail(f"undefined prefix {label!r} in query")
            return self.prefixes.namespace(label) + local
        self.fail(f"expected IRI for {what}, found {text!r}")

    def parse(self) -> ParsedQuery:
        while True:
            save = self.pos
            word = self.keyword()
            if word == "prefix":
                kind, label_tok = self.next("prefix label")
                if kind != "word" or not label_tok.endswith(":"):
                    self.fail("malformed PREFIX declaration")
                ns = self.expect("iriref", "namespace IRI")[1:-1]
                self.prefixes.bind(label_tok[:-1], ns)
                continue
            self.pos = save
            break

        self.expect_keyword("select")
        projection = self._projection()
        self.expect_keyword("where")
        self.expect("lbrace", "'{'")
        patterns, service = self._group()
        limit = None
        if self.pos < len(self.tokens):
            self.expect_keyword("limit")
            limit = int(self.expect("number", "limit value"))
        if self.pos < len(self.tokens):
            self.fail(f"trailing content after query: {self.tokens[self.pos][1]!r}")
        return self._classify(projection, patterns, service, limit)

    def _projection(self) -> tuple:
        if self.peek_kind() == "lparen":
            self.next("(")
            self.expect_keyword("count")
            self.expect("lparen", "'('")
            self.expect_keyword("distinct")
            var = self.expect("var", "?s")
            self.expect("rparen", "')'")
            self.expect_keyword("as")
            alias = self.expect("var", "alias variable")
            self.expect("rparen", "')'")
            return ("count", var, alias)
        save = self.pos
        word = self.keyword()
        if word == "distinct":
            return ("distinct", self.expect("var", "projected variable"))
        self.pos = save
        return ("plain", self.expect("var", "projected variable"))

    def _group(self) -> tuple[list[tuple], tuple | None]:
        patterns = []
        service = None
        while True:
            kind = self.peek_kind()
            if kind == "rbrace":
                self.next("}")
                return patterns, service
            save = self.pos
            word = self.keyword()
            if word == "service":
                target = self.expect("iriref", "service IRI")[1:-1]
                self.expect("lbrace", "'{'")
                inner, nested = self._group()
                if nested is not None:
                    self.fail("nested SERVICE blocks are not supported")
                if service is not None:
                    self.fail("multiple SERVICE blocks are not supported")
                service = (target, inner)
                continue
            self.pos = save
            patterns.append(self._pattern())

    def _pattern(self) -> tuple:
        terms = []
        for role in ("subject", "predicate", "object"):
            kind = self.peek_kind()
            if kind == "var":
                terms.append(("var", self.next("variable")[1]))
            elif kind in ("iriref", "word"):
                terms.append(("iri", self.iri(role)))
            else:
                self.fail(f"unsupported term in triple pattern ({role})")
        self.expect("dot", "'.' after triple pattern")
        return tuple(terms)

    def _classify(self, projection, patterns, service, limit) -> ParsedQuery:
        if not patterns:
            self.fail("empty WHERE clause")
        first = patterns[0]
        if first[0] != ("var", "?s") or first[1] != ("iri", RDF_TYPE) or first[2][0] != "iri":
            self.fail("query must start with the pattern '?s rdf:type <class>'")
        class_iri = first[2][1]

        chain = patterns[1:]
        discovery = False
        if chain and chain[-1][1] == ("var", "?p"):
            tail = chain[-1]
            if tail[2] != ("var", "?x"):
                self.fail("discovery pattern must be '?o ?p ?x'")
            chain = chain[:-1]
            discovery = True

        predicates = []
        expected = _expected_chain_vars(len(chain))
        for i, pattern in enumerate(chain):
            subj, pred, obj = pattern
            if pred[0] != "iri":
                self.fail("chain predicates must be IRIs")
            if subj != ("var", expected[i]) or obj != ("var", expected[i + 1]):
                self.fail(
                    "chain variables must be named ?s, ?o1..?o(n-1), ?o "
                    f"(found {subj[1]} {obj[1]})"
                )
            predicates.append(pred[1])

        service_iri = None
        if service is not None:
            target, inner = service
            if len(inner) != 1:
                self.fail("SERVICE block must contain exactly the discovery pattern")
            tail = inner[0]
            last_var = expected[-1]
            if tail != (("var", last_var), ("var", "?p"), ("var", "?x")):
                self.fail(f"SERVICE pattern must be '{last_var} ?p ?x'")
            if discovery:
                self.fail("discovery pattern cannot appear both inside and outside SERVICE")
            discovery = True
            service_iri = target

        kind = projection[0]
        if discovery:
            if projection != ("distinct", "?p"):
                self.fail("discovery queries must project DISTINCT ?p")
            shape = EXTENSION_DISCOVERY if service_iri else PREDICATE_DISCOVERY
        elif kind == "count":
            if projection[1] != "?s":
                self.fail("COUNT queries must count DISTINCT ?s")
            shape = ENTITY_TOTAL if not predicates else COVERAGE_NUMERATOR
        else:
            if not predicates:
                self.fail("value queries need at least one chain pattern")
            if projection[1] != "?o":
                self.fail("value queries must project ?o")
            shape = TERMINAL_VALUES_DISTINCT if kind == "distinct" else TERMINAL_VALUES

        return ParsedQuery(shape, class_iri, tuple(predicates), service_iri, limit, self.prefixes)


def _expected_chain_vars(n: int) -> list[str]:
    if n == 0:
        return ["?s"]
    return ["?s"] + [f"?o{i}" for i in range(1, n)] + ["?o"]


def parse_query(text: str) -> ParsedQuery:
    return _QueryParser(text).parse()


ServiceResolver = Callable[[str], Dataset | None]


def _walk_counts(ds: Dataset, class_iri: str, predicates: tuple[str, ...]) -> dict[tuple[int, int], int]:
    """(start, terminal) -> number of instantiations, by plain chain walk."""
    class_handle = ds.handle_for_iri(class_iri)
    if class_handle is None or not ds.is_class(class_handle):
        return {}
    frontier = {(s, s): 1 for s in ds.class_members(class_handle)}
    for pred_iri in predicates:
        pred = ds.handle_for_iri(pred_iri)
        nxt: dict[tuple[int, int], int] = {}
        if pred is not None:
            for (start, node), mult in frontier.items():
                if ds.is_literal_handle(node):
                    continue
                for obj in ds.objects(pred, node):
                    key = (start, obj)
                    nxt[key] = nxt.get(key, 0) + mult
        frontier = nxt
    return frontier


def _count_row(n: int) -> ResultTable:
    return ResultTable(("count",), ({"count": literal(str(n), datatype=XSD_INTEGER)},))


def evaluate(
    text: str,
    dataset: Dataset,
    services: Mapping[str, Dataset] | ServiceResolver | None = None,
) -> ResultTable:
    """Evaluate one of the six supported query shapes against ``dataset``.

    ``services`` resolves SERVICE IRIs for extension-discovery queries;
    it may be a mapping or a callable.
    """
    query = parse_query(text)
    frontier = _walk_counts(dataset, query.class_iri, query.predicates)

    if query.shape in (TERMINAL_VALUES, TERMINAL_VALUES_DISTINCT):
        per_term: dict[Term, int] = {}
        for (_, node), mult in frontier.items():
            term = dataset.term(node)
            per_term[term] = per_term.get(term, 0) + mult
        rows = []
        for term in sorted(per_term, key=Term.sort_key):
            copies = 1 if query.shape == TERMINAL_VALUES_DISTINCT else per_term[term]
            rows.extend({"o": term} for _ in range(copies))
        if query.limit is not None:
            rows = rows[: query.limit]
        return ResultTable(("o",), tuple(rows))

    if query.shape == COVERAGE_NUMERATOR:
        return _count_row(len({start for start, _ in frontier}))

    if query.shape == ENTITY_TOTAL:
        handle = dataset.handle_for_iri(query.class_iri)
        members = dataset.class_members(handle) if handle is not None else frozenset()
        return _count_row(len(members))

    # discovery shapes: distinct predicates of the chain's terminal nodes
    if query.shape == EXTENSION_DISCOVERY:
        target = None
        if services is not None:
            target = services(query.service) if callable(services) else services.get(query.service)
        if target is None:
            raise UnsupportedQueryError(f"cannot resolve SERVICE <{query.service}>")
    else:
        target = dataset

    if query.predicates:
        nodes = {node for _, node in frontier if not dataset.is_literal_handle(node)}
    else:
        handle = dataset.handle_for_iri(query.class_iri)
        nodes = set(dataset.class_members(handle)) if handle is not None else set()

    predicates: set[str] = set()
    for node in nodes:
        if target is dataset:
            subject = node
        else:
            subject = target.handle_for_iri(dataset.term(node).value)
            if subject is None:
                continue
        for pred, _ in target.outgoing(subject):
            predicates.add(target.term(pred).value)
    rows = tuple({"p": Term("iri", p)} for p in sorted(predicates))
    if query.limit is not None:
        rows = rows[: query.limit]
    return ResultTable(("p",), rows)
