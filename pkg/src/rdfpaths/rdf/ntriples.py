"""N-Triples parsing and serialization.

Covers the full N-Triples grammar except blank nodes, which this engine
deliberately does not support.
"""
from __future__ import annotations

from typing import IO, Iterable

from .terms import Term, Triple, iri, literal, make_triple, ntriples_line


class ParseError(ValueError):
    """Syntax error carrying a 1-based line (and optional column)."""

    def __init__(self, message: str, line: int, column: int | None = None):
        loc = f"line {line}" if column is None else f"line {line}, col {column}"
        super().__init__(f"{loc}: {message}")
        self.line = line
        self.column = column


class UnsupportedFeatureError(ParseError):
    """Input uses an RDF feature outside the supported subset."""


_WS = " \t"


class _LineScanner:
    def __init__(self, text: str, lineno: int):
        self.text = text
        self.pos = 0
        self.lineno = lineno

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.lineno, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str, what: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {what}")
        self.pos += 1

    def read_until(self, terminator: str, what: str) -> str:
        """Consume raw characters up to ``terminator``, honoring backslash escapes."""
        out = []
        while True:
            if self.pos >= len(self.text):
                raise ParseError(f"unterminated {what}", self.lineno, self.pos + 1)
            ch = self.text[self.pos]
            if ch == terminator:
                self.pos += 1
                return "".join(out)
            if ch == "\\":
                out.append(self._read_escape())
            else:
                self.pos += 1
                out.append(ch)

    def _read_escape(self) -> str:
        start = self.pos
        self.pos += 1  # backslash
        if self.pos >= len(self.text):
            raise ParseError("dangling escape", self.lineno, start + 1)
        code = self.text[self.pos]
        self.pos += 1
        simple = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
        if code in simple:
            return simple[code]
        if code in ("u", "U"):
            width = 4 if code == "u" else 8
            digits = self.text[self.pos : self.pos + width]
            if len(digits) != width:
                raise ParseError("truncated unicode escape", self.lineno, start + 1)
            try:
                cp = int(digits, 16)
            except ValueError:
                raise ParseError("invalid unicode escape", self.lineno, start + 1) from None
            self.pos += width
            return chr(cp)
        raise ParseError(f"unknown escape \\{code}", self.lineno, start + 1)


def _validate_iri(value: str, scanner: _LineScanner) -> str:
    if not value:
        raise scanner.error("empty IRI")
    if any(ch in value for ch in ' <>"{}|^`') or any(ord(ch) < 0x21 for ch in value):
        raise scanner.error(f"malformed IRI <{value}>")
    if ":" not in value:
        raise scanner.error(f"relative IRI <{value}> not allowed")
    return value


def _parse_term(scanner: _LineScanner, *, as_subject: bool = False, as_predicate: bool = False) -> Term:
    scanner.skip_ws()
    ch = scanner.peek()
    if ch == "<":
        scanner.pos += 1
        value = scanner.read_until(">", "IRI")
        return iri(_validate_iri(value, scanner))
    if ch == "_":
        raise UnsupportedFeatureError("blank nodes are not supported", scanner.lineno, scanner.pos + 1)
    if ch == '"':
        if as_subject:
            raise scanner.error("literal not allowed as subject")
        if as_predicate:
            raise scanner.error("literal not allowed as predicate")
        scanner.pos += 1
        lex = scanner.read_until('"', "string")
        if scanner.peek() == "@":
            scanner.pos += 1
            tag = _read_langtag(scanner)
            return literal(lex, language=tag)
        if scanner.text[scanner.pos : scanner.pos + 2] == "^^":
            scanner.pos += 2
            scanner.expect("<", "datatype IRI")
            dt = scanner.read_until(">", "IRI")
            return literal(lex, datatype=_validate_iri(dt, scanner))
        return literal(lex)
    if scanner.at_end():
        raise scanner.error("unexpected end of statement")
    raise scanner.error(f"unexpected character {ch!r}")


def _read_langtag(scanner: _LineScanner) -> str:
    start = scanner.pos
    while scanner.pos < len(scanner.text) and (scanner.text[scanner.pos].isalnum() or scanner.text[scanner.pos] == "-"):
        scanner.pos += 1
    tag = scanner.text[start : scanner.pos]
    if not tag:
        raise scanner.error("empty language tag")
    return tag


def parse_ntriples(source: str | IO[str]) -> list[Triple]:
    """Parse an N-Triples document into a list of triples.

    Comment lines and blank lines are skipped; errors report the 1-based
    line they occur on.
    """
    text = source if isinstance(source, str) else source.read()
    triples: list[Triple] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        scanner = _LineScanner(raw, lineno)
        subject = _parse_term(scanner, as_subject=True)
        predicate = _parse_term(scanner, as_predicate=True)
        obj = _parse_term(scanner)
        scanner.skip_ws()
        if scanner.peek() != ".":
            raise scanner.error("missing final '.'")
        scanner.pos += 1
        scanner.skip_ws()
        if not scanner.at_end() and scanner.peek() != "#":
            raise scanner.error("trailing content after '.'")
        triples.append(make_triple(subject, predicate, obj))
    return triples


def serialize_ntriples(triples: Iterable[Triple]) -> str:
    """One canonical statement line per triple, trailing newline included."""
    lines = [ntriples_line(t) for t in triples]
    return "\n".join(lines) + ("\n" if lines else "")
