"""Parser for the Turtle subset used by dataset files.

Supported: @prefix declarations, prefixed names, <absolute IRIs>, the
``a`` keyword, ``;`` / ``,`` continuation lists, and string, numeric and
boolean literals with optional ``^^datatype`` or ``@lang``. Blank nodes,
collections and anonymous nodes are rejected.
"""
from __future__ import annotations

import re
from typing import IO

from .ntriples import ParseError, UnsupportedFeatureError
from .prefixes import PrefixMap
from .terms import (
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    Term,
    Triple,
    iri,
    literal,
    make_triple,
)

_TOKEN = re.compile(
    r"""
      (?P<ws>[ \t\r\n]+)
    | (?P<comment>\#[^\n]*)
    | (?P<iriref><[^<>"{}|^`\\\x00-\x20]*>)
    | (?P<string>"(?:[^"\\\n]|\\.)*")
    | (?P<unterminated>"(?:[^"\\\n]|\\.)*$)
    | (?P<dtsep>\^\^)
    | (?P<atprefix>@prefix\b)
    | (?P<langtag>@[A-Za-z][A-Za-z0-9-]*)
    | (?P<number>[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
    | (?P<punct>[.;,])
    | (?P<blank>_:[^ \t\r\n]*)
    | (?P<pname>[A-Za-z_][A-Za-z0-9_.-]*?:[A-Za-z0-9_][A-Za-z0-9_.-]*|[A-Za-z_][A-Za-z0-9_.-]*?:)
    | (?P<keyword>@?[A-Za-z][A-Za-z0-9_-]*)
    """,
    re.VERBOSE | re.MULTILINE,
)

_STRING_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        tok_text = m.group()
        col = m.start() - line_start + 1
        if kind == "unterminated":
            raise ParseError("unterminated string", line, col)
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, tok_text, line, col))
        newlines = tok_text.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + tok_text.rfind("\n") + 1
        pos = m.end()
    return tokens


def _unescape(raw: str, line: int, col: int) -> str:
    out = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        code = raw[i + 1]
        if code in _STRING_ESCAPES:
            out.append(_STRING_ESCAPES[code])
            i += 2
        elif code in ("u", "U"):
            width = 4 if code == "u" else 8
            digits = raw[i + 2 : i + 2 + width]
            if len(digits) != width:
                raise ParseError("truncated unicode escape", line, col)
            out.append(chr(int(digits, 16)))
            i += 2 + width
        else:
            raise ParseError(f"unknown escape \\{code}", line, col)
    return "".join(out)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0
        self.prefixes = PrefixMap()
        self.triples: list[Triple] = []

    def error(self, message: str, token: _Token | None = None) -> ParseError:
        if token is None:
            token = self.tokens[-1] if self.tokens else _Token("eof", "", 1, 1)
        return ParseError(message, token.line, token.col)

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, expect_what: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise self.error(f"unexpected end of input, expected {expect_what}")
        self.pos += 1
        return tok

    def expect_punct(self, ch: str) -> None:
        tok = self.next(f"'{ch}'")
        if tok.kind != "punct" or tok.text != ch:
            raise self.error(f"expected '{ch}', found {tok.text!r}", tok)

    def parse(self) -> tuple[PrefixMap, list[Triple]]:
        while self.peek() is not None:
            tok = self.peek()
            if tok.kind == "atprefix":
                self._prefix_decl()
            else:
                self._statement()
        return self.prefixes, self.triples

    def _prefix_decl(self) -> None:
        self.next("@prefix")
        label_tok = self.next("prefix label")
        if label_tok.kind != "pname" or not label_tok.text.endswith(":"):
            raise self.error("expected prefix label ending in ':'", label_tok)
        iri_tok = self.next("namespace IRI")
        if iri_tok.kind != "iriref":
            raise self.error("expected namespace <IRI>", iri_tok)
        self.expect_punct(".")
        self.prefixes.bind(label_tok.text[:-1], iri_tok.text[1:-1])

    def _statement(self) -> None:
        subject = self._resource("subject")
        while True:
            predicate = self._predicate()
            while True:
                obj = self._object()
                self.triples.append(make_triple(subject, predicate, obj))
                tok = self.next("'.', ';' or ','")
                if tok.kind != "punct":
                    raise self.error(f"expected '.', ';' or ',', found {tok.text!r}", tok)
                if tok.text == ",":
                    continue
                break
            if tok.text == ";":
                # A dangling ';' before '.' is tolerated, as in common Turtle.
                nxt = self.peek()
                if nxt is not None and nxt.kind == "punct" and nxt.text == ".":
                    self.pos += 1
                    return
                continue
            return

    def _resource(self, role: str) -> Term:
        tok = self.next(role)
        if tok.kind == "iriref":
            return iri(tok.text[1:-1])
        if tok.kind == "pname":
            return iri(self._expand(tok))
        if tok.kind == "blank":
            raise UnsupportedFeatureError("blank nodes are not supported", tok.line, tok.col)
        raise self.error(f"expected IRI or prefixed name as {role}, found {tok.text!r}", tok)

    def _predicate(self) -> Term:
        tok = self.peek()
        if tok is not None and tok.kind == "keyword" and tok.text == "a":
            self.pos += 1
            return iri(RDF_TYPE)
        return self._resource("predicate")

    def _object(self) -> Term:
        tok = self.next("object")
        if tok.kind == "iriref":
            return iri(tok.text[1:-1])
        if tok.kind == "pname":
            return iri(self._expand(tok))
        if tok.kind == "blank":
            raise UnsupportedFeatureError("blank nodes are not supported", tok.line, tok.col)
        if tok.kind == "string":
            lex = _unescape(tok.text[1:-1], tok.line, tok.col)
            nxt = self.peek()
            if nxt is not None and nxt.kind == "langtag":
                self.pos += 1
                return literal(lex, language=nxt.text[1:])
            if nxt is not None and nxt.kind == "dtsep":
                self.pos += 1
                dt_tok = self.next("datatype")
                if dt_tok.kind == "iriref":
                    return literal(lex, datatype=dt_tok.text[1:-1])
                if dt_tok.kind == "pname":
                    return literal(lex, datatype=self._expand(dt_tok))
                raise self.error("expected datatype IRI after ^^", dt_tok)
            return literal(lex)
        if tok.kind == "number":
            if "e" in tok.text.lower():
                return literal(tok.text, datatype=XSD_DOUBLE)
            if "." in tok.text:
                return literal(tok.text, datatype=XSD_DECIMAL)
            return literal(tok.text, datatype=XSD_INTEGER)
        if tok.kind == "keyword" and tok.text in ("true", "false"):
            return literal(tok.text, datatype=XSD_BOOLEAN)
        raise self.error(f"expected object term, found {tok.text!r}", tok)

    def _expand(self, tok: _Token) -> str:
        label, _, local = tok.text.partition(":")
        if label not in self.prefixes:
            raise ParseError(f"undefined prefix {label!r}", tok.line, tok.col)
        return self.prefixes.namespace(label) + local


def parse_turtle(source: str | IO[str]) -> tuple[PrefixMap, list[Triple]]:
    """Parse the supported Turtle subset into (prefixes, triples)."""
    text = source if isinstance(source, str) else source.read()
    return _Parser(_tokenize(text)).parse()
