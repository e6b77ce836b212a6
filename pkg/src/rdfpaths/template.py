"""Path templates: `Class/p1/*/p2/*/.../pn/*`.

The template string is the canonical textual identifier of a path
analysis: the first element names the start class, each predicate is
followed by a `*` marking the (untyped) set of resources it reaches.
Elements are CURIEs or bare full IRIs; full IRIs are recognized by
containing `://`, so their internal slashes are kept together.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .rdf.prefixes import PrefixMap

_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:$")


class TemplateError(ValueError):
    pass


@dataclass(frozen=True)
class PathTemplate:
    start_class: str
    predicates: tuple[str, ...]

    def __post_init__(self):
        if not self.predicates:
            raise TemplateError("template needs at least one predicate")

    @property
    def depth(self) -> int:
        return len(self.predicates)

    def prefix(self, length: int) -> "PathTemplate":
        return PathTemplate(self.start_class, self.predicates[:length])


def _split_elements(tokens: list[str], text: str) -> list[str]:
    """Group '/'-separated raw tokens into IRI/CURIE elements.

    A token containing ':' starts a new element; a `scheme:` token
    followed by an empty token opens a full IRI whose subsequent
    colon-free tokens are path segments of that IRI.
    """
    elements: list[str] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "":
            raise TemplateError(f"empty segment in template {text!r}")
        if ":" not in tok:
            raise TemplateError(f"segment {tok!r} is neither a CURIE nor an IRI")
        if _SCHEME.match(tok) and i + 1 < len(tokens) and tokens[i + 1] == "":
            # full IRI: scheme '//' authority, then colon-free segments
            parts = [tok, ""]
            i += 2
            while i < len(tokens) and tokens[i] != "*" and ":" not in tokens[i]:
                parts.append(tokens[i])
                i += 1
            element = "/".join(parts)
            if element.endswith("//") or len(parts) < 3:
                raise TemplateError(f"malformed IRI {element!r} in template")
            elements.append(element)
        else:
            elements.append(tok)
            i += 1
    return elements


def _expand(element: str, prefixes: PrefixMap) -> str:
    if "://" in element:
        return element
    label = element.split(":", 1)[0]
    if label not in prefixes:
        raise TemplateError(f"unbound prefix {label!r} in template element {element!r}")
    return prefixes.expand(element)


def parse_template(text: str, prefixes: PrefixMap) -> PathTemplate:
    """Parse a template string, expanding every element to a full IRI."""
    if re.search(r"\s", text):
        raise TemplateError("whitespace is not allowed in a template string")
    if not text:
        raise TemplateError("empty template")
    tokens = text.split("/")
    star_positions = [i for i, tok in enumerate(tokens) if tok == "*"]
    if not star_positions:
        raise TemplateError("template has no '*': missing terminal star")
    if tokens[-1] != "*":
        raise TemplateError("template must end with '*'")

    # Runs of tokens between stars; the first run holds class + p1,
    # every later run exactly one predicate.
    runs: list[list[str]] = [[]]
    for tok in tokens:
        if tok == "*":
            runs.append([])
        else:
            runs[-1].append(tok)
    if runs[-1]:
        raise TemplateError("trailing predicate without '*'")
    runs.pop()

    first = _split_elements(runs[0], text)
    if len(first) != 2:
        raise TemplateError(
            "template must start with 'Class/p1/*': found "
            f"{len(first)} element(s) before the first '*'"
        )
    elements = [first[0], first[1]]
    for run in runs[1:]:
        elems = _split_elements(run, text)
        if len(elems) != 1:
            raise TemplateError("each '*' must be followed by exactly one predicate (or end the template)")
        elements.append(elems[0])

    expanded = [_expand(e, prefixes) for e in elements]
    return PathTemplate(expanded[0], tuple(expanded[1:]))


def _compact(iri_value: str, prefixes: PrefixMap) -> str:
    curie = prefixes.compact(iri_value)
    if curie != iri_value and "/" not in curie:
        return curie
    if "://" not in iri_value:
        raise TemplateError(f"IRI {iri_value!r} has no prefix binding and no '://'; cannot appear in a template")
    return iri_value


def format_template(template: PathTemplate, prefixes: PrefixMap) -> str:
    """Canonical template string, compacted with ``prefixes``."""
    parts = [_compact(template.start_class, prefixes)]
    for pred in template.predicates:
        parts.append(_compact(pred, prefixes))
        parts.append("*")
    return "/".join(parts)
