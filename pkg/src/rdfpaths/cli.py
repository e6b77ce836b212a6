"""Command-line front door.

Exit codes: 0 success, 2 usage error, 3 data error, 4 bind failure.
All heavy lifting lives in the engine; the CLI only parses arguments,
loads the registry and serializes results.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import socket
import sys
from pathlib import Path

from .engine import FilterSpec, UnknownClassError, enumerate_outlines, filter_outlines
from .rdf import ParseError, PrefixError, PrefixMap, UnknownDatasetError, WELL_KNOWN, resolve_iri
from .registry import ManifestError, load_manifest, validate_manifest
from .serialize import outline_to_dict
from .template import TemplateError, format_template, parse_template

USAGE_ERROR = 2
DATA_ERROR = 3
BIND_ERROR = 4


class DataError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdfpaths", description="Path-based summaries of RDF datasets")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="enumerate outlines for a class and write them to a file")
    analyze.add_argument("--manifest", required=True)
    analyze.add_argument("--dataset", required=True)
    analyze.add_argument("--class", dest="class_ref", required=True, metavar="CLASS")
    analyze.add_argument("--depth", type=int, required=True)
    analyze.add_argument("--min-coverage", type=float)
    analyze.add_argument("--max-coverage", type=float)
    analyze.add_argument("--datatype", action="append", default=[])
    analyze.add_argument("--kind", action="append", default=[], choices=["iri-only", "literal-only", "mixed"])
    analyze.add_argument("--min-unique", type=int)
    analyze.add_argument("--max-unique", type=int)
    analyze.add_argument(
        "--q", nargs=2, action="append", default=[], metavar=("COLUMN", "SUBSTRING"),
        help="per-column predicate name filter",
    )
    analyze.add_argument("--format", choices=["json", "csv"], default="json")
    analyze.add_argument("--out", help="output file (default: stdout)")
    analyze.add_argument("--full-iris", action="store_true", help="do not compact IRIs in the output")

    template = sub.add_parser("template", help="parse or canonicalize a path template string")
    template.add_argument("action", choices=["parse", "format"])
    template.add_argument("text")
    template.add_argument("--prefix", action="append", default=[], metavar="LABEL=NAMESPACE")
    template.add_argument("--manifest")
    template.add_argument("--dataset")

    serve = sub.add_parser("serve", help="run the HTTP API plus the SPARQL loop-back endpoint")
    serve.add_argument("--manifest", required=True)
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--ui-dir", help="directory with the built web UI, served under /ui")

    validate = sub.add_parser("validate", help="check a manifest and all referenced files")
    validate.add_argument("--manifest", required=True)

    return parser


def _load_registry(manifest: str):
    try:
        return load_manifest(manifest)
    except (ManifestError, ValueError, KeyError) as err:
        raise DataError(str(err)) from err


def _flatten(distribution: dict) -> str:
    return "|".join(f"{key}:{value}" for key, value in distribution.items())


def _csv_bytes(docs: list[dict]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "template", "depth", "coverage", "count", "uniqueCount", "endpointKind",
            "datatypes", "languages", "minValue", "maxValue", "intermediateTypes",
        ]
    )
    for doc in docs:
        m = doc["measures"]
        writer.writerow(
            [
                doc["template"],
                m["depth"],
                m["coverage"],
                m["count"],
                m["uniqueCount"],
                m["endpointKind"],
                _flatten(m["datatypes"]),
                _flatten(m["languages"]),
                m.get("minValue", ""),
                m.get("maxValue", ""),
                "|".join(
                    f"{pos}={';'.join(f'{k}:{v}' for k, v in counts.items())}"
                    for pos, counts in doc["intermediateTypes"].items()
                ),
            ]
        )
    return out.getvalue()


def _cmd_analyze(args, parser) -> int:
    if args.depth < 1:
        parser.error("--depth must be at least 1")
    registry = _load_registry(args.manifest)
    try:
        ds = registry.get(args.dataset)
    except UnknownDatasetError as err:
        raise DataError(str(err)) from err
    prefixes = ds.prefixes.merged(WELL_KNOWN)
    try:
        class_iri = resolve_iri(args.class_ref, prefixes)
    except PrefixError as err:
        raise DataError(f"cannot resolve class {args.class_ref!r}: unbound prefix {err}") from err

    if args.depth > registry.config.analysis.max_depth:
        parser.error(f"--depth exceeds the manifest's maxDepth ({registry.config.analysis.max_depth})")

    columns = {}
    for column, needle in args.q:
        if not column.isdigit() or int(column) < 1:
            parser.error("--q COLUMN must be a positive integer")
        columns[int(column)] = needle

    try:
        spec = FilterSpec(
            min_coverage=args.min_coverage,
            max_coverage=args.max_coverage,
            columns=columns,
            datatypes=frozenset(resolve_iri(d, prefixes) for d in args.datatype) or None,
            endpoint_kinds=frozenset(args.kind) or None,
            min_unique=args.min_unique,
            max_unique=args.max_unique,
        )
    except (ValueError, PrefixError) as err:
        parser.error(str(err))

    try:
        outlines = enumerate_outlines(ds, class_iri, args.depth, registry.config.analysis)
    except UnknownClassError as err:
        raise DataError(str(err)) from err
    outlines = filter_outlines(outlines, spec, ds.prefixes)

    display = None if args.full_iris else ds.prefixes
    docs = [outline_to_dict(o, display) for o in outlines]
    if args.format == "json":
        payload = {
            "datasetId": ds.id,
            "class": class_iri if args.full_iris else ds.prefixes.compact(class_iri),
            "depth": args.depth,
            "outlines": docs,
        }
        text = json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    else:
        text = _csv_bytes(docs)

    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _template_prefixes(args) -> PrefixMap:
    pm = PrefixMap()
    if args.manifest and args.dataset:
        registry = _load_registry(args.manifest)
        try:
            pm = registry.get(args.dataset).prefixes
        except UnknownDatasetError as err:
            raise DataError(str(err)) from err
    for binding in args.prefix:
        label, sep, ns = binding.partition("=")
        if not sep or not label or not ns:
            raise DataError(f"bad --prefix {binding!r}, expected LABEL=NAMESPACE")
        pm.bind(label, ns)
    return pm.merged(WELL_KNOWN)


def _cmd_template(args, parser) -> int:
    prefixes = _template_prefixes(args)
    try:
        template = parse_template(args.text, prefixes)
    except TemplateError as err:
        parser.error(str(err))
    if args.action == "parse":
        doc = {
            "startClass": template.start_class,
            "predicates": list(template.predicates),
            "depth": template.depth,
        }
        print(json.dumps(doc, ensure_ascii=False, indent=2))
    else:
        print(format_template(template, prefixes))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    registry = _load_registry(args.manifest)
    app = create_app(registry, ui_dir=args.ui_dir)

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
        sock.listen(128)
    except OSError as err:
        print(f"cannot bind {args.host}:{args.port}: {err}", file=sys.stderr)
        sock.close()
        return BIND_ERROR
    port = sock.getsockname()[1]
    print(f"rdfpaths serving on http://{args.host}:{port}", flush=True)

    config = uvicorn.Config(app, log_level="warning")
    server = uvicorn.Server(config)
    try:
        server.run(sockets=[sock])
    except KeyboardInterrupt:
        # uvicorn re-raises the interrupt after finishing in-flight requests
        pass
    return 0


def _cmd_validate(args) -> int:
    report, violations = validate_manifest(args.manifest)
    for line in report:
        print(line)
    if violations:
        for violation in violations:
            print(f"error: {violation}", file=sys.stderr)
        return DATA_ERROR
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args, parser)
        if args.command == "template":
            return _cmd_template(args, parser)
        if args.command == "serve":
            return _cmd_serve(args)
        return _cmd_validate(args)
    except DataError as err:
        print(f"error: {err}", file=sys.stderr)
        return DATA_ERROR
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
