"""Command-line front end: every command reads/writes GemDocuments as JSON.

Exit code 0 on success; on failure an ErrorRecord is written to stderr as JSON
and the exit code is 1.
"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel, TypeAdapter

from .cli_io import export_dot, parse, serialize, serialize_map, to_document
from .complex import euler_characteristic, f_vector
from .constructions import (
    FAMILY_NAMES,
    family,
    necklace_sphere,
    product_standard,
    standard_sphere,
)
from .degree_maps import (
    map_degree,
    orientation_reversal,
    product_map_of_degree,
    sphere_map_of_degree,
)
from .errors import BadParam, DocumentSyntaxError, GemError
from .gem_core import color_isomorphic, is_closed, is_contracted
from .genus import regular_genus
from .models import ColoredVertexMap, Gem, GemReport
from .moves import reduce_cylinder

# File sink for CLI runs (INFO and above); the default stderr handler stays,
# so LOGURU_LEVEL still controls console output
logger.add(
    "gem_degree.log",
    rotation="1 day",
    retention="5 days",
    level="INFO",
    format="{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}",
)

MAP_KINDS = (
    "sphere",
    "necklace-sphere",
    "product",
    "reversal-sphere",
    "reversal-product",
)


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise DocumentSyntaxError(f"cannot read {source}: {e.strerror}", source) from e


def _load_gem(source: str) -> Gem:
    loaded = parse(_read(source))
    if isinstance(loaded, ColoredVertexMap):
        raise DocumentSyntaxError("expected a gem document, got a map document", source)
    return loaded


def _load_map(source: str) -> ColoredVertexMap:
    loaded = parse(_read(source))
    if not isinstance(loaded, ColoredVertexMap):
        raise DocumentSyntaxError("document has no map section", source)
    return loaded


_ANY = TypeAdapter(Any)


def _json(value: Any) -> str:
    if isinstance(value, BaseModel):
        return value.model_dump_json(indent=2)
    return _ANY.dump_json(value, indent=2).decode()


def _construct(args: argparse.Namespace) -> str:
    return serialize(family(args.family, args.n, args.d))


def _verify(args: argparse.Namespace) -> str:
    gem = _load_gem(args.gem)
    closed = is_closed(gem)
    report = GemReport(
        dimension=gem.dimension,
        vertices=gem.vertex_count,
        closed=closed,
        connected=gem.is_connected(),
        bipartite=gem.is_bipartite(),
        contracted=is_contracted(gem) if closed else None,
        boundary_vertices=gem.boundary_vertices(),
    )
    return _json(report)


def _genus(args: argparse.Namespace) -> str:
    report = regular_genus(_load_gem(args.gem), workers=args.workers)
    if args.all_permutations:
        return _json(report)
    return report.model_dump_json(indent=2, include={"regular_genus", "argmin"})


def _euler(args: argparse.Namespace) -> str:
    return _json({"euler_characteristic": euler_characteristic(_load_gem(args.gem))})


def _fvector(args: argparse.Namespace) -> str:
    return _json(f_vector(_load_gem(args.gem)))


def _degree(args: argparse.Namespace) -> str:
    return _json(map_degree(_load_map(args.map)))


def _reduce(args: argparse.Namespace) -> str:
    gem, log = reduce_cylinder(_load_gem(args.gem))
    return _json({"gem": to_document(gem).model_dump(), "log": log})


def _iso(args: argparse.Namespace) -> str:
    mapping = color_isomorphic(_load_gem(args.first), _load_gem(args.second))
    return _json({"isomorphism": "none" if mapping is None else mapping})


def _export_dot(args: argparse.Namespace) -> str:
    return export_dot(_load_gem(args.gem))


def _build_map(kind: str, n: int, d: Optional[int]) -> ColoredVertexMap:
    if kind == "reversal-sphere":
        return orientation_reversal(standard_sphere(n))
    if kind == "reversal-product":
        return orientation_reversal(product_standard(n))
    if d is None:
        raise BadParam(f"map kind {kind!r} needs --d")
    if kind == "sphere":
        return sphere_map_of_degree(standard_sphere(n), d)
    if kind == "necklace-sphere":
        return sphere_map_of_degree(necklace_sphere(n, max(abs(d), 1)), d)
    return product_map_of_degree(n, d)


def _construct_map(args: argparse.Namespace) -> str:
    return serialize_map(_build_map(args.kind, args.n, args.d))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gem-degree",
        description="Gems, crystallizations and degrees of simplicial maps",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(
        name: str, handler: Callable[[argparse.Namespace], str], summary: str
    ) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=summary)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("construct", _construct, "build a gem of a standard family")
    sub.add_argument("family", choices=FAMILY_NAMES)
    sub.add_argument("--n", type=int, required=True, help="dimension n")
    sub.add_argument("--d", type=int, default=None, help="degree parameter d")

    sub = command("verify", _verify, "validate a gem and summarise it")
    sub.add_argument("gem", help="GemDocument path or - for stdin")

    sub = command("genus", _genus, "regular genus by permutation scan")
    sub.add_argument("gem", help="GemDocument path or - for stdin")
    sub.add_argument(
        "--all-permutations", action="store_true", help="include χ_ε, ρ_ε for every ε"
    )
    sub.add_argument("--workers", type=int, default=1, help="scan threads (default: 1)")

    for name, handler in (("euler", _euler), ("fvector", _fvector)):
        sub = command(name, handler, f"{name} of the complex K(Γ)")
        sub.add_argument("gem", help="GemDocument path or - for stdin")

    sub = command("degree", _degree, "degree of the map in a map document")
    sub.add_argument("map", help="map document path or - for stdin")

    sub = command("reduce", _reduce, "reduce a cylinder gem by glue moves and 1-dipoles")
    sub.add_argument("gem", help="GemDocument path or - for stdin")

    sub = command("iso", _iso, "color-isomorphism between two gems")
    sub.add_argument("first")
    sub.add_argument("second")

    sub = command("export-dot", _export_dot, "Graphviz DOT source of a gem")
    sub.add_argument("gem", help="GemDocument path or - for stdin")

    sub = command("construct-map", _construct_map, "build a map document")
    sub.add_argument("kind", choices=MAP_KINDS)
    sub.add_argument("--n", type=int, required=True, help="dimension n")
    sub.add_argument("--d", type=int, default=None, help="degree d")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        output = args.handler(args)
    except GemError as e:
        logger.error(f"{args.command} failed: {e}")
        record: Dict[str, Any] = dict(e.to_record())
        print(_json(record), file=sys.stderr)
        return 1
    print(output)
    return 0
