"""Structured-text (JSON) file formats and digest-carrying certificates.

Every format carries ``format_version``; loaders validate shape and
semantics and raise InvalidInput. Certificates digest their canonical JSON
payload, so re-running the recorded command must reproduce the verdict and
witness byte-exactly.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .booldim import BooleanRealizer
from .errors import ContractViolation, InvalidInput
from .graphs import Graph
from .grids import GridPoset
from .poset import Poset
from .ramsey import (
    KIND_COMPARABILITY,
    KIND_SUBGRID,
    KIND_SUBPOSET,
    MapColoring,
)

FORMAT_VERSION = 1

PathLike = Union[str, Path]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_json(path: PathLike) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise InvalidInput(f"{path}: top-level value must be an object")
    if payload.get("format_version") != FORMAT_VERSION:
        raise InvalidInput(f"{path}: unsupported format_version")
    return payload


def _write_json(path: PathLike, payload: Mapping) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(payload))
        fh.write("\n")


# -- posets --------------------------------------------------------------------


def poset_payload(p: Poset) -> dict:
    labels = list(p.labels) if p.labels is not None else [str(i) for i in range(p.n)]
    covers = []
    for a in range(p.n):
        for b in range(p.n):
            if p.lt(a, b) and not any(p.lt(a, z) and p.lt(z, b) for z in range(p.n)):
                covers.append([labels[a], labels[b]])
    return {"format_version": FORMAT_VERSION, "kind": "poset",
            "elements": labels, "covers": covers}


def save_poset(path: PathLike, p: Poset) -> None:
    _write_json(path, poset_payload(p))


def load_poset(path: PathLike) -> Poset:
    payload = _read_json(path)
    if payload.get("kind") != "poset":
        raise InvalidInput(f"{path}: not a poset file")
    elements = payload.get("elements")
    covers = payload.get("covers")
    if not isinstance(elements, list) or not elements or \
            len(set(elements)) != len(elements):
        raise InvalidInput(f"{path}: 'elements' must list distinct labels")
    index = {label: i for i, label in enumerate(elements)}
    pairs = []
    for entry in covers if isinstance(covers, list) else ():
        if not (isinstance(entry, list) and len(entry) == 2):
            raise InvalidInput(f"{path}: covers must be label pairs")
        a, b = entry
        if a not in index or b not in index:
            raise InvalidInput(f"{path}: cover ({a}, {b}) uses unknown labels")
        pairs.append((index[a], index[b]))
    try:
        return Poset.from_covers(len(elements), pairs, labels=elements)
    except ContractViolation as exc:
        raise InvalidInput(f"{path}: {exc}") from exc


# -- graphs --------------------------------------------------------------------


def graph_payload(g: Graph, labels: Optional[Sequence[str]] = None) -> dict:
    labels = list(labels) if labels is not None else [str(i) for i in range(g.n)]
    return {"format_version": FORMAT_VERSION, "kind": "graph",
            "vertices": labels,
            "edges": [[labels[u], labels[v]] for u, v in g.edges()]}


def save_graph(path: PathLike, g: Graph) -> None:
    _write_json(path, graph_payload(g))


def load_graph(path: PathLike) -> Graph:
    payload = _read_json(path)
    if payload.get("kind") != "graph":
        raise InvalidInput(f"{path}: not a graph file")
    vertices = payload.get("vertices")
    if not isinstance(vertices, list) or len(set(vertices)) != len(vertices):
        raise InvalidInput(f"{path}: 'vertices' must list distinct labels")
    index = {label: i for i, label in enumerate(vertices)}
    edges = []
    for entry in payload.get("edges", ()):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise InvalidInput(f"{path}: edges must be label pairs")
        u, v = entry
        if u not in index or v not in index:
            raise InvalidInput(f"{path}: edge ({u}, {v}) uses unknown labels")
        edges.append((index[u], index[v]))
    try:
        return Graph(len(vertices), edges)
    except ContractViolation as exc:
        raise InvalidInput(f"{path}: {exc}") from exc


# -- grid colorings ---------------------------------------------------------------


def _key_to_json(kind: str, key, g: GridPoset):
    if kind == KIND_COMPARABILITY:
        a, b = key
        return [list(g.coords(a)), list(g.coords(b))]
    if kind == KIND_SUBGRID:
        return [list(axis) for axis in key]
    return [list(g.coords(e)) for e in key]


def _key_from_json(kind: str, raw, g: GridPoset):
    if kind == KIND_COMPARABILITY:
        a, b = raw
        return (g.index(tuple(a)), g.index(tuple(b)))
    if kind == KIND_SUBGRID:
        return tuple(tuple(axis) for axis in raw)
    return tuple(sorted(g.index(tuple(c)) for c in raw))


def coloring_payload(coloring: MapColoring, g: GridPoset) -> dict:
    items = [[_key_to_json(coloring.kind, key, g), color]
             for key, color in coloring.items()]
    return {"format_version": FORMAT_VERSION, "kind": "coloring",
            "coloring_kind": coloring.kind, "r": coloring.r,
            "n": g.k, "t": g.t, "assignment": items}


def save_coloring(path: PathLike, coloring: MapColoring, g: GridPoset) -> None:
    _write_json(path, coloring_payload(coloring, g))


def load_coloring(path: PathLike, g: GridPoset) -> MapColoring:
    payload = _read_json(path)
    if payload.get("kind") != "coloring":
        raise InvalidInput(f"{path}: not a coloring file")
    kind = payload.get("coloring_kind")
    if kind not in (KIND_COMPARABILITY, KIND_SUBGRID, KIND_SUBPOSET):
        raise InvalidInput(f"{path}: unknown coloring kind {kind!r}")
    if payload.get("n") != g.k or payload.get("t") != g.t:
        raise InvalidInput(f"{path}: coloring is for a {payload.get('n')}^"
                           f"{payload.get('t')} grid")
    try:
        assignment = {
            _key_from_json(kind, raw, g): color
            for raw, color in payload.get("assignment", ())}
        return MapColoring(kind, int(payload["r"]), assignment)
    except (ContractViolation, KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"{path}: {exc}") from exc


# -- Boolean realizers -------------------------------------------------------------


def boolean_realizer_payload(br: BooleanRealizer) -> dict:
    return {"format_version": FORMAT_VERSION, "kind": "boolean-realizer",
            "orders": [list(order) for order in br.orders],
            "accepted": sorted(br.accepted)}


def save_boolean_realizer(path: PathLike, br: BooleanRealizer) -> None:
    _write_json(path, boolean_realizer_payload(br))


def load_boolean_realizer(path: PathLike) -> BooleanRealizer:
    payload = _read_json(path)
    if payload.get("kind") != "boolean-realizer":
        raise InvalidInput(f"{path}: not a boolean-realizer file")
    try:
        return BooleanRealizer(
            tuple(tuple(order) for order in payload["orders"]),
            frozenset(payload["accepted"]))
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"{path}: {exc}") from exc


# -- certificates -------------------------------------------------------------------


def certificate_digest(payload: Mapping) -> str:
    body = {k: v for k, v in payload.items() if k != "digest"}
    return hashlib.sha256(canonical_json(body).encode()).hexdigest()


def make_certificate(command: Sequence[str], parameters: Mapping,
                     verdict: str, witness) -> dict:
    cert = {"format_version": FORMAT_VERSION, "kind": "certificate",
            "command": list(command), "parameters": dict(parameters),
            "verdict": verdict, "witness": witness}
    cert["digest"] = certificate_digest(cert)
    return cert


def save_certificate(path: PathLike, cert: Mapping) -> None:
    _write_json(path, cert)


def load_certificate(path: PathLike) -> dict:
    payload = _read_json(path)
    if payload.get("kind") != "certificate":
        raise InvalidInput(f"{path}: not a certificate file")
    if "digest" not in payload:
        raise InvalidInput(f"{path}: certificate has no digest")
    if certificate_digest(payload) != payload["digest"]:
        raise InvalidInput(f"{path}: digest mismatch; payload was altered")
    return payload
