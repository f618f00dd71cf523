"""Interchange formats: edge-list text, JSON documents, DOT export.

All writers emit canonical output (vertices and edges in canonical order,
fixed key order, trailing newline) so that serialization round-trips are
byte-exact.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .graphs import Dart, Graph, VertexId, VertexMap, format_vertex, make_edge
from .labeling import HLabeling
from .product import EdgeTag, ZigZagGraph, zigzag_product
from .spectral import SpectrumReport
from .tower import FolnerReport, TowerReport

_INT_TOKEN = re.compile(r"-?\d+")


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# vertex ids


def vertex_to_obj(v: VertexId):
    if isinstance(v, tuple):
        return [vertex_to_obj(v[0]), vertex_to_obj(v[1])]
    return v


def vertex_from_obj(obj) -> VertexId:
    if isinstance(obj, bool):
        raise ValueError(f"invalid vertex id in JSON: {obj!r}")
    if isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, list) and len(obj) == 2:
        return (vertex_from_obj(obj[0]), vertex_from_obj(obj[1]))
    raise ValueError(f"invalid vertex id in JSON: {obj!r}")


def edge_to_obj(e):
    return [vertex_to_obj(e[0]), vertex_to_obj(e[1])]


def edge_from_obj(obj):
    if not isinstance(obj, list) or len(obj) != 2:
        raise ValueError(f"invalid edge in JSON: {obj!r}")
    return make_edge(vertex_from_obj(obj[0]), vertex_from_obj(obj[1]))


# graphs


def graph_to_obj(g: Graph) -> dict:
    return {
        "vertices": [vertex_to_obj(v) for v in g.vertices],
        "edges": [edge_to_obj(e) for e in g.edges],
    }


def graph_from_obj(obj) -> Graph:
    if not isinstance(obj, dict):
        raise ValueError("graph JSON must be an object")
    verts = tuple(vertex_from_obj(v) for v in obj.get("vertices", []))
    edges = tuple(edge_from_obj(e) for e in obj.get("edges", []))
    return Graph(verts, edges)


def dumps_graph(g: Graph) -> str:
    return canonical_dumps(graph_to_obj(g))


def loads_graph(text: str) -> Graph:
    return graph_from_obj(json.loads(text))


# edge-list text: one edge per line, two whitespace-separated atom tokens


def _atom_token(v: VertexId) -> str:
    if isinstance(v, tuple):
        raise ValueError("edge-list format supports atom vertex ids only; use JSON for pairs")
    tok = str(v)
    if not tok or any(c.isspace() for c in tok) or tok.startswith("#"):
        raise ValueError(f"atom {v!r} cannot be written as an edge-list token")
    if isinstance(v, str) and _parse_token(tok) != v:
        raise ValueError(
            f"string atom {v!r} would read back as an integer token; use the JSON format"
        )
    return tok


def _parse_token(tok: str) -> VertexId:
    # Only canonical decimals become ints, so string atoms like "01" survive.
    if _INT_TOKEN.fullmatch(tok) and str(int(tok)) == tok:
        return int(tok)
    return tok


def write_edge_list(g: Graph) -> str:
    lines = [f"{_atom_token(u)} {_atom_token(v)}" for u, v in g.edges]
    return "\n".join(lines) + ("\n" if lines else "")


def read_edge_list(text: str) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge-list line {lineno}: expected two tokens, got {len(parts)}")
        edges.append((_parse_token(parts[0]), _parse_token(parts[1])))
    return Graph((), tuple(edges))


def read_graph_text(text: str) -> Graph:
    """Sniff JSON vs edge-list by the first non-space character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return loads_graph(text)
    return read_edge_list(text)


def load_graph_file(path) -> Graph:
    return read_graph_text(Path(path).read_text(encoding="utf-8"))


# DOT export (write-only)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_id(v: VertexId) -> str:
    return _dot_quote(format_vertex(v))


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    degree_zero = [v for v in g.vertices if g.degree(v) == 0]
    for v in degree_zero:
        lines.append(f"  {_dot_id(v)};")
    for u, v in g.edges:
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# references: a graph value in a larger document is inline or a file path


def _ref_to_graph(obj, base_dir) -> Graph:
    if isinstance(obj, str):
        path = Path(obj)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return load_graph_file(path)
    return graph_from_obj(obj)


# labelings


def labeling_to_obj(a: HLabeling) -> dict:
    return {
        "base": graph_to_obj(a.base),
        "labels": graph_to_obj(a.labels),
        "map": [
            {"vertex": vertex_to_obj(d.vertex), "edge": edge_to_obj(d.edge), "label": vertex_to_obj(h)}
            for d, h in a.mapping.items()
        ],
    }


def labeling_from_obj(obj, base_dir=None) -> HLabeling:
    if not isinstance(obj, dict):
        raise ValueError("labeling JSON must be an object")
    base = _ref_to_graph(obj["base"], base_dir)
    labels = _ref_to_graph(obj["labels"], base_dir)
    mapping = {}
    for entry in obj["map"]:
        d = Dart(vertex_from_obj(entry["vertex"]), edge_from_obj(entry["edge"]))
        mapping[d] = vertex_from_obj(entry["label"])
    return HLabeling(base, labels, mapping)


def dumps_labeling(a: HLabeling) -> str:
    return canonical_dumps(labeling_to_obj(a))


def loads_labeling(text: str, base_dir=None) -> HLabeling:
    return labeling_from_obj(json.loads(text), base_dir)


def load_labeling_file(path) -> HLabeling:
    path = Path(path)
    return loads_labeling(path.read_text(encoding="utf-8"), base_dir=path.parent)


# vertex maps


def vertex_map_to_obj(m: VertexMap) -> dict:
    return {
        "domain": graph_to_obj(m.domain),
        "codomain": graph_to_obj(m.codomain),
        "map": [[vertex_to_obj(v), vertex_to_obj(w)] for v, w in m.mapping.items()],
    }


def vertex_map_from_obj(obj, base_dir=None, domain: Graph | None = None, codomain: Graph | None = None) -> VertexMap:
    if not isinstance(obj, dict):
        raise ValueError("vertex-map JSON must be an object")
    if domain is None:
        if "domain" not in obj:
            raise ValueError("vertex-map JSON carries no domain and none was supplied")
        domain = _ref_to_graph(obj["domain"], base_dir)
    if codomain is None:
        if "codomain" not in obj:
            raise ValueError("vertex-map JSON carries no codomain and none was supplied")
        codomain = _ref_to_graph(obj["codomain"], base_dir)
    mapping = {}
    for pair in obj["map"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"invalid map entry: {pair!r}")
        mapping[vertex_from_obj(pair[0])] = vertex_from_obj(pair[1])
    return VertexMap(domain, codomain, mapping)


def dumps_vertex_map(m: VertexMap) -> str:
    return canonical_dumps(vertex_map_to_obj(m))


def load_vertex_map_file(path, domain: Graph | None = None, codomain: Graph | None = None) -> VertexMap:
    path = Path(path)
    obj = json.loads(path.read_text(encoding="utf-8"))
    return vertex_map_from_obj(obj, base_dir=path.parent, domain=domain, codomain=codomain)


# products


def product_to_obj(z: ZigZagGraph) -> dict:
    tags = []
    for e, tag in z.edge_tags.items():
        tags.append(
            {
                "edge": edge_to_obj(e),
                "base_edge": edge_to_obj(tag.base_edge),
                "h_lo": edge_to_obj(tag.h_lo),
                "h_hi": edge_to_obj(tag.h_hi),
            }
        )
    obj = {"base": graph_to_obj(z.base), "labels": graph_to_obj(z.labels)}
    obj["labeling"] = labeling_to_obj(z.labeling)["map"]
    obj.update(graph_to_obj(z.product))
    obj["edge_tags"] = tags
    return obj


def product_from_obj(obj, base_dir=None) -> ZigZagGraph:
    if not isinstance(obj, dict):
        raise ValueError("product JSON must be an object")
    base = _ref_to_graph(obj["base"], base_dir)
    labels = _ref_to_graph(obj["labels"], base_dir)
    mapping = {}
    for entry in obj["labeling"]:
        d = Dart(vertex_from_obj(entry["vertex"]), edge_from_obj(entry["edge"]))
        mapping[d] = vertex_from_obj(entry["label"])
    labeling = HLabeling(base, labels, mapping)
    rebuilt = zigzag_product(base, labels, labeling)

    stated = Graph(
        tuple(vertex_from_obj(v) for v in obj["vertices"]),
        tuple(edge_from_obj(e) for e in obj["edges"]),
    )
    if stated != rebuilt.product:
        raise ValueError("product JSON is inconsistent with its own base and labeling")
    stated_tags = {}
    for entry in obj["edge_tags"]:
        stated_tags[edge_from_obj(entry["edge"])] = EdgeTag(
            edge_from_obj(entry["base_edge"]),
            edge_from_obj(entry["h_lo"]),
            edge_from_obj(entry["h_hi"]),
        )
    if stated_tags != dict(rebuilt.edge_tags):
        raise ValueError("product JSON edge tags are inconsistent with the construction")
    return rebuilt


def dumps_product(z: ZigZagGraph) -> str:
    return canonical_dumps(product_to_obj(z))


def loads_product(text: str, base_dir=None) -> ZigZagGraph:
    return product_from_obj(json.loads(text), base_dir)


def load_product_file(path) -> ZigZagGraph:
    path = Path(path)
    return loads_product(path.read_text(encoding="utf-8"), base_dir=path.parent)


# reports


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def spectrum_to_obj(r: SpectrumReport) -> dict:
    obj = {
        "operator": r.operator,
        "eigenvalues": [_sig12(x) for x in r.eigenvalues],
        "rho": _sig12(r.rho),
    }
    if r.lambda2 is not None:
        obj["lambda2"] = _sig12(r.lambda2)
    if r.gap is not None:
        obj["gap"] = _sig12(r.gap)
    return obj


def dumps_spectrum(r: SpectrumReport) -> str:
    return canonical_dumps(spectrum_to_obj(r))


def tower_report_to_obj(r: TowerReport) -> dict:
    return {
        "valency": r.valency,
        "levels": [
            {
                "level": s.index,
                "vertices": s.vertices,
                "edges": s.edges,
                "rho": None if s.rho is None else _sig12(s.rho),
                "lambda2": None if s.lambda2 is None else _sig12(s.lambda2),
                "gap": None if s.gap is None else _sig12(s.gap),
                "cover_index": s.cover_index,
                "spectra_skipped": s.spectra_skipped,
            }
            for s in r.levels
        ],
        "pairs": [
            {
                "lower": p.lower,
                "upper": p.upper,
                "scaling": p.scaling,
                "containment": p.containment,
                "gap": p.gap,
            }
            for p in r.pairs
        ],
        "all_ok": r.all_ok,
    }


def folner_report_to_obj(r: FolnerReport) -> dict:
    return {
        "max_label_degree": r.max_label_degree,
        "steps": [
            {
                "subset": [vertex_to_obj(v) for v in s.subset],
                "size": s.size,
                "boundary": s.boundary_size,
                "ratio": str(s.ratio),
                "product_size": s.product_size,
                "product_boundary": s.product_boundary_size,
                "product_ratio": None if s.product_ratio is None else str(s.product_ratio),
                "bound": s.bound,
                "bound_ok": s.bound_ok,
            }
            for s in r.steps
        ],
        "all_ok": r.all_ok,
    }
