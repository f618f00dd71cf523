"""Adjacency and normalized-Laplacian spectra, and eigenvector transport
between a graph and its zig-zag products."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, VertexMap, check_combinatorial_cover, is_covering_map
from .labeling import HLabeling, image_valency, is_locally_constant
from .product import ZigZagGraph, lift_combinatorial_cover, lift_covering, zigzag_product

# Residual tolerance for anything claimed to be an exact identity, and the
# looser tolerance for matching eigenvalues across independently computed
# spectra.
RESIDUAL_TOL = 1e-9
MATCH_TOL = 1e-6


def adjacency_matrix(g: Graph) -> np.ndarray:
    index = {v: k for k, v in enumerate(g.vertices)}
    mat = np.zeros((len(g.vertices), len(g.vertices)))
    for u, v in g.edges:
        mat[index[u], index[v]] = 1.0
        mat[index[v], index[u]] = 1.0
    return mat


def normalized_laplacian_matrix(g: Graph) -> np.ndarray:
    isolated = [v for v in g.vertices if g.degree(v) == 0]
    if isolated:
        raise ValueError(f"normalized Laplacian undefined with isolated vertices: {isolated[:3]}")
    index = {v: k for k, v in enumerate(g.vertices)}
    n = len(g.vertices)
    mat = np.eye(n)
    for u, v in g.edges:
        w = -1.0 / math.sqrt(g.degree(u) * g.degree(v))
        mat[index[u], index[v]] = w
        mat[index[v], index[u]] = w
    d = g.is_regular()
    if d is not None and d > 0:
        walk = np.eye(n) - adjacency_matrix(g) / d
        if not np.allclose(mat, walk, atol=RESIDUAL_TOL):
            raise RuntimeError("regular-graph Laplacian identity I - A/d violated")
    return mat


@dataclass(frozen=True)
class SpectrumReport:
    """Sorted eigenvalues of a symmetric graph operator with the radius data.

    lambda2 is the largest modulus strictly below the spectral radius and is
    absent (None) when every eigenvalue shares the same modulus.
    """

    operator: str
    eigenvalues: tuple
    rho: float
    lambda2: float | None
    gap: float | None

    @classmethod
    def from_values(cls, values: np.ndarray, operator: str) -> "SpectrumReport":
        ordered = tuple(float(x) for x in sorted(values, reverse=True))
        rho = max(abs(x) for x in ordered)
        below = [abs(x) for x in ordered if abs(x) < rho - MATCH_TOL]
        lambda2 = max(below) if below else None
        gap = rho - lambda2 if lambda2 is not None else None
        return cls(operator, ordered, rho, lambda2, gap)


def adjacency_spectrum(g: Graph) -> SpectrumReport:
    """Eigenvalues of the adjacency operator, descending."""
    if not g.vertices:
        raise ValueError("spectrum of the empty graph is undefined")
    values = np.linalg.eigvalsh(adjacency_matrix(g))
    return SpectrumReport.from_values(values, "adjacency")


def normalized_laplacian_spectrum(g: Graph) -> SpectrumReport:
    """Eigenvalues of the normalized Laplacian, descending, all in [0, 2]."""
    values = np.linalg.eigvalsh(normalized_laplacian_matrix(g))
    return SpectrumReport.from_values(values, "normalized_laplacian")


def _canonical_sign(vec: np.ndarray) -> np.ndarray:
    for x in vec:
        if abs(x) > 1e-12:
            return -vec if x < 0 else vec
    return vec


@dataclass(frozen=True, eq=False)
class EigenPair:
    """A verified adjacency eigenpair, unit norm, sign-fixed."""

    graph: Graph
    value: float
    vector: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vector, dtype=float)
        if vec.shape != (len(self.graph.vertices),):
            raise ValueError("eigenvector length must match the vertex count")
        norm = np.linalg.norm(vec)
        if norm <= RESIDUAL_TOL:
            raise ValueError("eigenvector is numerically zero")
        vec = _canonical_sign(vec / norm)
        residual = np.max(np.abs(adjacency_matrix(self.graph) @ vec - self.value * vec))
        if residual > RESIDUAL_TOL:
            raise ValueError(f"residual {residual:.3e} exceeds tolerance; not an eigenpair")
        vec.flags.writeable = False
        object.__setattr__(self, "vector", vec)

    def component(self, v) -> float:
        return float(self.vector[self.graph.vertices.index(v)])


def adjacency_eigenpairs(g: Graph) -> list[EigenPair]:
    """Full verified eigendecomposition, eigenvalues descending."""
    if not g.vertices:
        raise ValueError("spectrum of the empty graph is undefined")
    values, vectors = np.linalg.eigh(adjacency_matrix(g))
    pairs = [EigenPair(g, float(values[k]), vectors[:, k]) for k in range(len(values))]
    return list(reversed(pairs))


@dataclass(frozen=True)
class ZeroCertificate:
    """Marker that an eigenvalue was too close to zero to descend."""

    value: float


def _product_index(z: ZigZagGraph) -> dict:
    return {v: k for k, v in enumerate(z.product.vertices)}


def lift_eigenvector(ep: EigenPair, z: ZigZagGraph) -> EigenPair:
    """Copy a base eigenvector across fibers; the eigenvalue scales by the
    image valency n.  The norm grows by exactly sqrt(n), which is checked
    before renormalizing."""
    if ep.graph != z.base:
        raise ValueError("eigenpair does not belong to the product's base graph")
    if not is_locally_constant(z.labeling):
        raise ValueError("eigenvector lifting needs a locally constant labeling")
    n = image_valency(z.labeling)

    base_index = {v: k for k, v in enumerate(z.base.vertices)}
    fhat = np.array([ep.vector[base_index[u]] for u, _ in z.product.vertices])
    norm = np.linalg.norm(fhat)
    if abs(norm - math.sqrt(n)) > RESIDUAL_TOL:
        raise ValueError(
            f"lifted norm {norm:.6f} is not sqrt({n}); the eigenvector touches vertices without product fibers"
        )
    return EigenPair(z.product, n * ep.value, fhat)


def descend_eigenvector(ep: EigenPair, z: ZigZagGraph):
    """Collapse a product eigenvector with nonzero eigenvalue to the base.

    Such an eigenvector is constant on every fiber (checked within the
    residual tolerance); its common fiber values form a base eigenvector
    with eigenvalue scaled down by the image valency.  Eigenvalues at zero
    yield a ZeroCertificate instead.
    """
    if ep.graph != z.product:
        raise ValueError("eigenpair does not belong to the product graph")
    if not is_locally_constant(z.labeling):
        raise ValueError("eigenvector descent needs a locally constant labeling")
    n = image_valency(z.labeling)
    if abs(ep.value) <= RESIDUAL_TOL:
        return ZeroCertificate(ep.value)

    index = _product_index(z)
    fibers: dict = {}
    for u, i in z.product.vertices:
        fibers.setdefault(u, []).append(ep.vector[index[(u, i)]])
    for u, vals in fibers.items():
        if max(vals) - min(vals) > RESIDUAL_TOL:
            raise RuntimeError(
                f"eigenvector with eigenvalue {ep.value:.6g} is not fiber-constant above {u}"
            )
    f = np.array([fibers[u][0] if u in fibers else 0.0 for u in z.base.vertices])
    return EigenPair(z.base, ep.value / n, f)


def normalized_radius(g: Graph, d: int) -> float:
    """Spectral radius of the degree-normalized adjacency operator A/d."""
    if d <= 0:
        raise ValueError("degree must be positive")
    if g.is_regular() != d:
        raise ValueError(f"graph is not {d}-regular")
    return adjacency_spectrum(g).rho / d


def radius_comparison_check(g: Graph, h: Graph, a: HLabeling) -> bool:
    """Normalized radius of the base never exceeds the product's.

    Hypotheses: g is m-regular, h is d-regular on m vertices, and at each
    base vertex the dart labels enumerate the label graph bijectively.  The
    product is then d^2-regular and the inequality is checked numerically.
    """
    m = g.is_regular()
    if m is None or m == 0:
        raise ValueError("base graph must be regular with positive degree")
    d = h.is_regular()
    if d is None or d == 0:
        raise ValueError("label graph must be regular with positive degree")
    if len(h.vertices) != m:
        raise ValueError(f"label graph must have {m} vertices, the base degree; has {len(h.vertices)}")
    for u in g.vertices:
        seen = [a.label(u, e) for e in g.incident_edges(u)]
        if len(set(seen)) != len(seen) or set(seen) != set(h.vertices):
            raise ValueError(f"dart labels at {u} are not a bijection onto the label vertices")

    z = zigzag_product(g, h, a)
    reg = z.product.is_regular()
    if reg != d * d:
        raise RuntimeError(f"product regularity {reg} contradicts the expected {d * d}")
    return normalized_radius(g, m) <= normalized_radius(z.product, d * d) + RESIDUAL_TOL


def cover_radius_check(p: VertexMap, z: ZigZagGraph) -> bool:
    """Adjacency spectral radius never grows when lifting along a covering."""
    if not is_covering_map(p):
        raise ValueError("map is not a covering map")
    lift = lift_covering(p, z)
    return adjacency_spectrum(lift.lifted.product).rho <= adjacency_spectrum(z.product).rho + RESIDUAL_TOL


def spectrum_contained(small: SpectrumReport, big: SpectrumReport, tol: float = MATCH_TOL) -> bool:
    """Every eigenvalue of the first spectrum occurs in the second, up to tol."""
    for x in small.eigenvalues:
        if min(abs(x - y) for y in big.eigenvalues) > tol:
            return False
    return True


def laplacian_containment_check(p: VertexMap, z: ZigZagGraph) -> bool:
    """Laplacian eigenvalues of the base product all reappear in the product
    over a combinatorial cover."""
    res = check_combinatorial_cover(p)
    if not res:
        raise ValueError(f"map is not a combinatorial cover: {res.violation} at {res.witness}")
    lift = lift_combinatorial_cover(p, z)
    for graph, name in (
        (p.domain, "covering graph"),
        (p.codomain, "base graph"),
        (z.product, "base product"),
        (lift.lifted.product, "lifted product"),
    ):
        if any(graph.degree(v) == 0 for v in graph.vertices):
            raise ValueError(f"{name} has isolated vertices; Laplacian spectra undefined")
    small = normalized_laplacian_spectrum(z.product)
    big = normalized_laplacian_spectrum(lift.lifted.product)
    return spectrum_contained(small, big)


def nonzero_eigenvalues(report: SpectrumReport, tol: float = MATCH_TOL) -> tuple:
    return tuple(x for x in report.eigenvalues if abs(x) > tol)


def multisets_match(xs, ys, tol: float = MATCH_TOL) -> bool:
    """Sorted elementwise comparison of two real multisets."""
    xs = sorted(xs)
    ys = sorted(ys)
    if len(xs) != len(ys):
        return False
    return all(abs(x - y) <= tol for x, y in zip(xs, ys))
