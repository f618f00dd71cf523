"""Deterministic generators for the standard graphs used as fixtures."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .graphs import Graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(tuple(range(n)), tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph(tuple(range(n)), tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(tuple(range(n)), tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def hypercube(d: int) -> Graph:
    """d-dimensional hypercube on bitstring atoms of length d."""
    if d < 1:
        raise ValueError(f"hypercube needs dimension at least 1, got {d}")
    verts = [format(i, f"0{d}b") for i in range(2**d)]
    edges = []
    for i in range(2**d):
        for bit in range(d):
            j = i ^ (1 << bit)
            if i < j:
                edges.append((format(i, f"0{d}b"), format(j, f"0{d}b")))
    return Graph(tuple(verts), tuple(edges))


def cayley_cyclic(n: int, generators: Iterable[int]) -> Graph:
    """Cayley graph of Z_n with a symmetric generating set: i ~ i+s mod n.

    The set must avoid 0 mod n and be closed under negation, otherwise the
    result would need loops or directed edges.
    """
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    gens = {s % n for s in generators}
    if 0 in gens:
        raise ValueError("generator 0 (mod n) would create loops")
    missing = {s for s in gens if (n - s) % n not in gens}
    if missing:
        raise ValueError(f"generating set not closed under negation mod {n}: missing inverses for {sorted(missing)}")
    edges = tuple((i, (i + s) % n) for i in range(n) for s in gens)
    return Graph(tuple(range(n)), edges)


KINDS = ("cycle", "path", "complete", "hypercube", "cayley_cyclic")


def generate(kind: str, params: Sequence[int]) -> Graph:
    """Dispatch by kind name; params are the integer arguments in order."""
    params = [int(p) for p in params]
    if kind == "cycle":
        (n,) = params
        return cycle(n)
    if kind == "path":
        (n,) = params
        return path(n)
    if kind == "complete":
        (n,) = params
        return complete(n)
    if kind == "hypercube":
        (d,) = params
        return hypercube(d)
    if kind == "cayley_cyclic":
        n, *gens = params
        return cayley_cyclic(n, gens)
    raise ValueError(f"unknown graph kind {kind!r}; expected one of {KINDS}")
