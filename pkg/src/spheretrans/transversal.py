"""Exact and approximate transversal numbers of small hypergraphs.

A transversal (hitting set) meets every edge.  The exact solver is a
deterministic branch and bound over python-int bitmasks: it seeds with
the greedy cover, prunes with a greedy matching lower bound, propagates
unit edges, and branches on the vertex of highest uncovered degree
(ties to the smallest label).  Instances here come from facet
hypergraphs with a few hundred edges, where this terminates quickly;
a wall-clock budget makes the worst case safe.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .complexes import Face, PureComplex, face
from .errors import InvalidParameters, UnknownVertex


@dataclass(frozen=True)
class Hypergraph:
    """Finite hypergraph; edges are deduplicated canonical faces."""

    vertices: tuple[int, ...]
    edges: tuple[Face, ...]

    def __init__(self, vertices: Iterable[int], edges: Iterable[Iterable[int]]):
        vs = tuple(sorted(set(vertices)))
        es = tuple(sorted(set(face(e) for e in edges)))
        pool = set(vs)
        for e in es:
            if not e:
                raise InvalidParameters("edges must be nonempty")
            stray = set(e) - pool
            if stray:
                raise UnknownVertex(f"edge {e} uses unknown vertices {sorted(stray)}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)


@dataclass(frozen=True)
class TransversalCertificate:
    """Result of a transversal computation with proof bounds.

    optimal implies lower_bound == upper_bound == |hitting_set|.
    """

    hitting_set: frozenset[int]
    lower_bound: int
    upper_bound: int
    optimal: bool
    nodes_explored: int
    timed_out: bool


def facet_hypergraph(delta: PureComplex) -> Hypergraph:
    """Hypergraph whose edges are the facets of a nonempty complex."""
    if delta.is_empty:
        raise InvalidParameters("facet hypergraph of EMPTY is not defined")
    return Hypergraph(delta.vertices, delta.facets)


def is_transversal(h: Hypergraph, t: Iterable[int]) -> bool:
    """True iff t meets every edge; t must use known vertices."""
    ts = set(t)
    stray = ts - set(h.vertices)
    if stray:
        raise UnknownVertex(f"unknown vertices {sorted(stray)}")
    return all(ts & set(e) for e in h.edges)


def greedy_transversal(h: Hypergraph) -> set[int]:
    """Repeatedly take the vertex covering the most uncovered edges
    (ties to the smallest label)."""
    uncovered = [set(e) for e in h.edges]
    out: set[int] = set()
    while uncovered:
        degree: dict[int, int] = {}
        for e in uncovered:
            for v in e:
                degree[v] = degree.get(v, 0) + 1
        best = min(degree, key=lambda v: (-degree[v], v))
        out.add(best)
        uncovered = [e for e in uncovered if best not in e]
    return out


def matching_lower_bound(h: Hypergraph) -> int:
    """Size of a greedy pairwise-disjoint edge collection, taking edges
    smallest-lexicographic first.  Any transversal needs one vertex per
    matched edge."""
    used: set[int] = set()
    count = 0
    for e in h.edges:
        if used.isdisjoint(e):
            used.update(e)
            count += 1
    return count


class _Timeout(Exception):
    pass


def _popcount(x: int) -> int:
    return x.bit_count() if hasattr(x, "bit_count") else bin(x).count("1")


def exact_transversal(
    h: Hypergraph, time_budget: float = 60.0
) -> TransversalCertificate:
    """Minimum transversal by branch and bound.

    Deterministic and sequential: given the same hypergraph the same
    certificate comes back, whatever the wall clock does short of the
    budget.  On timeout the certificate carries the best proven bounds
    and timed_out=True.

    Parameters
    ----------
    h : Hypergraph
    time_budget : float
        Wall-clock seconds before the search gives up.
    """
    if not h.edges:
        return TransversalCertificate(frozenset(), 0, 0, True, 0, False)

    labels = h.vertices
    index = {v: i for i, v in enumerate(labels)}
    nv = len(labels)

    masks = []
    for e in h.edges:  # already lexicographically sorted
        m = 0
        for v in e:
            m |= 1 << index[v]
        masks.append(m)
    # drop edges containing another edge: hitting the minimal ones suffices
    minimal = []
    for i, m in enumerate(masks):
        if not any(m != o and m | o == m for o in masks):
            minimal.append(m)
    masks = minimal

    seed = greedy_transversal(h)
    best_size = len(seed)
    best_mask = 0
    for v in seed:
        best_mask |= 1 << index[v]

    def matching(ms: list[int]) -> int:
        used = 0
        c = 0
        for m in ms:
            if not m & used:
                used |= m
                c += 1
        return c

    root_lb = matching(masks)
    nodes = 0
    timed_out = False
    if root_lb >= best_size:
        return TransversalCertificate(
            frozenset(seed), best_size, best_size, True, 0, False
        )

    if time_budget <= 0:
        return TransversalCertificate(
            frozenset(seed), root_lb, best_size, False, 0, True
        )
    deadline = time.monotonic() + time_budget
    check_every = 512

    def dfs(ms: list[int], picked: int, picked_mask: int) -> None:
        nonlocal nodes, best_size, best_mask
        nodes += 1
        if nodes % check_every == 0 and time.monotonic() > deadline:
            raise _Timeout
        # unit propagation: a one-vertex edge forces that vertex
        while True:
            forced = 0
            for m in ms:
                if m and not m & (m - 1):
                    forced |= m
            if not forced:
                break
            picked += _popcount(forced)
            picked_mask |= forced
            ms = [m for m in ms if not m & forced]
        if not ms:
            if picked < best_size:
                best_size = picked
                best_mask = picked_mask
            return
        if picked + matching(ms) >= best_size:
            return
        counts = [0] * nv
        for m in ms:
            while m:
                low = m & -m
                counts[low.bit_length() - 1] += 1
                m ^= low
        v = max(range(nv), key=lambda i: (counts[i], -i))
        bit = 1 << v
        dfs([m for m in ms if not m & bit], picked + 1, picked_mask | bit)
        without = []
        for m in ms:
            m &= ~bit
            if not m:
                return  # some edge lost its last vertex; branch infeasible
            without.append(m)
        dfs(without, picked, picked_mask)

    try:
        dfs(masks, 0, 0)
        lower = best_size
    except _Timeout:
        timed_out = True
        lower = root_lb

    hitting = frozenset(labels[i] for i in range(nv) if best_mask >> i & 1)
    return TransversalCertificate(
        hitting_set=hitting,
        lower_bound=lower,
        upper_bound=best_size,
        optimal=lower == best_size,
        nodes_explored=nodes,
        timed_out=timed_out,
    )


def transversal_ratio(
    delta: PureComplex, cert: TransversalCertificate
) -> tuple[Fraction, Fraction]:
    """Exact (lower, upper) bounds on tau / vertex count."""
    n = delta.vertex_count
    if n == 0:
        raise InvalidParameters("complex has no vertices")
    return Fraction(cert.lower_bound, n), Fraction(cert.upper_bound, n)


def explicit_cs_transversal(d: int, n: int) -> set[int]:
    """Closed-form transversal of the cs sphere construction's facets.

    For d=3 take both signs of the odd labels, for d=4 both signs of
    the labels congruent to 1 or 2 mod 5; either way add +-n.
    """
    if n < d + 1:
        raise InvalidParameters(f"need n >= {d + 1}")
    if d == 3:
        core = [v for v in range(1, n + 1) if v % 2 == 1]
    elif d == 4:
        core = [v for v in range(1, n + 1) if v % 5 in (1, 2)]
    else:
        raise InvalidParameters("explicit transversals are defined for d=3 and d=4")
    out = {s * v for v in core for s in (1, -1)}
    out.update((n, -n))
    return out
