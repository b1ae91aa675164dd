"""Centrally symmetric spheres by repeated antipodal sewing.

cs_sphere(d, n) is a cs d-sphere on the 2n vertices +-1..+-n that is
ceil(d/2)-neighborly in the antipode-free sense.  It is produced by a
mutually recursive scheme together with the balls cs_ball(d, i, n):

* the 1-dimensional sphere is the cycle 1, 2, ..., n, -1, -2, ..., -n;
* on the minimum vertex count the sphere is the cross polytope boundary;
* cs_ball(1, 0, n) is the single edge {-1, n}; for odd d the top ball
  is the sphere minus the previous ball; otherwise a ball is the cone
  of its predecessor over the fresh label n glued to the cone of its
  negated second predecessor over -n (an empty predecessor contributes
  nothing);
* the sphere on one more antipodal vertex pair replaces the ball
  B = cs_ball(d, ceil(d/2)-1, n) and its negation inside cs_sphere(d, n)
  by the cones of their boundaries over +-(n+1).

Every step asserts the structural facts it relies on (low-index balls
sit facet-wise inside the sphere; B and -B share no facet) and raises
RecursionInvariantViolated otherwise.  Results are memoized in a shared
cache keyed by kind and parameters; pass cache={} to recompute from
scratch.  Cached values are immutable, so sharing the default cache
between threads is harmless.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    EMPTY,
    Face,
    PureComplex,
    boundary,
    face,
    gf2_betti,
    is_closed_pseudomanifold,
    is_cs,
    join,
    link,
    negate,
    simplex,
    sphere_betti_profile,
    union,
)
from .errors import InvalidParameters, RecursionInvariantViolated, TooFewVertices
from .polytopes import cross_boundary

_shared_cache: dict[tuple, PureComplex] = {}


def cs_sphere(d: int, n: int, *, cache: dict | None = None) -> PureComplex:
    """The cs, ceil(d/2)-neighborly d-sphere on vertices +-1..+-n.

    Parameters
    ----------
    d, n : int
        Dimension d >= 1 and label range n >= d + 1.
    cache : dict, optional
        Memo table; defaults to a module-wide shared one.
    """
    if d < 1:
        raise InvalidParameters("sphere dimension must be >= 1")
    if n < d + 1:
        raise TooFewVertices(f"need n >= {d + 1}, got {n}")
    return _sphere(d, n, _shared_cache if cache is None else cache)


def cs_ball(d: int, i: int, n: int, *, cache: dict | None = None) -> PureComplex:
    """The i-th ball of the sewing recursion, a d-ball for 0 <= i <= ceil(d/2).

    EMPTY when i < 0.
    """
    if d < 1:
        raise InvalidParameters("ball dimension must be >= 1")
    if i > (d + 1) // 2:
        raise InvalidParameters(f"ball index {i} exceeds ceil(d/2)")
    if n < d + 1:
        raise TooFewVertices(f"need n >= {d + 1}, got {n}")
    return _ball(d, i, n, _shared_cache if cache is None else cache)


def _sphere(d: int, n: int, cache: dict) -> PureComplex:
    key = ("sphere", d, n)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if d == 1:
        cyc = list(range(1, n + 1)) + list(range(-1, -n - 1, -1)) + [1]
        val = PureComplex(
            (cyc[j], cyc[j + 1]) for j in range(2 * n)
        )
    elif n == d + 1:
        val = cross_boundary(d + 1)
    else:
        prev = _sphere(d, n - 1, cache)
        b = _ball(d, (d + 1) // 2 - 1, n - 1, cache)
        nb = negate(b)
        if b.facets & nb.facets:
            raise RecursionInvariantViolated(
                f"replacement balls for d={d}, n={n} share facets"
            )
        kept = prev.facets - b.facets - nb.facets
        pos = join(boundary(b), simplex([n]))
        neg = join(boundary(nb), simplex([-n]))
        val = PureComplex(kept | pos.facets | neg.facets)
    cache[key] = val
    return val


def _ball(d: int, i: int, n: int, cache: dict) -> PureComplex:
    if i < 0:
        return EMPTY
    key = ("ball", d, i, n)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if d == 1:
        if i == 0:
            val = PureComplex([(-1, n)])
        else:
            val = PureComplex(_sphere(1, n, cache).facets - {face((-1, n))})
    elif d % 2 == 1 and i == (d + 1) // 2:
        # top ball in odd dimension: complement of its predecessor
        val = PureComplex(
            _sphere(d, n, cache).facets - _ball(d, i - 1, n, cache).facets
        )
    else:
        parts = EMPTY
        upper = _ball(d - 1, i, n - 1, cache)
        if not upper.is_empty:
            parts = union(parts, join(upper, simplex([n])))
        lower = _ball(d - 1, i - 1, n - 1, cache)
        if not lower.is_empty:
            parts = union(parts, join(negate(lower), simplex([-n])))
        val = parts
    if i <= (d + 1) // 2 - 1:
        sphere_facets = _sphere(d, n, cache).facets
        if not val.facets <= sphere_facets:
            raise RecursionInvariantViolated(
                f"ball d={d}, i={i}, n={n} is not contained in its sphere"
            )
    cache[key] = val
    return val


def edge_link_sphere(
    k: int, n: int, edge, *, cache: dict | None = None
) -> PureComplex:
    """Link of an edge in cs_sphere(2k+1, n+2), expected to be a cs
    (2k-1)-sphere on 2n vertices for suitable edges.  No sphere or cs
    property is asserted here; see edge_link_search for the reports."""
    if k < 2:
        raise InvalidParameters("need k >= 2")
    e = face(edge)
    if len(e) != 2:
        raise InvalidParameters(f"edge must have two vertices, got {e}")
    return link(cs_sphere(2 * k + 1, n + 2, cache=cache), e)


@dataclass(frozen=True)
class EdgeLinkReport:
    """Checks for the link of one edge: no assertion, just findings."""

    edge: Face
    vertex_count: int
    pseudomanifold: bool
    betti: tuple[int, ...]
    sphere_profile: bool
    centrally_symmetric: bool


def edge_link_search(k: int, n: int, *, cache: dict | None = None) -> list[EdgeLinkReport]:
    """Survey every edge of cs_sphere(2k+1, n+2) and report which links
    carry the Betti profile of a (2k-1)-sphere on 2n vertices."""
    if k < 2:
        raise InvalidParameters("need k >= 2")
    host = cs_sphere(2 * k + 1, n + 2, cache=cache)
    profile = sphere_betti_profile(2 * k - 1)
    out = []
    for e in sorted(host.faces_of_cardinality(2)):
        lk = link(host, e)
        pm = is_closed_pseudomanifold(lk).passed
        bt = gf2_betti(lk)
        out.append(
            EdgeLinkReport(
                edge=e,
                vertex_count=lk.vertex_count,
                pseudomanifold=pm,
                betti=bt,
                sphere_profile=pm and bt == profile and lk.vertex_count == 2 * n,
                centrally_symmetric=is_cs(lk),
            )
        )
    return out
