"""Boundary complexes of three classical polytope families.

cyclic_boundary enumerates facets of the cyclic polytope by the Gale
evenness condition, cross_boundary builds the boundary of the cross
polytope on antipodal labels, and stacked_sphere grows a stacked sphere
by repeated coning.  All vertex labels follow the package convention
(positive labels 1..n, antipodes negative).
"""

from __future__ import annotations

import itertools

from .complexes import PureComplex
from .errors import InvalidParameters, TooFewVertices


def _gale_even(subset: tuple[int, ...], n: int) -> bool:
    # Evenness between consecutive non-elements suffices: the count
    # between an arbitrary pair is a sum of these gap counts.
    inside = set(subset)
    prev = None
    run = 0
    for v in range(1, n + 1):
        if v in inside:
            run += 1
        else:
            if prev is not None and run % 2 == 1:
                return False
            prev = v
            run = 0
    return True


def cyclic_boundary(d: int, n: int) -> PureComplex:
    """Boundary complex of the cyclic d-polytope on vertices 1..n.

    Facets are the d-subsets satisfying the Gale evenness condition:
    between any two vertices not in the facet lies an even number of
    facet vertices.
    """
    if d < 1:
        raise InvalidParameters("polytope dimension must be >= 1")
    if n <= d:
        raise TooFewVertices(f"cyclic {d}-polytope needs more than {d} vertices")
    return PureComplex(
        c for c in itertools.combinations(range(1, n + 1), d) if _gale_even(c, n)
    )


def cross_boundary(d: int) -> PureComplex:
    """Boundary of the d-dimensional cross polytope on labels +-1..+-d.

    The 2^d facets pick one sign for each label.
    """
    if d < 1:
        raise InvalidParameters("cross polytope dimension must be >= 1")
    return PureComplex(
        signs for signs in itertools.product(*[(i, -i) for i in range(1, d + 1)])
    )


def stacked_sphere(d: int, n: int) -> PureComplex:
    """A stacked (d-1)-sphere on n vertices, built deterministically.

    Starts from the boundary of the d-simplex on 1..d+1; each step
    removes the lexicographically smallest facet avoiding the most
    recently added vertex and cones its boundary with a fresh label.
    """
    if d < 2:
        raise InvalidParameters("stacked spheres need dimension >= 2")
    if n < d + 1:
        raise TooFewVertices(f"need at least {d + 1} vertices, got {n}")
    facets = set(itertools.combinations(range(1, d + 2), d))
    apex = None
    for fresh in range(d + 2, n + 1):
        target = min(f for f in facets if apex not in f)
        facets.remove(target)
        for i in range(len(target)):
            facets.add(tuple(sorted(target[:i] + target[i + 1:] + (fresh,))))
        apex = fresh
    return PureComplex(facets)
