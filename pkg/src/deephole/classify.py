"""Full enumeration of deep-hole cosets at redundancy 3 and 4, the
irreducible-quadratic hypergraph, and coverage experiments.

A coset of PRS(q+1,k) is deep exactly when its syndrome avoids the span of
every (q-k-1)-subset of the normal rational curve (the parity-check columns).
The primary enumeration below walks those spans directly; the coset-leader
weight table of the code is computed independently and the two routes are
required to agree.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from deephole import families
from deephole.codes import Code, prs
from deephole.errors import TheoremAssertionError
from deephole.gf import GF
from deephole.poly import monic_irreducibles


def _pmap(fn, items, threads: int = 1):
    """Order-preserving map, optionally on a worker pool; the result is
    independent of the worker count."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def nrc_points(field: GF, r: int) -> list[tuple[int, ...]]:
    """The q+1 points (1, x, ..., x^(r-1)) plus (0, ..., 0, 1)."""
    pts = [tuple(field.pow(x, t) for t in range(r)) for x in field.element_reprs()]
    pts.append((0,) * (r - 1) + (1,))
    return pts


def deep_syndromes(code: Code) -> frozenset[int]:
    """Packed syndromes of all deep-hole cosets of a PRS code with redundancy
    3 or 4, by direct span enumeration, cross-checked against the coset-leader
    weight table."""
    if code.kind != "projective":
        raise ValueError("deep-coset enumeration is defined for PRS codes")
    field = code.field
    q, k, r = field.q, code.k, code.redundancy
    if r not in (3, 4):
        raise ValueError(f"redundancy {r} unsupported; classification needs 3 or 4")
    rho = code.covering_radius()
    if rho != q - k:
        raise TheoremAssertionError(
            f"covering radius of {code!r} is {rho}, not q-k = {q - k}"
        )
    pts = nrc_points(field, r)
    shallow = set()
    for sub in combinations(pts, r - 2):
        for coeffs in _all_tuples(q, r - 2):
            s = [0] * r
            for c, v in zip(coeffs, sub):
                if c:
                    for t in range(r):
                        s[t] = field.add(s[t], field.mul(c, v[t]))
            shallow.add(code.pack_syndrome(s))
    deep = frozenset(i for i in range(q**r) if i not in shallow)
    weights = code.coset_leader_weights()
    by_weights = frozenset(int(i) for i in np.nonzero(weights == q - k)[0])
    if deep != by_weights:
        raise TheoremAssertionError(
            "span enumeration and coset-leader weights disagree on the deep set"
        )
    return deep


def _all_tuples(q: int, length: int):
    idx = [0] * length
    total = q**length
    for code in range(total):
        yield tuple((code // q**i) % q for i in range(length))


def deep_count_formula(q: int, r: int) -> int:
    """Closed-form count of deep cosets for redundancy 3 and 4."""
    if r == 3:
        return (q - 1) * q * q
    if r == 4:
        return q**4 - (comb(q + 1, 2) * (q - 1) ** 2 + (q + 1) * (q - 1) + 1)
    raise ValueError(f"no closed form for redundancy {r}")


def in_theorem_range(q: int, k: int) -> bool:
    """Whether the counting theorems cover (q, k): k = q-2 needs odd q and
    k >= 2; k = q-3 needs k >= 2."""
    r = q + 1 - k
    if r == 3:
        return q % 2 == 1 and k >= 2
    if r == 4:
        return k >= 2
    return False


def count_deep_cosets(code: Code) -> int:
    """len(deep_syndromes), checked against the closed formula whenever the
    counting theorems apply; outside their range the count is informational."""
    total = len(deep_syndromes(code))
    q, k = code.field.q, code.k
    if in_theorem_range(q, k) and total != deep_count_formula(q, code.redundancy):
        raise TheoremAssertionError(
            f"deep-coset count {total} differs from the closed formula "
            f"{deep_count_formula(q, code.redundancy)} at (q, k) = ({q}, {k})"
        )
    return total


# -- the irreducible-quadratic hypergraph -------------------------------------


@dataclass(frozen=True)
class Hypergraph:
    code: Code
    vertices: frozenset[int]
    edges: dict  # monic irreducible quadratic coefficients -> frozenset of vertices


def build_hypergraph(field: GF, threads: int = 1) -> Hypergraph:
    """Vertices: projective deep-hole coset ids of PRS(q+1,q-2); one edge of
    q+1 vertices per monic irreducible quadratic."""
    q = field.q
    if q % 2 == 0 or q < 5:
        raise ValueError("the hypergraph is defined for odd q >= 5")
    code = prs(field, q - 2)
    quads = monic_irreducibles(field, 2)

    def edge(p):
        fam = families.quadratic_family(code, p)
        return p.coeffs, fam.projective_cosets()

    pairs = _pmap(edge, quads, threads)
    edges = {coeffs: verts for coeffs, verts in pairs}
    vertices = frozenset().union(*edges.values())
    if len(edges) != (q * q - q) // 2:
        raise TheoremAssertionError(
            f"{len(edges)} edges, expected (q^2-q)/2 = {(q * q - q) // 2}"
        )
    return Hypergraph(code, vertices, edges)


def hypergraph_stats(h: Hypergraph) -> dict:
    """Degree histogram and the structural checks: edge size q+1, pairwise
    edge intersections of size 1, vertex degrees in {(q-1)/2, (q+1)/2} with
    each edge split evenly between the two."""
    q = h.code.field.q
    degree = {v: 0 for v in h.vertices}
    for verts in h.edges.values():
        for v in verts:
            degree[v] += 1
    hist = {}
    for d in degree.values():
        hist[d] = hist.get(d, 0) + 1
    lo, hi = (q - 1) // 2, (q + 1) // 2
    edge_list = list(h.edges.values())
    pairwise_ok = all(
        len(a & b) == 1 for a, b in combinations(edge_list, 2)
    )
    split_ok = all(
        sum(1 for v in verts if degree[v] == hi) == (q + 1) // 2
        and sum(1 for v in verts if degree[v] == lo) == (q + 1) // 2
        for verts in h.edges.values()
    )
    checks = {
        "vertex_count_is_q_squared": len(h.vertices) == q * q,
        "edge_count": len(h.edges) == (q * q - q) // 2,
        "edges_have_q_plus_1_vertices": all(
            len(v) == q + 1 for v in h.edges.values()
        ),
        "pairwise_intersections_size_1": pairwise_ok,
        "degrees_in_two_classes": set(hist) <= {lo, hi},
        "edges_split_evenly": split_ok,
        "handshake": sum(degree.values()) == len(h.edges) * (q + 1),
    }
    return {
        "num_vertices": len(h.vertices),
        "num_edges": len(h.edges),
        "degree_histogram": {str(d): c for d, c in sorted(hist.items())},
        "checks": checks,
    }


def completeness_check(field: GF, threads: int = 1) -> dict:
    """Whether the union of DH(p) over all monic irreducible quadratics equals
    the full deep-coset set of PRS(q+1,q-2) (odd q)."""
    q = field.q
    if q % 2 == 0 or q < 5:
        raise ValueError("completeness is established for odd q >= 5")
    code = prs(field, q - 2)
    deep = deep_syndromes(code)
    quads = monic_irreducibles(field, 2)
    fams = _pmap(lambda p: families.quadratic_family(code, p).cosets, quads, threads)
    union = frozenset().union(*fams)
    return {
        "q": q,
        "k": q - 2,
        "num_quadratics": len(quads),
        "union_size": len(union),
        "total_deep_cosets": len(deep),
        "equal": union == deep,
        "per_family": [
            {"poly": list(p.coeffs), "cosets": len(f)} for p, f in zip(quads, fams)
        ],
    }


def cubic_coverage_experiment(field: GF, threads: int = 1) -> dict:
    """How much of the deep-coset set of PRS(q+1,q-3) the cubic construction
    reaches when run over every monic irreducible cubic.  Reported, not
    asserted: completeness here is an open experiment."""
    q = field.q
    code = prs(field, q - 3)
    deep = deep_syndromes(code)
    cubics = monic_irreducibles(field, 3)
    fams = _pmap(lambda p: families.cubic_family(code, p).cosets, cubics, threads)
    union = frozenset().union(*fams)
    if not union <= deep:
        raise TheoremAssertionError("cubic families produced a non-deep coset")
    return {
        "q": q,
        "k": q - 3,
        "num_cubics": len(cubics),
        "covered": len(union),
        "total": len(deep),
        "fraction": len(union) / len(deep),
        "per_family": [
            {"poly": list(p.coeffs), "cosets": len(f)} for p, f in zip(cubics, fams)
        ],
    }
