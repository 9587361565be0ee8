"""The explicit deep-hole families and their coset identities.

Each construction returns a DeepHoleFamily holding the set of raw coset ids
(packed syndromes) plus a few representative words.  Every emitted word is
verified to sit at distance equal to the covering radius by exact computation;
the structural hypotheses behind a construction (covering radius q-k, expected
coset counts) are machine-checked and raise TheoremAssertionError when they
fail at the tested size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from deephole import numbertheory
from deephole.codes import Code, rs
from deephole.errors import TheoremAssertionError
from deephole.gf import GF
from deephole.poly import Poly, RationalFunction, is_irreducible, mod_inverse

TAGS = ("degree_k", "inverse_monomial", "zero_sum_free", "quadratic", "cubic")


@dataclass(frozen=True)
class DeepHoleFamily:
    tag: str
    params: dict
    cosets: frozenset[int]
    words: tuple[tuple[int, ...], ...]
    code: Code

    def describe(self, sample_words: int = 3) -> dict:
        return {
            "tag": self.tag,
            "params": self.params,
            "coset_count": len(self.cosets),
            "sample_words": [list(w) for w in self.words[:sample_words]],
        }

    def projective_cosets(self) -> frozenset[int]:
        code = self.code
        return frozenset(
            code.pack_syndrome(code.normalize_syndrome(code.unpack_syndrome(c)))
            for c in self.cosets
        )


def _check_prs_k_range(code: Code):
    q, k = code.field.q, code.k
    if code.kind != "projective":
        raise ValueError("construction applies to projective codes")
    ok = (2 <= k <= q - 2) if q % 2 else (3 <= k <= q - 3)
    if not ok:
        raise ValueError(f"k = {k} outside the admissible range for q = {q}")


def _require_max_distance(code: Code) -> int:
    """Check the hypothesis rho = q - k at this size; return the radius."""
    rho = code.covering_radius()
    expected = code.field.q - code.k
    if rho != expected:
        raise TheoremAssertionError(
            f"covering radius of {code!r} is {rho}, not q-k = {expected}"
        )
    return rho


def _combine_syndromes(field: GF, coeffs, syndromes) -> tuple[int, ...]:
    out = [0] * len(syndromes[0])
    for c, s in zip(coeffs, syndromes):
        if c:
            for t, st in enumerate(s):
                out[t] = field.add(out[t], field.mul(c, st))
    return tuple(out)


def _verify_deep(code: Code, cosets, rho: int, what: str):
    weights = code.coset_leader_weights()
    bad = [c for c in cosets if int(weights[c]) != rho]
    if bad:
        raise TheoremAssertionError(
            f"{what}: {len(bad)} cosets not at distance {rho} (e.g. {bad[0]})"
        )


def degree_k_family(code: Code) -> DeepHoleFamily:
    """Cosets of the words (u_f, v) with deg f = k, one per (leading
    coefficient, extension coordinate) pair."""
    _check_prs_k_range(code)
    rho = _require_max_distance(code)
    field = code.field
    q, k = field.q, code.k
    cosets = set()
    words = []
    for a in range(1, q):
        f = Poly.monomial(field, k, a)
        for v in range(q):
            w = code.word(f, last=v)
            cosets.add(code.coset_id(w))
            if len(words) < 3:
                words.append(w)
    if len(cosets) != q * (q - 1):
        raise TheoremAssertionError(
            f"degree-k family has {len(cosets)} cosets, expected q(q-1) = {q * (q - 1)}"
        )
    _verify_deep(code, cosets, rho, "degree-k family")
    return DeepHoleFamily("degree_k", {"k": k}, frozenset(cosets), tuple(words), code)


def inverse_monomial_family(code: Code, delta: int) -> DeepHoleFamily:
    """Cosets of a*(x - delta)^(q-2) on an affine code with delta outside D."""
    if code.kind != "affine":
        raise ValueError("inverse-monomial deep holes live in affine codes")
    field = code.field
    q = field.q
    if len(code.D) >= q:
        raise ValueError("evaluation set must be a proper subset of the field")
    if delta in code.D:
        raise ValueError(f"delta = {delta} lies in the evaluation set")
    base = Poly(field, (field.neg(delta), 1))
    f = Poly.one(field)
    for _ in range(q - 2):
        f = f * base
    u = code.word(f)
    rho = code.covering_radius()
    cosets = set()
    words = []
    for a in range(1, q):
        w = tuple(field.mul(a, e) for e in u)
        cosets.add(code.coset_id(w))
        if len(words) < 3:
            words.append(w)
    if len(cosets) != q - 1:
        raise TheoremAssertionError(
            f"inverse-monomial family has {len(cosets)} cosets, expected {q - 1}"
        )
    _verify_deep(code, cosets, rho, "inverse-monomial family")
    return DeepHoleFamily(
        "inverse_monomial", {"delta": delta}, frozenset(cosets), tuple(words), code
    )


def zero_sum_free_family(field: GF, D, r: int) -> DeepHoleFamily:
    """The deep-hole coset of x^(k+1) - (sum D) x^k on RS(D, k = |D|-r-1),
    valid when D is r-zero-sum-free; checked to differ from the degree-k and
    inverse-monomial cosets."""
    D = tuple(D)
    if not numbertheory.is_zero_sum_free(field, D, r):
        raise ValueError(f"D = {D} is not {r}-zero-sum-free in {field!r}")
    k = len(D) - r - 1
    if k < 1:
        raise ValueError(f"|D| - r - 1 = {k} must be >= 1")
    code = rs(field, k, D=D)
    total = 0
    for s in D:
        total = field.add(total, s)
    f = Poly.monomial(field, k + 1) + Poly.monomial(field, k, field.neg(total))
    w = code.word(f)
    dist = code.error_distance(w)
    if dist != code.n - k:
        raise TheoremAssertionError(
            f"zero-sum-free word has distance {dist}, expected n-k = {code.n - k}"
        )
    own = code.coset_id(w)
    others = set()
    for a in range(1, field.q):
        others.add(code.coset_id(code.word(Poly.monomial(field, k, a))))
    for delta in range(field.q):
        if delta in D:
            continue
        others |= inverse_monomial_family(code, delta).cosets
    if own in others:
        raise TheoremAssertionError(
            "zero-sum-free coset coincides with a previously known family"
        )
    return DeepHoleFamily(
        "zero_sum_free",
        {"D": list(D), "r": r, "k": k},
        frozenset({own}),
        (w,),
        code,
    )


def quadratic_family(code: Code, p: Poly) -> DeepHoleFamily:
    """DH(p): the q^2 - 1 deep-hole cosets of (a + b x)/p(x) on PRS(q+1,k)
    for a monic irreducible quadratic p."""
    _check_prs_k_range(code)
    if p.degree != 2 or not p.is_monic or not is_irreducible(p):
        raise ValueError(f"{p!r} is not a monic irreducible quadratic")
    rho = _require_max_distance(code)
    field = code.field
    q = field.q
    w1 = code.word_from_rational(RationalFunction(Poly.one(field), p))
    wx = code.word_from_rational(RationalFunction(Poly.x(field), p))
    s1, sx = code.syndrome(w1), code.syndrome(wx)
    cosets = set()
    words = []
    for b in range(q):
        for a in range(q):
            if a == 0 and b == 0:
                continue
            s = _combine_syndromes(field, (a, b), (s1, sx))
            cosets.add(code.pack_syndrome(s))
            if len(words) < 3:
                words.append(
                    tuple(
                        field.add(field.mul(a, e1), field.mul(b, ex))
                        for e1, ex in zip(w1, wx)
                    )
                )
    if len(cosets) != q * q - 1:
        raise TheoremAssertionError(
            f"|DH(p)| = {len(cosets)}, expected q^2-1 = {q * q - 1}"
        )
    _verify_deep(code, cosets, rho, f"quadratic family of {p!r}")
    return DeepHoleFamily(
        "quadratic", {"poly": list(p.coeffs)}, frozenset(cosets), tuple(words), code
    )


def cubic_family(code: Code, p: Poly) -> DeepHoleFamily:
    """Deep-hole cosets of (a + b x + c x^2)/p(x) on PRS(q+1,q-3) for a monic
    irreducible cubic p, found by exact distance filtering of all nonzero
    numerator triples."""
    field = code.field
    q = field.q
    if code.kind != "projective" or code.k != q - 3:
        raise ValueError("cubic construction requires the PRS code with k = q-3")
    _check_prs_k_range(code)
    if p.degree != 3 or not p.is_monic or not is_irreducible(p):
        raise ValueError(f"{p!r} is not a monic irreducible cubic")
    rho = _require_max_distance(code)
    basis = [
        code.word_from_rational(RationalFunction(Poly.monomial(field, i), p))
        for i in range(3)
    ]
    syns = [code.syndrome(w) for w in basis]
    weights = code.coset_leader_weights()
    cosets = set()
    deep_triples = []
    for c in range(q):
        for b in range(q):
            for a in range(q):
                if a == 0 and b == 0 and c == 0:
                    continue
                s = _combine_syndromes(field, (a, b, c), syns)
                cid = code.pack_syndrome(s)
                if int(weights[cid]) == rho:
                    cosets.add(cid)
                    deep_triples.append((a, b, c))
    expected = (q - 1) * (q * q + q + 2) // 2
    if len(cosets) != expected or len(deep_triples) != expected:
        raise TheoremAssertionError(
            f"cubic family of {p!r} has {len(cosets)} cosets "
            f"({len(deep_triples)} generators), expected {expected}"
        )
    words = []
    for a, b, c in deep_triples[:3]:
        words.append(
            tuple(
                field.add(
                    field.add(field.mul(a, e0), field.mul(b, e1)), field.mul(c, e2)
                )
                for e0, e1, e2 in zip(*basis)
            )
        )
    return DeepHoleFamily(
        "cubic", {"poly": list(p.coeffs)}, frozenset(cosets), tuple(words), code
    )


def cubic_nondeep_by_splitting(code: Code, p: Poly) -> tuple[set, set]:
    """Independent route to the non-deep numerators of the cubic construction:
    residues of d * prod(x - s) mod p over all (q-2)- and (q-1)-subsets S and
    d != 0 give exactly the numerators at distance q-k-1.  Returns the two
    triple sets (as (a, b, c) tuples) from subset sizes q-2 and q-1."""
    field = code.field
    q = field.q
    if code.kind != "projective" or code.k != q - 3:
        raise ValueError("splitting route requires the PRS code with k = q-3")
    if p.degree != 3 or not p.is_monic or not is_irreducible(p):
        raise ValueError(f"{p!r} is not a monic irreducible cubic")
    full = Poly(field, (0,) * q + (1,)) - Poly.x(field)  # x^q - x
    sets = []
    for drop in (2, 1):
        triples = set()
        for removed in itertools.combinations(range(q), drop):
            prod = full
            for s in removed:
                prod = prod // Poly(field, (field.neg(s), 1))
            base = prod % p
            for d in range(1, q):
                t = base.scale(d).coeffs
                triples.add(tuple(t) + (0,) * (3 - len(t)))
        sets.append(triples)
    return sets[0], sets[1]


def is_deep_hole(code: Code, word) -> bool:
    return code.error_distance(word) == code.covering_radius()


def same_coset(code: Code, w1, w2) -> bool:
    return code.syndrome(w1) == code.syndrome(w2)


def dh_intersection(code: Code, p1: Poly, p2: Poly) -> frozenset[int]:
    """The q-1 cosets shared by DH(p1) and DH(p2) on PRS(q+1,q-2), built from
    the congruences a1 + b1 x = a (x^q - x)/p2 mod p1 and cross-checked against
    the brute-force intersection of the two families."""
    field = code.field
    q = field.q
    if q % 2 == 0 or code.kind != "projective" or code.k != q - 2:
        raise ValueError("intersection construction requires odd q and k = q-2")
    for p in (p1, p2):
        if p.degree != 2 or not p.is_monic or not is_irreducible(p):
            raise ValueError(f"{p!r} is not a monic irreducible quadratic")
    if p1 == p2:
        raise ValueError("the two quadratics must differ")
    xq_x = Poly(field, (0,) * q + (1,)) - Poly.x(field)
    base = (xq_x % p1) * mod_inverse(p2 % p1, p1) % p1
    shared = set()
    for a in range(1, q):
        lin = base.scale(a)
        w = code.word_from_rational(RationalFunction(lin, p1))
        shared.add(code.coset_id(w))
    if len(shared) != q - 1:
        raise TheoremAssertionError(
            f"congruence sweep produced {len(shared)} cosets, expected {q - 1}"
        )
    brute = quadratic_family(code, p1).cosets & quadratic_family(code, p2).cosets
    if frozenset(shared) != brute:
        raise TheoremAssertionError(
            "congruence construction disagrees with brute-force intersection"
        )
    return frozenset(shared)
