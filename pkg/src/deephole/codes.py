"""Affine RS(D,k) and projective PRS(q+1,k) codes over GF(q).

Words are tuples of field-element encodings.  The projective evaluation order
is the canonical field order (nonzero ascending, zero last), so generator and
parity-check matrices reproduce the classical doubly-extended layout
column-for-column.  Cosets are identified by syndromes; a packed syndrome is
the base-q integer sum(s_i * q^i).

Two independent error-distance algorithms are provided and cross-validated in
the test suite: an exhaustive scan over all codewords, and a coset-leader
weight table over the full syndrome space.  The table is computed by breadth
first search: level w holds exactly the syndromes expressible as a combination
of w parity-check columns, and adding one scaled column is a cyclic shift of
the base-p digit tensor of the syndrome space.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

from deephole import linalg
from deephole.errors import BoundExceededError
from deephole.gf import GF, field_of_order
from deephole.poly import Poly, RationalFunction

MAX_EXHAUSTIVE_CODEWORDS = 10**7
MAX_SYNDROME_SPACE = 10**7
MAX_SPAN_REDUNDANCY = 6


class Code:
    """Descriptor of an affine RS(D,k) or projective PRS(q+1,k) code."""

    def __init__(self, kind: str, field: GF, k: int, D=None, scale=None):
        if kind not in ("affine", "projective"):
            raise ValueError(f"unknown code kind {kind!r}")
        self.kind = kind
        self.field = field
        self.k = k
        if kind == "projective":
            if D is not None or scale is not None:
                raise ValueError("projective codes use the full field, unscaled")
            self.D = field.element_reprs()
            self.scale = None
        else:
            self.D = tuple(D) if D is not None else field.element_reprs()
            if len(set(self.D)) != len(self.D):
                raise ValueError("evaluation set has repeated points")
            if any(not 0 <= x < field.q for x in self.D):
                raise ValueError("evaluation point out of range")
            self.scale = tuple(scale) if scale is not None else (1,) * len(self.D)
            if len(self.scale) != len(self.D) or any(v == 0 for v in self.scale):
                raise ValueError("scale vector must be nonzero of length n")
        if not 0 < k < self.n:
            raise ValueError(f"dimension k = {k} out of range for n = {self.n}")
        self._weights = None
        self._codewords = None

    @property
    def n(self) -> int:
        return len(self.D) + (1 if self.kind == "projective" else 0)

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def __repr__(self):
        if self.kind == "projective":
            return f"PRS({self.n},{self.k}) over {self.field!r}"
        return f"RS(|D|={len(self.D)},{self.k}) over {self.field!r}"

    def describe(self) -> dict:
        out = {"kind": self.kind, "n": self.n, "k": self.k, "field": self.field.describe()}
        if self.kind == "affine":
            out["D"] = list(self.D)
            out["scale"] = list(self.scale)
        return out

    # -- matrices -----------------------------------------------------------

    def generator_matrix(self) -> list[list[int]]:
        f = self.field
        rows = []
        for s in range(self.k):
            row = [f.mul(v, f.pow(x, s)) for x, v in zip(self.D, self._scales())]
            if self.kind == "projective":
                row.append(1 if s == self.k - 1 else 0)
            rows.append(row)
        return rows

    def _scales(self):
        return self.scale if self.kind == "affine" else (1,) * len(self.D)

    def parity_check_matrix(self) -> list[list[int]]:
        f = self.field
        r = self.redundancy
        if self.kind == "projective":
            rows = []
            for t in range(r):
                row = [f.pow(x, t) for x in self.D]
                row.append(1 if t == r - 1 else 0)
                rows.append(row)
            return rows
        # dual of a generalized RS code is generalized RS with the classical
        # column multipliers u_i = (v_i * prod_{j != i} (x_i - x_j))^(-1)
        us = []
        for i, xi in enumerate(self.D):
            prod = 1
            for j, xj in enumerate(self.D):
                if j != i:
                    prod = f.mul(prod, f.sub(xi, xj))
            us.append(f.inv(f.mul(self.scale[i], prod)))
        return [
            [f.mul(u, f.pow(x, t)) for x, u in zip(self.D, us)] for t in range(r)
        ]

    def h_columns(self) -> list[tuple[int, ...]]:
        return [tuple(col) for col in zip(*self.parity_check_matrix())]

    # -- encoding and words ---------------------------------------------------

    def encode(self, f: Poly) -> tuple[int, ...]:
        if f.degree > self.k - 1:
            raise ValueError(f"deg f = {f.degree} exceeds k-1 = {self.k - 1}")
        if self.kind == "projective":
            ck1 = f.coeffs[self.k - 1] if len(f.coeffs) >= self.k else 0
            return tuple(f(x) for x in self.D) + (ck1,)
        fld = self.field
        return tuple(fld.mul(v, f(x)) for x, v in zip(self.D, self.scale))

    def word(self, f: Poly, last: int | None = None) -> tuple[int, ...]:
        """Evaluation word of an arbitrary-degree polynomial: the affine u_f,
        or the projective (u_f, last)."""
        evals = tuple(f(x) for x in self.D)
        if self.kind == "affine":
            if last is not None:
                raise ValueError("affine words have no extension coordinate")
            fld = self.field
            return tuple(fld.mul(v, e) for v, e in zip(self.scale, evals))
        if last is not None and not 0 <= last < self.field.q:
            raise ValueError(f"extension coordinate {last} out of range")
        return evals + (0 if last is None else last,)

    def word_from_rational(self, r: RationalFunction, last: int = 0) -> tuple[int, ...]:
        if self.kind != "projective":
            raise ValueError("rational-function words are projective")
        if r.has_pole():
            raise ValueError("denominator has a root in the field")
        return tuple(r(x) for x in self.D) + (last,)

    # -- syndromes and cosets ---------------------------------------------------

    def syndrome(self, word) -> tuple[int, ...]:
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != n = {self.n}")
        f = self.field
        out = []
        for row in self.parity_check_matrix():
            acc = 0
            for h, w in zip(row, word):
                acc = f.add(acc, f.mul(h, w))
            out.append(acc)
        return tuple(out)

    def pack_syndrome(self, s) -> int:
        q = self.field.q
        return sum(si * q**i for i, si in enumerate(s))

    def unpack_syndrome(self, idx: int) -> tuple[int, ...]:
        q = self.field.q
        return tuple((idx // q**i) % q for i in range(self.redundancy))

    def coset_id(self, word) -> int:
        return self.pack_syndrome(self.syndrome(word))

    def normalize_syndrome(self, s) -> tuple[int, ...]:
        """Scale so the first nonzero coordinate is 1 (projective coset id)."""
        f = self.field
        c = next((si for si in s if si != 0), None)
        if c is None:
            return tuple(s)
        inv = f.inv(c)
        return tuple(f.mul(inv, si) for si in s)

    def projective_coset_id(self, word) -> int:
        return self.pack_syndrome(self.normalize_syndrome(self.syndrome(word)))

    def word_from_syndrome(self, s) -> tuple[int, ...]:
        """A representative word with the given syndrome, supported on the
        first `redundancy` coordinates."""
        r = self.redundancy
        cols = self.h_columns()[:r]
        a = [[cols[j][t] for j in range(r)] for t in range(r)]
        y = linalg.solve(self.field, a, list(s))
        return tuple(y) + (0,) * (self.n - r)

    # -- coset-leader weights -----------------------------------------------------

    def coset_leader_weights(self, max_syndromes: int | None = None) -> np.ndarray:
        """int8 array over packed syndromes: minimum number of parity-check
        columns whose span contains the syndrome (= coset leader weight)."""
        if self._weights is not None:
            return self._weights
        if max_syndromes is None:
            max_syndromes = MAX_SYNDROME_SPACE
        fld = self.field
        p, m, q = fld.p, fld.m, fld.q
        r = self.redundancy
        if q**r > max_syndromes:
            raise BoundExceededError(
                f"syndrome space {q}^{r} exceeds bound {max_syndromes}"
            )
        ndigits = m * r
        shifts = set()
        for col in self.h_columns():
            for c in range(1, q):
                v = tuple(fld.mul(c, h) for h in col)
                digs = []
                for coord in v:
                    digs.extend(fld.digits(coord))
                shifts.add(tuple(digs))
        shifts.discard((0,) * ndigits)
        total = q**r
        weights = np.full(total, -1, dtype=np.int8)
        weights[0] = 0
        if p == 2:
            # adding a column multiple is an index XOR in characteristic 2
            packed = sorted(
                sum(d << j for j, d in enumerate(digs)) for digs in shifts
            )
            covered = np.zeros(total, dtype=bool)
            covered[0] = True
            base = np.arange(total, dtype=np.intp)
            w = 0
            while not covered.all():
                w += 1
                if w > r:
                    raise AssertionError("BFS exceeded redundancy")
                new = covered.copy()
                for v in packed:
                    new |= covered[base ^ v]
                weights[new ^ covered] = w
                covered = new
        else:
            # adding a column multiple is a cyclic shift of each base-p digit
            covered = np.zeros((p,) * ndigits, dtype=bool)
            covered.flat[0] = True
            w = 0
            while not covered.all():
                w += 1
                if w > r:
                    raise AssertionError("BFS exceeded redundancy")
                new = covered.copy()
                for digs in shifts:
                    pairs = [
                        (ndigits - 1 - j, d) for j, d in enumerate(digs) if d != 0
                    ]
                    axes = tuple(a for a, _ in pairs)
                    amounts = tuple(d for _, d in pairs)
                    new |= np.roll(covered, amounts, axis=axes)
                weights[(new ^ covered).reshape(-1)] = w
                covered = new
        self._weights = weights
        return weights

    def covering_radius(self, max_syndromes: int | None = None) -> int:
        return int(self.coset_leader_weights(max_syndromes=max_syndromes).max())

    # -- exhaustive codeword enumeration ---------------------------------------

    def codewords(self, max_codewords: int | None = None) -> np.ndarray:
        """All q^k codewords as an (N, n) array, row i encoding the message
        with coefficient digits of i (base q, low degree first)."""
        if self._codewords is not None:
            return self._codewords
        if max_codewords is None:
            max_codewords = MAX_EXHAUSTIVE_CODEWORDS
        q = self.field.q
        big = q**self.k
        if big > max_codewords:
            raise BoundExceededError(f"q^k = {big} exceeds bound {max_codewords}")
        mul_t = self.field.mul_table
        add_t = self.field.add_table
        idx = np.arange(big, dtype=np.int64)
        msgs = [((idx // q**j) % q).astype(np.uint16) for j in range(self.k)]
        cols = []
        for pos, x in enumerate(self.D):
            col = np.zeros(big, dtype=np.uint16)
            mul_x = np.ascontiguousarray(mul_t[:, x])
            for j in range(self.k - 1, -1, -1):
                col = add_t[mul_x[col], msgs[j]]
            if self.kind == "affine" and self.scale[pos] != 1:
                col = np.ascontiguousarray(mul_t[:, self.scale[pos]])[col]
            cols.append(col)
        if self.kind == "projective":
            cols.append(msgs[self.k - 1])
        dt = np.uint8 if q <= 256 else np.uint16
        out = np.stack(cols, axis=1).astype(dt)
        out.setflags(write=False)
        self._codewords = out
        return out

    # -- distances -------------------------------------------------------------

    def error_distance(
        self,
        word,
        method: str = "auto",
        max_codewords: int | None = None,
        max_span_redundancy: int | None = None,
    ) -> int:
        """Exact minimum Hamming distance from the word to the code."""
        if max_codewords is None:
            max_codewords = MAX_EXHAUSTIVE_CODEWORDS
        if max_span_redundancy is None:
            max_span_redundancy = MAX_SPAN_REDUNDANCY
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != n = {self.n}")
        if method == "auto":
            method = (
                "syndrome_span"
                if self.redundancy <= max_span_redundancy
                and self.field.q**self.redundancy <= MAX_SYNDROME_SPACE
                else "exhaustive"
            )
        if method == "syndrome_span":
            if self.redundancy > max_span_redundancy:
                raise BoundExceededError(
                    f"redundancy {self.redundancy} exceeds bound {max_span_redundancy}"
                )
            weights = self.coset_leader_weights()
            return int(weights[self.coset_id(word)])
        if method == "exhaustive":
            cw = self.codewords(max_codewords=max_codewords)
            arr = np.asarray(word, dtype=cw.dtype)
            return int((cw != arr).sum(axis=1).min())
        raise ValueError(f"unknown method {method!r}")

    def minimum_distance(
        self, method: str = "auto", max_codewords: int | None = None
    ) -> int:
        """Exact minimum distance; "dual" searches for the smallest linearly
        dependent set of parity-check columns, "exhaustive" scans codewords."""
        if max_codewords is None:
            max_codewords = MAX_EXHAUSTIVE_CODEWORDS
        if method == "auto":
            method = "dual" if self.redundancy <= MAX_SPAN_REDUNDANCY else "exhaustive"
        if method == "dual":
            cols = self.h_columns()
            for w in range(1, self.redundancy + 1):
                for sub in itertools.combinations(cols, w):
                    if linalg.rank(self.field, sub) < w:
                        return w
            return self.redundancy + 1
        if method == "exhaustive":
            cw = self.codewords(max_codewords=max_codewords)
            return int((cw[1:] != 0).sum(axis=1).min())
        raise ValueError(f"unknown method {method!r}")

    def is_mds(self) -> bool:
        return self.minimum_distance() == self.n - self.k + 1


@functools.lru_cache(maxsize=None)
def _cached_code(kind: str, q: int, k: int, D, scale) -> Code:
    return Code(kind, field_of_order(q), k, D=D, scale=scale)


def rs(field_or_q, k: int, D=None, scale=None) -> Code:
    """Affine RS(D,k); D defaults to all of GF(q) in canonical order."""
    if isinstance(field_or_q, GF):
        return Code("affine", field_or_q, k, D=D, scale=scale)
    return _cached_code(
        "affine",
        field_or_q,
        k,
        tuple(D) if D is not None else None,
        tuple(scale) if scale is not None else None,
    )


def prs(field_or_q, k: int) -> Code:
    """Projective PRS(q+1,k)."""
    if isinstance(field_or_q, GF):
        return Code("projective", field_or_q, k)
    return _cached_code("projective", field_or_q, k, None, None)
