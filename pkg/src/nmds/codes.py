"""Linear codes over GF(2^m): matrices, enumeration, distributions, duals.

A code is held by its generator matrix.  Weight distributions come from
exhaustive codeword enumeration (vectorized over message blocks, exact
integer counts), guarded so only desk-scale jobs run.  Low-weight dual
codewords are found from column dependencies of the generator, which is
exact for weights up to 3 and is how every minimum-distance-3 dual here is
handled.  The MacWilliams transform gives the full dual distribution in
exact big-integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .field import GF2m

__all__ = [
    "MatrixGF",
    "LinearCode",
    "WeightDistribution",
    "rank",
    "rref",
    "dual",
    "weight_distribution",
    "minimum_distance",
    "dual_distance_exact",
    "min_weight_dual_codewords",
    "min_weight_codewords",
    "min_weight_supports",
    "macwilliams",
    "matrix_to_text",
    "matrix_from_text",
]

ENUMERATION_GUARD = 1 << 34  # refuse q**k beyond this (accidental dual-side jobs)


class MatrixGF:
    """Dense matrix over GF(2^m); entries are element values in a shared context."""

    def __init__(self, ctx: GF2m, entries) -> None:
        data = np.asarray(entries, dtype=np.int64)
        if data.ndim != 2:
            raise ValueError("entries must be two-dimensional")
        if data.size and (data.min() < 0 or data.max() >= ctx.q):
            raise ValueError("entry out of range for the field")
        self.ctx = ctx
        self.data = data

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.data[:, j])

    def copy(self) -> "MatrixGF":
        return MatrixGF(self.ctx, self.data.copy())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.ctx == other.ctx
            and self.data.shape == other.data.shape
            and bool(np.all(self.data == other.data))
        )

    def __repr__(self) -> str:
        return f"MatrixGF({self.rows}x{self.cols} over GF({self.ctx.q}))"


def rref(mat: MatrixGF) -> MatrixGF:
    """Reduced row echelon form over GF(q) (unique)."""
    ctx = mat.ctx
    rows = [list(map(int, r)) for r in mat.data]
    nrows, ncols = mat.rows, mat.cols
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ctx.inv(rows[r][c])
        rows[r] = [ctx.mul(inv, v) for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v ^ ctx.mul(f, w) for v, w in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return MatrixGF(ctx, rows if rows else np.zeros((0, ncols), dtype=np.int64))


def rank(mat: MatrixGF) -> int:
    """Rank over GF(q)."""
    reduced = rref(mat)
    return sum(1 for i in range(reduced.rows) if any(reduced.data[i]))


class LinearCode:
    """An [n, k] linear code given by a full-row-rank generator matrix."""

    def __init__(self, generator: MatrixGF) -> None:
        self.generator = generator
        self.ctx = generator.ctx
        self.n = generator.cols
        self.k = generator.rows
        if self.k > self.n:
            raise ValueError(f"k={self.k} exceeds n={self.n}")
        if self.k and rank(generator) != self.k:
            raise ValueError("generator matrix does not have full row rank")
        # Memo for the expensive pure derivations (distribution, triples, ...).
        self._memo: dict = {}

    def codeword(self, message) -> np.ndarray:
        """Encode one message vector of length k."""
        msg = list(message)
        if len(msg) != self.k:
            raise ValueError(f"message length {len(msg)} != k={self.k}")
        out = np.zeros(self.n, dtype=np.int64)
        for a, row in zip(msg, self.generator.data):
            if a:
                out ^= self.ctx.scale_vec(int(a), row)
        return out

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.ctx.q}))"


@dataclass(frozen=True)
class WeightDistribution:
    """Exact codeword counts A_0..A_n by Hamming weight."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError("counts must have length n+1")
        if self.counts[0] != 1:
            raise ValueError("A_0 must be 1")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")

    @property
    def min_distance(self) -> int:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        raise ValueError("zero code has no minimum distance")

    def total(self) -> int:
        return sum(self.counts)

    def nonzero_items(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.counts) if c]

    def enumerator_str(self) -> str:
        """Human form like '1 + 70z^9 + 252z^10 + ...'."""
        parts = []
        for i, c in self.nonzero_items():
            if i == 0:
                parts.append(str(c))
            else:
                parts.append(f"{c}z^{i}")
        return " + ".join(parts)


# -- enumeration ---------------------------------------------------------------

def _scaled_rows(code: LinearCode) -> list[np.ndarray]:
    """Per-row scaling tables: entry [a, j] = a * G[i, j], shape (q, n) uint16."""
    ctx = code.ctx
    return [ctx.scale_table(code.generator.data[i]) for i in range(code.k)]


def _check_enumeration_guard(q: int, k: int) -> None:
    if q**k > ENUMERATION_GUARD:
        raise ValueError(
            f"q^k = {q**k} exceeds the enumeration guard 2^34; "
            "use the MacWilliams transform of the dual side instead"
        )


def weight_distribution(code: LinearCode) -> WeightDistribution:
    """Exact distribution by enumerating all q^k codewords."""
    if "weight_distribution" not in code._memo:
        code._memo["weight_distribution"] = _weight_distribution_uncached(code)
    return code._memo["weight_distribution"]


def _weight_distribution_uncached(code: LinearCode) -> WeightDistribution:
    q, n, k = code.ctx.q, code.n, code.k
    _check_enumeration_guard(q, k)
    if k == 0:
        return WeightDistribution(n, (1,) + (0,) * n)

    scaled = _scaled_rows(code)
    counts = np.zeros(n + 1, dtype=np.int64)
    last = scaled[-1]
    if k == 1:
        w = np.count_nonzero(last, axis=1)
        counts += np.bincount(w, minlength=n + 1)
        return WeightDistribution(n, tuple(int(x) for x in counts))

    penultimate = scaled[-2]
    # Keep each XOR block under ~2^24 uint16 entries.
    chunk = max(1, (1 << 24) // max(1, q * n))
    prefix_rows = [scaled[i] for i in range(k - 2)]

    def prefix_vectors():
        if not prefix_rows:
            yield np.zeros(n, dtype=np.uint16)
            return
        idx = [0] * len(prefix_rows)
        while True:
            vec = prefix_rows[0][idx[0]].copy()
            for t, i in zip(prefix_rows[1:], idx[1:]):
                vec ^= t[i]
            yield vec
            for pos in range(len(idx) - 1, -1, -1):
                idx[pos] += 1
                if idx[pos] < q:
                    break
                idx[pos] = 0
            else:
                return

    for base in prefix_vectors():
        block = base[None, :] ^ penultimate  # (q, n)
        for start in range(0, q, chunk):
            full = block[start : start + chunk, None, :] ^ last[None, :, :]
            w = np.count_nonzero(full, axis=2)
            counts += np.bincount(w.ravel(), minlength=n + 1)
    return WeightDistribution(n, tuple(int(x) for x in counts))


def minimum_distance(code: LinearCode) -> int:
    """Smallest positive weight with a codeword; rejects the zero code."""
    if code.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    return weight_distribution(code).min_distance


def _projective_messages(q: int, k: int) -> np.ndarray:
    """One message per scalar class: first nonzero entry equals 1.

    Returns an array of shape ( (q^k - 1)/(q - 1), k )."""
    blocks = []
    for lead in range(k):
        tail = k - lead - 1
        count = q**tail
        block = np.zeros((count, k), dtype=np.int64)
        block[:, lead] = 1
        rem = np.arange(count)
        for j in range(tail - 1, -1, -1):
            block[:, lead + 1 + j] = rem % q
            rem //= q
        blocks.append(block)
    return np.concatenate(blocks, axis=0)


def min_weight_codewords(code: LinearCode) -> list[tuple[frozenset[int], tuple[int, ...]]]:
    """Canonical minimum-weight codewords, one per scalar class.

    Canonical means the first nonzero symbol is scaled to 1.  Every
    minimum-weight codeword is a nonzero multiple of exactly one entry.
    """
    if "min_weight_codewords" in code._memo:
        return code._memo["min_weight_codewords"]
    ctx, q, k, n = code.ctx, code.ctx.q, code.k, code.n
    if k == 0:
        raise ValueError("zero code has no minimum-weight codewords")
    _check_enumeration_guard(q, k)
    msgs = _projective_messages(q, k)
    scaled = _scaled_rows(code)
    block_size = max(1, (1 << 24) // max(1, n))
    d = n + 1
    kept: list[np.ndarray] = []
    for start in range(0, len(msgs), block_size):
        block = msgs[start : start + block_size]
        words = np.zeros((len(block), n), dtype=np.uint16)
        for i in range(k):
            words ^= scaled[i][block[:, i]]
        weights = np.count_nonzero(words, axis=1)
        block_min = int(weights.min())
        if block_min < d:
            d = block_min
            kept = []
        if block_min <= d:
            kept.extend(words[weights == d])
    result = []
    for row in kept:
        vec = [int(v) for v in row]
        lead = next(v for v in vec if v)
        if lead != 1:
            s = ctx.inv(lead)
            vec = [ctx.mul(s, v) for v in vec]
        result.append((frozenset(i for i, v in enumerate(vec) if v), tuple(vec)))
    code._memo["min_weight_codewords"] = result
    return result


def min_weight_supports(code: LinearCode) -> list[frozenset[int]]:
    """Deduplicated supports of all minimum-weight codewords."""
    seen: dict[frozenset[int], None] = {}
    for support, _ in min_weight_codewords(code):
        seen.setdefault(support, None)
    return list(seen)


# -- dual side -----------------------------------------------------------------

def dual(code: LinearCode) -> LinearCode:
    """The dual code, via a null-space basis of the generator."""
    ctx, n, k = code.ctx, code.n, code.k
    if k == 0:
        return LinearCode(MatrixGF(ctx, np.eye(n, dtype=np.int64)))
    reduced = rref(code.generator)
    # Pivots are the leading columns of the nonzero rows of the RREF.
    pivots = []
    for i in range(reduced.rows):
        lead = next((c for c in range(n) if reduced.data[i][c]), None)
        if lead is not None:
            pivots.append(lead)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for i, p in enumerate(pivots):
            vec[p] = int(reduced.data[i][f])  # -x = x in characteristic 2
        basis.append(vec)
    if not basis:
        return LinearCode(MatrixGF(ctx, np.zeros((0, n), dtype=np.int64)))
    return LinearCode(MatrixGF(ctx, basis))


def _canonical_column(ctx: GF2m, col: tuple[int, ...]) -> tuple[int, ...] | None:
    """Column scaled so its first nonzero entry is 1; None for the zero column."""
    for v in col:
        if v:
            s = ctx.inv(v)
            return tuple(ctx.mul(s, x) for x in col)
    return None


def _singular_triples(code: LinearCode) -> list[tuple[int, int, int]]:
    """All i<j<l with rank([c_i c_j c_l]) <= 2, for a k=3 generator.

    Vectorized 3x3 determinant over the whole triple tensor; callers ensure
    columns are pairwise independent first, so singular means exactly rank 2
    with a full-support dependency.
    """
    if "singular_triples" in code._memo:
        return code._memo["singular_triples"]
    ctx = code.ctx
    G = code.generator.data
    u, v, w = G[0], G[1], G[2]
    n = code.n
    # 2x2 minors for every ordered pair (j, l)
    m1 = ctx.mul_vec(v[:, None], w[None, :]) ^ ctx.mul_vec(w[:, None], v[None, :])
    m2 = ctx.mul_vec(u[:, None], w[None, :]) ^ ctx.mul_vec(w[:, None], u[None, :])
    m3 = ctx.mul_vec(u[:, None], v[None, :]) ^ ctx.mul_vec(v[:, None], u[None, :])
    out = []
    for i in range(n - 2):
        det = (
            ctx.mul_vec(np.int64(u[i]), m1[i + 1 :, i + 1 :])
            ^ ctx.mul_vec(np.int64(v[i]), m2[i + 1 :, i + 1 :])
            ^ ctx.mul_vec(np.int64(w[i]), m3[i + 1 :, i + 1 :])
        )
        jj, ll = np.nonzero(np.triu(det == 0, k=1))
        for a, b in zip(jj, ll):
            out.append((i, i + 1 + int(a), i + 1 + int(b)))
    code._memo["singular_triples"] = out
    return out


def dual_distance_exact(code: LinearCode, cap: int = 3) -> int | None:
    """Exact dual minimum distance if it is <= cap (cap at most 3), else None.

    Weight w in the dual corresponds to w generator columns carrying a linear
    dependency with all w coefficients nonzero: a zero column (w=1), a
    proportional pair (w=2), or a singular triple of pairwise independent
    columns (w=3).
    """
    if not 1 <= cap <= 3:
        raise ValueError("cap must be 1, 2 or 3; larger weights are out of scope")
    ctx = code.ctx
    cols = [code.generator.column(j) for j in range(code.n)]
    canon = [_canonical_column(ctx, c) for c in cols]
    if any(c is None for c in canon):
        return 1
    if cap >= 2 and len(set(canon)) < len(canon):
        return 2
    if cap >= 3:
        if code.k == 3:
            if _singular_triples(code):
                return 3
        else:
            for tri in combinations(range(code.n), 3):
                sub = MatrixGF(ctx, [[cols[j][i] for j in tri] for i in range(code.k)])
                if rank(sub) <= 2:
                    return 3
    return None


def _kernel_of_triple(ctx: GF2m, cols: list[tuple[int, ...]]) -> tuple[int, int, int]:
    """Nonzero (a, b, c) with a*c0 + b*c1 + c*c2 = 0 for a rank-2 column triple.

    Uses the adjugate: in characteristic 2 the cofactor signs vanish, and any
    nonzero column of adj(M) spans the kernel of M when rank(M) = 2.
    """
    M = [[cols[j][i] for j in range(3)] for i in range(3)]  # columns -> matrix

    def minor(r: int, c: int) -> int:
        rs = [i for i in range(3) if i != r]
        cs = [j for j in range(3) if j != c]
        return ctx.mul(M[rs[0]][cs[0]], M[rs[1]][cs[1]]) ^ ctx.mul(
            M[rs[0]][cs[1]], M[rs[1]][cs[0]]
        )

    # Column r of adj(M) is (minor(r, 0), minor(r, 1), minor(r, 2)) in
    # characteristic 2, and M @ adj(M) = det(M) I = 0.
    for r in range(3):
        vec = tuple(minor(r, c) for c in range(3))
        if any(vec):
            return vec  # type: ignore[return-value]
    raise ValueError("column triple has rank < 2; no unique dependency")


def min_weight_dual_codewords(
    code: LinearCode,
) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Canonical weight-3 dual codewords as (support, coefficients) pairs.

    Requires k = 3 and dual distance exactly 3.  Each support carries exactly
    one dependency up to scalar; the representative scales the first nonzero
    coefficient to 1, and each entry stands for the q-1 multiples of itself.
    """
    if "min_weight_dual_codewords" in code._memo:
        return code._memo["min_weight_dual_codewords"]
    ctx = code.ctx
    if code.k != 3:
        raise ValueError("column-triple enumeration needs a dimension-3 code")
    dd = dual_distance_exact(code, 3)
    if dd != 3:
        raise ValueError(f"dual distance is {dd if dd else '> 3'}, expected exactly 3")
    out = []
    for tri in _singular_triples(code):
        cols = [code.generator.column(j) for j in tri]
        coeffs = _kernel_of_triple(ctx, cols)
        if not all(coeffs):
            raise AssertionError(
                "partial-support dependency found; columns were not pairwise independent"
            )
        lead = next(v for v in coeffs if v)
        if lead != 1:
            s = ctx.inv(lead)
            coeffs = tuple(ctx.mul(s, v) for v in coeffs)  # type: ignore[assignment]
        out.append((tri, coeffs))
    code._memo["min_weight_dual_codewords"] = out
    return out


# -- MacWilliams ---------------------------------------------------------------

def macwilliams(dist: WeightDistribution, k: int, q: int) -> WeightDistribution:
    """Dual weight distribution via the MacWilliams identity, exactly.

    A_j(dual) = q^-k * sum_i A_i K_j(i) with the Krawtchouk polynomial
    K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(n-i, j-s).  Inputs that do not
    come from a genuine [n, k] code surface as non-integer or negative
    outputs, which raise.
    """
    n = dist.n
    items = dist.nonzero_items()
    if sum(c for _, c in items) != q**k:
        raise ValueError("counts do not sum to q^k; not a valid [n, k] distribution")
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a_i in items:
            kraw = 0
            for s in range(0, min(i, j) + 1):
                term = (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
                kraw += -term if s & 1 else term
            acc += a_i * kraw
        quot, rem = divmod(acc, q**k)
        if rem or quot < 0:
            raise ValueError(f"inconsistent distribution: dual count at weight {j} is {acc}/{q**k}")
        out.append(quot)
    return WeightDistribution(n, tuple(out))


# -- text wire format ------------------------------------------------------------

def matrix_to_text(mat: MatrixGF) -> str:
    """Serialize: first line 'rows cols m modulus_hex', then row-major hex values."""
    head = f"{mat.rows} {mat.cols} {mat.ctx.m} {hex(mat.ctx.modulus)}"
    body = "\n".join(" ".join(format(int(v), "x") for v in row) for row in mat.data)
    return head + "\n" + body + ("\n" if body else "")


def matrix_from_text(text: str) -> MatrixGF:
    """Parse the matrix_to_text format, reconstructing the field context."""
    tokens = text.split()
    if len(tokens) < 4:
        raise ValueError("matrix text too short")
    rows, cols, m = int(tokens[0]), int(tokens[1]), int(tokens[2])
    modulus = int(tokens[3], 16)
    vals = [int(t, 16) for t in tokens[4:]]
    if len(vals) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(vals)}")
    ctx = GF2m(m, modulus)
    data = np.array(vals, dtype=np.int64).reshape(rows, cols)
    return MatrixGF(ctx, data)
