"""MDS/AMDS/NMDS classification, distribution recurrences, pairing checks.

A code with Singleton defect 0 is MDS; defect 1 is AMDS; AMDS with an AMDS
dual is NMDS.  For an NMDS code the whole weight distribution of either side
follows from one seed count by a recurrence, computed here in exact
big-integer arithmetic (the counts overflow 64-bit well inside the supported
range).  The pairing check confirms that minimum-weight codewords of the code
and its dual come in disjoint-support pairs, unique up to scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from .codes import (
    LinearCode,
    WeightDistribution,
    dual,
    dual_distance_exact,
    min_weight_codewords,
    min_weight_dual_codewords,
    minimum_distance,
)

__all__ = [
    "CodeClass",
    "classify",
    "nmds_dual_distribution_from_Ak",
    "nmds_primal_distribution_from_Ank",
    "PairingReport",
    "check_min_weight_pairing",
]


@dataclass(frozen=True)
class CodeClass:
    """Classification verdict with the witnessing distances and defects."""

    tag: str  # "MDS" | "AMDS-only" | "NMDS" | "other"
    n: int
    k: int
    d: int
    d_dual: int | None
    defect: int
    dual_defect: int | None


def _dual_min_distance(code: LinearCode) -> int | None:
    """d of the dual: column checks for w <= 3, else enumeration if feasible."""
    dd = dual_distance_exact(code, 3)
    if dd is not None:
        return dd
    if code.k == 3 and code.n > 4:
        return 4  # Singleton caps the dual distance of an [n, n-3] code at 4
    q, n, k = code.ctx.q, code.n, code.k
    if q ** (n - k) <= 1 << 22:
        return minimum_distance(dual(code))
    return None


def classify(code: LinearCode) -> CodeClass:
    """Tag per the Singleton defects of the code and its dual."""
    n, k = code.n, code.k
    d = minimum_distance(code)
    defect = n - k + 1 - d
    if defect == 0:
        # MDS; the dual of an MDS code is MDS, no dual computation needed.
        dd = k + 1 if k < n else None
        return CodeClass("MDS", n, k, d, dd, 0, 0 if dd is not None else None)
    dd = _dual_min_distance(code)
    if dd is None:
        raise ValueError("dual minimum distance not computable under the size guards")
    dual_defect = k + 1 - dd  # n' - k' + 1 - d' with n' = n, k' = n - k
    if defect == 1 and dual_defect == 1:
        tag = "NMDS"
    elif defect == 1:
        tag = "AMDS-only"
    else:
        tag = "other"
    return CodeClass(tag, n, k, d, dd, defect, dual_defect)


def nmds_dual_distribution_from_Ak(n: int, k: int, q: int, a_k_dual: int) -> WeightDistribution:
    """Full dual distribution of an [n, k, n-k] NMDS code from the seed A_k(dual).

    The dual is an [n, n-k, k] code: A(dual)_i = 0 for 0 < i < k, the given
    seed at weight k, and for s = 1..n-k

        A(dual)_{k+s} = C(n, k+s) * sum_{j<s} (-1)^j C(k+s, j) (q^{s-j} - 1)
                        + (-1)^s C(n-k, s) * A_k(dual).
    """
    if a_k_dual < 0:
        raise ValueError("seed count must be non-negative")
    counts = [0] * (n + 1)
    counts[0] = 1
    if k <= n:
        counts[k] = a_k_dual
    for s in range(1, n - k + 1):
        acc = 0
        for j in range(s):
            term = comb(k + s, j) * (q ** (s - j) - 1)
            acc += -term if j & 1 else term
        val = comb(n, k + s) * acc
        tail = comb(n - k, s) * a_k_dual
        val += -tail if s & 1 else tail
        if val < 0:
            raise ValueError(f"recurrence produced negative count at weight {k + s}")
        counts[k + s] = val
    return WeightDistribution(n, tuple(counts))


def nmds_primal_distribution_from_Ank(n: int, k: int, q: int, a_nk: int) -> WeightDistribution:
    """Full distribution of an [n, k, n-k] NMDS code from the seed A_{n-k}.

    For s = 1..k:

        A_{n-k+s} = C(n, k-s) * sum_{j<s} (-1)^j C(n-k+s, j) (q^{s-j} - 1)
                    + (-1)^s C(k, s) * A_{n-k}.
    """
    if a_nk < 0:
        raise ValueError("seed count must be non-negative")
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[n - k] = a_nk
    for s in range(1, k + 1):
        acc = 0
        for j in range(s):
            term = comb(n - k + s, j) * (q ** (s - j) - 1)
            acc += -term if j & 1 else term
        val = comb(n, k - s) * acc
        tail = comb(k, s) * a_nk
        val += -tail if s & 1 else tail
        if val < 0:
            raise ValueError(f"recurrence produced negative count at weight {n - k + s}")
        counts[n - k + s] = val
    return WeightDistribution(n, tuple(counts))


@dataclass
class PairingReport:
    """Outcome of the disjoint-support pairing between minimum-weight codewords."""

    d: int
    d_dual: int
    primal_count: int
    dual_count: int
    counts_equal: bool
    pairings: list[tuple[frozenset[int], tuple[int, ...]]] = dc_field(default_factory=list)
    all_paired_uniquely: bool = True

    @property
    def ok(self) -> bool:
        return self.counts_equal and self.all_paired_uniquely


def check_min_weight_pairing(code: LinearCode) -> PairingReport:
    """For an NMDS code with dual distance 3, confirm the pairing structure:
    the two sides have equally many minimum-weight codewords, and each
    canonical minimum-weight codeword has a unique (up to scalar) disjoint-
    support partner of weight 3 in the dual."""
    verdict = classify(code)
    if verdict.tag != "NMDS":
        raise ValueError(f"pairing check requires an NMDS code, got {verdict.tag}")
    q = code.ctx.q
    primal = min_weight_codewords(code)
    duals = min_weight_dual_codewords(code)
    report = PairingReport(
        d=verdict.d,
        d_dual=verdict.d_dual or 0,
        primal_count=(q - 1) * len(primal),
        dual_count=(q - 1) * len(duals),
        counts_equal=(len(primal) == len(duals)),
    )
    for support, _vec in primal:
        partners = [sup for sup, _ in duals if not support & set(sup)]
        if len(partners) != 1:
            report.all_paired_uniquely = False
            continue
        report.pairings.append((support, partners[0]))
    return report
