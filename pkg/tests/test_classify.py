"""Classification tags, the two distribution recurrences, and pairing."""

import numpy as np
import pytest

from nmds.classify import (
    check_min_weight_pairing,
    classify,
    nmds_dual_distribution_from_Ak,
    nmds_primal_distribution_from_Ank,
)
from nmds.codes import (
    LinearCode,
    MatrixGF,
    dual,
    macwilliams,
    min_weight_dual_codewords,
    minimum_distance,
    weight_distribution,
)
from nmds.constructions import build
from nmds.field import GF2m


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def test_classify_c_q8(codes8):
    verdict = classify(codes8["c"])
    assert verdict.tag == "NMDS"
    assert (verdict.d, verdict.d_dual) == (9, 3)
    assert (verdict.defect, verdict.dual_defect) == (1, 1)


def test_classify_full_code_is_mds(ctx8):
    full = LinearCode(MatrixGF(ctx8, np.eye(4, dtype=np.int64)))
    assert classify(full).tag == "MDS"


def test_classify_e_q4_nmds(ctx4):
    verdict = classify(build("e", ctx4))
    assert verdict.tag == "NMDS"
    assert (verdict.n, verdict.k, verdict.d, verdict.d_dual) == (5, 3, 2, 3)


def test_classify_all_constructions_q8_q32(codes8, codes32):
    for bundle in (codes8, codes32):
        for cid, code in bundle.items():
            assert classify(code).tag == "NMDS", cid


def test_classify_other_at_even_m(ctx4):
    assert classify(build("c", ctx4)).tag == "other"


@pytest.mark.parametrize("seed", range(10))
def test_classify_matches_enumeration_oracle(seed):
    # small random codes at q=4: recompute both defects by brute enumeration
    ctx = GF2m(2)
    rng = np.random.default_rng(seed)
    while True:
        rows = rng.integers(0, 4, size=(2, 5))
        try:
            code = LinearCode(MatrixGF(ctx, rows))
            break
        except ValueError:
            continue
    verdict = classify(code)
    d = minimum_distance(code)
    dd = minimum_distance(dual(code))
    defect = code.n - code.k + 1 - d
    dual_defect = code.k + 1 - dd
    expected = (
        "MDS" if defect == 0
        else "NMDS" if defect == 1 and dual_defect == 1
        else "AMDS-only" if defect == 1
        else "other"
    )
    assert verdict.tag == expected
    if defect > 0:
        assert verdict.d_dual == dd


# ---------------------------------------------------------------------------
# recurrences
# ---------------------------------------------------------------------------

def test_dual_recurrence_matches_macwilliams_c(codes8):
    dist = weight_distribution(codes8["c"])
    got = nmds_dual_distribution_from_Ak(12, 3, 8, 70)
    assert got.counts == macwilliams(dist, 3, 8).counts
    assert got.total() == 8**9


def test_dual_recurrence_matches_macwilliams_d(codes8):
    dist = weight_distribution(codes8["d"])
    got = nmds_dual_distribution_from_Ak(11, 3, 8, 56)
    assert got.counts == macwilliams(dist, 3, 8).counts


def test_primal_recurrence_c_q8():
    got = nmds_primal_distribution_from_Ank(12, 3, 8, 70)
    assert [got.counts[i] for i in (9, 10, 11, 12)] == [70, 252, 42, 147]


def test_primal_recurrence_e1bar_q8():
    got = nmds_primal_distribution_from_Ank(10, 3, 8, 49)
    assert [got.counts[i] for i in (8, 9, 10)] == [168, 147, 147]


def test_primal_recurrence_matches_enumeration_e_q4(ctx4):
    # E at q=4 is a [5, 3, 2] code with 6 minimum-weight codewords
    code = build("e", ctx4)
    dist = weight_distribution(code)
    assert dist.min_distance == 2 and dist.counts[2] == 6
    got = nmds_primal_distribution_from_Ank(5, 3, 4, 6)
    assert got.counts == dist.counts


def test_both_recurrences_all_constructions_q8(codes8):
    for cid, code in codes8.items():
        dist = weight_distribution(code)
        d = dist.min_distance
        a3 = (8 - 1) * len(min_weight_dual_codewords(code))
        assert nmds_primal_distribution_from_Ank(code.n, 3, 8, dist.counts[d]).counts == dist.counts, cid
        assert (
            nmds_dual_distribution_from_Ak(code.n, 3, 8, a3).counts
            == macwilliams(dist, 3, 8).counts
        ), cid


def test_recurrence_vacuous_tail():
    got = nmds_dual_distribution_from_Ak(3, 3, 8, 0)
    assert got.counts == (1, 0, 0, 0)


def test_recurrence_rejects_absurd_seed():
    with pytest.raises(ValueError, match="negative"):
        nmds_dual_distribution_from_Ak(12, 3, 8, 10**6)
    with pytest.raises(ValueError, match="negative"):
        nmds_primal_distribution_from_Ank(12, 3, 8, 10**6)
    with pytest.raises(ValueError, match="non-negative"):
        nmds_primal_distribution_from_Ank(12, 3, 8, -1)


def test_recurrence_counts_are_exact_big_ints():
    # the dual side of the longest q=128 code has counts around 10^271;
    # the recurrence must stay exact and sum to q^(n-k) on the nose
    q = 128
    n = q + 4
    got = nmds_dual_distribution_from_Ak(n, 3, q, (q - 1) * (q + 2))
    assert sum(got.counts) == q ** (n - 3)
    assert max(got.counts) > 2**53


# ---------------------------------------------------------------------------
# pairing
# ---------------------------------------------------------------------------

def test_pairing_c_q8(codes8):
    report = check_min_weight_pairing(codes8["c"])
    assert report.ok
    assert report.primal_count == report.dual_count == 70
    assert len(report.pairings) == 70 // 7
    for primal_sup, dual_sup in report.pairings:
        assert not primal_sup & set(dual_sup)


def test_pairing_d_q8(codes8):
    report = check_min_weight_pairing(codes8["d"])
    assert report.ok and report.primal_count == 56


def test_pairing_e_q4(ctx4):
    report = check_min_weight_pairing(build("e", ctx4))
    assert report.ok
    assert report.primal_count == report.dual_count == 6


def test_pairing_rejects_non_nmds(ctx4):
    with pytest.raises(ValueError, match="NMDS"):
        check_min_weight_pairing(build("c", ctx4))
