"""Enumeration engine, extremal scans, sign partitions, claim checkers."""

import numpy as np
import pytest

from cdspectra import verify
from cdspectra.families import (
    build_B1, build_H, build_L, build_Ldprime, build_Lprime, build_path,
)
from cdspectra.graphcore import (
    complement,
    diameter,
    distance_matrix,
    from_edge_mask,
    from_graph6,
    is_connected,
    is_isomorphic,
    relabel,
    to_graph6,
)
from cdspectra.spectra import sym_eigenvalues


def _slow_class_masks(n: int) -> set[int]:
    """Independent oracle: filter every labeled graph with plain BFS code."""
    out = set()
    for mask in range(1 << (n * (n - 1) // 2)):
        g = from_edge_mask(n, mask)
        if is_connected(g) and diameter(g) > 3:
            out.add(mask)
    return out


def test_enumeration_oracle_n5():
    slow = _slow_class_masks(5)
    fast: list[int] = []
    count = verify.enumerate_diam_gt3(5, sink=lambda g: fast.append(g))
    assert count == len(slow) == 60
    got = set()
    for g in fast:
        assert g.n == 5
        assert diameter(g) >= 4
        assert is_connected(complement(g))
        from cdspectra.graphcore import to_edge_mask
        got.add(to_edge_mask(g))
    assert got == slow
    # at n=5 the whole class is the 60 labelings of P5
    assert all(is_isomorphic(g, build_path(5)) for g in fast)


def test_enumeration_oracle_n6_count():
    assert verify.enumerate_diam_gt3(6) == len(_slow_class_masks(6))


def test_enumeration_from_external_source():
    lines = [to_graph6(build_path(9)), to_graph6(build_H(3, 4)),  # H has diameter 3
             to_graph6(build_Lprime(9)), "", to_graph6(build_path(3))]
    seen = []
    count = verify.enumerate_diam_gt3(source=lines, sink=seen.append)
    assert count == 2
    assert all(diameter(g) > 3 for g in seen)
    with pytest.raises(ValueError):
        verify.enumerate_diam_gt3(12)


def test_class_scan_counts_and_lemma21():
    scan = verify.class_scan(6)
    assert scan["count"] == 3240
    assert scan["lemma21_violations"] == []
    scan5 = verify.class_scan(5)
    assert scan5["count"] == 60
    # all survivors at n=5 share one lambda_1 (single isomorphism class)
    assert scan5["objectives"]["min_l1"]["runner_up"] is None
    assert len(scan5["objectives"]["min_l1"]["pairs"]) == 60


def test_scan_extremal_min_l1_is_path():
    for n in (5, 6):
        rep = verify.scan_extremal(n, "min_l1")
        assert len(rep.witnesses) == 1
        assert is_isomorphic(from_graph6(rep.witnesses[0]), build_path(n))
        want = sym_eigenvalues(
            distance_matrix(complement(build_path(n))).astype(float)).lambda1
        assert rep.extremal["min_l1"] == pytest.approx(want, abs=1e-9)
    with pytest.raises(ValueError):
        verify.scan_extremal(6, "max_everything")


def test_scan_values_match_direct_solver_spot():
    # chunk-reduced cluster values equal a direct per-graph eigensolve
    scan = verify.class_scan(6)
    cl = scan["objectives"]["max_ln"]
    g = from_edge_mask(6, cl["pairs"][0][1])
    direct = sym_eigenvalues(distance_matrix(complement(g)).astype(float)).lambda_n
    assert cl["value"] == pytest.approx(direct, abs=1e-10)


def test_relabeling_invariance_spot_check_n6():
    # extremal values over labeled graphs match those over relabeled copies
    rep = verify.scan_extremal(6, "min_l1")
    g = from_graph6(rep.witnesses[0])
    for perm in ([1, 0, 2, 3, 4, 5], [5, 4, 3, 2, 1, 0], [2, 3, 4, 5, 0, 1]):
        h = relabel(g, perm)
        v = sym_eigenvalues(distance_matrix(complement(h)).astype(float)).lambda1
        assert v == pytest.approx(rep.extremal["min_l1"], abs=1e-9)


def test_check_theorem_2_8_and_2_4_n6():
    rep = verify.check_theorem("2.8", 6)
    assert rep.status == "confirmed"
    assert rep.margin is not None and rep.margin > 1e-9
    rep = verify.check_theorem("T2.4", 6)
    assert rep.status == "confirmed"
    assert rep.extremal["bound_l1_Hc"] == pytest.approx(10.0, abs=1e-9)


def test_check_theorem_bad_inputs():
    with pytest.raises(ValueError):
        verify.check_theorem("2.8", 4)
    with pytest.raises(ValueError):
        verify.check_theorem("3.13", 6)
    with pytest.raises(ValueError):
        verify.check_theorem("9.9", 7)


def test_theorem_3_13_refuted_at_7():
    rep = verify.check_theorem("3.13", 7)
    assert rep.status == "refuted"
    assert rep.counterexamples
    w = from_graph6(rep.counterexamples[0])
    # the counterexample is a genuine class member beating the bound
    assert diameter(w) > 3
    direct = sym_eigenvalues(distance_matrix(complement(w)).astype(float)).lambda_n
    bound = sym_eigenvalues(
        distance_matrix(complement(build_L(4, 3))).astype(float)).lambda_n
    assert direct > bound + 1e-6
    assert rep.extremal["max_ln"] == pytest.approx(direct, abs=1e-9)


def test_check_theorem_on_values_stream():
    graphs = []
    verify.enumerate_diam_gt3(6, sink=graphs.append)
    values = {
        "l1": [verify.complement_distance_spectrum(g).lambda1 for g in graphs],
        "ln": [verify.complement_distance_spectrum(g).lambda_n for g in graphs],
    }
    rep = verify.check_theorem_on_values("2.8", 6, graphs, values)
    assert rep.status == "confirmed"
    rep = verify.check_theorem_on_values("2.4", 6, graphs, values)
    assert rep.status == "confirmed"


def test_sign_partition_p7():
    sp = verify.sign_partition(build_path(7))
    assert sp.p + sp.q == 7
    assert sp.p >= sp.q
    assert sp.p >= 4
    assert not sp.degenerate
    assert len(sp.plus) + len(sp.zero) + len(sp.minus) == 7


def test_sign_partition_relabel_invariant():
    g = build_Lprime(8)
    sp = verify.sign_partition(g)
    perm = [3, 1, 0, 2, 5, 4, 7, 6]
    sp2 = verify.sign_partition(relabel(g, perm))
    assert (sp.p, sp.q) == (sp2.p, sp2.q)
    assert sorted(perm[v] for v in sp.minus) == sorted(sp2.minus)


def test_free_trees_counts():
    assert [len(verify.free_trees(k)) for k in range(1, 10)] == [
        1, 1, 1, 2, 3, 6, 11, 23, 47]
    for t in verify.free_trees(7):
        assert t.edge_count() == 6
        assert is_connected(t)


def test_lemma_2_1():
    rep = verify.check_lemma("2.1", n=6)
    assert rep.status == "confirmed"
    assert rep.details["identity_violations"] == 0
    assert rep.details["inequality_violations"] == 0
    assert rep.details["diam3_complement_exceptions"] == 0
    assert rep.details["class_size_diam_gt3"] == 3240


def test_lemma_2_3_monotone_toward_balance():
    rep = verify.check_lemma("2.3", n=10)
    assert rep.status == "confirmed"
    vals = rep.details["l1_by_split"]
    assert vals["4,4"] >= vals["3,5"] >= vals["2,6"] >= vals["1,7"]


def test_lemma_2_5_direction_reversed():
    rep = verify.check_lemma("2.5", n=6)
    assert rep.status == "confirmed-with-reversed-direction"
    assert rep.margin is not None and rep.margin > 0
    assert rep.details["example_pair"] is not None


def test_lemma_2_6_spanning_trees():
    rep = verify.check_lemma("2.6", n=6)
    assert rep.status == "confirmed"
    assert not rep.counterexamples


def test_lemma_2_7_trees():
    rep = verify.check_lemma("2.7")
    assert rep.status == "confirmed"
    assert rep.margin is not None and rep.margin > 1e-9


def test_lemma_3_1_chain():
    rep = verify.check_lemma("3.1")
    assert rep.status == "confirmed"
    assert rep.margin > 1e-9


def test_lemma_3_4_and_3_5_grids():
    rep = verify.check_lemma("3.4", p_max=8)
    assert rep.status == "confirmed"
    assert rep.margin > 1e-9
    assert rep.details["power_verdict"]["consistent_power"] == 2
    rep = verify.check_lemma("3.5", p_max=8)
    assert rep.status == "confirmed"
    assert rep.margin > 1e-9


def test_lemma_3_6_balance():
    rep = verify.check_lemma("3.6", p_max=8)
    assert rep.status == "confirmed"


def test_lemma_3_9_vacuous_q1_and_reversed_subclaim():
    rep = verify.check_lemma("3.9", n=7)
    assert rep.status == "confirmed-with-reversed-direction"
    assert rep.details["q1_count"] == 0
    assert any("vacuous" in note for note in rep.notes)
    table = rep.details["lprime_vs_ldprime"]
    assert all(row["ln_Ldprime"] > row["ln_Lprime"] for row in table)


def test_lemma_3_11_refuted_with_certificate():
    rep = verify.check_lemma("3.11", p_max=12)
    assert rep.status == "refuted"
    assert "(11, 4)" in rep.counterexamples
    assert any("certified exactly" in note for note in rep.notes)
    # identity matches exactly at q=2 only
    assert rep.details["identity_matches"]["5,2"] is True
    assert rep.details["identity_matches"]["5,3"] is False


def test_lemma_3_11_confirmed_on_small_grid():
    rep = verify.check_lemma("3.11", p_max=10)
    assert rep.status == "confirmed"
    assert rep.margin > 1e-9


def test_lemma_3_12_balance():
    rep = verify.check_lemma("3.12", p_max=10)
    assert rep.status == "confirmed"
    assert rep.margin > 1e-9


def test_quotient_consistency_claim():
    rep = verify.check_lemma("quotient-consistency")
    assert rep.status == "confirmed"
    assert rep.params["cases"] == 98
    under = [s for s in rep.details["summaries"] if not s["poly_matches_printed"]]
    assert under == []


def test_run_claim_registry():
    with pytest.raises(ValueError):
        verify.run_claim("nope")
    rep = verify.run_claim("T2.8", n=6)
    assert rep.claim_id == "T2.8"


def test_scan_invalid_n():
    with pytest.raises(ValueError):
        verify.class_scan(9)
