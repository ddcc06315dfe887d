"""Quotient matrices, printed polynomials, and exact difference identities."""

import numpy as np
import pytest

from cdspectra import quotients as q
from cdspectra.families import build_B2, build_H
from cdspectra.graphcore import complement, distance_matrix
from cdspectra.spectra import IntPolynomial, char_poly_exact


def test_quotient_matrix_H22_as_printed():
    expect = [[0, 4, 2, 1], [2, 2, 6, 1], [1, 6, 2, 2], [1, 2, 4, 0]]
    assert q.quotient_matrix("H", (2, 2)).tolist() == expect
    assert q.printed_quotient_matrix("H", (2, 2)).tolist() == expect


def test_quotient_matrix_T_and_Lprime_rows():
    # first row (x_u) values quoted for n = 7
    assert q.quotient_matrix("T", (7,))[0].tolist() == [0, 3, 8, 1]
    assert q.quotient_matrix("Lprime", (7,))[0].tolist() == [0, 2, 1, 1, 6]


def test_derived_equals_printed_matrices_everywhere():
    cases = [("H", (2, 3)), ("H", (4, 4)), ("B2", (4, 3)), ("B2", (6, 2)),
             ("T", (5,)), ("T", (10,)), ("L", (4, 3)), ("L", (6, 5)),
             ("Lprime", (7,)), ("Lprime", (11,))]
    for fam, params in cases:
        pm = q.printed_quotient_matrix(fam, params)
        assert np.array_equal(q.quotient_matrix(fam, params), pm), (fam, params)


def test_equitable_partition_rejects_wrong_classes():
    dc = distance_matrix(complement(build_H(2, 2)))
    with pytest.raises(ValueError):
        q.quotient_from_partition(dc, [[0], [1, 4], [2, 3], [5]])


def test_phi_H_values_and_symmetry():
    assert q.phi_H(2, 2).coeffs == (-20, -68, -53, -4, 1)
    for s, t in [(1, 4), (2, 7), (3, 3)]:
        assert q.phi_H(s, t).coeffs == q.phi_H(t, s).coeffs
    # derived from the actual graph at several grid points
    for s, t in [(1, 1), (2, 4), (5, 3)]:
        assert char_poly_exact(q.quotient_matrix("H", (s, t))).coeffs == q.phi_H(s, t).coeffs


def test_phi_B1_values_and_symmetry():
    assert q.phi_B1(4, 2).coeffs == (-28, -76, -48, -2, 1)
    assert q.phi_B1(5, 3).coeffs == q.phi_B1(3, 5).coeffs
    for p, qq in [(2, 2), (4, 3), (6, 2)]:
        assert char_poly_exact(q.quotient_matrix("B1", (p, qq))).coeffs == q.phi_B1(p, qq).coeffs


def test_psi_T_values():
    assert q.psi_T(7).coeffs == (-12, -50, -38, -3, 1)
    for n in range(5, 12):
        assert q.psi_T(n).coeffs[0] == -12
        assert char_poly_exact(q.quotient_matrix("T", (n,))).coeffs == q.psi_T(n).coeffs


def test_Psi_Lprime_zero_constant_term_is_genuine():
    assert q.Psi_Lprime(7).coeffs == (0, -20, -70, -42, -4, 1)
    for n in (7, 9, 14):
        derived = char_poly_exact(q.quotient_matrix("Lprime", (n,)))
        assert derived.coeffs == q.Psi_Lprime(n).coeffs
        assert derived.coeffs[0] == 0      # the quotient really has eigenvalue 0


def test_Psi2_Ldprime_matches_derived():
    for n in (7, 10, 13):
        derived = char_poly_exact(q.quotient_matrix("Ldprime", (n,)))
        assert derived.coeffs == q.Psi2_Ldprime(n).coeffs


def test_Phi_L_values():
    assert q.Phi_L(4, 4).coeffs == (66, 101, -14, -40, -6, 1)
    for p, qq in [(4, 3), (5, 5), (7, 2)]:
        assert char_poly_exact(q.quotient_matrix("L", (p, qq))).coeffs == q.Phi_L(p, qq).coeffs


def test_identity_H_step_exact_on_grid():
    # phi_{s,t} - phi_{s-1,t+1} = lambda (s-t-1)(5 lambda + 4)
    for s in range(2, 21):
        for t in range(1, 21):
            chk = q.check_identity_H_step(s, t)
            assert chk.matches, (s, t, chk.residual)


def test_identity_B1_T_B2_exact_on_grid():
    for p in range(3, 21):
        for t in range(2, 21):
            assert q.check_identity_B2_vs_B1(p, t).matches
            assert q.check_identity_B1_vs_T(p, t).matches
            assert q.check_identity_B1_step(p, t).matches


def test_identity_Lprime_Ldprime_exact():
    for n in range(7, 41):
        assert q.check_identity_Lprime_vs_Ldprime(n).matches


def test_identity_L_vs_Lprime_only_q2():
    # the printed Lemma 3.11 difference is an identity exactly when q = 2
    for p in range(4, 16):
        for qq in range(2, 16):
            if p + qq < 7:
                continue
            chk = q.check_identity_L_vs_Lprime(p, qq)
            assert chk.matches == (qq == 2), (p, qq)
            if qq != 2:
                assert not chk.derived_minus_printed.is_zero()


def test_identity_L_step_never_matches():
    for p in range(5, 14):
        for qq in range(2, 14):
            chk = q.check_identity_L_step(p, qq)
            assert not chk.matches
            # residual is the honest derived-minus-printed correction
            assert chk.derived_minus_printed.degree >= 0


def test_power_discrepancy_verdict():
    v = q.power_discrepancy_verdict(6, 4)
    assert v["printed_cubic_is_power1"] is True
    assert v["power1_positive_on_operative_range"] is False
    assert v["power2_positive_on_operative_range"] is True
    assert v["power2_positive_at_minus_1e6"] is False   # not positive on all of lambda < -3
    assert v["consistent_power"] == 2
    for p, qq in [(4, 2), (5, 5), (9, 3)]:
        assert q.power_discrepancy_verdict(p, qq)["consistent_power"] == 2


def test_quotient_consistency_reports():
    rep = q.quotient_consistency("H", (2, 2))
    assert rep.poly_matches and rep.matrix_matches
    assert rep.roots_matched and rep.lambda1_is_root and rep.lambda_n_is_root
    assert rep.order == 6
    rep = q.quotient_consistency("B2", (4, 3))
    assert rep.lambda_n_is_root      # least eigenvalue is a quotient root
    assert rep.roots_matched and rep.lambda1_is_root
    rep = q.quotient_consistency("B1", (4, 2))
    assert rep.printed_matrix is None and rep.matrix_matches is None
    assert rep.poly_matches
    summary = rep.summary()
    assert summary["family"] == "B1" and summary["poly_matches_printed"] is True


def test_quotient_consistency_coeff_diff_surfaced():
    # a deliberately perturbed printed polynomial must be reported, not hidden
    rep = q.quotient_consistency("H", (3, 3))
    assert rep.coeff_diff == (0,)
    perturbed = rep.derived_poly - IntPolynomial((1,))
    assert (rep.derived_poly - perturbed).coeffs == (1,)


def test_unsupported_family():
    with pytest.raises(q.UnsupportedFamily):
        q.quotient_matrix("T1", (2, 2))
    with pytest.raises(q.UnsupportedFamily):
        q.printed_poly("path", (5,))
