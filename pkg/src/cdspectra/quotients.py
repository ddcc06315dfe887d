"""Quotient (divisor) matrices of the family complements and their polynomials.

Each extremal family's complement has an equitable orbit partition; the
small integer matrix of class-wise distance row sums has a characteristic
polynomial dividing interest into four cross-checkable artifacts:

  * the quotient matrix derived from the actual graph (ground truth),
  * the closed-form matrix printed for it, where one exists,
  * the closed-form characteristic polynomial printed for it,
  * the exact char poly of the derived matrix.

`quotient_consistency` compares all four and checks the roots against the
full numeric spectrum.  Printed-formula mismatches are reported, never
silently patched: the derived objects win.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from cdspectra.families import (
    FAMILIES,
    build_B1,
    build_B2,
    build_H,
    build_L,
    build_Ldprime,
    build_Lprime,
    build_T,
)
from cdspectra.graphcore import Graph, complement, distance_matrix
from cdspectra.spectra import (
    IntPolynomial,
    char_poly_exact,
    cauchy_root_bound,
    sturm_real_roots,
    sym_eigenvalues,
)

QUOTIENT_FAMILIES = ("H", "B1", "B2", "T", "L", "Lprime", "Ldprime")


class UnsupportedFamily(ValueError):
    """No quotient model is defined for this family."""


# --- orbit partitions (fixed by the constructors' labeling conventions) -----


def _classes(family_id: str, params: tuple[int, ...]) -> list[list[int]]:
    if family_id == "H":
        s, t = params
        k = s + t
        return [[k], list(range(s)), list(range(s, k)), [k + 1]]
    if family_id == "B1":
        p, q = params
        return [[0], [p], list(range(1, p)), list(range(p + 1, p + q))]
    if family_id == "B2":
        p, q = params
        return [[0], [p], [1], list(range(2, p)), list(range(p + 1, p + q))]
    if family_id == "T":
        (n,) = params
        return [[0], [1], list(range(2, n - 1)), [n - 1]]
    if family_id == "L":
        p, q = params
        return [[1], [p], [0], list(range(2, p)), list(range(p + 1, p + q))]
    if family_id == "Lprime":
        (n,) = params
        return [[1], [n - 1], [0], [n - 2], list(range(2, n - 2))]
    if family_id == "Ldprime":
        (n,) = params
        return [[0], [1], [n - 2], [n - 1], list(range(2, n - 2))]
    raise UnsupportedFamily(f"no quotient partition for family {family_id!r}")


def _build(family_id: str, params: tuple[int, ...]) -> Graph:
    if family_id == "T":
        (n,) = params        # quotient model covers the double star T(n-3, 1)
        return build_T(n - 3, 1)
    return FAMILIES[family_id].build(*params)


def quotient_from_partition(dmat: np.ndarray, classes: list[list[int]]) -> np.ndarray:
    """Class-wise row sums of a distance matrix; raises if not equitable."""
    k = len(classes)
    out = np.zeros((k, k), dtype=np.int64)
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            sums = {int(sum(dmat[r, c] for c in cj if c != r)) for r in ci}
            if len(sums) != 1:
                raise ValueError(f"partition not equitable between classes {i} and {j}: {sums}")
            out[i, j] = sums.pop()
    return out


def quotient_matrix(family_id: str, params) -> np.ndarray:
    """The family's integer divisor matrix, derived from the graph itself.

    For H, B2, T, L and L' this reproduces the printed closed-form matrix
    (checked by `printed_quotient_matrix` consumers); B1 and L'' have no
    printed matrix and are defined by their orbit partitions.
    """
    params = tuple(int(p) for p in params)
    if family_id not in QUOTIENT_FAMILIES:
        raise UnsupportedFamily(f"no quotient model for family {family_id!r}")
    g = _build(family_id, params)
    dc = distance_matrix(complement(g))
    return quotient_from_partition(dc, _classes(family_id, params))


def printed_quotient_matrix(family_id: str, params) -> np.ndarray | None:
    """The divisor matrix exactly as printed, or None where none is printed."""
    params = tuple(int(p) for p in params)
    if family_id == "H":
        s, t = params
        return np.array([
            [0, 2 * s, t, 1],
            [2, 2 * (s - 1), 3 * t, 1],
            [1, 3 * s, 2 * (t - 1), 2],
            [1, s, 2 * t, 0],
        ])
    if family_id == "B2":
        p, q = params
        return np.array([
            [0, 1, 1, p - 2, 2 * (q - 1)],
            [1, 0, 2, 2 * (p - 2), q - 1],
            [1, 2, 0, p - 2, q - 1],
            [1, 2, 1, p - 3, 2 * (q - 1)],
            [2, 1, 1, 2 * (p - 2), q - 2],
        ])
    if family_id == "T":
        (n,) = params
        return np.array([
            [0, 3, 2 * (n - 3), 1],
            [3, 0, n - 3, 2],
            [2, 1, n - 4, 1],
            [1, 2, n - 3, 0],
        ])
    if family_id == "L":
        p, q = params
        return np.array([
            [0, 2, 1, 2 * (p - 2), q - 1],
            [2, 0, 1, p - 2, 2 * (q - 1)],
            [1, 1, 0, 2 * (p - 2), q - 1],
            [2, 1, 2, 2 * (p - 3), q - 1],
            [1, 2, 1, p - 2, 2 * (q - 2)],
        ])
    if family_id == "Lprime":
        # printed with parameter p; matching the derived char poly to the
        # full spectrum fixes p := n
        (n,) = params
        p = n
        return np.array([
            [0, 2, 1, 1, 2 * (p - 4)],
            [2, 0, 1, 1, p - 4],
            [1, 1, 0, 2, 2 * (p - 4)],
            [1, 1, 2, 0, p - 4],
            [2, 1, 2, 1, 2 * (p - 5)],
        ])
    if family_id in ("B1", "Ldprime"):
        return None
    raise UnsupportedFamily(f"no quotient model for family {family_id!r}")


# --- printed characteristic polynomials --------------------------------------


def phi_H(s: int, t: int) -> IntPolynomial:
    """Quartic for the H(s,t) complement quotient, as printed."""
    if s < 1 or t < 1:
        raise ValueError("phi_H needs s, t >= 1")
    return IntPolynomial((
        -4 * s - 4 * t - 4,
        -12 * s - 12 * t - 4 * s * t - 4,
        -9 * s - 9 * t - 5 * s * t + 3,
        -2 * s - 2 * t + 4,
        1,
    ))


def phi_B1(p: int, q: int) -> IntPolynomial:
    """Quartic for the B1(p,q) complement quotient, as printed."""
    if p < 2 or q < 2:
        raise ValueError("phi_B1 needs p, q >= 2")
    return IntPolynomial((
        -5 * p * q + 2 * p + 2 * q,
        -14 * p * q + 6 * p + 6 * q,
        -8 * p * q + 2 * p + 2 * q + 4,
        -q + 4 - p,
        1,
    ))


def varphi_B2(p: int, q: int) -> IntPolynomial:
    """Quintic for the B2(p,q) complement quotient, as printed."""
    if p < 3 or q < 2:
        raise ValueError("varphi_B2 needs p >= 3, q >= 2")
    return IntPolynomial((
        3 * p * q - 6 * p - 2 * q + 4,
        -(p * q + 10 * p - 8),
        -(8 * p * q + 6 * p - 4 * q - 8),
        -(3 * p * q + 4 * p + q - 10),
        -(q - 5 + p),
        1,
    ))


def psi_T(n: int) -> IntPolynomial:
    """Quartic for the T(n-3,1) complement quotient, as printed."""
    if n < 5:
        raise ValueError("psi_T needs n >= 5")
    return IntPolynomial((-12, -6 * n - 8, 4 - 6 * n, -n + 4, 1))


def Psi_Lprime(n: int) -> IntPolynomial:
    """Quintic for the L'(n) complement quotient, as printed (zero constant term)."""
    if n < 7:
        raise ValueError("Psi_Lprime needs n >= 7")
    return IntPolynomial((0, 4 * n - 48, -10 * n, 28 - 10 * n, 10 - 2 * n, 1))


def Psi2_Ldprime(n: int) -> IntPolynomial:
    """Quintic for the L''(n) complement quotient, as printed."""
    if n < 7:
        raise ValueError("Psi2_Ldprime needs n >= 7")
    return IntPolynomial((14 * n - 70, 15 * n - 103, -10 - 8 * n, 28 - 10 * n, 10 - 2 * n, 1))


def Phi_L(p: int, q: int) -> IntPolynomial:
    """Quintic for the L(p,q) complement quotient, as printed."""
    if p < 4 or q < 2:
        raise ValueError("Phi_L needs p >= 4, q >= 2")
    return IntPolynomial((
        12 * p * q - 10 * p - 22 * q + 2,
        30 * p * q - 45 * p - 63 * q + 53,
        18 * p * q - 44 * p - 50 * q + 74,
        3 * p * q - 16 * p - 16 * q + 40,
        10 - 2 * q - 2 * p,
        1,
    ))


def printed_poly(family_id: str, params) -> IntPolynomial:
    params = tuple(int(p) for p in params)
    fn = {
        "H": phi_H, "B1": phi_B1, "B2": varphi_B2, "T": psi_T,
        "L": Phi_L, "Lprime": Psi_Lprime, "Ldprime": Psi2_Ldprime,
    }.get(family_id)
    if fn is None:
        raise UnsupportedFamily(f"no printed polynomial for family {family_id!r}")
    return fn(*params)


# --- the paper's difference identities, checked exactly ----------------------


@dataclass(frozen=True)
class IdentityCheck:
    """Exact comparison of a printed difference identity at one grid point."""

    claim: str
    params: tuple[int, ...]
    matches: bool
    residual: tuple[int, ...]       # derived difference minus printed, ascending

    @property
    def derived_minus_printed(self) -> IntPolynomial:
        return IntPolynomial(self.residual)


def _identity(claim, params, derived: IntPolynomial, printed: IntPolynomial) -> IdentityCheck:
    resid = derived - printed
    return IdentityCheck(claim, tuple(params), resid.is_zero(), resid.coeffs)


def check_identity_H_step(s: int, t: int) -> IdentityCheck:
    """phi_{s,t} - phi_{s-1,t+1} = lambda (s-t-1) (5 lambda + 4)."""
    printed = IntPolynomial((0, 4 * (s - t - 1), 5 * (s - t - 1)))
    return _identity("L2.3-step", (s, t), phi_H(s, t) - phi_H(s - 1, t + 1), printed)


def check_identity_B2_vs_B1(p: int, q: int) -> IdentityCheck:
    """varphi - (lambda+1) phi equals the printed cubic (the paper's first form)."""
    printed = IntPolynomial((
        8 * p * q - 8 * p - 4 * q + 4,
        18 * p * q - 18 * p - 8 * q + 8,
        14 * p * q - 14 * p - 4 * q + 4,
        5 * p * q - 5 * p - 2 * q + 2,
    ))
    derived = varphi_B2(p, q) - IntPolynomial((1, 1)) * phi_B1(p, q)
    return _identity("L3.4-diff", (p, q), derived, printed)


def check_identity_B1_vs_T(p: int, q: int) -> IdentityCheck:
    """phi_{p,q} - psi at n = p+q, as printed in Lemma 3.5."""
    printed = IntPolynomial((
        -5 * p * q + 2 * p + 2 * q + 12,
        -14 * p * q + 12 * p + 12 * q + 8,
        -8 * p * q + 8 * p + 8 * q,
    ))
    return _identity("L3.5-diff", (p, q), phi_B1(p, q) - psi_T(p + q), printed)


def check_identity_B1_step(p: int, q: int) -> IdentityCheck:
    """phi_{p,q} - phi_{p-1,q+1}, as printed in Lemma 3.6."""
    printed = IntPolynomial((
        5 * p - 5 * q - 5,
        14 * p - 14 * q - 14,
        8 * p - 8 * q - 8,
    ))
    return _identity("L3.6-diff", (p, q), phi_B1(p, q) - phi_B1(p - 1, q + 1), printed)


def check_identity_Lprime_vs_Ldprime(n: int) -> IdentityCheck:
    """Psi - Psi', as printed in Lemma 3.9."""
    printed = IntPolynomial((-14 * n + 70, -11 * n + 55, -2 * n + 10))
    return _identity("L3.9-diff", (n,), Psi_Lprime(n) - Psi2_Ldprime(n), printed)


def check_identity_L_vs_Lprime(p: int, q: int) -> IdentityCheck:
    """Phi_{p,q} - Psi at n = p+q, as printed in Lemma 3.11.

    Exact computation shows the printed quadratic only matches at q = 2;
    the residual carries the derived correction.
    """
    printed = IntPolynomial((14 * p - 42, 11 * p - 33, 2 * p - 6))
    return _identity("L3.11-diff", (p, q), Phi_L(p, q) - Psi_Lprime(p + q), printed)


def check_identity_L_step(p: int, q: int) -> IdentityCheck:
    """Phi_{p,q} - Phi_{p-1,q+1}, as printed in Lemma 3.12.

    Exact computation shows the printed cubic never matches Eq. (5); the
    residual carries the derived difference.
    """
    printed = IntPolynomial((
        12 * p * q - 10 * p - 22 * q + 2,
        30 * p * q - 49 * p - 67 * q + 101,
        18 * p * q - 34 * p - 40 * q + 74,
        3 * p * q - 6 * p - 6 * q + 12,
    ))
    return _identity("L3.12-diff", (p, q), Phi_L(p, q) - Phi_L(p - 1, q + 1), printed)


def power_discrepancy_verdict(p: int, q: int, samples: int = 6) -> dict:
    """Measured verdict on the (lambda+1) power inconsistency in Lemma 3.4.

    The same difference is written once as varphi - (lambda+1) phi and once
    as varphi - (lambda+1)^2 phi with a positivity claim for lambda < -3.
    Exact sign sampling decides which power behaves as claimed on the
    operative range [least root of varphi, -3).
    """
    lam1 = IntPolynomial((1, 1))
    d1 = varphi_B2(p, q) - lam1 * phi_B1(p, q)
    d2 = varphi_B2(p, q) - lam1 * lam1 * phi_B1(p, q)
    bound = cauchy_root_bound(varphi_B2(p, q))
    least = sturm_real_roots(varphi_B2(p, q), float(-bound), float(bound), 1e-12)[0]
    pts = []
    for k in range(samples):
        x = Fraction(least + (-3 - least) * k / samples).limit_denominator(10**9)
        if x < -3:
            pts.append(x)
    pow1_pos = all(d1(x) > 0 for x in pts)
    pow2_pos = all(d2(x) > 0 for x in pts)
    deep = Fraction(-10**6)
    return {
        "printed_cubic_is_power1": check_identity_B2_vs_B1(p, q).matches,
        "power1_positive_on_operative_range": pow1_pos,
        "power2_positive_on_operative_range": pow2_pos,
        "power2_positive_at_minus_1e6": bool(d2(deep) > 0),
        "consistent_power": 2 if (pow2_pos and not pow1_pos) else (1 if pow1_pos else 0),
    }


# --- consistency against the full spectrum -----------------------------------


@dataclass
class QuotientReport:
    """quotient_consistency outcome; failures are content, not exceptions."""

    family_id: str
    params: tuple[int, ...]
    order: int
    derived_matrix: np.ndarray
    printed_matrix: np.ndarray | None
    matrix_matches: bool | None
    derived_poly: IntPolynomial
    printed_poly: IntPolynomial
    poly_matches: bool
    coeff_diff: tuple[int, ...]
    quotient_roots: list[float]
    roots_matched: bool
    unmatched_roots: list[float] = field(default_factory=list)
    lambda1_is_root: bool = False
    lambda_n_is_root: bool = False
    lambda1: float = 0.0
    lambda_n: float = 0.0

    def ok(self) -> bool:
        return self.roots_matched and self.lambda1_is_root

    def summary(self) -> dict:
        return {
            "family": self.family_id,
            "params": list(self.params),
            "order": self.order,
            "matrix_matches_printed": self.matrix_matches,
            "poly_matches_printed": self.poly_matches,
            "coeff_diff_derived_minus_printed": list(self.coeff_diff),
            "quotient_roots": self.quotient_roots,
            "roots_in_full_spectrum": self.roots_matched,
            "lambda1_is_quotient_root": self.lambda1_is_root,
            "lambda_n_is_quotient_root": self.lambda_n_is_root,
            "lambda1": self.lambda1,
            "lambda_n": self.lambda_n,
        }


def quotient_consistency(family_id: str, params, tol: float = 1e-9) -> QuotientReport:
    """Compare derived/printed quotient artifacts and the full spectrum."""
    params = tuple(int(p) for p in params)
    g = _build(family_id, params)
    if g.n > 40:
        raise ValueError("quotient_consistency supports orders up to 40")
    qm = quotient_matrix(family_id, params)
    pm = printed_quotient_matrix(family_id, params)
    derived = char_poly_exact(qm)
    printed = printed_poly(family_id, params)
    dc = distance_matrix(complement(g))
    spec = sym_eigenvalues(dc.astype(np.float64))
    # any eigenvalue is bounded by the max row sum <= n * max distance; the
    # complements here have diameter up to 3, so 2n would clip lambda_1
    bound = g.n * int(dc.max())
    roots = sturm_real_roots(derived, -bound, bound, min(tol, 1e-10) / 10)
    unmatched = [r for r in roots if min(abs(r - v) for v in spec.values) > tol]
    return QuotientReport(
        family_id=family_id,
        params=params,
        order=g.n,
        derived_matrix=qm,
        printed_matrix=pm,
        matrix_matches=None if pm is None else bool(np.array_equal(qm, pm)),
        derived_poly=derived,
        printed_poly=printed,
        poly_matches=derived.coeffs == printed.coeffs,
        coeff_diff=(derived - printed).coeffs,
        quotient_roots=roots,
        roots_matched=not unmatched,
        unmatched_roots=unmatched,
        lambda1_is_root=bool(min(abs(spec.lambda1 - r) for r in roots) <= tol),
        lambda_n_is_root=bool(min(abs(spec.lambda_n - r) for r in roots) <= tol),
        lambda1=spec.lambda1,
        lambda_n=spec.lambda_n,
    )
