"""Dev probe: derive quotient matrices from orbit partitions, compare to paper."""
import numpy as np
from cdspectra.graphcore import complement, distance_matrix
from cdspectra.spectra import IntPolynomial, char_poly_exact, sturm_real_roots, sym_eigenvalues
from cdspectra.families import (
    build_B1, build_B2, build_H, build_L, build_Ldprime, build_Lprime, build_T,
)


def quotient_from_partition(dmat, classes):
    k = len(classes)
    out = [[0] * k for _ in range(k)]
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            sums = {int(sum(dmat[r, c] for c in cj if c != r)) for r in ci}
            assert len(sums) == 1, f"not equitable: classes {i},{j} sums {sums}"
            out[i][j] = sums.pop()
    return np.array(out, dtype=np.int64)


def classes_H(s, t):
    k = s + t
    return [[k], list(range(s)), list(range(s, k)), [k + 1]]

def classes_B1(p, q):
    return [[0], [p], list(range(1, p)), list(range(p + 1, p + q))]

def classes_B2(p, q):
    return [[0], [p], [1], list(range(2, p)), list(range(p + 1, p + q))]

def classes_T(a):           # T(a,1): u=0 has the a pendants, v=1 the single one
    return [[0], [1], list(range(2, a + 2)), [a + 2]]

def classes_L(p, q):
    return [[1], [p], [0], list(range(2, p)), list(range(p + 1, p + q))]

def classes_Lp(n):
    return [[1], [n - 1], [0], [n - 2], list(range(2, n - 2))]

def classes_Ldp(n):
    return [[0], [1], [n - 2], [n - 1], list(range(2, n - 2))]


def printed_H(s, t):
    return np.array([[0, 2*s, t, 1], [2, 2*(s-1), 3*t, 1], [1, 3*s, 2*(t-1), 2], [1, s, 2*t, 0]])

def printed_B2(p, q):
    return np.array([
        [0, 1, 1, p-2, 2*(q-1)],
        [1, 0, 2, 2*(p-2), q-1],
        [1, 2, 0, p-2, q-1],
        [1, 2, 1, p-3, 2*(q-1)],
        [2, 1, 1, 2*(p-2), q-2]])

def printed_T(n):
    return np.array([[0, 3, 2*(n-3), 1], [3, 0, n-3, 2], [2, 1, n-4, 1], [1, 2, n-3, 0]])

def printed_Lp(p):
    return np.array([
        [0, 2, 1, 1, 2*(p-4)],
        [2, 0, 1, 1, p-4],
        [1, 1, 0, 2, 2*(p-4)],
        [1, 1, 2, 0, p-4],
        [2, 1, 2, 1, 2*(p-5)]])

def printed_L(p, q):
    return np.array([
        [0, 2, 1, 2*(p-2), q-1],
        [2, 0, 1, p-2, 2*(q-1)],
        [1, 1, 0, 2*(p-2), q-1],
        [2, 1, 2, 2*(p-3), q-1],
        [1, 2, 1, p-2, 2*(q-2)]])


def phi_H(s, t):
    return IntPolynomial((-4*s - 4*t - 4, -12*s - 12*t - 4*s*t - 4, -9*s - 9*t - 5*s*t + 3,
                          -2*s - 2*t + 4, 1))

def phi_B1(p, q):
    return IntPolynomial((-5*p*q + 2*p + 2*q, -14*p*q + 6*p + 6*q, -8*p*q + 2*p + 2*q + 4,
                          -q + 4 - p, 1))

def varphi_B2(p, q):
    return IntPolynomial((3*p*q - 6*p - 2*q + 4, -(p*q + 10*p - 8), -(8*p*q + 6*p - 4*q - 8),
                          -(3*p*q + 4*p + q - 10), -(q - 5 + p), 1))

def psi_T(n):
    return IntPolynomial((-12, -6*n - 8, 4 - 6*n, -n + 4, 1))

def Psi_Lp(n):
    return IntPolynomial((0, -(-4*n + 48), -10*n, -(-28 + 10*n), -(2*n - 10), 1))

def Psi2_Ldp(n):
    return IntPolynomial((14*n - 70, -(103 - 15*n), -(10 + 8*n), -(-28 + 10*n), -(2*n - 10), 1))

def Phi_L(p, q):
    return IntPolynomial((12*p*q - 10*p - 22*q + 2, -(-30*p*q + 45*p + 63*q - 53),
                          -(-18*p*q + 44*p + 50*q - 74), -(-3*p*q + 16*p + 16*q - 40),
                          -(2*q - 10 + 2*p), 1))


def report(name, g, classes, printed_mat, printed_poly):
    dc = distance_matrix(complement(g))
    qm = quotient_from_partition(dc, classes)
    derived = char_poly_exact(qm)
    mat_match = printed_mat is None or np.array_equal(qm, printed_mat)
    poly_match = printed_poly.coeffs == derived.coeffs
    spec = sym_eigenvalues(dc.astype(float))
    bound = 2 * g.n
    roots = sturm_real_roots(derived, -bound, bound, 1e-12)
    root_ok = all(min(abs(r - v) for v in spec.values) < 1e-9 for r in roots)
    l1_ok = min(abs(spec.lambda1 - r) for r in roots) < 1e-9
    ln_ok = min(abs(spec.lambda_n - r) for r in roots) < 1e-9
    print(f"{name:14s} mat={'OK ' if mat_match else 'DIFF'} poly={'OK ' if poly_match else 'DIFF'}"
          f" roots_in_spectrum={root_ok} l1_in_roots={l1_ok} ln_in_roots={ln_ok}")
    if not mat_match and printed_mat is not None:
        print('  derived mat:\n', qm, '\n  printed mat:\n', printed_mat)
    if not poly_match:
        print('  derived poly:', derived.coeffs, '\n  printed poly:', printed_poly.coeffs)


for (s, t) in [(2, 2), (2, 3), (3, 5), (1, 1)]:
    report(f"H({s},{t})", build_H(s, t), classes_H(s, t), printed_H(s, t), phi_H(s, t))
for (p, q) in [(4, 2), (4, 3), (5, 4), (2, 2)]:
    report(f"B1({p},{q})", build_B1(p, q), classes_B1(p, q), None, phi_B1(p, q))
for (p, q) in [(4, 3), (5, 2), (6, 5)]:
    report(f"B2({p},{q})", build_B2(p, q), classes_B2(p, q), printed_B2(p, q), varphi_B2(p, q))
for n in [5, 7, 10]:
    report(f"T({n-3},1)", build_T(n - 3, 1), classes_T(n - 3), printed_T(n), psi_T(n))
for (p, q) in [(4, 4), (4, 3), (6, 2), (5, 5)]:
    report(f"L({p},{q})", build_L(p, q), classes_L(p, q), printed_L(p, q), Phi_L(p, q))
for n in [7, 9, 12]:
    report(f"L'({n})", build_Lprime(n), classes_Lp(n), printed_Lp(n), Psi_Lp(n))
for n in [7, 9, 12]:
    report(f"L''({n})", build_Ldprime(n), classes_Ldp(n), None, Psi2_Ldp(n))

# spec example values
print()
print('phi_H(2,2) ==', phi_H(2, 2).coeffs, ' spec: (-20,-68,-53,-4,1)')
print('phi_B1(4,2) ==', phi_B1(4, 2).coeffs, ' spec: (-28,-76,-48,-2,1)')
print('psi_T(7) ==', psi_T(7).coeffs, ' spec: (-12,-50,-38,-3,1)')
print('Psi_Lp(7) ==', Psi_Lp(7).coeffs, ' spec: (0,-20,-70,-42,-4,1)')
print('Phi_L(4,4) ==', Phi_L(4, 4).coeffs, ' spec: (66,101,-14,-40,-6,1)')
