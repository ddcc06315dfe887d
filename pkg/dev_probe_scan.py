"""Dev probe: vectorized diameter>3 enumeration + extremal scan at n=6,7."""
import time
import numpy as np
from cdspectra.graphcore import g6_pairs, from_edges, to_graph6
from cdspectra.spectra import sym_eigenvalues
from cdspectra.families import *
from cdspectra.graphcore import complement, distance_matrix


def adj_rows(masks, n):
    pairs = g6_pairs(n)
    adj = np.zeros((len(masks), n), dtype=np.uint8)
    for e, (i, j) in enumerate(pairs):
        bit = ((masks >> np.uint32(e)) & np.uint32(1)).astype(np.uint8)
        adj[:, i] |= bit << np.uint8(j)
        adj[:, j] |= bit << np.uint8(i)
    return adj


def expand(balls, adj, n):
    out = balls.copy()
    for w in range(n):
        has = ((balls >> np.uint8(w)) & np.uint8(1)).astype(np.uint8)
        out |= adj[:, w] * has
    return out


def expand_all(balls, adj, n):
    """balls: (m, n), one ball per start vertex; one BFS level via adj."""
    out = balls.copy()
    for v in range(n):
        col = balls[:, v]
        for w in range(n):
            has = ((col >> np.uint8(w)) & np.uint8(1)).astype(np.uint8)
            out[:, v] |= adj[:, w] * has
    return out


def survivors(masks, n):
    adj = adj_rows(masks, n)
    full = np.uint8((1 << n) - 1)
    selfb = np.array([1 << v for v in range(n)], dtype=np.uint8)
    # connectivity from vertex 0
    r = adj[:, 0] | np.uint8(1)
    for _ in range(n - 2):
        r = expand(r, adj, n)
    connected = r == full
    diam_le3 = np.ones(len(masks), dtype=bool)
    for v in range(n):
        b = adj[:, v] | selfb[v]
        b = expand(expand(b, adj, n), adj, n)
        diam_le3 &= b == full
    keep = connected & ~diam_le3
    return masks[keep], adj[keep]


def complement_distance(adj, n):
    m = len(adj)
    full = np.uint8((1 << n) - 1)
    selfb = np.array([1 << v for v in range(n)], dtype=np.uint8)
    b1 = (~(adj | selfb[None, :])) & full
    b2 = expand_all(b1 | selfb[None, :], b1, n)
    b3 = expand_all(b2, b1, n)
    assert np.all(b3 == full), "complement disconnected or diameter > 3"
    D = np.zeros((m, n, n), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            in1 = (b1[:, u] >> np.uint8(v)) & 1
            in2 = (b2[:, u] >> np.uint8(v)) & 1
            D[:, u, v] = np.where(in1 == 1, 1, np.where(in2 == 1, 2, 3))
    return D


def mask_to_graph(mask, n):
    pairs = g6_pairs(n)
    return from_edges(n, [p for e, p in enumerate(pairs) if (mask >> e) & 1])


for n in (5, 6, 7):
    t0 = time.time()
    nbits = n * (n - 1) // 2
    all_masks = np.arange(1 << nbits, dtype=np.uint32)
    t1 = time.time()
    masks, adj = survivors(all_masks, n)
    t2 = time.time()
    D = complement_distance(adj, n)
    # Lemma 2.1 identity check: D == J - I + A
    A = np.zeros((len(adj), n, n), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            if u != v:
                A[:, u, v] = (adj[:, u] >> np.uint8(v)) & 1
    J = 1 - np.eye(n, dtype=np.int64)
    ident = np.all(D == J[None, :, :] + A, axis=(1, 2))
    t3 = time.time()
    w = np.linalg.eigvalsh(D.astype(np.float64))
    l1 = w[:, -1]
    lnv = w[:, 0]
    t4 = time.time()
    print(f"n={n}: total masks {len(all_masks)}, survivors {len(masks)}, "
          f"lemma2.1 holds for all: {bool(ident.all())}")
    print(f"  timings: survivors {t2-t1:.2f}s  dist+ident {t3-t2:.2f}s  eig {t4-t3:.2f}s")
    i_min_l1 = int(np.argmin(l1)); i_max_l1 = int(np.argmax(l1))
    i_min_ln = int(np.argmin(lnv)); i_max_ln = int(np.argmax(lnv))
    print(f"  min l1 = {l1[i_min_l1]:.9f} at {to_graph6(mask_to_graph(int(masks[i_min_l1]), n))}")
    print(f"  max l1 = {l1[i_max_l1]:.9f}")
    print(f"  min ln = {lnv[i_min_ln]:.9f}")
    print(f"  max ln = {lnv[i_max_ln]:.9f} at {to_graph6(mask_to_graph(int(masks[i_max_ln]), n))}")
    if n == 7:
        from cdspectra.graphcore import is_isomorphic
        gmax = mask_to_graph(int(masks[i_max_ln]), n)
        print('  max-ln witness iso to L(4,3):', is_isomorphic(gmax, build_L(4, 3)))
        gmin = mask_to_graph(int(masks[i_min_l1]), n)
        print('  min-l1 witness iso to P7:', is_isomorphic(gmin, build_path(7)))
        ties = np.sum(np.abs(lnv - lnv[i_max_ln]) <= 1e-9)
        print('  max-ln labeled ties within 1e-9:', int(ties))
        print('  min-l1 labeled ties within 1e-9:', int(np.sum(np.abs(l1 - l1[i_min_l1]) <= 1e-9)))
        # q=1 subset analysis needs eigenvectors
        t5 = time.time()
        wv, vv = np.linalg.eigh(D.astype(np.float64))
        x = vv[:, :, 0]
        neg = (x < -1e-9).sum(axis=1)
        pos = (x > 1e-9).sum(axis=1)
        q = np.minimum(neg, pos)
        print(f'  eigh time {time.time()-t5:.2f}s; q value counts:',
              {int(k): int((q == k).sum()) for k in np.unique(q)})
        q1 = q == 1
        i_q1 = int(np.argmax(np.where(q1, lnv, -np.inf)))
        gq1 = mask_to_graph(int(masks[i_q1]), n)
        print(f'  q=1 max ln = {lnv[i_q1]:.9f} at {to_graph6(gq1)}; '
              f'iso to Lprime(7): {is_isomorphic(gq1, build_Lprime(7))}; '
              f'iso to Ldprime(7): {is_isomorphic(gq1, build_Ldprime(7))}')
        print('  ln(Lprime^c(7)) =', sym_eigenvalues(distance_matrix(complement(build_Lprime(7)))).lambda_n)
