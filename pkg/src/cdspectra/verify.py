"""Exhaustive enumeration of diameter->3 graphs and claim verification.

The enumeration iterates all labeled graphs on n vertices as
upper-triangular edge masks, filtered down to connected graphs of diameter
greater than three with numpy-vectorized bitset BFS over fixed-size mask
chunks.  Chunk boundaries are constants, so per-chunk summaries and their
associative merge give byte-identical results for any worker count.

Every lemma and theorem checker returns a VerificationReport whose status
is measured, never assumed: claims that fail are `refuted` with witnesses,
claims whose true direction opposes the stated one are
`confirmed-with-reversed-direction`.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from cdspectra import quotients
from cdspectra.families import (
    build_B1,
    build_B2,
    build_H,
    build_L,
    build_Ldprime,
    build_Lprime,
    build_T,
    build_T1,
    build_T2,
    build_path,
    build_star,
)
from cdspectra.graphcore import (
    Graph,
    complement,
    diameter,
    distance_matrix,
    from_edge_mask,
    from_edges,
    from_graph6,
    g6_pairs,
    is_connected,
    is_isomorphic,
    to_graph6,
)
from cdspectra.spectra import (
    certify_root_order,
    char_poly_exact,
    sym_eigenvalues,
)

CHUNK_BITS = 20                     # fixed: scan results must not depend on workers
CLUSTER_TOL = 1e-9
STRICT_MARGIN = 1e-9
EXACT_RECHECK_BELOW = 1e-6
ZERO_TOL = 1e-9                     # eigenvector entry treated as zero
DEGENERATE_GAP = 1e-8

CLAIM_IDS = (
    "2.1", "2.3", "2.5", "2.6", "2.7",
    "3.1", "3.4", "3.5", "3.6", "3.9", "3.11", "3.12",
    "T2.4", "T2.8", "T3.7", "T3.13",
    "quotient-consistency",
)


@dataclass
class SignPartition:
    """Vertex classes by sign of the least-eigenvalue eigenvector of D(g^c)."""

    plus: tuple[int, ...]
    zero: tuple[int, ...]
    minus: tuple[int, ...]
    p: int
    q: int
    degenerate: bool


@dataclass
class VerificationReport:
    claim_id: str
    status: str                     # confirmed | refuted | confirmed-with-reversed-direction
    params: dict
    extremal: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    margin: float | None = None
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "status": self.status,
            "params": self.params,
            "extremal": self.extremal,
            "witnesses": self.witnesses,
            "margin": self.margin,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
            "details": self.details,
        }


# --- vectorized mask enumeration ---------------------------------------------


def _adj_rows(masks: np.ndarray, n: int) -> np.ndarray:
    adj = np.zeros((len(masks), n), dtype=np.uint8)
    for e, (i, j) in enumerate(g6_pairs(n)):
        bit = ((masks >> np.uint32(e)) & np.uint32(1)).astype(np.uint8)
        adj[:, i] |= bit << np.uint8(j)
        adj[:, j] |= bit << np.uint8(i)
    return adj


def _expand_one(ball: np.ndarray, adj: np.ndarray, n: int) -> np.ndarray:
    out = ball.copy()
    for w in range(n):
        has = ((ball >> np.uint8(w)) & np.uint8(1)).astype(np.uint8)
        out |= adj[:, w] * has
    return out


def _expand_all(balls: np.ndarray, adj: np.ndarray, n: int) -> np.ndarray:
    out = balls.copy()
    for v in range(n):
        col = balls[:, v]
        for w in range(n):
            has = ((col >> np.uint8(w)) & np.uint8(1)).astype(np.uint8)
            out[:, v] |= adj[:, w] * has
    return out


def _ball_radius(adj: np.ndarray, n: int, radius: int) -> np.ndarray:
    selfbits = np.array([1 << v for v in range(n)], dtype=np.uint8)
    balls = adj | selfbits[None, :]
    for _ in range(radius - 1):
        balls = _expand_all(balls, adj, n)
    return balls


def _connected_mask(adj: np.ndarray, n: int) -> np.ndarray:
    full = np.uint8((1 << n) - 1)
    r = adj[:, 0] | np.uint8(1)
    for _ in range(n - 2):
        r = _expand_one(r, adj, n)
    return r == full


def _complement_rows(adj: np.ndarray, n: int) -> np.ndarray:
    full = np.uint8((1 << n) - 1)
    selfbits = np.array([1 << v for v in range(n)], dtype=np.uint8)
    return (~(adj | selfbits[None, :])) & full


def _distance_from_balls(b1, b2, b3, n: int) -> np.ndarray:
    """Distances 1..3 from nested ball membership; caller checks coverage."""
    m = b1.shape[0]
    d = np.zeros((m, n, n), dtype=np.int8)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            in1 = (b1[:, u] >> np.uint8(v)) & 1
            in2 = (b2[:, u] >> np.uint8(v)) & 1
            d[:, u, v] = np.where(in1 == 1, 1, np.where(in2 == 1, 2, 3)).astype(np.int8)
    return d


def _adjacency_tensor(adj: np.ndarray, n: int) -> np.ndarray:
    amat = np.zeros((len(adj), n, n), dtype=np.int8)
    for u in range(n):
        for v in range(n):
            if u != v:
                amat[:, u, v] = (adj[:, u] >> np.uint8(v)) & 1
    return amat


def _chunk_masks(n: int, index: int) -> np.ndarray:
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    lo = index << CHUNK_BITS
    hi = min(total, (index + 1) << CHUNK_BITS)
    return np.arange(lo, hi, dtype=np.uint32)


def _chunk_count(n: int) -> int:
    nbits = n * (n - 1) // 2
    return ((1 << nbits) + (1 << CHUNK_BITS) - 1) >> CHUNK_BITS


def _survivor_adj(masks: np.ndarray, n: int):
    """Connected, diameter > 3 filter; returns (masks, adjacency rows)."""
    adj = _adj_rows(masks, n)
    full = np.uint8((1 << n) - 1)
    connected = _connected_mask(adj, n)
    diam_le3 = np.all(_ball_radius(adj, n, 3) == full, axis=1)
    keep = connected & ~diam_le3
    return masks[keep], adj[keep]


def _cluster(values: np.ndarray, masks: np.ndarray, mode: str) -> dict | None:
    """Extremal cluster of (value, mask) pairs plus nearest runner-up value."""
    if values.size == 0:
        return None
    if mode == "min":
        v = float(values.min())
        sel = values <= v + CLUSTER_TOL
        rest = values[~sel]
        runner = float(rest.min()) if rest.size else None
    else:
        v = float(values.max())
        sel = values >= v - CLUSTER_TOL
        rest = values[~sel]
        runner = float(rest.max()) if rest.size else None
    pairs = sorted((float(val), int(m)) for val, m in zip(values[sel], masks[sel]))
    return {"value": v, "pairs": pairs, "runner_up": runner}


def _merge_cluster(a: dict | None, b: dict | None, mode: str) -> dict | None:
    if a is None:
        return b
    if b is None:
        return a
    pick = min if mode == "min" else max
    v = pick(a["value"], b["value"])
    pool = a["pairs"] + b["pairs"]
    inside = [(val, m) for val, m in pool if abs(val - v) <= CLUSTER_TOL]
    outside = [val for val, m in pool if abs(val - v) > CLUSTER_TOL]
    runners = [x for x in (a["runner_up"], b["runner_up"]) if x is not None] + outside
    return {
        "value": v,
        "pairs": sorted(inside),
        "runner_up": pick(runners) if runners else None,
    }


def _scan_chunk(n: int, index: int, want_vectors: bool) -> dict:
    masks, adj = _survivor_adj(_chunk_masks(n, index), n)
    out = {"count": len(masks), "lemma21_violations": []}
    if len(masks) == 0:
        out["objectives"] = {k: None for k in ("min_l1", "max_l1", "min_ln", "max_ln")}
        if want_vectors:
            out.update(q_hist={}, degenerate=0, q1_max_ln=None, q1_count=0)
        return out
    full = np.uint8((1 << n) - 1)
    comp = _complement_rows(adj, n)
    selfbits = np.array([1 << v for v in range(n)], dtype=np.uint8)
    cb1 = comp | selfbits[None, :]
    cb2 = _expand_all(cb1, comp, n)
    cb3 = _expand_all(cb2, comp, n)
    if not np.all(cb3 == full):
        bad = ~np.all(cb3 == full, axis=1)
        raise AssertionError(
            f"complement not within diameter 3 for masks {masks[bad][:5].tolist()}")
    d = _distance_from_balls(comp, cb2, cb3, n)
    # Lemma 2.1 identity on the diameter>3 class: D(G^c) == J - I + A(G)
    expected = np.ones((n, n), dtype=np.int8) - np.eye(n, dtype=np.int8)
    amat = _adjacency_tensor(adj, n)
    holds = np.all(d == expected[None, :, :] + amat, axis=(1, 2))
    out["lemma21_violations"] = [int(m) for m in masks[~holds]]

    fd = d.astype(np.float64)
    if want_vectors:
        w, vecs = np.linalg.eigh(fd)
    else:
        w = np.linalg.eigvalsh(fd)
    l1 = w[:, -1]
    ln = w[:, 0]
    out["objectives"] = {
        "min_l1": _cluster(l1, masks, "min"),
        "max_l1": _cluster(l1, masks, "max"),
        "min_ln": _cluster(ln, masks, "min"),
        "max_ln": _cluster(ln, masks, "max"),
    }
    if want_vectors:
        x = vecs[:, :, 0]
        neg = (x < -ZERO_TOL).sum(axis=1)
        pos = (x > ZERO_TOL).sum(axis=1)
        q = np.minimum(neg, pos)
        hist = {int(k): int((q == k).sum()) for k in np.unique(q)}
        out["q_hist"] = hist
        out["degenerate"] = int((w[:, 1] - w[:, 0] < DEGENERATE_GAP).sum())
        q1 = q == 1
        out["q1_count"] = int(q1.sum())
        out["q1_max_ln"] = _cluster(ln[q1], masks[q1], "max")
    return out


def _scan_chunk_task(args) -> dict:
    return _scan_chunk(*args)


_SCAN_CACHE: dict = {}


def class_scan(n: int, workers: int = 1, want_vectors: bool = False) -> dict:
    """Merged scan summary over all connected diameter>3 graphs on n vertices."""
    if not 5 <= n <= 8:
        raise ValueError("exhaustive scans support 5 <= n <= 8")
    key = (n, want_vectors)
    hit = _SCAN_CACHE.get(key)
    if hit is not None:
        return hit
    tasks = [(n, i, want_vectors) for i in range(_chunk_count(n))]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_chunk_task, tasks))
    else:
        chunks = [_scan_chunk(*t) for t in tasks]
    merged = {
        "n": n,
        "count": sum(c["count"] for c in chunks),
        "lemma21_violations": sorted(v for c in chunks for v in c["lemma21_violations"]),
        "objectives": {},
    }
    for name, mode in (("min_l1", "min"), ("max_l1", "max"),
                       ("min_ln", "min"), ("max_ln", "max")):
        acc = None
        for c in chunks:
            acc = _merge_cluster(acc, c["objectives"][name], mode)
        merged["objectives"][name] = acc
    if want_vectors:
        hist: dict[int, int] = {}
        for c in chunks:
            for k, v in c["q_hist"].items():
                hist[k] = hist.get(k, 0) + v
        merged["q_hist"] = dict(sorted(hist.items()))
        merged["degenerate"] = sum(c["degenerate"] for c in chunks)
        merged["q1_count"] = sum(c["q1_count"] for c in chunks)
        acc = None
        for c in chunks:
            acc = _merge_cluster(acc, c["q1_max_ln"], "max")
        merged["q1_max_ln"] = acc
    _SCAN_CACHE[key] = merged
    return merged


def enumerate_diam_gt3(n: int | None = None, sink=None, source=None) -> int:
    """Deliver every connected diameter>3 graph exactly once; return the count.

    Internal exhaustive enumeration runs for 5 <= n <= 8; alternatively an
    iterable of graph6 lines can be ingested (any order <= 64), in which
    case graphs failing the class conditions are skipped.
    """
    count = 0
    if source is not None:
        for line in source:
            line = line.strip()
            if not line:
                continue
            g = from_graph6(line)
            if n is not None and g.n != n:
                continue
            if not is_connected(g) or diameter(g) <= 3:
                continue
            count += 1
            if sink is not None:
                sink(g)
        return count
    if n is None or not 5 <= n <= 8:
        raise ValueError("internal enumeration supports 5 <= n <= 8")
    for i in range(_chunk_count(n)):
        masks, _ = _survivor_adj(_chunk_masks(n, i), n)
        count += len(masks)
        if sink is not None:
            for m in masks:
                sink(from_edge_mask(n, int(m)))
    return count


# --- witness handling ---------------------------------------------------------


def _dedup_isomorphic(graphs: list[Graph]) -> list[Graph]:
    """One representative per isomorphism class, in first-seen order."""
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for g in graphs:
        key = tuple(sorted(g.degree(v) for v in range(g.n)))
        found = False
        for r in buckets.setdefault(key, []):
            if is_isomorphic(g, r):
                found = True
                break
        if not found:
            buckets[key].append(g)
            reps.append(g)
    return reps


def _witness_graphs(cluster: dict, n: int, cap: int = 20000) -> list[Graph]:
    masks = [m for _, m in cluster["pairs"]][:cap]
    return [from_edge_mask(n, m) for m in masks]


def _margin(cluster: dict) -> float | None:
    if cluster["runner_up"] is None:
        return None
    return abs(cluster["runner_up"] - cluster["value"])


def complement_distance_spectrum(g: Graph):
    """Spectrum of D(g^c); raises DisconnectedGraph if the complement is not connected."""
    return sym_eigenvalues(distance_matrix(complement(g)).astype(np.float64))


def _exact_order(ga: Graph, gb: Graph, side: str) -> int:
    pa = char_poly_exact(distance_matrix(complement(ga)))
    pb = char_poly_exact(distance_matrix(complement(gb)))
    return certify_root_order(pa, pb, side)


def sign_partition(g: Graph) -> SignPartition:
    """Partition by sign of the least-eigenvalue unit eigenvector of D(g^c).

    Oriented so that p = |V+ u V0| >= q = |V-|; entries within 1e-9 of zero
    go to V0.  `degenerate` flags a near-degenerate least eigenvalue, where
    the partition is not well defined.
    """
    spec = complement_distance_spectrum(g)
    x = spec.vectors[:, -1]
    neg = [v for v in range(g.n) if x[v] < -ZERO_TOL]
    pos = [v for v in range(g.n) if x[v] > ZERO_TOL]
    zero = [v for v in range(g.n) if abs(x[v]) <= ZERO_TOL]
    if len(neg) > len(pos):
        neg, pos = pos, neg
    degenerate = bool(len(spec.values) > 1
                      and spec.values[-2] - spec.values[-1] < DEGENERATE_GAP)
    return SignPartition(
        plus=tuple(pos), zero=tuple(zero), minus=tuple(neg),
        p=len(pos) + len(zero), q=len(neg), degenerate=degenerate,
    )


# --- extremal scans and theorem checks ----------------------------------------


def scan_extremal(n: int, objective: str, workers: int = 1) -> VerificationReport:
    """Extremal value of lambda_1 or lambda_n of D(G^c) over the class."""
    if objective not in ("min_l1", "max_l1", "min_ln", "max_ln"):
        raise ValueError(f"unknown objective {objective!r}")
    scan = class_scan(n, workers=workers)
    cluster = scan["objectives"][objective]
    witnesses = _dedup_isomorphic(_witness_graphs(cluster, n))
    return VerificationReport(
        claim_id=f"scan:{objective}",
        status="confirmed",
        params={"n": n, "objective": objective},
        extremal={objective: cluster["value"]},
        witnesses=[to_graph6(g) for g in witnesses],
        margin=_margin(cluster),
        details={
            "class_size": scan["count"],
            "labeled_witnesses": len(cluster["pairs"]),
            "runner_up": cluster["runner_up"],
        },
    )


def _balanced_H(n: int):
    s = (n - 2) // 2
    return s, n - 2 - s


def _balanced_pq(n: int):
    return (n + 1) // 2, n // 2


def check_theorem(tid: str, n: int, workers: int = 1) -> VerificationReport:
    """Exhaustive check of one of the four extremal theorems at order n."""
    tid = tid.lstrip("T")
    if tid in ("2.4", "2.8") and n < 5:
        raise ValueError("theorems 2.4/2.8 need n >= 5")
    if tid in ("3.7", "3.13") and n < 7:
        raise ValueError("theorems 3.7/3.13 are stated for n >= 7")

    if tid == "2.4":
        s, t = _balanced_H(n)
        bound_graph = build_H(s, t)
        bound = complement_distance_spectrum(bound_graph).lambda1
        rep = scan_extremal(n, "max_l1", workers)
        margin = bound - rep.extremal["max_l1"]
        status = "confirmed" if margin > STRICT_MARGIN else "refuted"
        return VerificationReport(
            claim_id="T2.4", status=status, params={"n": n},
            extremal={"max_l1": rep.extremal["max_l1"], "bound_l1_Hc": bound},
            witnesses=rep.witnesses, margin=margin,
            notes=[f"bound graph H({s},{t}) has diameter 3: outside the class, strictness expected"],
            details=rep.details,
        )

    if tid == "2.8":
        bound_graph = build_path(n)
        bound = complement_distance_spectrum(bound_graph).lambda1
        rep = scan_extremal(n, "min_l1", workers)
        value = rep.extremal["min_l1"]
        witnesses = [from_graph6(w) for w in rep.witnesses]
        all_paths = all(is_isomorphic(w, bound_graph) for w in witnesses)
        notes = []
        ok = abs(value - bound) <= CLUSTER_TOL and all_paths
        margin = _escalate_margin(rep, n, "min_l1", bound_graph, "max", notes)
        status = "confirmed" if ok and (margin is None or margin > STRICT_MARGIN) else "refuted"
        if not all_paths:
            notes.append("non-path witness attains the minimum")
        return VerificationReport(
            claim_id="T2.8", status=status, params={"n": n},
            extremal={"min_l1": value, "l1_Pnc": bound},
            witnesses=rep.witnesses, margin=margin,
            counterexamples=[] if all_paths else rep.witnesses,
            notes=notes + [f"unique up to isomorphism: {len(witnesses) == 1 and all_paths}"],
            details=rep.details,
        )

    if tid == "3.7":
        p, q = _balanced_pq(n)
        bound_graph = build_B1(p, q)
        bound = complement_distance_spectrum(bound_graph).lambda_n
        rep = scan_extremal(n, "min_ln", workers)
        margin = rep.extremal["min_ln"] - bound
        status = "confirmed" if margin > STRICT_MARGIN else "refuted"
        return VerificationReport(
            claim_id="T3.7", status=status, params={"n": n},
            extremal={"min_ln": rep.extremal["min_ln"], "bound_ln_B1c": bound},
            witnesses=rep.witnesses, margin=margin,
            notes=[f"bound graph B1({p},{q}) has diameter 3: outside the class, strictness expected"],
            details=rep.details,
        )

    if tid == "3.13":
        p, q = _balanced_pq(n)
        bound_graph = build_L(p, q)
        bound = complement_distance_spectrum(bound_graph).lambda_n
        rep = scan_extremal(n, "max_ln", workers)
        value = rep.extremal["max_ln"]
        witnesses = [from_graph6(w) for w in rep.witnesses]
        overshoot = value - bound
        if overshoot > CLUSTER_TOL:
            # class maximum strictly exceeds the claimed bound: counterexample
            exact = _exact_order(witnesses[0], bound_graph, "min")
            return VerificationReport(
                claim_id="T3.13", status="refuted", params={"n": n},
                extremal={"max_ln": value, "ln_Lc_balanced": bound},
                witnesses=rep.witnesses, margin=overshoot,
                counterexamples=rep.witnesses,
                notes=[
                    f"max lambda_n over the class exceeds lambda_n(L^c({p},{q})) by {overshoot:.6g}",
                    f"exact char-poly comparison confirms witness root > bound root: {exact == 1}",
                ],
                details=rep.details,
            )
        attained = [w for w in witnesses if is_isomorphic(w, bound_graph)]
        unique = len(witnesses) == 1 and bool(attained)
        status = "confirmed" if abs(overshoot) <= CLUSTER_TOL and attained else "refuted"
        return VerificationReport(
            claim_id="T3.13", status=status, params={"n": n},
            extremal={"max_ln": value, "ln_Lc_balanced": bound},
            witnesses=rep.witnesses, margin=abs(overshoot),
            notes=[f"unique up to isomorphism: {unique}"],
            details=rep.details,
        )

    raise ValueError(f"unknown theorem id {tid!r}")


def _masks_with_value_near(n: int, objective: str, value: float,
                           window: float = 1e-11) -> list[int]:
    """Rescan for survivor masks whose objective value is within window of value."""
    col = -1 if objective.endswith("l1") else 0
    found: list[int] = []
    for i in range(_chunk_count(n)):
        masks, adj = _survivor_adj(_chunk_masks(n, i), n)
        if len(masks) == 0:
            continue
        comp = _complement_rows(adj, n)
        selfbits = np.array([1 << v for v in range(n)], dtype=np.uint8)
        cb2 = _expand_all(comp | selfbits[None, :], comp, n)
        cb3 = _expand_all(cb2, comp, n)
        d = _distance_from_balls(comp, cb2, cb3, n)
        w = np.linalg.eigvalsh(d.astype(np.float64))[:, col]
        found.extend(int(m) for m in masks[np.abs(w - value) <= window])
    return sorted(found)


def _escalate_margin(rep: VerificationReport, n: int, objective: str,
                     bound_graph: Graph, side: str, notes: list) -> float | None:
    """Runner-up margin; tiny margins are re-decided by exact root comparison."""
    margin = rep.margin
    if margin is None or margin > EXACT_RECHECK_BELOW:
        return margin
    runner_val = rep.details.get("runner_up")
    orders = {
        _exact_order(from_edge_mask(n, m), bound_graph, side)
        for m in _masks_with_value_near(n, objective, runner_val)
    }
    notes.append(
        f"margin {margin:.3e} <= {EXACT_RECHECK_BELOW:.0e}: exact char-poly "
        f"re-check of runner-up graphs vs bound gives orders {sorted(orders)}")
    return margin


# --- lemma checks --------------------------------------------------------------


def _lemma_2_1(n: int, workers: int = 1) -> VerificationReport:
    """Distance/complement identity (diam>3) and inequality (diam=3)."""
    scan = class_scan(n, workers=workers)
    ident_bad = scan["lemma21_violations"]
    ineq = _lemma21_diam3_scan(n)
    status = "confirmed" if not ident_bad and not ineq["violations"] else "refuted"
    return VerificationReport(
        claim_id="2.1", status=status, params={"n": n},
        counterexamples=[to_graph6(from_edge_mask(n, m)) for m in ident_bad]
        + [to_graph6(from_edge_mask(n, m)) for m in ineq["violations"]],
        notes=[
            f"diam>3: identity D(G^c) = J - I + A(G) checked on {scan['count']} graphs",
            f"diam=3: entrywise >= checked on {ineq['count']} graphs "
            f"({ineq['complement_not_small']} with complement outside diameter<=3)",
        ],
        details={
            "class_size_diam_gt3": scan["count"],
            "identity_violations": len(ident_bad),
            "diam3_count": ineq["count"],
            "inequality_violations": len(ineq["violations"]),
            "diam3_complement_exceptions": ineq["complement_not_small"],
        },
    )


def _lemma21_diam3_scan(n: int) -> dict:
    """Entrywise D(G^c) >= J - I + A(G) over all diameter-exactly-3 graphs."""
    count = 0
    not_small = 0
    violations: list[int] = []
    full = np.uint8((1 << n) - 1)
    for i in range(_chunk_count(n)):
        masks = _chunk_masks(n, i)
        adj = _adj_rows(masks, n)
        connected = _connected_mask(adj, n)
        b3 = _ball_radius(adj, n, 3)
        b2 = _ball_radius(adj, n, 2)
        diam3 = connected & np.all(b3 == full, axis=1) & ~np.all(b2 == full, axis=1)
        masks, adj = masks[diam3], adj[diam3]
        if len(masks) == 0:
            continue
        comp = _complement_rows(adj, n)
        selfbits = np.array([1 << v for v in range(n)], dtype=np.uint8)
        cb1 = comp | selfbits[None, :]
        cb2 = _expand_all(cb1, comp, n)
        cb3 = _expand_all(cb2, comp, n)
        covered = np.all(cb3 == full, axis=1)
        not_small += int((~covered).sum())
        masks, adj = masks[covered], adj[covered]
        comp, cb2, cb3 = comp[covered], cb2[covered], cb3[covered]
        count += len(masks)
        d = _distance_from_balls(comp, cb2, cb3, n)
        amat = _adjacency_tensor(adj, n)
        expected = np.ones((n, n), dtype=np.int8) - np.eye(n, dtype=np.int8)
        ok = np.all(d >= expected[None, :, :] + amat, axis=(1, 2))
        violations.extend(int(m) for m in masks[~ok])
    return {"count": count, "violations": violations, "complement_not_small": not_small}


def _lemma_2_3(n: int) -> VerificationReport:
    """Ordering of lambda_1(H^c(s,t)) as (s,t) moves toward balance."""
    values = {}
    for s in range(1, n - 2):
        t = n - 2 - s
        values[(s, t)] = complement_distance_spectrum(build_H(s, t)).lambda1
    sb, tb = _balanced_H(n)
    vmax = values[(sb, tb)]
    step_ok = True
    min_step = None
    for (s, t), v in values.items():
        if 2 <= s <= t:
            gap = v - values[(s - 1, t + 1)]
            step_ok &= gap > STRICT_MARGIN
            min_step = gap if min_step is None else min(min_step, gap)
    bal_ok = all(v <= vmax + CLUSTER_TOL for v in values.values())
    ident = all(
        quotients.check_identity_H_step(s, t).matches
        for s in range(2, 21) for t in range(1, 21)
    )
    status = "confirmed" if step_ok and bal_ok and ident else "refuted"
    return VerificationReport(
        claim_id="2.3", status=status, params={"n": n},
        extremal={"l1_balanced": vmax},
        margin=min_step,
        notes=[
            "measured: lambda_1(H^c(s,t)) strictly increases as (s,t) approaches balance"
            f" (min step {min_step:.6g}); consistent with the balanced maximum",
            f"difference identity lambda(s-t-1)(5 lambda+4) exact on 2<=s<=20, 1<=t<=20: {ident}",
        ],
        details={"l1_by_split": {f"{s},{t}": v for (s, t), v in sorted(values.items())}},
    )


def _lemma_2_5(n: int) -> VerificationReport:
    """Measured direction of lambda_1(G^c) under edge deletion keeping diam>3."""
    pair_masks: list[tuple[int, int]] = []    # (graph mask, graph-minus-edge mask)
    for i in range(_chunk_count(n)):
        masks, _ = _survivor_adj(_chunk_masks(n, i), n)
        for m in masks:
            m = int(m)
            g = from_edge_mask(n, m)
            for e, (a, b) in enumerate(g6_pairs(n)):
                if not (m >> e) & 1:
                    continue
                m2 = m & ~(1 << e)
                g2 = from_edge_mask(n, m2)
                if is_connected(g2) and diameter(g2) > 3:
                    pair_masks.append((m, m2))
    uniq = sorted({m for pair in pair_masks for m in pair})
    dmats = np.stack([
        distance_matrix(complement(from_edge_mask(n, m))).astype(np.float64)
        for m in uniq])
    l1 = dict(zip(uniq, np.linalg.eigvalsh(dmats)[:, -1]))
    stated_holds = reversed_holds = ties = 0
    worst = None
    example = None
    for m, m2 in pair_masks:
        v, v2 = l1[m], l1[m2]
        if abs(v - v2) <= CLUSTER_TOL:
            ties += 1
        elif v > v2:
            reversed_holds += 1
            gap = v - v2
            if worst is None or gap < worst:
                worst = gap
                example = (to_graph6(from_edge_mask(n, m)), to_graph6(from_edge_mask(n, m2)))
        else:
            stated_holds += 1
    status = ("confirmed-with-reversed-direction"
              if stated_holds == 0 and ties == 0 and reversed_holds else "refuted")
    return VerificationReport(
        claim_id="2.5", status=status, params={"n": n},
        margin=worst,
        notes=[
            f"measured on {len(pair_masks)} (G, G-e) pairs with d(G-e)>3: "
            f"lambda_1(G^c) > lambda_1((G-e)^c) in {reversed_holds}, "
            f"ties {ties}, stated direction {stated_holds}",
            "the statement's <= opposes its own proof; deleting an edge strictly decreases lambda_1(G^c)",
        ],
        details={"example_pair": example},
    )


def _lemma_2_6(n: int, samples: int = 200, trees_per_graph: int = 3) -> VerificationReport:
    """lambda_1(G^c) >= lambda_1(T^c) over seeded random spanning trees."""
    rng = random.Random(20240 + n)
    all_masks: list[int] = []
    for i in range(_chunk_count(n)):
        masks, _ = _survivor_adj(_chunk_masks(n, i), n)
        all_masks.extend(int(m) for m in masks)
    stride = max(1, len(all_masks) // samples)
    worst = None
    checked = 0
    bad: list[str] = []
    for m in all_masks[::stride]:
        g = from_edge_mask(n, m)
        v = complement_distance_spectrum(g).lambda1
        edges = g.edges()
        for _ in range(trees_per_graph):
            shuffled = edges[:]
            rng.shuffle(shuffled)
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            tree_edges = []
            for a, b in shuffled:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    tree_edges.append((a, b))
            t = from_edges(n, tree_edges)
            vt = complement_distance_spectrum(t).lambda1
            checked += 1
            gap = v - vt
            is_tree = g.edge_count() == n - 1
            if gap < -CLUSTER_TOL:
                bad.append(to_graph6(g))
            elif abs(gap) <= CLUSTER_TOL and not is_tree:
                bad.append(to_graph6(g))
            elif gap > 0 and (worst is None or gap < worst) and not is_tree:
                worst = gap
    status = "confirmed" if not bad else "refuted"
    return VerificationReport(
        claim_id="2.6", status=status, params={"n": n, "samples": checked},
        margin=worst, counterexamples=sorted(set(bad)),
        notes=[f"{checked} (graph, spanning tree) pairs; equality only when G is its own tree"],
    )


# --- tree enumeration (for Lemma 2.7) -----------------------------------------


def _ahu_key(g: Graph) -> str:
    """Canonical string for a tree: AHU encoding rooted at the center(s)."""
    degs = [g.degree(v) for v in range(g.n)]
    if g.n == 1:
        return "()"
    # peel leaves to find the center
    level = {v: 0 for v in range(g.n) if degs[v] <= 1}
    deg = degs[:]
    frontier = sorted(level)
    remaining = g.n
    while remaining > 2:
        nxt = []
        remaining -= len(frontier)
        for v in frontier:
            for u in range(g.n):
                if g.has_edge(u, v) and u not in level:
                    deg[u] -= 1
                    if deg[u] == 1:
                        level[u] = level[v] + 1
                        nxt.append(u)
        frontier = sorted(set(nxt))
    centers = [v for v in range(g.n) if v not in level] or frontier

    def code(v: int, parent: int) -> str:
        parts = sorted(code(u, v) for u in range(g.n) if g.has_edge(u, v) and u != parent)
        return "(" + "".join(parts) + ")"

    return min(code(c, -1) for c in centers)


def free_trees(n: int) -> list[Graph]:
    """All unlabeled trees on n vertices, one labeled representative each."""
    trees = {"()": Graph(1, (0,))}
    for _ in range(n - 1):
        grown: dict[str, Graph] = {}
        for t in trees.values():
            for v in range(t.n):
                g2 = Graph(t.n + 1, tuple(
                    (t.adj[u] | (1 << t.n)) if u == v else t.adj[u]
                    for u in range(t.n)) + ((1 << v),))
                grown.setdefault(_ahu_key(g2), g2)
        trees = grown
    return [trees[k] for k in sorted(trees)]


def _lemma_2_7(n_max: int = 9) -> VerificationReport:
    """lambda_1(T^c) >= lambda_1(P_n^c) over all non-star trees, 4 <= n <= n_max."""
    bad: list[str] = []
    worst = None
    total = 0
    for n in range(4, n_max + 1):
        pn = build_path(n)
        star = build_star(n)
        base = complement_distance_spectrum(pn).lambda1
        for t in free_trees(n):
            if is_isomorphic(t, star):
                continue
            total += 1
            v = complement_distance_spectrum(t).lambda1
            gap = v - base
            if gap < -CLUSTER_TOL:
                bad.append(to_graph6(t))
            elif abs(gap) <= CLUSTER_TOL:
                if not is_isomorphic(t, pn):
                    bad.append(to_graph6(t))
            elif worst is None or gap < worst:
                worst = gap
    status = "confirmed" if not bad else "refuted"
    return VerificationReport(
        claim_id="2.7", status=status, params={"n_max": n_max},
        margin=worst, counterexamples=bad,
        notes=[f"{total} non-star trees checked; equality exactly at P_n"],
    )


def _grid_reports(pairs, fn) -> tuple[list[dict], float | None, list[dict]]:
    rows = []
    worst = None
    bad = []
    for pq in pairs:
        row = fn(*pq)
        rows.append(row)
        m = row["margin"]
        if m is not None and (worst is None or m < worst):
            worst = m
        if not row["ok"]:
            bad.append(row)
    return rows, worst, bad


def _lemma_3_1(a_max: int = 9, b_max: int = 9) -> VerificationReport:
    """Chain lambda_n(T1^c) >= lambda_n(T2^c) > lambda_n(T^c(a+1,b))."""
    def point(a, b):
        t1 = complement_distance_spectrum(build_T1(a, b)).lambda_n
        t2 = complement_distance_spectrum(build_T2(a, b)).lambda_n
        t0 = complement_distance_spectrum(build_T(a + 1, b)).lambda_n
        iso = is_isomorphic(build_T1(a, b), build_T2(a, b)) if a + b + 3 <= 10 else None
        tie = abs(t1 - t2) <= CLUSTER_TOL
        ok = (t1 - t2 > -CLUSTER_TOL) and (t2 - t0 > STRICT_MARGIN) and (
            not tie or iso is not False)
        return {"params": (a, b), "lns": (t1, t2, t0), "tie": tie, "iso": iso,
                "margin": min(t1 - t2 if not tie else t2 - t0, t2 - t0), "ok": ok}

    pairs = [(a, b) for a in range(1, a_max + 1) for b in range(1, b_max + 1)
             if a + b + 3 <= 24]
    rows, worst, bad = _grid_reports(pairs, point)
    ties = [r["params"] for r in rows if r["tie"]]
    return VerificationReport(
        claim_id="3.1", status="confirmed" if not bad else "refuted",
        params={"a_max": a_max, "b_max": b_max, "points": len(rows)},
        margin=worst,
        counterexamples=[str(r["params"]) for r in bad],
        notes=[f"equality T1=T2 at {ties}; these parameter pairs give isomorphic trees"],
    )


def _lemma_3_4(p_max: int = 12) -> VerificationReport:
    """lambda_n(B1^c) < lambda_n(B2^c) < -3, plus the (lambda+1)-power verdict."""
    def point(p, q):
        b1 = complement_distance_spectrum(build_B1(p, q)).lambda_n
        b2 = complement_distance_spectrum(build_B2(p, q)).lambda_n
        m = min(b2 - b1, -3.0 - b2)
        return {"params": (p, q), "margin": m, "ok": m > STRICT_MARGIN,
                "lns": (b1, b2)}

    pairs = [(p, q) for p in range(4, p_max + 1) for q in range(2, p + 1)]
    rows, worst, bad = _grid_reports(pairs, point)
    ident = all(quotients.check_identity_B2_vs_B1(p, q).matches for p, q in pairs)
    power = quotients.power_discrepancy_verdict(6, 4)
    status = "confirmed" if not bad and ident else "refuted"
    return VerificationReport(
        claim_id="3.4", status=status,
        params={"grid": f"4<=p<={p_max}, 2<=q<=p", "points": len(rows)},
        margin=worst, counterexamples=[str(r["params"]) for r in bad],
        notes=[
            f"printed cubic equals varphi - (lambda+1)^1 phi exactly: {ident}",
            f"power verdict at (6,4): consistent power = {power['consistent_power']} "
            "(the (lambda+1)^2 form is positive on [lambda_n(B2^c), -3), "
            "the printed ^1 form is negative there)",
        ],
        details={"power_verdict": power},
    )


def _lemma_3_5(p_max: int = 12) -> VerificationReport:
    """lambda_n(B1^c(p,q)) < lambda_n(T^c(n-3,1)) < -3 at n = p+q."""
    def point(p, q):
        b1 = complement_distance_spectrum(build_B1(p, q)).lambda_n
        t = complement_distance_spectrum(build_T(p + q - 3, 1)).lambda_n
        m = min(t - b1, -3.0 - t)
        return {"params": (p, q), "margin": m, "ok": m > STRICT_MARGIN}

    pairs = [(p, q) for p in range(4, p_max + 1) for q in range(2, p + 1)]
    rows, worst, bad = _grid_reports(pairs, point)
    ident = all(quotients.check_identity_B1_vs_T(p, q).matches for p, q in pairs)
    return VerificationReport(
        claim_id="3.5", status="confirmed" if not bad and ident else "refuted",
        params={"grid": f"4<=p<={p_max}, 2<=q<=p", "points": len(rows)},
        margin=worst, counterexamples=[str(r["params"]) for r in bad],
        notes=[f"difference identity phi - psi exact on the grid: {ident}"],
    )


def _lemma_3_6(p_max: int = 12) -> VerificationReport:
    """Balance minimizes lambda_n(B1^c); equality only at the balanced split."""
    def point(p, q):
        n = p + q
        pb, qb = _balanced_pq(n)
        v = complement_distance_spectrum(build_B1(p, q)).lambda_n
        vb = complement_distance_spectrum(build_B1(pb, qb)).lambda_n
        balanced = (p, q) == (pb, qb)
        m = v - vb
        ok = m > STRICT_MARGIN or (balanced and abs(m) <= CLUSTER_TOL)
        return {"params": (p, q), "margin": None if balanced else m, "ok": ok}

    pairs = [(p, q) for p in range(4, p_max + 1) for q in range(2, p + 1)]
    rows, worst, bad = _grid_reports(pairs, point)
    ident = all(quotients.check_identity_B1_step(p, q).matches
                for p, q in pairs if p >= 3)
    return VerificationReport(
        claim_id="3.6", status="confirmed" if not bad and ident else "refuted",
        params={"grid": f"4<=p<={p_max}, 2<=q<=p", "points": len(rows)},
        margin=worst, counterexamples=[str(r["params"]) for r in bad],
        notes=[f"step identity exact on the grid: {ident}"],
    )


def _lemma_3_9(n: int, n_max: int = 20, workers: int = 1) -> VerificationReport:
    """q=1 bound by lambda_n(L'^c) plus the L'' vs L' comparison.

    The L''-vs-L' sub-claim is measured; exact computation shows it holds
    in the direction opposite to the printed one at every order.
    """
    scan = class_scan(n, workers=workers, want_vectors=True)
    bound = complement_distance_spectrum(build_Lprime(n)).lambda_n
    notes = [f"q histogram at n={n}: {scan['q_hist']}"]
    counterexamples: list[str] = []
    q1_ok = True
    if scan["q1_count"] == 0:
        notes.append(f"no diameter>3 graph on {n} vertices has q = 1: "
                     "the q=1 claim is vacuous at this order")
        q1_margin = None
    else:
        cluster = scan["q1_max_ln"]
        q1_margin = bound - cluster["value"]
        q1_ok = q1_margin >= -CLUSTER_TOL
        if not q1_ok:
            counterexamples = [to_graph6(g) for g in
                               _dedup_isomorphic(_witness_graphs(cluster, n))]
        notes.append(f"max lambda_n over q=1 members: {cluster['value']:.12g} "
                     f"vs lambda_n(L'^c) {bound:.12g}")
    sub = []
    sub_margin = None
    for m in range(7, n_max + 1):
        lp = complement_distance_spectrum(build_Lprime(m)).lambda_n
        lpp = complement_distance_spectrum(build_Ldprime(m)).lambda_n
        gap = lpp - lp     # printed claim: <= 0
        sub.append({"n": m, "ln_Lprime": lp, "ln_Ldprime": lpp})
        sub_margin = gap if sub_margin is None else min(sub_margin, gap)
    reversed_sub = sub_margin is not None and sub_margin > STRICT_MARGIN
    ident = all(quotients.check_identity_Lprime_vs_Ldprime(m).matches
                for m in range(7, n_max + 1))
    if reversed_sub:
        notes.append(
            "measured: lambda_n(L''^c) > lambda_n(L'^c) at every order "
            f"7..{n_max} (min gap {sub_margin:.6g}); the printed direction is reversed")
    notes.append(f"Psi - Psi' printed identity exact: {ident}")
    status = ("refuted" if not q1_ok
              else "confirmed-with-reversed-direction" if reversed_sub
              else "confirmed")
    return VerificationReport(
        claim_id="3.9", status=status, params={"n": n, "sub_claim_n_max": n_max},
        extremal={"ln_Lprime_c": bound},
        margin=q1_margin if q1_margin is not None else sub_margin,
        counterexamples=counterexamples,
        notes=notes,
        details={"q1_count": scan["q1_count"], "lprime_vs_ldprime": sub},
    )


def _lemma_3_11(p_max: int = 12) -> VerificationReport:
    """lambda_n(L'^c(n)) < lambda_n(L^c(p,q)) at n = p+q >= 7."""
    def point(p, q):
        l = complement_distance_spectrum(build_L(p, q)).lambda_n
        lp = complement_distance_spectrum(build_Lprime(p + q)).lambda_n
        m = l - lp
        return {"params": (p, q), "margin": m, "ok": m > STRICT_MARGIN}

    pairs = [(p, q) for p in range(4, p_max + 1) for q in range(2, p + 1) if p + q >= 7]
    rows, worst, bad = _grid_reports(pairs, point)
    ident_pts = {pq: quotients.check_identity_L_vs_Lprime(*pq).matches for pq in pairs}
    only_q2 = all(v == (pq[1] == 2) for pq, v in ident_pts.items())
    notes = [
        "printed Phi - Psi identity matches exactly iff q = 2 "
        f"(verified across the grid: {only_q2}); derived difference kept as ground truth",
    ]
    if bad:
        p0, q0 = bad[0]["params"]
        exact = certify_root_order(
            quotients.Phi_L(p0, q0), quotients.Psi_Lprime(p0 + q0), "min")
        notes.append(
            f"counterexample certified exactly at ({p0},{q0}): least root of "
            f"Phi is {'below' if exact == -1 else 'not below'} the least root of Psi, "
            "so lambda_n(L^c) < lambda_n(L'^c) there and the stated inequality fails")
    return VerificationReport(
        claim_id="3.11", status="confirmed" if not bad else "refuted",
        params={"grid": f"4<=p<={p_max}, 2<=q<=p, p+q>=7", "points": len(rows)},
        margin=worst, counterexamples=[str(r["params"]) for r in bad],
        notes=notes,
        details={"identity_matches": {f"{p},{q}": v for (p, q), v in sorted(ident_pts.items())}},
    )


def _lemma_3_12(p_max: int = 12) -> VerificationReport:
    """Balance maximizes lambda_n(L^c); equality only at the balanced split."""
    def point(p, q):
        n = p + q
        pb, qb = _balanced_pq(n)
        v = complement_distance_spectrum(build_L(p, q)).lambda_n
        vb = complement_distance_spectrum(build_L(pb, qb)).lambda_n
        balanced = (p, q) == (pb, qb)
        m = vb - v
        ok = m > STRICT_MARGIN or (balanced and abs(m) <= CLUSTER_TOL)
        return {"params": (p, q), "margin": None if balanced else m, "ok": ok}

    pairs = [(p, q) for p in range(4, p_max + 1) for q in range(2, p + 1)
             if p + q >= 7 and _balanced_pq(p + q)[0] >= 4]
    rows, worst, bad = _grid_reports(pairs, point)
    ident_any = any(quotients.check_identity_L_step(p, q).matches
                    for p, q in pairs if p > q and p >= 5)
    return VerificationReport(
        claim_id="3.12", status="confirmed" if not bad else "refuted",
        params={"grid": f"4<=p<={p_max}, 2<=q<=p, p+q>=7", "points": len(rows)},
        margin=worst, counterexamples=[str(r["params"]) for r in bad],
        notes=[
            "printed step-difference polynomial never matches Eq.(5)'s exact difference "
            f"(any match on grid: {ident_any}); the monotonicity conclusion itself holds",
        ],
    )


def _quotient_consistency_claim(orders=range(7, 21), tol: float = 1e-9) -> VerificationReport:
    reports = []
    for n in orders:
        sb, tb = _balanced_H(n)
        pb, qb = _balanced_pq(n)
        reports.append(quotients.quotient_consistency("H", (sb, tb), tol))
        reports.append(quotients.quotient_consistency("B1", (pb, qb), tol))
        reports.append(quotients.quotient_consistency("B2", (pb, qb), tol))
        reports.append(quotients.quotient_consistency("T", (n,), tol))
        if pb >= 4:
            reports.append(quotients.quotient_consistency("L", (pb, qb), tol))
        reports.append(quotients.quotient_consistency("Lprime", (n,), tol))
        reports.append(quotients.quotient_consistency("Ldprime", (n,), tol))
    bad = [r for r in reports if not r.ok()]
    mismatched = [r for r in reports if not r.poly_matches]
    ln_missing = [r for r in reports if not r.lambda_n_is_root]
    return VerificationReport(
        claim_id="quotient-consistency",
        status="confirmed" if not bad else "refuted",
        params={"orders": [min(orders), max(orders)], "cases": len(reports)},
        counterexamples=[f"{r.family_id}{r.params}" for r in bad],
        notes=[
            f"printed-vs-derived coefficient mismatches: "
            f"{[f'{r.family_id}{r.params}' for r in mismatched] or 'none'}",
            f"lambda_n outside quotient roots: "
            f"{[f'{r.family_id}{r.params}' for r in ln_missing] or 'never'}",
        ],
        details={"summaries": [r.summary() for r in reports]},
    )


def check_lemma(claim_id: str, n: int | None = None, p_max: int = 12,
                workers: int = 1) -> VerificationReport:
    """Dispatch a lemma claim check at the given order / grid size."""
    if claim_id == "2.1":
        return _lemma_2_1(n or 6, workers)
    if claim_id == "2.3":
        return _lemma_2_3(n or 12)
    if claim_id == "2.5":
        return _lemma_2_5(n or 6)
    if claim_id == "2.6":
        return _lemma_2_6(n or 7)
    if claim_id == "2.7":
        return _lemma_2_7(n or 9)
    if claim_id == "3.1":
        return _lemma_3_1()
    if claim_id == "3.4":
        return _lemma_3_4(p_max)
    if claim_id == "3.5":
        return _lemma_3_5(p_max)
    if claim_id == "3.6":
        return _lemma_3_6(p_max)
    if claim_id == "3.9":
        return _lemma_3_9(n or 7, workers=workers)
    if claim_id == "3.11":
        return _lemma_3_11(p_max)
    if claim_id == "3.12":
        return _lemma_3_12(p_max)
    if claim_id == "quotient-consistency":
        return _quotient_consistency_claim()
    raise ValueError(f"unknown claim id {claim_id!r}")


def check_theorem_on_values(tid: str, n: int, graphs: list[Graph],
                            values: dict) -> VerificationReport:
    """Theorem comparison over an externally supplied class sample.

    `values` carries per-graph lambda_1 and lambda_n of D(G^c) aligned with
    `graphs`.  Confirmations are conditional on the sample; refutations are
    conclusive because every witness is a genuine class member.
    """
    tid = tid.lstrip("T")
    l1s = np.asarray(values["l1"])
    lns = np.asarray(values["ln"])

    def cluster_for(arr: np.ndarray, mode: str):
        v = float(arr.min() if mode == "min" else arr.max())
        sel = np.abs(arr - v) <= CLUSTER_TOL
        rest = arr[~sel]
        runner = None
        if rest.size:
            runner = float(rest.min() if mode == "min" else rest.max())
        wit = [graphs[i] for i in np.flatnonzero(sel)]
        if n <= 10:
            wit = _dedup_isomorphic(wit)
        return v, wit, (None if runner is None else abs(runner - v))

    if tid == "2.4":
        s, t = _balanced_H(n)
        bound = complement_distance_spectrum(build_H(s, t)).lambda1
        v, wit, margin = cluster_for(l1s, "max")
        status = "confirmed" if bound - v > STRICT_MARGIN else "refuted"
        return VerificationReport(
            claim_id="T2.4", status=status, params={"n": n, "sample": len(graphs)},
            extremal={"max_l1": v, "bound_l1_Hc": bound},
            witnesses=[to_graph6(g) for g in wit], margin=bound - v)
    if tid == "2.8":
        pn = build_path(n)
        bound = complement_distance_spectrum(pn).lambda1
        v, wit, margin = cluster_for(l1s, "min")
        ok = v >= bound - CLUSTER_TOL and all(
            is_isomorphic(w, pn) for w in wit if abs(v - bound) <= CLUSTER_TOL)
        return VerificationReport(
            claim_id="T2.8", status="confirmed" if ok else "refuted",
            params={"n": n, "sample": len(graphs)},
            extremal={"min_l1": v, "l1_Pnc": bound},
            witnesses=[to_graph6(g) for g in wit], margin=margin)
    if tid == "3.7":
        p, q = _balanced_pq(n)
        bound = complement_distance_spectrum(build_B1(p, q)).lambda_n
        v, wit, margin = cluster_for(lns, "min")
        status = "confirmed" if v - bound > STRICT_MARGIN else "refuted"
        return VerificationReport(
            claim_id="T3.7", status=status, params={"n": n, "sample": len(graphs)},
            extremal={"min_ln": v, "bound_ln_B1c": bound},
            witnesses=[to_graph6(g) for g in wit], margin=v - bound)
    if tid == "3.13":
        p, q = _balanced_pq(n)
        bound_graph = build_L(p, q)
        bound = complement_distance_spectrum(bound_graph).lambda_n
        v, wit, margin = cluster_for(lns, "max")
        if v - bound > CLUSTER_TOL:
            return VerificationReport(
                claim_id="T3.13", status="refuted",
                params={"n": n, "sample": len(graphs)},
                extremal={"max_ln": v, "ln_Lc_balanced": bound},
                witnesses=[to_graph6(g) for g in wit],
                counterexamples=[to_graph6(g) for g in wit], margin=v - bound)
        attained = [w for w in wit if n <= 10 and is_isomorphic(w, bound_graph)]
        ok = abs(v - bound) <= CLUSTER_TOL and bool(attained)
        return VerificationReport(
            claim_id="T3.13", status="confirmed" if ok else "refuted",
            params={"n": n, "sample": len(graphs)},
            extremal={"max_ln": v, "ln_Lc_balanced": bound},
            witnesses=[to_graph6(g) for g in wit], margin=abs(v - bound))
    raise ValueError(f"unknown theorem id {tid!r}")


def run_claim(claim_id: str, n: int | None = None, p_max: int = 12,
              workers: int = 1) -> VerificationReport:
    """Run any registered claim (lemma or theorem) by id."""
    if claim_id not in CLAIM_IDS:
        raise ValueError(f"unknown claim id {claim_id!r}; known: {', '.join(CLAIM_IDS)}")
    if claim_id.startswith("T"):
        default_n = 7
        return check_theorem(claim_id, n or default_n, workers=workers)
    return check_lemma(claim_id, n=n, p_max=p_max, workers=workers)
