"""Every closed-form bound of the problem as an exact integer predicate.

Real-exponent statements are restated in integer power form (cross-
multiplied where rational), so no floating point appears anywhere here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List

from .counting import (
    CliqueVector,
    clique_vector,
    clique_weight,
    cliques_of_size,
    independent_vector,
)
from .fixed_loss import fixed_loss, has_small_component
from .graphs import Graph, turan
from .records import ConsistencyRecord, not_applicable
from .structure import TightStructure, clusters, tight_cliques
from .transform import apply_fill


@dataclass(frozen=True)
class Decomposition:
    """n = a(r+1) + b with 0 <= b <= r; unique under that range."""

    a: int
    b: int


def decompose(n: int, r: int) -> Decomposition:
    if n < 0 or r < 0:
        raise ValueError("decompose needs nonnegative n and r")
    a, b = divmod(n, r + 1)
    return Decomposition(a, b)


def main_bound(n: int, r: int) -> int:
    """a(2^(r+1) - 1) + 2^b: the total clique count of aK_{r+1} u K_b."""
    d = decompose(n, r)
    return d.a * ((1 << (r + 1)) - 1) + (1 << d.b)


def strong_inequalities(kvec: CliqueVector, r: int) -> List[ConsistencyRecord]:
    """t * k_t <= (r - t + 1) * k_{t-1} for every t >= 3, one record each."""
    records = []
    for t in range(3, kvec.max_size + 1):
        lhs = t * kvec[t]
        rhs = (r - t + 1) * kvec[t - 1]
        records.append(
            ConsistencyRecord(
                predicate="strong_inequality",
                subject=f"t={t}",
                lhs=lhs,
                rhs=rhs,
                applicable=True,
                passed=lhs <= rhs,
            )
        )
    return records


def strong_chain_bound(n: int, r: int) -> Fraction:
    """1 + n(2^r - 2)/(r - 1): the clique ceiling implied by the strong
    inequalities together with the trivial k_0, k_1, k_2 bounds."""
    if r < 2:
        raise ValueError("the chain bound needs r >= 2")
    return 1 + Fraction(n, r - 1) * ((1 << r) - 2)


def chain_vs_main_compare(n: int, r: int) -> ConsistencyRecord:
    """Chain bound <= main bound, cross-multiplied by (r-1); equality is
    expected exactly at (r, n) = (3, 6)."""
    d = decompose(n, r)
    if r < 3 or d.a < 1:
        return not_applicable("chain_vs_main", f"n={n},r={r}")
    lhs = (r - 1) + n * ((1 << r) - 2)
    rhs = (r - 1) * main_bound(n, r)
    equality = lhs == rhs
    return ConsistencyRecord(
        predicate="chain_vs_main",
        subject=f"n={n},r={r}",
        lhs=lhs,
        rhs=rhs,
        applicable=True,
        passed=lhs <= rhs and (not equality or (r, n) == (3, 6)),
        detail={"equality": equality},
    )


def _is_regular(g: Graph, d: int) -> bool:
    return all(g.degree(v) == d for v in range(g.n))


def kahn_zhao_check(g: Graph, d: int) -> ConsistencyRecord:
    """i(G)^(2d) <= (2^(d+1) - 1)^n for d-regular G, in integer power form."""
    if d < 1 or not _is_regular(g, d):
        return not_applicable("kahn_zhao_upper", f"n={g.n},d={d}")
    i_total = independent_vector(g).total
    lhs = i_total ** (2 * d)
    rhs = ((1 << (d + 1)) - 1) ** g.n
    return ConsistencyRecord(
        predicate="kahn_zhao_upper",
        subject=f"n={g.n},d={d}",
        lhs=lhs,
        rhs=rhs,
        applicable=True,
        passed=lhs <= rhs,
    )


def min_ind_check(g: Graph, d: int, allow_max_degree: bool = False) -> ConsistencyRecord:
    """i(G)^(d+1) >= (d+2)^n.  Stated for d-regular graphs; with
    ``allow_max_degree`` the weaker hypothesis max degree <= d is accepted
    (the proof only uses the upper degree bound)."""
    if allow_max_degree:
        applicable = g.max_degree() <= d
    else:
        applicable = _is_regular(g, d)
    if not applicable:
        return not_applicable("min_independent_lower", f"n={g.n},d={d}")
    i_total = independent_vector(g).total
    lhs = i_total ** (d + 1)
    rhs = (d + 2) ** g.n
    return ConsistencyRecord(
        predicate="min_independent_lower",
        subject=f"n={g.n},d={d}",
        lhs=lhs,
        rhs=rhs,
        applicable=True,
        passed=lhs >= rhs,
        detail={"max_degree_form": allow_max_degree},
    )


def regular_independent_checks(g: Graph, d: int) -> List[ConsistencyRecord]:
    """Per-size lower bounds i_t(G) >= (d+1)^t C(a, t) plus the total
    i(G) >= (d+2)^a, for d-regular G on n = a(d+1) vertices."""
    if not _is_regular(g, d) or g.n % (d + 1) != 0:
        return [not_applicable("regular_independent_lower", f"n={g.n},d={d}")]
    a = g.n // (d + 1)
    ivec = independent_vector(g)
    records = [
        ConsistencyRecord(
            predicate="regular_independent_lower",
            subject=f"n={g.n},d={d},total",
            lhs=ivec.total,
            rhs=(d + 2) ** a,
            applicable=True,
            passed=ivec.total >= (d + 2) ** a,
        )
    ]
    for t in range(g.n + 1):
        rhs = (d + 1) ** t * comb(a, t)
        records.append(
            ConsistencyRecord(
                predicate="regular_independent_lower",
                subject=f"n={g.n},d={d},t={t}",
                lhs=ivec[t],
                rhs=rhs,
                applicable=True,
                passed=ivec[t] >= rhs,
            )
        )
    return records


def bounded_clique_checks(g: Graph, r: int) -> List[ConsistencyRecord]:
    """Per-size upper bounds k_t(G) <= a C(r+1, t) plus the total
    k(G) <= 1 + a(2^(r+1) - 1), for max degree <= r and (r+1) | n."""
    if g.max_degree() > r or g.n % (r + 1) != 0:
        return [not_applicable("bounded_clique_upper", f"n={g.n},r={r}")]
    a = g.n // (r + 1)
    kvec = clique_vector(g)
    total_rhs = 1 + a * ((1 << (r + 1)) - 1)
    records = [
        ConsistencyRecord(
            predicate="bounded_clique_upper",
            subject=f"n={g.n},r={r},total",
            lhs=kvec.total,
            rhs=total_rhs,
            applicable=True,
            passed=kvec.total <= total_rhs,
        )
    ]
    for t in range(1, g.n + 1):
        rhs = a * comb(r + 1, t)
        records.append(
            ConsistencyRecord(
                predicate="bounded_clique_upper",
                subject=f"n={g.n},r={r},t={t}",
                lhs=kvec[t],
                rhs=rhs,
                applicable=True,
                passed=kvec[t] <= rhs,
            )
        )
    return records


def zykov_check(g: Graph) -> ConsistencyRecord:
    """k(G) <= k(T_{n, omega}) with omega the clique number of G."""
    if g.n == 0:
        return not_applicable("zykov_upper", "n=0")
    kvec = clique_vector(g)
    omega = kvec.max_size
    rhs = clique_vector(turan(g.n, omega)).total
    return ConsistencyRecord(
        predicate="zykov_upper",
        subject=f"n={g.n},omega={omega}",
        lhs=kvec.total,
        rhs=rhs,
        applicable=True,
        passed=kvec.total <= rhs,
    )


def galvin_bound(n: int, d: int) -> int:
    """i(K_{d, n-d}) = 2^d + 2^(n-d) - 1, the conjectured ceiling for
    min degree >= d (proved via the main result)."""
    if not 0 <= d <= n:
        raise ValueError("galvin_bound needs 0 <= d <= n")
    return (1 << d) + (1 << (n - d)) - 1


def _fill_does_not_gain(g: Graph, r: int, ts: TightStructure) -> bool:
    report = apply_fill(g, r, ts.T)
    return report.k_after <= report.k_before


def cluster_loss_check(g: Graph, r: int, cluster: TightStructure) -> ConsistencyRecord:
    """When filling a cluster does not increase the clique count, its
    deficiency graph must carry large fixed loss: phi(R) >= 2^r + s 2^t,
    and 2^t < s (the log statement in integer form)."""
    if not cluster.is_cluster or not _fill_does_not_gain(g, r, cluster):
        return not_applicable("cluster_large_loss", f"T={cluster.T:#x}")
    phi = fixed_loss(cluster.R).phi
    t, s = cluster.t, cluster.s
    rhs = (1 << r) + s * (1 << t)
    size_ok = (1 << t) < s
    return ConsistencyRecord(
        predicate="cluster_large_loss",
        subject=f"T={cluster.T:#x},t={t},s={s}",
        lhs=phi,
        rhs=rhs,
        applicable=True,
        passed=phi >= rhs and size_ok,
        detail={"two_pow_t_lt_s": size_ok},
    )


def associated_low_weight_check(
    g: Graph, r: int, cluster: TightStructure, c: int
) -> ConsistencyRecord:
    """A non-gaining cluster with no K_2 deficiency component must have at
    least 2 C(t, c) associated c-cliques of weight at most r - c - 1."""
    t = cluster.t
    if (
        r < 3
        or not cluster.is_cluster
        or not 2 <= c <= t
        or has_small_component(cluster.R)
        or not _fill_does_not_gain(g, r, cluster)
    ):
        return not_applicable("associated_low_weight", f"T={cluster.T:#x},c={c}")
    count = 0
    for mask in cliques_of_size(g, c):
        if (mask & cluster.T).bit_count() == c - 1 and clique_weight(g, mask) <= r - c - 1:
            count += 1
    rhs = 2 * comb(t, c)
    return ConsistencyRecord(
        predicate="associated_low_weight",
        subject=f"T={cluster.T:#x},c={c}",
        lhs=count,
        rhs=rhs,
        applicable=True,
        passed=count >= rhs,
    )


def discharging_check(g: Graph, r: int) -> ConsistencyRecord:
    """Reweighting check behind the final case of the main result.

    Tight cliques lose 1; cliques associated with one cluster (of size >= 2)
    gain one half; 2-cliques associated with two clusters gain 1.  Weights
    are kept doubled so the halves stay in exact integers.  Applicable only
    when G has a tight clique of size >= 2, contains no K_{r+1}, and every
    cluster both fails to gain under the fill rewrite and has no K_2
    deficiency component.  Checks, for clique sizes >= 2:
      (i)  per size, the doubled weight sum does not drop, and
      (ii) every doubled new weight is at most 2(r - size).
    """
    from .counting import clique_weights

    subject = f"n={g.n},r={r}"
    if g.max_degree() > r:
        return not_applicable("discharging", subject)
    kvec = clique_vector(g)
    if kvec[r + 1] > 0:
        return not_applicable("discharging", subject, reason="contains K_{r+1}")
    all_clusters = clusters(g, r)
    tight_big = list(tight_cliques(g, r, 2))
    if not tight_big:
        return not_applicable("discharging", subject, reason="no tight clique of size >= 2")
    from .transform import _k2_components

    for cl in all_clusters:
        if _k2_components(cl) or not _fill_does_not_gain(g, r, cl):
            return not_applicable("discharging", subject, reason="cluster hypotheses fail")

    tight_set = set(tight_big) | set(tight_cliques(g, r, 1))
    big_clusters = [cl.T for cl in all_clusters if cl.t >= 2]
    old_sums = {}
    new_sums = {}
    ceiling_ok = True
    worst = (0, 0)
    for mask, size, weight in clique_weights(g):
        if size < 2:
            continue
        associations = sum(
            1 for t_mask in big_clusters if (mask & t_mask).bit_count() == size - 1
        )
        doubled_new = 2 * weight - (2 if mask in tight_set else 0) + associations
        old_sums[size] = old_sums.get(size, 0) + 2 * weight
        new_sums[size] = new_sums.get(size, 0) + doubled_new
        if doubled_new > 2 * (r - size):
            ceiling_ok = False
            worst = (doubled_new, 2 * (r - size))
    sums_ok = all(old_sums[t] <= new_sums[t] for t in old_sums)
    return ConsistencyRecord(
        predicate="discharging",
        subject=subject,
        lhs=worst[0],
        rhs=worst[1],
        applicable=True,
        passed=sums_ok and ceiling_ok,
        detail={
            "doubled_weight_sums": {t: (old_sums[t], new_sums[t]) for t in sorted(old_sums)},
            "per_size_ok": sums_ok,
            "ceiling_ok": ceiling_ok,
        },
    )
