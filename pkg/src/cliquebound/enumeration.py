"""Isomorph-free generation of degree-bounded graphs, plus the harness that
confronts every quantitative statement with every small graph.

Generation is vertex-by-vertex augmentation with canonical-form dedup per
level: a child is kept iff its canonical form has not been seen at that
level.  Level representatives are the canonically relabeled graphs, so the
output stream is independent of worker count and iteration order.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from . import graph6
from .bounds import (
    associated_low_weight_check,
    bounded_clique_checks,
    chain_vs_main_compare,
    cluster_loss_check,
    discharging_check,
    kahn_zhao_check,
    main_bound,
    min_ind_check,
    regular_independent_checks,
    strong_chain_bound,
    strong_inequalities,
    zykov_check,
)
from .canon import canonical_form, canonical_form_raw
from .counting import clique_vector, clique_weights, independent_vector, weight_sums
from .errors import CapacityError
from .fixed_loss import fixed_loss, has_small_component, max_bound_check, degree_one_bound_check
from .graphs import Graph, complete, cycle, disjoint_union, extremal_graph
from .records import ConsistencyRecord
from .structure import clusters, derive, outside_degree_check
from .transform import apply_k2_move, fill_graph, _k2_components

GENERATION_MAX_VERTICES = 12

_class_cache: Dict[Tuple[int, int], List[Graph]] = {}


# ---------------------------------------------------------------------------
# generation


def _child_canons(parent_rows: Tuple[int, ...], r: int) -> Set[str]:
    """Canonical forms of every one-vertex extension keeping all degrees <= r."""
    m = len(parent_rows)
    eligible = 0
    for v, row in enumerate(parent_rows):
        if row.bit_count() < r:
            eligible |= 1 << v
    new_bit = 1 << m
    out: Set[str] = set()
    sub = eligible
    while True:
        if sub.bit_count() <= r:
            child = tuple(
                row | new_bit if (sub >> v) & 1 else row
                for v, row in enumerate(parent_rows)
            ) + (sub,)
            out.add(canonical_form_raw(m + 1, child))
        if sub == 0:
            break
        sub = (sub - 1) & eligible
    return out


def _expand_chunk(args) -> Set[str]:
    parents, r = args
    out: Set[str] = set()
    for rows in parents:
        out |= _child_canons(rows, r)
    return out


def _expand_level(parents: List[Graph], r: int, workers: int) -> List[Graph]:
    if workers > 1 and len(parents) > workers:
        import multiprocessing

        chunks = [
            ([g.adj for g in parents[i::workers]], r) for i in range(workers)
        ]
        with multiprocessing.Pool(workers) as pool:
            canons: Set[str] = set()
            for part in pool.map(_expand_chunk, chunks):
                canons |= part
    else:
        canons = _expand_chunk(([g.adj for g in parents], r))
    return [graph6.decode(c) for c in sorted(canons)]


def generate(n: int, r: int, workers: int = 1) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices
    with maximum degree at most ``r``, in canonical-form order."""
    return iter(_classes(n, r, workers))


def _classes(n: int, r: int, workers: int = 1) -> List[Graph]:
    if n > GENERATION_MAX_VERTICES:
        raise CapacityError(f"exhaustive generation capped at n <= {GENERATION_MAX_VERTICES}")
    if r < 0 or n < 0:
        raise ValueError("n and r must be nonnegative")
    r = min(r, max(n - 1, 0))
    key = (n, r)
    if key in _class_cache:
        return _class_cache[key]
    # a wider cached run filters down without regenerating
    for (cn, cr), cached in _class_cache.items():
        if cn == n and cr > r:
            result = [g for g in cached if g.max_degree() <= r]
            _class_cache[key] = result
            return result
    if n == 0:
        result = [Graph(0, ())]
    else:
        level = [Graph(1, (0,))]
        for _ in range(n - 1):
            level = _expand_level(level, r, workers)
        result = level
    _class_cache[key] = result
    return result


def generate_regular(n: int, d: int, workers: int = 1) -> Iterator[Graph]:
    """Exactly-d-regular graphs up to isomorphism.

    An odd n*d admits no d-regular graph; the stream is simply empty then.
    """
    if (n * d) % 2 == 1:
        return iter(())
    return iter(
        [g for g in _classes(n, d, workers) if all(g.degree(v) == d for v in range(g.n))]
    )


# ---------------------------------------------------------------------------
# extremal-bound verification


@dataclass(frozen=True)
class VerificationReport:
    n: int
    r: int
    graph_count: int
    max_k: int
    bound: int
    extremal: Tuple[str, ...]  # canonical graph6 of all maximizers
    equality_matches_characterization: bool
    predicate_tallies: dict = field(default_factory=dict, compare=False)
    runtime_seconds: float = field(default=0.0, compare=False)

    @property
    def bound_holds(self) -> bool:
        return self.max_k <= self.bound


def expected_extremal_forms(n: int, r: int) -> Set[str]:
    """Canonical forms of the graphs characterized as equality cases."""
    a, b = divmod(n, r + 1)
    forms = {canonical_form(extremal_graph(n, r))}
    if r == 2 and a >= 1:
        if b == 1:
            g = cycle(4)
            for _ in range(a - 1):
                g = disjoint_union(complete(3), g)
            forms.add(canonical_form(g))
        elif b == 2:
            g = cycle(5)
            for _ in range(a - 1):
                g = disjoint_union(complete(3), g)
            forms.add(canonical_form(g))
    return forms


def verify_main(n: int, r: int, workers: int = 1) -> VerificationReport:
    """Sweep all isomorphism classes with max degree <= r and compare the
    observed clique-count maximum (and its achievers) to the predicted bound
    and equality characterization."""
    t0 = time.monotonic()
    cls = _classes(n, r, workers)
    bound = main_bound(n, r)
    max_k = 0
    extremal: List[str] = []
    for g in cls:
        k = clique_vector(g).total
        if k > max_k:
            max_k = k
            extremal = [graph6.encode(g)]
        elif k == max_k:
            extremal.append(graph6.encode(g))
    matches = max_k == bound and set(extremal) == expected_extremal_forms(n, r)
    return VerificationReport(
        n=n,
        r=r,
        graph_count=len(cls),
        max_k=max_k,
        bound=bound,
        extremal=tuple(sorted(extremal)),
        equality_matches_characterization=matches,
        runtime_seconds=time.monotonic() - t0,
    )


# ---------------------------------------------------------------------------
# consistency sweep


@dataclass
class SweepReport:
    n_max: int
    r_max: int
    tallies: Dict[str, List[int]]  # predicate -> [applicable, passed, failed]
    failures: List[dict]  # every failed record, with a graph6 witness

    def failures_for(self, predicate: str) -> List[dict]:
        return [f for f in self.failures if f["predicate"] == predicate]

    def to_jsonable(self) -> dict:
        return {
            "n_max": self.n_max,
            "r_max": self.r_max,
            "tallies": {k: list(v) for k, v in sorted(self.tallies.items())},
            "failures": self.failures,
        }

    def to_json(self) -> str:
        """Deterministic serialization; byte-identical across runs/workers."""
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))


def _tally(tallies: Dict[str, List[int]], failures: List[dict], g6: str,
           records: Sequence[ConsistencyRecord]) -> None:
    for rec in records:
        slot = tallies.setdefault(rec.predicate, [0, 0, 0])
        if rec.applicable:
            slot[0] += 1
            if rec.passed:
                slot[1] += 1
            else:
                slot[2] += 1
                failures.append(
                    {
                        "predicate": rec.predicate,
                        "graph6": g6,
                        "subject": rec.subject,
                        "lhs": rec.lhs,
                        "rhs": rec.rhs,
                    }
                )


def _double_counting_record(g: Graph) -> ConsistencyRecord:
    """t * k_t equals the weight sum over (t-1)-cliques, for every t >= 1."""
    kv = clique_vector(g)
    sums = weight_sums(g)
    lhs = rhs = 0
    ok = True
    for t in range(1, kv.max_size + 2):
        left = t * kv[t]
        right = sums[t - 1] if t - 1 < len(sums) else 0
        if left != right:
            ok, lhs, rhs = False, left, right
            break
    return ConsistencyRecord("double_counting", f"n={g.n}", lhs, rhs, True, ok)


def _graph_records(g: Graph) -> List[ConsistencyRecord]:
    """Degree-cap-independent checks for one graph."""
    records = [_double_counting_record(g), zykov_check(g)]
    records.append(max_bound_check(g))
    records.append(degree_one_bound_check(g))
    degrees = {g.degree(v) for v in range(g.n)} or {0}
    if len(degrees) == 1:
        d = degrees.pop()
        records.append(kahn_zhao_check(g, d))
        records.append(min_ind_check(g, d))
        recs = regular_independent_checks(g, d)
        records.extend(r for r in recs if r.applicable)
    return records


def _capped_records(g: Graph, r: int) -> List[ConsistencyRecord]:
    """Checks for one graph under one degree cap r >= max degree."""
    records: List[ConsistencyRecord] = []
    kv = clique_vector(g)
    k_total = kv.total

    bound = main_bound(g.n, r)
    records.append(
        ConsistencyRecord(
            "extremal_bound", f"n={g.n},r={r}", k_total, bound, True, k_total <= bound
        )
    )
    records.extend(rec for rec in bounded_clique_checks(g, r) if rec.applicable)

    tights = [
        (size, mask)
        for mask, size, weight in clique_weights(g)
        if size >= 1 and weight == r + 1 - size
    ]
    tights.sort()
    has_big_tight = any(size >= 2 for size, _ in tights)

    for _, t_mask in tights:
        ts = derive(g, r, t_mask)
        records.append(outside_degree_check(g, r, t_mask))
        after = fill_graph(g, r, ts)
        k_after = clique_vector(after).total
        gain = k_after - k_total
        i_r = independent_vector(ts.R).total
        phi = fixed_loss(ts.R).phi
        lower = (1 << (r + 1)) - (1 << ts.t) * i_r - phi
        records.append(
            ConsistencyRecord(
                "fill_gain_lower_bound",
                f"r={r},T={t_mask:#x}",
                k_total + lower,
                k_after,
                True,
                k_after >= k_total + lower,
            )
        )
        literal = (1 << ts.t) * ((1 << ts.s) - i_r + ts.s + 1) > phi
        corrected = (1 << ts.t) * ((1 << ts.s) - i_r) > phi
        if literal:
            records.append(
                ConsistencyRecord(
                    "fill_threshold_literal", f"r={r},T={t_mask:#x}", gain, 1, True, gain > 0
                )
            )
        if corrected:
            records.append(
                ConsistencyRecord(
                    "fill_threshold_corrected", f"r={r},T={t_mask:#x}", gain, 1, True, gain > 0
                )
            )
        if ts.t >= 2 and _k2_components(ts):
            report = apply_k2_move(g, r, t_mask)
            records.append(
                ConsistencyRecord(
                    "k2_move_gain",
                    f"r={r},T={t_mask:#x}",
                    report.k_after,
                    report.k_before,
                    True,
                    report.k_after > report.k_before,
                )
            )

    for cluster in clusters(g, r):
        rec = cluster_loss_check(g, r, cluster)
        if rec.applicable and cluster.t == 1:
            rec = ConsistencyRecord(
                "cluster_large_loss_size1", rec.subject, rec.lhs, rec.rhs,
                True, rec.passed, rec.detail,
            )
        records.append(rec)
        for c in range(2, cluster.t + 1):
            records.append(associated_low_weight_check(g, r, cluster, c))

    records.append(discharging_check(g, r))

    if r >= 2 and not has_big_tight:
        strong = strong_inequalities(kv, r)
        records.append(
            ConsistencyRecord(
                "strong_from_no_tight",
                f"n={g.n},r={r}",
                sum(rec.lhs for rec in strong),
                sum(rec.rhs for rec in strong),
                True,
                all(rec.passed for rec in strong),
            )
        )
        chain = strong_chain_bound(g.n, r)
        records.append(
            ConsistencyRecord(
                "chain_bound_no_tight",
                f"n={g.n},r={r}",
                k_total * chain.denominator,
                chain.numerator,
                True,
                k_total * chain.denominator <= chain.numerator,
            )
        )
    return records


def _sweep_chunk(args) -> Tuple[Dict[str, List[int]], List[dict]]:
    adj_list, n, r_max = args
    tallies: Dict[str, List[int]] = {}
    failures: List[dict] = []
    for rows in adj_list:
        g = Graph(n, rows)
        g6 = graph6.encode(g)
        _tally(tallies, failures, g6, _graph_records(g))
        max_deg = g.max_degree()
        for r in range(max(1, max_deg), min(r_max, n - 1) + 1):
            _tally(tallies, failures, g6, _capped_records(g, r))
    return tallies, failures


def _merge(
    into: Tuple[Dict[str, List[int]], List[dict]],
    part: Tuple[Dict[str, List[int]], List[dict]],
) -> None:
    tallies, failures = into
    for pred, (a, p, f) in part[0].items():
        slot = tallies.setdefault(pred, [0, 0, 0])
        slot[0] += a
        slot[1] += p
        slot[2] += f
    failures.extend(part[1])


def consistency_sweep(
    n_max: int,
    r_max: int,
    workers: int = 1,
    checkpoint: Optional[str] = None,
) -> SweepReport:
    """Evaluate every predicate over all graphs with n <= n_max under every
    applicable degree cap r <= r_max.

    The report is deterministic: tallies are keyed by predicate id and the
    failure list is sorted, so serialized output is byte-identical across
    runs, worker counts, and checkpoint restarts.  With ``checkpoint``,
    completed per-n units are appended to the file and skipped on restart.
    """
    if n_max > 9:
        raise CapacityError("full consistency sweeps are capped at n_max <= 9")
    done: Dict[int, Tuple[Dict[str, List[int]], List[dict]]] = {}
    if checkpoint is not None:
        done = _load_checkpoint(checkpoint, r_max)
    tallies: Dict[str, List[int]] = {}
    failures: List[dict] = []
    for n in range(1, n_max + 1):
        if n in done:
            unit = done[n]
        else:
            unit = _sweep_unit(n, r_max, workers)
            if checkpoint is not None:
                emitted = len(_classes(n, min(r_max, max(n - 1, 1))))
                _append_checkpoint(checkpoint, n, r_max, emitted, unit)
        _merge((tallies, failures), unit)
    failures.sort(key=lambda f: (f["predicate"], f["graph6"], f["subject"]))
    return SweepReport(n_max=n_max, r_max=r_max, tallies=tallies, failures=failures)


def _sweep_unit(n: int, r_max: int, workers: int) -> Tuple[Dict[str, List[int]], List[dict]]:
    cls = _classes(n, min(r_max, max(n - 1, 1)), workers)
    if workers > 1 and len(cls) > workers:
        import multiprocessing

        chunks = [([g.adj for g in cls[i::workers]], n, r_max) for i in range(workers)]
        with multiprocessing.Pool(workers) as pool:
            unit: Tuple[Dict[str, List[int]], List[dict]] = ({}, [])
            for part in pool.map(_sweep_chunk, chunks):
                _merge(unit, part)
        return unit
    return _sweep_chunk(([g.adj for g in cls], n, r_max))


# checkpoint format: '#'-prefixed header, then one JSON object per line with
# keys n / r_max / emitted (isomorphism classes processed) / tallies /
# failures describing one completed per-n unit.  On restart, lines whose
# r_max differs from the running sweep are ignored.
_CHECKPOINT_HEADER = "# cliquebound consistency-sweep checkpoint v1: one JSON line per finished n (keys: n, r_max, emitted, tallies, failures)"


def _append_checkpoint(path: str, n: int, r_max: int, emitted: int, unit) -> None:
    import os

    line = json.dumps(
        {"n": n, "r_max": r_max, "emitted": emitted, "tallies": unit[0], "failures": unit[1]},
        sort_keys=True,
        separators=(",", ":"),
    )
    write_header = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", encoding="utf-8") as fh:
        if write_header:
            fh.write(_CHECKPOINT_HEADER + "\n")
        fh.write(line + "\n")


def _load_checkpoint(path: str, r_max: int) -> Dict[int, Tuple[Dict[str, List[int]], List[dict]]]:
    import os

    done: Dict[int, Tuple[Dict[str, List[int]], List[dict]]] = {}
    if not os.path.exists(path):
        return done
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            entry = json.loads(line)
            if entry.get("r_max") == r_max:
                done[entry["n"]] = (entry["tallies"], entry["failures"])
    return done
