"""Upper-bound search algorithms: known-count Grover search, unknown-count
search with exponentially growing cutoffs, iterated multi-item search, and
the parallel partition algorithm with regime-dependent per-cell item caps.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .core import (
    Database,
    MarkedPredicate,
    QueryLedger,
    as_generator,
    grover_iterate,
    init_uniform,
    measure,
)

#: growth factor of the unknown-count search's iteration cutoff
CUTOFF_GROWTH = 6 / 5

#: repetitions of the parallel algorithm before reporting failure
MAX_REPETITIONS = 10

# seed-path tag for the partition stream: copies use tags 0..d-1, the
# partition of a repetition uses tag d, so the streams never collide.


@dataclass(frozen=True)
class TargetSet:
    """The k distinct items to locate."""

    items: tuple

    def __post_init__(self):
        items = tuple(int(y) for y in self.items)
        if len(set(items)) != len(items):
            raise ValueError("target items must be pairwise distinct")
        if len(items) < 1:
            raise ValueError("need at least one target item")
        object.__setattr__(self, "items", items)

    @property
    def k(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class Partition:
    """Disjoint near-equal address cells covering [N]."""

    cells: tuple

    @property
    def d(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> tuple:
        return tuple(int(c.size) for c in self.cells)

    def cell_of(self, address: int) -> int:
        for i, cell in enumerate(self.cells):
            if address in cell:
                return i
        raise ValueError(f"address {address} not covered")


@dataclass(frozen=True)
class RegimeParams:
    """Per-cell item cap t and repetition budget for one (k, d) regime."""

    t: int
    regime: str
    max_repetitions: int = MAX_REPETITIONS


@dataclass
class SearchOutcome:
    """Result of a (multi-item or parallel) search run."""

    targets: TargetSet
    located: dict            # item -> address
    success: bool
    ledger: QueryLedger
    find_times: dict = field(default_factory=dict)  # item -> oracle round of find
    repetitions: int = 1
    promise_ok: bool = True

    @property
    def parallel_rounds(self) -> int:
        return self.ledger.parallel_rounds


def optimal_iterations(M: int, j: int) -> int:
    """floor(pi / (4 arcsin sqrt(j/M))): 0 when everything is marked."""
    theta = math.asin(math.sqrt(j / M))
    return int(math.pi / (4 * theta))


def grover_search_known(
    db: Database,
    subdomain,
    targets: TargetSet,
    j: int,
    seed,
    ledger: QueryLedger | None = None,
    copy: int = 0,
):
    """Grover search assuming exactly *j* marked addresses in the subdomain.

    Runs the optimal iteration count for the assumed j, measures once, and
    classically checks the measured address (the check is tallied as a
    verification round, not an oracle query).  Returns ``(address, queries)``
    with ``address`` None when the measurement missed.
    """
    S = np.ascontiguousarray(subdomain, dtype=np.int64)
    M = int(S.size)
    if j < 1 or j > M:
        raise ValueError(f"assumed count j={j} outside [1, {M}]")
    rng = as_generator(seed)
    pred = MarkedPredicate(db, frozenset(targets.items), S)
    r = optimal_iterations(M, j)
    state = init_uniform(M)
    for _ in range(r):
        state = grover_iterate(state, pred, ledger, copy)
    idx = measure(state, rng)
    addr = int(S[idx])
    if ledger is not None:
        ledger.record_verification(1)
    if pred.marked(addr):
        return addr, r
    return None, r


def bbht_search_unknown(
    db: Database,
    subdomain,
    targets: TargetSet,
    seed,
    ledger: QueryLedger | None = None,
    copy: int = 0,
):
    """Search without knowing the marked count, via growing random cutoffs.

    Stage s draws an iteration count uniformly from [0, min(lambda**s,
    sqrt(M))], runs it from a fresh uniform state, measures, and checks the
    result classically (the check costs one query).  Aborts once the
    remaining budget cannot cover another stage; the budget is
    ceil(9/4 sqrt(M)) + 2 ceil(log_lambda sqrt(M)) total queries.

    Returns ``(address, queries)``, address None when nothing was found.
    """
    S = np.ascontiguousarray(subdomain, dtype=np.int64)
    M = int(S.size)
    if M == 0:
        raise ValueError("cannot search an empty subdomain")
    rng = as_generator(seed)
    pred = MarkedPredicate(db, frozenset(targets.items), S)
    sqrt_m = math.sqrt(M)
    budget = math.ceil(9 / 4 * sqrt_m)
    if M > 1:
        budget += 2 * math.ceil(math.log(sqrt_m) / math.log(CUTOFF_GROWTH))

    queries = 0
    stage = 0
    while True:
        cap = int(min(CUTOFF_GROWTH ** stage, sqrt_m))
        if queries + cap + 1 > budget:
            return None, queries
        r = int(rng.integers(0, cap + 1))
        state = init_uniform(M)
        for _ in range(r):
            state = grover_iterate(state, pred, ledger, copy)
        idx = measure(state, rng)
        addr = int(S[idx])
        # classical membership test: one oracle query
        queries += r + 1
        if ledger is not None:
            ledger.record_oracle(copy)
        if pred.marked(addr):
            return addr, queries
        stage += 1


def multi_item_search(
    db: Database,
    subdomain,
    targets: TargetSet,
    t: int,
    seed,
    ledger: QueryLedger | None = None,
    copy: int = 0,
) -> SearchOutcome:
    """Iterated search for up to *t* of the target items in the subdomain.

    Step i (i = 1..t) searches with assumed marked count t-i+1; a found
    item is removed from the target set and its address from the search
    space.  A failed step falls back to the unknown-count search, since
    fewer than the assumed number may be present; when the fallback also
    finds nothing the subdomain is treated as exhausted.

    ``success`` means every target item actually present in the subdomain
    was located.  ``find_times`` gives the cumulative oracle-query count at
    which each item was confirmed.
    """
    S = np.ascontiguousarray(subdomain, dtype=np.int64)
    rng = as_generator(seed)
    if ledger is None:
        ledger = QueryLedger(max(copy + 1, 1))
    start = ledger.oracle_counts[copy]

    present = set(int(v) for v in db.entries[S]) & set(targets.items)
    remaining = list(targets.items)
    addresses = S.copy()
    located: dict = {}
    find_times: dict = {}

    def note_find(addr):
        nonlocal addresses, remaining
        y = db.lookup(addr)
        located[y] = addr
        find_times[y] = ledger.oracle_counts[copy] - start
        remaining.remove(y)
        addresses = addresses[addresses != addr]

    for i in range(1, t + 1):
        if not remaining or addresses.size == 0:
            break
        assumed = min(t - i + 1, int(addresses.size))
        step_targets = TargetSet(remaining)
        addr, _ = grover_search_known(
            db, addresses, step_targets, assumed, rng, ledger, copy
        )
        if addr is not None:
            note_find(addr)
            continue
        addr, _ = bbht_search_unknown(
            db, addresses, step_targets, rng, ledger, copy
        )
        if addr is None:
            break
        note_find(addr)

    return SearchOutcome(
        targets=targets,
        located=located,
        success=set(located) == present,
        ledger=ledger,
        find_times=find_times,
    )


def random_partition(N: int, d: int, seed) -> Partition:
    """Uniformly random equipartition of [N] into d cells.

    A uniform permutation of [N] cut into d contiguous blocks whose sizes
    differ by at most one; each cell is reported in sorted address order.
    """
    if d < 1 or d > N:
        raise ValueError(f"need 1 <= d <= N, got d={d}, N={N}")
    rng = as_generator(seed)
    perm = rng.permutation(N)
    base, extra = divmod(N, d)
    cells = []
    pos = 0
    for i in range(d):
        size = base + (1 if i < extra else 0)
        cells.append(np.sort(perm[pos:pos + size]))
        pos += size
    return Partition(cells=tuple(cells))


def choose_regime(N: int, d: int, k: int) -> RegimeParams:
    """Per-cell cap t for the four (k vs d) cases of the parallel algorithm.

    lg means log base 2; non-integer cap expressions are rounded up.
    """
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    if d > math.isqrt(N) or k > math.isqrt(N):
        warnings.warn(
            f"d={d}, k={k} exceed sqrt(N)={math.isqrt(N)}; cost bounds assume "
            "d, k <= sqrt(N)",
            stacklevel=2,
        )
    lg_d = math.log2(d)
    if k <= math.sqrt(d):
        return RegimeParams(t=2, regime="k<=sqrt(d)")
    if k <= d:
        return RegimeParams(t=math.ceil(5 * lg_d), regime="sqrt(d)<k<=d")
    if k <= d * lg_d:
        return RegimeParams(t=math.ceil(5 * k * lg_d / d), regime="d<k<=d*lg(d)")
    return RegimeParams(t=math.ceil(2 * k / d), regime="k>d*lg(d)")


def theorem_envelope(N: int, d: int, k: int) -> float:
    """Reference parallel-round expression for the regime of (N, d, k).

    Uses max(lg d, 1) so the d=1 case degenerates to the single-database
    sqrt(N*k) cost instead of zero.
    """
    regime = choose_regime(N, d, k).regime
    lg_d = max(math.log2(d), 1.0)
    if regime == "k<=sqrt(d)":
        return math.sqrt(N / d)
    if regime == "k>d*lg(d)":
        return math.sqrt(N * k) / d
    return math.sqrt(N * k * lg_d / (d * min(k, d)))


def maxload_bound(k: int, t: int, d: int) -> float:
    """Probability bound C(k, t) * d**(-t) that one cell holds more than t items."""
    if d < 1:
        raise ValueError("need d >= 1")
    if t < 0:
        raise ValueError("need t >= 0")
    if t > k:
        return 0.0
    return math.comb(k, t) / d ** t


def verify_locations(db: Database, outcome: SearchOutcome) -> bool:
    """Classically check a claimed item -> address map against the database.

    True iff all k target items are claimed and every claimed pair satisfies
    f(address) = item.  Costs ceil(k/d) verification rounds (k lookups spread
    over the d copies), tallied on the outcome's ledger.
    """
    k = outcome.targets.k
    d = outcome.ledger.copies
    outcome.ledger.record_verification(math.ceil(k / d))
    if set(outcome.located) != set(outcome.targets.items):
        return False
    return all(db.lookup(addr) == item for item, addr in outcome.located.items())


def _seed_path(seed) -> list:
    if isinstance(seed, (int, np.integer)):
        return [int(seed)]
    return [int(s) for s in seed]


def parallel_search(
    db: Database,
    d: int,
    targets: TargetSet,
    seed,
    t_override: int | None = None,
    max_repetitions: int = MAX_REPETITIONS,
) -> SearchOutcome:
    """Locate all target items using d database copies searched in lockstep.

    Each repetition draws a fresh random equipartition of the address space,
    dedicates one copy to each cell, and runs the iterated multi-item search
    with the regime cap t on every copy.  Copies run in lockstep, one
    parallel round per oracle query; as soon as every (still missing) item
    has been found and classically verified, all copies halt, so the
    repetition's round count is the find time of the last needed item.  A
    repetition that leaves items unlocated costs the longest copy program
    and triggers another repetition (fresh partition, already-located items
    excluded) up to *max_repetitions*.

    The seed may be an int or a sequence of ints; per-repetition and
    per-copy generators are derived from it by fixed path extension, so
    results do not depend on scheduling.
    """
    N = db.size
    k = targets.k
    if not 1 <= d <= N:
        raise ValueError(f"need 1 <= d <= N, got d={d}, N={N}")
    if t_override is not None:
        t = t_override
        regime = RegimeParams(t=t, regime="override", max_repetitions=max_repetitions)
    elif d == 1:
        # single cell: the algorithm is exactly the t=k multi-item search
        t = k
        regime = RegimeParams(t=k, regime="d=1", max_repetitions=max_repetitions)
    else:
        regime = choose_regime(N, d, k)
        t = regime.t

    path = _seed_path(seed)
    present = set(int(v) for v in db.entries) & set(targets.items)
    promise_ok = present == set(targets.items)

    ledger = QueryLedger(d)
    located: dict = {}
    find_times: dict = {}
    repetitions = 0

    for rep in range(max_repetitions):
        repetitions += 1
        missing = [y for y in targets.items if y not in located]
        partition = random_partition(N, d, seed=path + [rep, d])
        copy_outcomes = []
        for c in range(d):
            sub = QueryLedger(1)
            out = multi_item_search(
                db,
                partition.cells[c],
                TargetSet(missing),
                t,
                seed=path + [rep, c],
                ledger=sub,
                copy=0,
            )
            copy_outcomes.append((out, sub.oracle_counts[0], sub.verification_rounds))

        found_now: dict = {}
        for out, _, _ in copy_outcomes:
            found_now.update(out.located)
        all_found = set(found_now) == set(missing)
        if all_found:
            # lockstep halt: every copy stops at the round where the last
            # needed item was confirmed
            stop = max((out.find_times[y] for out, _, _ in copy_outcomes
                        for y in out.located), default=0)
        else:
            stop = max(total for _, total, _ in copy_outcomes)

        for c, (out, total, ver) in enumerate(copy_outcomes):
            ledger.record_oracle(c, min(total, stop))
            ledger.record_verification(ver)
            for y, addr in out.located.items():
                located[y] = addr
                find_times[y] = out.find_times[y]
        ledger.end_repetition()

        interim = SearchOutcome(
            targets=targets, located=dict(located), success=False, ledger=ledger,
        )
        if verify_locations(db, interim):
            return SearchOutcome(
                targets=targets,
                located=located,
                success=True,
                ledger=ledger,
                find_times=find_times,
                repetitions=repetitions,
                promise_ok=promise_ok,
            )

    return SearchOutcome(
        targets=targets,
        located=located,
        success=False,
        ledger=ledger,
        find_times=find_times,
        repetitions=repetitions,
        promise_ok=promise_ok,
    )
