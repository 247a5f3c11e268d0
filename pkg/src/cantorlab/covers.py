"""Exact covering and packing counts for one-dimensional sets.

Conventions (all sets live in [0, 1], all scales are exact rationals):

* ``D(F, s)`` - minimal number of sets of diameter ``s`` covering F,
  realised by closed intervals of length ``s``;
* ``N(F, s)`` - minimal number of closed balls of radius ``s`` (length
  ``2s`` intervals) covering F;
* ``P(F, s)`` - maximal number of pairwise disjoint closed ``s``-balls
  with centres in F (consecutive centres more than ``2s`` apart).

All three reduce to one primitive: a left-to-right greedy sweep that
repeatedly places the next interval at the infimum of the uncovered
points and jumps forward by a fixed amount.  The greedy sweep is optimal
for fixed-length interval covering in 1D, and the same recurrence with
jump ``2s`` yields the maximal packing.  When the infimum of the
uncovered points is itself a (covered) accumulation point, the sweep
places the next interval exactly there; a cascade argument shows the
resulting count is still exact.

For generalised Cantor sets the sweep never walks interval-by-interval:
every depth-``n`` construction interval carries an identical point set up
to translation, so sweeping a whole subtree is a pure function of the
depth and of the incoming covered-through offset.  ``_SweepEngine``
memoises that function, which turns counts of order ``2**48`` into a few
hundred dictionary hits.  Cover counts are exact arbitrary-size integers
throughout.

Scales that do not interact cleanly with the construction lattice can
drive a point query past its depth cap; that raises ``UndecidableError``
(never an approximation).
"""

from __future__ import annotations

import bisect
import csv
import io
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInputError, UndecidableError
from .numerics import format_rational
from .setlab import CantorSet, SequenceSet, SequenceSetSpec, _iroot, interval

__all__ = [
    "FinitePointSet",
    "CoverProfile",
    "ProfileEntry",
    "WindowStat",
    "min_cover_count",
    "ball_cover_count",
    "packing_count",
    "local_cover_count",
    "canonical_window_count",
    "window_stats",
    "brute_force_min_cover",
    "sequence_set_cover",
    "compute_profile",
    "chain_violations",
]

ZERO = Fraction(0)
ONE = Fraction(1)

_MEMO_GUARD = 2_000_000  # hard stop against state explosion on hostile scales


class FinitePointSet:
    """Sorted finite point set with the same query surface as the fractal
    handles; used by the oracle tests and usable with every count below."""

    def __init__(self, points: Sequence[Fraction]):
        self.points = sorted(set(Fraction(p) for p in points))
        self.min_point = self.points[0] if self.points else None
        self.sup_point = self.points[-1] if self.points else None
        self.name = f"finite({len(self.points)})"

    def first_at_or_after(self, y: Fraction, depth_cap=None) -> Fraction | None:
        idx = bisect.bisect_left(self.points, y)
        return self.points[idx] if idx < len(self.points) else None

    def first_after(self, r: Fraction, depth_cap=None) -> tuple[Fraction, bool] | None:
        idx = bisect.bisect_right(self.points, r)
        if idx < len(self.points):
            return (self.points[idx], True)
        return None


# ---------------------------------------------------------------------------
# the memoised self-similar sweep


class _SweepEngine:
    """Greedy sweep with a fixed jump over one generalised Cantor set.

    ``window_sweep(level, covered)`` sweeps the point set of a depth-
    ``level`` construction interval, in coordinates relative to its left
    endpoint.  ``covered`` is the right end of the last placed interval
    (None when nothing reaches into this window).  Returns the number of
    placements made inside the window and the covered-through position on
    exit, which may overshoot into the following sibling.
    """

    __slots__ = ("cset", "jump", "base_level", "_succ_cap", "_memo")

    def __init__(self, cset: CantorSet, jump: Fraction):
        if jump <= 0:
            raise InvalidInputError("sweep jump must be positive")
        self.cset = cset
        self.jump = jump
        self.base_level = cset.level_for_scale(jump)
        self._succ_cap = 4 * (self.base_level + 2) + 8
        self._memo: dict = {}

    def succ_in_window(self, level: int, r: Fraction) -> tuple[Fraction, bool]:
        """First point strictly after r inside a depth-``level`` window,
        relative coordinates; requires 0 <= r < L_level."""
        seq = self.cset.seq
        lo = ZERO
        steps = 0
        while True:
            if r < lo:
                return (lo, True)
            if r == lo:
                return (lo, False)
            steps += 1
            if steps > self._succ_cap:
                raise UndecidableError(
                    f"successor of {format_rational(r)} in a level-{level} window "
                    f"unresolved after {steps - 1} levels (jump {format_rational(self.jump)})",
                    scale=self.jump, depth=steps - 1)
            node_len = seq.length(level)
            child_len = seq.length(level + 1)
            if r < lo + child_len:
                level += 1
                continue
            right_lo = lo + node_len - child_len
            if r < right_lo:
                return (right_lo, True)
            lo = right_lo
            level += 1

    def window_sweep(self, level: int, covered: Fraction | None) -> tuple[int, Fraction]:
        length = self.cset.length(level)
        if covered is not None:
            if covered < 0:
                covered = None  # normalise: any fully-uncovered state is the same
            elif covered >= length:
                return (0, covered)
        key = (level, covered)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self.jump >= length:
            if covered is None:
                result = (1, self.jump)
            else:
                point, _ = self.succ_in_window(level, covered)
                # one placement reaches past the window: point + jump >= L_level
                result = (1, point + self.jump)
        else:
            count_left, c_mid = self.window_sweep(level + 1, covered)
            shift = length - self.cset.length(level + 1)
            count_right, c_right = self.window_sweep(
                level + 1, None if c_mid is None else c_mid - shift)
            result = (count_left + count_right,
                      (c_right + shift) if c_right is not None else None)
        if len(self._memo) >= _MEMO_GUARD:
            raise UndecidableError(
                f"sweep state explosion at jump {format_rational(self.jump)}; "
                "scale is incompatible with the construction lattice",
                scale=self.jump)
        self._memo[key] = result
        return result

    def count(self, level: int = 0) -> int:
        # recursion depth tracks the base level; give the interpreter room
        needed = self.base_level + 64
        if sys.getrecursionlimit() < 4 * needed:
            sys.setrecursionlimit(4 * needed + 1000)
        k, _ = self.window_sweep(level, None)
        return k


def _engine(cset: CantorSet, jump: Fraction) -> _SweepEngine:
    with cset._lock:
        eng = cset._engines.get(jump)
        if eng is None:
            eng = _SweepEngine(cset, jump)
            cset._engines[jump] = eng
        return eng


def _greedy_count(handle, jump: Fraction, lo: Fraction | None = None,
                  hi: Fraction | None = None, depth_cap: int | None = None) -> int:
    """Literal placement-by-placement sweep via the handle's point queries.

    Used for finite sets and sequence sets, for bounded local windows, and
    as the oracle the engine is cross-checked against.
    """
    if handle.min_point is None:
        return 0
    start = handle.min_point if lo is None else max(lo, handle.min_point)
    first = handle.first_at_or_after(start, depth_cap)
    if first is None or (hi is not None and first > hi):
        return 0
    count = 1
    covered = first + jump
    while True:
        nxt = handle.first_after(covered, depth_cap)
        if nxt is None:
            break
        value, attained = nxt
        if hi is not None:
            # a virtual placement at the window edge covers nothing inside
            if value > hi or (not attained and value == hi):
                break
        count += 1
        covered = value + jump
    return count


def _count_at_jump(handle, jump: Fraction) -> int:
    if isinstance(handle, CantorSet):
        if jump >= ONE:
            return 1
        return _engine(handle, jump).count()
    return _greedy_count(handle, jump)


# ---------------------------------------------------------------------------
# public counting operations


def min_cover_count(handle, delta: Fraction) -> int:
    """Exact D(F, delta): minimal cover by closed length-``delta`` intervals."""
    delta = Fraction(delta)
    if delta <= 0:
        raise InvalidInputError("delta must be positive")
    return _count_at_jump(handle, delta)


def ball_cover_count(handle, delta: Fraction) -> int:
    """Exact N(F, delta): a delta-ball in R is a closed length-2*delta interval."""
    delta = Fraction(delta)
    if delta <= 0:
        raise InvalidInputError("delta must be positive")
    return _count_at_jump(handle, 2 * delta)


def packing_count(handle, delta: Fraction) -> int:
    """Exact P(F, delta) via the leftmost-first greedy packing.

    Centres must sit in F with consecutive centres more than 2*delta
    apart, which is the covering sweep's recurrence with jump 2*delta; in
    1D with closed balls the two greedy counts coincide.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise InvalidInputError("delta must be positive")
    return _count_at_jump(handle, 2 * delta)


def _local_count_cantor(cset: CantorSet, window_lo: Fraction, window_hi: Fraction,
                        rho: Fraction) -> int:
    """Exact D(C ∩ [window_lo, window_hi], rho) via the shared engine.

    The first placement comes from a direct point query; the remainder of
    the window decomposes into full construction subtrees (one memoised
    sweep each) plus a descent along the right boundary.
    """
    cap = cset.depth_cap_for_scale(rho) + cset.depth_cap_for_scale(
        window_hi - window_lo if window_hi > window_lo else rho)
    first = cset.first_at_or_after(max(window_lo, ZERO), cap)
    if first is None or first > window_hi:
        return 0
    eng = _engine(cset, rho)
    count = 1
    covered = first + rho

    def walk(lo: Fraction, level: int, c: Fraction) -> tuple[int, Fraction]:
        length = cset.length(level)
        hi = lo + length
        if hi <= c or lo > window_hi or c > window_hi:
            return (0, c)
        if hi <= window_hi:
            rel = c - lo
            if rel >= length:
                return (0, c)
            k, c_rel = eng.window_sweep(level, rel if rel >= 0 else None)
            return (k, c_rel + lo)
        # node straddles the window's right edge
        if length <= rho:
            placed = 0
            cc = c
            while True:
                if cc < lo:
                    point, attained = lo, True
                else:
                    rel = cc - lo
                    if rel >= length:
                        break
                    point_rel, attained = eng.succ_in_window(level, rel)
                    point = point_rel + lo
                if point > window_hi or (not attained and point == window_hi):
                    break
                placed += 1
                cc = point + rho
            return (placed, cc)
        child_len = cset.length(level + 1)
        k1, c1 = walk(lo, level + 1, c)
        k2, c2 = walk(hi - child_len, level + 1, c1)
        return (k1 + k2, c2)

    extra, _ = walk(ZERO, 0, covered)
    return count + extra


def local_cover_count(handle, x: Fraction, delta: Fraction, rho: Fraction,
                      validate: bool = True) -> int:
    """Exact D(B_delta(x) ∩ F, rho) for the closed ball [x-delta, x+delta].

    ``x`` must belong to F; degenerate windows with rho >= 2*delta come
    out as 1 since the whole window fits inside one diameter-rho set.
    """
    x, delta, rho = Fraction(x), Fraction(delta), Fraction(rho)
    if delta <= 0 or rho <= 0:
        raise InvalidInputError("delta and rho must be positive")
    if validate:
        at = handle.first_at_or_after(x)
        if at != x:
            raise InvalidInputError(f"x = {format_rational(x)} is not a point of the set")
    if isinstance(handle, CantorSet):
        return _local_count_cantor(handle, x - delta, x + delta, rho)
    return _greedy_count(handle, rho, lo=x - delta, hi=x + delta)


def canonical_window_count(cset: CantorSet, n: int, rho: Fraction) -> int:
    """Exact D(I ∩ C, rho) for a depth-n construction interval I.

    By translation congruence the count is the same for every depth-n
    interval, so it is computed once on the leftmost one and memoised.
    """
    rho = Fraction(rho)
    if rho <= 0:
        raise InvalidInputError("rho must be positive")
    if n < 0:
        raise InvalidInputError("level must be >= 0")
    key = (n, rho)
    cached = cset._canonical.get(key)
    if cached is not None:
        return cached
    if rho >= cset.length(n):
        count = 1
    else:
        count = _engine(cset, rho).count(level=n)
    with cset._lock:
        cset._canonical[key] = count
    return count


@dataclass(frozen=True)
class WindowStat:
    """Sampled extremes of local cover counts at one (delta, rho) window."""

    delta: Fraction
    rho: Fraction
    sup_sampled: int
    inf_sampled: int
    sample_size: int


def _cantor_candidates(cset: CantorSet, delta: Fraction, samples: int,
                       seed: int, endpoint_cap: int) -> list[Fraction]:
    import random

    n = cset.level_for_scale(delta)
    xs = {ZERO, ONE}
    for addr in cset.addresses_at_level(n, cap=endpoint_cap):
        node = interval(cset.seq, addr)
        xs.add(node.left)
        xs.add(node.right)
    rng = random.Random(seed)
    for _ in range(samples):
        addr = tuple(rng.randint(0, 1) for _ in range(n))
        xs.add(interval(cset.seq, addr).left)
    return sorted(xs)


def _sequence_candidates(sset: SequenceSet, delta: Fraction, rho: Fraction,
                         samples: int, seed: int, endpoint_cap: int) -> list[Fraction]:
    import random

    xs = {ZERO, ONE}
    for p in sset.points_at_least(delta)[:endpoint_cap]:
        xs.add(p)
    # random points down toward the rho-scale tail
    n_hi = max(2, _iroot(rho.denominator // rho.numerator, sset.alpha) + 1)
    rng = random.Random(seed)
    for _ in range(samples):
        xs.add(sset.point(rng.randint(1, n_hi)))
    return sorted(xs)


def window_stats(handle, delta: Fraction, rho: Fraction, samples: int = 64,
                 seed: int = 0, endpoint_cap: int = 32) -> WindowStat:
    """Sampled sup and inf of D(B_delta(x) ∩ F, rho) over candidate centres.

    Candidates mix the extreme points, the construction endpoints at the
    working level of ``delta`` (up to a cap) and ``samples`` seeded random
    addresses, so reports are reproducible.  The sampled sup is a lower
    bound for the true sup and the sampled inf an upper bound for the
    true inf; only inequalities sound under that containment should be
    asserted against these numbers.
    """
    delta, rho = Fraction(delta), Fraction(rho)
    if delta <= 0 or rho <= 0:
        raise InvalidInputError("delta and rho must be positive")
    if isinstance(handle, CantorSet):
        xs = _cantor_candidates(handle, delta, samples, seed, endpoint_cap)
    elif isinstance(handle, SequenceSet):
        xs = _sequence_candidates(handle, delta, rho, samples, seed, endpoint_cap)
    else:
        xs = list(handle.points)
    counts = [local_cover_count(handle, x, delta, rho, validate=False) for x in xs]
    return WindowStat(delta, rho, max(counts), min(counts), len(xs))


def brute_force_min_cover(points: Sequence[Fraction], delta: Fraction) -> int:
    """Independent oracle: minimal cover of a finite point set by closed
    length-``delta`` intervals, by dynamic programming over all interval
    placements anchored at points (not just the greedy anchor)."""
    delta = Fraction(delta)
    if delta <= 0:
        raise InvalidInputError("delta must be positive")
    pts = sorted(set(Fraction(p) for p in points))
    n = len(pts)
    if n == 0:
        return 0
    INF = float("inf")
    best = [INF] * (n + 1)
    best[n] = 0
    for i in range(n - 1, -1, -1):
        k = i
        while k >= 0 and pts[k] >= pts[i] - delta:
            nxt = bisect.bisect_right(pts, pts[k] + delta)
            if nxt > i:  # anchor must actually cover point i
                cand = 1 + best[nxt]
                if cand < best[i]:
                    best[i] = cand
            k -= 1
    assert best[0] != INF
    return int(best[0])


def sequence_set_cover(spec: SequenceSetSpec, delta: Fraction) -> int:
    """Exact D(F_alpha, delta) via the greedy sweep with analytic jumps."""
    return min_cover_count(SequenceSet(spec), delta)


# ---------------------------------------------------------------------------
# profiles


@dataclass(frozen=True)
class ProfileEntry:
    scale: Fraction
    countD: int
    countN: int
    countP: int


@dataclass(frozen=True)
class CoverProfile:
    """Exact D/N/P counts at a descending list of scales."""

    entries: tuple[ProfileEntry, ...]

    def scales(self) -> list[Fraction]:
        return [e.scale for e in self.entries]

    def entry_at(self, scale: Fraction) -> ProfileEntry | None:
        for e in self.entries:
            if e.scale == scale:
                return e
        return None

    def countD_at(self, scale: Fraction) -> int:
        e = self.entry_at(scale)
        if e is None:
            raise InvalidInputError(f"profile is missing scale {format_rational(scale)}")
        return e.countD

    def to_csv(self, stream=None) -> str:
        buffer = stream or io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["scale", "countD", "countN", "countP"])
        for e in self.entries:
            writer.writerow([format_rational(e.scale), e.countD, e.countN, e.countP])
        return buffer.getvalue() if stream is None else ""

    def to_rows(self) -> list[dict]:
        return [
            {"scale": format_rational(e.scale), "countD": e.countD,
             "countN": e.countN, "countP": e.countP}
            for e in self.entries
        ]


def compute_profile(handle, scales: Sequence[Fraction]) -> CoverProfile:
    """D, N and P at every scale, sorted by descending scale.

    N and P at a scale s are both realised by the jump-2s sweep, so the
    second sweep is shared.
    """
    uniq = sorted(set(Fraction(s) for s in scales), reverse=True)
    if not uniq:
        raise InvalidInputError("scale list is empty")
    if any(s <= 0 for s in uniq):
        raise InvalidInputError("scales must be positive")
    entries = []
    for s in uniq:
        d = min_cover_count(handle, s)
        np_count = _count_at_jump(handle, 2 * s)
        entries.append(ProfileEntry(s, d, np_count, np_count))
    return CoverProfile(tuple(entries))


def chain_violations(profile: CoverProfile) -> list[Fraction]:
    """Scales delta where D(4d) <= N(2d) <= P(d) <= D(d) fails; the first
    two comparisons need the 2d and 4d rows to be present."""
    bad = []
    for e in profile.entries:
        d = e.scale
        if not e.countP <= e.countD:
            bad.append(d)
            continue
        e2 = profile.entry_at(2 * d)
        e4 = profile.entry_at(4 * d)
        if e2 is not None and not e2.countN <= e.countP:
            bad.append(d)
            continue
        if e4 is not None and e2 is not None and not e4.countD <= e2.countN:
            bad.append(d)
    return bad
