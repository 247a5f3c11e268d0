"""Construction of generalised Cantor sets and related point sets.

A generalised Cantor set is built from ``[0, 1]`` by repeatedly keeping
the two outer ``lambda_i`` proportions of every interval and discarding
the open middle ``1 - 2*lambda_i`` proportion, with a possibly different
ratio ``lambda_i in (0, 1/2)`` at every step ``i``.  After ``n`` steps
the construction holds ``2**n`` disjoint closed intervals of common
length ``L_n = lambda_1 * ... * lambda_n``, ordered by left endpoint and
addressed by the binary string of left/right choices.

This module also builds the coupled pairs of Cantor sets driven by a
base ``q`` and a positive integer sequence ``a``: the two sets use
generator ``q`` everywhere except at a sparse sequence of indices where
one of them contracts by a deeper power of ``q``.  The two special index
sequences interleave, so the sets take turns growing their cover counts.
Sequence sets ``{n**(-alpha)} U {0}`` round out the zoo as the standard
example whose local and global scaling exponents disagree.

All coordinates are exact rationals.  Point queries descend the address
tree and either resolve exactly or raise ``UndecidableError`` at a depth
cap; they never return an approximation.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InvalidInputError, UndecidableError
from .numerics import format_rational

__all__ = [
    "GeneratorSequence",
    "ATermRule",
    "Lemma44Rule",
    "Lemma45Rule",
    "ConstantRule",
    "CustomRule",
    "PairSpec",
    "IntervalNode",
    "interval",
    "next_point",
    "CantorSet",
    "SequenceSetSpec",
    "SequenceSet",
    "sequence_set_points",
    "generators_from_pair",
    "lemma44_sequence",
    "lemma45_sequence",
]

HALF = Fraction(1, 2)
ZERO = Fraction(0)
ONE = Fraction(1)

# Fallback depth cap for bare point queries; sweep code passes caps
# derived from the working scale instead.
DEFAULT_DEPTH_CAP = 256


def _check_ratio(lam: Fraction, index: int) -> Fraction:
    if not ZERO < lam < HALF:
        raise InvalidInputError(
            f"generator lambda[{index}] = {format_rational(lam)} outside (0, 1/2)"
        )
    return lam


class GeneratorSequence:
    """Immutable rule ``i -> lambda_i`` defining a generalised Cantor set.

    Three forms: a constant ratio, an explicit list with a tail value, or
    powers ``q**e_i`` of a common base.  Ratios are validated on access:
    every ``lambda_i`` must lie in the open interval (0, 1/2).
    """

    __slots__ = ("kind", "_constant", "_values", "_tail", "q", "_exponent_fn",
                 "_min_exponent", "label", "_lengths", "_lock")

    def __init__(self, kind: str, *, constant=None, values=None, tail=None,
                 q=None, exponent_fn=None, min_exponent=1, label=""):
        self.kind = kind
        self._constant = constant
        self._values = values
        self._tail = tail
        self.q = q
        self._exponent_fn = exponent_fn
        self._min_exponent = min_exponent
        self.label = label or kind
        self._lengths = [ONE]  # L_0 = 1; grown on demand under the lock
        self._lock = threading.Lock()

    @classmethod
    def constant(cls, lam: Fraction) -> "GeneratorSequence":
        lam = Fraction(lam)
        _check_ratio(lam, 1)
        return cls("constant", constant=lam, label=f"constant({format_rational(lam)})")

    @classmethod
    def from_list(cls, lambdas: Sequence[Fraction], tail: Fraction | None = None) -> "GeneratorSequence":
        values = tuple(Fraction(v) for v in lambdas)
        if not values:
            raise InvalidInputError("explicit generator list must be non-empty")
        for i, v in enumerate(values, start=1):
            _check_ratio(v, i)
        tail_value = Fraction(tail) if tail is not None else values[-1]
        _check_ratio(tail_value, len(values) + 1)
        return cls("explicit", values=values, tail=tail_value, label="explicit-list")

    @classmethod
    def q_power(cls, q: Fraction, exponent_fn: Callable[[int], int],
                min_exponent: int = 1, label: str = "q-power") -> "GeneratorSequence":
        q = Fraction(q)
        if not ZERO < q < HALF:
            raise InvalidInputError(f"q = {format_rational(q)} outside (0, 1/2)")
        if min_exponent < 1:
            raise InvalidInputError("q-power exponents must be >= 1")
        return cls("q_power", q=q, exponent_fn=exponent_fn,
                   min_exponent=min_exponent, label=label)

    def exponent(self, i: int) -> int:
        """Exponent e_i for q-power sequences (lambda_i = q**e_i)."""
        if self.kind != "q_power":
            raise InvalidInputError("exponent() only defined for q-power sequences")
        e = self._exponent_fn(i)
        if e < 1:
            raise InvalidInputError(f"q-power exponent e[{i}] = {e} must be >= 1")
        return e

    def lambda_at(self, i: int) -> Fraction:
        """Contraction ratio at step i (1-based)."""
        if i < 1:
            raise InvalidInputError(f"generator index must be >= 1, got {i}")
        if self.kind == "constant":
            return self._constant
        if self.kind == "explicit":
            lam = self._values[i - 1] if i <= len(self._values) else self._tail
            return _check_ratio(lam, i)
        return _check_ratio(self.q ** self.exponent(i), i)

    def length(self, n: int) -> Fraction:
        """Exact interval length L_n = prod_{i<=n} lambda_i."""
        if n < 0:
            raise InvalidInputError(f"level must be >= 0, got {n}")
        if n < len(self._lengths):
            return self._lengths[n]
        with self._lock:
            while len(self._lengths) <= n:
                k = len(self._lengths)
                self._lengths.append(self._lengths[-1] * self.lambda_at(k))
        return self._lengths[n]

    def uniform_upper_bound(self) -> Fraction:
        """A ratio bounding every lambda_i from above (sup lambda_i)."""
        if self.kind == "constant":
            return self._constant
        if self.kind == "explicit":
            return max(max(self._values), self._tail)
        return self.q ** self._min_exponent

    def describe(self) -> dict:
        if self.kind == "constant":
            return {"kind": "constant", "lambda": format_rational(self._constant)}
        if self.kind == "explicit":
            return {
                "kind": "explicit",
                "lambdas": [format_rational(v) for v in self._values],
                "tail": format_rational(self._tail),
            }
        return {"kind": "q_power", "q": format_rational(self.q), "label": self.label}


# ---------------------------------------------------------------------------
# interleaved index sequences a_i


class ATermRule:
    """Deterministic rule producing the positive integer sequence a_i.

    Stored as a named rule rather than a materialised list so that
    arbitrarily many terms can be generated on demand.
    """

    name = "abstract"

    def __init__(self):
        self._terms: list[int] = []
        self._lock = threading.Lock()

    def _generate_next(self) -> int:  # pragma: no cover - overridden
        raise NotImplementedError

    def term(self, i: int) -> int:
        """a_i, 1-based."""
        if i < 1:
            raise InvalidInputError(f"sequence index must be >= 1, got {i}")
        if i > len(self._terms):
            with self._lock:
                while len(self._terms) < i:
                    value = self._generate_next()
                    if value < 1:
                        raise InvalidInputError(
                            f"a[{len(self._terms) + 1}] = {value} must be >= 1")
                    self._terms.append(value)
        return self._terms[i - 1]

    def prefix(self, count: int) -> list[int]:
        self.term(count)
        return self._terms[:count]

    def describe(self) -> dict:  # pragma: no cover - overridden
        return {"rule": self.name}


class Lemma44Rule(ATermRule):
    """Interleave ceil(beta*k) (odd slots) with ceil((1-beta)*k) (even slots)."""

    name = "lemma44"

    def __init__(self, beta: Fraction):
        super().__init__()
        beta = Fraction(beta)
        if not ZERO < beta < ONE:
            raise InvalidInputError(f"beta = {format_rational(beta)} outside (0, 1)")
        self.beta = beta

    def _generate_next(self) -> int:
        i = len(self._terms) + 1
        if i % 2 == 1:
            return math.ceil(self.beta * ((i + 1) // 2))
        return math.ceil((1 - self.beta) * (i // 2))

    def describe(self) -> dict:
        return {"rule": self.name, "beta": format_rational(self.beta)}


class Lemma45Rule(ATermRule):
    """Coupled recursion on the odd/even partial sums o_k and e_k.

    a_1 = 1, a_2 = ceil(g) + 1 with g = gamma/(1-gamma), then

        a_{2k+1} = ceil(b*e_k - o_k) + 1,    b = beta/(1-beta)
        a_{2k+2} = ceil(g*o_{k+1} - e_k) + 1

    Requires beta + gamma > 1, which forces both subsequences to grow
    without bound.
    """

    name = "lemma45"

    def __init__(self, beta: Fraction, gamma: Fraction):
        super().__init__()
        beta, gamma = Fraction(beta), Fraction(gamma)
        if not ZERO < beta < ONE or not ZERO < gamma < ONE:
            raise InvalidInputError("beta and gamma must lie in (0, 1)")
        if beta + gamma <= 1:
            raise InvalidInputError(
                f"beta + gamma = {format_rational(beta + gamma)} must exceed 1")
        self.beta = beta
        self.gamma = gamma
        self._b = beta / (1 - beta)
        self._g = gamma / (1 - gamma)
        self._odd_sum = 0
        self._even_sum = 0

    def _generate_next(self) -> int:
        i = len(self._terms) + 1
        if i == 1:
            value = 1
        elif i == 2:
            value = math.ceil(self._g) + 1
        elif i % 2 == 1:
            value = math.ceil(self._b * self._even_sum - self._odd_sum) + 1
        else:
            value = math.ceil(self._g * (self._odd_sum) - self._even_sum) + 1
        if i % 2 == 1:
            self._odd_sum += value
        else:
            self._even_sum += value
        return value

    def describe(self) -> dict:
        return {"rule": self.name, "beta": format_rational(self.beta),
                "gamma": format_rational(self.gamma)}


class ConstantRule(ATermRule):
    name = "constant"

    def __init__(self, value: int):
        super().__init__()
        if value < 1:
            raise InvalidInputError(f"constant a-value must be >= 1, got {value}")
        self.value = value

    def _generate_next(self) -> int:
        return self.value

    def describe(self) -> dict:
        return {"rule": self.name, "value": self.value}


class CustomRule(ATermRule):
    """Explicit finite prefix, optionally cycled to extend indefinitely."""

    name = "custom"

    def __init__(self, terms: Sequence[int], repeat: bool = False):
        super().__init__()
        if not terms:
            raise InvalidInputError("custom a-sequence must be non-empty")
        self._source = [int(t) for t in terms]
        self.repeat = repeat

    def _generate_next(self) -> int:
        i = len(self._terms)
        if i < len(self._source):
            return self._source[i]
        if self.repeat:
            return self._source[i % len(self._source)]
        raise InvalidInputError(
            f"custom a-sequence exhausted at index {i + 1} (repeat=False)")

    def describe(self) -> dict:
        return {"rule": self.name, "a": list(self._source), "repeat": self.repeat}


def lemma44_sequence(beta: Fraction, count: int) -> list[int]:
    """First ``count`` terms of the ceil(beta*k)/ceil((1-beta)*k) interleave."""
    if count < 1:
        raise InvalidInputError(f"count must be >= 1, got {count}")
    return Lemma44Rule(beta).prefix(count)


def lemma45_sequence(beta: Fraction, gamma: Fraction, count: int) -> list[int]:
    """First ``count`` terms of the coupled partial-sum recursion."""
    if count < 1:
        raise InvalidInputError(f"count must be >= 1, got {count}")
    return Lemma45Rule(beta, gamma).prefix(count)


class PairSpec:
    """Base q plus an a-sequence rule generating the coupled sets C and D.

    Derived index sequences (all 1-based in k):

    * ``n_k = a_1 + a_3 + ... + a_{2k-1}`` - indices where C contracts by
      ``q**(a_{2k}+1)`` instead of ``q``;
    * ``m_k = a_1 + (a_2 + a_4 + ... + a_{2k})`` - indices where D
      contracts by ``q**(a_{2k+1}+1)``;
    * ``s_k = a_1 + ... + a_k`` - plain prefix sums: the significant
      scales of the pair are exactly ``q**s_k``.
    """

    def __init__(self, q: Fraction, rule: ATermRule):
        q = Fraction(q)
        if not ZERO < q < HALF:
            raise InvalidInputError(f"q = {format_rational(q)} outside (0, 1/2)")
        self.q = q
        self.rule = rule
        self._n_index_of: dict[int, int] = {}  # n_k -> k
        self._m_index_of: dict[int, int] = {}  # m_k -> k
        self._n_list: list[int] = []
        self._m_list: list[int] = []
        self._lock = threading.Lock()

    def a(self, i: int) -> int:
        return self.rule.term(i)

    def s(self, k: int) -> int:
        return sum(self.rule.prefix(k))

    def odd_sum(self, k: int) -> int:
        """o_k = sum of the first k odd-indexed terms."""
        return sum(self.a(2 * j - 1) for j in range(1, k + 1))

    def even_sum(self, k: int) -> int:
        """e_k = sum of the first k even-indexed terms."""
        return sum(self.a(2 * j) for j in range(1, k + 1))

    def n_index(self, k: int) -> int:
        return self.odd_sum(k)

    def m_index(self, k: int) -> int:
        return self.a(1) + self.even_sum(k)

    def _grow_special(self, upto: int) -> None:
        with self._lock:
            while not self._n_list or self._n_list[-1] < upto:
                k = len(self._n_list) + 1
                n_k = (self._n_list[-1] if self._n_list else 0) + self.a(2 * k - 1)
                self._n_list.append(n_k)
                self._n_index_of[n_k] = k
            while not self._m_list or self._m_list[-1] < upto:
                k = len(self._m_list) + 1
                m_k = (self._m_list[-1] if self._m_list else self.a(1)) + self.a(2 * k)
                self._m_list.append(m_k)
                self._m_index_of[m_k] = k

    def c_exponent(self, i: int) -> int:
        """e_i for side C: a_{2k}+1 when i = n_k, else 1."""
        self._grow_special(i)
        k = self._n_index_of.get(i)
        return self.a(2 * k) + 1 if k is not None else 1

    def d_exponent(self, i: int) -> int:
        """e_i for side D: a_{2k+1}+1 when i = m_k, else 1."""
        self._grow_special(i)
        k = self._m_index_of.get(i)
        return self.a(2 * k + 1) + 1 if k is not None else 1

    def describe(self) -> dict:
        return {"q": format_rational(self.q), **self.rule.describe()}


def generators_from_pair(spec: PairSpec, side: str) -> GeneratorSequence:
    """Generator sequence for side ``"C"`` or ``"D"`` of a (q, a) pair."""
    side = side.upper()
    if side == "C":
        fn = spec.c_exponent
    elif side == "D":
        fn = spec.d_exponent
    else:
        raise InvalidInputError(f"side must be 'C' or 'D', got {side!r}")
    label = f"pair-{side}(q={format_rational(spec.q)}, {spec.rule.name})"
    return GeneratorSequence.q_power(spec.q, fn, min_exponent=1, label=label)


# ---------------------------------------------------------------------------
# exact interval geometry


@dataclass(frozen=True)
class IntervalNode:
    """One construction interval: exact left endpoint and length."""

    left: Fraction
    length: Fraction

    @property
    def right(self) -> Fraction:
        return self.left + self.length


def interval(seq: GeneratorSequence, address: Sequence[int]) -> IntervalNode:
    """Interval addressed by bits b_1..b_n (0 = left child, 1 = right child).

    The left endpoint is the sum of the sibling offsets ``L_{i-1} - L_i``
    picked up at every right turn; lexicographic address order therefore
    coincides with left-endpoint order.
    """
    left = ZERO
    for i, bit in enumerate(address, start=1):
        if bit not in (0, 1):
            raise InvalidInputError(f"address bit {i} must be 0 or 1, got {bit!r}")
        if bit:
            left += seq.length(i - 1) - seq.length(i)
    return IntervalNode(left, seq.length(len(address)))


def _descend_at_or_after(seq: GeneratorSequence, y: Fraction, depth_cap: int,
                         level: int = 0, lo: Fraction = ZERO) -> Fraction | None:
    """min{x in C : x >= y}, descending from the node (level, lo).

    Returns None when the node holds no such point (y beyond its right
    endpoint).  Non-terminating descents (y in C but never resolving to a
    construction endpoint or a gap) hit the depth cap.
    """
    steps = 0
    while True:
        if y <= lo:
            return lo
        node_len = seq.length(level)
        hi = lo + node_len
        if y > hi:
            return None
        if y == hi:
            return hi
        steps += 1
        if steps > depth_cap:
            raise UndecidableError(
                f"point query for {format_rational(y)} unresolved after {steps - 1} levels",
                scale=y, depth=steps - 1)
        child_len = seq.length(level + 1)
        if y <= lo + child_len:
            level += 1
            continue
        right_lo = hi - child_len
        if y <= right_lo:
            return right_lo
        lo = right_lo
        level += 1


def _descend_after(seq: GeneratorSequence, r: Fraction, depth_cap: int,
                   level: int = 0, lo: Fraction = ZERO) -> tuple[Fraction, bool] | None:
    """inf{x in C : x > r} within the node (level, lo), with attainment flag.

    ``(v, True)`` means v is a point of the set; ``(v, False)`` means v is
    the (unattained) infimum - r itself, a left construction endpoint with
    set points accumulating immediately to its right.
    """
    steps = 0
    while True:
        if r < lo:
            return (lo, True)
        if r == lo:
            return (lo, False)
        node_len = seq.length(level)
        hi = lo + node_len
        if r >= hi:
            return None
        steps += 1
        if steps > depth_cap:
            raise UndecidableError(
                f"successor query for {format_rational(r)} unresolved after {steps - 1} levels",
                scale=r, depth=steps - 1)
        child_len = seq.length(level + 1)
        if r < lo + child_len:
            level += 1
            continue
        right_lo = hi - child_len
        if r < right_lo:
            return (right_lo, True)
        lo = right_lo
        level += 1


def next_point(seq: GeneratorSequence, y: Fraction,
               depth_cap: int = DEFAULT_DEPTH_CAP) -> Fraction:
    """Smallest element of the Cantor set that is >= y.

    Construction endpoints return themselves; points inside a removed gap
    return the left endpoint of the next interval.  ``y > 1`` is out of
    range.
    """
    y = Fraction(y)
    if y > ONE:
        raise InvalidInputError(f"y = {format_rational(y)} exceeds the set's supremum 1")
    result = _descend_at_or_after(seq, y, depth_cap)
    assert result is not None  # y <= 1 guarantees a point
    return result


class CantorSet:
    """Handle for one generalised Cantor set: point queries plus caches.

    Immutable geometry; the caches (interval lengths, per-scale sweep
    engines, canonical window counts) self-populate under locks and are
    safe for concurrent readers.
    """

    def __init__(self, seq: GeneratorSequence, name: str = ""):
        self.seq = seq
        self.name = name or seq.label
        self.min_point = ZERO
        self.sup_point = ONE
        self._engines: dict = {}
        self._canonical: dict = {}
        self._lock = threading.Lock()

    def length(self, n: int) -> Fraction:
        return self.seq.length(n)

    def level_for_scale(self, scale: Fraction) -> int:
        """Smallest n with L_n <= scale (0 when scale >= 1)."""
        if scale <= 0:
            raise InvalidInputError("scale must be positive")
        n = 0
        while self.seq.length(n) > scale:
            n += 1
        return n

    def depth_cap_for_scale(self, scale: Fraction) -> int:
        # 4x the working level, padded so shallow scales keep headroom.
        return 4 * self.level_for_scale(scale) + 8

    def first_at_or_after(self, y: Fraction, depth_cap: int | None = None) -> Fraction | None:
        if y > ONE:
            return None
        return _descend_at_or_after(self.seq, Fraction(y),
                                    depth_cap or DEFAULT_DEPTH_CAP)

    def first_after(self, r: Fraction, depth_cap: int | None = None) -> tuple[Fraction, bool] | None:
        if r >= ONE:
            return None
        if r < ZERO:
            return (ZERO, True)
        return _descend_after(self.seq, Fraction(r), depth_cap or DEFAULT_DEPTH_CAP)

    def addresses_at_level(self, n: int, cap: int = 32) -> list[tuple[int, ...]]:
        """Structural sample of depth-n addresses: all of them if 2**n is
        small, otherwise the lexicographic head and tail."""
        if n == 0:
            return [()]
        total = 1 << n
        if total <= cap:
            indices = range(total)
        else:
            head = cap // 2
            indices = list(range(head)) + list(range(total - head, total))
        return [tuple((idx >> (n - 1 - b)) & 1 for b in range(n)) for idx in indices]

    def endpoint(self, address: Sequence[int], side: str = "left") -> Fraction:
        node = interval(self.seq, address)
        return node.left if side == "left" else node.right

    def __repr__(self) -> str:
        return f"CantorSet({self.name})"


# ---------------------------------------------------------------------------
# sequence sets F_alpha = {n**(-alpha)} U {0}


def _iroot(value: int, k: int) -> int:
    """floor(value ** (1/k)) for non-negative integers, exactly."""
    if value < 0:
        raise InvalidInputError("integer root of a negative value")
    if value == 0 or k == 1:
        return value
    guess = int(round(value ** (1.0 / k)))
    while guess > 0 and guess**k > value:
        guess -= 1
    while (guess + 1) ** k <= value:
        guess += 1
    return guess


@dataclass(frozen=True)
class SequenceSetSpec:
    """The point set {n**(-alpha) : n >= 1} together with 0."""

    alpha: Fraction

    def __post_init__(self):
        if Fraction(self.alpha) <= 0:
            raise InvalidInputError(f"alpha must be positive, got {self.alpha}")
        object.__setattr__(self, "alpha", Fraction(self.alpha))


class SequenceSet:
    """Exact point queries for F_alpha.

    The exact engine requires integer alpha so that every point
    ``n**(-alpha)`` is rational; non-integer rational alpha would need
    algebraic sign determination, which is out of scope.
    """

    def __init__(self, spec: SequenceSetSpec):
        alpha = spec.alpha
        if alpha.denominator != 1:
            raise InvalidInputError(
                "exact geometry for sequence sets requires integer alpha, "
                f"got {format_rational(alpha)}")
        self.spec = spec
        self.alpha = int(alpha)
        self.min_point = ZERO
        self.sup_point = ONE
        self.name = f"F_{self.alpha}"

    def point(self, n: int) -> Fraction:
        return Fraction(1, n**self.alpha)

    def first_at_or_after(self, y: Fraction, depth_cap: int | None = None) -> Fraction | None:
        y = Fraction(y)
        if y <= 0:
            return ZERO
        if y > ONE:
            return None
        # largest n with n**alpha <= 1/y
        n = _iroot(y.denominator // y.numerator, self.alpha)
        assert n >= 1
        return self.point(n)

    def first_after(self, r: Fraction, depth_cap: int | None = None) -> tuple[Fraction, bool] | None:
        r = Fraction(r)
        if r < 0:
            return (ZERO, True)
        if r == 0:
            # the tail accumulates at 0: infimum not attained
            return (ZERO, False)
        if r >= ONE:
            return None
        # largest n with n**alpha < 1/r, i.e. n**alpha <= ceil(1/r) - 1
        n = _iroot((r.denominator - 1) // r.numerator, self.alpha)
        if n < 1:
            return None
        return (self.point(n), True)

    def last_before(self, r: Fraction) -> Fraction | None:
        """Largest element strictly below r (used by the mirrored oracle)."""
        r = Fraction(r)
        if r <= 0:
            return None
        if r > ONE:
            return ONE
        # smallest n with n**(-alpha) < r, i.e. n**alpha > 1/r
        n = _iroot(r.denominator // r.numerator, self.alpha) + 1
        # n**(-alpha) could be arbitrarily small but always exists; 0 is
        # only reached as the limit, and it *is* an element.
        return self.point(n)

    def points_at_least(self, cutoff: Fraction) -> list[Fraction]:
        cutoff = Fraction(cutoff)
        if cutoff <= 0:
            raise InvalidInputError("cutoff must be positive")
        if cutoff > ONE:
            return []
        n_max = _iroot(cutoff.denominator // cutoff.numerator, self.alpha)
        return [self.point(n) for n in range(1, n_max + 1)]

    def __repr__(self) -> str:
        return f"SequenceSet(alpha={self.alpha})"


@dataclass(frozen=True)
class SequencePoints:
    """Head of F_alpha above a cutoff plus the tail marker.

    Everything not listed lies in [0, tail_below), including 0 itself.
    """

    points: tuple[Fraction, ...]
    tail_below: Fraction


def sequence_set_points(spec: SequenceSetSpec, cutoff: Fraction) -> SequencePoints:
    """All points n**(-alpha) >= cutoff in descending order, plus marker."""
    handle = SequenceSet(spec)
    return SequencePoints(tuple(handle.points_at_least(cutoff)), Fraction(cutoff))
