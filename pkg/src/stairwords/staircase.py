"""Staircase graph words of the extended path graph P_{n,L} over [k].

A word ``w_1 ... w_n`` qualifies when ``|w_i - w_j| <= 1`` for every pair
of positions at distance at most ``L``.  Valid words are counted three ways:

* ``brute_force_count`` enumerates words directly (the oracle);
* ``transfer_count`` walks the automaton whose states are the valid
  length-``L`` suffixes;
* the generating-function routes in :mod:`stairwords.genfun`.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import InstanceTooLarge, InvalidParams, InvalidState, LetterOutOfRange, ZeroModulus

BRUTE_FORCE_LIMIT = 10**8
DEFAULT_MAX_STATES = 10**4
DEFAULT_DIGIT_BUDGET = 250_000


@dataclass(frozen=True)
class StaircaseParams:
    k: int
    L: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise InvalidParams(f"alphabet size k must be an integer >= 2, got {self.k!r}")
        if not isinstance(self.L, int) or self.L < 1:
            raise InvalidParams(f"radius L must be an integer >= 1, got {self.L!r}")

    @property
    def n_states(self) -> int:
        return self.k + (self.k - 1) * (2**self.L - 2)

    def short_count(self, n: int) -> int:
        """Number of valid words of length ``n <= L``: any word spanning at most two adjacent letters."""
        if n == 0:
            return 1
        return self.k + (self.k - 1) * (2**n - 2)


def is_staircase(word: Sequence[int], params: StaircaseParams) -> bool:
    k, L = params.k, params.L
    for w in word:
        if not 1 <= w <= k:
            raise LetterOutOfRange(f"letter {w} is outside [1, {k}]")
    n = len(word)
    for i in range(n):
        for j in range(i + 1, min(n, i + L + 1)):
            if abs(word[i] - word[j]) > 1:
                return False
    return True


def _guard_brute(params: StaircaseParams, n: int) -> None:
    if n < 0:
        raise ValueError("word length must be non-negative")
    if params.k**n > BRUTE_FORCE_LIMIT:
        raise InstanceTooLarge(
            f"k^n = {params.k}^{n} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}"
        )


def brute_force_count(params: StaircaseParams, n: int, *, exhaustive: bool = False) -> int:
    """Count valid words of length ``n`` by enumeration.

    The default walks the tree of prefixes and abandons a prefix as soon as
    its newest letter conflicts with one of the previous ``L`` letters; since
    every prefix of a valid word is valid this visits exactly the valid
    prefixes.  ``exhaustive=True`` instead tests all ``k**n`` words with
    :func:`is_staircase`.
    """
    _guard_brute(params, n)
    if exhaustive:
        return sum(
            1 for w in itertools.product(range(1, params.k + 1), repeat=n) if is_staircase(w, params)
        )
    k, L = params.k, params.L
    word = [0] * n

    def extend(pos: int) -> int:
        if pos == n:
            return 1
        total = 0
        lo = max(0, pos - L)
        for y in range(1, k + 1):
            if all(abs(word[j] - y) <= 1 for j in range(lo, pos)):
                word[pos] = y
                total += extend(pos + 1)
        return total

    return extend(0)


def max_states() -> int:
    env = os.environ.get("STAIRCASE_MAX_STATES")
    return int(env) if env else DEFAULT_MAX_STATES


@dataclass(frozen=True)
class TransferMatrix:
    """0/1 transition matrix over the valid length-``L`` suffixes.

    ``matrix[i][j] == 1`` iff state ``j`` is state ``i`` shifted left by one
    letter plus a new letter that keeps the window valid.
    """

    params: StaircaseParams
    states: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]
    index: dict = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    def successors(self, i: int) -> list[int]:
        return [j for j, e in enumerate(self.matrix[i]) if e]

    def to_dot(self) -> str:
        lines = [f'digraph "staircase_k{self.params.k}_L{self.params.L}" {{', "  rankdir=LR;"]
        for i, s in enumerate(self.states):
            lines.append(f'  s{i} [label="{"".join(map(str, s)) if self.params.k < 10 else ",".join(map(str, s))}"];')
        for i in range(self.dim):
            for j in self.successors(i):
                lines.append(f'  s{i} -> s{j} [label="{self.states[j][-1]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _valid_window(letters: Sequence[int]) -> bool:
    return max(letters) - min(letters) <= 1


def enumerate_states(params: StaircaseParams) -> list[tuple[int, ...]]:
    """Valid suffixes in lexicographic order, built from base letter and offset pattern."""
    k, L = params.k, params.L
    out = [(a,) * L for a in range(1, k + 1)]
    for offsets in itertools.product((0, 1), repeat=L):
        if 0 < sum(offsets) < L:
            out.extend(tuple(a + o for o in offsets) for a in range(1, k))
    return sorted(out)


def build_suffix_automaton(params: StaircaseParams, limit: Optional[int] = None) -> TransferMatrix:
    limit = max_states() if limit is None else limit
    if params.n_states > limit:
        raise InstanceTooLarge(
            f"{params.n_states} suffix states exceed the bound {limit} "
            "(raise STAIRCASE_MAX_STATES to override)"
        )
    states = enumerate_states(params)
    index = {s: i for i, s in enumerate(states)}
    rows = []
    for s in states:
        row = [0] * len(states)
        lo, hi = min(s), max(s)
        for y in range(max(1, hi - 1), min(params.k, lo + 1) + 1):
            row[index[s[1:] + (y,)]] = 1
        rows.append(tuple(row))
    return TransferMatrix(params, tuple(states), tuple(rows), index)


# -- matrix powers ----------------------------------------------------------


def _matmul(a: list[list[int]], b: list[list[int]], mod: Optional[int]) -> list[list[int]]:
    cols = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, v) for k, v in enumerate(row) if v]
        new = []
        for col in cols:
            s = 0
            for k, v in nz:
                c = col[k]
                if c:
                    s += v * c
            new.append(s % mod if mod else s)
        out.append(new)
    return out


def _vecmat(v: list[int], m: Sequence[Sequence[int]], mod: Optional[int]) -> list[int]:
    n = len(m[0])
    out = [0] * n
    for i, vi in enumerate(v):
        if vi:
            row = m[i]
            for j in range(n):
                if row[j]:
                    out[j] += vi * row[j]
    if mod:
        out = [o % mod for o in out]
    return out


def _row_times_power(v: list[int], m: Sequence[Sequence[int]], e: int, mod: Optional[int]) -> list[int]:
    """``v * m**e`` by binary exponentiation, applying factors to the vector as they appear."""
    base = [list(r) for r in m]
    while e:
        if e & 1:
            v = _vecmat(v, base, mod)
        e >>= 1
        if e:
            base = _matmul(base, base, mod)
    return v


def _digit_estimate(n: int) -> int:
    # counts grow no faster than 3^n
    return int(n * 0.47712125472) + 1


def transfer_count(
    params: StaircaseParams,
    n: int,
    modulus: Optional[int] = None,
    *,
    automaton: Optional[TransferMatrix] = None,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> int:
    """Number of valid words of length ``n``, optionally reduced modulo ``modulus``."""
    if modulus is not None and modulus <= 0:
        raise ZeroModulus(f"modulus must be a positive integer, got {modulus}")
    if n < 0:
        raise ValueError("word length must be non-negative")
    if n <= params.L:
        c = params.short_count(n)
        return c % modulus if modulus else c
    if modulus is None and _digit_estimate(n) > digit_budget:
        raise InstanceTooLarge(
            f"exact count for n={n} may need ~{_digit_estimate(n)} digits (budget {digit_budget}); pass a modulus"
        )
    tm = automaton or build_suffix_automaton(params)
    v = _row_times_power([1] * tm.dim, tm.matrix, n - params.L, modulus)
    total = sum(v)
    return total % modulus if modulus else total


def count_series(params: StaircaseParams, terms: int, automaton: Optional[TransferMatrix] = None) -> list[int]:
    """Counts for lengths ``0 .. terms-1`` by stepping the automaton once per length."""
    out = [params.short_count(n) for n in range(min(terms, params.L + 1))]
    if terms <= params.L + 1:
        return out
    tm = automaton or build_suffix_automaton(params)
    v = [1] * tm.dim
    for _ in range(params.L + 1, terms):
        v = _vecmat(v, tm.matrix, None)
        out.append(sum(v))
    return out


def suffix_class_series(
    params: StaircaseParams,
    state: Sequence[int],
    terms: int,
    automaton: Optional[TransferMatrix] = None,
) -> list[int]:
    """Counts of valid words of each length ``0 .. terms-1`` ending in ``state``."""
    state = tuple(state)
    if len(state) != params.L or not all(1 <= a <= params.k for a in state) or not _valid_window(state):
        raise InvalidState(f"{state} is not a valid length-{params.L} suffix over [1, {params.k}]")
    tm = automaton or build_suffix_automaton(params)
    target = tm.index[state]
    out = [0] * min(terms, params.L)
    if terms <= params.L:
        return out
    v = [1] * tm.dim
    out.append(v[target])
    for _ in range(params.L + 1, terms):
        v = _vecmat(v, tm.matrix, None)
        out.append(v[target])
    return out


def reflect_state(params: StaircaseParams, state: Sequence[int]) -> tuple[int, ...]:
    return tuple(params.k + 1 - a for a in state)
