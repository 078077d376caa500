"""Exact k-spectra: the set of length-k scattered factors of a word.

A scattered factor of w is any word obtained by deleting positions from w,
i.e. a subsequence.  The k-spectrum is the set (no multiplicities) of the
distinct length-k scattered factors.

Two deliberately independent computation routes live here:

* ``spectrum`` materialises the set by walking the first-occurrence
  subsequence DAG, where every distinct factor corresponds to exactly one
  path (its greedy leftmost embedding), so no deduplication is needed.
* ``spectrum_cardinality`` counts without materialising, with the classic
  dynamic program that subtracts the count contributed at the previous
  occurrence of the same letter.

The two routes cross-check each other in the test suite; neither is derived
from the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .words import BinaryWord

__all__ = [
    "MAX_SET_K",
    "Spectrum",
    "FullSpectrum",
    "SpectrumCapError",
    "is_scattered_factor",
    "spectrum",
    "full_spectrum",
    "spectrum_cardinality",
    "subsequence_count_profile",
    "has_full_k_spectrum",
    "spectra_equal",
    "balanced_subspectrum",
]

#: largest k for which spectra are materialised as 2^k-bit sets (~4 MiB).
MAX_SET_K = 25


class SpectrumCapError(ValueError):
    """Raised when a set-valued spectrum is requested for k > MAX_SET_K."""


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Membership set over all 2^k length-k words, as a 2^k-bit integer.

    Bit v is set iff the word with packed code v (a=0, b=1, MSB-first)
    belongs to the set.  Ascending bit index equals lexicographic order.
    """

    k: int
    bits: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.k > MAX_SET_K:
            raise SpectrumCapError(
                f"set representation supports 0 <= k <= {MAX_SET_K}, got {self.k}"
            )
        if self.bits < 0 or self.bits >> (1 << self.k):
            raise ValueError("membership bits out of range for k")

    @classmethod
    def empty(cls, k: int) -> "Spectrum":
        return cls(k, 0)

    @classmethod
    def universe(cls, k: int) -> "Spectrum":
        return cls(k, (1 << (1 << k)) - 1)

    @classmethod
    def of(cls, k: int, words: "Iterator[BinaryWord] | list[BinaryWord]") -> "Spectrum":
        bits = 0
        for w in words:
            if w.length != k:
                raise ValueError(f"{w!r} has length {w.length}, expected {k}")
            bits |= 1 << w.bits
        return cls(k, bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, item: "BinaryWord | int") -> bool:
        code = item.bits if isinstance(item, BinaryWord) else item
        if isinstance(item, BinaryWord) and item.length != self.k:
            return False
        return bool((self.bits >> code) & 1)

    def words(self) -> Iterator[BinaryWord]:
        """Members in lexicographic (= packed-code) order."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield BinaryWord(low.bit_length() - 1, self.k)
            bits ^= low

    def _check_k(self, other: "Spectrum") -> None:
        if self.k != other.k:
            raise ValueError(f"mixed factor lengths {self.k} and {other.k}")

    def __and__(self, other: "Spectrum") -> "Spectrum":
        self._check_k(other)
        return Spectrum(self.k, self.bits & other.bits)

    def __or__(self, other: "Spectrum") -> "Spectrum":
        self._check_k(other)
        return Spectrum(self.k, self.bits | other.bits)

    def __xor__(self, other: "Spectrum") -> "Spectrum":
        self._check_k(other)
        return Spectrum(self.k, self.bits ^ other.bits)

    def __sub__(self, other: "Spectrum") -> "Spectrum":
        self._check_k(other)
        return Spectrum(self.k, self.bits & ~other.bits)

    def balanced_only(self) -> "Spectrum":
        """Restrict to strictly balanced members (empty for odd k)."""
        if self.k % 2:
            return Spectrum(self.k, 0)
        return Spectrum(self.k, self.bits & _balanced_mask(self.k))


@lru_cache(maxsize=None)
def _balanced_mask(k: int) -> int:
    # k even: codes whose popcount (= number of b's) is exactly k/2
    mask = 0
    for positions in combinations(range(k), k // 2):
        code = 0
        for p in positions:
            code |= 1 << p
        mask |= 1 << code
    return mask


@dataclass(frozen=True)
class FullSpectrum:
    """Spectra for every factor length 0..k of one word."""

    spectra: tuple[Spectrum, ...]

    def __getitem__(self, j: int) -> Spectrum:
        return self.spectra[j]

    def __len__(self) -> int:
        return len(self.spectra)

    def __iter__(self) -> Iterator[Spectrum]:
        return iter(self.spectra)


def is_scattered_factor(u: BinaryWord, w: BinaryWord) -> bool:
    """True iff u embeds into w as a subsequence (greedy left-to-right)."""
    if u.length > w.length:
        return False
    n, m = w.length, u.length
    wb, ub = w.bits, u.bits
    j = m - 1  # next symbol of u to match, as a bit offset from the right
    for i in range(n - 1, -1, -1):
        # scan w from the left by walking bit offsets from the top
        if j < 0:
            return True
        if ((wb >> i) & 1) == ((ub >> j) & 1):
            j -= 1
    return j < 0


def _next_occurrence_tables(w: BinaryWord) -> tuple[list[int], list[int]]:
    n = w.length
    syms = w.bit_tuple()
    nxt0 = [n] * (n + 1)
    nxt1 = [n] * (n + 1)
    for p in range(n - 1, -1, -1):
        nxt0[p] = p if syms[p] == 0 else nxt0[p + 1]
        nxt1[p] = p if syms[p] == 1 else nxt1[p + 1]
    return nxt0, nxt1


def _level_bits(w: BinaryWord, kmax: int, prune_for_top: bool) -> list[int]:
    """Membership bitmasks for every factor length 0..kmax.

    Depth-first walk of the first-occurrence DAG; each distinct factor is
    reached by exactly one path (its greedy embedding).  With
    ``prune_for_top`` branches that can no longer grow to length kmax are
    skipped (then only the top level is trustworthy).
    """
    n = w.length
    nxt0, nxt1 = _next_occurrence_tables(w)
    levels = [0] * (kmax + 1)
    levels[0] = 1
    if kmax == 0:
        return levels
    stack = [(0, 0, 0)]  # (scan position, depth, packed prefix)
    while stack:
        pos, depth, code = stack.pop()
        new_depth = depth + 1
        for sym, nxt in ((0, nxt0), (1, nxt1)):
            p = nxt[pos]
            if p >= n:
                continue
            if prune_for_top and new_depth + (n - p - 1) < kmax:
                continue
            child = (code << 1) | sym
            levels[new_depth] |= 1 << child
            if new_depth < kmax:
                stack.append((p + 1, new_depth, child))
    return levels


def spectrum(w: BinaryWord, k: int) -> Spectrum:
    """The set of distinct length-k scattered factors of w.

    Empty for k > |w|; k is capped at MAX_SET_K by the set representation.
    """
    if k < 0:
        raise ValueError(f"negative factor length {k}")
    if k > MAX_SET_K:
        raise SpectrumCapError(
            f"spectrum sets support k <= {MAX_SET_K}; "
            "use spectrum_cardinality for larger k"
        )
    if k > w.length:
        return Spectrum.empty(k)
    return Spectrum(k, _level_bits(w, k, prune_for_top=True)[k])


def full_spectrum(w: BinaryWord, k: int) -> FullSpectrum:
    """Spectra of w for all lengths 0..k."""
    if k < 0:
        raise ValueError(f"negative factor length {k}")
    if k > MAX_SET_K:
        raise SpectrumCapError(f"spectrum sets support k <= {MAX_SET_K}")
    levels = _level_bits(w, min(k, w.length), prune_for_top=False)
    spectra = [Spectrum(j, levels[j]) if j <= w.length else Spectrum.empty(j)
               for j in range(k + 1)]
    return FullSpectrum(tuple(spectra))


def subsequence_count_profile(w: BinaryWord, max_k: int | None = None) -> tuple[int, ...]:
    """counts[j] = number of distinct length-j scattered factors, j = 0..max_k.

    One pass of the counting DP: processing position p with letter x,
    counts[j] gains counts[j-1] minus whatever counts[j-1] held just before
    the previous occurrence of x (those factors were already contributed).
    """
    n = w.length
    top = n if max_k is None else min(max_k, n)
    counts = [0] * (top + 1)
    counts[0] = 1
    prev: list[list[int] | None] = [None, None]  # snapshots per letter
    syms = w.bit_tuple()
    for p in range(n):
        x = syms[p]
        before = counts.copy()
        old = prev[x]
        hi = min(p + 1, top)
        if old is None:
            for j in range(hi, 0, -1):
                counts[j] += counts[j - 1]
        else:
            for j in range(hi, 0, -1):
                counts[j] += counts[j - 1] - old[j - 1]
        prev[x] = before
    if max_k is not None and max_k > n:
        counts.extend([0] * (max_k - n))
    return tuple(counts)


def spectrum_cardinality(w: BinaryWord, k: int) -> int:
    """|spectrum(w, k)| without materialising the set; exact for any size."""
    if k < 0:
        raise ValueError(f"negative factor length {k}")
    if k > w.length:
        return 0
    return subsequence_count_profile(w, max_k=k)[k]


def has_full_k_spectrum(w: BinaryWord, k: int) -> bool:
    """True iff every length-k word is a scattered factor of w.

    Decided by a linear scan: the spectrum is full iff w contains k disjoint
    adjacent mixed pairs (each contributing a free a-or-b choice), which is
    equivalent to some member of {ab, ba}^k embedding into w.
    """
    if k < 0:
        raise ValueError(f"negative factor length {k}")
    syms = w.bit_tuple()
    n = len(syms)
    pairs = 0
    i = 0
    while i + 1 < n:
        if syms[i] != syms[i + 1]:
            pairs += 1
            if pairs >= k:
                return True
            i += 2
        else:
            i += 1
    return pairs >= k


def spectra_equal(w1: BinaryWord, w2: BinaryWord, k: int) -> bool:
    """Set equality of the two k-spectra."""
    return spectrum(w1, k).bits == spectrum(w2, k).bits


def balanced_subspectrum(w: BinaryWord, k: int) -> Spectrum:
    """spectrum(w, k) restricted to strictly balanced members."""
    if k % 2:
        return Spectrum.empty(k)
    return spectrum(w, k).balanced_only()
