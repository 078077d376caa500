"""Binary words over {a, b}.

Words are packed into plain integers, one bit per symbol (a = 0, b = 1),
most significant bit first.  For a fixed length this packing is exactly the
lexicographic order with a < b, and it is the single word <-> integer
bijection used everywhere else in the package (spectra, CSV/JSON output,
the explorer's enumeration order).

Besides the representation, this module provides the two symmetries that
leave spectrum cardinalities invariant (reversal and letter renaming), the
canonical orbit representative, maximal-run decompositions, balance
predicates, and constructors for the parametric word families the rest of
the package studies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

__all__ = [
    "BinaryWord",
    "BlockDecomposition",
    "BalanceClass",
    "ParseError",
    "FamilyParameterError",
    "EPSILON",
    "parse",
    "from_runs",
    "alternating",
    "family",
    "FAMILIES",
    "is_theta_palindrome",
    "all_words",
    "strictly_balanced_words",
]


class ParseError(ValueError):
    """Raised for text that is not a word over {a, b}.

    ``position`` is the 1-based index of the offending character.
    """

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class FamilyParameterError(ValueError):
    """Raised when a family constructor gets parameters outside its range."""


def _reverse_bits(code: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 1) | (code & 1)
        code >>= 1
    return out


@dataclass(frozen=True, slots=True)
class BinaryWord:
    """An immutable word over {a, b}, bit-packed MSB-first (a=0, b=1)."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(
                f"bits 0x{self.bits:x} do not fit in {self.length} symbols"
            )

    # -- construction ------------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "BinaryWord":
        bits = 0
        for i, ch in enumerate(text):
            if ch == "a":
                bits <<= 1
            elif ch == "b":
                bits = (bits << 1) | 1
            else:
                raise ParseError(
                    f"invalid character {ch!r} at position {i + 1}: "
                    "words may contain only 'a' and 'b'",
                    position=i + 1,
                )
        return cls(bits, len(text))

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        if self.length == 0:
            return ""
        return format(self.bits, f"0{self.length}b").translate(_BIT_TO_AB)

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"

    def __getitem__(self, i: int) -> str:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return "b" if (self.bits >> (self.length - 1 - i)) & 1 else "a"

    def __iter__(self) -> Iterator[str]:
        return iter(str(self))

    def bit_tuple(self) -> tuple[int, ...]:
        """Symbols as 0/1 integers, leftmost first."""
        n = self.length
        return tuple((self.bits >> (n - 1 - i)) & 1 for i in range(n))

    @property
    def b_count(self) -> int:
        return self.bits.bit_count()

    @property
    def a_count(self) -> int:
        return self.length - self.bits.bit_count()

    @property
    def balance(self) -> int:
        """c such that the word is c-balanced: | #a - #b |."""
        return abs(self.a_count - self.b_count)

    @property
    def is_strictly_balanced(self) -> bool:
        return self.length == 2 * self.bits.bit_count()

    # -- symmetries ----------------------------------------------------------

    def reverse(self) -> "BinaryWord":
        return BinaryWord(_reverse_bits(self.bits, self.length), self.length)

    def rename(self) -> "BinaryWord":
        """Complement every symbol (a <-> b)."""
        mask = (1 << self.length) - 1
        return BinaryWord(self.bits ^ mask, self.length)

    def orbit(self) -> tuple["BinaryWord", ...]:
        """The words reachable by reversal and renaming, duplicates removed."""
        seen: dict[int, BinaryWord] = {}
        for w in (self, self.reverse(), self.rename(), self.reverse().rename()):
            seen.setdefault(w.bits, w)
        return tuple(seen[b] for b in sorted(seen))

    def canonical(self) -> "BinaryWord":
        """Lexicographically smallest member of the symmetry orbit."""
        return BinaryWord(canonical_code(self.bits, self.length), self.length)

    # -- concatenation -------------------------------------------------------

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        return BinaryWord(
            (self.bits << other.length) | other.bits, self.length + other.length
        )

    def __mul__(self, times: int) -> "BinaryWord":
        if times < 0:
            raise ValueError("negative repetition")
        out = EPSILON
        for _ in range(times):
            out = out + self
        return out


_BIT_TO_AB = str.maketrans("01", "ab")

EPSILON = BinaryWord(0, 0)


def parse(text: str) -> BinaryWord:
    """Parse a word from its textual form (lowercase a/b, no separators)."""
    return BinaryWord.from_text(text)


def canonical_code(code: int, n: int) -> int:
    """Packed code of the orbit representative, without building objects."""
    mask = (1 << n) - 1
    rev = _reverse_bits(code, n)
    return min(code, rev, code ^ mask, rev ^ mask)


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal-run decomposition: ordered (symbol, length) pairs."""

    runs: tuple[tuple[str, int], ...]

    def expand(self) -> BinaryWord:
        return from_runs(self.runs)

    def count(self, symbol: str) -> int:
        return sum(1 for s, _ in self.runs if s == symbol)

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)


def blocks(w: BinaryWord) -> BlockDecomposition:
    """Split ``w`` into maximal runs of equal symbols."""
    runs: list[tuple[str, int]] = []
    for ch in w:
        if runs and runs[-1][0] == ch:
            runs[-1] = (ch, runs[-1][1] + 1)
        else:
            runs.append((ch, 1))
    return BlockDecomposition(tuple(runs))


@dataclass(frozen=True)
class BalanceClass:
    """How unbalanced a word is: c = | #a - #b |."""

    c: int
    strictly_balanced: bool

    @classmethod
    def of_word(cls, w: BinaryWord) -> "BalanceClass":
        c = w.balance
        return cls(c=c, strictly_balanced=(c == 0))


def is_theta_palindrome(w: BinaryWord) -> bool:
    """True iff reversing the word equals complementing it."""
    return w.reverse() == w.rename()


# -- family constructors ---------------------------------------------------


def from_runs(runs: Iterable[tuple[str, int]]) -> BinaryWord:
    """Build a word from (symbol, exponent) pairs; exponents may be zero."""
    bits = 0
    length = 0
    for sym, count in runs:
        if count < 0:
            raise FamilyParameterError(f"negative exponent {count} for {sym!r}")
        if sym == "a":
            bits <<= count
        elif sym == "b":
            bits = (bits << count) | ((1 << count) - 1)
        else:
            raise ParseError(f"invalid symbol {sym!r}", position=length + 1)
        length += count
    return BinaryWord(bits, length)


def alternating(n: int) -> BinaryWord:
    """The length-n prefix of ababab..."""
    if n < 0:
        raise FamilyParameterError(f"alternating: requires n >= 0, got n={n}")
    bits = 0
    for i in range(n):
        bits = (bits << 1) | (i & 1)
    return BinaryWord(bits, n)


def _require(cond: bool, family_name: str, constraint: str, **params) -> None:
    if not cond:
        shown = ", ".join(f"{k}={v}" for k, v in params.items())
        raise FamilyParameterError(f"{family_name}: requires {constraint} (got {shown})")


def _fam_akbk(k: int) -> BinaryWord:
    _require(k >= 0, "a^k b^k", "k >= 0", k=k)
    return from_runs([("a", k), ("b", k)])


def _fam_split(k: int, i: int) -> BinaryWord:
    _require(0 <= i <= k, "split", "0 <= i <= k", k=k, i=i)
    return from_runs([("a", k - i), ("b", k), ("a", i)])


def _fam_near_universal(k: int, i: int) -> BinaryWord:
    _require(k >= 2 and 0 <= i <= k - 2, "near-universal", "k >= 2 and 0 <= i <= k-2", k=k, i=i)
    return alternating(2 * i) + from_runs([("a", 2), ("b", 2)]) + alternating(2 * (k - i - 2))


def _fam_pivot(k: int) -> BinaryWord:
    _require(k >= 1, "pivot", "k >= 1", k=k)
    return from_runs([("a", k - 1), ("b", 1), ("a", 1), ("b", k - 1)])


def _fam_rotated(k: int) -> BinaryWord:
    _require(k >= 1, "rotated", "k >= 1", k=k)
    return from_runs([("a", k - 1), ("b", k), ("a", 1)])


def _fam_ab_power_a(k: int, c: int) -> BinaryWord:
    _require(0 <= c <= k, "ab-power-a", "0 <= c <= k", k=k, c=c)
    return alternating(2 * (k - c)) + from_runs([("a", c)])


def _fam_five_block(k: int, j: int) -> BinaryWord:
    _require(k >= 2 and 0 <= j <= k, "five-block", "k >= 2 and 0 <= j <= k", k=k, j=j)
    return from_runs([("a", k - 2), ("b", j), ("a", 1), ("b", k - j), ("a", 1)])


def _fam_four_block(k: int, j: int) -> BinaryWord:
    _require(k >= 2 and 0 <= j <= k, "four-block", "k >= 2 and 0 <= j <= k", k=k, j=j)
    return from_runs([("a", k - 2), ("b", j), ("a", 2), ("b", k - j)])


def _fam_four_block_fixed(k: int) -> BinaryWord:
    _require(k >= 2, "four-block-fixed", "k >= 2", k=k)
    return from_runs([("a", k - 1), ("b", 2), ("a", 1), ("b", k - 2)])


def _block_power_parts(k: int, i: int) -> tuple[int, int]:
    d, r = k // i, k % i
    return d, r


def _fam_block_power(k: int, i: int) -> BinaryWord:
    _require(i >= 1 and k >= i, "block-power", "1 <= i <= k", k=k, i=i)
    d, r = _block_power_parts(k, i)
    return from_runs([("a", r), ("b", r)]) + from_runs([("a", d), ("b", d)]) * i


def _fam_block_power_tail(k: int, i: int) -> BinaryWord:
    _require(i >= 2 and k >= i, "block-power-tail", "2 <= i <= k", k=k, i=i)
    d, r = _block_power_parts(k, i)
    d2, r2 = _block_power_parts(k, i - 1)
    return (
        from_runs([("a", r), ("b", r2)])
        + from_runs([("a", d), ("b", d2)]) * (i - 1)
        + from_runs([("a", d)])
    )


def _fam_gap_tail(k: int, i: int) -> BinaryWord:
    _require(
        k >= 3 and 0 <= i <= k - 3,
        "gap-tail",
        "k >= 3 and 0 <= i <= k-3 (the alternating exponent k-3-i must be nonnegative)",
        k=k,
        i=i,
    )
    return (
        from_runs([("a", 2), ("b", 2)])
        + alternating(2 * (k - 3 - i))
        + from_runs([("b", 1), ("a", 1)])
        + alternating(2 * i)
    )


def _fam_theta_seed(k: int) -> BinaryWord:
    _require(k >= 1, "theta-seed", "k >= 1", k=k)
    return from_runs([("a", 1), ("b", k - 1), ("a", k - 1), ("b", 1)])


#: family id -> (constructor, parameter names, run pattern)
FAMILIES: dict[str, tuple[Callable[..., BinaryWord], tuple[str, ...], str]] = {
    "akbk": (_fam_akbk, ("k",), "a^k b^k"),
    "split": (_fam_split, ("k", "i"), "a^{k-i} b^k a^i"),
    "near-universal": (_fam_near_universal, ("k", "i"), "(ab)^i a^2 b^2 (ab)^{k-i-2}"),
    "pivot": (_fam_pivot, ("k",), "a^{k-1} b a b^{k-1}"),
    "rotated": (_fam_rotated, ("k",), "a^{k-1} b^k a"),
    "ab-power-a": (_fam_ab_power_a, ("k", "c"), "(ab)^{k-c} a^c"),
    "alternating": (alternating, ("n",), "length-n prefix of (ab)(ab)(ab)..."),
    "five-block": (_fam_five_block, ("k", "j"), "a^{k-2} b^j a b^{k-j} a"),
    "four-block": (_fam_four_block, ("k", "j"), "a^{k-2} b^j a^2 b^{k-j}"),
    "four-block-fixed": (_fam_four_block_fixed, ("k",), "a^{k-1} b^2 a b^{k-2}"),
    "block-power": (_fam_block_power, ("k", "i"), "a^r b^r (a^d b^d)^i with d=k//i, r=k-d*i"),
    "block-power-tail": (
        _fam_block_power_tail,
        ("k", "i"),
        "a^r b^r' (a^d b^d')^{i-1} a^d with d=k//i, d'=k//(i-1)",
    ),
    "gap-tail": (_fam_gap_tail, ("k", "i"), "a^2 b^2 (ab)^{k-3-i} b a (ab)^i"),
    "theta-seed": (_fam_theta_seed, ("k",), "a b^{k-1} a^{k-1} b"),
}


def family(name: str, **params: int) -> BinaryWord:
    """Build a parametric family word by id; see FAMILIES for the patterns."""
    try:
        builder, names, _ = FAMILIES[name]
    except KeyError:
        raise FamilyParameterError(
            f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}"
        ) from None
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise FamilyParameterError(
            f"{name}: takes parameters {names}, got {tuple(sorted(params))}"
        )
    return builder(**params)


# -- enumeration helpers ---------------------------------------------------


def all_words(n: int) -> Iterator[BinaryWord]:
    """All 2^n words of length n in lexicographic order."""
    for code in range(1 << n):
        yield BinaryWord(code, n)


def strictly_balanced_words(k: int) -> Iterator[BinaryWord]:
    """All strictly balanced words of length 2k in lexicographic order."""
    n = 2 * k
    for code in range(1 << n):
        if code.bit_count() == k:
            yield BinaryWord(code, n)
