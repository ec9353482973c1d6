"""Periods, borders, local periods, and the running complexity average.

The local period at position i of w (split u = w[:i], v = w[i:]) is the
length of the shortest nonempty word that is suffix-comparable with u and
prefix-comparable with v, where "comparable" means one word is a suffix
(resp. prefix) of the other. For a finite word it is always defined and
equals 1 at the last position; for an infinite word the search is bounded
by an explicit cap and may come back CapExceeded.

All averaged quantities are exact fractions.Fraction values; nothing here
rounds.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .words import BINARY, Alphabet, WordSource

SQUARE = "square"
RIGHT_OVERHANG = "right-overhang"
LEFT_OVERHANG = "left-overhang"
DOUBLE_OVERHANG = "double-overhang"


def _arr(w: str) -> np.ndarray:
    # equality-only kernels just need consistent byte codes, ASCII is fine
    return np.frombuffer(w.encode("ascii"), np.uint8)


@dataclass(frozen=True)
class RepetitionWitness:
    """Shortest repetition word at a position: its length, match shape, letters."""

    length: int
    case: str
    word: str


@dataclass(frozen=True)
class CapExceeded:
    """No repetition word of length <= cap was found (a value, not an error)."""

    cap: int


def period(w: str) -> int:
    """Least p >= 1 with w[i] == w[i+p] wherever both sides exist."""
    if not w:
        raise ValueError("the empty word has no period")
    return int(kernels.active.period_of(_arr(w)))


def shortest_border(w: str) -> str | None:
    """Shortest nonempty proper prefix that is also a suffix, or None."""
    if not w:
        raise ValueError("empty word")
    b = int(kernels.active.shortest_border_length(_arr(w)))
    return w[:b] if b else None


def is_unbordered(w: str) -> bool:
    return shortest_border(w) is None


def is_primitive(w: str) -> bool:
    """True unless w is a repeated copy of a strictly shorter word."""
    p = period(w)
    return p == len(w) or len(w) % p != 0


def least_conjugate(w: str, alphabet: Alphabet = BINARY) -> str:
    """Lexicographically least rotation of w under the alphabet order."""
    if not w:
        raise ValueError("empty word")
    idx = int(kernels.active.least_rotation_index(alphabet.encode(w)))
    return w[idx:] + w[:idx]


def is_lyndon(w: str, alphabet: Alphabet = BINARY) -> bool:
    """Primitive and equal to its least conjugate (hence unbordered)."""
    if not w:
        return False
    return is_primitive(w) and least_conjugate(w, alphabet) == w


def _case_of(length: int, i: int, lv: int) -> str:
    if length <= i and length <= lv:
        return SQUARE
    if length <= lv:
        return RIGHT_OVERHANG
    if length <= i:
        return LEFT_OVERHANG
    return DOUBLE_OVERHANG


def local_period(w: str, i: int) -> RepetitionWitness:
    """Shortest repetition word at position i of the finite word w.

    The scan tries lengths upward; at each length exactly one of the four
    match shapes applies, and length |w| always matches, so the minimum the
    scan returns is certified by exhaustion of everything shorter.
    """
    n = len(w)
    if not 1 <= i <= n:
        raise ValueError(f"position {i} outside 1..{n}")
    L = int(kernels.active.local_period_finite(_arr(w), i))
    lv = n - i
    case = _case_of(L, i, lv)
    if case in (SQUARE, RIGHT_OVERHANG):
        word = w[i:i + L]
    elif case == LEFT_OVERHANG:
        word = w[i - L:i]
    else:
        # both ends overhang: r carries v as prefix and u as suffix, and for
        # L <= |w| those two parts cover every letter of r
        chars = [""] * L
        v = w[i:]
        for k in range(lv):
            chars[k] = v[k]
        u = w[:i]
        for k in range(i):
            chars[L - i + k] = u[k]
        word = "".join(chars)
    return RepetitionWitness(L, case, word)


def local_period_infinite(source: WordSource, i: int, cap: int) -> RepetitionWitness | CapExceeded:
    """Shortest repetition word at position i of an infinite word, up to cap.

    The repetition word must be a prefix of the right side, so only the
    square and right-overhang shapes occur.
    """
    if i < 1:
        raise ValueError("positions are 1-based")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    buf = source.ranks(i + cap)
    L = int(kernels.active.local_period_stream(buf, i, cap))
    if L == 0:
        return CapExceeded(cap)
    case = SQUARE if L <= i else RIGHT_OVERHANG
    return RepetitionWitness(L, case, source.prefix(i + L)[i:i + L])


def local_period_oracle(w: str, i: int, alphabet: Alphabet = BINARY) -> int:
    """Independent reference: enumerate all candidate repetition words.

    Exponential in |w|; guarded to |w| <= 16.
    """
    n = len(w)
    if n > 16:
        raise ValueError("oracle is exponential; |w| <= 16 only")
    if not 1 <= i <= n:
        raise ValueError(f"position {i} outside 1..{n}")
    return int(kernels.active.oracle_local_period(alphabet.encode(w), i, alphabet.size))


@dataclass
class PeriodProfile:
    """Local periods at positions 1..n plus exact running averages.

    local_periods holds ints, with None marking a cap-exceeded scan; the
    running average h(i) is defined only while no marker occurred yet.
    """

    descriptor: str
    local_periods: list
    cap: int | None = None

    def __post_init__(self):
        self._h: list | None = None

    @property
    def n(self) -> int:
        return len(self.local_periods)

    def h_values(self) -> list:
        if self._h is None:
            out = []
            total = 0
            dead = False
            for i, p in enumerate(self.local_periods, 1):
                if dead or p is None:
                    dead = True
                    out.append(None)
                else:
                    total += p
                    out.append(Fraction(total, i))
            self._h = out
        return self._h

    def h_at(self, i: int) -> Fraction | None:
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} outside 1..{self.n}")
        return self.h_values()[i - 1]

    def rows(self) -> list[dict]:
        """One dict per position, rationals split into numerator/denominator."""
        out = []
        for i, (p, h) in enumerate(zip(self.local_periods, self.h_values()), 1):
            row = {
                "index": i,
                "local_period": "CAP" if p is None else p,
                "h_numerator": None if h is None else h.numerator,
                "h_denominator": None if h is None else h.denominator,
                "h_approx": None if h is None else float(h),
            }
            out.append(row)
        return out

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "n": self.n,
            "cap": self.cap,
            "rows": self.rows(),
        }


def profile(subject, n: int | None = None, cap: int | None = None) -> PeriodProfile:
    """Local periods at every position of a finite word or a source prefix.

    For a WordSource, n is required and cap defaults to 4n + 64.
    """
    if isinstance(subject, str):
        if not subject:
            raise ValueError("empty word")
        lps = kernels.active.local_periods_finite(_arr(subject))
        return PeriodProfile(subject, [int(v) for v in lps], cap=None)
    if n is None:
        raise ValueError("need n for an infinite word")
    if cap is None:
        cap = 4 * n + 64
    buf = subject.ranks(n + cap)
    lps = kernels.active.local_periods_stream(buf, n, cap)
    vals = [int(v) if v else None for v in lps]
    return PeriodProfile(subject.descriptor, vals, cap=cap)


def h_of(w: str) -> Fraction:
    """Mean of the local periods over all positions of a finite word."""
    if not w:
        raise ValueError("empty word")
    lps = kernels.active.local_periods_finite(_arr(w))
    return Fraction(int(lps.sum()), len(w))


def local_period_sum(w: str) -> int:
    """Integer sum of all local periods of w (|w| times h(w))."""
    if not w:
        return 0
    return int(kernels.active.local_periods_finite(_arr(w)).sum())


def critical_positions(w: str) -> list[int]:
    """All positions whose local period equals the period of w, ascending."""
    if not w:
        raise ValueError("empty word")
    arr = _arr(w)
    p = int(kernels.active.period_of(arr))
    lps = kernels.active.local_periods_finite(arr)
    return [i + 1 for i, v in enumerate(lps) if int(v) == p]
