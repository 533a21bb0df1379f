"""Bit-packed linear algebra over the two-element field.

A vector of length N lives in a single Python integer: bit i holds
coordinate i, and bits at positions >= N are zero.  The portable text form
is a plain 0/1 string with coordinate 0 leftmost, so no machine word size
leaks into any external format.  Coordinates are 0-indexed throughout.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import LengthMismatchError

__all__ = [
    "BitVector",
    "BitMatrix",
    "rref",
    "rank",
    "in_span",
    "null_space",
    "rref_bits",
    "in_span_bits",
    "null_space_bits",
]


@dataclass(frozen=True, slots=True)
class BitVector:
    """An element of GF(2)^length; ``bits`` packs coordinate i at bit i."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length <= 0:
            raise ValueError(f"length must be positive, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("set bits beyond the last coordinate")

    @classmethod
    def zero(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, index: int) -> "BitVector":
        if not 0 <= index < length:
            raise IndexError(f"coordinate {index} outside 0..{length - 1}")
        return cls(length, 1 << index)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for index in support:
            if not 0 <= index < length:
                raise IndexError(f"coordinate {index} outside 0..{length - 1}")
            bits |= 1 << index
        return cls(length, bits)

    @classmethod
    def from01(cls, text: str) -> "BitVector":
        """Parse the text form: 0/1 characters, coordinate 0 leftmost."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def get(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(f"coordinate {index} outside 0..{self.length - 1}")
        return (self.bits >> index) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def _check_length(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise LengthMismatchError(
                f"lengths differ: {self.length} vs {other.length}"
            )

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check_length(other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check_length(other)
        return BitVector(self.length, self.bits & other.bits)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._check_length(other)
        return BitVector(self.length, self.bits | other.bits)

    def __str__(self) -> str:
        return self.to01()


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """An ordered list of equal-length rows over GF(2)."""

    ncols: int
    rows: tuple[BitVector, ...] = ()

    def __post_init__(self) -> None:
        if self.ncols <= 0:
            raise ValueError("ncols must be positive")
        for row in self.rows:
            if row.length != self.ncols:
                raise LengthMismatchError(
                    f"row length {row.length} does not match ncols {self.ncols}"
                )

    @classmethod
    def from_bits(cls, ncols: int, bits: Iterable[int]) -> "BitMatrix":
        return cls(ncols, tuple(BitVector(ncols, b) for b in bits))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_bits(self) -> list[int]:
        return [row.bits for row in self.rows]

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.rows)

    def __str__(self) -> str:
        return "\n".join(row.to01() for row in self.rows)


def rref_bits(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form on int-packed rows.

    Returns (rows, pivots) with zero rows dropped and pivot columns strictly
    increasing; the output is the unique canonical basis of the row space.
    """
    reduced: list[int] = []
    pivots: list[int] = []
    for row in rows:
        for piv, basis_row in zip(pivots, reduced):
            if (row >> piv) & 1:
                row ^= basis_row
        if row == 0:
            continue
        piv = (row & -row).bit_length() - 1
        pos = bisect_left(pivots, piv)
        pivots.insert(pos, piv)
        reduced.insert(pos, row)
        for i in range(len(reduced)):
            if i != pos and (reduced[i] >> piv) & 1:
                reduced[i] ^= row
    return reduced, pivots


def in_span_bits(reduced: Sequence[int], vector: int) -> bool:
    """Membership in the row space of rows already in reduced echelon form."""
    for row in reduced:
        piv = (row & -row).bit_length() - 1
        if (vector >> piv) & 1:
            vector ^= row
    return vector == 0


def null_space_bits(rows: Iterable[int], ncols: int) -> list[int]:
    """Canonical basis of the right kernel {v : every row r has r.v = 0}."""
    reduced, pivots = rref_bits(rows)
    pivot_set = set(pivots)
    kernel: list[int] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, piv in zip(reduced, pivots):
            if (row >> free) & 1:
                vec |= 1 << piv
        kernel.append(vec)
    canonical, _ = rref_bits(kernel)
    return canonical


def rref(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Canonical reduced row echelon form with its pivot columns."""
    reduced, pivots = rref_bits(m.row_bits())
    return BitMatrix.from_bits(m.ncols, reduced), tuple(pivots)


def rank(m: BitMatrix) -> int:
    return len(rref_bits(m.row_bits())[0])


def in_span(m: BitMatrix, v: BitVector) -> bool:
    """True iff v is a sum of rows of m; m must be in reduced echelon form."""
    if v.length != m.ncols:
        raise LengthMismatchError(f"lengths differ: {v.length} vs {m.ncols}")
    return in_span_bits(m.row_bits(), v.bits)


def null_space(m: BitMatrix) -> BitMatrix:
    """Canonical basis of {v : m v^T = 0}; rank(m) + rank(result) = ncols."""
    return BitMatrix.from_bits(m.ncols, null_space_bits(m.row_bits(), m.ncols))
