"""Shared utility functions for ordercert (bit iteration, chunking, rationals)."""

from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from typing import TypeVar, Union

T = TypeVar("T")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Return the index of the lowest set bit of a non-zero mask."""
    return (mask & -mask).bit_length() - 1


def bits_to_mask(indices: Iterable[int]) -> int:
    """Pack an iterable of indices into a bitmask."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def chunked(seq: Sequence[T], size: int) -> Iterator[Sequence[T]]:
    """Yield successive chunks of a given size from a sequence.

    Args:
        seq (Sequence): Input sequence.
        size (int): Size of each chunk.

    Yields:
        Sequence: Chunks of the input sequence.

    """
    if size < 1:
        raise ValueError("chunk size must be a positive integer")
    for i in range(0, len(seq), size):
        yield seq[i : i + size]


def fraction_to_str(value: Fraction) -> str:
    """Serialise a rational as "p/q" (always with a denominator)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: Union[str, int, Fraction]) -> Fraction:
    """Parse "p/q", an integer string, or a number into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e
