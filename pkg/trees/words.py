"""Pattern-avoiding words that code blossoming vertices and two-face maps.

A labeled blossoming vertex of degree ``2m`` reads, clockwise from its root, as
a word of length ``2m-1`` over ``A`` (attaching point), ``L`` (leaflet) and
``T`` (twig); tightness forbids ``TL``. Two-face maps with marks code into
words over ``M``, ``D``, ``U`` avoiding ``UD``.
"""

from typing import Dict, Iterator, List

from utils.errors import OutsideTheoremRange


def multiset_words(counts: Dict[str, int], forbidden: str = "") -> Iterator[str]:
    """All arrangements of a letter multiset avoiding the factor ``forbidden``.

    Letters are tried in sorted order, so the output is lexicographic. Negative
    counts give no words.
    """
    if any(count < 0 for count in counts.values()):
        return
    letters = sorted(counts)
    remaining = dict(counts)
    total = sum(remaining.values())
    prefix: List[str] = []

    def grow() -> Iterator[str]:
        if len(prefix) == total:
            yield "".join(prefix)
            return
        for letter in letters:
            if not remaining[letter]:
                continue
            if forbidden and "".join(prefix[-(len(forbidden) - 1) :] + [letter]).endswith(forbidden):
                continue
            remaining[letter] -= 1
            prefix.append(letter)
            yield from grow()
            prefix.pop()
            remaining[letter] += 1

    yield from grow()


def is_tight_word(word: str) -> bool:
    """No twig is immediately followed by a leaflet."""
    return "TL" not in word


def blossom_letter_counts(b: int, m: int, k: int) -> Dict[str, int]:
    """Letter counts ``(A, L, T) = (k, m+b-k, m-b-1)`` of a labeled vertex."""
    return {"A": k, "L": m + b - k, "T": m - b - 1}


def generate_blossom_words(b: int, m: int, k: int, tight: bool = True) -> Iterator[str]:
    """Decoration words of a blossoming vertex of half-degree ``m`` with ``k`` attaching points.

    For ``m = b`` the vertex is special: its only word is ``L^(2b-1)``, with no
    attaching point.

    Raises:
        OutsideTheoremRange: If ``m < b``.
    """
    if m < b:
        raise OutsideTheoremRange(f"blossoming vertices need m >= b, got m={m}, b={b}")
    if m == b:
        if k == 0:
            yield "L" * (2 * b - 1)
        return
    yield from multiset_words(blossom_letter_counts(b, m, k), "TL" if tight else "")


def generate_mdu_words(c: int, m: int, k: int) -> Iterator[str]:
    """Words with ``k`` M's, ``m-c-1-k`` D's and ``m+c`` U's avoiding ``UD``.

    Raises:
        OutsideTheoremRange: If ``m < c + 1``.
    """
    if m < c + 1:
        raise OutsideTheoremRange(f"M/D/U words need m >= c+1, got m={m}, c={c}")
    yield from multiset_words({"M": k, "D": m - c - 1 - k, "U": m + c}, "UD")


def enumerate_blossom_words(b: int, m: int, k: int) -> int:
    return sum(1 for _ in generate_blossom_words(b, m, k))


def enumerate_mdu_words(c: int, m: int, k: int) -> int:
    return sum(1 for _ in generate_mdu_words(c, m, k))
