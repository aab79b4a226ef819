"""Reduced words in the free group F_n and endomorphisms of F_n.

A letter is stored as a signed integer: ``+i`` is x_i and ``-i`` is x_i^-1
(indices are 1-based).  A :class:`Word` always holds a freely reduced letter
sequence, so two words are equal exactly when their letter tuples are equal.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Sequence


class RankError(ValueError):
    """Operands live in free groups of different rank."""


class Letter(NamedTuple):
    index: int
    exponent: int

    def code(self) -> int:
        return self.index * self.exponent


def _as_code(letter) -> int:
    if isinstance(letter, tuple):
        index, exponent = letter
        if exponent not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {exponent}")
        return index * exponent
    return int(letter)


def _reduce_codes(codes: Iterable[int]) -> tuple:
    out: list[int] = []
    for c in codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def _join(a: tuple, b: tuple) -> tuple:
    """Product of two reduced letter tuples; only the junction can cancel."""
    if not a:
        return b
    if not b:
        return a
    k = 0
    la, lb = len(a), len(b)
    while k < la and k < lb and a[la - 1 - k] == -b[k]:
        k += 1
    if k == 0:
        return a + b
    return a[: la - k] + b[k:]


def _invert(a: tuple) -> tuple:
    return tuple(-c for c in reversed(a))


def shortlex_key(letters: Sequence[int]) -> tuple:
    # x1 < x1^-1 < x2 < x2^-1 < ...
    return (len(letters), tuple(2 * abs(c) + (c < 0) for c in letters))


class Word:
    """Freely reduced element of F_rank.  Immutable."""

    __slots__ = ("rank", "letters", "_hash")

    def __init__(self, rank: int, letters: Sequence[int] = (), *, _trusted: bool = False):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        if _trusted:
            letters = tuple(letters)
        else:
            letters = tuple(_as_code(c) for c in letters)
            for c in letters:
                if c == 0 or abs(c) > rank:
                    raise IndexError(f"generator index {abs(c)} out of range for rank {rank}")
            letters = _reduce_codes(letters)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash((rank, letters)))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls, rank: int) -> "Word":
        return cls(rank, (), _trusted=True)

    @classmethod
    def generator(cls, i: int, rank: int, exponent: int = 1) -> "Word":
        return cls(rank, [(i, exponent)])

    @classmethod
    def from_str(cls, text: str, rank: int) -> "Word":
        return parse_word(text, rank)

    def letter_pairs(self) -> list[Letter]:
        return [Letter(abs(c), 1 if c > 0 else -1) for c in self.letters]

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Word"):
        return shortlex_key(self.letters) < shortlex_key(other.letters)

    def __mul__(self, other: "Word") -> "Word":
        return mul(self, other)

    def __invert__(self) -> "Word":
        return inv(self)

    def __str__(self):
        return format_word(self.letters)

    def __repr__(self):
        return f"Word({self.rank}, {format_word(self.letters)!r})"


def reduce(letters: Iterable, rank: int) -> Word:
    """Freely reduce a letter sequence (signed ints or ``(index, exponent)`` pairs)."""
    return Word(rank, letters)


def _check_rank(u, v):
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")


def mul(u: Word, v: Word) -> Word:
    _check_rank(u, v)
    return Word(u.rank, _join(u.letters, v.letters), _trusted=True)


def inv(w: Word) -> Word:
    return Word(w.rank, _invert(w.letters), _trusted=True)


def cyclic_core(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as ``a c a^-1`` with ``c`` cyclically reduced and ``a`` maximal."""
    s = w.letters
    k = 0
    n = len(s)
    while 2 * k + 1 < n and s[k] == -s[n - 1 - k]:
        k += 1
    a = Word(w.rank, s[:k], _trusted=True)
    c = Word(w.rank, s[k : n - k], _trusted=True)
    return a, c


class FreeGroupEndo:
    """Endomorphism of F_rank, given by the images of x_1, ..., x_rank."""

    __slots__ = ("rank", "images", "_inv_images")

    def __init__(self, images: Sequence[Word], rank: int | None = None):
        images = tuple(images)
        if rank is None:
            if not images:
                raise ValueError("rank is required for the rank-0 endomorphism")
            rank = images[0].rank
        if len(images) != rank:
            raise ValueError(f"expected {rank} images, got {len(images)}")
        for w in images:
            if w.rank != rank:
                raise RankError(f"image of rank {w.rank} in endomorphism of rank {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_inv_images", tuple(_invert(w.letters) for w in images))

    def __setattr__(self, name, value):
        raise AttributeError("FreeGroupEndo is immutable")

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupEndo":
        return cls([Word(rank, (i,), _trusted=True) for i in range(1, rank + 1)], rank)

    def image_letters(self, letters: Sequence[int]) -> tuple:
        out: list[int] = []
        imgs, invs = self.images, self._inv_images
        for c in letters:
            piece = imgs[c - 1].letters if c > 0 else invs[-c - 1]
            # pieces are reduced, so only the junction can cancel
            k, lo, lp = 0, len(out), len(piece)
            while k < lo and k < lp and out[lo - 1 - k] == -piece[k]:
                k += 1
            if k:
                del out[lo - k :]
                out.extend(piece[k:])
            else:
                out.extend(piece)
        return tuple(out)

    def __call__(self, w: Word) -> Word:
        return apply_endo(self, w)

    def __eq__(self, other):
        if not isinstance(other, FreeGroupEndo):
            return NotImplemented
        return self.rank == other.rank and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return "\n".join(f"x{i} -> {w}" for i, w in enumerate(self.images, 1))

    def __repr__(self):
        body = ", ".join(str(w) for w in self.images)
        return f"FreeGroupEndo([{body}])"


def apply_endo(f: FreeGroupEndo, w: Word) -> Word:
    _check_rank(f, w)
    return Word(f.rank, f.image_letters(w.letters), _trusted=True)


def compose_endo(f: FreeGroupEndo, g: FreeGroupEndo) -> FreeGroupEndo:
    """``f o g``: apply ``g`` first."""
    _check_rank(f, g)
    return FreeGroupEndo([apply_endo(f, w) for w in g.images], f.rank)


def format_word(letters: Sequence[int]) -> str:
    if not letters:
        return "1"
    return " ".join(f"x{c}" if c > 0 else f"x{-c}^-1" for c in letters)


_LETTER_RE = re.compile(r"x(\d+)(\^-1|\^1)?$")


def parse_word(text: str, rank: int) -> Word:
    """Parse ``x2^-1 x1 x2``; ``1`` (or blank) is the identity."""
    tokens = text.split()
    if tokens == ["1"] or not tokens:
        return Word.identity(rank)
    codes = []
    for pos, tok in enumerate(tokens):
        m = _LETTER_RE.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r} at position {pos}")
        i = int(m.group(1))
        codes.append(-i if m.group(2) == "^-1" else i)
    return Word(rank, codes)
