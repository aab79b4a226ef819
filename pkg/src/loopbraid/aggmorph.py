"""Morphisms of the free-type pair M_n = (F_n, Z[F_n]{K_1..K_n}, >).

A morphism is determined freely by the images of the x_i (in F_n) and of
the K_i (in the module), so it is stored as exactly that data.
Composition follows ``compose(f, h) = f o h``: ``h`` is applied first.
"""

from __future__ import annotations

import json
from typing import Sequence

from .freewords import FreeGroupEndo, RankError, Word, _join, parse_word
from .modring import ModuleElt, _accumulate, format_module_elt, parse_module_elt


class NotInvertible(ValueError):
    """The proposed inverse witness does not invert the morphism."""


class AggMorphism:
    """Endomorphism of M_rank given on generators.

    ``f1`` is the free group part and ``f2[i-1]`` is the image of K_i.
    """

    __slots__ = ("rank", "f1", "f2")

    def __init__(self, f1: FreeGroupEndo, f2: Sequence[ModuleElt]):
        f2 = tuple(f2)
        n = f1.rank
        if len(f2) != n:
            raise ValueError(f"expected {n} module images, got {len(f2)}")
        for m in f2:
            if m.rank != n:
                raise RankError(f"module image of rank {m.rank} in morphism of rank {n}")
        object.__setattr__(self, "rank", n)
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "f2", f2)

    def __setattr__(self, name, value):
        raise AttributeError("AggMorphism is immutable")

    @classmethod
    def identity(cls, n: int) -> "AggMorphism":
        return cls(FreeGroupEndo.identity(n), [ModuleElt.basis(i, n) for i in range(1, n + 1)])

    def __eq__(self, other):
        if not isinstance(other, AggMorphism):
            return NotImplemented
        return equal(self, other)

    def __hash__(self):
        return hash((self.f1, self.f2))

    def __call__(self, m: ModuleElt) -> ModuleElt:
        return apply_f2(self, m)

    def is_identity(self) -> bool:
        return self == AggMorphism.identity(self.rank)

    def __str__(self):
        return format_morphism(self)

    def __repr__(self):
        return f"<AggMorphism rank={self.rank}>"


def _check(a, b):
    if a.rank != b.rank:
        raise RankError(f"rank mismatch: {a.rank} vs {b.rank}")


def apply_f2(f: AggMorphism, m: ModuleElt) -> ModuleElt:
    """Image of a module element: ``c (g, K_i)  ->  c f1(g) > f2(K_i)``."""
    _check(f, m)
    acc: dict = {}
    f1, f2 = f.f1, f.f2
    images = {}
    for (g, i), c in m._terms.items():
        fg = images.get(g)
        if fg is None:
            fg = images[g] = f1.image_letters(g)
        for (h, j), d in f2[i - 1]._terms.items():
            _accumulate(acc, (_join(fg, h), j), c * d)
    return ModuleElt._raw(f.rank, acc)


def compose(f: AggMorphism, h: AggMorphism) -> AggMorphism:
    """``f o h``."""
    _check(f, h)
    words, modules = [], []
    for k, (w, m) in enumerate(zip(h.f1.images, h.f2), 1):
        # generators fixed by h keep f's image unchanged
        if w.letters == (k,):
            words.append(f.f1.images[k - 1])
        else:
            words.append(Word(f.rank, f.f1.image_letters(w.letters), _trusted=True))
        if m._terms == {((), k): 1}:
            modules.append(f.f2[k - 1])
        else:
            modules.append(apply_f2(f, m))
    return AggMorphism(FreeGroupEndo(words, f.rank), modules)


def equal(f: AggMorphism, h: AggMorphism) -> bool:
    # generator images determine a morphism uniquely
    _check(f, h)
    return f.f1.images == h.f1.images and f.f2 == h.f2


def differences(f: AggMorphism, h: AggMorphism) -> list[str]:
    """Generator labels on which ``f`` and ``h`` disagree."""
    _check(f, h)
    out = [f"x{i}" for i, (a, b) in enumerate(zip(f.f1.images, h.f1.images), 1) if a != b]
    out += [f"K{i}" for i, (a, b) in enumerate(zip(f.f2, h.f2), 1) if a != b]
    return out


class AggAutomorphism:
    """A morphism carrying a two-sided inverse witness."""

    __slots__ = ("forward", "_inverse")

    def __init__(self, forward: AggMorphism, inverse, *, check: bool = True):
        """``inverse`` is an :class:`AggMorphism`, or (unchecked only) a
        zero-argument callable producing it on first use."""
        if check:
            _check(forward, inverse)
            ident = AggMorphism.identity(forward.rank)
            if not equal(compose(forward, inverse), ident) or not equal(compose(inverse, forward), ident):
                raise NotInvertible("inverse witness fails the two-sided inverse check")
        object.__setattr__(self, "forward", forward)
        object.__setattr__(self, "_inverse", inverse)

    def __setattr__(self, name, value):
        raise AttributeError("AggAutomorphism is immutable")

    @property
    def inverse(self) -> AggMorphism:
        inv = self._inverse
        if not isinstance(inv, AggMorphism):
            inv = inv()
            _check(self.forward, inv)
            object.__setattr__(self, "_inverse", inv)
        return inv

    @property
    def rank(self) -> int:
        return self.forward.rank

    @property
    def f1(self) -> FreeGroupEndo:
        return self.forward.f1

    @property
    def f2(self) -> tuple:
        return self.forward.f2

    def inverted(self) -> "AggAutomorphism":
        return AggAutomorphism(self.inverse, self.forward, check=False)

    def __call__(self, m: ModuleElt) -> ModuleElt:
        return apply_f2(self.forward, m)

    def __eq__(self, other):
        if isinstance(other, AggAutomorphism):
            return equal(self.forward, other.forward)
        if isinstance(other, AggMorphism):
            return equal(self.forward, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.forward)

    def __str__(self):
        return format_morphism(self.forward)

    def __repr__(self):
        return f"<AggAutomorphism rank={self.rank}>"


def compose_auto(f: AggAutomorphism, h: AggAutomorphism) -> AggAutomorphism:
    # (f o h)^-1 = h^-1 o f^-1; no re-check needed
    return AggAutomorphism(
        compose(f.forward, h.forward), lambda: compose(h.inverse, f.inverse), check=False
    )


def identity(n: int) -> AggAutomorphism:
    ident = AggMorphism.identity(n)
    return AggAutomorphism(ident, ident, check=False)


def _shift_letters(letters, offset):
    return tuple(c + offset if c > 0 else c - offset for c in letters)


def _shift_morphism(f: AggMorphism, offset: int, n: int) -> AggMorphism:
    k = f.rank
    images = []
    modules = []
    for j in range(1, n + 1):
        if offset < j <= offset + k:
            w = f.f1.images[j - offset - 1]
            images.append(Word(n, _shift_letters(w.letters, offset), _trusted=True))
            m = f.f2[j - offset - 1]
            modules.append(
                ModuleElt._raw(n, {(_shift_letters(g, offset), i + offset): c for (g, i), c in m._terms.items()})
            )
        else:
            images.append(Word(n, (j,), _trusted=True))
            modules.append(ModuleElt.basis(j, n))
    return AggMorphism(FreeGroupEndo(images, n), modules)


def tensor_shift(f: AggAutomorphism, offset: int, n: int) -> AggAutomorphism:
    """``1^offset (x) f (x) 1^(n - offset - k)`` for ``f`` of rank ``k``."""
    if offset < 0:
        raise ValueError("offset must be non-negative")
    if offset + f.rank > n:
        raise ValueError(f"cannot place a rank-{f.rank} automorphism at offset {offset} in rank {n}")
    return AggAutomorphism(
        _shift_morphism(f.forward, offset, n), _shift_morphism(f.inverse, offset, n), check=False
    )


def format_morphism(f: AggMorphism) -> str:
    lines = [f"x{i} -> {w}" for i, w in enumerate(f.f1.images, 1)]
    lines += [f"K{i} -> {format_module_elt(m)}" for i, m in enumerate(f.f2, 1)]
    return "\n".join(lines)


def parse_morphism(text: str, n: int | None = None) -> AggMorphism:
    """Read the ``x<i> -> ...`` / ``K<i> -> ...`` line format back."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if n is None:
        if len(lines) % 2:
            raise ValueError("expected an even number of image lines")
        n = len(lines) // 2
    if len(lines) != 2 * n:
        raise ValueError(f"expected {2 * n} image lines, got {len(lines)}")
    words, modules = [], []
    for k, line in enumerate(lines):
        head, sep, body = line.partition("->")
        head = head.strip()
        expected = f"x{k + 1}" if k < n else f"K{k - n + 1}"
        if not sep or head != expected:
            raise ValueError(f"line {k + 1}: expected '{expected} -> ...', got {line!r}")
        if k < n:
            words.append(parse_word(body, n))
        else:
            modules.append(parse_module_elt(body, n))
    return AggMorphism(FreeGroupEndo(words, n), modules)


def word_to_json(w: Word) -> list:
    return [[abs(c), 1 if c > 0 else -1] for c in w.letters]


def module_to_json(m: ModuleElt) -> list:
    return [[c, word_to_json(w), i] for w, i, c in m.items()]


def morphism_to_json(f: AggMorphism) -> dict:
    return {
        "rank": f.rank,
        "x": [word_to_json(w) for w in f.f1.images],
        "K": [module_to_json(m) for m in f.f2],
    }


def morphism_from_json(data: dict | str) -> AggMorphism:
    if isinstance(data, str):
        data = json.loads(data)
    n = data["rank"]
    words = [Word(n, [tuple(p) for p in w]) for w in data["x"]]
    modules = [ModuleElt(n, [((Word(n, [tuple(p) for p in w]), i), c) for c, w, i in m]) for m in data["K"]]
    return AggMorphism(FreeGroupEndo(words, n), modules)


__all__ = [
    "AggAutomorphism",
    "AggMorphism",
    "NotInvertible",
    "apply_f2",
    "compose",
    "compose_auto",
    "differences",
    "equal",
    "format_morphism",
    "identity",
    "morphism_from_json",
    "morphism_to_json",
    "parse_morphism",
    "tensor_shift",
]
