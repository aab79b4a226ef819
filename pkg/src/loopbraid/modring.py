"""The group ring Z[F_n] and the free module Z[F_n]{K_1, ..., K_n}.

A module element is a finite integer combination of basis pairs ``(g, K_i)``
with ``g`` a reduced word; F_n acts by left multiplication on ``g``.
Terms are keyed internally by ``(letters, i)`` with ``letters`` the reduced
letter tuple of ``g``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .freewords import (
    RankError,
    Word,
    _join,
    format_word,
    parse_word,
    shortlex_key,
)


def _accumulate(acc: dict, key, c: int) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class GroupRingElt:
    """Element of Z[F_rank]: a finite map word -> nonzero integer."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for w, c in items:
            if isinstance(w, Word):
                if w.rank != rank:
                    raise RankError(f"word of rank {w.rank} in Z[F_{rank}]")
                w = w.letters
            else:
                w = Word(rank, w).letters
            _accumulate(acc, w, int(c))
        self.rank = rank
        self._terms = acc

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "GroupRingElt":
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        return obj

    @classmethod
    def of(cls, w: Word, c: int = 1) -> "GroupRingElt":
        return cls(w.rank, [(w, c)])

    def items(self) -> Iterator[tuple[Word, int]]:
        for letters, c in sorted(self._terms.items(), key=lambda t: shortlex_key(t[0])):
            yield Word(self.rank, letters, _trusted=True), c

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def _check(self, other):
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "GroupRingElt") -> "GroupRingElt":
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(acc, k, c)
        return GroupRingElt._raw(self.rank, acc)

    def __neg__(self) -> "GroupRingElt":
        return GroupRingElt._raw(self.rank, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElt") -> "GroupRingElt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GroupRingElt._raw(self.rank, {})
            return GroupRingElt._raw(self.rank, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        acc: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                _accumulate(acc, _join(u, v), a * b)
        return GroupRingElt._raw(self.rank, acc)

    __rmul__ = __mul__

    def __str__(self):
        parts = [(c, format_word(w.letters)) for w, c in self.items()]
        return _join_terms(parts)

    def __repr__(self):
        return f"GroupRingElt({self.rank}, {str(self)!r})"


class ModuleElt:
    """Element of the free Z[F_rank]-module on K_1, ..., K_rank.  Immutable."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping | Iterable = ()):
        """``terms`` maps ``(word, basis_index)`` to an integer coefficient."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for (w, i), c in items:
            if isinstance(w, Word):
                if w.rank != rank:
                    raise RankError(f"word of rank {w.rank} in module of rank {rank}")
                w = w.letters
            else:
                w = Word(rank, w).letters
            if not 1 <= i <= rank:
                raise IndexError(f"basis index K{i} out of range for rank {rank}")
            _accumulate(acc, (w, i), int(c))
        self.rank = rank
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "ModuleElt":
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rank: int) -> "ModuleElt":
        return cls._raw(rank, {})

    @classmethod
    def basis(cls, i: int, rank: int, g: Word | None = None) -> "ModuleElt":
        """The element ``g > K_i`` (``g`` defaults to the identity)."""
        if not 1 <= i <= rank:
            raise IndexError(f"basis index K{i} out of range for rank {rank}")
        letters = () if g is None else g.letters
        if g is not None and g.rank != rank:
            raise RankError(f"word of rank {g.rank} in module of rank {rank}")
        return cls._raw(rank, {(letters, i): 1})

    @classmethod
    def from_str(cls, text: str, rank: int) -> "ModuleElt":
        return parse_module_elt(text, rank)

    def items(self) -> Iterator[tuple[Word, int, int]]:
        """Yield ``(word, basis_index, coefficient)`` in canonical order."""
        for (letters, i), c in sorted(self._terms.items(), key=_term_key):
            yield Word(self.rank, letters, _trusted=True), i, c

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    def coefficient(self, g: Word, i: int) -> int:
        return self._terms.get((g.letters, i), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ModuleElt):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other):
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "ModuleElt") -> "ModuleElt":
        return add(self, other)

    def __neg__(self) -> "ModuleElt":
        return neg(self)

    def __sub__(self, other: "ModuleElt") -> "ModuleElt":
        return add(self, neg(other))

    def __mul__(self, k: int) -> "ModuleElt":
        return scale(k, self)

    __rmul__ = __mul__

    def __str__(self):
        return format_module_elt(self)

    def __repr__(self):
        return f"ModuleElt({self.rank}, {str(self)!r})"


def _term_key(item):
    (letters, i), _ = item
    return (i, shortlex_key(letters))


def add(m: ModuleElt, n: ModuleElt) -> ModuleElt:
    m._check(n)
    if len(m._terms) < len(n._terms):
        m, n = n, m
    acc = dict(m._terms)
    for k, c in n._terms.items():
        _accumulate(acc, k, c)
    return ModuleElt._raw(m.rank, acc)


def neg(m: ModuleElt) -> ModuleElt:
    return ModuleElt._raw(m.rank, {k: -c for k, c in m._terms.items()})


def scale(k: int, m: ModuleElt) -> ModuleElt:
    if k == 0:
        return ModuleElt.zero(m.rank)
    return ModuleElt._raw(m.rank, {key: c * k for key, c in m._terms.items()})


def total(elts: Iterable[ModuleElt], rank: int) -> ModuleElt:
    acc: dict = {}
    for m in elts:
        if m.rank != rank:
            raise RankError(f"rank mismatch: {m.rank} vs {rank}")
        for k, c in m._terms.items():
            _accumulate(acc, k, c)
    return ModuleElt._raw(rank, acc)


def act(g: Word, m: ModuleElt) -> ModuleElt:
    """Left action ``g > m``: every term ``(h, K_i)`` becomes ``(gh, K_i)``."""
    if g.rank != m.rank:
        raise RankError(f"rank mismatch: {g.rank} vs {m.rank}")
    if not g.letters:
        return m
    gl = g.letters
    # left multiplication is a bijection on F_n, so no terms merge
    return ModuleElt._raw(m.rank, {(_join(gl, h), i): c for (h, i), c in m._terms.items()})


def ring_act(r: GroupRingElt, m: ModuleElt) -> ModuleElt:
    """Z[F_n]-module structure: ``(sum c_g g) . m = sum c_g (g > m)``."""
    if r.rank != m.rank:
        raise RankError(f"rank mismatch: {r.rank} vs {m.rank}")
    acc: dict = {}
    for g, a in r._terms.items():
        for (h, i), b in m._terms.items():
            _accumulate(acc, (_join(g, h), i), a * b)
    return ModuleElt._raw(m.rank, acc)


def total_flux(n: int) -> ModuleElt:
    """K_1 + ... + K_n."""
    if n < 1:
        raise ValueError("total flux needs n >= 1")
    return ModuleElt._raw(n, {((), i): 1 for i in range(1, n + 1)})


def _join_terms(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for k, (c, body) in enumerate(parts):
        mag = abs(c)
        text = body if mag == 1 else f"{mag} {body}"
        if k == 0:
            out.append(text if c > 0 else "-" + text)
        else:
            out.append(("+ " if c > 0 else "- ") + text)
    return " ".join(out)


def format_module_elt(m: ModuleElt) -> str:
    parts = []
    for w, i, c in m.items():
        body = f"K{i}" if w.is_identity() else f"({format_word(w.letters)} > K{i})"
        parts.append((c, body))
    return _join_terms(parts)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+)?\s*"
    r"(?:K(?P<k>\d+)|\((?P<word>[^()>]*)>\s*K(?P<kw>\d+)\s*\))"
)


def parse_module_elt(text: str, rank: int) -> ModuleElt:
    """Inverse of :func:`format_module_elt`, e.g. ``K1 + K2 - (x2^-1 > K1)``."""
    s = text.strip()
    if s == "0":
        return ModuleElt.zero(rank)
    pos = 0
    terms = []
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse module element at offset {pos}: {s[pos:]!r}")
        if terms and m.group("sign") is None:
            raise ValueError(f"missing '+' or '-' at offset {pos}: {s[pos:]!r}")
        c = int(m.group("coef") or 1)
        if m.group("sign") == "-":
            c = -c
        if m.group("k") is not None:
            g, i = Word.identity(rank), int(m.group("k"))
        else:
            g, i = parse_word(m.group("word"), rank), int(m.group("kw"))
        terms.append(((g, i), c))
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    if not terms:
        raise ValueError(f"empty module element: {text!r}")
    return ModuleElt(rank, terms)
