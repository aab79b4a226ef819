"""Braid words, the generator automorphisms S_i, R_i, T_j and their evaluation.

Words in the extended loop braid group use the generators sigma_i, rho_i
(1 <= i <= n-1) and tau_j (1 <= j <= n).  A word ``g1 g2 ... gk`` evaluates
to the composite ``G1 o G2 o ... o Gk`` of automorphisms of M_n, so the
rightmost token acts first.  Because the representation is faithful,
comparing images decides equality of words.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple, Sequence

from .aggmorph import (
    AggAutomorphism,
    AggMorphism,
    compose,
    differences,
    equal,
    format_morphism,
    tensor_shift,
)
from .freewords import FreeGroupEndo, RankError, Word, compose_endo
from .modring import ModuleElt

SIGMA, RHO, TAU = "sigma", "rho", "tau"
_KIND_CHAR = {SIGMA: "s", RHO: "r", TAU: "t"}
_CHAR_KIND = {v: k for k, v in _KIND_CHAR.items()}


class BraidParseError(ValueError):
    def __init__(self, message: str, position: int, token: str | None = None):
        self.position = position
        self.token = token
        super().__init__(f"{message} (token {position}{'' if token is None else f' {token!r}'})")


class BraidToken(NamedTuple):
    kind: str
    index: int
    exponent: int = 1

    def inverse(self) -> "BraidToken":
        return BraidToken(self.kind, self.index, -self.exponent)

    def __str__(self):
        head = f"{_KIND_CHAR[self.kind]}{self.index}"
        return head if self.exponent == 1 else f"{head}^{self.exponent}"


def _check_token(tok: BraidToken, n: int) -> None:
    if tok.kind not in _KIND_CHAR:
        raise ValueError(f"unknown generator kind {tok.kind!r}")
    if tok.exponent == 0:
        raise ValueError(f"zero exponent on {_KIND_CHAR[tok.kind]}{tok.index}")
    top = n if tok.kind == TAU else n - 1
    if not 1 <= tok.index <= top:
        raise IndexError(f"{_KIND_CHAR[tok.kind]}{tok.index} out of range for n={n} (1..{top})")


@dataclass(frozen=True)
class BraidWord:
    rank: int
    tokens: tuple = field(default=())

    def __post_init__(self):
        toks = tuple(t if isinstance(t, BraidToken) else BraidToken(*t) for t in self.tokens)
        object.__setattr__(self, "tokens", toks)
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        for t in toks:
            _check_token(t, self.rank)

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        return parse_braid_word(text, n)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.rank, tuple(t.inverse() for t in reversed(self.tokens)))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        return BraidWord(self.rank, self.tokens + other.tokens)

    def __len__(self):
        return len(self.tokens)

    def __str__(self):
        return " ".join(str(t) for t in self.tokens) or "1"


_TOKEN_RE = re.compile(r"([srtSRT])(\d+)(?:\^([+-]?\d+)|('))?$")


def parse_braid_word(text: str, n: int) -> BraidWord:
    """Parse e.g. ``s1 s2^-1 t3 r1'``.  Positions in errors are 1-based token numbers."""
    tokens = []
    parts = text.split()
    if parts == ["1"]:
        parts = []
    for pos, raw in enumerate(parts, 1):
        m = _TOKEN_RE.match(raw)
        if not m:
            raise BraidParseError("malformed token", pos, raw)
        kind = _CHAR_KIND[m.group(1).lower()]
        index = int(m.group(2))
        if m.group(4):
            exponent = -1
        elif m.group(3) is not None:
            exponent = int(m.group(3))
        else:
            exponent = 1
        tok = BraidToken(kind, index, exponent)
        try:
            _check_token(tok, n)
        except (ValueError, IndexError) as exc:
            raise BraidParseError(str(exc), pos, raw) from None
        tokens.append(tok)
    return BraidWord(n, tuple(tokens))


# --- the rank-2 / rank-1 building blocks ---------------------------------

def _w(n, *codes):
    return Word(n, codes)


def _k(n, *terms):
    # terms are (coefficient, word-codes, basis)
    return ModuleElt(n, [((Word(n, g), i), c) for c, g, i in terms])


@lru_cache(maxsize=None)
def _base_sigma() -> AggAutomorphism:
    fwd = AggMorphism(
        FreeGroupEndo([_w(2, 2), _w(2, -2, 1, 2)]),
        [_k(2, (1, (), 1), (1, (), 2), (-1, (-2,), 1)), _k(2, (1, (-2,), 1))],
    )
    back = AggMorphism(
        FreeGroupEndo([_w(2, 1, 2, -1), _w(2, 1)]),
        [_k(2, (1, (1,), 2)), _k(2, (1, (), 1), (1, (), 2), (-1, (1,), 2))],
    )
    return AggAutomorphism(fwd, back)


@lru_cache(maxsize=None)
def _base_rho() -> AggAutomorphism:
    f = AggMorphism(FreeGroupEndo([_w(2, 2), _w(2, 1)]), [_k(2, (1, (), 2)), _k(2, (1, (), 1))])
    return AggAutomorphism(f, f)


@lru_cache(maxsize=None)
def _base_tau() -> AggAutomorphism:
    f = AggMorphism(FreeGroupEndo([_w(1, -1)]), [_k(1, (1, (), 1))])
    return AggAutomorphism(f, f)


def _index_check(i, lo, hi, name):
    if not lo <= i <= hi:
        raise IndexError(f"{name}{i} out of range (1..{hi})")


@lru_cache(maxsize=None)
def gen_sigma(i: int, n: int) -> AggAutomorphism:
    _index_check(i, 1, n - 1, "s")
    return tensor_shift(_base_sigma(), i - 1, n)


@lru_cache(maxsize=None)
def gen_rho(i: int, n: int) -> AggAutomorphism:
    _index_check(i, 1, n - 1, "r")
    return tensor_shift(_base_rho(), i - 1, n)


@lru_cache(maxsize=None)
def gen_tau(j: int, n: int) -> AggAutomorphism:
    _index_check(j, 1, n, "t")
    return tensor_shift(_base_tau(), j - 1, n)


_GENERATORS: dict[str, Callable[[int, int], AggAutomorphism]] = {
    SIGMA: gen_sigma,
    RHO: gen_rho,
    TAU: gen_tau,
}


def generator(kind: str, index: int, n: int, inverse: bool = False) -> AggAutomorphism:
    g = _GENERATORS[kind](index, n)
    return g.inverted() if inverse else g


def _forward(w: BraidWord) -> AggMorphism:
    n = w.rank
    acc = AggMorphism.identity(n)
    for tok in w.tokens:
        g = generator(tok.kind, tok.index, n, inverse=tok.exponent < 0).forward
        for _ in range(abs(tok.exponent)):
            acc = compose(acc, g)
    return acc


def evaluate(w: BraidWord) -> AggAutomorphism:
    """Image of a braid word; the leftmost token is applied last.

    The inverse witness is the image of the inverse word, computed on demand.
    """
    return AggAutomorphism(_forward(w), lambda: _forward(w.inverse()), check=False)


# --- free group level, written directly from the generator formulas -------

def _dahm_generator(kind: str, i: int, n: int, inverse: bool) -> FreeGroupEndo:
    images = [Word(n, (j,)) for j in range(1, n + 1)]
    if kind == SIGMA:
        if not inverse:
            # x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            images[i - 1] = Word(n, (i + 1,))
            images[i] = Word(n, (-(i + 1), i, i + 1))
        else:
            # x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
            images[i - 1] = Word(n, (i, i + 1, -i))
            images[i] = Word(n, (i,))
    elif kind == RHO:
        images[i - 1], images[i] = images[i], images[i - 1]
    else:
        images[i - 1] = Word(n, (-i,))
    return FreeGroupEndo(images, n)


def dahm(w: BraidWord) -> FreeGroupEndo:
    """Image in Aut(F_n), composed from the free group formulas only."""
    n = w.rank
    acc = FreeGroupEndo.identity(n)
    for tok in w.tokens:
        g = _dahm_generator(tok.kind, tok.index, n, tok.exponent < 0)
        for _ in range(abs(tok.exponent)):
            acc = compose_endo(acc, g)
    return acc


def equal_in_group(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.rank != w2.rank:
        raise RankError(f"rank mismatch: {w1.rank} vs {w2.rank}")
    return equal(_forward(w1), _forward(w2))


def is_trivial(w: BraidWord) -> bool:
    return _forward(w).is_identity()


def random_braid_word(n: int, length: int, rng: random.Random, kinds: Sequence[str] = (SIGMA, RHO, TAU)) -> BraidWord:
    """Uniformly random tokens with exponent +-1."""
    pool = []
    for kind in kinds:
        top = n if kind == TAU else n - 1
        pool += [(kind, i) for i in range(1, top + 1)]
    if not pool:
        raise ValueError(f"no generators of kinds {kinds} at n={n}")
    toks = []
    for _ in range(length):
        kind, i = rng.choice(pool)
        toks.append(BraidToken(kind, i, rng.choice((1, -1))))
    return BraidWord(n, tuple(toks))


# --- presentation relations ---------------------------------------------

def _s(i, e=1):
    return BraidToken(SIGMA, i, e)


def _r(i, e=1):
    return BraidToken(RHO, i, e)


def _t(i, e=1):
    return BraidToken(TAU, i, e)


def _far_pairs(a_range, b_range, distinct_only=False):
    for i in a_range:
        for j in b_range:
            if (i != j) if distinct_only else abs(i - j) > 1:
                yield i, j


class Relation(NamedTuple):
    id: str
    text: str
    instances: Callable[[int], Iterable[tuple[tuple, list, list]]]


def _relations() -> list[Relation]:
    def gens(n):
        return range(1, n), range(1, n - 1), range(1, n + 1)

    def comm(a, b, dist=False, arange=None, brange=None):
        def inst(n):
            pr, _, tr = gens(n)
            ar = pr if arange is None else tr
            br = pr if brange is None else tr
            for i, j in _far_pairs(ar, br, dist):
                yield (i, j), [a(i), b(j)], [b(j), a(i)]
        return inst

    def each(fn, which):
        def inst(n):
            pr, tri, tr = gens(n)
            rng = {"pair": pr, "triple": tri, "tau": tr}[which]
            for i in rng:
                lhs, rhs = fn(i)
                yield (i,), lhs, rhs
        return inst

    return [
        Relation("bg1", "s_i s_j = s_j s_i, |i-j| > 1", comm(_s, _s)),
        Relation("bg2", "s_i s_i+1 s_i = s_i+1 s_i s_i+1", each(lambda i: ([_s(i), _s(i + 1), _s(i)], [_s(i + 1), _s(i), _s(i + 1)]), "triple")),
        Relation("LBG1", "s_i s_j = s_j s_i, |i-j| > 1", comm(_s, _s)),
        Relation("LBG2", "s_i s_i+1 s_i = s_i+1 s_i s_i+1", each(lambda i: ([_s(i), _s(i + 1), _s(i)], [_s(i + 1), _s(i), _s(i + 1)]), "triple")),
        Relation("LBG3", "r_i r_j = r_j r_i, |i-j| > 1", comm(_r, _r)),
        Relation("LBG4", "r_i r_i+1 r_i = r_i+1 r_i r_i+1", each(lambda i: ([_r(i), _r(i + 1), _r(i)], [_r(i + 1), _r(i), _r(i + 1)]), "triple")),
        Relation("LBG5", "r_i^2 = 1", each(lambda i: ([_r(i), _r(i)], []), "pair")),
        Relation("LBG6", "r_i s_j = s_j r_i, |i-j| > 1", comm(_r, _s)),
        Relation("LBG7", "r_i+1 r_i s_i+1 = s_i r_i+1 r_i", each(lambda i: ([_r(i + 1), _r(i), _s(i + 1)], [_s(i), _r(i + 1), _r(i)]), "triple")),
        Relation("LBG8", "s_i+1 s_i r_i+1 = r_i s_i+1 s_i", each(lambda i: ([_s(i + 1), _s(i), _r(i + 1)], [_r(i), _s(i + 1), _s(i)]), "triple")),
        Relation("eLBG1", "t_i t_j = t_j t_i, i != j", comm(_t, _t, dist=True, arange="tau", brange="tau")),
        Relation("eLBG2", "t_i^2 = 1", each(lambda i: ([_t(i), _t(i)], []), "tau")),
        Relation("eLBG3", "s_i t_j = t_j s_i, |i-j| > 1", comm(_s, _t, brange="tau")),
        Relation("eLBG4", "r_i t_j = t_j r_i, |i-j| > 1", comm(_r, _t, brange="tau")),
        Relation("eLBG5", "t_i r_i = r_i t_i+1", each(lambda i: ([_t(i), _r(i)], [_r(i), _t(i + 1)]), "pair")),
        Relation("eLBG6", "t_i s_i = s_i t_i+1", each(lambda i: ([_t(i), _s(i)], [_s(i), _t(i + 1)]), "pair")),
        Relation("eLBG7", "t_i+1 s_i = r_i s_i^-1 r_i t_i", each(lambda i: ([_t(i + 1), _s(i)], [_r(i), _s(i, -1), _r(i), _t(i)]), "pair")),
    ]


RELATIONS: list[Relation] = _relations()


def relation_instances(n: int) -> list[tuple[str, tuple, BraidWord, BraidWord]]:
    """Every relation schema instantiated at every admissible index tuple."""
    out = []
    for rel in RELATIONS:
        for idx, lhs, rhs in rel.instances(n):
            out.append((rel.id, idx, BraidWord(n, tuple(lhs)), BraidWord(n, tuple(rhs))))
    return out


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    indices: tuple
    lhs: BraidWord
    rhs: BraidWord
    passed: bool
    mismatched: tuple = ()
    lhs_image: str = ""
    rhs_image: str = ""

    def line(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        head = f"{self.relation}[{idx}] {self.lhs} = {self.rhs}"
        if self.passed:
            return f"{head}: pass"
        return f"{head}: FAIL on {', '.join(self.mismatched)}"


def check_relation(rel_id: str, indices: tuple, lhs: BraidWord, rhs: BraidWord) -> RelationCheck:
    a, b = _forward(lhs), _forward(rhs)
    if equal(a, b):
        return RelationCheck(rel_id, indices, lhs, rhs, True)
    return RelationCheck(rel_id, indices, lhs, rhs, False, tuple(differences(a, b)), format_morphism(a), format_morphism(b))


def verify_relations(n: int) -> list[RelationCheck]:
    if n < 2:
        raise ValueError("relations need n >= 2")
    results = [check_relation(*inst) for inst in relation_instances(n)]
    order = {rel.id: k for k, rel in enumerate(RELATIONS)}
    results.sort(key=lambda r: (order[r.relation], r.indices))
    return results
