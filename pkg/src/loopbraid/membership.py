"""Necessary conditions for lying in the image of the representation.

* conjugating form: every generator goes to a conjugate ``a^-1 x_j^(+-1) a``
  of a generator, with ``i -> j`` a permutation;
* the braid conditions: positive conjugating form, and x1 x2 ... xn fixed;
* conservation of K_1 + ... + K_n.

These checkers only validate; nothing here reconstructs a braid word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .aggmorph import AggAutomorphism, AggMorphism, apply_f2
from .freewords import FreeGroupEndo, Word, apply_endo, cyclic_core, format_word, inv, mul
from .modring import total_flux


@dataclass(frozen=True)
class ConjugacyForm:
    """Witness that ``x_i -> conjugators[i]^-1 x_{permutation[i]}^{signs[i]} conjugators[i]``.

    Lists are 0-based positions holding 1-based generator indices.
    """

    permutation: tuple
    signs: tuple
    conjugators: tuple

    @property
    def rank(self) -> int:
        return len(self.permutation)

    def reconstruct(self) -> FreeGroupEndo:
        n = self.rank
        images = []
        for j, s, a in zip(self.permutation, self.signs, self.conjugators):
            images.append(mul(mul(inv(a), Word(n, [(j, s)])), a))
        return FreeGroupEndo(images, n)

    def lines(self) -> list[str]:
        return [
            f"x{i} -> a^-1 x{j}^{s} a with a = {format_word(a.letters)}"
            for i, (j, s, a) in enumerate(zip(self.permutation, self.signs, self.conjugators), 1)
        ]


def _as_endo(f) -> FreeGroupEndo:
    if isinstance(f, AggAutomorphism):
        return f.forward.f1
    if isinstance(f, AggMorphism):
        return f.f1
    return f


def conjugate_parts(f: FreeGroupEndo) -> list:
    """Per image: ``(index, sign, conjugator)`` if it is a conjugate of a letter, else None."""
    out = []
    for w in f.images:
        a, c = cyclic_core(w)
        if len(c) != 1:
            out.append(None)
            continue
        code = c.letters[0]
        # w = a c a^-1 = (a^-1)^-1 c (a^-1)
        out.append((abs(code), 1 if code > 0 else -1, inv(a)))
    return out


def goldsmith_form(f) -> Optional[ConjugacyForm]:
    """Permutation-conjugating form of ``f`` or ``None``.

    Only the syntactic shape is checked; it does not certify that ``f`` is
    invertible.
    """
    f = _as_endo(f)
    parts = conjugate_parts(f)
    if any(p is None for p in parts):
        return None
    perm = tuple(p[0] for p in parts)
    if sorted(perm) != list(range(1, f.rank + 1)):
        return None
    return ConjugacyForm(perm, tuple(p[1] for p in parts), tuple(p[2] for p in parts))


def boundary_word(n: int) -> Word:
    return Word(n, range(1, n + 1))


def artin_conditions(f) -> tuple[bool, bool]:
    """(positive conjugating form, x1 x2 ... xn fixed)."""
    f = _as_endo(f)
    form = goldsmith_form(f)
    conj = form is not None and all(s == 1 for s in form.signs)
    prod = boundary_word(f.rank)
    return conj, apply_endo(f, prod) == prod


def conserves_flux(f) -> bool:
    if isinstance(f, AggAutomorphism):
        f = f.forward
    k = total_flux(f.rank)
    return apply_f2(f, k) == k


def report_lines(f: AggAutomorphism | AggMorphism) -> list[str]:
    """Human-readable membership report used by the command line."""
    endo = _as_endo(f)
    parts = conjugate_parts(endo)
    form = goldsmith_form(endo)
    lines = []
    for i, p in enumerate(parts, 1):
        if p is None:
            lines.append(f"x{i} -> NOT IN FORM")
        else:
            j, s, a = p
            lines.append(f"x{i} -> a^-1 x{j}^{s} a with a = {format_word(a.letters)}")
    if form is None:
        lines.append("goldsmith: NOT IN FORM" if any(p is None for p in parts) else "goldsmith: NOT IN FORM (not a permutation)")
    else:
        lines.append("goldsmith: in form")
    conj, prod = artin_conditions(endo)
    lines.append(f"artin: conjugating={'yes' if conj else 'no'} product-fixed={'yes' if prod else 'no'}")
    lines.append(f"flux: {'conserved' if conserves_flux(f) else 'NOT conserved'}")
    return lines
