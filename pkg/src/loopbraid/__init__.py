"""Exact lifted Artin representation of extended loop braid groups."""

from .aggmorph import (
    AggAutomorphism,
    AggMorphism,
    NotInvertible,
    apply_f2,
    compose,
    equal,
    identity,
    tensor_shift,
)
from .freewords import FreeGroupEndo, Letter, RankError, Word, apply_endo, cyclic_core, inv, mul, reduce
from .liftedartin import (
    BraidParseError,
    BraidToken,
    BraidWord,
    dahm,
    equal_in_group,
    evaluate,
    gen_rho,
    gen_sigma,
    gen_tau,
    parse_braid_word,
    verify_relations,
)
from .membership import ConjugacyForm, artin_conditions, conserves_flux, goldsmith_form
from .modring import GroupRingElt, ModuleElt, act, add, neg, total_flux

__all__ = [
    "act",
    "add",
    "AggAutomorphism",
    "AggMorphism",
    "apply_endo",
    "apply_f2",
    "artin_conditions",
    "BraidParseError",
    "BraidToken",
    "BraidWord",
    "compose",
    "ConjugacyForm",
    "conserves_flux",
    "cyclic_core",
    "dahm",
    "equal",
    "equal_in_group",
    "evaluate",
    "FreeGroupEndo",
    "gen_rho",
    "gen_sigma",
    "gen_tau",
    "goldsmith_form",
    "GroupRingElt",
    "identity",
    "inv",
    "Letter",
    "ModuleElt",
    "mul",
    "neg",
    "NotInvertible",
    "parse_braid_word",
    "RankError",
    "reduce",
    "tensor_shift",
    "total_flux",
    "verify_relations",
    "Word",
]

__version__ = "0.1.0"
