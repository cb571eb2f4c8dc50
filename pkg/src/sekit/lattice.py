"""Interval view of a rule's SE-countermodels, and rule representability.

For a proper rule the pairs that fail to be SE-models are exactly

    { <I,J> : I in L1 and J in L2 }  union  { <I,J> : J in L1 and J in L2 }

where L1 = [B+, L \\ H+] and L2 = [H- u B+, L \\ B-] are convex sublattices
of the powerset of the alphabet. Inverting that shape answers whether an
arbitrary set of SE-interpretations is the SE-model set of any single rule.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (EPSILON, Alphabet, Interpretation, Rule, SEInterpretation, SESet,
                   all_interpretations, all_se_interpretations)
from .oracle import brute_representable
from .reconstruct import induce_rule
from .semantics import _masks, se_models


@dataclass(frozen=True)
class Interval:
    """Convex sublattice [bot, top] of the powerset; empty when bot is not below top."""

    bot: Interpretation
    top: Interpretation

    def __post_init__(self) -> None:
        if self.bot.alphabet != self.top.alphabet:
            raise ValueError("interval endpoints over different alphabets")

    @property
    def alphabet(self) -> Alphabet:
        return self.bot.alphabet

    def is_empty(self) -> bool:
        return bool(self.bot.bits & ~self.top.bits)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, Interpretation):
            return False
        return self._holds(x.bits)

    def _holds(self, bits: int) -> bool:
        return self.bot.bits & ~bits == 0 and bits & ~self.top.bits == 0

    def members(self, cap: int | None = None) -> tuple[Interpretation, ...]:
        return tuple(x for x in all_interpretations(self.alphabet, cap) if self._holds(x.bits))

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Interval":
        return cls(Interpretation(alphabet, alphabet.full_mask), Interpretation(alphabet, 0))


def rule_to_countermodel_intervals(rule: Rule, alphabet: Alphabet) -> tuple[Interval, Interval]:
    """The two intervals carving out the rule's SE-countermodels; empty pair for the tautology."""
    if rule.is_epsilon:
        return Interval.empty(alphabet), Interval.empty(alphabet)
    hp, hn, bp, bn = _masks(rule, alphabet)
    full = alphabet.full_mask
    l1 = Interval(Interpretation(alphabet, bp), Interpretation(alphabet, full & ~hp))
    l2 = Interval(Interpretation(alphabet, hn | bp), Interpretation(alphabet, full & ~bn))
    return l1, l2


def interval_countermodels(l1: Interval, l2: Interval, cap: int | None = None) -> frozenset[SEInterpretation]:
    """SE-interpretations excluded by the interval pair."""
    if l1.alphabet != l2.alphabet:
        raise ValueError("intervals over different alphabets")
    out = []
    for se in all_se_interpretations(l1.alphabet, cap):
        if l2._holds(se.there.bits) and (l1._holds(se.here.bits) or l1._holds(se.there.bits)):
            out.append(se)
    return frozenset(out)


def intervals_to_rule(l1: Interval, l2: Interval, alphabet: Alphabet) -> Rule:
    """Rule whose SE-countermodels are carved out by the interval pair.

    Either interval being empty excludes nothing, so the result is the
    canonical tautology.
    """
    if l1.alphabet != alphabet or l2.alphabet != alphabet:
        raise ValueError("intervals do not match the alphabet")
    if l1.is_empty() or l2.is_empty():
        return EPSILON
    full = alphabet.full_mask
    return Rule(head_pos=alphabet.atoms_of(full & ~l1.top.bits),
                head_neg=alphabet.atoms_of(l2.bot.bits),
                body_pos=alphabet.atoms_of(l1.bot.bits),
                body_neg=alphabet.atoms_of(full & ~l2.top.bits))


def is_rule_representable(s: SESet, method: str = "induced",
                          cap: int | None = None,
                          rule_cap: int | None = None) -> tuple[bool, Rule | None]:
    """Whether some single rule has exactly S as its SE-models, with a witness.

    induced: the induced rule's SE-models never exceed S, so S is
        representable exactly when they cover it.
    lattice: check that the countermodel intervals of the induced rule carve
        out exactly the complement of S; the witness is rebuilt from the
        intervals.
    brute:   scan every rule over the alphabet for one with SE-models S.

    All three agree on the verdict; witnesses may differ syntactically.
    """
    if method not in ("induced", "lattice", "brute"):
        raise ValueError(f"unknown method {method!r} (expected induced, lattice or brute)")
    if s.is_full():
        return True, EPSILON
    if method == "induced":
        rule = induce_rule(s, cap)
        ok = s.models <= se_models(rule, s.alphabet, cap).models
        return ok, (rule if ok else None)
    if method == "lattice":
        rule = induce_rule(s, cap)
        l1, l2 = rule_to_countermodel_intervals(rule, s.alphabet)
        ok = interval_countermodels(l1, l2, cap) == s.complement(cap).models
        return ok, (intervals_to_rule(l1, l2, s.alphabet) if ok else None)
    witness = brute_representable(s, cap=cap, rule_cap=rule_cap)
    return witness is not None, witness
