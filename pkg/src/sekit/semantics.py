"""Rule and program semantics: classical models, reducts, SE-models, answer sets.

A rule is read as the classical implication  or(head) <- and(body)  where an
empty disjunction is falsity and an empty conjunction is truth. <I,J> is an
SE-model of r when J classically satisfies r and I satisfies the reduct of r
under J. SE-model computation enumerates every SE-interpretation and tests
each pair; there is no symbolic shortcut here (the lattice module has one).
"""
from __future__ import annotations

from functools import lru_cache

from .core import (EPSILON, Alphabet, Interpretation, Program, Rule, SEInterpretation,
                   SESet, all_interpretations, all_se_interpretations)

Masks = tuple[int, int, int, int]


def _masks(rule: Rule, alphabet: Alphabet) -> Masks:
    return (alphabet.mask_of(rule.head_pos), alphabet.mask_of(rule.head_neg),
            alphabet.mask_of(rule.body_pos), alphabet.mask_of(rule.body_neg))


def _c_sat(masks: Masks, bits: int) -> bool:
    hp, hn, bp, bn = masks
    body_holds = (bp & bits) == bp and (bn & bits) == 0
    head_holds = (hp & bits) != 0 or (hn & ~bits) != 0
    return head_holds or not body_holds


def is_c_model(rule: Rule, interpretation: Interpretation) -> bool:
    """Classical satisfaction of the rule's implication reading."""
    if rule.is_epsilon:
        return True
    return _c_sat(_masks(rule, interpretation.alphabet), interpretation.bits)


def c_models(rule: Rule, alphabet: Alphabet, cap: int | None = None) -> frozenset[Interpretation]:
    interps = all_interpretations(alphabet, cap)
    if rule.is_epsilon:
        return frozenset(interps)
    masks = _masks(rule, alphabet)
    return frozenset(j for j in interps if _c_sat(masks, j.bits))


def reduct(rule: Rule, there: Interpretation) -> Rule:
    """Positive part left after fixing the negative literals under `there`.

    The result is the canonical tautology when some negative-head atom is
    false under `there` or some negative-body atom is true; atoms outside
    the alphabet of `there` count as false.
    """
    if rule.is_epsilon:
        return EPSILON
    if any(a not in there for a in rule.head_neg) or any(a in there for a in rule.body_neg):
        return EPSILON
    return Rule(head_pos=rule.head_pos, body_pos=rule.body_pos)


def is_se_model(rule: Rule, se: SEInterpretation) -> bool:
    return is_c_model(rule, se.there) and is_c_model(reduct(rule, se.there), se.here)


@lru_cache(maxsize=None)
def _se_models(rule: Rule, alphabet: Alphabet, cap: int | None) -> SESet:
    pairs = all_se_interpretations(alphabet, cap)
    if rule.is_epsilon:
        return SESet(alphabet, frozenset(pairs))
    masks = _masks(rule, alphabet)
    hp, hn, bp, bn = masks
    models = []
    for se in pairs:
        j = se.there.bits
        if not _c_sat(masks, j):
            continue
        if (hn & ~j) != 0 or (bn & j) != 0:  # reduct is the canonical tautology
            models.append(se)
            continue
        i = se.here.bits  # reduct is H+ :- B+
        if (hp & i) != 0 or (bp & i) != bp:
            models.append(se)
    return SESet(alphabet, frozenset(models))


def se_models(rule: Rule, alphabet: Alphabet, cap: int | None = None) -> SESet:
    """All SE-models of a single rule over the alphabet."""
    return _se_models(rule, alphabet, cap)


def se_models_program(program: Program, alphabet: Alphabet, cap: int | None = None) -> SESet:
    """Intersection of the rules' SE-model sets; everything for the empty program."""
    models = frozenset(all_se_interpretations(alphabet, cap))
    for rule in program:
        models &= se_models(rule, alphabet, cap).models
    return SESet(alphabet, models)


def is_se_tautology(rule: Rule, alphabet: Alphabet, cap: int | None = None) -> bool:
    return se_models(rule, alphabet, cap).is_full()


def is_well_defined(se_set: SESet) -> bool:
    """True when <J,J> is present for every member <I,J>."""
    pairs = {(m.here.bits, m.there.bits) for m in se_set.models}
    return all((j, j) in pairs for _, j in pairs)


def answer_sets(program: Program, alphabet: Alphabet, cap: int | None = None) -> frozenset[Interpretation]:
    """Total SE-models <J,J> of the program with no proper <I,J> below them."""
    s = se_models_program(program, alphabet, cap)
    pairs = {(m.here.bits, m.there.bits) for m in s.models}
    totals = {j for i, j in pairs if i == j}
    return frozenset(Interpretation(alphabet, j) for j in totals
                     if not any(i != j and jj == j for i, jj in pairs))
