"""Reconstructing a rule from a set of SE-interpretations.

Each atom of the alphabet is sorted into at most one head or body slot by
four membership conditions, quantified over every SE-interpretation <I,J>
of the alphabet (not just the members of S):

    negative body:  every pair with the atom in J lies in S
    positive head:  not negative-body, and every pair with the atom in I lies in S
    positive body:  every pair with the atom outside J lies in S, and every
                    pair with the atom outside I whose J meets the positive
                    head lies in S
    negative head:  not positive-body, and every pair with the atom outside
                    J lies in S

The induced rule for the full set is the canonical tautology; otherwise it
is built from the classification. Its SE-model set is always a subset of S,
with equality exactly when some rule has S as its SE-models.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import EPSILON, Rule, SESet, all_se_interpretations


@dataclass(frozen=True)
class AtomClassification:
    neg_body: frozenset[str]
    pos_head: frozenset[str]
    pos_body: frozenset[str]
    neg_head: frozenset[str]

    def __post_init__(self) -> None:
        if self.neg_body & self.pos_head or self.pos_body & self.neg_head:
            raise ValueError("classification slots overlap")


def classify_atoms(s: SESet, cap: int | None = None) -> AtomClassification:
    alphabet = s.alphabet
    pairs = all_se_interpretations(alphabet, cap)
    member = frozenset((m.here.bits, m.there.bits) for m in s.models)

    neg_body: set[str] = set()
    pos_head: set[str] = set()
    neg_head_ok: set[str] = set()
    for atom in alphabet:
        bit = 1 << alphabet.index(atom)
        all_in_j = all_in_i = all_out_j = True
        for se in pairs:
            i, j = se.here.bits, se.there.bits
            if (i, j) in member:
                continue
            if j & bit:
                all_in_j = False
            else:
                all_out_j = False
            if i & bit:
                all_in_i = False
        if all_in_j:
            neg_body.add(atom)
        elif all_in_i:
            pos_head.add(atom)
        if all_out_j:
            neg_head_ok.add(atom)

    ph_mask = alphabet.mask_of(pos_head)
    pos_body: set[str] = set()
    for atom in neg_head_ok:
        bit = 1 << alphabet.index(atom)
        if all((se.here.bits, se.there.bits) in member
               for se in pairs
               if se.there.bits & ph_mask and not se.here.bits & bit):
            pos_body.add(atom)

    return AtomClassification(frozenset(neg_body), frozenset(pos_head),
                              frozenset(pos_body), frozenset(neg_head_ok - pos_body))


def induce_rule(s: SESet, cap: int | None = None) -> Rule:
    """The one rule a set of SE-interpretations can stand for."""
    if s.is_full():
        return EPSILON
    c = classify_atoms(s, cap)
    return Rule(head_pos=c.pos_head, head_neg=c.neg_head,
                body_pos=c.pos_body, body_neg=c.neg_body)
