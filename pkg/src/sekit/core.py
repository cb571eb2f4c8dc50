"""Base value types: alphabets, interpretations, SE-interpretations, rules, programs.

Interpretations are bit vectors over a sorted alphabet, so subset tests and
model checks are plain integer arithmetic. All enumeration helpers return
deterministically ordered tuples: interpretations in binary counting order,
SE-interpretations sorted by (there, here).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

ATOM_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

DEFAULT_ENUMERATION_CAP = 20


class EnumerationCapError(ValueError):
    """An exhaustive enumeration would exceed the configured cap."""


class ScopeError(ValueError):
    """A rule or input mentions an atom outside the working alphabet."""


@dataclass(frozen=True)
class Alphabet:
    """Sorted tuple of distinct atom names; bit i of an interpretation is atoms[i].

    May be empty (e.g. inferred from an empty program), but enumeration over
    interpretations requires at least one atom.
    """

    atoms: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        names = sorted(set(self.atoms))
        for name in names:
            if not ATOM_PATTERN.match(name):
                raise ValueError(f"invalid atom name {name!r}")
        object.__setattr__(self, "atoms", tuple(names))
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(names)})

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self._index

    def index(self, atom: str) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise ScopeError(f"atom '{atom}' is not in alphabet {{{', '.join(self.atoms)}}}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def mask_of(self, atoms: Iterable[str]) -> int:
        mask = 0
        for atom in sorted(set(atoms)):
            mask |= 1 << self.index(atom)
        return mask

    def atoms_of(self, mask: int) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.atoms) if mask >> i & 1)


@dataclass(frozen=True)
class Interpretation:
    """Subset of an alphabet, stored as a bit mask."""

    alphabet: Alphabet
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.alphabet.full_mask:
            raise ValueError(f"bit mask {self.bits:#x} out of range for {len(self.alphabet)} atoms")

    @classmethod
    def of(cls, alphabet: Alphabet, atoms: Iterable[str]) -> "Interpretation":
        return cls(alphabet, alphabet.mask_of(atoms))

    def atoms(self) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.alphabet.atoms) if self.bits >> i & 1)

    def __contains__(self, atom: object) -> bool:
        # atoms outside the alphabet are simply false
        i = self.alphabet._index.get(atom)  # type: ignore[arg-type]
        return i is not None and bool(self.bits >> i & 1)

    def issubset(self, other: "Interpretation") -> bool:
        if self.alphabet != other.alphabet:
            raise ValueError("interpretations over different alphabets")
        return self.bits & ~other.bits == 0

    def __le__(self, other: "Interpretation") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Interpretation") -> bool:
        return self.issubset(other) and self.bits != other.bits

    def __repr__(self) -> str:
        return "{" + ",".join(self.atoms()) + "}"


@dataclass(frozen=True)
class SEInterpretation:
    """Pair <here, there> with here a subset of there, both over one alphabet."""

    here: Interpretation
    there: Interpretation

    def __post_init__(self) -> None:
        if self.here.alphabet != self.there.alphabet:
            raise ValueError("here and there use different alphabets")
        if self.here.bits & ~self.there.bits:
            raise ValueError(f"here {self.here!r} is not a subset of there {self.there!r}")

    @property
    def alphabet(self) -> Alphabet:
        return self.there.alphabet

    def sort_key(self) -> tuple[int, int]:
        return (self.there.bits, self.here.bits)

    def __repr__(self) -> str:
        return f"<{self.here!r},{self.there!r}>"


@dataclass(frozen=True)
class Rule:
    """Disjunctive rule  H+ ; not H-  :-  B+, not B-.

    The four parts are sets of atom names; any iterable is accepted and
    collapsed to a frozenset. ``is_epsilon`` marks the canonical tautology,
    which carries no atoms and is satisfied by every SE-interpretation.
    """

    head_pos: frozenset[str] = frozenset()
    head_neg: frozenset[str] = frozenset()
    body_pos: frozenset[str] = frozenset()
    body_neg: frozenset[str] = frozenset()
    is_epsilon: bool = False

    def __post_init__(self) -> None:
        for name in ("head_pos", "head_neg", "body_pos", "body_neg"):
            value = frozenset(getattr(self, name))
            for atom in value:
                if not ATOM_PATTERN.match(atom):
                    raise ValueError(f"invalid atom name {atom!r}")
            object.__setattr__(self, name, value)
        if self.is_epsilon and self.atoms:
            raise ValueError("the canonical tautology carries no atoms")

    @property
    def atoms(self) -> frozenset[str]:
        return self.head_pos | self.head_neg | self.body_pos | self.body_neg

    def __repr__(self) -> str:
        if self.is_epsilon:
            return "Rule(#taut)"
        part = lambda s: "{" + ",".join(sorted(s)) + "}"
        return (f"Rule({part(self.head_pos)};~{part(self.head_neg)}"
                f" <- {part(self.body_pos)},~{part(self.body_neg)})")


EPSILON = Rule(is_epsilon=True)


def rule_key(rule: Rule) -> tuple:
    """Total order on rules, for deterministic witness and output selection."""
    if rule.is_epsilon:
        return (1, (), (), (), ())
    return (0, tuple(sorted(rule.head_pos)), tuple(sorted(rule.head_neg)),
            tuple(sorted(rule.body_pos)), tuple(sorted(rule.body_neg)))


@dataclass(frozen=True)
class Program:
    """Finite set of rules."""

    rules: frozenset[Rule] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", frozenset(self.rules))

    @property
    def atoms(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for rule in self.rules:
            out |= rule.atoms
        return out

    def __iter__(self) -> Iterator[Rule]:
        return iter(sorted(self.rules, key=rule_key))

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, rule: object) -> bool:
        return rule in self.rules


@dataclass(frozen=True)
class SESet:
    """Set of SE-interpretations over one alphabet."""

    alphabet: Alphabet
    models: frozenset[SEInterpretation] = frozenset()

    def __post_init__(self) -> None:
        models = frozenset(self.models)
        for m in models:
            if m.alphabet != self.alphabet:
                raise ValueError(f"SE-interpretation {m!r} is not over alphabet {self.alphabet.atoms}")
        object.__setattr__(self, "models", models)

    @classmethod
    def full(cls, alphabet: Alphabet, cap: int | None = None) -> "SESet":
        return cls(alphabet, frozenset(all_se_interpretations(alphabet, cap)))

    def is_full(self) -> bool:
        return len(self.models) == 3 ** len(self.alphabet)

    def sorted_models(self) -> list[SEInterpretation]:
        return sorted(self.models, key=SEInterpretation.sort_key)

    def complement(self, cap: int | None = None) -> "SESet":
        universe = frozenset(all_se_interpretations(self.alphabet, cap))
        return SESet(self.alphabet, universe - self.models)

    def sort_key(self) -> tuple:
        return tuple(m.sort_key() for m in self.sorted_models())

    def __contains__(self, se: object) -> bool:
        return se in self.models

    def __len__(self) -> int:
        return len(self.models)

    def __iter__(self) -> Iterator[SEInterpretation]:
        return iter(self.sorted_models())

    def __or__(self, other: "SESet") -> "SESet":
        if self.alphabet != other.alphabet:
            raise ValueError("SE-sets over different alphabets")
        return SESet(self.alphabet, self.models | other.models)

    def __and__(self, other: "SESet") -> "SESet":
        if self.alphabet != other.alphabet:
            raise ValueError("SE-sets over different alphabets")
        return SESet(self.alphabet, self.models & other.models)


def _check_enumerable(alphabet: Alphabet, cap: int | None) -> None:
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if len(alphabet) == 0:
        raise ValueError("enumeration requires a nonempty alphabet")
    if len(alphabet) > limit:
        raise EnumerationCapError(
            f"alphabet has {len(alphabet)} atoms, exceeding the enumeration cap of {limit}")


@lru_cache(maxsize=128)
def _interpretations(alphabet: Alphabet) -> tuple[Interpretation, ...]:
    return tuple(Interpretation(alphabet, bits) for bits in range(1 << len(alphabet)))


def all_interpretations(alphabet: Alphabet, cap: int | None = None) -> tuple[Interpretation, ...]:
    """All 2^n subsets of the alphabet in binary counting order."""
    _check_enumerable(alphabet, cap)
    return _interpretations(alphabet)


@lru_cache(maxsize=128)
def _se_interpretations(alphabet: Alphabet) -> tuple[SEInterpretation, ...]:
    interps = _interpretations(alphabet)
    out = []
    for j_bits in range(1 << len(alphabet)):
        there = interps[j_bits]
        for i_bits in range(j_bits + 1):
            if i_bits & j_bits == i_bits:
                out.append(SEInterpretation(interps[i_bits], there))
    return tuple(out)


def all_se_interpretations(alphabet: Alphabet, cap: int | None = None) -> tuple[SEInterpretation, ...]:
    """All 3^n SE-interpretations, sorted by (there, here)."""
    _check_enumerable(alphabet, cap)
    return _se_interpretations(alphabet)
