"""SE-model semantics for single logic-program rules.

Compute SE-models of disjunctive rules and programs, canonicalize rules
syntactically, reconstruct the unique rule behind a set of
SE-interpretations, decide whether such a set is any rule's SE-model set,
and decide four program-equivalence notions of increasing strength.
"""
from .canonical import is_canonical, secan
from .core import (EPSILON, Alphabet, EnumerationCapError, Interpretation, Program,
                   Rule, ScopeError, SEInterpretation, SESet, all_interpretations,
                   all_se_interpretations, rule_key)
from .equivalence import (EquivalenceNotion, EquivalenceReport, FamilyWitness,
                          SEModelWitness, TautologyWitness, equivalence_report,
                          se_equivalent_rules, smr_equivalent, sr_equivalent,
                          strongly_equivalent, su_equivalent)
from .lattice import (Interval, interval_countermodels, intervals_to_rule,
                      is_rule_representable, rule_to_countermodel_intervals)
from .oracle import (ClosureCounterexample, ClosureReport, brute_representable,
                     closure_experiment, count_se_classes, enumerate_rules)
from .parser import ParseError, SourceProgram, parse_program, parse_rule, print_rule
from .reconstruct import AtomClassification, classify_atoms, induce_rule
from .semantics import (answer_sets, c_models, is_c_model, is_se_model,
                        is_se_tautology, is_well_defined, reduct, se_models,
                        se_models_program)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "AtomClassification", "ClosureCounterexample", "ClosureReport",
    "EPSILON", "EnumerationCapError", "EquivalenceNotion", "EquivalenceReport",
    "FamilyWitness", "Interpretation", "Interval", "ParseError", "Program",
    "Rule", "SEInterpretation", "SEModelWitness", "SESet", "ScopeError",
    "SourceProgram", "TautologyWitness", "all_interpretations",
    "all_se_interpretations", "answer_sets", "brute_representable", "c_models",
    "classify_atoms", "closure_experiment", "count_se_classes", "enumerate_rules",
    "equivalence_report", "induce_rule", "interval_countermodels",
    "intervals_to_rule", "is_c_model", "is_canonical", "is_rule_representable",
    "is_se_model", "is_se_tautology", "is_well_defined", "parse_program",
    "parse_rule", "print_rule", "reduct", "rule_key", "rule_to_countermodel_intervals",
    "se_equivalent_rules", "se_models", "se_models_program", "secan",
    "smr_equivalent", "sr_equivalent", "strongly_equivalent", "su_equivalent",
]
