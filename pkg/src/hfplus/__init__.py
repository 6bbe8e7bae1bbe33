"""Heegaard Floer homology of Seifert-fibered integer homology spheres.

Computes HF+(-Sigma) from Seifert invariants through the tau function and its
graded root, and checks closed-form families against that computation.
"""

from ._kernels import BACKEND
from .errors import (
    DomainEdge,
    EmptyList,
    HFError,
    InternalInconsistency,
    InvalidArgs,
    MalformedInput,
    MalformedSequence,
    NonIntegralShift,
    NotCoprime,
    NotInvertible,
    UnsupportedTriple,
)
from .exactmath import Rational, dedekind_euclid, dedekind_naive, eval_hj, hj_expansion
from .gradedroot import GradedRoot, HFPlusModule, build_root, d_invariant_direct, grading_shift, hf_plus
from .plumbing import PlumbingGraph, star_plumbing
from .seifert import SeifertInvariants, brieskorn_seifert, surgery_target
from .semigroup import TorusKnotSemigroup
from .tau import ReducedTau, TauFunction, reduced_tau, tau_sequence

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomainEdge",
    "EmptyList",
    "GradedRoot",
    "HFError",
    "HFPlusModule",
    "InternalInconsistency",
    "InvalidArgs",
    "MalformedInput",
    "MalformedSequence",
    "NonIntegralShift",
    "NotCoprime",
    "NotInvertible",
    "PlumbingGraph",
    "Rational",
    "ReducedTau",
    "SeifertInvariants",
    "TauFunction",
    "TorusKnotSemigroup",
    "UnsupportedTriple",
    "brieskorn_seifert",
    "build_root",
    "d_invariant_direct",
    "dedekind_euclid",
    "dedekind_naive",
    "eval_hj",
    "grading_shift",
    "hf_plus",
    "hj_expansion",
    "reduced_tau",
    "star_plumbing",
    "surgery_target",
    "tau_sequence",
]
