"""Canonical forms and isomorphism of 3-dimensional algebras with independent
trace vectors, in exact arithmetic."""
from .catalog import FamilyId, GuardViolated, MissingParam
from .engine import ClassificationResult, InternalContradiction, UnsupportedCharacteristic
from .field import FieldCtx, Scalar, canonical_order, solve_quadratic, sqrt
from .msc import BasisChange, Msc, StabilizerParams, act, act_stabilizer, kron, multiply, traces
from .normalize import NormalizedMsc, TraceDependent, normalize_traces, trace_independent
from .oracle import brute_force_iso, census, classify

__all__ = [
    "BasisChange", "ClassificationResult", "FamilyId", "FieldCtx", "GuardViolated",
    "InternalContradiction", "MissingParam", "Msc", "NormalizedMsc", "Scalar",
    "StabilizerParams", "TraceDependent", "UnsupportedCharacteristic", "act",
    "act_stabilizer", "brute_force_iso", "canonical_order", "census", "classify", "kron",
    "multiply", "normalize_traces", "solve_quadratic", "sqrt", "trace_independent", "traces",
]
