"""Dempster-Shafer evidence fusion for classifier ensembles."""

from .compact import CompactMass, compact_combine, compact_combine_all, lift_to_general
from .decision import DecisionResult, expected_utilities, predict
from .errors import DstFuseError, TotalConflict
from .evidence import BuildPolicy, ScoreVector, build_evidence, build_mass
from .frame import Frame, SubsetMask, make_frame, powerset_iter
from .mass import (
    ConflictReport,
    MassFunction,
    bel,
    combine_all,
    combine_pair,
    commonality,
    doubt,
    new_mass,
    normalize_mass,
    pl,
    vacuous_mass,
)
from .pipeline import FusionReport, emit_report, evaluate, render_json, render_table
from .scores_io import ScoreMatrix, load_labels, load_scores
from .synth import generate_fixture

__version__ = "0.1.0"

__all__ = [
    "BuildPolicy",
    "CompactMass",
    "ConflictReport",
    "DecisionResult",
    "DstFuseError",
    "Frame",
    "FusionReport",
    "MassFunction",
    "ScoreMatrix",
    "ScoreVector",
    "SubsetMask",
    "TotalConflict",
    "bel",
    "build_evidence",
    "build_mass",
    "combine_all",
    "combine_pair",
    "commonality",
    "compact_combine",
    "compact_combine_all",
    "doubt",
    "emit_report",
    "evaluate",
    "expected_utilities",
    "generate_fixture",
    "lift_to_general",
    "load_labels",
    "load_scores",
    "make_frame",
    "new_mass",
    "normalize_mass",
    "pl",
    "powerset_iter",
    "predict",
    "render_json",
    "render_table",
    "vacuous_mass",
    "__version__",
]
