"""Realizability search, bisection certificates and the unimodular realizability grid."""

from .models import SCHEMA, SearchReport, Witness
from .realizability import (
    NegativePairResult,
    ScalarSurvey,
    bisection_certificate,
    negative_pair_property,
    realizability_search,
    replay_witness,
    scalar_survey,
    segment_curve,
    zero_crossing_bisect,
)
from .report import diff_grid, grid_csv, replay_report, search_grid, table3_grid, to_json
from .table3 import Table3Report, load_table3, verify_table3
from .witnesses import load_witnesses, witnesses_for

__all__ = [
    "NegativePairResult",
    "SCHEMA",
    "ScalarSurvey",
    "SearchReport",
    "Table3Report",
    "Witness",
    "bisection_certificate",
    "diff_grid",
    "grid_csv",
    "load_table3",
    "load_witnesses",
    "negative_pair_property",
    "realizability_search",
    "replay_report",
    "replay_witness",
    "scalar_survey",
    "search_grid",
    "segment_curve",
    "table3_grid",
    "to_json",
    "verify_table3",
    "witnesses_for",
]
