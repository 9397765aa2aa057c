"""Exact re-verification of the inequality lemmas and the admissibility thresholds."""

from .core import (CF, Check, Comparison, ConstantCheck, KOutOfRange, LemmaCheck, LemmaReport,
                   REGISTRY, UnknownLemma, verify_all, verify_lemma)
from . import local, extension, replication  # noqa: F401  (registers entries)
from .thresholds import (ThresholdCollapse, Thresholds, interleaving_report, lambda_1, threshold,
                         thresholds)
