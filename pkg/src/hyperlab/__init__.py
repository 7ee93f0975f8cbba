"""Krasner (m,n)-hyperrings and interval-valued fuzzy hyperideals, decided exactly."""

from .classifiers import (AlphaBeta, ClassReport, Condition, ThresholdPair, Variant,
                          is_alpha_beta, is_in_invq_closed, is_ordinary, is_threshold,
                          level_criterion, upper_conditions)
from .hyperstructure import (KrasnerHyperring, enumerate_hyperideals, f_ext, f_iter,
                             is_hyperideal, make_hyperring, paper_24, validate_krasner,
                             validated, zmod)
from .implication import (ImplicationOperator, imp_interval, imp_scalar, is_fuzzifying,
                          is_t_implication_based)
from .intervals import IntervalValue, iv_const, iv_new, rmax, rmin
from .ivfuzzy import (IVFuzzySet, IVFuzzyPoint, PointRelation, Semantics, characteristic,
                      critical_thresholds, equivalent, level_set, satisfies)
from .kernels import IMPLEMENTATION

__version__ = "0.1.0"
