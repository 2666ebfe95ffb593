from wreath.depth import (DepthReport, depth, depth_profile, is_dead_end, iter_depth_profile, profile_summary,
                          retreat_depth, word_length_bfs)
from wreath.elements import Lamplighter, WreathElement, lamplighter_from_spec, neighbors, wreath_multiply
from wreath.metric import MetricBackend, WordMetric, choose_backend, word_length
from wreath.verdicts import CaseReport, Verdict, classify_abelian_free_product, depth_bound, depth_verdict
from wreath.witnesses import (DeadEndConditions, lit_interval_witness, finite_base_deepest_element,
                              free_dead_end_conditions, lit_ball_element)
