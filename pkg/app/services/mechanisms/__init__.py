"""Auction mechanism exports."""

from app.services.mechanisms.framework_u import check_epsilon, demand_query, draw_labels, framework_u
from app.services.mechanisms.models import MechanismResult, TraceRecord, settle
from app.services.mechanisms.po import po_auction
from app.services.mechanisms.registry import MECHANISMS, MechanismSpec, get_mechanism, run_mechanism
from app.services.mechanisms.revenue_max import revenue_max_payasbid
from app.services.mechanisms.rules_3x4 import demo_3x4_rule, query_3x4_rule
from app.services.mechanisms.single_parameter import single_parameter_greedy
from app.services.mechanisms.strongest import strongest_bidder
from app.services.mechanisms.two_by_two import (
    exact_expected_revenue,
    golden_case,
    golden_ratio,
    lottery_2x2,
    randomized_2x2,
    split_probability,
)

__all__ = [
    "MECHANISMS",
    "MechanismResult",
    "MechanismSpec",
    "TraceRecord",
    "check_epsilon",
    "demand_query",
    "demo_3x4_rule",
    "draw_labels",
    "exact_expected_revenue",
    "framework_u",
    "get_mechanism",
    "golden_case",
    "golden_ratio",
    "lottery_2x2",
    "po_auction",
    "query_3x4_rule",
    "randomized_2x2",
    "revenue_max_payasbid",
    "run_mechanism",
    "settle",
    "single_parameter_greedy",
    "split_probability",
    "strongest_bidder",
]
