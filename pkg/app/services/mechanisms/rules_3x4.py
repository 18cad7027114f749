"""Two fixed allocation rules for three bidders and four identical units."""

from __future__ import annotations

from common.market import Market

from .models import MechanismResult, Trace, require_multi_unit, settle

DEMO_ID = "demo3x4"
QUERY_ID = "query3x4"


def demo_3x4_rule(market: Market) -> MechanismResult:
    """Five-clause rule; the first clause that holds decides, none means no sale.

    1. v0(4) beats both others and v0(4) > v1(2) + v2(2): (4,0,0)
    2. v1(4) beats both others and v1(4) > v0(2) + v2(2): (0,4,0)
    3. v2(4) beats both others: (0,0,4)
    4. v0(4) beats both others: (0,2,2)
    5. v1(4) beats both others: (2,0,2)

    Under-reporting the grand bundle can move bidder 0 from clause 4 to
    clause 5, so the rule is manipulable.
    """
    require_multi_unit(market, 3, 4, DEMO_ID)
    two = [valuation.value_query(2) for valuation in market.valuations]
    four = [valuation.value_query(4) for valuation in market.valuations]

    def tops(bidder: int) -> bool:
        return all(four[bidder] > four[other] for other in range(3) if other != bidder)

    clauses = (
        (tops(0) and four[0] > two[1] + two[2], (4, 0, 0)),
        (tops(1) and four[1] > two[0] + two[2], (0, 4, 0)),
        (tops(2), (0, 0, 4)),
        (tops(0), (0, 2, 2)),
        (tops(1), (2, 0, 2)),
    )
    trace = Trace()
    bundles = (0, 0, 0)
    for number, (holds, allocation) in enumerate(clauses, start=1):
        if holds:
            bundles = allocation
            trace.add("clause", number=number)
            break
    else:
        trace.add("no-clause")
    return MechanismResult(DEMO_ID, settle(market, bundles), trace.freeze())


def query_3x4_rule(market: Market) -> MechanismResult:
    """One value query per bidder: (4,0,0) if v0(4) > v1(2) + v2(2), else (0,2,2).

    Each bidder can only win the bundle its queried value refers to, so
    misreporting never helps.
    """
    require_multi_unit(market, 3, 4, QUERY_ID)
    grand = market.valuations[0].value_query(4)
    pair = market.valuations[1].value_query(2) + market.valuations[2].value_query(2)
    bundles = (4, 0, 0) if grand > pair else (0, 2, 2)
    trace = Trace()
    trace.add("query", grand_wins=grand > pair)
    return MechanismResult(QUERY_ID, settle(market, bundles), trace.freeze())


__all__ = ["demo_3x4_rule", "query_3x4_rule"]
