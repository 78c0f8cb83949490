"""Which signatures does A4_9^beta realize, regime by regime?

    beta in (-1, -1/2)   {3, 5, 6}
    beta = -1/2          {3, 4, 5, 6}
    beta in (-1/2, 1)    {1, ..., 6}
    beta = 1             {1, 2, 3}

Each expected signature is witnessed positively by a closed-form parameter
choice or a bisection certificate; random sampling then checks that nothing
outside the set turns up within budget.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Set

from pydantic import BaseModel, ConfigDict, Field

from ..algebra.catalog import make_spec
from ..config.models import SearchConfig, TolerancesConfig
from ..curvature.ricci import ricci_operator
from ..errors import InvalidParams, NoConvergence, NoSignChange
from ..metric.core import A49Params, canonical_a49
from ..search.models import SCHEMA, Witness
from ..search.realizability import realizability_search, zero_crossing_bisect
from ..search.witnesses import witnesses_for
from .a49 import big_f, case_params, case_tail, open_blocks_big_f

logger = logging.getLogger(__name__)

DEFAULT_GRID = [-0.9, -0.75, -0.6, -0.5, -0.25, 0.0, 0.5, 0.9, 1.0]


def regime(beta: float) -> str:
    if not -1.0 < beta <= 1.0:
        raise InvalidParams(f"beta={beta} outside (-1, 1]")
    if beta < -0.5:
        return "(-1,-1/2)"
    if beta == -0.5:
        return "-1/2"
    if beta < 1.0:
        return "(-1/2,1)"
    return "1"


EXPECTED: Dict[str, Set[int]] = {
    "(-1,-1/2)": {3, 5, 6},
    "-1/2": {3, 4, 5, 6},
    "(-1/2,1)": {1, 2, 3, 4, 5, 6},
    "1": {1, 2, 3},
}


def expected_signatures(beta: float) -> Set[int]:
    return set(EXPECTED[regime(beta)])


class BetaResult(BaseModel):
    beta: float
    regime: str
    expected: List[int]
    witnessed: List[int]
    searched: List[int]
    outside: List[int]
    witnesses: Dict[int, Witness]
    samples_used: int
    passed: bool


class Prop1Report(BaseModel):
    schema_version: str = Field(default=SCHEMA, alias="schema")
    seed: int
    budget: int
    results: List[BetaResult]
    passed: bool
    generated_at: Optional[str] = None

    model_config = ConfigDict(populate_by_name=True)


def _point(p: A49Params, source: str, citation: str, zero_rel: float) -> Witness:
    data = ricci_operator(canonical_a49(p), zero_rel)
    return Witness(
        index=data.index,
        signature=str(data.signature),
        source=source,
        a49=p.to_dict(),
        eigenvalues=[float(v) for v in data.eigenvalues],
        citation=citation,
    )


def _crossing(
    family: Callable[[float], A49Params],
    eig_index: int,
    lo: float,
    hi: float,
    citation: str,
    tolerances: TolerancesConfig,
    deflate: Sequence[int] = (),
) -> Optional[Witness]:
    try:
        t, data = zero_crossing_bisect(
            lambda t: canonical_a49(family(t)), eig_index, lo, hi,
            deflate=deflate, bisect_rel=tolerances.bisect_rel, zero_rel=tolerances.zero_rel,
        )
    except (NoSignChange, NoConvergence) as e:
        logger.warning("Bisection failed (%s): %s", citation, e)
        return None
    return Witness(
        index=data.index,
        signature=str(data.signature),
        source="bisection",
        a49=family(t).to_dict(),
        eigenvalues=[float(v) for v in data.eigenvalues],
        citation=f"{citation}, t={t:.17g}",
    )


def _open_blocks(beta: float, tolerances: TolerancesConfig) -> List[Optional[Witness]]:
    """b = 2a, c = d = 0: f = 0, large f, and the crossing in between."""
    def family(f: float) -> A49Params:
        return A49Params(a=1.0, b=2.0, c=0.0, d=0.0, f=f, beta=beta)

    f_big = open_blocks_big_f(1.0, beta)
    zero_rel = tolerances.zero_rel
    return [
        _point(family(0.0), "closed-form", "b = 2a, c = d = f = 0: (2,3) block negative definite", zero_rel),
        _point(family(f_big), "closed-form", f"b = 2a, c = d = 0, f = {f_big:g}: (2,3) block indefinite", zero_rel),
        _crossing(family, 2, 0.0, f_big, "b = 2a, c = d = 0: det of (2,3) block crosses zero", tolerances),
    ]


def _middle(beta: float, tolerances: TolerancesConfig) -> List[Optional[Witness]]:
    """beta in (-1/2, 1): the three factorized parameter cases."""
    zero_rel = tolerances.zero_rel
    f2 = big_f(case_params("b2", beta), case_tail("b2", beta))
    f3 = big_f(case_params("b3", beta), case_tail("b3", beta))
    return [
        _point(case_params("ab1", beta), "closed-form", "a = b = 1, c = d = f = 0", zero_rel),
        _point(case_params("b2", beta, 0.0), "closed-form", "a = 1, b = 2(1+beta), c = d = f = 0", zero_rel),
        _point(case_params("b3", beta, 0.0), "closed-form", "a = 1, b = 3(1+beta), c = d = f = 0", zero_rel),
        # f1 is an exact null eigenvector along this family; track the largest remaining eigenvalue
        _crossing(
            lambda f: case_params("b2", beta, f), 2, 0.0, f2,
            "a = 1, b = 2(1+beta), c = d = 0: quadratic factor crosses zero", tolerances, deflate=(0,),
        ),
        _point(case_params("b2", beta, f2), "closed-form", f"a = 1, b = 2(1+beta), c = d = 0, f = {f2:g}", zero_rel),
        _point(case_params("b3", beta, f3), "closed-form", f"a = 1, b = 3(1+beta), c = d = 0, f = {f3:g}", zero_rel),
    ]


def _beta_one(tolerances: TolerancesConfig) -> List[Optional[Witness]]:
    def family(b: float) -> A49Params:
        return A49Params(a=1.0, b=b, c=0.0, d=0.0, f=0.0, beta=1.0)

    return [_crossing(family, 3, 1.0, 6.0, "beta = 1, a = 1, c = d = 0: first diagonal entry crosses zero", tolerances)]


def regime_witnesses(beta: float, tolerances: Optional[TolerancesConfig] = None) -> Dict[int, Witness]:
    """Closed-form and bisection witnesses for one beta (shipped witnesses included)."""
    tolerances = tolerances or TolerancesConfig()
    name = regime(beta)
    if name in ("(-1,-1/2)", "-1/2"):
        candidates = _open_blocks(beta, tolerances)
    elif name == "(-1/2,1)":
        candidates = _middle(beta, tolerances)
    else:
        candidates = _beta_one(tolerances)

    found = witnesses_for(make_spec("A4_9", beta=beta))
    for witness in candidates:
        if witness is not None:
            found.setdefault(witness.index, witness)
    return dict(sorted(found.items()))


def verify_prop1(
    grid: Sequence[float] = DEFAULT_GRID,
    budget: int = 2000,
    seed: int = 0,
    search: Optional[SearchConfig] = None,
    tolerances: Optional[TolerancesConfig] = None,
) -> Prop1Report:
    """
    Witness every expected signature per beta and search for unexpected ones.

    Returns:
        Prop1Report; a beta passes when the witnessed set equals the
        expected set and sampling finds nothing outside it
    """
    search = search or SearchConfig()
    tolerances = tolerances or TolerancesConfig()

    results = []
    for beta in grid:
        expected = expected_signatures(beta)
        witnesses = regime_witnesses(beta, tolerances)
        report = realizability_search(make_spec("A4_9", beta=beta), budget, seed, search, tolerances)

        witnessed = set(witnesses)
        searched = set(report.found)
        outside = (witnessed | searched) - expected
        passed = witnessed == expected and not outside
        if not passed:
            logger.warning(
                "beta=%g: witnessed %s, outside %s, expected %s",
                beta, sorted(witnessed), sorted(outside), sorted(expected),
            )
        results.append(
            BetaResult(
                beta=beta,
                regime=regime(beta),
                expected=sorted(expected),
                witnessed=sorted(witnessed),
                searched=sorted(searched),
                outside=sorted(outside),
                witnesses=witnesses,
                samples_used=report.samples_used,
                passed=passed,
            )
        )

    return Prop1Report(
        seed=seed,
        budget=budget,
        results=results,
        passed=all(r.passed for r in results),
    )
