"""Monogamy and polygamy bound builders and verifiers for W-class states.

Every check produces a :class:`MonogamyReport` rather than raising on a
failed inequality: premise failures yield the verdict ``premises-unmet``,
numerical violations yield ``violated``.  Whenever a term comes from the
convex-roof search the report's tolerance widens and the term's bound
direction is recorded, so all verdicts are honest one-sided statements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .measures import (
    RoofOptions,
    coa_mixed,
    coa_two_qubit,
    concurrence_mixed,
    concurrence_pure,
    cren_mixed,
    negativity_pure,
    roof_maximize,
    roof_minimize,
    wootters_concurrence,
)
from .qudit import PureState
from .wclass import (
    Partition,
    build_wclass_state,
    example_coefficients,
    is_wclass_support,
    reduce_to_partition,
)

# Reference values distributed alongside the built-in example state; kept
# verbatim so reports can compare them against what the oracles compute.
PUBLISHED_EXAMPLE_VALUES = {
    "concurrence_0_1": 1.0 / 3.0,
    "concurrence_0_2": 2.0 / 3.0,
    "concurrence_0_rest": math.sqrt(5.0) / 3.0,
}

CLOSED_FORM_METHODS = ("closed-form", "pure")


# ---------------------------------------------------------------------------
# scalar building blocks
# ---------------------------------------------------------------------------

def power_inequality_residual(x, t):
    """(1+t)^x - 1 - (2^x - 1) t^x, nonnegative for x in [0,1], t >= 1.

    Accepts scalars or arrays; raises on domain violations.
    """
    xa = np.asarray(x, dtype=float)
    ta = np.asarray(t, dtype=float)
    if np.any(xa < 0.0) or np.any(xa > 1.0):
        raise ValueError("x must lie in [0, 1]")
    if np.any(ta < 1.0):
        raise ValueError("t must be >= 1")
    res = (1.0 + ta) ** xa - 1.0 - (2.0**xa - 1.0) * ta**xa
    if np.isscalar(x) and np.isscalar(t):
        return float(res)
    return res


def power_ratio(x, t):
    """((1+t)^x - 1) / t^x; non-decreasing in t for x in [0,1], t >= 1."""
    xa = np.asarray(x, dtype=float)
    ta = np.asarray(t, dtype=float)
    if np.any(ta <= 0.0):
        raise ValueError("t must be positive")
    res = ((1.0 + ta) ** xa - 1.0) / ta**xa
    if np.isscalar(x) and np.isscalar(t):
        return float(res)
    return res


@dataclass(frozen=True)
class PowerParams:
    """Exponent pair (alpha, beta) with the derived weight h = 2^(beta/alpha) - 1."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if self.alpha < 2.0:
            raise ValueError(f"alpha must be >= 2, got {self.alpha}")
        if not 0.0 <= self.beta <= self.alpha:
            raise ValueError(f"beta must lie in [0, alpha], got beta={self.beta}")

    @property
    def h(self) -> float:
        return 2.0 ** (self.beta / self.alpha) - 1.0


def two_term_bound(v_max: float, v_min: float, pp: PowerParams) -> float:
    """h * v_max^beta + v_min^beta, the weighted two-pair lower bound."""
    if v_min < 0.0 or v_max < v_min:
        raise ValueError(f"need v_max >= v_min >= 0, got {v_max}, {v_min}")
    return pp.h * v_max**pp.beta + v_min**pp.beta


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Premise:
    condition: str
    satisfied: bool

    def to_dict(self) -> dict:
        return {"condition": self.condition, "satisfied": bool(self.satisfied)}


@dataclass(frozen=True)
class RhsTerm:
    label: str
    value: float
    coefficient: float

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "value": float(self.value),
            "coefficient": float(self.coefficient),
        }


@dataclass(frozen=True)
class MonogamyReport:
    """Outcome of one inequality or equality instance.

    ``lhs`` is always the side asserted to dominate, so the defining
    relation is residual = lhs - sum(coefficient * value) and the verdict
    is ``holds`` when the residual clears ``-tolerance`` (inequalities) or
    stays within ``tolerance`` in magnitude (equalities), provided every
    premise is satisfied.
    """

    inequality_id: str
    kind: str  # "inequality" | "equality"
    lhs: float
    rhs_terms: tuple[RhsTerm, ...]
    residual: float
    premises: tuple[Premise, ...]
    verdict: str
    tolerance: float
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.inequality_id,
            "kind": self.kind,
            "lhs": float(self.lhs),
            "rhs_terms": [t.to_dict() for t in self.rhs_terms],
            "residual": float(self.residual),
            "premises": [p.to_dict() for p in self.premises],
            "verdict": self.verdict,
            "tolerance": float(self.tolerance),
            "extras": self.extras,
        }


def _verdict(premises: Sequence[Premise], residual: float, tol: float, kind: str) -> str:
    if not all(p.satisfied for p in premises):
        return "premises-unmet"
    if kind == "equality":
        return "holds" if abs(residual) <= tol else "violated"
    return "holds" if residual >= -tol else "violated"


def _auto_tol(kind: str, any_roof: bool) -> float:
    if kind == "equality":
        return 1e-2 if any_roof else 5e-3
    return 5e-3 if any_roof else 1e-9


def _fmt_block(block: Iterable[int]) -> str:
    return "{" + ",".join(str(s) for s in block) + "}"


@dataclass(frozen=True)
class ValuedPremise:
    condition: str
    lhs: float
    rhs: float
    satisfied: bool

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "lhs": float(self.lhs),
            "rhs": float(self.rhs),
            "satisfied": bool(self.satisfied),
        }


@dataclass(frozen=True)
class OrderingCertificate:
    """Valued ordering premises for one split of the chained bound."""

    split: int
    premises: tuple[ValuedPremise, ...]

    @property
    def passed(self) -> bool:
        return all(p.satisfied for p in self.premises)

    def to_dict(self) -> dict:
        return {
            "split": self.split,
            "passed": self.passed,
            "premises": [p.to_dict() for p in self.premises],
        }


# ---------------------------------------------------------------------------
# measure plumbing
# ---------------------------------------------------------------------------

def _pair_density(state: PureState, block_a: tuple[int, ...], block_b: tuple[int, ...]):
    return reduce_to_partition(state, Partition((block_a, block_b))).density


def _mixed_value(rho, measure: str, opts: RoofOptions | None) -> tuple[float, str]:
    if measure == "coa":
        return coa_mixed(rho, opts)
    if measure == "cren":
        return cren_mixed(rho, opts)
    if measure == "concurrence":
        return concurrence_mixed(rho, opts)
    raise ValueError(f"unknown measure {measure!r}")


def _pure_split(state: PureState, part_a: tuple[int, ...], measure: str) -> float:
    # For a pure bipartition both CoA and the convex roof collapse to the
    # pure-state value, so coa/cren reduce to the pure formulas.
    if measure in ("coa", "concurrence"):
        return concurrence_pure(state, part_a)
    if measure == "cren":
        return negativity_pure(state, part_a)
    raise ValueError(f"unknown measure {measure!r}")


def _split_value(
    state: PureState,
    focus: tuple[int, ...],
    others: tuple[int, ...],
    measure: str,
    opts: RoofOptions | None,
) -> tuple[float, str]:
    """Measure of focus | others, traced down from the full pure state."""
    if set(focus) | set(others) == set(state.shape.sites()):
        return _pure_split(state, focus, measure), "pure"
    rho = _pair_density(state, focus, tuple(sorted(others)))
    return _mixed_value(rho, measure, opts)


# ---------------------------------------------------------------------------
# three-block bound
# ---------------------------------------------------------------------------

def verify_triple_bound(
    state: PureState,
    triple: Partition,
    pp: PowerParams,
    measure: str = "coa",
    opts: RoofOptions | None = None,
) -> MonogamyReport:
    """Check lhs^beta >= h * max_pair^beta + min_pair^beta on a 3-block partition.

    The focus block is the partition's first block.  Pair values come from
    the exact two-qubit oracles when possible and the roof search
    otherwise; the split value uses the pure formula when the partition
    covers every site and the roof search when it does not.
    """
    if triple.m != 3:
        raise ValueError(f"need exactly 3 blocks, got {triple.m}")
    p1, p2, p3 = triple.blocks
    premises = [Premise("state has W-class support", is_wclass_support(state))]

    v2, m2 = _mixed_value(_pair_density(state, p1, p2), measure, opts)
    v3, m3 = _mixed_value(_pair_density(state, p1, p3), measure, opts)
    others = tuple(sorted(p2 + p3))
    lhs_val, m_lhs = _split_value(state, p1, others, measure, opts)

    v_max, v_min = (v2, v3) if v2 >= v3 else (v3, v2)
    lab_max = _fmt_block(p1) + "-" + _fmt_block(p2 if v2 >= v3 else p3)
    lab_min = _fmt_block(p1) + "-" + _fmt_block(p3 if v2 >= v3 else p2)
    beta = pp.beta
    rhs_terms = (
        RhsTerm(f"max pair {lab_max}^beta", v_max**beta, pp.h),
        RhsTerm(f"min pair {lab_min}^beta", v_min**beta, 1.0),
    )
    lhs_pow = lhs_val**beta
    residual = lhs_pow - two_term_bound(v_max, v_min, pp)
    methods = (m2, m3, m_lhs)
    any_roof = any(m not in CLOSED_FORM_METHODS for m in methods)
    tol = _auto_tol("inequality", any_roof)
    return MonogamyReport(
        inequality_id=f"triple-{measure}",
        kind="inequality",
        lhs=lhs_pow,
        rhs_terms=rhs_terms,
        residual=residual,
        premises=tuple(premises),
        verdict=_verdict(premises, residual, tol, "inequality"),
        tolerance=tol,
        extras={
            "alpha": pp.alpha,
            "beta": pp.beta,
            "h": pp.h,
            "split_value": lhs_val,
            "pair_values": {lab_max: v_max, lab_min: v_min},
            "methods": {"lhs": m_lhs, "pairs": [m2, m3]},
        },
    )


# ---------------------------------------------------------------------------
# chained bound
# ---------------------------------------------------------------------------

def chained_bound(
    pair_values: Sequence[float],
    tail_values: Sequence[float],
    split: int,
    pp: PowerParams,
) -> tuple[float, OrderingCertificate]:
    """Telescoped multi-block bound and its ordering certificate.

    ``pair_values[i]`` is the pair measure of the focus block with block
    i+2 (1-based block numbering, blocks 2..m); ``tail_values[j]`` is the
    aggregate measure of the focus block against blocks j+3..m merged, for
    j+3 in 3..m.  ``split`` is the block index s in 1..m-1 at which the
    telescoping switches from treating the single pair as the smaller side
    (blocks 2..s) to the larger side (blocks s+1..m-1).

    The accumulated bound is
        sum_{i=2..s} h^(i-2) v_i^beta
      + h^s * sum_{i=s+1..m-1} v_i^beta
      + h^(s-1) * v_m^beta.
    """
    m = len(pair_values) + 1
    if m < 2:
        raise ValueError("need at least one pair value")
    if len(tail_values) != max(0, m - 2):
        raise ValueError(f"need {max(0, m - 2)} tail values, got {len(tail_values)}")
    if not 1 <= split <= m - 1:
        raise ValueError(f"split must lie in 1..{m - 1}, got {split}")
    if any(v < 0.0 for v in pair_values):
        raise ValueError("pair values must be nonnegative")

    def pair(i: int) -> float:  # block index i in 2..m
        return float(pair_values[i - 2])

    def tail(j: int) -> float:  # aggregate of blocks j..m, j in 3..m
        return float(tail_values[j - 3])

    h, beta = pp.h, pp.beta
    rhs = 0.0
    for i in range(2, split + 1):
        rhs += h ** (i - 2) * pair(i) ** beta
    for i in range(split + 1, m):
        rhs += h**split * pair(i) ** beta
    rhs += h ** (split - 1) * pair(m) ** beta

    checks: list[ValuedPremise] = []
    for i in range(2, split + 1):
        checks.append(
            ValuedPremise(
                f"pair value of block {i} <= aggregate of blocks {i + 1}..{m}",
                pair(i),
                tail(i + 1),
                pair(i) <= tail(i + 1),
            )
        )
    for j in range(split + 1, m):
        checks.append(
            ValuedPremise(
                f"pair value of block {j} >= aggregate of blocks {j + 1}..{m}",
                pair(j),
                tail(j + 1),
                pair(j) >= tail(j + 1),
            )
        )
    return rhs, OrderingCertificate(split, tuple(checks))


def _chained_bound_shifted(
    pair_values: Sequence[float], split: int, pp: PowerParams
) -> float:
    # Alternate weighting with exponents shifted by one (h^(i-1) in the
    # leading sum, h^m on the last term); reported for comparison only.
    m = len(pair_values) + 1
    h, beta = pp.h, pp.beta
    rhs = 0.0
    for i in range(2, split + 1):
        rhs += h ** (i - 1) * float(pair_values[i - 2]) ** beta
    for i in range(split + 1, m):
        rhs += h**split * float(pair_values[i - 2]) ** beta
    rhs += h**m * float(pair_values[m - 2]) ** beta
    return rhs


def verify_chain_bound(
    state: PureState,
    partition: Partition,
    pp: PowerParams,
    measure: str = "coa",
    opts: RoofOptions | None = None,
) -> MonogamyReport:
    """Check the chained multi-block bound with its ordering premises.

    Tries every split index and keeps the first whose certificate passes;
    if none passes, the split with the most satisfied premises is reported
    and the verdict is ``premises-unmet``.
    """
    m = partition.m
    if m < 3:
        raise ValueError(f"chained bound needs at least 3 blocks, got {m}")
    p1 = partition.blocks[0]
    support = is_wclass_support(state)

    pair_values: list[float] = []
    methods: list[str] = []
    for blk in partition.blocks[1:]:
        v, meth = _mixed_value(_pair_density(state, p1, blk), measure, opts)
        pair_values.append(v)
        methods.append(meth)

    tail_values: list[float] = []
    for j in range(3, m):
        tail_sites = tuple(s for blk in partition.blocks[j - 1 :] for s in blk)
        v, meth = _split_value(state, p1, tail_sites, measure, opts)
        tail_values.append(v)
        methods.append(meth)
    tail_values.append(pair_values[-1])  # the last aggregate is the last pair

    all_sites = tuple(s for blk in partition.blocks for s in blk)
    lhs_val, m_lhs = _split_value(
        state, p1, tuple(s for s in all_sites if s not in p1), measure, opts
    )
    methods.append(m_lhs)

    chosen: tuple[float, OrderingCertificate] | None = None
    fallback: tuple[int, float, OrderingCertificate] | None = None
    for split in range(1, m):
        rhs, cert = chained_bound(pair_values, tail_values, split, pp)
        if cert.passed:
            chosen = (rhs, cert)
            break
        score = sum(p.satisfied for p in cert.premises)
        if fallback is None or score > fallback[0]:
            fallback = (score, rhs, cert)
    if chosen is None:
        assert fallback is not None
        chosen = (fallback[1], fallback[2])
    rhs, cert = chosen

    lhs_pow = lhs_val**pp.beta
    residual = lhs_pow - rhs
    premises = [Premise("state has W-class support", support)] + [
        Premise(p.condition, p.satisfied) for p in cert.premises
    ]
    h, beta = pp.h, pp.beta
    terms = []
    for i in range(2, m + 1):
        if i <= cert.split:
            coeff = h ** (i - 2)
        elif i < m:
            coeff = h**cert.split
        else:
            coeff = h ** (cert.split - 1)
        terms.append(
            RhsTerm(
                f"pair {_fmt_block(p1)}-{_fmt_block(partition.blocks[i - 1])}^beta",
                pair_values[i - 2] ** beta,
                coeff,
            )
        )
    any_roof = any(mm not in CLOSED_FORM_METHODS for mm in methods)
    tol = _auto_tol("inequality", any_roof)
    return MonogamyReport(
        inequality_id=f"chain-{measure}",
        kind="inequality",
        lhs=lhs_pow,
        rhs_terms=tuple(terms),
        residual=residual,
        premises=tuple(premises),
        verdict=_verdict(premises, residual, tol, "inequality"),
        tolerance=tol,
        extras={
            "alpha": pp.alpha,
            "beta": pp.beta,
            "h": pp.h,
            "split": cert.split,
            "certificate": cert.to_dict(),
            "split_value": lhs_val,
            "pair_values": pair_values,
            "tail_values": tail_values,
            "rhs_alt_exponents": _chained_bound_shifted(pair_values, cert.split, pp),
            "methods": methods,
        },
    )


# ---------------------------------------------------------------------------
# equalities
# ---------------------------------------------------------------------------

def check_square_additivity(
    state: PureState,
    partition: Partition,
    focus: int = 0,
    opts: RoofOptions | None = None,
) -> list[MonogamyReport]:
    """Squared-concurrence additivity plus the per-pair CoA = C checks.

    The first report compares C^2(focus | rest) against the sum of squared
    pair concurrences over the remaining blocks; the following reports
    compare each pair's concurrence of assistance with its concurrence.
    """
    if not partition.covers(state.shape):
        raise ValueError("partition must cover all sites")
    if not 0 <= focus < partition.m:
        raise ValueError(f"focus block index {focus} out of range")
    pf = partition.blocks[focus]
    premises = (Premise("state has W-class support", is_wclass_support(state)),)

    lhs = concurrence_pure(state, pf) ** 2
    terms = []
    methods = []
    reports: list[MonogamyReport] = []
    for k, blk in enumerate(partition.blocks):
        if k == focus:
            continue
        rho = _pair_density(state, pf, blk)
        c, meth = concurrence_mixed(rho, opts)
        terms.append(RhsTerm(f"pair {_fmt_block(pf)}-{_fmt_block(blk)}^2", c * c, 1.0))
        methods.append(meth)

        if rho.dims == (2, 2):
            ca, ca_meth = coa_two_qubit(rho), "closed-form"
            pair_tol = 1e-8
        else:
            ca, ca_meth = roof_maximize(rho, opts).value, "lower-bound-on-maximum"
            pair_tol = 1e-2
        pair_resid = ca - c
        pair_premises = premises
        reports.append(
            MonogamyReport(
                inequality_id="pair-coa-matches-concurrence",
                kind="equality",
                lhs=ca,
                rhs_terms=(RhsTerm(f"pair {_fmt_block(pf)}-{_fmt_block(blk)}", c, 1.0),),
                residual=pair_resid,
                premises=pair_premises,
                verdict=_verdict(pair_premises, pair_resid, pair_tol, "equality"),
                tolerance=pair_tol,
                extras={"methods": {"coa": ca_meth, "concurrence": meth}},
            )
        )

    residual = lhs - sum(t.coefficient * t.value for t in terms)
    any_roof = any(mm not in CLOSED_FORM_METHODS for mm in methods)
    tol = _auto_tol("equality", any_roof)
    main = MonogamyReport(
        inequality_id="concurrence-square-additivity",
        kind="equality",
        lhs=lhs,
        rhs_terms=tuple(terms),
        residual=residual,
        premises=premises,
        verdict=_verdict(premises, residual, tol, "equality"),
        tolerance=tol,
        extras={"focus": focus, "methods": methods},
    )
    return [main] + reports


def check_negativity_additivity(
    state: PureState, opts: RoofOptions | None = None
) -> MonogamyReport:
    """Squared-negativity additivity: site 0 against each other site."""
    n = state.shape.n_sites
    premises = (Premise("state has W-class support", is_wclass_support(state)),)
    lhs = negativity_pure(state, (0,)) ** 2
    terms = []
    methods = []
    for k in range(1, n):
        v, meth = cren_mixed(_pair_density(state, (0,), (k,)), opts)
        terms.append(RhsTerm(f"pair {{0}}-{{{k}}}^2", v * v, 1.0))
        methods.append(meth)
    residual = lhs - sum(t.coefficient * t.value for t in terms)
    any_roof = any(mm not in CLOSED_FORM_METHODS for mm in methods)
    tol = _auto_tol("equality", any_roof)
    return MonogamyReport(
        inequality_id="negativity-square-additivity",
        kind="equality",
        lhs=lhs,
        rhs_terms=tuple(terms),
        residual=residual,
        premises=premises,
        verdict=_verdict(premises, residual, tol, "equality"),
        tolerance=tol,
        extras={"methods": methods},
    )


# ---------------------------------------------------------------------------
# n-qubit power relations
# ---------------------------------------------------------------------------

def check_qubit_power_relations(
    state: PureState, alpha: float, opts: RoofOptions | None = None
) -> list[MonogamyReport]:
    """The four power-form relations for an n-qubit pure state.

    Returns one sub-report each for: concurrence monogamy at power alpha
    (needs alpha >= 2), concurrence polygamy at nonpositive power (needs
    alpha <= 0 and nonvanishing pair concurrences), squared CoA polygamy,
    and the negativity power monogamy for W-class support (alpha >= 2).
    """
    qubit = all(d == 2 for d in state.shape.dims)
    n = state.shape.n_sites
    reports: list[MonogamyReport] = []

    pair_rhos = [_pair_density(state, (0,), (k,)) for k in range(1, n)] if qubit else []
    pair_c = [wootters_concurrence(r) for r in pair_rhos]
    pair_ca = [coa_two_qubit(r) for r in pair_rhos]
    c_split = concurrence_pure(state, (0,)) if n >= 2 else 0.0
    n_split = negativity_pure(state, (0,)) if n >= 2 else 0.0

    # monogamy of the concurrence power
    prem = (
        Premise("all local dimensions are 2", qubit),
        Premise("alpha >= 2", alpha >= 2.0),
    )
    if all(p.satisfied for p in prem):
        lhs = c_split**alpha
        terms = tuple(
            RhsTerm(f"pair {{0}}-{{{k + 1}}}^alpha", c**alpha, 1.0)
            for k, c in enumerate(pair_c)
        )
        residual = lhs - sum(t.value for t in terms)
    else:
        lhs, terms, residual = 0.0, (), 0.0
    reports.append(
        MonogamyReport(
            "qubit-concurrence-monogamy-power",
            "inequality",
            lhs,
            terms,
            residual,
            prem,
            _verdict(prem, residual, 1e-9, "inequality"),
            1e-9,
            {"alpha": alpha, "pair_values": pair_c},
        )
    )

    # polygamy of the concurrence at nonpositive powers; the dominating
    # side is the pair sum, so it is stored as the report's lhs
    nonzero = bool(pair_c) and all(c > 1e-12 for c in pair_c)
    prem = (
        Premise("all local dimensions are 2", qubit),
        Premise("alpha <= 0", alpha <= 0.0),
        Premise("all pair concurrences nonzero", nonzero),
        Premise("split concurrence nonzero", c_split > 1e-12),
    )
    if all(p.satisfied for p in prem):
        pair_sum = sum(c**alpha for c in pair_c)
        lhs = pair_sum
        terms = (RhsTerm("split {0}-rest^alpha", c_split**alpha, 1.0),)
        residual = lhs - c_split**alpha
    else:
        lhs, terms, residual = 0.0, (), 0.0
    reports.append(
        MonogamyReport(
            "qubit-concurrence-polygamy-nonpositive-power",
            "inequality",
            lhs,
            terms,
            residual,
            prem,
            _verdict(prem, residual, 1e-9, "inequality"),
            1e-9,
            {"alpha": alpha, "pair_values": pair_c},
        )
    )

    # squared CoA polygamy: the pair sum dominates the split value
    prem = (Premise("all local dimensions are 2", qubit),)
    if qubit:
        lhs = sum(ca * ca for ca in pair_ca)
        terms = (RhsTerm("split {0}-rest^2", c_split**2, 1.0),)
        residual = lhs - c_split**2
    else:
        lhs, terms, residual = 0.0, (), 0.0
    reports.append(
        MonogamyReport(
            "qubit-coa-polygamy-squared",
            "inequality",
            lhs,
            terms,
            residual,
            prem,
            _verdict(prem, residual, 1e-9, "inequality"),
            1e-9,
            {"pair_values": pair_ca},
        )
    )

    # negativity power monogamy, valid on W-class support
    prem = (
        Premise("all local dimensions are 2", qubit),
        Premise("state has W-class support", is_wclass_support(state)),
        Premise("alpha >= 2", alpha >= 2.0),
    )
    if all(p.satisfied for p in prem):
        cren = pair_c  # two-qubit convex-roof negativity equals the concurrence
        lhs = n_split**alpha
        terms = tuple(
            RhsTerm(f"pair {{0}}-{{{k + 1}}}^alpha", v**alpha, 1.0)
            for k, v in enumerate(cren)
        )
        residual = lhs - sum(t.value for t in terms)
    else:
        lhs, terms, residual = 0.0, (), 0.0
    reports.append(
        MonogamyReport(
            "wclass-negativity-power-monogamy",
            "inequality",
            lhs,
            terms,
            residual,
            prem,
            _verdict(prem, residual, 1e-9, "inequality"),
            1e-9,
            {"alpha": alpha},
        )
    )
    return reports


# ---------------------------------------------------------------------------
# beta-alpha sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    """One (beta, alpha) gap evaluation: f = lhs^b - h*max^b - min^b."""

    beta: float
    alpha: float
    lhs_pow: float
    max_term: float
    min_term: float
    f: float
    f_alpha2: float  # same beta at alpha = 2, for cross-alpha comparison

    @property
    def alpha2_dominates(self) -> bool:
        """Whether f at alpha=2 is >= f at this row's alpha."""
        return self.f_alpha2 >= self.f - 1e-12


def gap_value(lhs: float, v_max: float, v_min: float, beta: float, alpha: float) -> float:
    pp = PowerParams(alpha, beta)
    return lhs**beta - pp.h * v_max**beta - v_min**beta


def sweep_bound_gap(
    state: PureState | None,
    triple: Partition | None,
    beta_grid: Sequence[float],
    alpha_grid: Sequence[float],
    measure: str = "coa",
    opts: RoofOptions | None = None,
    values: tuple[float, float, float] | None = None,
) -> list[SweepRow]:
    """Gap rows over a beta/alpha grid.

    ``values`` supplies (split, pair, pair) measures directly and skips
    state evaluation; otherwise they are computed from the state and
    3-block partition with the usual oracles.  Requires beta <= alpha for
    every row.
    """
    if len(beta_grid) == 0 or len(alpha_grid) == 0:
        raise ValueError("beta and alpha grids must be non-empty")
    if values is not None:
        lhs, va, vb = values
    else:
        if state is None or triple is None or triple.m != 3:
            raise ValueError("need a state and a 3-block partition, or explicit values")
        p1, p2, p3 = triple.blocks
        va, _ = _mixed_value(_pair_density(state, p1, p2), measure, opts)
        vb, _ = _mixed_value(_pair_density(state, p1, p3), measure, opts)
        lhs, _ = _split_value(state, p1, tuple(sorted(p2 + p3)), measure, opts)
    v_max, v_min = max(va, vb), min(va, vb)

    rows: list[SweepRow] = []
    for beta in beta_grid:
        for alpha in alpha_grid:
            if beta > alpha:
                raise ValueError(f"beta {beta} exceeds alpha {alpha}")
            pp = PowerParams(alpha, beta)
            lhs_pow = lhs**beta
            max_term = v_max**beta
            min_term = v_min**beta
            f = lhs_pow - pp.h * max_term - min_term
            f2 = gap_value(lhs, v_max, v_min, beta, 2.0) if beta <= 2.0 else f
            rows.append(SweepRow(beta, alpha, lhs_pow, max_term, min_term, f, f2))
    return rows


# ---------------------------------------------------------------------------
# built-in example comparison
# ---------------------------------------------------------------------------

def example_comparison(opts: RoofOptions | None = None) -> dict:
    """Published reference values next to oracle values for the example state.

    The two value sets disagree; the block presents both with their
    differences and the oracle set's internal additivity residual, and
    deliberately does not assert either as ground truth.
    """
    state = build_wclass_state(example_coefficients())
    c01 = wootters_concurrence(_pair_density(state, (0,), (1,)))
    c02 = wootters_concurrence(_pair_density(state, (0,), (2,)))
    c0r = concurrence_pure(state, (0,))
    oracle = {
        "concurrence_0_1": c01,
        "concurrence_0_2": c02,
        "concurrence_0_rest": c0r,
    }
    diff = {k: oracle[k] - PUBLISHED_EXAMPLE_VALUES[k] for k in oracle}
    return {
        "state": "example-3.3",
        "published": dict(PUBLISHED_EXAMPLE_VALUES),
        "oracle": oracle,
        "difference": diff,
        "oracle_additivity_residual": c0r**2 - c01**2 - c02**2,
        "note": (
            "published and oracle values are both reported; neither is "
            "asserted as ground truth"
        ),
    }
