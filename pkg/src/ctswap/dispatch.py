"""Route an instance to the right exact solver and summarise the result."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

from .complete import build_destination_graph, solve_complete, solve_optimal_cycle_cover
from .core import (
    Instance,
    Solution,
    UnsupportedSolverError,
    check_equivalence,
    mismatch_lower_bound,
    swap_count_upper_bound,
    verify_sequence,
)
from .degree2 import solve_degree2
from .oracle import DEFAULT_STATE_CAP, StateCapExceeded, estimate_state_count, exact_opt
from .tree import compute_diff_values, construct_tree_sequence, solve_tree_two_color
from .two_color import solve_two_color

ALGORITHMS = ("auto", "oracle", "two-color", "tree", "degree2", "complete")
REPORT_SCHEMA = 1


@dataclass
class SolveReport:
    algorithm: str
    feasible: bool
    opt: int | None  # None when infeasible or when only bounds are known
    budget: int | None = None
    budget_verdict: str | None = None  # "yes" / "no" / "unknown"
    lower_bound: int | None = None
    upper_bound: int | None = None
    sequence: list[list[int]] | None = None
    wall_time: float = 0.0
    note: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.opt is not None or not self.feasible

    def to_dict(self) -> dict:
        out = {"schema": REPORT_SCHEMA}
        out.update(asdict(self))
        out["opt"] = self.opt if self.feasible else "infinity"
        return out


def auto_route(inst: Instance, state_cap: int = DEFAULT_STATE_CAP) -> str | None:
    """Name of the solver ``auto`` would use; None means bounds only."""
    g = inst.graph
    if inst.c == 2 and g.is_forest:
        return "tree"
    if inst.c == 2:
        return "two-color"
    if g.max_degree <= 2:
        return "degree2"
    if g.is_complete:
        return "complete"
    if estimate_state_count(inst) <= state_cap:
        return "oracle"
    return None


def _run(algo: str, inst: Instance, state_cap: int, emit_sequence: bool,
         details: dict, emit_matrix: bool) -> Solution:
    if algo == "oracle":
        return exact_opt(inst, state_cap)
    if algo == "two-color":
        mats: list = []
        sol = solve_two_color(inst, bipartite_out=mats if emit_matrix else None)
        if emit_matrix:
            details["bipartite"] = [
                {"X": list(b.X), "Y": list(b.Y), "weights": b.weights.tolist()} for b in mats
            ]
        return sol
    if algo == "tree":
        sol = construct_tree_sequence(inst) if emit_sequence else solve_tree_two_color(inst)
        if sol.feasible:
            demand = compute_diff_values(inst)
            details["diff"] = [[u, v, d] for (u, v), d in sorted(demand.diff.items())]
        return sol
    if algo == "degree2":
        return solve_degree2(inst)
    if algo == "complete":
        sol = solve_complete(inst)
        if sol.feasible:
            cover = solve_optimal_cycle_cover(build_destination_graph(inst))
            details["cover"] = [list(cyc) for cyc in cover.cycles]
        return sol
    raise ValueError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")


def _verdict(budget, lo, hi) -> str | None:
    if budget is None:
        return None
    if hi is not None and hi <= budget:
        return "yes"
    if lo is not None and lo > budget:
        return "no"
    return "unknown"


def dispatch(
    inst: Instance,
    algo: str = "auto",
    state_cap: int = DEFAULT_STATE_CAP,
    emit_sequence: bool = False,
    emit_matrix: bool = False,
) -> SolveReport:
    """Solve ``inst`` with ``algo`` (or pick one) and build a report.

    An explicitly requested solver whose preconditions fail raises
    :class:`UnsupportedSolverError`; ``auto`` never does.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")
    t0 = time.perf_counter()
    details: dict = {}
    budget = inst.budget

    if algo == "auto":
        if not check_equivalence(inst):
            return SolveReport("equivalence-check", False, None, budget,
                               _verdict(budget, math.inf, None),
                               wall_time=time.perf_counter() - t0)
        chosen = auto_route(inst, state_cap)
        if chosen is None:
            lo, hi = mismatch_lower_bound(inst), swap_count_upper_bound(inst)
            return SolveReport(
                "bounds", True, None, budget, _verdict(budget, lo, hi), lo, hi,
                wall_time=time.perf_counter() - t0,
                note=("NP-hard regime: general graphs with three or more colors; "
                      "instance exceeds the exact-search state cap"),
                details={"state_estimate": estimate_state_count(inst)},
            )
    else:
        chosen = algo

    sol = _run(chosen, inst, state_cap, emit_sequence, details, emit_matrix)
    elapsed = time.perf_counter() - t0
    if not sol.feasible:
        return SolveReport(chosen, False, None, budget, _verdict(budget, math.inf, None),
                           wall_time=elapsed, details=details)
    opt = int(sol.opt)
    seq = None
    if emit_sequence:
        if sol.swaps is None:
            raise UnsupportedSolverError(f"{chosen} does not produce sequences")
        assert verify_sequence(inst, sol.swaps) and len(sol.swaps) == opt
        seq = [list(e) for e in sol.swaps]
    return SolveReport(chosen, True, opt, budget, _verdict(budget, opt, opt), opt, opt,
                       seq, elapsed, details=details)
