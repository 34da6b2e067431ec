"""Closed-form regularity of edge ideals of integrally closed weighted trees,
plus the exact values and upper bounds for their powers.

All values use the ideal convention: reg here is reg of I, and reg(S/I) is
one less.  The trivial-tree power law is reg(I^t) = 2t + nu - 1 under this
convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    NonTrivialWeights,
    NotAPath,
    NotATree,
    NotIntegrallyClosed,
    TrivialWeights,
    UndefinedRegularity,
)
from .matchings import constrained_matching_number, induced_matching_number
from .wgraph import (
    SpineData,
    WeightedGraph,
    is_caterpillar,
    is_integrally_closed,
    non_trivial_spine,
)

TRIVIAL_TREE = "TRIVIAL_TREE"
K4 = "K4"
REG_CASE1 = "REG_CASE1"
REG_CASE2 = "REG_CASE2"
REG_CASE3 = "REG_CASE3"
PATH_SMALL = "PATH_SMALL"
PATH_GENERAL = "PATH_GENERAL"

TRIVIAL_TREE_POWER = "TRIVIAL_TREE_POWER"
CAT_K4_D1_MID = "CAT_K4_D1_MID"
CAT_K4_D1_END = "CAT_K4_D1_END"
EQ_CASE = "EQ_CASE"


@dataclass(frozen=True)
class RegFormulaResult:
    value: int
    case_tag: str
    inputs_used: dict

    def to_json(self) -> dict:
        return {"value": self.value, "case_tag": self.case_tag, "inputs_used": self.inputs_used}


@dataclass(frozen=True)
class PowerRegResult:
    t: int
    exact: Optional[int]
    upper_bound: int
    exact_case_tag: Optional[str]

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "exact": self.exact,
            "exact_case_tag": self.exact_case_tag,
            "upper_bound": self.upper_bound,
        }


def _require_closed_tree(T: WeightedGraph):
    if not T.is_tree():
        raise NotATree("formula inputs must be trees")
    if not is_integrally_closed(T):
        raise NotIntegrallyClosed("tree is not integrally closed")
    if not T.edges:
        raise UndefinedRegularity("edgeless tree has the zero edge ideal")


def _inputs(nu, k=None, i=None, omega_i=None, omega_i_plus_2=None, s_i=None, s_i_plus_2=None):
    return {
        "nu": nu,
        "k": k,
        "i": i,
        "omega_i": omega_i,
        "omega_i_plus_2": omega_i_plus_2,
        "s_i": s_i,
        "s_i_plus_2": s_i_plus_2,
    }


def reg_closed_form(T: WeightedGraph) -> RegFormulaResult:
    """reg(I(T)) by case analysis on the spine."""
    _require_closed_tree(T)
    nu = induced_matching_number(T).size
    if T.is_trivially_weighted():
        return RegFormulaResult(nu + 1, TRIVIAL_TREE, _inputs(nu))
    s = non_trivial_spine(T)
    k, i = s.k, s.heavy_index
    if k <= 3 or (k == 4 and i == 2):
        return RegFormulaResult(
            2 * s.omega_i, K4, _inputs(nu, k, i, s.omega_i, s.omega_i_plus_2)
        )
    if i + 2 > k - 1:
        # e_{i+2} is not an edge of the tree
        return RegFormulaResult(
            2 * s.omega_i, REG_CASE1, _inputs(nu, k, i, s.omega_i, None)
        )
    s_i = constrained_matching_number(T, s.edge(i)).size
    if s.omega_i_plus_2 == 1:
        value = max(nu + 1, 2 * s.omega_i + s_i - 1)
        return RegFormulaResult(
            value, REG_CASE2, _inputs(nu, k, i, s.omega_i, s.omega_i_plus_2, s_i)
        )
    s_ip2 = constrained_matching_number(T, s.edge(i + 2)).size
    value = max(nu + 1, 2 * s.omega_i + s_i - 1, 2 * s.omega_i_plus_2 + s_ip2 - 1)
    return RegFormulaResult(
        value, REG_CASE3, _inputs(nu, k, i, s.omega_i, s.omega_i_plus_2, s_i, s_ip2)
    )


def reg_path_closed_form(P: WeightedGraph) -> RegFormulaResult:
    """Floor-formula specialization for weighted paths; agrees with
    reg_closed_form on every valid input."""
    if not P.is_tree() or not P.is_path_graph():
        raise NotAPath("input is not a path")
    if not is_integrally_closed(P):
        raise NotIntegrallyClosed("path is not integrally closed")
    if not P.edges:
        raise UndefinedRegularity("edgeless path has the zero edge ideal")
    n = len(P.vertices)
    nu = induced_matching_number(P).size
    if P.is_trivially_weighted():
        if n <= 4:
            return RegFormulaResult(2, PATH_SMALL, _inputs(nu))
        return RegFormulaResult(nu + 1, TRIVIAL_TREE, _inputs(nu))
    s = non_trivial_spine(P)
    if n <= 4:
        return RegFormulaResult(
            2 * s.omega_i, PATH_SMALL, _inputs(nu, s.k, s.heavy_index, s.omega_i, s.omega_i_plus_2)
        )
    i = s.heavy_index
    w_ip2 = s.omega_i_plus_2 if s.omega_i_plus_2 is not None else 1
    term1 = 2 * s.omega_i + (i - 1) // 3 + (n - (i + 1)) // 3
    term2 = 2 * w_ip2 + (i - 2) // 3 + (n - i) // 3
    return RegFormulaResult(
        max(term1, term2),
        PATH_GENERAL,
        _inputs(nu, s.k, i, s.omega_i, s.omega_i_plus_2),
    )


def reg_power_trivial(T: WeightedGraph, t: int) -> int:
    """reg(I(T)^t) = 2t + nu - 1 for trivially weighted trees."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if not T.is_tree():
        raise NotATree("input must be a tree")
    if not T.is_trivially_weighted():
        raise NonTrivialWeights("tree has a weight >= 2")
    if not T.edges:
        raise UndefinedRegularity("edgeless tree has the zero edge ideal")
    nu = induced_matching_number(T).size
    return 2 * t + nu - 1


def _exact_case(T: WeightedGraph, s: SpineData, t: int) -> Optional[tuple[int, str]]:
    k, i = s.k, s.heavy_index
    if k == 4 and s.d <= 1 and is_caterpillar(T):
        if i == 2:
            return 2 * s.omega_i * t, CAT_K4_D1_MID
        if i == 1:
            return 2 * s.omega_i * t, CAT_K4_D1_END
    s_i = constrained_matching_number(T, s.edge(i)).size
    if reg_closed_form(T).value == 2 * s.omega_i + s_i - 1:
        return 2 * s.omega_i * t + s_i - 1, EQ_CASE
    return None


def reg_power_exact(T: WeightedGraph, t: int) -> Optional[int]:
    """Exact reg(I^t) when a proven case applies, else None."""
    if t < 1:
        raise ValueError("t must be >= 1")
    _require_closed_tree(T)
    if T.is_trivially_weighted():
        raise TrivialWeights("use reg_power_trivial for trivially weighted trees")
    found = _exact_case(T, non_trivial_spine(T), t)
    return found[0] if found else None


def reg_power_upper_bound(T: WeightedGraph, t: int) -> int:
    """2*omega*(t-1) + reg(I), valid for every t >= 1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    _require_closed_tree(T)
    if T.is_trivially_weighted():
        raise TrivialWeights("use reg_power_trivial for trivially weighted trees")
    s = non_trivial_spine(T)
    return 2 * s.omega_i * (t - 1) + reg_closed_form(T).value


def power_reg_result(T: WeightedGraph, t: int) -> PowerRegResult:
    """Exact value (when proven), case tag, and the general upper bound."""
    if t < 1:
        raise ValueError("t must be >= 1")
    _require_closed_tree(T)
    if T.is_trivially_weighted():
        value = reg_power_trivial(T, t)
        return PowerRegResult(t=t, exact=value, upper_bound=value, exact_case_tag=TRIVIAL_TREE_POWER)
    s = non_trivial_spine(T)
    bound = 2 * s.omega_i * (t - 1) + reg_closed_form(T).value
    found = _exact_case(T, s, t)
    if found:
        value, tag = found
        return PowerRegResult(t=t, exact=value, upper_bound=bound, exact_case_tag=tag)
    return PowerRegResult(t=t, exact=None, upper_bound=bound, exact_case_tag=None)
