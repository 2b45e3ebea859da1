"""Sparse mixed-integer linear programs in maximize form."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

INF = math.inf


class Domain(enum.Enum):
    CONTINUOUS = "continuous"
    INTEGER = "integer"
    BINARY = "binary"


class Sense(enum.Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class Status(enum.Enum):
    OPTIMAL = "optimal"
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class BranchRule(enum.Enum):
    MOST_FRACTIONAL = "most-fractional"
    PSEUDO_COST = "pseudo-cost"


class NodeSelection(enum.Enum):
    BEST_BOUND = "best-bound"
    DEPTH_FIRST = "depth-first"


@dataclass(frozen=True)
class SolveOptions:
    relative_gap: float = 1e-6
    absolute_gap: float = 1e-9
    node_limit: int = 100_000
    time_limit_s: float | None = None
    branching: BranchRule = BranchRule.MOST_FRACTIONAL
    node_selection: NodeSelection = NodeSelection.BEST_BOUND
    integrality_tol: float = 1e-6
    warm_start: bool = True
    presolve: bool = True
    verbose: bool = False

    def __post_init__(self):
        if self.relative_gap < 0 or self.absolute_gap < 0:
            raise ValueError("gap tolerances must be non-negative")
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit_s is not None and self.time_limit_s <= 0:
            raise ValueError("time_limit_s must be positive")


@dataclass
class SolveResult:
    """Outcome of an LP or MILP solve (objective sense is always maximize)."""

    status: Status
    x: np.ndarray | None
    objective: float | None
    bound: float
    gap: float
    nodes: int = 0
    iterations: int = 0
    wall_time_s: float = 0.0
    limit_hit: str | None = None  # "node", "time" or None


class MilpProblem:
    """A sparse linear program with variable domains, maximized objective.

    Rows and columns are append-only; the constraint matrix is materialized
    lazily (and cached) as CSR/CSC once the model is complete.
    """

    def __init__(self, name: str = ""):
        self.name = name
        self.var_names: list[str] = []
        self.domains: list[Domain] = []
        self._lb: list[float] = []
        self._ub: list[float] = []
        self._obj: list[float] = []
        self.row_names: list[str] = []
        self.senses: list[Sense] = []
        self._rhs: list[float] = []
        self._rows: list[list[tuple[int, float]]] = []
        self._matrix_cache: tuple[sp.csr_matrix, sp.csc_matrix] | None = None

    # -- construction -------------------------------------------------

    def add_variable(self, name, domain=Domain.CONTINUOUS, lb=0.0, ub=INF, obj=0.0):
        if domain is Domain.BINARY:
            lb = max(lb, 0.0)
            ub = min(ub, 1.0)
        if lb > ub:
            raise ValueError(f"variable {name!r}: lb {lb} > ub {ub}")
        if not (math.isfinite(obj)):
            raise ValueError(f"variable {name!r}: non-finite objective coefficient")
        self.var_names.append(str(name))
        self.domains.append(domain)
        self._lb.append(float(lb))
        self._ub.append(float(ub))
        self._obj.append(float(obj))
        self._matrix_cache = None
        return len(self.var_names) - 1

    def add_constraint(self, name, coefs, sense: Sense, rhs: float):
        """Add a row ``sum(coef * x[col]) <sense> rhs``.

        Duplicate column references are summed; exact-zero coefficients are
        dropped.
        """
        n = len(self.var_names)
        merged: dict[int, float] = {}
        for col, coef in coefs:
            if not 0 <= col < n:
                raise IndexError(f"row {name!r} references undeclared column {col}")
            coef = float(coef)
            if not math.isfinite(coef):
                raise ValueError(f"row {name!r}: non-finite coefficient on column {col}")
            merged[col] = merged.get(col, 0.0) + coef
        if not math.isfinite(rhs):
            raise ValueError(f"row {name!r}: non-finite right-hand side")
        self.row_names.append(str(name))
        self.senses.append(sense)
        self._rhs.append(float(rhs))
        self._rows.append(sorted((c, v) for c, v in merged.items() if v != 0.0))
        self._matrix_cache = None
        return len(self.row_names) - 1

    def set_bounds(self, col: int, lb: float, ub: float):
        if lb > ub:
            raise ValueError(f"column {col}: lb {lb} > ub {ub}")
        self._lb[col] = float(lb)
        self._ub[col] = float(ub)

    # -- views ----------------------------------------------------------

    @property
    def n_vars(self) -> int:
        return len(self.var_names)

    @property
    def n_cons(self) -> int:
        return len(self.row_names)

    @property
    def lb(self) -> np.ndarray:
        return np.array(self._lb, dtype=float)

    @property
    def ub(self) -> np.ndarray:
        return np.array(self._ub, dtype=float)

    @property
    def obj(self) -> np.ndarray:
        return np.array(self._obj, dtype=float)

    @property
    def rhs(self) -> np.ndarray:
        return np.array(self._rhs, dtype=float)

    def row_entries(self, i: int) -> list[tuple[int, float]]:
        return list(self._rows[i])

    def integer_columns(self) -> np.ndarray:
        return np.array(
            [j for j, d in enumerate(self.domains) if d is not Domain.CONTINUOUS],
            dtype=np.int64,
        )

    def matrix(self) -> tuple[sp.csr_matrix, sp.csc_matrix]:
        """Constraint matrix as (CSR, CSC), cached."""
        if self._matrix_cache is None:
            m, n = self.n_cons, self.n_vars
            data, indices, indptr = [], [], [0]
            for row in self._rows:
                for col, coef in row:
                    indices.append(col)
                    data.append(coef)
                indptr.append(len(indices))
            csr = sp.csr_matrix(
                (np.array(data, dtype=float), np.array(indices, dtype=np.int32),
                 np.array(indptr, dtype=np.int32)),
                shape=(m, n),
            )
            self._matrix_cache = (csr, csr.tocsc())
        return self._matrix_cache

    def copy(self) -> "MilpProblem":
        other = MilpProblem(self.name)
        other.var_names = list(self.var_names)
        other.domains = list(self.domains)
        other._lb = list(self._lb)
        other._ub = list(self._ub)
        other._obj = list(self._obj)
        other.row_names = list(self.row_names)
        other.senses = list(self.senses)
        other._rhs = list(self._rhs)
        other._rows = [list(r) for r in self._rows]
        return other

    def equals(self, other: "MilpProblem") -> bool:
        """Structural equality: names, domains, bounds, rows, coefficients."""
        return (
            self.var_names == other.var_names
            and self.domains == other.domains
            and self._lb == other._lb
            and self._ub == other._ub
            and self._obj == other._obj
            and self.row_names == other.row_names
            and self.senses == other.senses
            and self._rhs == other._rhs
            and self._rows == other._rows
        )

    def __repr__(self):
        return (f"MilpProblem({self.name!r}, {self.n_vars} vars, "
                f"{self.n_cons} rows)")


@dataclass(frozen=True)
class VarMap:
    """Bijection between semantic variable keys ``(tag, index_tuple)`` and
    column indices of a MilpProblem."""

    by_key: dict = field(default_factory=dict)
    by_col: list = field(default_factory=list)

    def add(self, tag: str, index: tuple, col: int):
        key = (tag, index)
        if key in self.by_key:
            raise ValueError(f"duplicate variable key {key}")
        if col != len(self.by_col):
            raise ValueError("columns must be registered in order")
        self.by_key[key] = col
        self.by_col.append(key)

    def col(self, tag: str, *index) -> int:
        return self.by_key[(tag, tuple(index))]

    def key(self, col: int) -> tuple:
        return self.by_col[col]

    def cols_for_tag(self, tag: str):
        """(index_tuple, col) pairs for one tag, in column order."""
        return [(idx, c) for (t, idx), c in self.by_key.items() if t == tag]

    def __contains__(self, key):
        return (key[0], tuple(key[1])) in self.by_key

    def __len__(self):
        return len(self.by_col)


def tighten_bounds(problem: MilpProblem, max_passes: int = 10) -> int:
    """Propagate row activity bounds into variable bounds, in place.

    Classic feasibility-preserving presolve: for each row the minimum
    activity of the other terms implies a bound on each variable.  Never
    cuts off any feasible point; fixed variables (lb == ub) are the useful
    outcome (e.g. a zero budget forcing all hub/fleet columns to zero).
    Returns the number of bounds changed.
    """
    lb = problem.lb
    ub = problem.ub
    changed = 0
    for _ in range(max_passes):
        pass_changed = 0
        for i in range(problem.n_cons):
            row = problem._rows[i]
            sense = problem.senses[i]
            rhs = problem._rhs[i]
            if not row:
                continue
            # Treat EQ as both <= and >=.
            for as_le in (True, False):
                if as_le and sense is Sense.GE:
                    continue
                if not as_le and sense is Sense.LE:
                    continue
                # Canonicalize to sum a_j x_j <= r.
                sign = 1.0 if as_le else -1.0
                r = sign * rhs
                min_act = 0.0
                for col, coef in row:
                    a = sign * coef
                    min_act += a * (lb[col] if a > 0 else ub[col])
                if not math.isfinite(min_act):
                    continue
                slack = r - min_act
                for col, coef in row:
                    a = sign * coef
                    if a > 0:
                        new_ub = lb[col] + slack / a
                        if new_ub < ub[col] - 1e-12:
                            if problem.domains[col] is not Domain.CONTINUOUS:
                                new_ub = math.floor(new_ub + 1e-9)
                            new_ub = max(new_ub, lb[col])
                            ub[col] = new_ub
                            pass_changed += 1
                    else:
                        new_lb = ub[col] + slack / a
                        if new_lb > lb[col] + 1e-12:
                            if problem.domains[col] is not Domain.CONTINUOUS:
                                new_lb = math.ceil(new_lb - 1e-9)
                            new_lb = min(new_lb, ub[col])
                            lb[col] = new_lb
                            pass_changed += 1
        changed += pass_changed
        if pass_changed == 0:
            break
    if changed:
        for j in range(problem.n_vars):
            problem._lb[j] = float(lb[j])
            problem._ub[j] = float(ub[j])
    return changed
