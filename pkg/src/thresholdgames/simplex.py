"""Exact linear programming: two-phase simplex with Bland's rule.

Minimizes a rational objective subject to <=, >= and = constraints with
optional nonnegativity per variable.  Every tableau entry is an exact
rational; `gmpy2.mpq` is used internally (an order of magnitude faster than
`fractions.Fraction`), with Fractions at the API boundary.  Bland's pivot
rule (lowest eligible index enters, lowest basis index breaks ratio ties)
guarantees termination under degeneracy and makes runs deterministic.

Infeasible and unbounded programs are reported as result statuses, not
exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpq

from .errors import InvalidInputError

LESS_EQUAL = "<="
GREATER_EQUAL = ">="
EQUAL = "="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Constraint = tuple[tuple[Fraction, ...], str, Fraction]


@dataclass(frozen=True)
class LinearProgram:
    """min objective . x  subject to the listed constraints."""

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    nonneg: tuple[bool, ...]

    def __post_init__(self) -> None:
        nvars = len(self.objective)
        if len(self.nonneg) != nvars:
            raise InvalidInputError("nonneg flags do not match the variable count")
        for coeffs, rel, _ in self.constraints:
            if len(coeffs) != nvars:
                raise InvalidInputError("constraint coefficient length mismatch")
            if rel not in (LESS_EQUAL, GREATER_EQUAL, EQUAL):
                raise InvalidInputError(f"unknown relation {rel!r}")


@dataclass(frozen=True)
class LpResult:
    status: str
    value: Fraction | None
    x: tuple[Fraction, ...] | None


def _q(f) -> mpq:
    return mpq(f.numerator, f.denominator) if isinstance(f, Fraction) else mpq(f)


_ZERO = mpq(0)
_ONE = mpq(1)


def _pivot(tableau: list[list[mpq]], cost: list[mpq], basis: list[int], pr: int, pc: int) -> None:
    row = tableau[pr]
    inv = _ONE / row[pc]
    if inv != 1:
        tableau[pr] = row = [v * inv for v in row]
    for i, other in enumerate(tableau):
        if i != pr and other[pc]:
            f = other[pc]
            tableau[i] = [a - f * b for a, b in zip(other, row)]
    if cost[pc]:
        f = cost[pc]
        for j, b in enumerate(row):
            cost[j] -= f * b
    basis[pr] = pc


def _run(tableau: list[list[mpq]], cost: list[mpq], basis: list[int], banned: set[int]) -> str:
    """Bland-rule simplex on a feasible tableau; mutates in place."""
    ncols = len(cost) - 1  # last entry carries -objective value
    while True:
        entering = -1
        for j in range(ncols):
            if j not in banned and cost[j] < 0:
                entering = j
                break
        if entering < 0:
            return OPTIMAL
        leaving = -1
        best = None
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving < 0:
            return UNBOUNDED
        _pivot(tableau, cost, basis, leaving, entering)


def solve_lp_exact(lp: LinearProgram) -> LpResult:
    """Exact optimum and a basic optimal solution of the program.

    Two phases: artificial variables are driven to zero first (nonzero
    phase-one value means infeasible), then the true objective is optimized
    with artificial columns banned from re-entering.
    """
    nvars = len(lp.objective)
    # Expand free variables into positive and negative parts.
    col_of_var: list[tuple[int, int | None]] = []
    ncols = 0
    for j in range(nvars):
        if lp.nonneg[j]:
            col_of_var.append((ncols, None))
            ncols += 1
        else:
            col_of_var.append((ncols, ncols + 1))
            ncols += 2
    nstruct = ncols

    rows: list[list[mpq]] = []
    rels: list[str] = []
    rhs: list[mpq] = []
    for coeffs, rel, b in lp.constraints:
        row = [_ZERO] * nstruct
        for j, c in enumerate(coeffs):
            if c == 0:
                continue
            q = _q(c)
            pos, neg = col_of_var[j]
            row[pos] = q
            if neg is not None:
                row[neg] = -q
        bq = _q(b)
        if bq < 0:
            row = [-v for v in row]
            bq = -bq
            rel = {LESS_EQUAL: GREATER_EQUAL, GREATER_EQUAL: LESS_EQUAL, EQUAL: EQUAL}[rel]
        rows.append(row)
        rels.append(rel)
        rhs.append(bq)

    # Slack / surplus columns, then artificials; build the initial basis.
    nslack = sum(1 for r in rels if r != EQUAL)
    nart = sum(1 for r in rels if r != LESS_EQUAL)
    total = nstruct + nslack + nart
    tableau: list[list[mpq]] = []
    basis: list[int] = []
    slack_at = nstruct
    art_at = nstruct + nslack
    art_cols: set[int] = set()
    for row, rel, b in zip(rows, rels, rhs):
        full = row + [_ZERO] * (nslack + nart) + [b]
        if rel == LESS_EQUAL:
            full[slack_at] = _ONE
            basis.append(slack_at)
            slack_at += 1
        elif rel == GREATER_EQUAL:
            full[slack_at] = -_ONE
            slack_at += 1
            full[art_at] = _ONE
            basis.append(art_at)
            art_cols.add(art_at)
            art_at += 1
        else:
            full[art_at] = _ONE
            basis.append(art_at)
            art_cols.add(art_at)
            art_at += 1
        tableau.append(full)

    def reduced_costs(objective: list[mpq]) -> list[mpq]:
        cost = objective + [_ZERO]
        for i, b in enumerate(basis):
            if cost[b]:
                f = cost[b]
                cost[:] = [a - f * v for a, v in zip(cost, tableau[i])]
        return cost

    if art_cols:
        phase1 = [_ONE if j in art_cols else _ZERO for j in range(total)]
        cost = reduced_costs(phase1)
        status = _run(tableau, cost, basis, banned=set())
        assert status == OPTIMAL, "phase one cannot be unbounded"
        if -cost[-1] != 0:
            return LpResult(status=INFEASIBLE, value=None, x=None)
        # Pivot leftover zero-valued artificials out of the basis, dropping
        # redundant rows that have no structural entry.
        for i in reversed(range(len(basis))):
            if basis[i] in art_cols:
                pc = next(
                    (j for j in range(nstruct + nslack) if tableau[i][j] != 0),
                    None,
                )
                if pc is None:
                    del tableau[i]
                    del basis[i]
                else:
                    _pivot(tableau, [_ZERO] * (total + 1), basis, i, pc)

    phase2 = [_ZERO] * total
    for j in range(nvars):
        q = _q(lp.objective[j])
        pos, neg = col_of_var[j]
        phase2[pos] = q
        if neg is not None:
            phase2[neg] = -q
    cost = reduced_costs(phase2)
    status = _run(tableau, cost, basis, banned=art_cols)
    if status == UNBOUNDED:
        return LpResult(status=UNBOUNDED, value=None, x=None)

    values = [_ZERO] * total
    for i, b in enumerate(basis):
        values[b] = tableau[i][-1]
    x = []
    for j in range(nvars):
        pos, neg = col_of_var[j]
        v = values[pos] - (values[neg] if neg is not None else _ZERO)
        x.append(Fraction(v.numerator, v.denominator))
    value = sum((c * v for c, v in zip(lp.objective, x)), Fraction(0))
    return LpResult(status=OPTIMAL, value=value, x=tuple(x))
