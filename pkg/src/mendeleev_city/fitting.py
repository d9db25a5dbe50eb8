"""Linear least-squares fitting of element properties over an operator basis.

A property is expressed as a linear combination of quantum-number eigenvalue
functions evaluated at each element's quartet.  The default basis pairs an
intercept with seven polynomial functions of (n, l, j, m); it is a concrete,
user-overridable choice.  Fits run over a period (row), a family (column),
or an explicit Z set, and the fitted model extrapolates to any Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

from .quartet import Quartet, quartet_of, row_range
from .registry import PropertyDataset
from .table import ColumnId, column_of


class FitError(ValueError):
    """Base class for fitting failures."""


class ScopeError(FitError):
    """The scope selects no element with data."""


class RankError(FitError):
    """Fewer data rows than basis columns without rank-deficient mode."""


class ConditioningError(FitError):
    """The design matrix is numerically singular."""

    def __init__(self, message: str, columns: list[str]):
        super().__init__(message)
        self.columns = columns


@dataclass(frozen=True)
class BasisFunction:
    name: str
    evaluator: Callable[[Quartet], Fraction]

    def __call__(self, q: Quartet) -> Fraction:
        return Fraction(self.evaluator(q))


@dataclass(frozen=True)
class IntegrityBasis:
    functions: tuple[BasisFunction, ...]

    def __post_init__(self) -> None:
        if not self.functions:
            raise FitError("basis needs at least one function")
        names = [f.name for f in self.functions]
        if len(set(names)) != len(names):
            raise FitError(f"duplicate basis names in {names}")

    def __len__(self) -> int:
        return len(self.functions)

    @property
    def names(self) -> list[str]:
        return [f.name for f in self.functions]

    def evaluate(self, q: Quartet) -> list[Fraction]:
        return [f(q) for f in self.functions]


def default_basis() -> IntegrityBasis:
    """Intercept plus seven polynomial eigenvalue functions of (n, l, j, m)."""
    return IntegrityBasis((
        BasisFunction("1", lambda q: Fraction(1)),
        BasisFunction("n", lambda q: Fraction(q.n)),
        BasisFunction("l(l+1)", lambda q: Fraction(q.l * (q.l + 1))),
        BasisFunction("j(j+1)", lambda q: Fraction(q.j2 * (q.j2 + 2), 4)),
        BasisFunction("m", lambda q: Fraction(q.m2, 2)),
        BasisFunction("n^2", lambda q: Fraction(q.n * q.n)),
        BasisFunction("m^2", lambda q: Fraction(q.m2 * q.m2, 4)),
        BasisFunction("n*l", lambda q: Fraction(q.n * q.l)),
    ))


@dataclass(frozen=True)
class PeriodScope:
    """All elements on row n."""

    n: int


@dataclass(frozen=True)
class FamilyScope:
    """All elements in one (l, j, m) column."""

    column: ColumnId


@dataclass(frozen=True)
class ExplicitScope:
    """A caller-chosen Z set."""

    zs: tuple[int, ...]


FitScope = Union[PeriodScope, FamilyScope, ExplicitScope]


def scope_label(scope: FitScope) -> str:
    if isinstance(scope, PeriodScope):
        return f"period n={scope.n}"
    if isinstance(scope, FamilyScope):
        return f"family column {scope.column}"
    return f"explicit set {list(scope.zs)}"


def select_zs(scope: FitScope, data: PropertyDataset) -> list[int]:
    """Ascending Z values in scope that carry data."""
    if isinstance(scope, PeriodScope):
        # rows are not contiguous in Z (blocks interleave across rows), so
        # membership goes through the quartet
        lo, hi = row_range(scope.n)
        zs = [
            z
            for z in sorted(data.values)
            if lo <= z <= hi and quartet_of(z).n == scope.n
        ]
    elif isinstance(scope, FamilyScope):
        zs = [z for z in sorted(data.values) if column_of(quartet_of(z)) == scope.column]
    else:
        zs = [z for z in sorted(scope.zs) if z in data.values]
    if not zs:
        raise ScopeError(f"no data in {scope_label(scope)}")
    return zs


def design_matrix(
    scope: FitScope, basis: IntegrityBasis, data: PropertyDataset
) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Design matrix (row per selected Z, column per basis function),
    target vector, and the row order."""
    zs = select_zs(scope, data)
    matrix = np.array(
        [[float(v) for v in basis.evaluate(quartet_of(z))] for z in zs], dtype=float
    )
    target = np.array([data.values[z] for z in zs], dtype=float)
    return matrix, target, zs


@dataclass(frozen=True)
class FitModel:
    basis: IntegrityBasis
    coefficients: tuple[float, ...]
    scope: FitScope
    property_name: str
    unit: str
    rss: float
    max_abs_residual: float
    dof: int
    residuals: tuple[tuple[int, float], ...]  # (z, residual), row order

    def __post_init__(self) -> None:
        if len(self.coefficients) != len(self.basis):
            raise FitError("coefficient count must match basis size")

    def to_dict(self) -> dict:
        return {
            "property": self.property_name,
            "unit": self.unit,
            "scope": scope_label(self.scope),
            "basis": self.basis.names,
            "coefficients": list(self.coefficients),
            "rss": self.rss,
            "max_abs_residual": self.max_abs_residual,
            "dof": self.dof,
            "residuals": [{"z": z, "residual": r} for z, r in self.residuals],
        }


# relative R-diagonal threshold: QR stays reliable to condition numbers ~1e8
_SINGULAR_RTOL = 1e-10


def fit(
    scope: FitScope,
    basis: IntegrityBasis,
    data: PropertyDataset,
    *,
    allow_rank_deficient: bool = False,
    ridge: float = 0.0,
) -> FitModel:
    """Least-squares coefficients minimizing the residual sum of squares,
    solved by Householder QR (never by normal equations)."""
    matrix, target, zs = design_matrix(scope, basis, data)
    rows, cols = matrix.shape
    if rows < cols and not allow_rank_deficient:
        raise RankError(
            f"{rows} data rows cannot determine {cols} coefficients;"
            " enable rank-deficient mode to get a minimum-norm solution"
        )
    if ridge < 0:
        raise FitError(f"ridge must be >= 0, got {ridge}")
    if ridge > 0:
        matrix_solve = np.vstack([matrix, np.sqrt(ridge) * np.eye(cols)])
        target_solve = np.concatenate([target, np.zeros(cols)])
    else:
        matrix_solve, target_solve = matrix, target

    if allow_rank_deficient:
        coeffs = np.linalg.lstsq(matrix_solve, target_solve, rcond=None)[0]
    else:
        q_mat, r_mat = np.linalg.qr(matrix_solve)
        diag = np.abs(np.diag(r_mat))
        threshold = _SINGULAR_RTOL * max(diag.max(), 1.0)
        bad = [basis.names[i] for i in range(cols) if diag[i] <= threshold]
        if bad:
            raise ConditioningError(
                f"design matrix numerically singular in columns {bad}", bad
            )
        coeffs = np.linalg.solve(r_mat, q_mat.T @ target_solve)

    residual = target - matrix @ coeffs
    return FitModel(
        basis=basis,
        coefficients=tuple(float(c) for c in coeffs),
        scope=scope,
        property_name=data.property_name,
        unit=data.unit,
        rss=float(residual @ residual),
        max_abs_residual=float(np.max(np.abs(residual))) if rows else 0.0,
        dof=rows - cols,
        residuals=tuple(zip(zs, (float(r) for r in residual))),
    )


def predict(model: FitModel, z: int) -> float:
    """Model value at any Z; observation status never blocks prediction."""
    values = model.basis.evaluate(quartet_of(z))
    return float(sum(c * float(v) for c, v in zip(model.coefficients, values)))


def predict_many(model: FitModel, zs: Sequence[int]) -> list[float]:
    return [predict(model, z) for z in zs]
