from fractions import Fraction

import numpy as np
import pytest

from mendeleev_city.fitting import (
    BasisFunction,
    ConditioningError,
    ExplicitScope,
    FamilyScope,
    IntegrityBasis,
    PeriodScope,
    RankError,
    ScopeError,
    default_basis,
    design_matrix,
    fit,
    predict,
)
from mendeleev_city.quartet import Quartet, quartet_of
from mendeleev_city.registry import PropertyDataset
from mendeleev_city.table import ColumnId

ALKALI = ColumnId(0, 1, -1)


def synthetic(zs, func):
    return PropertyDataset("synthetic", "", {z: float(func(quartet_of(z))) for z in zs})


class TestDefaultBasis:
    def test_size(self):
        assert len(default_basis()) == 8

    def test_hydrogen_cell_values(self):
        values = default_basis().evaluate(Quartet(1, 0, 1, -1))
        assert values == [1, 1, 0, Fraction(3, 4), Fraction(-1, 2), 1, Fraction(1, 4), 0]

    def test_f_block_values(self):
        values = dict(zip(default_basis().names, default_basis().evaluate(Quartet(4, 3, 5, -5))))
        assert values["l(l+1)"] == 12
        assert values["j(j+1)"] == Fraction(35, 4)

    def test_duplicate_names_rejected(self):
        f = BasisFunction("n", lambda q: Fraction(q.n))
        with pytest.raises(Exception):
            IntegrityBasis((f, f))


class TestDesignMatrix:
    def test_family_selection(self):
        data = synthetic([1, 3, 11, 19, 5, 8], lambda q: q.n)
        matrix, target, zs = design_matrix(FamilyScope(ALKALI), default_basis(), data)
        assert zs == [1, 3, 11, 19]
        assert matrix.shape == (4, 8)

    def test_period_selection(self):
        data = synthetic(range(1, 30), lambda q: q.n)
        _, _, zs = design_matrix(PeriodScope(2), default_basis(), data)
        assert zs == [3, 4, 5, 6, 7, 8, 9, 10]

    def test_period_excludes_interleaved_rows(self):
        data = synthetic(range(1, 40), lambda q: q.n)
        _, _, zs = design_matrix(PeriodScope(3), default_basis(), data)
        assert zs == [11, 12, 13, 14, 15, 16, 17, 18, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30]

    def test_empty_scope(self):
        data = synthetic([5, 6], lambda q: q.n)
        with pytest.raises(ScopeError):
            design_matrix(FamilyScope(ALKALI), default_basis(), data)


class TestFit:
    def test_recovers_exact_coefficients(self):
        # alkali column; identifiable sub-basis since l(l+1), j(j+1), m are
        # constant along a column and would be collinear with the intercept
        basis = IntegrityBasis((
            BasisFunction("1", lambda q: Fraction(1)),
            BasisFunction("n", lambda q: Fraction(q.n)),
        ))
        zs = [1, 3, 11, 19, 37, 55, 87, 119, 169]
        data = synthetic(zs, lambda q: 2 + 3 * q.n)
        model = fit(FamilyScope(ALKALI), basis, data)
        coeffs = dict(zip(model.basis.names, model.coefficients))
        assert coeffs["1"] == pytest.approx(2.0, abs=1e-9)
        assert coeffs["n"] == pytest.approx(3.0, abs=1e-9)
        assert model.max_abs_residual <= 1e-9
        assert predict(model, 1) == pytest.approx(5.0, abs=1e-9)

    def test_family_scope_full_basis_is_singular(self):
        # along one column the constant-valued functions are collinear with
        # the intercept; strict mode must say which columns
        zs = [1, 3, 11, 19, 37, 55, 87, 119, 169]
        data = synthetic(zs, lambda q: 2 + 3 * q.n)
        with pytest.raises(ConditioningError):
            fit(FamilyScope(ALKALI), default_basis(), data)
        model = fit(FamilyScope(ALKALI), default_basis(), data, allow_rank_deficient=True)
        assert model.max_abs_residual <= 1e-9

    def test_in_span_recovery_full_basis(self):
        zs = list(range(1, 30))
        data = synthetic(
            zs, lambda q: 1 - 2 * q.n + Fraction(q.j2 * (q.j2 + 2), 4) + q.n * q.l
        )
        model = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        assert model.max_abs_residual <= 1e-9
        for z in zs:
            q = quartet_of(z)
            expected = float(1 - 2 * q.n + Fraction(q.j2 * (q.j2 + 2), 4) + q.n * q.l)
            assert predict(model, z) == pytest.approx(expected, abs=1e-9)

    def test_constant_basis_gives_mean(self):
        basis = IntegrityBasis((BasisFunction("1", lambda q: Fraction(1)),))
        data = PropertyDataset("p", "", {1: 2.0, 2: 4.0, 3: 9.0})
        model = fit(ExplicitScope((1, 2, 3)), basis, data)
        assert model.coefficients[0] == pytest.approx(5.0)

    def test_duplicate_column_raises_conditioning(self):
        basis = IntegrityBasis((
            BasisFunction("n", lambda q: Fraction(q.n)),
            BasisFunction("n_again", lambda q: Fraction(q.n)),
        ))
        data = synthetic([1, 3, 11], lambda q: q.n)
        with pytest.raises(ConditioningError) as err:
            fit(ExplicitScope((1, 3, 11)), basis, data)
        assert "n_again" in err.value.columns

    def test_underdetermined_raises_rank_error(self):
        data = synthetic([1, 3], lambda q: q.n)
        with pytest.raises(RankError):
            fit(ExplicitScope((1, 3)), default_basis(), data)

    def test_rank_deficient_mode_allows_it(self):
        data = synthetic([1, 3], lambda q: q.n)
        model = fit(
            ExplicitScope((1, 3)), default_basis(), data, allow_rank_deficient=True
        )
        assert model.max_abs_residual <= 1e-9

    def test_residual_orthogonality(self):
        rng = np.random.default_rng(7)
        zs = list(range(1, 40))
        noisy = {z: float(quartet_of(z).n) + rng.normal() for z in zs}
        data = PropertyDataset("noisy", "", noisy)
        model = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        matrix, target, _ = design_matrix(ExplicitScope(tuple(zs)), default_basis(), data)
        residual = target - matrix @ np.array(model.coefficients)
        scale = np.linalg.norm(target) * np.linalg.norm(matrix, axis=0)
        assert np.all(np.abs(matrix.T @ residual) <= 1e-8 * np.maximum(scale, 1.0))

    def test_scale_equivariance(self):
        zs = list(range(1, 40))
        rng = np.random.default_rng(11)
        base = {z: float(rng.normal()) for z in zs}
        scaled = {z: 10.0 * v for z, v in base.items()}
        m1 = fit(ExplicitScope(tuple(zs)), default_basis(), PropertyDataset("p", "", base))
        m2 = fit(ExplicitScope(tuple(zs)), default_basis(), PropertyDataset("p", "", scaled))
        for c1, c2 in zip(m1.coefficients, m2.coefficients):
            assert c2 == pytest.approx(10.0 * c1, rel=1e-12, abs=1e-12)

    def test_determinism(self):
        zs = list(range(1, 40))
        data = synthetic(zs, lambda q: q.n * q.n - q.l)
        a = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        b = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        assert a.coefficients == b.coefficients

    def test_ridge_shrinks(self):
        zs = list(range(1, 40))
        data = synthetic(zs, lambda q: q.n)
        plain = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        ridged = fit(ExplicitScope(tuple(zs)), default_basis(), data, ridge=1e3)
        assert sum(c * c for c in ridged.coefficients) < sum(
            c * c for c in plain.coefficients
        )

    def test_negative_ridge_rejected(self):
        data = synthetic(range(1, 40), lambda q: q.n)
        with pytest.raises(Exception):
            fit(ExplicitScope(tuple(range(1, 40))), default_basis(), data, ridge=-1.0)


class TestPredict:
    def test_zero_model(self):
        zs = list(range(1, 40))
        data = synthetic(zs, lambda q: 0)
        model = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        for z in (1, 57, 119):
            assert predict(model, z) == pytest.approx(0.0, abs=1e-12)

    def test_extrapolation_to_unobserved(self):
        zs = list(range(1, 40))
        data = synthetic(zs, lambda q: 2 + 3 * q.n)
        model = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        import math

        assert math.isfinite(predict(model, 119))

    def test_report_serialization(self):
        zs = list(range(1, 40))
        data = synthetic(zs, lambda q: q.n)
        model = fit(ExplicitScope(tuple(zs)), default_basis(), data)
        report = model.to_dict()
        assert set(report) == {
            "property", "unit", "scope", "basis", "coefficients",
            "rss", "max_abs_residual", "dof", "residuals",
        }
        assert len(report["residuals"]) == len(zs)
