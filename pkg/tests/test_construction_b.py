import numpy as np
import pytest

from eaqmds.construction_b import (
    ParamsB,
    assemble_code_b,
    condition_rows_b,
    emit_params_b,
    expected_pattern_b,
    l_window,
    solve_multipliers_b,
    validate_params_b,
)
from eaqmds.errors import HardConstraintViolation, KOutOfRange
from eaqmds.field import field_for_q
from eaqmds.multipliers import satisfies

ODD = ParamsB(13, 3, 2, "odd")


def test_shapes():
    assert (ODD.M, ODD.blocks, ODD.t_blocks, ODD.n, ODD.k_max) == (7, 5, 24, 121, 11)
    assert ParamsB(17, 4, 3).n == 225
    assert ParamsB(13, 7, 5, "even-long").n == 145
    assert ParamsB(13, 7, 6, "even-short").n == 157
    assert ParamsB(13, 7, 5, "even-long").k_max == 12
    assert ParamsB(13, 7, 6, "even-short").k_max == 11


def test_validation():
    assert validate_params_b(ODD) == []
    with pytest.raises(HardConstraintViolation, match="e = 3"):
        validate_params_b(ParamsB(13, 3, 3))
    with pytest.raises(HardConstraintViolation, match="divide"):
        validate_params_b(ParamsB(13, 2, 1))
    with pytest.raises(ValueError):
        ParamsB(13, 3, 2, "weird")


def test_windows():
    assert l_window(ODD) == [2, 3, 4, 5]
    assert l_window(ParamsB(17, 4, 3)) == list(range(2, 8))
    assert l_window(ParamsB(13, 7, 6, "even-short")) == list(range(3, 12))


def test_expected_pattern():
    assert expected_pattern_b(ODD, 11) == {(3, 9), (5, 7), (7, 5), (9, 3)}
    assert expected_pattern_b(ODD, 11, "nonzero") == {(0, 0), (3, 9), (5, 7), (7, 5), (9, 3)}
    assert expected_pattern_b(ParamsB(13, 3, 0), 5) == set()
    with pytest.raises(KOutOfRange):
        expected_pattern_b(ODD, 12)


@pytest.mark.parametrize("mode", ["zero", "nonzero"])
def test_multipliers(mode):
    F = field_for_q(13)
    sol = solve_multipliers_b(ODD, mode, field=F)
    assert satisfies(F, condition_rows_b(F, ODD), sol.u)
    target = F.neg(F.mul(F.from_int(ODD.t_blocks), int(F.vsum(sol.u))))
    assert (F.norm(sol.b0) == target) == (mode == "zero")


def test_single_block():
    sol = solve_multipliers_b(ParamsB(13, 3, 0))
    assert sol.u.tolist() == [1]


def test_points_distinct_and_zero_column():
    code = assemble_code_b(ODD, solve_multipliers_b(ODD), 11)
    assert code.points_distinct and code.a[0] == 0
    assert np.unique(code.a).size == 121


def test_emit_modes():
    p0, c0 = emit_params_b(ODD, 11)
    assert str(p0) == "[[121, 103, 12; 4]]_13"
    assert c0.verdict == "pass" and c0.notes["c_with_b0_nonzero"] == 5
    p1, c1 = emit_params_b(ODD, 11, "nonzero")
    assert p1.c == 5 and c1.verdict == "partial"
    assert any(w.startswith("b0-divergence") for w in c1.warnings)


def test_even_cases():
    p, c = emit_params_b(ParamsB(13, 7, 5, "even-long"), 12)
    assert p.c == 11 and c.verdict == "pass"
    p, c = emit_params_b(ParamsB(13, 7, 6, "even-short"), 11)
    assert p.c == 9 and c.pattern_match and not c.rank_match_claimed
    assert c.notes["l_window_found"] == list(range(3, 12))
