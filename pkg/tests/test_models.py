"""Tests for limits, reports and command results."""

import pytest

from permion import CapacityError, ConfigurationError, Limits
from permion.enums import CommandStatus
from permion.models import CarReport, CommandResult, GeneralizedCarReport


def test_limits_defaults():
    """Test the default caps."""
    limits = Limits.from_env({})
    assert limits == Limits()
    assert limits.max_enumerate_n == 8
    assert limits.max_fermion_modes == 12
    assert limits.to_dict()["max_tensor_size"] == 10**6


def test_limits_env_override():
    """Test that PERMION_MAX_N lowers degree caps and leaves basis-size caps alone."""
    limits = Limits.from_env({"PERMION_MAX_N": "3"})
    assert limits.max_enumerate_n == 3
    assert limits.max_fermion_modes == 3
    assert limits.max_schur_weyl_d == 3
    assert limits.max_boson_states == 10**5
    assert limits.max_tensor_size == 10**6


def test_limits_env_blank_is_ignored():
    """Test that an empty override keeps the defaults."""
    assert Limits.from_env({"PERMION_MAX_N": " "}) == Limits()


@pytest.mark.parametrize("raw", ["abc", "0", "-2", "2.5"])
def test_limits_env_invalid(raw):
    """Test that a malformed override raises ConfigurationError."""
    with pytest.raises(ConfigurationError):
        Limits.from_env({"PERMION_MAX_N": raw})


def test_limits_check():
    """Test cap enforcement and the error fields."""
    limits = Limits()
    limits.check("max_car_modes", 8)
    with pytest.raises(CapacityError) as exc_info:
        limits.check("max_car_modes", 9)
    error = exc_info.value
    assert (error.cap, error.requested, error.limit) == ("max_car_modes", 9, 8)
    assert "max_car_modes" in str(error)


def test_command_status_exit_codes():
    """Test the 0/1/2 exit-code contract."""
    assert CommandStatus.OK.exit_code == 0
    assert CommandStatus.VERIFICATION_FAILED.exit_code == 1
    assert CommandStatus.USAGE_ERROR.exit_code == 2
    assert CommandResult(status=CommandStatus.USAGE_ERROR, message="bad").exit_code == 2


def test_car_report_to_dict():
    """Test report serialization."""
    report = CarReport(d=2, pairs_checked=4, max_violation=2, failures=[("{a_p,a_q}", 1, 2)])
    assert not report.ok
    assert report.to_dict() == {
        "d": 2,
        "pairs_checked": 4,
        "max_violation": 2,
        "failures": [["{a_p,a_q}", 1, 2]],
        "ok": False,
    }


def test_generalized_car_report_shape_checks():
    """Test the symmetric and diagonal properties of a measured S."""
    report = GeneralizedCarReport(is_fermionic=True, s_matrix=[[2, 0], [0, 2]])
    assert report.is_symmetric and report.is_diagonal
    skew = GeneralizedCarReport(is_fermionic=False, s_matrix=[[0, 1], [-1, 0]])
    assert not skew.is_symmetric
    assert not GeneralizedCarReport(is_fermionic=False, failure=(1, 1)).is_symmetric
