import json

import pytest

from qaoasim import RunReport, SweepReport
from qaoasim.report import deterministic_timestamp


def make_report(**overrides):
    fields = dict(
        problem="mis",
        graph="square-ring",
        p=1,
        restarts=2,
        seed=0,
        initial_state="0000",
        best_gammas=(0.1,),
        best_betas=(0.2,),
        best_expectation=1.5,
        c_max=2.0,
        approximation_ratio=0.75,
        averaged_distribution=(("00", 0.5), ("01", 0.25), ("10", 0.25), ("11", 0.0)),
        feasibility_leakage=0.0,
        timestamp="1970-01-01T00:00:00+00:00",
        tool_version="0.1.0",
    )
    fields.update(overrides)
    return RunReport(**fields)


class TestRunReport:
    def test_distribution_must_sum_to_one(self):
        with pytest.raises(ValueError, match="sums"):
            make_report(averaged_distribution=(("0", 0.4), ("1", 0.4)))

    def test_ratio_range(self):
        with pytest.raises(ValueError, match="ratio"):
            make_report(approximation_ratio=1.2)

    def test_json_structure(self):
        data = json.loads(make_report().to_json())
        assert data["best_params"] == {"gammas": [0.1], "betas": [0.2]}
        assert data["averaged_distribution"][1] == ["01", 0.25]
        assert "best_gammas" not in data

    def test_write_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        make_report().write(a)
        make_report().write(b)
        assert a.read_bytes() == b.read_bytes()


class TestSweepReport:
    def test_max_must_match(self):
        with pytest.raises(ValueError, match="max_value"):
            SweepReport("0000", (0.0, 0.1), (0.2, 0.5), 0.4, 0.1)

    def test_csv(self):
        sweep = SweepReport("0000", (0.0, 0.1), (0.2, 0.5), 0.5, 0.1)
        lines = sweep.to_csv().splitlines()
        assert lines[0] == "beta,ratio"
        assert len(lines) == 3

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="lengths"):
            SweepReport("0000", (0.0,), (0.2, 0.5), 0.5, 0.0)


class TestTimestamp:
    def test_default_is_epoch(self, monkeypatch):
        monkeypatch.delenv("SOURCE_DATE_EPOCH", raising=False)
        assert deterministic_timestamp() == "1970-01-01T00:00:00+00:00"

    def test_honors_source_date_epoch(self, monkeypatch):
        monkeypatch.setenv("SOURCE_DATE_EPOCH", "86400")
        assert deterministic_timestamp() == "1970-01-02T00:00:00+00:00"
