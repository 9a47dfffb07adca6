"""Tests for result rendering and sweep export."""

import io
import json
import math

import pandas as pd
import pytest

from moving_planes.config import Settings
from moving_planes.core import ga2
from moving_planes.core.exceptions import ExportError
from moving_planes.core.models import (
    InvariantResult,
    Mat2,
    OrientedFrame,
    OutputFormat,
    SweepSpec,
    UnitVector2,
    VerificationReport,
    VerifySuite,
)
from moving_planes.exporters.report_exporter import ReportExporter, render_result
from moving_planes.services.calculation_service import CalculationService
from moving_planes.services.sweep_service import SweepService


@pytest.fixture
def exporter():
    return ReportExporter()


@pytest.fixture
def rows():
    spec = SweepSpec(phi_range=(0.0, 0.5), rho_range=(0.5, 0.5), theta_range=(0.0, 1.5), steps=2)
    return SweepService(Settings()).run(spec)


@pytest.fixture
def compose_report():
    j = OrientedFrame(a=UnitVector2(v1=1.0, v2=0.0), phi=math.atanh(0.5))
    k = OrientedFrame(a=UnitVector2(v1=0.0, v2=1.0), phi=math.atanh(0.5))
    return CalculationService(Settings()).compose(j, k)


def _report(passed: bool) -> VerificationReport:
    return VerificationReport(
        suite=VerifySuite.CORE,
        seed=42,
        count=10,
        results=[
            InvariantResult(
                suite=VerifySuite.CORE,
                name="gp associativity",
                samples=10,
                max_error=0.0 if passed else 0.25,
                threshold=1e-12,
                passed=passed,
                counterexample=None if passed else {"a.s": 1.5},
            )
        ],
    )


class TestRender:
    def test_element_text(self, exporter):
        assert exporter.render(ga2.E1 - ga2.I) == "1.0 e1 - 1.0 e12"

    def test_matrix_text(self, exporter):
        assert exporter.render(Mat2()) == "[[1.0, 0.0], [0.0, 1.0]]"

    def test_report_text(self, exporter, compose_report):
        text = exporter.render(compose_report)
        assert "composition.cosh_omega: 1.333333333333333" in text
        assert "j.phi: " in text

    def test_report_json(self, exporter, compose_report):
        data = json.loads(exporter.render(compose_report, OutputFormat.JSON))
        assert data["composition"]["cosh_omega"] == pytest.approx(4.0 / 3.0)
        assert data["composition"]["vw"]["e12"] == pytest.approx(-0.25)

    def test_report_csv(self, exporter, compose_report):
        df = pd.read_csv(io.StringIO(exporter.render(compose_report, OutputFormat.CSV)))
        assert len(df) == 1
        assert df["composition.cosh_omega"][0] == pytest.approx(4.0 / 3.0)

    def test_verification_text(self, exporter):
        assert exporter.render(_report(True)).endswith("1 passed, 0 failed")
        text = render_result(_report(False))
        assert "FAIL  [core] gp associativity" in text
        assert "counterexample: a.s=1.5" in text

    def test_verification_csv_drops_counterexample(self, exporter):
        df = pd.read_csv(io.StringIO(exporter.render(_report(False), OutputFormat.CSV)))
        assert "counterexample" not in df.columns
        assert not df["passed"][0]

    def test_rows(self, exporter, rows):
        data = json.loads(exporter.render(rows, OutputFormat.JSON))
        assert len(data) == 8
        assert "Omega" in data[0]
        df = pd.read_csv(io.StringIO(exporter.render(rows, OutputFormat.CSV)))
        assert list(df.columns) == [name for name, _ in ReportExporter.SWEEP_COLUMNS]
        assert "active_passive_gap" in exporter.render(rows)


class TestExportSweep:
    def test_csv(self, exporter, rows, tmp_path):
        path = exporter.export_sweep(rows, tmp_path / "sweep.csv")
        df = pd.read_csv(path)
        assert len(df) == len(rows)
        assert df["Omega"].tolist() == pytest.approx([r.passive_omega for r in rows])

    def test_xlsx(self, exporter, rows, tmp_path):
        path = exporter.export_sweep(rows, tmp_path / "sweep.xlsx")
        assert path.exists()
        assert path.stat().st_size > 0

    def test_unsupported_suffix(self, exporter, rows, tmp_path):
        with pytest.raises(ExportError):
            exporter.export_sweep(rows, tmp_path / "sweep.txt")

    def test_missing_directory(self, exporter, rows, tmp_path):
        with pytest.raises(ExportError):
            exporter.export_sweep(rows, tmp_path / "missing" / "sweep.csv")
