"""Text, JSON, CSV and Excel rendering of command results."""

import json
from enum import Enum
from pathlib import Path
from typing import Union

import pandas as pd
import xlsxwriter
from pydantic import BaseModel

from moving_planes.core.exceptions import ExportError
from moving_planes.core.models import (
    HyperbolicNumber,
    Mat2,
    Mat2Complexified,
    MinkowskiVector,
    Multivector,
    OutputFormat,
    SweepRow,
    Vector2,
    VerificationReport,
)

# Values printed through their own text form rather than field by field
_ATOMIC = (Multivector, Vector2, MinkowskiVector, HyperbolicNumber, Mat2, Mat2Complexified)

Result = Union[BaseModel, list[SweepRow]]


class ReportExporter:
    """Render results for stdout and write sweep tables to disk."""

    # Sweep column headers and widths for the workbook
    SWEEP_COLUMNS = [
        ("phi", 12),
        ("rho", 12),
        ("theta_ab", 12),
        ("omega", 14),
        ("Omega", 14),
        ("vw_norm", 14),
        ("uvw_norm", 14),
        ("active_passive_gap", 20),
    ]

    def render(self, result: Result, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if isinstance(result, list):
            return self._render_rows(result, fmt)
        if fmt is OutputFormat.JSON:
            return result.model_dump_json(by_alias=True, indent=2)
        if fmt is OutputFormat.CSV:
            return self._to_frame(result).to_csv(index=False)
        if isinstance(result, VerificationReport):
            return self._verification_text(result)
        if isinstance(result, _ATOMIC):
            return str(result)
        return "\n".join(self._text_lines("", result))

    def _render_rows(self, rows: list[SweepRow], fmt: OutputFormat) -> str:
        if fmt is OutputFormat.JSON:
            return json.dumps([r.model_dump(mode="json", by_alias=True) for r in rows], indent=2)
        df = self.rows_to_dataframe(rows)
        if fmt is OutputFormat.CSV:
            return df.to_csv(index=False)
        return df.to_string(index=False, float_format=repr)

    def _text_lines(self, prefix: str, value) -> list[str]:
        if isinstance(value, _ATOMIC):
            return [f"{prefix}: {value}"]
        if isinstance(value, BaseModel):
            lines = []
            for name in type(value).model_fields:
                key = f"{prefix}.{name}" if prefix else name
                lines.extend(self._text_lines(key, getattr(value, name)))
            return lines
        if isinstance(value, Enum):
            return [f"{prefix}: {value.value}"]
        if isinstance(value, float):
            return [f"{prefix}: {value!r}"]
        if value is None:
            return [f"{prefix}: -"]
        return [f"{prefix}: {value}"]

    @staticmethod
    def _verification_text(report: VerificationReport) -> str:
        lines = [f"suite: {report.suite.value}  seed: {report.seed}  count: {report.count}"]
        for r in report.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{status}  [{r.suite.value}] {r.name}: "
                f"max error {r.max_error:.3e} (threshold {r.threshold:.1e}, {r.samples} samples)"
            )
            if not r.passed:
                if r.message:
                    lines.append(f"      {r.message}")
                if r.counterexample:
                    worst = ", ".join(f"{k}={v!r}" for k, v in r.counterexample.items())
                    lines.append(f"      counterexample: {worst}")
        failed = len(report.failures)
        lines.append(f"{len(report.results) - failed} passed, {failed} failed")
        return "\n".join(lines)

    @staticmethod
    def _to_frame(result: BaseModel) -> pd.DataFrame:
        if isinstance(result, VerificationReport):
            rows = [r.model_dump(mode="json", exclude={"counterexample"}) for r in result.results]
            return pd.DataFrame(rows)
        return pd.json_normalize(result.model_dump(mode="json", by_alias=True))

    @staticmethod
    def rows_to_dataframe(rows: list[SweepRow]) -> pd.DataFrame:
        columns = [name for name, _ in ReportExporter.SWEEP_COLUMNS]
        return pd.DataFrame([r.model_dump(by_alias=True) for r in rows], columns=columns)

    def export_sweep(self, rows: list[SweepRow], output_path: Path | str) -> Path:
        """Write sweep rows to ``.csv`` or ``.xlsx``, chosen by suffix."""
        output_path = Path(output_path)
        suffix = output_path.suffix.lower()
        if suffix == ".csv":
            try:
                self.rows_to_dataframe(rows).to_csv(output_path, index=False)
            except OSError as e:
                raise ExportError(f"Failed to write CSV file: {e}")
            return output_path
        if suffix == ".xlsx":
            return self._export_workbook(rows, output_path)
        raise ExportError(f"Unsupported output type '{suffix}' (use .csv or .xlsx)")

    def _export_workbook(self, rows: list[SweepRow], output_path: Path) -> Path:
        try:
            workbook = xlsxwriter.Workbook(str(output_path))
            worksheet = workbook.add_worksheet("Sweep")

            header_format = workbook.add_format({
                'bold': True,
                'bg_color': '#4472C4',
                'font_color': 'white',
                'border': 1,
                'align': 'center',
                'valign': 'vcenter',
            })
            number_format = workbook.add_format({
                'border': 1,
                'num_format': '0.000000000',
            })

            for col, (name, width) in enumerate(self.SWEEP_COLUMNS):
                worksheet.write(0, col, name, header_format)
                worksheet.set_column(col, col, width)

            for row, values in enumerate(self.rows_to_dataframe(rows).itertuples(index=False), start=1):
                for col, value in enumerate(values):
                    worksheet.write_number(row, col, float(value), number_format)

            worksheet.freeze_panes(1, 0)
            workbook.close()
            return output_path

        except Exception as e:
            raise ExportError(f"Failed to create Excel file: {e}")


def render_result(result: Result, fmt: OutputFormat = OutputFormat.TEXT) -> str:
    """Convenience function to render a result with a fresh exporter."""
    return ReportExporter().render(result, fmt)
