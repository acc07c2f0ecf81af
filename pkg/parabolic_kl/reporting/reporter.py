"""Report generation for polynomial tables and verification runs."""

import json
from pathlib import Path
from typing import Any, Dict, List

from parabolic_kl.combinatorics.paths import convention_symbol
from parabolic_kl.tables import KLTable
from parabolic_kl.utils.logger import setup_logger
from parabolic_kl.verification.verifier import VerificationReport

logger = setup_logger(__name__)

FORMATS = ("json", "tsv", "latex")


def _latex_path(p) -> str:
    return r"\path{" + ",".join(str(p)) + "}"


class Reporter:
    """Renders tables and verification reports as text, JSON, TSV or LaTeX."""

    def table_json(self, table: KLTable) -> Dict[str, Any]:
        return table.to_json()

    def table_tsv(self, table: KLTable) -> str:
        """Header row of paths, then one row per alpha; blank cells mark order violations."""
        lines = ["\t".join([""] + [str(p) for p in table.paths])]
        for alpha, row in zip(table.paths, table.rows):
            cells = ["" if c is None else str(c) for c in row]
            lines.append("\t".join([str(alpha)] + cells))
        return "\n".join(lines) + "\n"

    def table_latex(self, table: KLTable) -> str:
        """
        A tabular in the layout of the published tables.

        Args:
            table: The table to render

        Returns:
            LaTeX source; blank cells are order violations, explicit $0$
            cells are comparable pairs with a zero polynomial
        """
        n = len(table.paths)
        sign = convention_symbol(table.sign)
        lines = [
            f"% P^{sign} for N={table.N}, K={table.K} ({table.method})",
            r"\begin{tabular}{c|" + "c|" * n + "}",
            "&" + "&".join(_latex_path(p) for p in table.paths) + r"\\",
            r"\hline",
        ]
        for alpha, row in zip(table.paths, table.rows):
            cells = ["" if c is None else f"${c.to_latex()}$" for c in row]
            lines.append(r"\vc{" + _latex_path(alpha) + "}&" + "&".join(cells) + r"\\")
            lines.append(r"\hline")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"

    def render_table(self, table: KLTable, format: str = "tsv") -> str:
        if format == "json":
            return json.dumps(self.table_json(table), indent=2) + "\n"
        if format == "tsv":
            return self.table_tsv(table)
        if format == "latex":
            return self.table_latex(table)
        raise ValueError(f"Unknown format: {format}")

    def generate_text_report(self, reports: List[VerificationReport]) -> str:
        """
        Generate a text report.

        Args:
            reports: Verification reports, one per suite run

        Returns:
            Formatted text report
        """
        report_lines = []
        for report in reports:
            k = "all" if report.K is None else report.K
            report_lines.append("=" * 60)
            report_lines.append(f"Suite: {report.suite}  N={report.N}  K={k}")
            report_lines.append("=" * 60)
            for check in report.checks:
                status = "PASS" if check.passed else "FAIL"
                line = f"  [{status}] {check.name} ({check.elapsed:.3f}s)"
                if check.detail:
                    line += f" - {check.detail}"
                report_lines.append(line)
            report_lines.append(f"Result: {'PASS' if report.passed else 'FAIL'}")
        return "\n".join(report_lines)

    def generate_json_report(self, reports: List[VerificationReport]) -> Dict[str, Any]:
        return {
            "passed": all(r.passed for r in reports),
            "reports": [r.to_json() for r in reports],
        }

    def save_report(self, report_data: Any, output_path: str, format: str = "text") -> bool:
        """
        Save report to file.

        Args:
            report_data: Report data (string for text/tsv/latex, dict for JSON)
            output_path: Path to save report
            format: Report format ('text', 'json', 'tsv', 'latex')

        Returns:
            True if saved successfully
        """
        try:
            output_file = Path(output_path)
            output_file.parent.mkdir(parents=True, exist_ok=True)

            if format == "json":
                with open(output_file, 'w') as f:
                    if isinstance(report_data, str):
                        f.write(report_data)
                    else:
                        json.dump(report_data, f, indent=2)
            elif format in ("text", "tsv", "latex"):
                with open(output_file, 'w') as f:
                    f.write(report_data)
            else:
                logger.error(f"Unknown format: {format}")
                return False

            logger.info(f"Report saved to {output_path}")
            return True

        except OSError as e:
            logger.error(f"Error saving report: {e}")
            return False
