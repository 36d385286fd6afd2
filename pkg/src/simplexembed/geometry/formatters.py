"""Text formatters for verification reports."""

from simplexembed.geometry.models import ParityReport, VerificationReport


class VerificationTextFormatter:
    """Format a VerificationReport as PASS/FAIL lines."""

    @staticmethod
    def format(report: VerificationReport) -> str:
        lines = [
            f"{report.check}: {'PASS' if report.passed else 'FAIL'}",
            f"k: {report.k}",
            f"checked: {report.checked}",
        ]
        if report.sign is not None:
            lines.append(f"sign: {report.sign:+d}")
        if report.seed is not None:
            lines.append(f"seed: {report.seed}")
        if report.trial is not None:
            lines.append(f"failing_trial: {report.trial}")
        if report.counterexample is not None:
            sigma, tau = report.counterexample
            lines.append(
                f"counterexample: {' '.join(map(str, sigma))} | {' '.join(map(str, tau))}"
            )
            lines.append(f"expected: {report.expected}")
            lines.append(f"actual: {report.actual}")
        return "\n".join(lines)


class ParityTextFormatter:
    """Format a ParityReport."""

    @staticmethod
    def format(report: ParityReport) -> str:
        return "\n".join(
            [
                f"parity: {report.parity.value}",
                f"k: {report.k}",
                f"total_intersections: {report.total}",
            ]
        )
