"""Run verification suites and report."""

from __future__ import annotations

from surfbraid.exceptions import ValidationError
from surfbraid.homs import SUITE_ORDER, VerificationReport, run_suites
from surfbraid.homs.report import SKIP
from surfbraid.output import EXIT_INPUT_ERROR, colorize_status, emit_json, success, warn
from surfbraid.words import GroupParams


def suite_names(suite: str) -> tuple[str, ...]:
    if suite == "all":
        return SUITE_ORDER
    if suite not in SUITE_ORDER:
        raise ValidationError(f"Unknown suite: {suite} (choose from all, {', '.join(SUITE_ORDER)})")
    return (suite,)


def _print_report(report: VerificationReport) -> None:
    seed = f" seed={report.seed}" if report.seed is not None else ""
    print(f"{report.suite} {report.params}{seed}")
    if not report.checks:
        return
    id_width = max(len(c.check_id) for c in report.checks)
    for c in report.checks:
        status = colorize_status(c.status.ljust(4))
        note = c.witness if c.witness is not None else c.detail
        print(f"  {c.check_id.ljust(id_width)}  {status}  {note}".rstrip())


def cmd_verify(
    suite: str,
    params: GroupParams,
    seed: int = 0,
    samples: int = 1000,
    json_output: bool = False,
) -> int:
    """Exit 0 if every check passes (skips allowed), 1 if one fails, 2 if nothing ran."""
    reports = run_suites(suite_names(suite), params, seed, samples)
    passed = all(r.passed for r in reports)
    ran = any(c.status != SKIP for r in reports for c in r.checks)

    if json_output:
        output = {
            "params": params.as_dict(),
            "seed": seed,
            "samples": samples,
            "passed": passed,
            "suites": [r.to_dict() for r in reports],
        }
        emit_json(output)
    else:
        for report in reports:
            _print_report(report)
        failures = sum(len(r.failures) for r in reports)
        if failures:
            warn(f"{failures} check(s) failed")
        elif ran:
            success("All checks passed")

    if not ran:
        warn(f"no check ran: every suite is outside its regime for {params}")
        return EXIT_INPUT_ERROR
    return 0 if passed else 1
