"""Run reports and the base class of the report-writing commands."""
from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from datetime import timedelta
from pathlib import Path

import yaml
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from cli import __version__
from cli.serializers import RunReportSerializer
from cli.suites import Item
from core.exceptions import AlgebraError, SpecFileError
from core.limits import algebra_caps
from core.models import RunRecord
from core.verdicts import Verdict


@dataclass
class RunReport:
    command: str
    items: list[Item] = field(default_factory=list)
    suite: str = ""
    catalog: str = ""
    error: str | None = None
    wall_time: timedelta = timedelta(0)
    tool_version: str = __version__

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(item.verdict for item in self.items)
        return {verdict.value: counts[verdict] for verdict in Verdict}

    @property
    def failed(self) -> int:
        return self.summary[Verdict.FAIL.value]


def to_plain(data) -> dict:
    """Serializer output as plain JSON types."""
    return json.loads(JSONRenderer().render(data))


def render(data, as_json: bool = False) -> str:
    if as_json:
        return JSONRenderer().render(data, renderer_context={"indent": 2}).decode() + "\n"
    return yaml.safe_dump(to_plain(data), sort_keys=False, default_flow_style=False)


class ReportCommand(BaseCommand):
    """Common flags, engine caps, output and the exit status.

    Subclasses implement ``run`` and return a ``RunReport``. The command exits non-zero
    iff some item failed or the run raised an ``AlgebraError``.
    """

    def add_arguments(self, parser):
        parser.add_argument("--output", help="Write the report to this file.")
        parser.add_argument("--max-cosets", type=int, help="Coset enumeration cap.")
        parser.add_argument("--max-order", type=int, help="Element enumeration cap.")
        parser.add_argument("--json", action="store_true", help="Write JSON instead of YAML.")
        parser.add_argument("--save", action="store_true", help="Store the run in the database.")

    def run(self, **options) -> RunReport:
        raise NotImplementedError("subclasses of ReportCommand must provide a run() method")

    def echo(self, **options) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def handle(self, *args, **options):
        started = time.monotonic()
        error = None
        with algebra_caps(MAX_COSETS=options["max_cosets"], MAX_ORDER=options["max_order"]):
            try:
                report = self.run(**options)
            except AlgebraError as exc:
                error = exc
                report = RunReport(self.echo(**options), error=f"{type(exc).__name__}: {exc}")
        report.wall_time = timedelta(seconds=time.monotonic() - started)

        data = RunReportSerializer(report).data
        self._write(render(data, options["json"]), options["output"])
        if options["save"]:
            self._save(report, data)

        if error is not None:
            raise CommandError(str(error), returncode=2) from error
        if report.failed:
            raise CommandError(f"{report.failed} checks failed", returncode=1)

    def _write(self, text: str, output: str | None):
        if output:
            Path(output).write_text(text)
            self.stderr.write(f"Report written to {output}")
        else:
            self.stdout.write(text, ending="")

    def _save(self, report: RunReport, data):
        summary = report.summary
        record = RunRecord.objects.create(
            command=report.command,
            suite=report.suite,
            catalog=report.catalog,
            passed=summary[Verdict.PASS.value],
            failed=summary[Verdict.FAIL.value],
            hypothesis_not_met=summary[Verdict.HYPOTHESIS_NOT_MET.value],
            inconclusive=summary[Verdict.INCONCLUSIVE.value],
            report=to_plain(data),
        )
        self.stderr.write(self.style.SUCCESS(f"Saved run {record.id}"))


def read_input(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise SpecFileError(f"Cannot read {path}: {exc.strerror}") from exc
