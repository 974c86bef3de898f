from sympy import isprime

from cli import serializers
from cli.reports import ReportCommand, RunReport, read_input
from cli.suites import Item, run_check
from core.verdicts import Verdict
from cyccoh.io import parse_module
from cyccoh.tate import herbrand, tate_h0, tate_hm1, verify_logh


class Command(ReportCommand):
    help = "Tate groups and Herbrand quotient of a cyclic module."

    def add_arguments(self, parser):
        parser.add_argument("module_file")
        super().add_arguments(parser)

    def echo(self, **options) -> str:
        return f"herbrand {options['module_file']}"

    def run(self, **options) -> RunReport:
        label = options["module_file"]
        module = parse_module(read_input(label))
        record = {
            "n": module.n,
            "rank": module.rank,
            "invariant_rank": module.invariant_rank,
            "h0": tate_h0(module),
            "hm1": tate_hm1(module),
            "herbrand": herbrand(module),
        }
        items = [
            Item(
                label, "herbrand", Verdict.PASS, serializers.HerbrandRecordSerializer(record).data
            )
        ]
        if isprime(module.n):

            def logh():
                report = verify_logh(module, module.n)
                return report.verdict, serializers.LoghReportSerializer(report).data

            items.append(run_check(label, "rank-formula", logh))
        return RunReport(self.echo(**options), items)
