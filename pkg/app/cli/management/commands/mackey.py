from cli import serializers
from cli.reports import ReportCommand, RunReport, read_input
from cli.suites import Item, run_check
from core.verdicts import Verdict
from mackey.datum import euler_char, section_cohomology, six_term_check, validate_datum
from mackey.io import parse_datum


class Command(ReportCommand):
    help = "Validate a Mackey datum and compute its section cohomology."

    def add_arguments(self, parser):
        parser.add_argument("datum_file")
        super().add_arguments(parser)

    def echo(self, **options) -> str:
        return f"mackey {options['datum_file']}"

    def run(self, **options) -> RunReport:
        label = options["datum_file"]
        datum = parse_datum(read_input(label))
        validation = validate_datum(datum)
        items = [
            Item(
                label,
                "validation",
                validation.verdict,
                serializers.DatumValidationSerializer(validation).data,
            )
        ]
        if validation.is_valid:

            def cohomology():
                groups = section_cohomology(datum)
                data = serializers.SectionCohomologySerializer(groups).data
                data["euler"] = serializers.FractionField().to_representation(euler_char(datum))
                return Verdict.PASS, data

            def exactness():
                report = six_term_check(datum)
                return report.verdict, serializers.ExactnessReportSerializer(report).data

            items.append(run_check(label, "section-cohomology", cohomology))
            items.append(run_check(label, "six-term", exactness))
        return RunReport(self.echo(**options), items)
