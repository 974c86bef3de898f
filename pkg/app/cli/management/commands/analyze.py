from catalog.catalogs import load_catalog
from catalog.specfiles import load_entry
from cli.reports import ReportCommand, RunReport
from cli.suites import analyze_pair
from core.exceptions import PreconditionError


class Command(ReportCommand):
    help = "Transfer, kernel, cokernel and the theorem checks for one pair."

    def add_arguments(self, parser):
        parser.add_argument("group", help="Group spec file, or entry name with --catalog.")
        parser.add_argument("subgroup", help="Label of a declared subgroup.")
        parser.add_argument("--catalog", help="Look the group up in this catalog.")
        super().add_arguments(parser)

    def echo(self, **options) -> str:
        catalog = f" --catalog {options['catalog']}" if options["catalog"] else ""
        return f"analyze {options['group']} {options['subgroup']}{catalog}"

    def run(self, **options) -> RunReport:
        if options["catalog"]:
            entries = {e.name: e for e in load_catalog(options["catalog"])}
            if options["group"] not in entries:
                raise PreconditionError(
                    f"{options['catalog']} has no entry {options['group']!r}"
                )
            entry = entries[options["group"]]
        else:
            entry = load_entry(options["group"])
        pair = entry.pair(options["subgroup"], options["max_cosets"])
        return RunReport(
            self.echo(**options), analyze_pair(pair), catalog=options["catalog"] or ""
        )
