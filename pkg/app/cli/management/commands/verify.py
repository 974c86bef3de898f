from catalog.catalogs import load_catalog
from cli.reports import ReportCommand, RunReport
from cli.suites import SUITES, sweep


class Command(ReportCommand):
    help = "Sweep theorem checks over every pair of a catalog."

    def add_arguments(self, parser):
        parser.add_argument("suite", choices=SUITES + ("all",))
        parser.add_argument("catalog", nargs="?", help="Catalog name (default finite-small).")
        parser.add_argument("--catalog", dest="catalog_flag", help="Same as the positional.")
        super().add_arguments(parser)

    @staticmethod
    def _catalog(options) -> str:
        return options["catalog"] or options["catalog_flag"] or "finite-small"

    def echo(self, **options) -> str:
        return f"verify {options['suite']} {self._catalog(options)}"

    def run(self, **options) -> RunReport:
        catalog = self._catalog(options)
        suite = options["suite"]
        entries = load_catalog(catalog)
        self.stderr.write(f"Running {suite} over {len(entries)} entries of {catalog}")
        suites = SUITES if suite == "all" else (suite,)
        items = sweep(suites, entries, options["max_cosets"])
        return RunReport(self.echo(**options), items, suite=suite, catalog=catalog)
