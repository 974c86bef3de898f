from cli import serializers
from cli.reports import ReportCommand, RunReport, read_input
from cli.suites import Item
from core.verdicts import Verdict
from cyccoh.io import parse_module
from cyccoh.lattices import diederichsen_multiplicities


class Command(ReportCommand):
    help = "Trivial, augmentation and free multiplicities of a lattice over C_p."

    def add_arguments(self, parser):
        parser.add_argument("module_file")
        parser.add_argument("p", type=int)
        super().add_arguments(parser)

    def echo(self, **options) -> str:
        return f"decompose {options['module_file']} {options['p']}"

    def run(self, **options) -> RunReport:
        label = options["module_file"]
        module = parse_module(read_input(label))
        decomposition = diederichsen_multiplicities(module, options["p"])
        data = serializers.LatticeDecompositionSerializer(decomposition).data
        return RunReport(self.echo(**options), [Item(label, "decompose", Verdict.PASS, data)])
