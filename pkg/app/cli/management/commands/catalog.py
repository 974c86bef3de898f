from django.core.management.base import BaseCommand, CommandError

from catalog.catalogs import available_catalogs, load_catalog
from cli.reports import render
from cli.serializers import CatalogEntrySerializer
from core.exceptions import AlgebraError


class Command(BaseCommand):
    help = "List the catalogs, or the entries of one catalog."

    def add_arguments(self, parser):
        parser.add_argument("action", choices=["list"])
        parser.add_argument("--catalog", help="List the entries of this catalog.")
        parser.add_argument("--json", action="store_true", help="Write JSON instead of YAML.")

    def handle(self, *args, **options):
        if options["catalog"]:
            try:
                entries = load_catalog(options["catalog"])
            except AlgebraError as exc:
                raise CommandError(str(exc), returncode=2) from exc
            data = {"entries": CatalogEntrySerializer(entries, many=True).data}
        else:
            data = {"catalogs": available_catalogs()}
        self.stdout.write(render(data, options["json"]), ending="")
