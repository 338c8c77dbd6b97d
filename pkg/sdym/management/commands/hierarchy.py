from django.core.management.base import BaseCommand, CommandError

from ...decorators import options_injector, service_injector
from ...serializers import HierarchyOptionsSerializer
from ...services import HierarchyService
from ._output import write_json


class Command(BaseCommand):
    help = "Generate the symmetry hierarchy of a seed to a given depth."

    def add_arguments(self, parser):
        parser.add_argument("--seed-family", dest="seed_family", required=True, help="internal:k or L:k")
        parser.add_argument("--depth", type=int, required=True)
        parser.add_argument("--format", default="json", help="json or latex")

    @service_injector(HierarchyService)
    @options_injector(HierarchyOptionsSerializer)
    def handle(self, service, options, **kwargs):
        result = service.generate(options["seed_family"], options["depth"], options["format"])
        if not result.is_success:
            raise CommandError(result.get_error(), returncode=1)

        for entry in result.get_data():
            if options["format"] == "json":
                write_json(self, entry)
                continue
            self.stdout.write(f"% {entry['family']} level {entry['level']}")
            self.stdout.write(f"\\Phi^{{({entry['level']})}} = {entry['phi']}")
            if entry["q"] is not None:
                self.stdout.write(f"Q^{{({entry['level']})}} = {entry['q']}")
            if entry["definition"] is not None:
                name = entry["nonlocal_name"]
                self.stdout.write(f"\\partial_{{\\bar z}} {name} = {entry['definition']['dzbar']}")
                self.stdout.write(f"\\partial_{{\\bar y}} {name} = {entry['definition']['dybar']}")
