from django.core.management.base import BaseCommand, CommandError

from ...decorators import options_injector, service_injector
from ...serializers import FixtureSerializer, OracleOptionsSerializer
from ...services import FixtureService
from ._output import write_json, write_reports


class Command(BaseCommand):
    help = "Build a solution fixture and check its invariants, or export it as JSON."

    def add_arguments(self, parser):
        parser.add_argument("--degree", type=int)
        parser.add_argument("--rng-seed", dest="rng_seed", type=int)
        parser.add_argument("--fixture", default="random", help="abelian or random")
        parser.add_argument("--format", default="report", help="report or json")

    @service_injector(FixtureService)
    @options_injector(OracleOptionsSerializer)
    def handle(self, service, options, **kwargs):
        result = service.get_fixture(options["fixture"], options["rng_seed"], options["degree"])
        if not result.is_success:
            raise CommandError(result.get_error(), returncode=1)

        fixture = result.get_data()
        if options["format"] == "json":
            write_json(self, FixtureSerializer(fixture).data)
            return
        write_reports(self, service.invariant_reports(fixture))
