from django.core.management.base import BaseCommand, CommandError

from ...decorators import options_injector, service_injector
from ...serializers import VerifyOptionsSerializer
from ...services import VerificationService
from ._output import write_reports


class Command(BaseCommand):
    help = "Run a verification suite and stream one NDJSON report per check."

    def add_arguments(self, parser):
        parser.add_argument("--suite", required=True,
                            help="core, propositions, lemma22, example, kac-moody, virasoro or all")
        parser.add_argument("--levels", type=int)
        parser.add_argument("--degree", type=int)
        parser.add_argument("--rng-seed", dest="rng_seed", type=int)

    @service_injector(VerificationService)
    @options_injector(VerifyOptionsSerializer)
    def handle(self, service, options, **kwargs):
        result = service.run(options["suite"], options["levels"], options["degree"], options["rng_seed"])
        if not result.is_success:
            raise CommandError(result.get_error(), returncode=1)
        write_reports(self, result.get_data())
