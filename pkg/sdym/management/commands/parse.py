from django.core.management.base import BaseCommand, CommandError

from ...decorators import options_injector, service_injector
from ...serializers import ParseOptionsSerializer
from ...services import ExpressionService


class Command(BaseCommand):
    help = "Parse an expression and echo its canonical form."

    def add_arguments(self, parser):
        parser.add_argument("expression")
        parser.add_argument("--format", default="text", help="text or latex")

    @service_injector(ExpressionService)
    @options_injector(ParseOptionsSerializer)
    def handle(self, service, options, **kwargs):
        result = service.canonical_form(options["expression"], options["format"])
        if not result.is_success:
            raise CommandError(result.get_error(), returncode=2)
        self.stdout.write(result.get_data()["canonical"])
