"""
Base class for the verification management commands.

Commands compute an Outcome, print it for humans, optionally write the
structured document (--json) and record the run (--record), then exit with
the verdict's status code.
"""
import json
import logging
import sys
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Any, Dict, Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from factorlab.exceptions import FactorLabError
from groups.catalog import load
from groups.loaders import CayleyTableLoader
from groups.tables import GroupTable

from .serializers import ReportSerializer

logger = logging.getLogger(__name__)

EXIT_AFFIRMATIVE = 0
EXIT_INPUT_ERROR = 1
EXIT_NEGATIVE = 2
EXIT_UNKNOWN = 3


@dataclass
class Outcome:
    verdict: str
    exit_code: int
    report: Any
    inputs: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[str] = None
    complement: Optional[str] = None
    stats: Dict[str, Any] = field(default_factory=dict)


def usage_error(parser, message: str) -> None:
    """Parser error handler: a bad command line exits with the input-error status."""
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(EXIT_INPUT_ERROR, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}")


def resolve_group(text: str) -> GroupTable:
    """A group from a spec expression or from a Cayley-table file path."""
    if Path(text).suffix and Path(text).exists():
        return CayleyTableLoader(text).load()
    return load(text)


class ReportCommand(BaseCommand):
    command_name = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(usage_error, parser)
        return parser

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        parser.add_argument(
            '--json',
            dest='json_path',
            metavar='PATH',
            help="Write the structured report to PATH ('-' for stdout)",
        )
        parser.add_argument(
            '--record',
            action='store_true',
            help='Store the report as a VerificationRun row',
        )

    def add_command_arguments(self, parser):
        pass

    def add_node_budget_argument(self, parser):
        parser.add_argument(
            '--node-budget',
            type=int,
            default=None,
            help='Give up with an unknown verdict after this many search nodes',
        )

    def node_budget(self, options) -> Optional[int]:
        budget = options.get('node_budget')
        return budget if budget is not None else settings.FACTORLAB["NODE_BUDGET"]

    def run(self, **options) -> Outcome:
        raise NotImplementedError

    def say(self, message, style=None):
        if self.quiet:
            return
        self.stdout.write(style(message) if style else message)

    def handle(self, *args, **options):
        self.quiet = options.get('json_path') == '-'
        try:
            outcome = self.run(**options)
        except FactorLabError as e:
            raise CommandError(str(e))

        document = self.build_document(outcome)
        if options.get('json_path'):
            self.write_document(document, options['json_path'])
        if options.get('record'):
            self.record(document)

        if outcome.exit_code != EXIT_AFFIRMATIVE:
            sys.exit(outcome.exit_code)

    def build_document(self, outcome: Outcome) -> Dict[str, Any]:
        envelope = ReportSerializer(data={
            'command': self.command_name,
            'inputs': outcome.inputs,
            'verdict': outcome.verdict,
            'witness': outcome.witness,
            'complement': outcome.complement,
            'stats': outcome.stats,
            'version': settings.FACTORLAB["VERSION"],
            'report': outcome.report,
        })
        envelope.is_valid(raise_exception=True)
        # Round-trip through JSON so nested ReturnDicts become plain values.
        return json.loads(json.dumps(envelope.validated_data))

    def write_document(self, document, path):
        text = json.dumps(document, sort_keys=True, indent=2) + "\n"
        if path == '-':
            self.stdout.write(text, ending='')
            return
        try:
            Path(path).write_text(text)
        except OSError as e:
            raise CommandError(f"Cannot write report to {path}: {e}")
        logger.info(f"Wrote {self.command_name} report to {path}")

    def record(self, document):
        from .models import VerificationRun

        run = VerificationRun.objects.create(
            command=document['command'],
            inputs=document['inputs'],
            verdict=document['verdict'],
            payload=document,
            version=document['version'],
        )
        self.say(f'Recorded verification run {run.id}')
