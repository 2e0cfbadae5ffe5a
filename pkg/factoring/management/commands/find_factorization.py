"""
Management command to search for an ordered factorization G = A1 A2 ... Ak.

Usage:
    python manage.py find_factorization A4 2,3,2
    python manage.py find_factorization C8 2,2,2 --json report.json
"""
from django.core.management.base import CommandError

from factoring.engine import find_factorization
from reports.commands import (
    EXIT_AFFIRMATIVE,
    EXIT_NEGATIVE,
    EXIT_UNKNOWN,
    Outcome,
    ReportCommand,
    resolve_group,
)
from reports.serializers import FactorizationResultSerializer


def parse_sizes(text):
    try:
        return [int(token) for token in text.replace(' ', '').split(',') if token]
    except ValueError:
        raise CommandError(f"Sizes must be a comma-separated list of integers, got {text!r}")


class Command(ReportCommand):
    help = 'Search for a factorization of a group into subsets of the given sizes'
    command_name = 'find_factorization'

    def add_command_arguments(self, parser):
        parser.add_argument('group', help='Group spec or Cayley-table file')
        parser.add_argument('sizes', help='Comma-separated part sizes, e.g. 2,3,2')
        self.add_node_budget_argument(parser)

    def run(self, **options):
        g = resolve_group(options['group'])
        sizes = parse_sizes(options['sizes'])
        result = find_factorization(g, sizes, self.node_budget(options))

        label = ','.join(str(size) for size in sizes)
        if result.factorization is not None:
            self.say(f'{g.label} = A1...A{len(sizes)} with sizes {label}:', self.style.SUCCESS)
            for i, part in enumerate(result.factorization.parts, start=1):
                self.say(f'  A{i} = {g.format_subset(part)}')
            exit_code = EXIT_AFFIRMATIVE
        elif result.exhausted:
            self.say(f'{g.label} has no factorization with sizes {label} (search exhausted)', self.style.WARNING)
            exit_code = EXIT_NEGATIVE
        else:
            self.say(f'Undecided: node budget reached searching sizes {label} in {g.label}', self.style.ERROR)
            exit_code = EXIT_UNKNOWN
        self.say(f'  nodes explored: {result.nodes_explored}')

        return Outcome(
            verdict=result.verdict,
            exit_code=exit_code,
            report=FactorizationResultSerializer(result).data,
            inputs={'group': g.label, 'sizes': sizes},
            stats={'nodes_explored': result.nodes_explored},
        )
