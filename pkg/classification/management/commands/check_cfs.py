"""
Management command to decide the strong CFS property of one group.

Usage:
    python manage.py check_cfs C3^2
    python manage.py check_cfs D4 --census --json d4.json
"""
from django.conf import settings

from classification.cfs import check_strong_cfs
from classification.frames import census_frame
from reports.commands import (
    EXIT_AFFIRMATIVE,
    EXIT_NEGATIVE,
    EXIT_UNKNOWN,
    Outcome,
    ReportCommand,
    resolve_group,
)
from reports.serializers import CfsReportSerializer

VERDICT_EXIT_CODES = {
    'holds': EXIT_AFFIRMATIVE,
    'fails': EXIT_NEGATIVE,
    'unknown': EXIT_UNKNOWN,
}


def add_search_arguments(command, parser):
    parser.add_argument(
        '--census',
        action='store_true',
        help='Scan every Lagrange subset and count non-factors instead of stopping at the first',
    )
    parser.add_argument(
        '--prune',
        action='store_true',
        default=None,
        help='Test one subset per translation/automorphism orbit',
    )
    command.add_node_budget_argument(parser)


def search_options(command, options):
    prune = options.get('prune')
    return {
        'census': options['census'],
        'prune': settings.FACTORLAB["AUTOMORPHISM_PRUNING"] if prune is None else prune,
        'node_budget': command.node_budget(options),
        'examples_limit': settings.FACTORLAB["CENSUS_EXAMPLES"],
    }


class Command(ReportCommand):
    help = 'Check whether every Lagrange subset of a group is a factor'
    command_name = 'check_cfs'

    def add_command_arguments(self, parser):
        parser.add_argument('group', help='Group spec or Cayley-table file')
        add_search_arguments(self, parser)

    def run(self, **options):
        g = resolve_group(options['group'])
        search = search_options(self, options)
        census = search.pop('census')
        report = check_strong_cfs(g, census, **search)

        witness = g.format_subset(report.witness) if report.witness is not None else None
        if report.holds:
            qualifier = ' (trivial group)' if report.trivial else ''
            self.say(f'{g.label} has the strong CFS property{qualifier}', self.style.SUCCESS)
        elif report.witness is not None:
            self.say(f'{g.label} does not have the strong CFS property', self.style.WARNING)
            self.say(f'  first non-factor Lagrange subset: {witness}')
        else:
            self.say(f'Undecided: node budget reached while checking {g.label}', self.style.ERROR)
        if census:
            self.say(census_frame(g, report).to_string())
        self.say(f'  nodes explored: {report.nodes_explored}')

        return Outcome(
            verdict=report.verdict,
            exit_code=VERDICT_EXIT_CODES[report.verdict],
            report=CfsReportSerializer(report).data,
            inputs={'group': g.label, 'census': census, 'prune': search['prune']},
            witness=witness,
            stats={
                'nodes_explored': report.nodes_explored,
                'tested': sum(stats.tested for stats in report.sizes),
                'nonfactors': sum(stats.nonfactors for stats in report.sizes),
            },
        )
