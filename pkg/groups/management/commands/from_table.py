"""
Management command to load and validate a Cayley table file.

Usage:
    python manage.py from_table klein.txt
    python manage.py from_table s3.csv --normalized s3.txt
"""
from pathlib import Path

from django.core.management.base import CommandError

from groups.loaders import CayleyTableLoader
from groups.management.commands.group_info import Command as GroupInfoCommand
from reports.commands import EXIT_AFFIRMATIVE, Outcome
from reports.serializers import GroupSummarySerializer


class Command(GroupInfoCommand):
    help = 'Validate a Cayley table file (.txt, .table, .csv, .json) and describe the group'
    command_name = 'from_table'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='Path to the Cayley table file')
        parser.add_argument('--table', action='store_true', help='Also print the multiplication table')
        parser.add_argument(
            '--normalized',
            metavar='PATH',
            help='Write the table, relabelled so the identity is element 0, in the text format',
        )

    def run(self, **options):
        g = CayleyTableLoader(options['file']).load()
        self.say(f'Loaded a valid group table from {options["file"]}')
        summary = self.describe(g, options['table'])

        if options.get('normalized'):
            try:
                Path(options['normalized']).write_text(g.serialize())
            except OSError as e:
                raise CommandError(f"Cannot write {options['normalized']}: {e}")
            self.say(f'Wrote normalized table to {options["normalized"]}')

        return Outcome(
            verdict='ok',
            exit_code=EXIT_AFFIRMATIVE,
            report=GroupSummarySerializer(summary).data,
            inputs={'file': str(options['file'])},
            stats={'order': g.order, 'subgroups': len(summary.subgroup_orders)},
        )
