"""
Management command to list every complement of a Lagrange subset, one per
translation class.

Usage:
    python manage.py find_complements C4 "{e,a}"
"""
from factoring.engine import ComplementSet, Side, find_all_complements
from reports.commands import EXIT_AFFIRMATIVE, EXIT_NEGATIVE, Outcome, ReportCommand, resolve_group
from reports.serializers import ComplementSetSerializer
from subsets.notation import parse_subset


class Command(ReportCommand):
    help = 'List all complements of a subset up to translation'
    command_name = 'find_complements'

    def add_command_arguments(self, parser):
        parser.add_argument('group', help='Group spec or Cayley-table file')
        parser.add_argument('subset', help='Subset such as "{e,a}"')
        parser.add_argument(
            '--side',
            choices=[side.value for side in Side],
            default=Side.LEFT.value,
            help='Factor side',
        )

    def run(self, **options):
        g = resolve_group(options['group'])
        a = parse_subset(g, options['subset'])
        side = Side(options['side'])
        complements = find_all_complements(g, a, side)
        found = ComplementSet(a, side, tuple(complements))

        subset_text = g.format_subset(a)
        if complements:
            self.say(
                f'{len(complements)} {side.value} complement class(es) for {subset_text} in {g.label}:',
                self.style.SUCCESS,
            )
            for complement in complements:
                self.say(f'  {g.format_subset(complement)}')
        else:
            self.say(f'{subset_text} has no {side.value} complement in {g.label}', self.style.WARNING)

        return Outcome(
            verdict='factor' if complements else 'not-factor',
            exit_code=EXIT_AFFIRMATIVE if complements else EXIT_NEGATIVE,
            report=ComplementSetSerializer(found).data,
            inputs={'group': g.label, 'subset': subset_text, 'side': side.value},
            complement=g.format_subset(complements[0]) if complements else None,
            stats={'classes': len(complements)},
        )
