"""
Management command to describe a group: element names, orders, inverses
and subgroup orders.

Usage:
    python manage.py group_info D4
    python manage.py group_info C2^3 --table
"""
from groups.summary import cayley_frame, describe_group, element_frame
from reports.commands import EXIT_AFFIRMATIVE, Outcome, ReportCommand, resolve_group
from reports.serializers import GroupSummarySerializer


class Command(ReportCommand):
    help = 'Show the elements, element orders and subgroups of a group'
    command_name = 'group_info'

    def add_command_arguments(self, parser):
        parser.add_argument('group', help='Group spec or Cayley-table file')
        parser.add_argument('--table', action='store_true', help='Also print the multiplication table')

    def describe(self, g, show_table=False):
        summary = describe_group(g)
        self.say(
            f'{g.label}: order {g.order}, {"abelian" if summary.abelian else "non-abelian"}',
            self.style.SUCCESS,
        )
        self.say(element_frame(summary).to_string())
        counts = ', '.join(f'{order}: {count}' for order, count in summary.order_counts.items())
        self.say(f'Element orders: {counts}')
        self.say(f'Subgroups: {len(summary.subgroup_orders)} (orders {sorted(set(summary.subgroup_orders))})')
        if show_table:
            self.say(cayley_frame(g).to_string())
        return summary

    def run(self, **options):
        g = resolve_group(options['group'])
        summary = self.describe(g, options['table'])
        return Outcome(
            verdict='ok',
            exit_code=EXIT_AFFIRMATIVE,
            report=GroupSummarySerializer(summary).data,
            inputs={'group': g.label},
            stats={'order': g.order, 'subgroups': len(summary.subgroup_orders)},
        )
