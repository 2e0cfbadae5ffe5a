"""
Management command to decide whether a subset is a factor of a group.

Usage:
    python manage.py is_factor C9 "{a,a^2,a^4}"
    python manage.py is_factor D4 "{e,b}" --side right --json -
"""
from factoring.engine import Side, decide_factor
from reports.commands import (
    EXIT_AFFIRMATIVE,
    EXIT_NEGATIVE,
    EXIT_UNKNOWN,
    Outcome,
    ReportCommand,
    resolve_group,
)
from reports.serializers import FactorResultSerializer
from subsets.notation import parse_subset


class Command(ReportCommand):
    help = 'Decide whether a subset is a left (or right) factor of a group'
    command_name = 'is_factor'

    def add_command_arguments(self, parser):
        parser.add_argument('group', help='Group spec such as C9, D4, C2^3, or a Cayley-table file')
        parser.add_argument('subset', help='Subset such as "{a,a^2,a^4}" or "{0,1,2}"')
        parser.add_argument(
            '--side',
            choices=[side.value for side in Side],
            default=Side.LEFT.value,
            help='Factor side to decide',
        )
        self.add_node_budget_argument(parser)

    def run(self, **options):
        g = resolve_group(options['group'])
        a = parse_subset(g, options['subset'])
        side = Side(options['side'])
        result = decide_factor(g, a, side, self.node_budget(options))

        subset_text = g.format_subset(a)
        if result.is_factor:
            self.say(f'{subset_text} is a {side.value} factor of {g.label}', self.style.SUCCESS)
            self.say(f'  complement: {g.format_subset(result.complement)}')
            exit_code = EXIT_AFFIRMATIVE
        elif result.exhausted:
            self.say(f'{subset_text} is not a {side.value} factor of {g.label} ({result.reason.value})', self.style.WARNING)
            exit_code = EXIT_NEGATIVE
        else:
            self.say(f'Undecided: node budget reached for {subset_text} in {g.label}', self.style.ERROR)
            exit_code = EXIT_UNKNOWN
        self.say(f'  nodes explored: {result.nodes_explored}')

        return Outcome(
            verdict=result.verdict,
            exit_code=exit_code,
            report=FactorResultSerializer(result).data,
            inputs={'group': g.label, 'subset': subset_text, 'side': side.value},
            complement=g.format_subset(result.complement) if result.complement else None,
            stats={'nodes_explored': result.nodes_explored, 'reason': result.reason.value},
        )
