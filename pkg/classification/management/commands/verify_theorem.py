"""
Management command to verify the strong CFS classification over the
catalog.

Usage:
    python manage.py verify_theorem --max-order 12
    python manage.py verify_theorem --max-order 12 --census --json theorem.json
    python manage.py verify_theorem --distributed
"""
from django.conf import settings

from classification.cfs import check_entries_sequentially, verify_theorem
from classification.frames import theorem_frame
from classification.management.commands.check_cfs import add_search_arguments, search_options
from reports.commands import EXIT_AFFIRMATIVE, EXIT_NEGATIVE, EXIT_UNKNOWN, Outcome, ReportCommand
from reports.serializers import TheoremReportSerializer


class Command(ReportCommand):
    help = 'Classify every catalog group up to an order and compare with the theorem'
    command_name = 'verify_theorem'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--max-order',
            type=int,
            default=12,
            help='Largest group order to classify (at most the catalog bound)',
        )
        parser.add_argument(
            '--distributed',
            action='store_true',
            help='Classify the groups as Celery tasks',
        )
        add_search_arguments(self, parser)

    def run(self, **options):
        search = search_options(self, options)
        runner = check_entries_sequentially
        if options['distributed']:
            from classification.tasks import check_entries_distributed

            runner = check_entries_distributed

        report = verify_theorem(
            options['max_order'],
            bound=settings.FACTORLAB["CATALOG_BOUND"],
            runner=runner,
            **search,
        )

        self.say(theorem_frame(report).to_string())
        if report.excluded_trivial:
            self.say(f'Excluded as trivial: {", ".join(report.excluded_trivial)}')
        self.say(f'Strong CFS groups found: {", ".join(report.observed_positive) or "none"}')
        if report.passed:
            self.say(
                f'Classification verified for {len(report.reports)} catalog groups of order <= {report.max_order}',
                self.style.SUCCESS,
            )
        else:
            self.say(f'Mismatches: {", ".join(report.mismatches)}', self.style.ERROR)

        exit_code = EXIT_AFFIRMATIVE
        if not report.passed:
            undecided = any(cfs.verdict == 'unknown' for cfs in report.reports)
            exit_code = EXIT_UNKNOWN if undecided else EXIT_NEGATIVE

        return Outcome(
            verdict='verified' if report.passed else 'mismatch',
            exit_code=exit_code,
            report=TheoremReportSerializer(report).data,
            inputs={'max_order': report.max_order, 'census': search['census'], 'prune': search['prune']},
            stats={
                'groups': len(report.reports),
                'mismatches': len(report.mismatches),
                'nodes_explored': sum(cfs.nodes_explored for cfs in report.reports),
            },
        )
