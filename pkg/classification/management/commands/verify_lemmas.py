"""
Management command to run the exhaustive lemma suites.

Usage:
    python manage.py verify_lemmas
    python manage.py verify_lemmas --lemma small-subset --lemma theorem-case
"""
from django.conf import settings

from classification.frames import lemma_frame
from classification.lemmas import LEMMA_SUITES, verify_lemmas
from reports.commands import EXIT_AFFIRMATIVE, EXIT_NEGATIVE, Outcome, ReportCommand
from reports.serializers import LemmaSummarySerializer


class Command(ReportCommand):
    help = 'Check the constructive complements and non-factor witnesses against the factor engine'
    command_name = 'verify_lemmas'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--lemma',
            action='append',
            choices=LEMMA_SUITES,
            help='Run only this suite (repeatable)',
        )
        parser.add_argument(
            '--max-order',
            type=int,
            default=None,
            help='Largest catalog order for the catalog-wide suites (defaults to the catalog bound)',
        )

    def run(self, **options):
        config = settings.FACTORLAB
        max_order = options.get('max_order') or config["CATALOG_BOUND"]
        summaries = verify_lemmas(
            max_order,
            sample_size=config["LEMMA_SAMPLE_SIZE"],
            seed=config["LEMMA_SAMPLE_SEED"],
            only=options.get('lemma'),
        )

        self.say(lemma_frame(summaries).to_string(index=False))
        failed = [summary for summary in summaries if not summary.ok]
        for summary in failed:
            self.say(f'{summary.lemma} on {summary.scope} failed for:', self.style.ERROR)
            for failure in summary.failures:
                self.say(f'  {failure}')
        if not failed:
            self.say(f'All {len(summaries)} lemma checks passed', self.style.SUCCESS)

        return Outcome(
            verdict='verified' if not failed else 'failed',
            exit_code=EXIT_AFFIRMATIVE if not failed else EXIT_NEGATIVE,
            report=LemmaSummarySerializer(summaries, many=True).data,
            inputs={'lemmas': sorted(options.get('lemma') or LEMMA_SUITES), 'max_order': max_order},
            stats={
                'suites': len(summaries),
                'checked': sum(summary.checked for summary in summaries),
                'passed': sum(summary.passed for summary in summaries),
            },
        )
