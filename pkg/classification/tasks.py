"""
Celery tasks for strong CFS classification.
"""
import logging
from typing import List, Sequence

from celery import group, shared_task
from django.conf import settings

from groups.catalog import CatalogEntry, load
from reports.serializers import CfsReportSerializer

from .cfs import CfsReport, check_strong_cfs, verify_theorem

logger = logging.getLogger(__name__)


@shared_task
def check_group_strong_cfs(expression, census=False, prune=False, node_budget=None, examples_limit=5):
    """
    Classify one catalog group and return the serialized CfsReport.
    """
    g = load(expression)
    report = check_strong_cfs(
        g, census, prune=prune, node_budget=node_budget, examples_limit=examples_limit,
    )
    logger.info(f"Task classified {expression}: {report.verdict}")
    return CfsReportSerializer(report).data


def check_entries_distributed(entries: Sequence[CatalogEntry], **options) -> List[CfsReport]:
    """Fan the entries out as a Celery group; results come back in catalog order."""
    job = group([check_group_strong_cfs.s(entry.expression, **options) for entry in entries])
    payloads = job.apply_async().get()
    reports = []
    for payload in payloads:
        serializer = CfsReportSerializer(data=payload)
        serializer.is_valid(raise_exception=True)
        reports.append(serializer.save())
    return reports


@shared_task
def verify_theorem_regression(max_order=12):
    """
    Re-run the classification over the catalog and fail on any mismatch.
    This task should be run periodically (e.g., nightly).
    """
    options = settings.FACTORLAB
    try:
        report = verify_theorem(
            max_order,
            bound=options["CATALOG_BOUND"],
            node_budget=options["NODE_BUDGET"],
            prune=options["AUTOMORPHISM_PRUNING"],
        )
    except Exception as e:
        logger.error(f"Error in verify_theorem_regression task: {e}")
        raise

    if report.mismatches:
        logger.error(f"Theorem regression mismatches: {', '.join(report.mismatches)}")
        raise RuntimeError(f"Theorem regression failed for {', '.join(report.mismatches)}")

    logger.info(f"Theorem regression passed for {len(report.reports)} groups up to order {max_order}")
    return f"Verified {len(report.reports)} groups"
