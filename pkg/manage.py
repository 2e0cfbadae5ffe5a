#!/usr/bin/env python
"""Entry point for the factorlab commands (is_factor, check_cfs, verify_theorem, ...)."""
import os
import sys


def main() -> None:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "factorlab.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError("Django is required to run factorlab; install requirements.txt first.") from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
