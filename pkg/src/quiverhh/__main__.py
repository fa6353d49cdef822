"""Module entry point: ``python -m quiverhh`` runs the CLI."""

import sys

from .cli import main

sys.exit(main())
