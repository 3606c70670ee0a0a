"""Allow ``python -m ktrees`` to run the CLI."""

import sys

from .cli import main

sys.exit(main())
