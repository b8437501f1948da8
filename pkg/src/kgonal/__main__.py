"""Module entry point for `python -m kgonal`."""

from kgonal.cli import main

raise SystemExit(main())
