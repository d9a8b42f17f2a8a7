"""Allow `python -m awlab` to behave like the installed `awlab` command."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
