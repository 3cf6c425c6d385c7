"""Allow ``python -m knowtex``."""

from knowtex.cli import main

if __name__ == "__main__":
    main()
