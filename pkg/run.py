import sys

from umbralab.cli import main

"""The main entry point."""

if __name__ == '__main__':
    sys.exit(main())
