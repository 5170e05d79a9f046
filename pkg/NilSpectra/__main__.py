import sys

if __name__ == "__main__":
    from NilSpectra.cli import main

    sys.exit(main())
