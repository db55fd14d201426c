"""Entry point for running tss-geo as a module."""

from tss_geo.cli.main import main

if __name__ == "__main__":
    main()
