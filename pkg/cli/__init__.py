"""Command-line surface of tightmaps: the click group, its commands and the verification suites."""
