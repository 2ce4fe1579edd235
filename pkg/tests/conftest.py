"""Shared pytest configuration for the tightmaps test suite."""

import logging

import pytest


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: exhaustive oracle runs, deselect with -m 'not slow'")
    logging.getLogger("maps").setLevel(logging.WARNING)
