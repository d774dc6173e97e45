"""Shared fixtures: every construction in the suite is validated eagerly."""

import pytest

from lens_topology.config import override_settings


@pytest.fixture(autouse=True)
def eager_validation():
    with override_settings(eager_validation=True) as settings:
        yield settings
