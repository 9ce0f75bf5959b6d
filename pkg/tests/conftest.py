import pytest

from truthcensus import SequenceTable


@pytest.fixture(scope="session")
def table_500() -> SequenceTable:
    """Shared read-only sequence table for the medium-range checks."""
    return SequenceTable(500)
