import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from latfree.verify import certify


@pytest.fixture(scope="session")
def certified_d1():
    """Full brute-force certificate for the 6-dimensional pipeline instance."""
    return certify((1,))


@pytest.fixture(scope="session")
def certified_333():
    """Brute-force certificate for the 4-dimensional three-halves instance."""
    return certify((3, 3, 3), lift_kind="three_halves")
