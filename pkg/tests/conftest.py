# tests/conftest.py
import os
import shutil
import sys
import tempfile

import pytest

# Ensure "src" is on the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from beauville_forge.core.groups import GroupHandle  # noqa: E402
from beauville_forge.core.perm import Permutation  # noqa: E402
from beauville_forge.core.workspace import create_workspace  # noqa: E402


def perm(text: str, degree: int) -> Permutation:
    from beauville_forge.core.perm import parse_cycles

    return parse_cycles(text, degree)


@pytest.fixture
def a5() -> GroupHandle:
    """A5 on 5 points, generated by (1,2,3) and (1,2,3,4,5)."""
    return GroupHandle([perm("(1,2,3)", 5), perm("(1,2,3,4,5)", 5)], name="A5")


@pytest.fixture
def s4() -> GroupHandle:
    return GroupHandle([perm("(1,2)", 4), perm("(1,2,3,4)", 4)], name="S4")


@pytest.fixture
def cyclic5() -> GroupHandle:
    return GroupHandle([Permutation.cycle([1, 2, 3, 4, 5], 5)], name="C5")


@pytest.fixture
def temp_workspace():
    """Create a temporary workspace for testing."""
    temp_dir = tempfile.mkdtemp(prefix="test_beauville_")
    ws = create_workspace(root_dir=temp_dir, use_uuid=False)
    yield ws
    # Cleanup
    shutil.rmtree(temp_dir, ignore_errors=True)
