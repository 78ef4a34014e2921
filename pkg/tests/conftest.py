import pytest

from quandle_cayley import groups as G
from quandle_cayley import specs

REGISTRY = ("S3", "S4", "D2", "D3", "D4", "D5", "D6", "D7", "D8")


@pytest.fixture(scope="session")
def abelian_sweep():
    """Every abelian isomorphism type of order <= 16 with its full
    automorphism group.  Computed once; the Z2^4 case dominates."""
    return [(g, G.enumerate_automorphisms(g)) for g in G.abelian_group_types(16)]


@pytest.fixture(scope="session")
def registry_groups():
    return [specs.group_from_string(label) for label in REGISTRY]
