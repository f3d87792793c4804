"""Shared pytest fixtures for frobnil tests."""

import copy
from pathlib import Path
from typing import Any, Dict, Tuple

import pytest

from config_loader import DEFAULT_CONFIG
from construction_calculus import RingProfile, polynomial_ring_profile
from hypersurface_cech import HypersurfaceRing, classify_ring
from profile_store import write_profile

# Small windows keep negative-degree propagation cheap; nothing asserted in
# the tests depends on degrees below them.
TEST_WINDOW_LO = -2
TEST_MAX_E = 2

PROFILES_DIR = Path(__file__).resolve().parent.parent / "profiles"


def classify_fermat(p: int, n: int, d: int) -> RingProfile:
    profile, _ = classify_ring(
        HypersurfaceRing.fermat(p, n, d), max_e=TEST_MAX_E, window_lo=TEST_WINDOW_LO
    )
    return profile


@pytest.fixture
def test_config() -> Dict[str, Any]:
    """Defaults with inline workers and a small step budget."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["engine"]["max_e"] = TEST_MAX_E
    config["sweep"]["workers"] = 1
    config["sweep"]["use_processes"] = False
    return config


@pytest.fixture(scope="session")
def quartic_p7() -> RingProfile:
    return classify_fermat(7, 2, 4)


@pytest.fixture(scope="session")
def quartic_p13() -> RingProfile:
    return classify_fermat(13, 2, 4)


@pytest.fixture(scope="session")
def quartic_p5() -> RingProfile:
    return classify_fermat(5, 2, 4)


@pytest.fixture(scope="session")
def cubic_p7() -> RingProfile:
    return classify_fermat(7, 2, 3)


@pytest.fixture(scope="session")
def poly2_p7() -> RingProfile:
    return polynomial_ring_profile(7, 2)


@pytest.fixture(scope="session")
def poly2_p13() -> RingProfile:
    return polynomial_ring_profile(13, 2)


@pytest.fixture
def profile_files(
    tmp_path: Path, quartic_p7: RingProfile, cubic_p7: RingProfile, poly2_p7: RingProfile
) -> Dict[str, str]:
    """Engine-built profiles written to disk, keyed by short name."""
    paths = {}
    for name, profile in (
        ("quartic_p7", quartic_p7),
        ("cubic_p7", cubic_p7),
        ("poly2_p7", poly2_p7),
    ):
        path = tmp_path / f"{name}.json"
        write_profile(profile, path)
        paths[name] = str(path)
    return paths


@pytest.fixture
def gluing_pieces() -> Tuple[str, str, str]:
    """Asserted profiles of the monomial-curve gluing example."""
    return (
        str(PROFILES_DIR / "monomial_curve.json"),
        str(PROFILES_DIR / "plane.json"),
        str(PROFILES_DIR / "fat_line.json"),
    )
