"""Tests for profile_store - profile files on disk."""

import copy

import orjson
import pytest

from construction_calculus import INF, NatInterval, Verdict
from errors import ProfileError
from fmodule_calculus import HslValue, Tail
from profile_store import (
    SCHEMA_VERSION,
    dumps_profile,
    loads_profile,
    profile_from_document,
    profile_to_document,
    read_profile,
    write_profile,
)
from tests.conftest import PROFILES_DIR


@pytest.fixture
def plane_doc():
    return orjson.loads((PROFILES_DIR / "plane.json").read_bytes())


class TestRoundTrip:
    """Engine profiles survive a write and a read."""

    def test_engine_profile(self, tmp_path, quartic_p7):
        path = tmp_path / "quartic.json"

        write_profile(quartic_p7, path)
        restored = read_profile(path)

        assert restored.records == quartic_p7.records
        assert restored.fdepth == quartic_p7.fdepth
        assert restored.b_ring == quartic_p7.b_ring
        assert restored.f_nilpotent == quartic_p7.f_nilpotent
        assert restored.asserted == frozenset()

    def test_infinite_markers(self, poly2_p7):
        doc = orjson.loads(dumps_profile(poly2_p7))

        assert doc["schema_version"] == SCHEMA_VERSION
        assert doc["derived"]["b_ring"]["value"] == {"lo": "inf", "hi": "inf"}
        assert doc["cohomology"][0]["a_j"]["value"] == "-inf"
        assert doc["cohomology"][0]["degsupp"]["value"] == "empty"

    def test_stored_fields_are_not_asserted(self, poly2_p7):
        doc = profile_to_document(poly2_p7)

        assert doc["flags"]["cm"] == {"value": True, "asserted": False}
        assert doc["uniform_annihilator"] == {"value": 0, "asserted": False}

    def test_upper_hsl_values(self, poly2_p7):
        doc = profile_to_document(poly2_p7)
        doc["cohomology"][2]["hsl"] = {"value": {"upper": 3}, "asserted": False}

        restored = profile_from_document(doc)

        assert restored.record(2).hsl == HslValue.upper(3)


class TestHandWrittenProfiles:
    """Bare values in hand-written files count as asserted."""

    def test_sample_profiles_load(self):
        for name in ("plane", "monomial_curve", "fat_line"):
            profile = read_profile(PROFILES_DIR / f"{name}.json")

            assert profile.p == 7
            assert profile.provenance.startswith("asserted")

    def test_bare_values_are_asserted(self, plane_doc):
        profile = profile_from_document(plane_doc)

        assert "flags.cm" in profile.asserted
        assert "cohomology.2.hsl" in profile.asserted
        assert profile.wfn == Verdict.TRUE
        assert profile.record(2).nilsupport.members == frozenset()
        assert profile.record(2).nilsupport.tail == Tail.UNKNOWN

    def test_wrapped_unasserted_value(self, plane_doc):
        plane_doc["flags"]["cm"] = {"value": True, "asserted": False}

        profile = profile_from_document(plane_doc)

        assert "flags.cm" not in profile.asserted
        assert profile.flags.cm is True

    def test_conflicting_bound_is_noted(self, plane_doc):
        plane_doc["derived"] = {"fdepth": {"lo": 0, "hi": 0}}

        profile = profile_from_document(plane_doc)

        assert profile.fdepth == NatInterval.exactly(2)
        assert any("contradicts records" in n for n in profile.notes)

    def test_asserted_b_ring(self, plane_doc):
        plane_doc["derived"] = {"b_ring": {"lo": "inf", "hi": "inf"}}

        profile = profile_from_document(plane_doc)

        assert profile.b_ring.lo == INF
        assert profile.f_nilpotent == Verdict.TRUE


class TestSchemaErrors:
    """Malformed documents raise ProfileError."""

    def test_schema_version(self, plane_doc):
        plane_doc["schema_version"] = 2

        with pytest.raises(ProfileError) as exc_info:
            profile_from_document(plane_doc)

        assert "schema_version" in str(exc_info.value)

    def test_unknown_flag(self, plane_doc):
        plane_doc["flags"]["bogus"] = True

        with pytest.raises(ProfileError) as exc_info:
            profile_from_document(plane_doc)

        assert "bogus" in str(exc_info.value)

    @pytest.mark.parametrize(
        "field,value",
        [
            ("hsl", -1),
            ("hsl", {"upper": -2}),
            ("hsl", {"lower": 1}),
            ("dim_g0", "many"),
            ("a_j", 1.5),
            ("nilsupport", {"lo": 0, "hi": 0, "tail": "sparse"}),
        ],
    )
    def test_bad_record_fields(self, plane_doc, field, value):
        plane_doc["cohomology"][2][field] = value

        with pytest.raises(ProfileError):
            profile_from_document(plane_doc)

    def test_record_index_outside_dimension(self, plane_doc):
        extra = copy.deepcopy(plane_doc["cohomology"][0])
        extra["index"] = 3
        plane_doc["cohomology"].append(extra)

        with pytest.raises(ProfileError) as exc_info:
            profile_from_document(plane_doc)

        assert "outside" in str(exc_info.value)

    def test_bad_asserted_marker(self, plane_doc):
        plane_doc["flags"]["cm"] = {"value": True, "asserted": "yes"}

        with pytest.raises(ProfileError):
            profile_from_document(plane_doc)

    def test_bad_f_nilpotent(self, plane_doc):
        plane_doc["derived"] = {"f_nilpotent": "perhaps"}

        with pytest.raises(ProfileError):
            profile_from_document(plane_doc)

    def test_invalid_json(self):
        with pytest.raises(ProfileError) as exc_info:
            loads_profile(b"{not json")

        assert "invalid JSON" in str(exc_info.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ProfileError) as exc_info:
            read_profile(tmp_path / "absent.json")

        assert "Failed to read" in str(exc_info.value)

    def test_read_error_names_the_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_bytes(b'{"schema_version": 1}')

        with pytest.raises(ProfileError) as exc_info:
            read_profile(path)

        assert "broken.json" in str(exc_info.value)
