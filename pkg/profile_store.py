"""Profile files: RingProfile <-> versioned JSON documents.

Every flag and every per-index field is written as
{"value": ..., "asserted": bool}. Infinite values use the markers "inf"
and "-inf"; missing knowledge uses "unknown". Hand-written profiles may
give bare values, which count as asserted.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Set, Tuple, Union

import orjson

from construction_calculus.profile import (
    FLAG_NAMES,
    INF,
    CohomologyRecord,
    NatInterval,
    ProfileFlags,
    RingProfile,
    Verdict,
)
from errors import ProfileError
from fmodule_calculus import DegreeSupport, HslValue, NilSupport, Tail
from logging_config import get_logger
from utils.validators import (
    ConfigError,
    require_bool,
    require_dict,
    require_int,
    require_list,
    require_string,
)

logger = get_logger(__name__)

SCHEMA_VERSION = 1
UNKNOWN = "unknown"

RECORD_FIELDS = ("is_zero", "a_j", "nilsupport", "degsupp", "hsl", "hsl_deg0", "dim_g0")
DERIVED_BOUNDS = ("fdepth", "gfdepth", "b_ring")


# -- encoding ---------------------------------------------------------------


def _wrap(value: Any, asserted: bool) -> Dict[str, Any]:
    return {"value": value, "asserted": asserted}


def _encode_number(x: Union[int, float]) -> Union[int, str]:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return int(x)


def _encode_interval(interval: NatInterval) -> Dict[str, Any]:
    return {"lo": _encode_number(interval.lo), "hi": _encode_number(interval.hi)}


def _encode_optional_bool(value: Optional[bool]) -> Union[bool, str]:
    return UNKNOWN if value is None else value


def _encode_hsl(value: HslValue) -> Any:
    if not value.is_known:
        return UNKNOWN
    if value.is_exact:
        return value.value
    return {"upper": value.value}


def _encode_nilsupport(d: NilSupport) -> Dict[str, Any]:
    return {
        "lo": d.lo,
        "hi": d.hi,
        "members": sorted(d.members),
        "undecided": sorted(d.undecided),
        "tail": d.tail.value,
        "infinite": d.infinite,
    }


def _encode_degsupp(s: DegreeSupport) -> Any:
    if s.empty:
        return "empty"
    return {
        "lo": "-inf" if s.lo is None else s.lo,
        "hi": "inf" if s.hi is None else s.hi,
    }


def _encode_record(record: CohomologyRecord, asserted: Set[str]) -> Dict[str, Any]:
    if not record.a_known:
        a_j: Any = UNKNOWN
    else:
        a_j = "-inf" if record.a_j is None else record.a_j
    values = {
        "is_zero": _encode_optional_bool(record.is_zero),
        "a_j": a_j,
        "nilsupport": _encode_nilsupport(record.nilsupport),
        "degsupp": _encode_degsupp(record.degsupp),
        "hsl": _encode_hsl(record.hsl),
        "hsl_deg0": _encode_hsl(record.hsl_deg0),
        "dim_g0": UNKNOWN if record.dim_g0 is None else record.dim_g0,
    }
    out: Dict[str, Any] = {"index": record.index}
    for name in RECORD_FIELDS:
        out[name] = _wrap(values[name], f"cohomology.{record.index}.{name}" in asserted)
    return out


def profile_to_document(profile: RingProfile) -> Dict[str, Any]:
    """Plain-dict form of a profile with a stable key order."""
    asserted = set(profile.asserted)
    flags = {
        name: _wrap(_encode_optional_bool(getattr(profile.flags, name)), f"flags.{name}" in asserted)
        for name in FLAG_NAMES
    }
    derived = {
        name: _wrap(_encode_interval(getattr(profile, name)), f"derived.{name}" in asserted)
        for name in DERIVED_BOUNDS
    }
    for name in ("wfn", "gwfn", "f_nilpotent"):
        derived[name] = _wrap(getattr(profile, name).value, f"derived.{name}" in asserted)
    annihilator = profile.uniform_annihilator
    return {
        "schema_version": SCHEMA_VERSION,
        "name": profile.name,
        "p": profile.p,
        "dim": profile.dim,
        "flags": flags,
        "cohomology": [_encode_record(r, asserted) for r in profile.records],
        "derived": derived,
        "uniform_annihilator": _wrap(
            UNKNOWN if annihilator is None else annihilator,
            "uniform_annihilator" in asserted,
        ),
        "provenance": profile.provenance,
        "notes": list(profile.notes),
    }


def dumps_profile(profile: RingProfile) -> bytes:
    return orjson.dumps(profile_to_document(profile), option=orjson.OPT_INDENT_2)


def write_profile(profile: RingProfile, path: Union[str, Path]) -> None:
    """Write a profile file.

    Raises:
        ProfileError: If the file cannot be written
    """
    target = Path(path)
    try:
        target.write_bytes(dumps_profile(profile) + b"\n")
    except OSError as e:
        raise ProfileError(f"Failed to write {target}: {e}")
    logger.info(f"[PROFILE_WRITE] {profile.name} -> {target}")


# -- decoding ---------------------------------------------------------------


def _check(fn, *args) -> None:
    try:
        fn(*args)
    except ConfigError as e:
        raise ProfileError(str(e))


def _unwrap(raw: Any, where: str) -> Tuple[Any, bool]:
    """(value, asserted) from a wrapped or bare field."""
    if isinstance(raw, dict) and set(raw) == {"value", "asserted"}:
        _check(require_bool, raw["asserted"], f"{where}.asserted")
        return raw["value"], raw["asserted"]
    return raw, True


def _decode_number(raw: Any, where: str) -> Union[int, float]:
    if raw == "inf":
        return INF
    if raw == "-inf":
        return -INF
    _check(require_int, raw, where)
    return raw


def _decode_interval(raw: Any, where: str) -> NatInterval:
    _check(require_dict, raw, where)
    try:
        return NatInterval(
            lo=_decode_number(raw.get("lo", 0), f"{where}.lo"),
            hi=_decode_number(raw.get("hi", "inf"), f"{where}.hi"),
        )
    except ValueError as e:
        raise ProfileError(f"'{where}': {e}")


def _decode_optional_bool(raw: Any, where: str) -> Optional[bool]:
    if raw == UNKNOWN or raw is None:
        return None
    _check(require_bool, raw, where)
    return raw


def _decode_hsl(raw: Any, where: str) -> HslValue:
    if raw == UNKNOWN or raw is None:
        return HslValue.unknown()
    if isinstance(raw, dict):
        if set(raw) != {"upper"}:
            raise ProfileError(f"'{where}' must be an int, {{\"upper\": int}} or \"unknown\"")
        _check(require_int, raw["upper"], f"{where}.upper", 0)
        return HslValue.upper(raw["upper"])
    _check(require_int, raw, where, 0)
    return HslValue.exact(raw)


def _decode_nilsupport(raw: Any, where: str, p: int) -> NilSupport:
    if raw == UNKNOWN or raw is None:
        return NilSupport(lo=1, hi=0, p=p)
    _check(require_dict, raw, where)
    for key in ("lo", "hi"):
        _check(require_int, raw.get(key), f"{where}.{key}")
    for key in ("members", "undecided"):
        _check(require_list, raw.get(key, []), f"{where}.{key}")
    tail = raw.get("tail", UNKNOWN)
    if tail not in {t.value for t in Tail}:
        raise ProfileError(f"'{where}.tail' must be one of empty, dense, unknown")
    try:
        return NilSupport(
            lo=raw["lo"],
            hi=raw["hi"],
            members=frozenset(raw.get("members", [])),
            undecided=frozenset(raw.get("undecided", [])),
            tail=Tail(tail),
            infinite=bool(raw.get("infinite", False)),
            p=p,
        )
    except ValueError as e:
        raise ProfileError(f"'{where}': {e}")


def _decode_degsupp(raw: Any, where: str) -> DegreeSupport:
    if raw == "empty":
        return DegreeSupport.nothing()
    if raw == UNKNOWN or raw is None:
        return DegreeSupport()
    _check(require_dict, raw, where)
    lo, hi = raw.get("lo", "-inf"), raw.get("hi", "inf")
    return DegreeSupport(
        lo=None if lo == "-inf" else _decode_number(lo, f"{where}.lo"),
        hi=None if hi == "inf" else _decode_number(hi, f"{where}.hi"),
    )


def _decode_record(raw: Any, where: str, p: int, asserted: Set[str]) -> CohomologyRecord:
    _check(require_dict, raw, where)
    _check(require_int, raw.get("index"), f"{where}.index", 0)
    index = raw["index"]
    values: Dict[str, Any] = {}
    for name in RECORD_FIELDS:
        if name not in raw:
            values[name] = UNKNOWN
            continue
        values[name], flag = _unwrap(raw[name], f"{where}.{name}")
        if flag:
            asserted.add(f"cohomology.{index}.{name}")

    a_raw = values["a_j"]
    if a_raw == UNKNOWN:
        a_j, a_known = None, False
    elif a_raw == "-inf":
        a_j, a_known = None, True
    else:
        _check(require_int, a_raw, f"{where}.a_j")
        a_j, a_known = a_raw, True

    dim_raw = values["dim_g0"]
    if dim_raw != UNKNOWN:
        _check(require_int, dim_raw, f"{where}.dim_g0", 0)

    return CohomologyRecord(
        index=index,
        is_zero=_decode_optional_bool(values["is_zero"], f"{where}.is_zero"),
        a_j=a_j,
        a_known=a_known,
        nilsupport=_decode_nilsupport(values["nilsupport"], f"{where}.nilsupport", p),
        degsupp=_decode_degsupp(values["degsupp"], f"{where}.degsupp"),
        hsl=_decode_hsl(values["hsl"], f"{where}.hsl"),
        hsl_deg0=_decode_hsl(values["hsl_deg0"], f"{where}.hsl_deg0"),
        dim_g0=None if dim_raw == UNKNOWN else dim_raw,
    )


def profile_from_document(doc: Any) -> RingProfile:
    """Rebuild a profile; stored derived intervals are applied as bounds.

    Raises:
        ProfileError: On any schema mismatch
    """
    _check(require_dict, doc, "profile")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ProfileError(f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION}")
    _check(require_string, doc.get("name"), "name")
    _check(require_int, doc.get("p"), "p", 2)
    _check(require_int, doc.get("dim"), "dim", 0)
    p, dim = doc["p"], doc["dim"]
    asserted: Set[str] = set()

    flags_raw = doc.get("flags", {})
    _check(require_dict, flags_raw, "flags")
    unknown_flags = set(flags_raw) - set(FLAG_NAMES)
    if unknown_flags:
        raise ProfileError(f"unknown flag(s): {', '.join(sorted(unknown_flags))}")
    flag_values = {}
    for name, raw in flags_raw.items():
        value, flag = _unwrap(raw, f"flags.{name}")
        flag_values[name] = _decode_optional_bool(value, f"flags.{name}")
        if flag:
            asserted.add(f"flags.{name}")

    cohomology = doc.get("cohomology", [])
    _check(require_list, cohomology, "cohomology")
    records: List[CohomologyRecord] = [
        _decode_record(raw, f"cohomology[{i}]", p, asserted) for i, raw in enumerate(cohomology)
    ]

    derived_raw = doc.get("derived", {})
    _check(require_dict, derived_raw, "derived")
    bounds: Dict[str, Optional[NatInterval]] = {}
    for name in DERIVED_BOUNDS:
        if name not in derived_raw:
            bounds[name] = None
            continue
        value, flag = _unwrap(derived_raw[name], f"derived.{name}")
        bounds[name] = _decode_interval(value, f"derived.{name}")
        if flag:
            asserted.add(f"derived.{name}")
    f_nilpotent = None
    if "f_nilpotent" in derived_raw:
        value, flag = _unwrap(derived_raw["f_nilpotent"], "derived.f_nilpotent")
        try:
            f_nilpotent = Verdict(value)
        except ValueError:
            raise ProfileError("'derived.f_nilpotent' must be true, false or unknown")
        if flag:
            asserted.add("derived.f_nilpotent")

    annihilator = None
    if "uniform_annihilator" in doc:
        value, flag = _unwrap(doc["uniform_annihilator"], "uniform_annihilator")
        if value != UNKNOWN:
            _check(require_int, value, "uniform_annihilator", 0)
            annihilator = value
        if flag:
            asserted.add("uniform_annihilator")

    notes = doc.get("notes", [])
    _check(require_list, notes, "notes")
    return RingProfile.build(
        name=doc["name"],
        p=p,
        dim=dim,
        records=records,
        flags=ProfileFlags(**flag_values),
        fdepth=bounds["fdepth"],
        gfdepth=bounds["gfdepth"],
        b_ring=bounds["b_ring"],
        f_nilpotent=f_nilpotent,
        uniform_annihilator=annihilator,
        asserted=asserted,
        provenance=doc.get("provenance", "asserted"),
        notes=[str(n) for n in notes],
    )


def loads_profile(data: Union[bytes, str]) -> RingProfile:
    try:
        doc = orjson.loads(data)
    except orjson.JSONDecodeError as e:
        raise ProfileError(f"invalid JSON: {e}")
    return profile_from_document(doc)


def read_profile(path: Union[str, Path]) -> RingProfile:
    """Read a profile file.

    Raises:
        ProfileError: If the file is missing or does not match the schema
    """
    source = Path(path)
    try:
        data = source.read_bytes()
    except OSError as e:
        raise ProfileError(f"Failed to read {source}: {e}")
    try:
        profile = loads_profile(data)
    except ProfileError as e:
        raise ProfileError(f"{source}: {e}")
    logger.debug(f"[PROFILE_READ] {profile.name} <- {source}")
    return profile
