"""JSON formats for functions, specs, sequences, search spaces and targets.

Functions::

    {"n": 4, "k": 2, "values": [0, 3, ...]}
    {"n": 4, "anf_components": ["x1*x2 + x3", "x1 x4"]}     # a_0 first
    {"n": 4, "anf": "x1*x2 + x3"}                           # Boolean

Sequences are ``{"entries": [1, -1, ...]}`` or a bare list.  Correlation
targets list ``{"u": [0,1,0,1] or index, "value": ...}`` where a value is an
integer, a Gaussian integer string such as ``"-8i"`` or ``"3+2i"``, or
``{"m": 3, "coeffs": [...]}``.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .cyclo import CycElement, element_from_complex
from .gbf import GeneralizedBooleanFunction, compose_components, parse_function
from .search import ProfileTarget, SearchSpace
from .transforms import RootSpec


class FormatError(ValueError):
    """Malformed input; the message names the offending field."""


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def dump_json(obj: Any, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def _field(data: dict, name: str, where: str):
    if not isinstance(data, dict):
        raise FormatError(f"{where}: expected a JSON object")
    if name not in data:
        raise FormatError(f"{where}: missing field '{name}'")
    return data[name]


def _int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"field '{name}' must be an integer, got {value!r}")
    return value


# ---------------------------------------------------------------------------
# functions

def function_from_json(data: dict, where: str = "function") -> GeneralizedBooleanFunction:
    n = _int(_field(data, "n", where), "n")
    try:
        if "values" in data:
            k = _int(data.get("k", 1), "k")
            return GeneralizedBooleanFunction(n, k, data["values"])
        if "anf_components" in data:
            comps = data["anf_components"]
            if not isinstance(comps, list) or not comps:
                raise FormatError(f"{where}: field 'anf_components' must be a non-empty list")
            return compose_components([parse_function(c, n) for c in comps])
        if "anf" in data:
            return compose_components([parse_function(data["anf"], n)])
    except FormatError:
        raise
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{where}: {exc}") from None
    raise FormatError(f"{where}: needs one of 'values', 'anf_components', 'anf'")


def function_to_json(F: GeneralizedBooleanFunction) -> dict:
    return {"n": F.n, "k": F.k, "values": F.values.tolist()}


def functions_from_json(data, where: str = "functions") -> list[GeneralizedBooleanFunction]:
    items = data.get("functions") if isinstance(data, dict) else data
    if not isinstance(items, list) or not items:
        raise FormatError(f"{where}: field 'functions' must be a non-empty list")
    return [function_from_json(f, f"{where}[{i}]") for i, f in enumerate(items)]


def spec_from_json(data: dict, where: str = "spec") -> RootSpec:
    try:
        return RootSpec.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise FormatError(f"{where}: {exc}") from None


# ---------------------------------------------------------------------------
# sequences

def sequence_from_json(data, where: str = "sequence") -> tuple[int, ...]:
    entries = data.get("entries") if isinstance(data, dict) else data
    if not isinstance(entries, list) or not entries:
        raise FormatError(f"{where}: field 'entries' must be a non-empty list")
    if any(v not in (1, -1) or isinstance(v, bool) for v in entries):
        raise FormatError(f"{where}: field 'entries' must contain only +1 and -1")
    return tuple(entries)


# ---------------------------------------------------------------------------
# cyclotomic values

_GAUSS = re.compile(r"^\s*([+-]?\d+)?\s*(?:([+-])\s*(\d*)\s*i)?\s*$")
_PURE_I = re.compile(r"^\s*([+-]?)(\d*)\s*i\s*$")


def parse_gaussian(text: str) -> complex:
    """'16', '-8i', '3+2i', 'i' -> complex."""
    m = _PURE_I.match(text)
    if m:
        return complex(0, int(m.group(1) + (m.group(2) or "1")))
    m = _GAUSS.match(text)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise FormatError(f"cannot read {text!r} as a Gaussian integer")
    re_part = int(m.group(1) or 0)
    im_part = int(m.group(2) + (m.group(3) or "1")) if m.group(2) else 0
    return complex(re_part, im_part)


def value_from_json(value, where: str = "value") -> CycElement:
    if isinstance(value, bool):
        raise FormatError(f"{where}: expected a number")
    if isinstance(value, int):
        return CycElement.from_int(value)
    if isinstance(value, str):
        return element_from_complex(parse_gaussian(value), 2)
    if isinstance(value, dict):
        m = _int(_field(value, "m", where), "m")
        try:
            return CycElement(m, tuple(_field(value, "coeffs", where)))
        except (ValueError, TypeError) as exc:
            raise FormatError(f"{where}: {exc}") from None
    raise FormatError(f"{where}: unsupported value {value!r}")


def value_to_json(v: CycElement) -> dict:
    return {"m": v.m, "coeffs": list(v.coeffs)}


# ---------------------------------------------------------------------------
# search inputs

def target_from_json(data: dict, where: str = "target") -> ProfileTarget:
    n = _int(_field(data, "n", where), "n")
    entries = _field(data, "entries", where)
    if not isinstance(entries, list):
        raise FormatError(f"{where}: field 'entries' must be a list")
    values = {}
    for i, e in enumerate(entries):
        loc = f"{where}.entries[{i}]"
        u = _field(e, "u", loc)
        values[tuple(u) if isinstance(u, list) else u] = value_from_json(_field(e, "value", loc), loc)
    wild = [tuple(u) if isinstance(u, list) else u for u in data.get("wildcard", [])]
    try:
        return ProfileTarget(n, values, frozenset(wild))
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def target_to_json(t: ProfileTarget) -> dict:
    return {
        "n": t.n,
        "entries": [{"u": u, "value": value_to_json(v)} for u, v in sorted(t.values.items())],
        "wildcard": sorted(t.wildcard),
    }


def space_from_json(data: dict, where: str = "space") -> SearchSpace:
    n = _int(_field(data, "n", where), "n")
    kwargs: dict = {"k": _int(data.get("k", 1), "k")}
    if "template" in data:
        kwargs["template"] = function_from_json(data["template"], f"{where}.template")
    if "free_component" in data:
        kwargs["free_component"] = _int(data["free_component"], "free_component")
    if "degree_bound" in data:
        kwargs["degree_bound"] = _int(data["degree_bound"], "degree_bound")
    if "candidates" in data:
        kwargs["candidates"] = tuple(functions_from_json(data["candidates"], f"{where}.candidates"))
    try:
        return SearchSpace(n, **kwargs)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{where}: {exc}") from None
