"""Ideal expressions, report rows, and the JSON file formats used by the CLI."""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import jsonschema

from .errors import ExponentOverflow, InvalidGenerator, ParseError, UnknownVariable
from .ideals import MonomialIdeal, format_ideal, minimalize, variable_names
from .inequalities import RatioReport
from .rings import AmbientRing, parse_ring
from .tgraded import TGradedIdeal, tgraded

MAX_EXPONENT = 10**6

CSV_COLUMNS = [
    "ideal", "colength", "mu", "e", "ratio_num", "ratio_den",
    "bound_name", "bound_num", "bound_den", "hypothesis_met", "satisfied",
]

_TOKEN = re.compile(r"\s*(?:(?P<var>[A-Za-z][A-Za-z0-9]*)|(?P<num>\d+)|(?P<op>[*^,])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", start)
        yield kind, m.group(kind), start
        pos = m.end()
    yield "end", "", len(text)


def _variable_index(name: str, d: int, pos: int) -> int:
    names = variable_names(d)
    if name in names:
        return names.index(name)
    m = re.fullmatch(r"x(\d+)", name)
    if m and 1 <= int(m.group(1)) <= d:
        return int(m.group(1)) - 1
    allowed = ", ".join(names) if d > 3 else ", ".join(names + [f"x1..x{d}"])
    raise UnknownVariable(f"unknown variable {name!r}; expected one of {allowed}", pos)


def parse_monomials(text: str, d: int) -> list[tuple[int, ...]]:
    """Parse ``monomial (',' monomial)*`` with ``monomial := factor ('*' factor)*``."""
    toks = list(_tokens(text))
    i = 0
    out = []

    def expect(kind):
        nonlocal i
        k, val, pos = toks[i]
        if k != kind:
            what = "end of input" if k == "end" else repr(val)
            raise ParseError(f"expected {kind}, found {what}", pos)
        i += 1
        return val, pos

    while True:
        exps = [0] * d
        while True:
            name, pos = expect("var")
            idx = _variable_index(name, d, pos)
            e = 1
            if toks[i][0] == "op" and toks[i][1] == "^":
                i += 1
                val, npos = expect("num")
                e = int(val)
                if e > MAX_EXPONENT:
                    raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}", npos)
            exps[idx] += e
            if toks[i][0] == "op" and toks[i][1] == "*":
                i += 1
                continue
            break
        out.append(tuple(exps))
        k, val, pos = toks[i]
        if k == "end":
            return out
        if k == "op" and val == ",":
            i += 1
            continue
        raise ParseError(f"expected ',' or '*', found {val!r}", pos)


def parse_ideal(source: str | Sequence[Sequence[int]], ambient: AmbientRing) -> MonomialIdeal:
    """Text such as ``"x^3, x*y, y^3"`` or exponent lists (also as JSON text)."""
    if isinstance(source, str):
        text = source.strip()
        if text.startswith("["):
            try:
                source = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad exponent list: {exc.msg}", exc.pos) from None
        else:
            return minimalize(parse_monomials(text, ambient.dim), ambient)
    gens = []
    for g in source:
        if not isinstance(g, (list, tuple)) or len(g) != ambient.dim or not all(isinstance(x, int) for x in g):
            raise InvalidGenerator(f"exponent vector {g!r} must be {ambient.dim} integers")
        if any(abs(x) > MAX_EXPONENT for x in g):
            raise ExponentOverflow(f"exponent in {list(g)} exceeds {MAX_EXPONENT}")
        gens.append(tuple(g))
    return minimalize(gens, ambient)


def serialize_ideal(I: MonomialIdeal) -> str:
    return format_ideal(I)


# -- numbers ------------------------------------------------------------------


def json_number(n: int):
    return n if abs(n) < 2**53 else str(n)


def rational_text(q: Fraction | int | None) -> str | None:
    if q is None:
        return None
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def to_jsonable(obj: Any):
    """Recursively convert report values: rationals to ``"p/q"``, big ints to strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return json_number(obj)
    if isinstance(obj, Fraction):
        return rational_text(obj)
    if isinstance(obj, MonomialIdeal):
        return format_ideal(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def report_rows(report: RatioReport) -> list[dict]:
    """One row per bound, with the CSV column set."""
    s = report.stats
    rows = []
    for b in report.bounds:
        rows.append({
            "ideal": format_ideal(s.ideal),
            "colength": s.ell,
            "mu": s.mu,
            "e": s.e,
            "ratio_num": s.ratio.numerator,
            "ratio_den": s.ratio.denominator,
            "bound_name": b.name,
            "bound_num": b.constant.numerator if b.constant is not None else None,
            "bound_den": b.constant.denominator if b.constant is not None else None,
            "hypothesis_met": b.hypothesis_met,
            "satisfied": b.satisfied,
        })
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _csv_cell(r[k]) for k in CSV_COLUMNS})
    return buf.getvalue()


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def rows_to_json(rows: list[dict], **meta) -> str:
    payload = dict(meta)
    payload["rows"] = [{k: to_jsonable(r[k]) for k in CSV_COLUMNS} for r in rows]
    return json.dumps(to_jsonable(payload), indent=2) + "\n"


def rows_from_csv(text: str) -> list[dict]:
    """Read rows back; numbers as ints, booleans as bools, empty cells as ``None``."""
    out = []
    for r in csv.DictReader(io.StringIO(text)):
        row = {}
        for k in CSV_COLUMNS:
            v = r[k]
            if v == "":
                row[k] = None
            elif v in ("true", "false"):
                row[k] = v == "true"
            elif k not in ("ideal", "bound_name"):
                row[k] = int(v)
            else:
                row[k] = v
        out.append(row)
    return out


# -- T-graded ideal files ----------------------------------------------------------

TGRADED_SCHEMA = {
    "type": "object",
    "required": ["base", "components"],
    "properties": {
        "base": {"type": "string"},
        "components": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        },
        "K": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
        },
    },
}


@dataclass
class TGradedSpec:
    ideal: TGradedIdeal
    generators: list[tuple[tuple[int, ...], int]] | None = None


def load_tgraded(data: dict | str) -> TGradedSpec:
    """``{"base": ring, "components": [[gens], ...], "K": k, "generators": [[a..., j], ...]}``.

    ``generators`` entries list the base exponents followed by the T-degree.
    """
    if isinstance(data, str):
        data = json.loads(data)
    try:
        jsonschema.validate(data, TGRADED_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ParseError(f"invalid T-graded ideal file: {exc.message}") from None
    base = parse_ring(data["base"])
    comps = [parse_ideal(c, base) for c in data["components"]]
    if "K" in data and data["K"] != len(comps):
        raise ParseError(f"K = {data['K']} but {len(comps)} components were given")
    gens = None
    if "generators" in data:
        gens = [(tuple(g[:-1]), g[-1]) for g in data["generators"]]
    return TGradedSpec(tgraded(base, comps), gens)


def dump_tgraded(I: TGradedIdeal, generators=None) -> dict:
    out = {
        "base": I.base.spec(),
        "components": [[list(g) for g in c.gens] for c in I.components],
        "K": I.K,
    }
    if generators is not None:
        out["generators"] = [list(a) + [j] for a, j in generators]
    return out


# -- run configuration ------------------------------------------------------------

RUN_CONFIG_SCHEMA = {
    "type": "object",
    "required": ["ring"],
    "additionalProperties": False,
    "properties": {
        "ring": {"type": "string"},
        "n_max": {"type": ["integer", "null"], "minimum": 1},
        "seed": {"type": "integer"},
        "enumeration": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "mode": {"enum": ["by_colength", "by_generators", "random"]},
                "max_colength": {"type": "integer", "minimum": 1},
                "max_generators": {"type": "integer", "minimum": 1},
                "max_degree": {"type": "integer", "minimum": 1},
                "count": {"type": "integer", "minimum": 1},
                "filter": {"enum": ["all", "integrally_closed"]},
            },
        },
        "bounds": {
            "type": "array",
            "items": {"enum": ["lech", "hanes", "mfull2", "dimd", "colength"]},
        },
        "format": {"enum": ["json", "csv"]},
        "out": {"type": ["string", "null"]},
        "jobs": {"type": "integer", "minimum": 1},
    },
}


@dataclass
class RunConfig:
    """Batch run settings; every field but ``ring`` has a default."""

    ring: AmbientRing
    n_max: int | None = None
    seed: int = 0
    enumeration: dict = field(default_factory=lambda: {"mode": "by_colength", "max_colength": 5})
    bounds: list[str] = field(default_factory=lambda: ["lech"])
    format: str = "json"
    out: str | None = None
    jobs: int = 1

    def enumeration_spec(self):
        from .search import EnumerationSpec

        params = dict(self.enumeration)
        return EnumerationSpec(self.ring, seed=self.seed, **params)


def load_run_config(data: dict | str) -> RunConfig:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        jsonschema.validate(data, RUN_CONFIG_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ParseError(f"invalid run configuration: {exc.message}") from None
    data = dict(data)
    data["ring"] = parse_ring(data["ring"])
    return RunConfig(**data)
