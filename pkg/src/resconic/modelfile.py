"""Reading and writing model files (JSON), including the bundled fixtures.

The schema lives in ``data/model.schema.json``; unknown fields are rejected.
A path of the form ``builtin:NAME`` loads ``data/fixtures/NAME.json``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .construction import PlanePencil
from .errors import ModelFormatError
from .kodaira import parse_config
from .surface import BasePointForest, CurveSpec, SurfaceModel, build_model

BUILTIN_PREFIX = "builtin:"


@lru_cache(maxsize=None)
def _schema() -> dict:
    return json.loads(resources.files("resconic").joinpath("data/model.schema.json").read_text("utf-8"))


def builtin_names() -> list[str]:
    d = resources.files("resconic").joinpath("data/fixtures")
    return sorted(p.name[:-5] for p in d.iterdir() if p.name.endswith(".json"))


def read_text(path: str | Path) -> tuple[str, str]:
    """Return ``(text, default_name)`` for a file path or a ``builtin:`` reference."""
    s = str(path)
    if s.startswith(BUILTIN_PREFIX):
        name = s[len(BUILTIN_PREFIX):]
        if name not in builtin_names():
            raise ModelFormatError(f"no bundled model {name!r}; available: {', '.join(builtin_names())}")
        res = resources.files("resconic").joinpath(f"data/fixtures/{name}.json")
        return res.read_text("utf-8"), name
    try:
        return Path(s).read_text(encoding="utf-8"), Path(s).stem
    except OSError as exc:
        raise ModelFormatError(f"cannot read {s}: {exc.strerror or exc}") from None


def parse_model(data: dict, default_name: str = "model") -> SurfaceModel:
    try:
        jsonschema.validate(data, _schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ModelFormatError(f"schema violation at {where}: {exc.message}") from None

    points = sorted(data["points"], key=lambda p: p["id"])
    if [p["id"] for p in points] != list(range(1, 10)):
        raise ModelFormatError("point ids must be exactly 1..9")
    forest = BasePointForest(tuple(p["near"] for p in points))

    specs = []
    for c in data["curves"]:
        specs.append(CurveSpec(
            label=c["label"],
            kind=c["kind"],
            point=c.get("point"),
            through=tuple(tuple(x) for x in c.get("through", ())),
            coeffs=tuple(c["class"]) if "class" in c else None,
            role=c.get("role"),
        ))
    fibers = {k: [tuple(x) for x in v] for k, v in data.get("fibers", {}).items()}
    pencils = [PlanePencil(p["kind"], tuple(tuple(b) for b in p["base"])) for p in data.get("pencils", [])]
    return build_model(
        name=data.get("name", default_name),
        forest=forest,
        specs=specs,
        config=parse_config(data["config"]),
        fibers=fibers,
        pencils=pencils,
        description=data.get("description", ""),
    )


def load_model(path: str | Path) -> SurfaceModel:
    text, name = read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"{path}: invalid JSON ({exc})") from None
    return parse_model(data, name)


def dump_model(m: SurfaceModel) -> dict:
    curves = []
    for s in m.specs:
        d: dict = {"label": s.label, "kind": s.kind}
        if s.kind == "exc":
            d["point"] = s.point
        elif s.kind == "class":
            d["class"] = list(s.coeffs)
        else:
            d["through"] = [list(t) for t in s.through]
        if s.role is not None:
            d["role"] = s.role
        curves.append(d)
    out = {
        "name": m.name,
        "points": [{"id": i, "near": j} for i, j in enumerate(m.forest.near, start=1)],
        "curves": curves,
        "config": [str(t) for t in m.config],
    }
    if m.description:
        out["description"] = m.description
    if m.fibers:
        out["fibers"] = {k: [list(x) for x in v] for k, v in m.fibers.items()}
    if m.pencils:
        out["pencils"] = [p.to_dict() for p in m.pencils]
    return out
