"""File formats for fields, partial-wave modes and scan reports.

A field file is a one-line JSON header followed by a whitespace-delimited
table, one row per sample:

    {"kind": "majorana_field", "grid": {"n": 8, "length": 10.0, "axes": 3}, "mass": 1.0, ...}
    i j k c0 c1 c2 c3

Mode files use rows (p_index, l, mu, components...) and carry the
quadrature spec in the header.  The formats are shared by the library and
the command-line experiments.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .fields import GridSpec, MajoranaField
from .hankel import SphericalModeField, SphericalQuadSpec

_FIELD_KIND = "majorana_field"
_MODE_KIND = "majorana_mode_field"


def save_field(path, field: MajoranaField, mass: float | None = None) -> None:
    header = {
        "kind": _FIELD_KIND,
        "grid": {"n": field.grid.n, "length": field.grid.length, "axes": field.grid.axes},
        "domain": field.domain,
    }
    if mass is not None:
        header["mass"] = mass
    idx = np.indices(field.grid.shape).reshape(field.grid.axes, -1).T
    vals = field.values.reshape(-1, 4)
    with open(path, "w") as fh:
        fh.write(json.dumps(header) + "\n")
        for ix, row in zip(idx, vals):
            fh.write(" ".join(str(i) for i in ix) + " " + " ".join(repr(float(v)) for v in row) + "\n")


def load_field(path) -> tuple[MajoranaField, float | None]:
    with open(path) as fh:
        header = json.loads(fh.readline())
        if header.get("kind") != _FIELD_KIND:
            raise ValueError(f"not a field file: {path}")
        grid = GridSpec(**header["grid"])
        data = np.loadtxt(fh, ndmin=2)
    axes = grid.axes
    values = np.zeros(grid.shape + (4,))
    idx = tuple(data[:, a].astype(int) for a in range(axes))
    values[idx] = data[:, axes:]
    return MajoranaField(grid, values, header.get("domain", "position")), header.get("mass")


def save_mode_field(path, modes: SphericalModeField, mass: float | None = None) -> None:
    q = modes.quad
    header = {
        "kind": _MODE_KIND,
        "quad": {
            "r_max": q.r_max,
            "n_r": q.n_r,
            "n_theta": q.n_theta,
            "n_phi": q.n_phi,
            "l_max": q.l_max,
        },
    }
    if mass is not None:
        header["mass"] = mass
    with open(path, "w") as fh:
        fh.write(json.dumps(header) + "\n")
        for k, (l, mu) in enumerate(q.modes()):
            for ip in range(q.n_r):
                row = modes.values[k, ip]
                fh.write(f"{ip} {l} {mu} " + " ".join(repr(float(v)) for v in row) + "\n")


def load_mode_field(path) -> tuple[SphericalModeField, float | None]:
    with open(path) as fh:
        header = json.loads(fh.readline())
        if header.get("kind") != _MODE_KIND:
            raise ValueError(f"not a mode-field file: {path}")
        quad = SphericalQuadSpec(**header["quad"])
        data = np.loadtxt(fh, ndmin=2)
    lookup = {m: i for i, m in enumerate(quad.modes())}
    values = np.zeros((len(lookup), quad.n_r, 4))
    for row in data:
        k = lookup[(int(row[1]), int(row[2]))]
        values[k, int(row[0])] = row[3:]
    return SphericalModeField(quad, values, "majorana"), header.get("mass")


def save_json(path, payload) -> None:
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def load_json(path):
    return json.loads(Path(path).read_text())
