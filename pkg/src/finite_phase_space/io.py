"""Text file formats: grid/series/profile CSV and spectrum/gap JSON.

Numbers are written with 17 significant digits, ``.`` as the decimal
separator and ``\\n`` line endings.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from .dynamics import GapEstimate, ScalarSeries
from .lmg import AngleProfile, LMGSpectrum
from .phasespace import PhaseSpaceGrid


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_lines(path, header: str, rows) -> Path:
    path = Path(path)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")
    return path


def write_grid_csv(grid: PhaseSpaceGrid, path) -> Path:
    """Write ``mu,nu,value`` rows, ``mu`` ascending then ``nu`` ascending."""
    vals = np.real(grid.values)
    lab = grid.labels
    rows = ((str(mu), str(nu), fmt(vals[a, b])) for a, mu in enumerate(lab) for b, nu in enumerate(lab))
    return _write_lines(path, "mu,nu,value", rows)


def read_grid_csv(path) -> np.ndarray:
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    n = int(round(np.sqrt(data.shape[0])))
    return data[:, 2].reshape(n, n)


def write_series_csv(s: ScalarSeries, path) -> Path:
    return _write_lines(path, "tau,value", ((fmt(t), fmt(v)) for t, v in zip(s.taus, s.values)))


def write_profile_csv(profile: AngleProfile, path) -> Path:
    rows = ((fmt(p), fmt(v), fmt(m)) for p, v, m in zip(profile.phi, profile.V, profile.Minv))
    return _write_lines(path, "phi,V,Minv", rows)


def write_json(obj, path) -> Path:
    path = Path(path)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=False)
        fh.write("\n")
    return path


def spectrum_json(spec: LMGSpectrum, path) -> Path:
    return write_json(spec.to_dict(), path)


def gap_json(gap: GapEstimate, path) -> Path:
    return write_json(gap.to_dict(), path)


def sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()
