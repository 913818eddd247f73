import json
import os

import numpy as np

from pyequipart.arrangement.hyperplane import Configuration, Hyperplane
from pyequipart.curve.curves import curve_from_name
from pyequipart.measures.curve import CurveMeasure
from pyequipart.measures.gaussian import GaussianMixtureMeasure
from pyequipart.measures.grid import GridDensityMeasure
from pyequipart.measures.mixture import MixtureMeasure
from pyequipart.measures.point_cloud import PointCloudMeasure
from pyequipart.measures.symmetry import Reflection


def load_json(source):
    """Parse inline JSON text or the content of a file.

    Raises:
        ValueError: with the line and column of the first syntax error.
    """
    text = source
    if not source.lstrip().startswith(("{", "[")) and os.path.isfile(source):
        with open(source, encoding="utf-8") as f:
            text = f.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError("Malformed JSON at line {}, column {}: {}.".format(e.lineno, e.colno, e.msg))


def dumps(obj):
    """Deterministic JSON: sorted keys and shortest round-trip floats."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def _field(d, key, kind):
    if key not in d:
        raise ValueError("A {} measure needs a {!r} field.".format(kind, key))
    return d[key]


def _check_dim(d, measure):
    if "dim" in d and int(d["dim"]) != measure.dim:
        raise ValueError("Declared dimension {} but the data live in dimension {}.".format(d["dim"], measure.dim))
    return measure


def measure_from_dict(d):
    """Build a measure from its JSON form, see ``doc/schemas.rst``."""
    if not isinstance(d, dict) or "type" not in d:
        raise ValueError("A measure is a JSON object with a 'type' field.")
    kind = d["type"]
    if kind == "points":
        m = PointCloudMeasure(_field(d, "points", kind), d.get("weights"))
    elif kind == "grid":
        m = GridDensityMeasure(
            _field(d, "lower", kind), _field(d, "upper", kind), _field(d, "resolution", kind), _field(d, "values", kind)
        )
    elif kind == "gaussians":
        m = GaussianMixtureMeasure(_field(d, "means", kind), _field(d, "sigmas", kind), d.get("weights"), d.get("order", 3))
    elif kind == "curve":
        interval = d.get("interval")
        curve = curve_from_name(_field(d, "curve", kind), d.get("dim"), interval)
        transform = d.get("transform")
        if transform is not None:
            transform = (transform["A"], transform["b"])
        m = CurveMeasure(curve, interval, d.get("density"), d.get("quadrature", 256), transform)
    elif kind == "mixture":
        m = MixtureMeasure([measure_from_dict(c) for c in _field(d, "components", kind)], d.get("weights"))
    else:
        raise ValueError("Unknown measure type {!r}.".format(kind))
    return _check_dim(d, m)


def measure_to_dict(m):
    if isinstance(m, PointCloudMeasure):
        return {"type": "points", "dim": m.dim, "points": m.points.tolist(), "weights": m.weights.tolist()}
    if isinstance(m, GridDensityMeasure):
        return {
            "type": "grid",
            "dim": m.dim,
            "lower": m.lower.tolist(),
            "upper": m.upper.tolist(),
            "resolution": [int(r) for r in m.resolution],
            "values": np.asarray(m.values).reshape(-1).tolist(),
        }
    if isinstance(m, GaussianMixtureMeasure):
        return {
            "type": "gaussians",
            "dim": m.dim,
            "means": m.means.tolist(),
            "sigmas": np.asarray(m.sigmas).tolist(),
            "weights": m.weights.tolist(),
            "order": m.order,
        }
    if isinstance(m, CurveMeasure):
        out = {
            "type": "curve",
            "dim": m.dim,
            "curve": m.curve.to_dict(),
            "interval": list(m.interval),
            "quadrature": m.quadrature,
            "density": m.density.to_dict(),
        }
        if m.has_transform:
            out["transform"] = {"A": m.A.tolist(), "b": m.b.tolist()}
        return out
    if isinstance(m, MixtureMeasure):
        return {
            "type": "mixture",
            "components": [measure_to_dict(c) for c in m.components],
            "weights": np.asarray(m.weights).tolist(),
        }
    raise TypeError("Cannot serialize a measure of type {}.".format(type(m).__name__))


def config_from_json(obj):
    """Configuration from ``{"dim", "u"}``, a list of ``{"a", "c"}`` or ``{"hyperplanes": [...]}``."""
    if isinstance(obj, dict) and "u" in obj:
        config = Configuration(obj["u"])
        if "dim" in obj and int(obj["dim"]) != config.dim:
            raise ValueError("Declared dimension {} for {} hyperplanes.".format(obj["dim"], config.dim))
        return config
    if isinstance(obj, dict) and "hyperplanes" in obj:
        obj = obj["hyperplanes"]
    if isinstance(obj, list) and obj and all(isinstance(h, dict) for h in obj):
        return Configuration.from_hyperplanes([hyperplane_from_json(h) for h in obj])
    raise ValueError("Expected a configuration as {\"dim\", \"u\"} or a list of {\"a\", \"c\"}.")


def hyperplane_from_json(obj):
    if not isinstance(obj, dict) or "a" not in obj or "c" not in obj:
        raise ValueError("A hyperplane is a JSON object {\"a\": [...], \"c\": ...}.")
    return Hyperplane(obj["a"], obj["c"])


def flat_from_json(obj):
    """Affine subspace ``{"point": [...], "directions": [[...], ...]}`` as the reflection through it."""
    if not isinstance(obj, dict) or "point" not in obj:
        raise ValueError("An affine subspace is a JSON object with 'point' and 'directions'.")
    return Reflection(obj["point"], obj.get("directions", []))


def points_from_json(obj):
    """Point array from a bare list or a ``points`` measure."""
    if isinstance(obj, dict):
        obj = _field(obj, "points", "points")
    P = np.asarray(obj, dtype="float64")
    if P.ndim != 2:
        raise ValueError("Expected a list of points, got shape {}.".format(P.shape))
    return P
