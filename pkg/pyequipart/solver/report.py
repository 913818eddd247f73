from concurrent.futures import ThreadPoolExecutor

import numpy as np

import pyequipart.config
from pyequipart.arrangement.hyperplane import Configuration, unlift
from pyequipart.common.errors import DegenerateError
from pyequipart.common.utils import bitstring, log

STATUS_RANK = {
    "converged": 0,
    "max-iter": 1,
    "stalled": 2,
    "delta-violation": 3,
    "exhausted": 4,
}


class SolveReport:
    """Outcome of a solver run.

    ``status == "converged"`` guarantees ``residual < target``; any other status is an
    honest failure carrying its diagnostics.
    """

    def __init__(
        self,
        config,
        residual,
        iterations,
        status,
        target,
        path=None,
        masses=None,
        diagnostics=None,
    ):
        if status not in STATUS_RANK:
            raise ValueError("Unknown solver status {!r}.".format(status))
        self.config = config if isinstance(config, Configuration) or config is None else Configuration(config)
        self.residual = float(residual)
        self.iterations = int(iterations)
        self.status = status
        self.target = float(target)
        self.path = [] if path is None else list(path)
        self.masses = masses
        self.diagnostics = {} if diagnostics is None else dict(diagnostics)
        if status == "converged":
            assert self.residual < self.target

    @property
    def converged(self):
        return self.status == "converged"

    def sort_key(self, index=0):
        return (STATUS_RANK[self.status], self.residual, index)

    def to_dict(self):
        out = {
            "status": self.status,
            "residual": self.residual,
            "target": self.target,
            "iterations": self.iterations,
            "diagnostics": _jsonable(self.diagnostics),
        }
        if self.path:
            out["path"] = [float(t) for t in self.path]
        if self.config is not None:
            out["u"] = self.config.u.tolist()
            hyperplanes = []
            for u in self.config.u:
                try:
                    hyperplanes.append(unlift(u).to_dict())
                except DegenerateError:
                    hyperplanes.append(None)
            out["hyperplanes"] = hyperplanes
        if self.masses is not None:
            n = self.config.dim
            out["mass_vector"] = {bitstring(b, n): float(v) for (b, v) in enumerate(self.masses)}
        return out

    def __repr__(self):
        return "SolveReport(status={!r}, residual={:.3e}, iterations={})".format(
            self.status, self.residual, self.iterations
        )


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for (k, v) in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, SolveReport):
        return obj.to_dict()
    return obj


def best_report(reports):
    """Deterministic merge: lowest (status rank, residual, index)."""
    return min(enumerate(reports), key=lambda ir: ir[1].sort_key(ir[0]))[1]


def multi_start(fun, seeds, batch=4, stop_on_success=True):
    """Run ``fun(seed)`` over ``seeds`` in batches on ``config.n_jobs`` threads.

    The batch size does not depend on the number of workers, so the result is
    independent of it.

    Returns:
        (best report, number of starts tried)
    """
    reports = []
    with ThreadPoolExecutor(max_workers=max(1, pyequipart.config.n_jobs)) as pool:
        for start in range(0, len(seeds), batch):
            reports.extend(pool.map(fun, seeds[start : start + batch]))
            if stop_on_success and any(r.converged for r in reports):
                break
    if not reports:
        raise ValueError("No starting point to try.")
    best = best_report(reports)
    log("multi-start: {} starts, best {!r}".format(len(reports), best))
    return best, len(reports)
