import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pyequipart.arrangement.hyperplane import unlift
from pyequipart.common.errors import DegenerateError

COLORS = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd"]


def _svg(fig):
    # fixed ids and no date, so that equal figures give equal bytes
    plt.rcParams["svg.hashsalt"] = "pyequipart"
    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def _bounding_box(measure, margin=0.1):
    lo = np.array([measure.projection_range(e)[0] for e in np.eye(2)])
    hi = np.array([measure.projection_range(e)[1] for e in np.eye(2)])
    pad = margin * (hi - lo)
    return lo - pad, hi + pad


def solution_svg(measure, config, bins=128):
    """Two lines over a heatmap of a planar measure, as SVG text."""
    if measure.dim != 2:
        raise ValueError("Only planar solutions can be drawn, got dimension {}.".format(measure.dim))
    lo, hi = _bounding_box(measure)
    fig, ax = plt.subplots(figsize=(6, 6))
    cells = getattr(measure, "cells", None)
    if cells is not None:
        X, w, _ = cells()
        H, xe, ye = np.histogram2d(X[:, 0], X[:, 1], bins=bins, range=[[lo[0], hi[0]], [lo[1], hi[1]]], weights=w)
        ax.imshow(H.T, origin="lower", extent=(xe[0], xe[-1], ye[0], ye[-1]), cmap="Greys", aspect="auto")
    if config is not None:
        s = np.linspace(-1, 1, 2) * np.linalg.norm(hi - lo)
        for i, u in enumerate(config.u):
            try:
                h = unlift(u)
            except DegenerateError:
                continue
            foot = h.a * h.c
            tangent = np.array([-h.a[1], h.a[0]])
            P = foot + s[:, None] * tangent
            ax.plot(P[:, 0], P[:, 1], color=COLORS[i % 4], lw=2, label="H{}".format(i + 1))
        ax.legend(loc="upper right")
    ax.set_xlim(lo[0], hi[0])
    ax.set_ylim(lo[1], hi[1])
    ax.set_aspect("equal")
    return _svg(fig)


def division_diagram(solutions):
    """Ring diagrams of the 16 division points and the four inscribed quadrilaterals.

    Division point ``j`` of a solution sits at angle :math:`\\varphi + j\\pi/8`; the
    quadrilateral of hyperplane ``i`` joins its four division points.
    """
    solutions = list(solutions)
    if not solutions:
        raise ValueError("Nothing to draw.")
    cols = min(4, len(solutions))
    rows = (len(solutions) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3 * cols, 3 * rows), squeeze=False)
    circle = np.linspace(0, 2 * np.pi, 257)
    for ax in axes.reshape(-1):
        ax.axis("off")
    for ax, sol in zip(axes.reshape(-1), solutions):
        t = sol.division_points
        ax.plot(np.cos(circle), np.sin(circle), color="0.6", lw=1)
        ax.scatter(np.cos(t), np.sin(t), s=12, color="k", zorder=3)
        for i, idx in enumerate(sol.assignment):
            angles = np.sort(t[idx])
            closed = np.append(angles, angles[0])
            ax.plot(np.cos(closed), np.sin(closed), color=COLORS[i], lw=1.5)
        ax.set_title("phi = {:.4f}".format(sol.phi), fontsize=9)
        ax.set_aspect("equal")
    return _svg(fig)
