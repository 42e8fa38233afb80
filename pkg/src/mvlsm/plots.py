"""Figure rendering for fronts, solve traces and performance profiles.

All functions write image files and return the path; nothing is shown
interactively (the Agg backend is forced so rendering works headless).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .front import FrontApproximation
from .metrics import ProfileCurve
from .problems import MultiobjectiveProblem
from .solver import SolveTrace

_RC = {
    "figure.figsize": (6.0, 4.5),
    "figure.dpi": 110,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 10,
}


def _save(fig, path) -> str:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return str(path)


def front_figure(
    front: FrontApproximation, problem: MultiobjectiveProblem, path
) -> str:
    """Scatter the collected front in objective space.

    For bi-objective problems with a known front curve the curve is
    overlaid; tri-objective fronts are drawn as a 3-D scatter.
    """
    fx = front.objective_matrix()
    r = front.ideal.size
    with plt.rc_context(_RC):
        if r == 3:
            fig = plt.figure()
            ax = fig.add_subplot(projection="3d")
            if fx.shape[0]:
                ax.scatter(fx[:, 0], fx[:, 1], fx[:, 2], s=12, color="tab:blue")
            ax.set_xlabel("f1")
            ax.set_ylabel("f2")
            ax.set_zlabel("f3")
        else:
            fig, ax = plt.subplots()
            if problem.analytic_front is not None and fx.shape[0]:
                lo, hi = fx[:, 0].min(), fx[:, 0].max()
                f1 = np.linspace(max(lo, 1e-12), hi, 400)
                ax.plot(
                    f1,
                    problem.analytic_front(f1),
                    color="tab:red",
                    lw=1.0,
                    label="analytic front curve",
                )
                ax.legend()
            if fx.shape[0]:
                ax.scatter(fx[:, 0], fx[:, 1], s=12, color="tab:blue", zorder=3)
            ax.set_xlabel("f1")
            ax.set_ylabel("f2")
        label = "filtered" if front.filtered else "raw"
        ax.set_title(f"{front.problem_id}: {len(front.points)} points ({label}, {front.runs} runs)")
        return _save(fig, path)


def convergence_figure(trace: SolveTrace, path) -> str:
    """Level sequence and modified variance per iteration, side by side."""
    with plt.rc_context(_RC):
        fig, (ax_c, ax_vf) = plt.subplots(1, 2, figsize=(9.0, 4.0))
        ax_c.plot(range(len(trace.c_seq)), trace.c_seq, marker="o", ms=3)
        ax_c.set_yscale("symlog")
        ax_c.set_xlabel("iteration")
        ax_c.set_ylabel("level c")
        vf = np.asarray(trace.vf_seq)
        positive = vf > 0
        if positive.any():
            ax_vf.semilogy(np.flatnonzero(positive), vf[positive], marker="o", ms=3)
        ax_vf.set_xlabel("iteration")
        ax_vf.set_ylabel("modified variance")
        fig.suptitle(f"status: {trace.status}, final level {trace.c_bar:.6g}")
        return _save(fig, path)


def profile_figure(curves: list[ProfileCurve], path, title: str = "") -> str:
    """Step plot of each solver's fraction-within-tau curve."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for curve in curves:
            ax.step(
                curve.tau_breakpoints,
                curve.rho_values,
                where="post",
                label=curve.solver_id,
            )
        ax.set_xlabel(r"performance ratio $\tau$")
        ax.set_ylabel("fraction of problems")
        ax.set_ylim(-0.05, 1.05)
        if title:
            ax.set_title(title)
        ax.legend()
        return _save(fig, path)
