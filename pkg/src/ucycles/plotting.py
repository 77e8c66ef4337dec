"""Matplotlib figures written next to the CLI's textual reports."""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .structure import HalfClass, classify  # noqa: E402
from .verifier import check_u_word  # noqa: E402


def _figure(width=8, height=None):
    golden_ratio = (math.sqrt(5) - 1.0) / 2.0
    if not height:
        height = width * golden_ratio
    fig, ax = plt.subplots(figsize=(width, height), facecolor="w")
    ax.tick_params(labelsize=10)
    return fig, ax


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_word(word, n, path, title=None):
    """Letter value against position, marking where the half split happens."""
    fig, ax = _figure()
    xs = range(1, len(word) + 1)
    ax.plot(xs, word, lw=0.8, color="0.4")
    ax.scatter(xs, word, s=6 if len(word) > 200 else 18, color="k", zorder=3)
    half = math.factorial(n) // 2
    if n >= 2 and half + 1 <= len(word):
        ax.axvline(half + 1, color="tab:red", ls="--", lw=1, label=f"position {half + 1}")
        ax.legend(frameon=False, fontsize=9)
    ax.set_xlabel("position")
    ax.set_ylabel("letter")
    ax.set_title(title or f"greedy u-word, n={n}")
    _save(fig, path)


def plot_half_split(word, n, path):
    """Which half-class each window falls into, by window index."""
    pats = check_u_word(word, n).patterns
    fig, ax = _figure(height=3)
    ys = [1 if classify(p) == HalfClass.FIRST_ONE_THEN_N else 0 for p in pats]
    ax.step(range(1, len(ys) + 1), ys, where="mid", color="k")
    ax.set_yticks([0, 1])
    ax.set_yticklabels(["n before 1", "1 before n"])
    ax.set_xlabel("window k")
    ax.set_title(f"half classes of windows, n={n}")
    _save(fig, path)


def plot_poset(word, dag, path, max_edges=5000):
    """Positions at their poset height, joined by generator edges."""
    fig, ax = _figure()
    h = dag.heights
    if len(dag.edges) <= max_edges:
        for j, k in dag.edges:
            ax.plot((j, k), (h[j - 1], h[k - 1]), color="0.75", lw=0.5, zorder=1)
    ax.scatter(range(1, len(h) + 1), h, s=10 if len(h) > 200 else 24, color="k", zorder=3)
    if len(word) <= 40:
        for p, (x, y) in enumerate(zip(word, h), 1):
            ax.annotate(str(x), (p, y), textcoords="offset points", xytext=(4, 3), fontsize=7)
    ax.set_xlabel("position")
    ax.set_ylabel("height")
    ax.set_title(f"letter-reuse poset, n={dag.n}, height {dag.height}")
    _save(fig, path)
