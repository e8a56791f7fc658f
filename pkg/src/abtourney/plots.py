"""Staircase figure for reconstruction traces.

Renders the chain of provisional score vectors (the same data the trace
TSVs carry) as step plots, one curve per slicing round.  matplotlib is
imported lazily with the Agg backend so library users who never plot pay
nothing and no display is required.
"""

from __future__ import annotations

from pathlib import Path

from .reconstruct import ReconstructionTrace


def save_staircase(trace: ReconstructionTrace, path: str | Path) -> Path:
    """Render the trace's score vectors as staircases and save the figure.

    The top curve is the input sequence; each later curve is the reduced
    vector after one more player's results were fixed.  The file format
    follows the path suffix (PNG by default).  Returns the path written.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    chain = trace.round_vectors()
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    cmap = plt.get_cmap("viridis")
    hi = max(len(chain) - 1, 1)
    for idx, (k, vec) in enumerate(chain):
        xs = range(1, len(vec) + 1)
        ax.step(
            xs,
            vec,
            where="post",
            color=cmap(idx / hi),
            label=f"k={k}",
        )
    p = trace.params
    ax.set_xlabel("player")
    ax.set_ylabel("provisional score")
    ax.set_title(f"slicing staircase: n={p.n}, a={p.a}, b={p.b}")
    ax.grid(True, alpha=0.3)
    if len(chain) <= 12:
        ax.legend(loc="upper left", fontsize="small")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
