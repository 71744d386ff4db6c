"""Plot the four training metrics from persisted sweep results.

Reads every run under a sweep directory (default: the committed cart-pole
results), averages metric curves across seeds, and renders the
reward / Bellman-loss / entropy / KL panel to a PNG.

Usage:
    python demos/06_plot_results.py [sweep_dir] [output.png]

Requires matplotlib (not a package dependency).
"""

import sys
from pathlib import Path

import numpy as np

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib is required for this demo: pip install matplotlib")

from cascade_rl.harness import read_metrics_csv

sweep_dir = Path(
    sys.argv[1] if len(sys.argv) > 1 else "results/paper_runs/cartpole_main"
)
out_path = Path(sys.argv[2] if len(sys.argv) > 2 else "cartpole_metrics.png")

metric_files = sorted(sweep_dir.glob("*/metrics.csv"))
if not metric_files:
    sys.exit(
        f"no runs under {sweep_dir}; train one first, e.g.\n"
        "  cascade-rl sweep --spec experiments/cartpole_main.json "
        "--out results/paper_runs/cartpole_main"
    )

runs = [read_metrics_csv(path) for path in metric_files]
steps = np.array([row.env_steps for row in runs[0]])
panels = [
    ("train_return_mean", "mean episode return"),
    ("bellman_loss", "mean squared Bellman residual"),
    ("normalized_entropy", "normalized entropy"),
    ("kl_prev_policy", "KL(new policy || previous)"),
]

fig, axes = plt.subplots(2, 2, figsize=(11, 7))
for ax, (metric, label) in zip(axes.flat, panels):
    curves = np.array([[getattr(row, metric) for row in rows] for rows in runs])
    mean = curves.mean(axis=0)
    std = curves.std(axis=0)
    ax.plot(steps, mean, color="tab:blue")
    ax.fill_between(steps, mean - std, mean + std, alpha=0.25, color="tab:blue")
    if metric in ("bellman_loss", "kl_prev_policy") and mean.min() > 0:
        ax.set_yscale("log")
    ax.set_xlabel("environment steps")
    ax.set_title(f"{label} ({curves.shape[0]} seeds)")
    ax.grid(alpha=0.3)

fig.tight_layout()
fig.savefig(out_path, dpi=120)
print(f"wrote {out_path} from {len(runs)} runs under {sweep_dir}")
