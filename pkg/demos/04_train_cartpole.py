"""A small end-to-end training run on the cart-pole task.

Ten iterations of 2000 steps each (a fraction of a full experiment, which
uses 100 iterations of 10000 steps) are enough to watch the mechanics:
returns rise, the Bellman residual falls, the policy's entropy drops away
from 1.0, and successive policies drift apart and then settle.

Takes roughly a minute on a laptop.
"""

import tempfile
from pathlib import Path

from cascade_rl.cascade_net import CascadeNetwork
from cascade_rl.envs import make_env
from cascade_rl.numerics import Rng
from cascade_rl.training import TrainConfig, evaluate_policy, train

config = TrainConfig(
    env="cartpole",
    eta=0.1,
    n_neurons=10,
    epochs=32,
    nb_iter=10,
    nb_samp=2000,
    batch_size=64,
    gamma=0.99,
    seed=7,
    eval_episodes=3,
)

print(f"{'iter':>4} {'return':>8} {'loss':>10} {'entropy':>8} {'KL':>10} {'eval':>8}")

def show(row):
    print(
        f"{row.iteration:>4} {row.train_return_mean:>8.1f} "
        f"{row.bellman_loss:>10.4f} {row.normalized_entropy:>8.3f} "
        f"{row.kl_prev_policy:>10.6f} {row.eval_return_mean:>8.1f}"
    )

env = make_env(config.env)
net, rows = train(env, config, progress=show)

print()
print(f"final architecture: {sum(b.size for b in net.blocks)} hidden neurons "
      f"in {len(net.blocks)} blocks, {net.param_count()} parameters")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "net.bin"
    net.save(path)
    restored = CascadeNetwork.load(path)
    mean, std = evaluate_policy(restored, env, episodes=10, eta=config.eta, rng=Rng(99))
    print(f"restored checkpoint, 10 evaluation episodes: {mean:.1f} +- {std:.1f}")
