"""Anatomy of the growing network.

Each growth step adds a block of neurons that read every existing feature,
then freezes.  The two Q-heads are maintained by zero-padding and adding
weight matrices, so the sum head always equals the sum of every Q-estimate
ever merged.  This script grows a network by hand and verifies the
bookkeeping at each step.
"""

import numpy as np

from cascade_rl.cascade_net import CascadeNetwork
from cascade_rl.numerics import Rng

rng = Rng(42)
net = CascadeNetwork(state_dim=3, action_count=2)
probe = rng.split(0).uniform(-1, 1, size=(4, 3))

print(f"fresh net: feature_dim={net.feature_dim}, q_sum(probe)={net.q_sum(probe[0])}")
print()

for step in range(3):
    net.grow(4, rng.split(1, step))
    print(f"--- growth step {step + 1}: opened 4 neurons ---")
    print(f"  delta right after grow: {net.delta(probe[0])}   (zero function)")

    # Pretend training happened: give the correction head some weights.
    params = net.trainable_params()
    params["delta_weights"][...] = rng.split(2, step).uniform(
        -0.5, 0.5, params["delta_weights"].shape
    )
    params["delta_bias"][...] = rng.split(3, step).uniform(-0.5, 0.5, 2)

    q_before = net.q_last(probe)
    q_sum_before = net.q_sum(probe)
    delta = np.stack([net.delta(s) for s in probe])
    net.freeze_and_merge()

    print(f"  feature_dim after merge: {net.feature_dim} (= 3 + 4 * {step + 1})")
    print(
        "  q_last == old q_last + delta:",
        np.allclose(net.q_last(probe), q_before + delta, atol=1e-12),
    )
    print(
        "  q_sum  == old q_sum + new q_last:",
        np.allclose(net.q_sum(probe), q_sum_before + net.q_last(probe), atol=1e-12),
    )
    print(f"  parameters so far: {net.param_count()}")
    print()

print("frozen blocks reject writes:")
try:
    net.blocks[0].weights[0, 0] = 1.0
except ValueError as exc:
    print(f"  ValueError: {exc}")

print()
data = net.to_bytes()
clone = CascadeNetwork.from_bytes(data)
print(
    f"checkpoint round-trip: {len(data)} bytes, "
    f"bit-identical={clone.to_bytes() == data}"
)
