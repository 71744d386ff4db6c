"""The four built-in tasks behind one contract.

Every environment exposes reset(rng) / step(action) with deterministic
dynamics; all randomness comes from the Rng you pass in, so a (seed, action
sequence) pair pins a trajectory bit-for-bit.  Golden files freeze that
mapping in the repository.
"""

import numpy as np

from cascade_rl.envs import golden, make_env
from cascade_rl.envs.base import ENV_NAMES
from cascade_rl.numerics import Rng

print(f"{'task':<12} {'obs dim':>7} {'actions':>7} {'limit':>6}  reward structure")
for name in ENV_NAMES:
    env = make_env(name)
    spec = env.spec
    lo, hi = spec.reward_range
    print(
        f"{name:<12} {spec.state_dim:>7} {spec.action_count:>7} "
        f"{spec.max_episode_steps:>6}  per-step in [{lo:g}, {hi:g}]"
    )

print()
print("=== random-policy episodes ===")
for name in ENV_NAMES:
    env = make_env(name)
    action_rng = Rng(7)
    returns = []
    lengths = []
    for episode in range(5):
        state = env.reset(Rng(100 + episode))
        total = 0.0
        while not state.done:
            state, reward = env.step(
                int(action_rng.integers(0, env.spec.action_count))
            )
            total += reward
        returns.append(total)
        lengths.append(state.steps_elapsed)
    print(
        f"  {name:<12} returns {np.array2string(np.array(returns), precision=1)}"
        f"  lengths {lengths}"
    )

print()
print("=== pendulum torque discretization ===")
for k in (2, 3, 5):
    env = make_env("pendulum", pendulum_k=k)
    print(f"  k={k}: torques {env.torques}")

print()
print("=== golden trajectory format (first 3 lines, cartpole script 0) ===")
env = make_env("cartpole")
seed, actions = golden.builtin_script(env, 0)
rows = golden.replay_script(env, seed, actions)
for line in golden.format_rows(rows).splitlines()[:3]:
    print(f"  {line}")
print("  (step_index action obs... reward terminated truncated)")
