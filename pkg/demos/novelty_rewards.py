"""How the novelty signal shapes rewards.

The influencer's (observation, action) pairs train a small autoencoder; its
reconstruction error psi is high on rarely visited pairs. The influencer is
paid lambda * psi on top of the task reward, while each influencee is
penalised for deviating from its own policy, with the penalty switched off
(exp(-omega * psi) -> 0) when the influencer is doing something novel.
"""

import numpy as np

from influmarl.intrinsic import IntrinsicConfig, build_autoencoder, compose_rewards, psi, train_autoencoder

rng = np.random.default_rng(0)
ae = build_autoencoder(obs_dim=6, act_dim=5, seed=0)

# the influencer keeps to the lower-left corner of the grid
for step in range(400):
    obs = rng.uniform(0.0, 0.3, size=(256, 6))
    acts = np.eye(5)[rng.integers(0, 5, 256)]
    loss = train_autoencoder(ae, obs, acts)
print(f"reconstruction loss after training: {loss:.4f}")

familiar = psi(ae, rng.uniform(0.0, 0.3, 6), np.eye(5)[0])
novel = psi(ae, rng.uniform(0.7, 1.0, 6), np.eye(5)[0])
print(f"psi familiar {familiar:.3f}, psi novel {novel:.3f}")

cfg = IntrinsicConfig(lambda_pi=0.1, omega=0.1)
for name, value in (("familiar", familiar), ("novel", novel)):
    r = compose_rewards([0.0, 0.0], {0: value}, [0.0, 1.0], cfg, "full", influencers=[0])
    print(f"{name:>8}: influencer {r[0]:+.4f}, off-policy influencee {r[1]:+.4f}")
