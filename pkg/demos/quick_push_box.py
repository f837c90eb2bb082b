"""A short Push-Box run with the full method, then a look at the learned policy.

Push-Box pays 1000 only when both agents push the heavy box into a wall
together, so early evaluation rows are mostly zero. This run is a smoke test
sized for a few minutes; the desk-scale schedule is in desk_experiments.py.
"""

import sys
from pathlib import Path

from influmarl.harness import evaluate, make_config, train

out = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/quick_push_box")
cfg = make_config("push_box", episodes=200, eval_cadence=50, dtype="float32", seed=0)
trainer = train(cfg, out)

for row in trainer.metrics:
    print(f"episode {row['episode']:>5}  return {row['team_return']:8.1f}  success {row['success_rate']:.2f}  "
          f"F {row['f_value']:.4f}  psi {row['psi_mean']:.4f}")
print(f"influencer: agent {trainer.influencer}; checkpoint in {out}")
print(evaluate(out / "checkpoint.json", episodes=20, seed=1))
