"""Desk-scale experiments: ablation ordering, Secret Room learnability, estimator bias.

Runs are cached under ``results/``; rerunning the script only trains what is
missing (a stored run is reused only when its embedded config matches).

    python demos/desk_experiments.py [--only bias,push_box,secret_room,push_box_extra]
"""

import argparse
import time
from pathlib import Path

from influmarl.harness.ablation import final_scores, run_ablation_suite, sign_test
from influmarl.harness.bias_bench import bias_bench, final_errors, write_bias_csv
from influmarl.harness.desk import SEEDS, bias_config, desk_config, load_bias_seed, seed_bench

ROOT = Path(__file__).resolve().parent.parent / "results"
PHASES = ("bias", "push_box", "secret_room", "push_box_extra")


def run_bias(root=ROOT):
    bench = bias_config()
    out = root / "bias_bench"
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for seed in bench.seeds:
        cached = load_bias_seed(out, bench, seed)
        if cached is None:
            t = time.time()
            cached = bias_bench(seed_bench(bench, seed), out=out / f"seed{seed}.csv")
            print(f"bias seed {seed}: {time.time() - t:.0f}s", flush=True)
        rows.extend(cached)
    write_bias_csv(rows, bench, out / "bias.csv")
    errs = final_errors(rows)
    wins = sum(m <= s for s, m in errs.values())
    print(f"bias bench: multi at least as accurate on {wins}/{len(errs)} seeds", flush=True)


def run_push_box(modes, root=ROOT):
    rows = run_ablation_suite(desk_config("push_box"), SEEDS, root / "push_box", modes=modes)
    scores = final_scores(rows)
    for mode in modes:
        print(mode, [round(scores[(mode, s)], 2) for s in SEEDS], flush=True)
    if "full" in modes and "no_f" in modes:
        wins, n, p = sign_test([scores[("full", s)] for s in SEEDS], [scores[("no_f", s)] for s in SEEDS])
        print(f"full > no_f on {wins}/{n} seeds, sign-test p = {p:.4f}", flush=True)


def run_secret_room(root=ROOT):
    rows = run_ablation_suite(desk_config("secret_room"), SEEDS, root / "secret_room", modes=("full",))
    scores = final_scores(rows, key="success_rate")
    print("secret room success", [round(scores[("full", s)], 3) for s in SEEDS], flush=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", default=",".join(PHASES))
    args = ap.parse_args()
    for phase in args.only.split(","):
        t = time.time()
        if phase == "bias":
            run_bias()
        elif phase == "push_box":
            run_push_box(("full", "no_f"))
        elif phase == "secret_room":
            run_secret_room()
        elif phase == "push_box_extra":
            run_push_box(("full", "no_f", "no_im", "symmetric"))
        else:
            raise SystemExit(f"unknown phase {phase!r}")
        print(f"[{phase}] done in {time.time() - t:.0f}s", flush=True)


if __name__ == "__main__":
    main()
