#!/usr/bin/env python3
"""
Write a seeded corpus of (P6,C5)-free graphs as DIMACS files.
Use this to (re)build the directory fed to `run.py difftest --corpus`.

    python scripts/build_corpus.py corpus/ --count 200 --seed 1
"""
import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from tetrachrome.detectors import find_antihole  # noqa: E402
from tetrachrome.dimacs import write_dimacs  # noqa: E402
from tetrachrome.models import GenSpec  # noqa: E402
from tetrachrome.oracle import PRESETS, generate_free  # noqa: E402

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("directory")
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--min-n", type=int, default=7)
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args()

    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    with_antihole = 0
    for i in range(args.count):
        n = rng.randint(args.min_n, args.max_n)
        # every third instance comes from a preset so Phase II gets exercised
        preset = rng.choice(PRESETS) if i % 3 == 0 else None
        spec = GenSpec(n=n, p=rng.uniform(0.2, 0.8), seed=rng.randrange(2 ** 31), preset=preset)
        g = generate_free(spec)
        if find_antihole(g, 7, force=True) is not None:
            with_antihole += 1
        name = f"g{i:04d}_{preset or 'gnp'}.col"
        (out / name).write_text(write_dimacs(g, comments=[f"seed={spec.seed} p={spec.p:.3f}"]))

    print("=" * 60)
    print(f"Wrote {args.count} graphs to {out}")
    print(f"{with_antihole} of them contain a 7-antihole")
    print("=" * 60)
