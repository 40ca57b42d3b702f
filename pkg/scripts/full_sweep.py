"""Unabridged path-independence sweep.

Checks that every normalizing path of every shuffle yields the same arrow
grid, over ALL shuffles with colours within 1..r, total length <= max-len
and every dimension <= max-dim.  At the full bound (r=3, len=5, dims=3)
this is ~1.8e7 shuffles of which ~8.7e6 admit several paths; expect hours.
The acceptance tests run the feasible tiers; this script exists to run the
stated bound without abridgement.
"""

import argparse
import pathlib
import sys
import time
from math import prod

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from barlax import FinSetSplitModel, NormalizingPath, ObjectGrid, grids_equal, phi
from barlax.suites import iter_shuffles, paths_of_colour_word


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, default=3)
    parser.add_argument("--max-len", type=int, default=5)
    parser.add_argument("--max-dim", type=int, default=3)
    parser.add_argument("--split", type=int, default=1)
    parser.add_argument("--progress-every", type=int, default=100_000)
    args = parser.parse_args()

    model = FinSetSplitModel(args.r, args.split)
    start = time.time()
    total = multi = paths_checked = failures = 0
    for sh in iter_shuffles(args.r, args.max_len, args.max_dim):
        total += 1
        swap_lists = paths_of_colour_word(sh.colour_word())
        if len(swap_lists) > 1:
            multi += 1
            grid = ObjectGrid(sh.src_dims, (1,) * prod(sh.src_dims))
            reference = phi(model, sh, grid, NormalizingPath(sh, swap_lists[0]))
            for swaps in swap_lists[1:]:
                paths_checked += 1
                other = phi(model, sh, grid, NormalizingPath(sh, swaps))
                if not grids_equal(reference, other):
                    failures += 1
                    print(f"DISAGREEMENT at {sh} swaps {swaps}")
        if total % args.progress_every == 0:
            rate = total / (time.time() - start)
            print(
                f"  {total} shuffles ({multi} multi-path, {paths_checked} "
                f"path comparisons), {rate:.0f}/s",
                flush=True,
            )
    elapsed = time.time() - start
    print(
        f"done: {total} shuffles, {multi} with several paths, "
        f"{paths_checked} path comparisons, {failures} failures, {elapsed:.0f}s"
    )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
