"""Run every verification suite at the acceptance bounds and write reports.

One JSON-lines report per suite lands in the chosen directory; the exit
code is nonzero if any instance group fails.  Equivalent to a handful of
``barlax verify`` invocations.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from barlax.suites import SuiteConfig, run_suite

ACCEPTANCE = {
    "equations": SuiteConfig(suite="equations", r=4, max_size=3),
    "lemma43": SuiteConfig(suite="lemma43", r=3, max_dim=4),
    "lemma44": SuiteConfig(suite="lemma44", r=3, max_dim=4, max_len=4, trials=120),
    "hexagon": SuiteConfig(suite="hexagon", r=3, max_dim=3),
    "paths": SuiteConfig(suite="paths", r=3, max_len=3, trials=400),
    "lax": SuiteConfig(suite="lax", r=4, max_dim=3, trials=50),
    "segal": SuiteConfig(suite="segal", r=3),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--suite", choices=sorted(ACCEPTANCE), default=None)
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    names = [args.suite] if args.suite else sorted(ACCEPTANCE)
    bad = 0
    for name in names:
        records = run_suite(ACCEPTANCE[name])
        path = out_dir / f"{name}.jsonl"
        path.write_text("\n".join(rec.to_json() for rec in records) + "\n")
        failures = [rec for rec in records if not rec.verdict]
        bad += len(failures)
        checks = sum(rec.elapsed for rec in records)
        print(
            f"{name:10s} {len(records) - len(failures)}/{len(records)} groups pass "
            f"({checks} checks) -> {path}"
        )
        for rec in failures[:5]:
            print(f"  FAIL {rec.instance}: {rec.witness}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
