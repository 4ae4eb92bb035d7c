#!/usr/bin/env python3
"""Full-dataset reproduction run on Inspec (or any docs+keys dataset).

Not part of CI: the dataset must be downloaded separately (see README).
Runs the extractor and the TF-IDF baseline at k=10 with the stemmed matcher,
prints macro Precision/Recall/F1, and checks two bars: macro F1 at or above
ACCEPTANCE_FLOOR, and the extractor beating the baseline on the same run.
Exits 0 when both hold, 1 otherwise.

Usage:
    python scripts/reproduce_inspec.py /path/to/Inspec [--k 10] [--jobs N]
"""

import argparse
import os
import sys
import time

from frake.config import FrakeConfig
from frake.evaluate import load_dataset, run_benchmark

REFERENCE_F1 = 0.589  # reference figure for this configuration
ACCEPTANCE_FLOOR = 0.45


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("dataset", help="dataset directory (docs+keys layout)")
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--matcher", choices=("exact", "stemmed"), default="stemmed")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--lang", default="en")
    args = parser.parse_args()

    records = load_dataset(args.dataset, language=args.lang)
    print(f"loaded {len(records)} documents from {args.dataset}")
    config = FrakeConfig(language=args.lang, k=args.k, matcher=args.matcher)

    started = time.perf_counter()
    frake_report = run_benchmark(records, config, extractor="frake", jobs=args.jobs)
    frake_seconds = time.perf_counter() - started
    tfidf_report = run_benchmark(records, config, extractor="tfidf")

    print(f"\nextractor=frake  (k={args.k}, matcher={args.matcher}, {frake_seconds:.1f}s)")
    print(f"  macro P@{args.k}:  {frake_report.macro_precision:.4f}")
    print(f"  macro R@{args.k}:  {frake_report.macro_recall:.4f}")
    print(f"  macro F1@{args.k}: {frake_report.macro_f1:.4f}")
    print(f"extractor=tfidf")
    print(f"  macro F1@{args.k}: {tfidf_report.macro_f1:.4f}")
    print(f"\nreference F1@10 for this configuration: {REFERENCE_F1}")

    ok = True
    if frake_report.macro_f1 >= ACCEPTANCE_FLOOR:
        print(f"[PASS] macro F1 {frake_report.macro_f1:.4f} >= floor {ACCEPTANCE_FLOOR}")
    else:
        print(f"[FAIL] macro F1 {frake_report.macro_f1:.4f} < floor {ACCEPTANCE_FLOOR}")
        ok = False
    if frake_report.macro_f1 > tfidf_report.macro_f1:
        print("[PASS] frake beats the TF-IDF baseline on this run")
    else:
        print("[FAIL] frake does not beat the TF-IDF baseline on this run")
        ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
