#!/usr/bin/env python3
"""Run every verification suite and dump the reports.

Emits one JSON line per report (stable key order, so diffing two runs is
meaningful), then a per-suite summary block on stderr.  Exit code mirrors
the CLI contract: 0 all holds/vacuous, 1 something failed, 3 a budget ran
out somewhere.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from posetideals.serialize import json_dumps
from posetideals.verification import SUITES, generate_corpus, run_suite, summarize


@dataclass(frozen=True)
class RunConfig:
    max_n: int = 5
    budget: int | None = None
    k: int = 3
    out: str = "-"


def run(cfg: RunConfig) -> int:
    sink = sys.stdout if cfg.out == "-" else open(cfg.out, "w")
    corpus = generate_corpus(cfg.max_n)
    worst = 0
    try:
        for name in SUITES:
            kwargs = {"max_n": cfg.max_n, "k": cfg.k}
            if cfg.budget is not None:
                kwargs["budget"] = cfg.budget
            reports = run_suite(name, **kwargs)
            for r in reports:
                sink.write(json_dumps(r.to_json()) + "\n")
            verdicts = {r.verdict for r in reports}
            if "fails" in verdicts:
                worst = max(worst, 1)
            if "unknown" in verdicts:
                worst = max(worst, 3)
            print(f"{name}: {summarize(reports, corpus)}", file=sys.stderr)
    finally:
        if sink is not sys.stdout:
            sink.close()
    return worst


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--budget", type=int, default=None)
    ap.add_argument("--k", type=int, default=3, help="atoms-lattice size for kurepa")
    ap.add_argument("--out", default="-", help="report sink, '-' for stdout")
    ns = ap.parse_args(argv)
    return run(RunConfig(ns.max_n, ns.budget, ns.k, ns.out))


if __name__ == "__main__":
    sys.exit(main())
