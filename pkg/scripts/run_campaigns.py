"""Run the standard verification campaigns and write one JSON report per run.

    python3 scripts/run_campaigns.py --out results/
"""
import argparse
import json
import time
from pathlib import Path

from addext.harness import Campaign, threshold_n_scan, verify_theorem

CAMPAIGNS = [
    Campaign("prop1", n=2, k_max=4),
    Campaign("prop1", p=3, n=2, k_max=2),
    Campaign("prop2", n_max=3, k_max=2, budget=2**26),
    Campaign("prop3", n=3, k_L=1),
    Campaign("prop3", n=4, k_L=3, mode="pruned", budget=2**25, cross_check=False),
    Campaign("prop4"),
    Campaign("prop4", m=4, n=4, maps=False),
    Campaign("prop5", n=2, k_L=1),
    Campaign("prop5", n=2, k_L=1, catalog=True),
    Campaign("lemma_mds", n=3, k_L=2),
    Campaign("lemma_mds", m=3, n=4, k_L=3),
    Campaign("lemma_linear", n_max=4, k_L=2),
    Campaign("lemma_linear", m=3, n_max=4, k_L=2),
]


def slug(c: Campaign) -> str:
    parts = [c.theorem] + [f"{k}{v}" for k, v in sorted(c.params().items())
                           if k in ("p", "s", "m", "n", "k_L", "k_max", "n_max")]
    if c.catalog:
        parts.append("catalog")
    return "_".join(str(x) for x in parts)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--only", help="run campaigns whose theorem id matches")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for c in CAMPAIGNS:
        if args.only and c.theorem != args.only:
            continue
        start = time.perf_counter()
        r = verify_theorem(c)
        name = slug(c)
        (out / f"{name}.json").write_text(json.dumps(r.to_json(timing=True), indent=2))
        print(f"{name:40s} {r.verdict:5s} cases={r.cases_checked:<9d} mode={r.mode:11s} "
              f"{time.perf_counter() - start:7.1f}s")
    for q, k in [(2, 2), (2, 3), (3, 2)]:
        r = threshold_n_scan(q, k, q + 2 if q == 2 else 4)
        (out / f"threshold_q{q}_k{k}.json").write_text(json.dumps(r.to_json(timing=True), indent=2))
        counts = [row["nontrivial"] for row in r.details["scan"]]
        print(f"threshold q={q} k={k}: {counts} {r.verdict}")


if __name__ == "__main__":
    main()
