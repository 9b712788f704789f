"""Run every verifier over a seeded batch of random hypergraphs and print a summary table.

    python3 scripts/run_campaign.py --count 1000 --seed 20240601 [--json out.json]
"""

import argparse
import dataclasses
import json
import time

from hyperinterlace.campaign import THEOREMS, InstanceConfig, run_campaign


@dataclasses.dataclass(frozen=True)
class CampaignConfig:
    count: int = 1000
    seed: int = 20240601
    tolerance: float = 1e-8
    subsets: int = 5
    instance: InstanceConfig = InstanceConfig()


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--count", type=int, default=CampaignConfig.count)
    parser.add_argument("--seed", type=int, default=CampaignConfig.seed)
    parser.add_argument("--tolerance", type=float, default=CampaignConfig.tolerance)
    parser.add_argument("--theorem", action="append", choices=THEOREMS, help="default: all")
    parser.add_argument("--json", help="write all summaries to this file")
    args = parser.parse_args()
    config = CampaignConfig(args.count, args.seed, args.tolerance)

    rows = []
    print(f"{'theorem':<10} {'reports':>8} {'failed':>7} {'skipped':>8} {'comp.fail':>9} {'worst margin':>13} {'time':>7}")
    for theorem in args.theorem or THEOREMS:
        start = time.perf_counter()
        s = run_campaign(theorem, config.count, config.seed, config.tolerance, config.instance, config.subsets)
        elapsed = time.perf_counter() - start
        margin = "-" if s.worst_margin is None else f"{s.worst_margin:.3g}"
        print(f"{theorem:<10} {s.reports:>8} {s.failed:>7} {s.skipped:>8} {s.companion_failures:>9} {margin:>13} {elapsed:>6.1f}s")
        rows.append({**s.as_dict(), "seconds": elapsed})
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"config": dataclasses.asdict(config), "summaries": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
