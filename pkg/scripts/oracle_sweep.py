"""Compare every closed-form characteristic number with the ring oracle over many complexes."""
import argparse
import time
from dataclasses import dataclass

from torbord.enumeration import EXHAUSTIVE_MAX_M, all_complexes, sample_complexes
from torbord.oracle import CHECKS, verify


@dataclass
class SweepConfig:
    m_values: tuple = (2, 3, 4, 5, 6, 7)
    exhaustive_up_to: int = 4
    samples: int = 200
    seed: int = 0
    checks: tuple = CHECKS


def complexes_for(cfg: SweepConfig, m: int):
    if m <= min(cfg.exhaustive_up_to, EXHAUSTIVE_MAX_M):
        return list(all_complexes(m))
    return sample_complexes(m, cfg.samples, cfg.seed, canonical=False)


def sweep(cfg: SweepConfig) -> int:
    total_bad = 0
    for m in cfg.m_values:
        t0 = time.perf_counter()
        Ks = complexes_for(cfg, m)
        checked = bad = 0
        for K in Ks:
            rep = verify(K, cfg.checks)
            checked += rep.checked
            if not rep.ok:
                bad += 1
                print(f"  mismatch on {K}: {rep.mismatches}")
        total_bad += bad
        print(f"m={m}: {len(Ks)} complexes, {checked} numbers, {bad} failing, {time.perf_counter() - t0:.2f}s")
    return total_bad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=list(SweepConfig.m_values))
    ap.add_argument("--exhaustive-up-to", type=int, default=SweepConfig.exhaustive_up_to)
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SweepConfig(tuple(args.m), args.exhaustive_up_to, args.samples, args.seed)
    raise SystemExit(1 if sweep(cfg) else 0)


if __name__ == "__main__":
    main()
