"""Random Hilbert functions: tally depth sets and confirm every witness."""
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from _config import parse_config
from lexdepth.depthset import classify, depth_set, witness_ideal
from lexdepth.hilbert import hilbert_function
from lexdepth.resolution import depth_any
from lexdepth.sampling import random_deep_o_sequence, random_o_sequence


@dataclass
class Config:
    seed: int = 0
    count: int = 300
    max_n: int = 5
    max_window: int = 6
    deep_fraction: float = 0.5


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    sets, failures, done = Counter(), 0, 0
    while done < cfg.count:
        n = rng.randint(2, cfg.max_n)
        if rng.random() < cfg.deep_fraction:
            H = random_deep_o_sequence(rng, n, rng.randint(2, cfg.max_window))
        else:
            H = random_o_sequence(rng, n, rng.randint(1, cfg.max_window))
        if H is None:
            continue
        done += 1
        kind = "critical" if classify(H).critical else "noncritical"
        ds = depth_set(H)
        sets[f"{kind} n={n} {ds}"] += 1
        top = max(H.D, H.settle_degree) + 2
        for r in ds.members():
            W = witness_ideal(H, r)
            ok = [hilbert_function(W, q) for q in range(top)] == list(H.prefix(top)) and depth_any(W) == r
            failures += not ok
    print(json.dumps({"config": asdict(cfg), "failures": failures, "depth_sets": dict(sorted(sets.items()))},
                     indent=2, sort_keys=True))


if __name__ == "__main__":
    main(parse_config(Config, description=__doc__))
