"""Enumerate monomial ideals sharing a Hilbert function and histogram their depths."""
import json
import random
from dataclasses import asdict, dataclass

from _config import parse_config
from lexdepth.depthset import classify, depth_set, explore
from lexdepth.lex import lexify
from lexdepth.sampling import random_deep_o_sequence, random_o_sequence


@dataclass
class Config:
    seed: int = 0
    count: int = 15
    n: int = 3
    degree_cap: int = 4
    node_limit: int = 200_000


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    rows, seen = [], set()
    while len(rows) < cfg.count:
        H = (random_deep_o_sequence(rng, cfg.n, rng.randint(2, 4)) if rng.random() < 0.3
             else random_o_sequence(rng, cfg.n, rng.randint(1, 4)))
        if H is None or H.prefix(8) in seen or lexify(H).max_degree > cfg.degree_cap:
            continue
        seen.add(H.prefix(8))
        rep = explore(H, cfg.degree_cap, node_limit=cfg.node_limit)
        rows.append({"h": list(H.prefix(H.D + 1)), "tail": H.tail.value,
                     "class": str(classify(H)), "depth_set": str(depth_set(H)),
                     "observed": {str(k): v for k, v in sorted(rep.observed.items())},
                     "complete": rep.complete, "consistent": rep.consistent})
    print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1, sort_keys=True))


if __name__ == "__main__":
    main(parse_config(Config, description=__doc__))
