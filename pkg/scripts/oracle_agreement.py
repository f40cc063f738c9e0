"""Compare Eliahou-Kervaire Betti numbers with the Koszul oracle on random stable ideals."""
import random
import time
from dataclasses import dataclass

from _config import parse_config
from lexdepth.resolution import ek_betti, koszul_betti, taylor_bound
from lexdepth.sampling import random_stable_ideal


@dataclass
class Config:
    seed: int = 0
    count: int = 500
    max_n: int = 4
    max_gens: int = 5
    max_deg: int = 4


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    t = time.perf_counter()
    disagree = over = 0
    for _ in range(cfg.count):
        I = random_stable_ideal(rng, cfg.max_n, cfg.max_gens, cfg.max_deg)
        B = koszul_betti(I)
        disagree += ek_betti(I) != B
        over += B.proj_dim > taylor_bound(I)
    print(f"{cfg.count} ideals  disagreements={disagree}  taylor_violations={over}  "
          f"{time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main(parse_config(Config, description=__doc__))
