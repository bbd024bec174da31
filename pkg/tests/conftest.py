import random

from antimagic.graphs import NecklaceSpec


def random_valid_necklace_specs(count: int, seed: int = 12345,
                                max_cycles: int = 6, max_len: int = 9):
    """Deterministic stream of valid necklace specs (middle cycles keep
    both split sides >= 2)."""
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        t = rng.randint(2, max_cycles)
        lengths, splits = [], []
        for i in range(t):
            middle = 0 < i < t - 1
            n = rng.randint(4 if middle else 3, max_len)
            lo_min = 2 if middle else 1
            up = rng.randint(lo_min, n - lo_min)
            lengths.append(n)
            splits.append((up, n - up))
        spec = NecklaceSpec(tuple(lengths), tuple(splits))
        try:
            spec.validate()
        except Exception:
            continue
        specs.append(spec)
    return specs
