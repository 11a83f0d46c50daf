import random

from monolc import MonomialIdeal, parse_ideal, random_ideal


def corpus(count: int) -> list[MonomialIdeal]:
    """Seed-deterministic pool of small random ideals (n <= 3,
    exponents <= 3, at most 4 generators)."""
    out = []
    for s in range(count):
        r = random.Random(s)
        n = r.randint(1, 3)
        max_exp = r.randint(1, 3)
        gens = r.randint(0, 4)
        out.append(random_ideal(n, max_exp, gens, seed=10_000 + 7919 * s))
    return out


def golden_ideal() -> MonomialIdeal:
    return parse_ideal("vars x y\ngens x^2, x*y")
