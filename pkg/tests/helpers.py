"""Seeded corpus shortcuts shared by the tests."""

from innerbody.corpus import SplitMix64, random_gauge, random_polytope, random_pythagorean_polytope


def seeded_polytope(seed, dim=3):
    return random_polytope(SplitMix64(seed), dim)


def seeded_gauge(seed, dim=3):
    return random_gauge(SplitMix64(seed ^ 0x5EED), dim)


def seeded_pythagorean(seed, dim=3):
    return random_pythagorean_polytope(SplitMix64(seed), dim, n_facets=6 if dim == 2 else 10)
