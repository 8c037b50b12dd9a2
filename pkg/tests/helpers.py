"""Fixture collections shared by the test modules."""

import random

from equiknot import fixtures
from equiknot.seifert import orthogonal_sum


def named_systems():
    """Valid integral systems with invertible symmetrization: worked examples plus seeded random ones."""
    out = [
        ("K13n1496", fixtures.k13n1496()),
        ("unknot-G", fixtures.unknot_g()),
        ("4_1-anchor", fixtures.figure_eight_anchor()),
        ("double-trefoil", fixtures.double(fixtures.TREFOIL)),
        ("double-figure-eight", fixtures.double(fixtures.FIGURE_EIGHT)),
        ("metabolic-double", fixtures.metabolic_double()[0]),
        ("anchor+anchor", orthogonal_sum(fixtures.figure_eight_anchor(), fixtures.figure_eight_anchor())),
        ("K13n1496+unknot-G", orthogonal_sum(fixtures.k13n1496(), fixtures.unknot_g())),
    ]
    rng = random.Random(20240611)
    for i in range(16):
        size = (2, 4, 4, 6, 6, 8)[i % 6]
        out.append((f"random-{i}", fixtures.random_system(rng, size)))
    return out


def random_forms(count=20, seed=7):
    """Random rational forms of sizes 4 to 12 built from symmetric structures."""
    rng = random.Random(seed)
    sizes = [2, 3, 4, 5, 6]
    return [fixtures.random_form(rng, sizes[i % len(sizes)]) for i in range(count)]
