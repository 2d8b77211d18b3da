"""Shared fixtures: the test corpus and group actions for each family.

Each corpus entry carries a singleton-cell orbit partition (from an
explicit subgroup of automorphisms) and generators witnessing
vertex-transitivity, so the quotient-assisted method is applicable
everywhere and the three spectrum methods can be cross-validated.
"""

from itertools import combinations

import pytest

from orbitspectra.graphs import (
    build_circulant,
    build_crown,
    build_cycle,
    build_johnson,
    build_lcr,
)
from orbitspectra.perms import (
    GeneratorSet,
    Permutation,
    lcr_automorphism_gens,
    lcr_stabilizer_gens,
    orbits,
)


def rotation_perm(n):
    return Permutation([(v + 1) % n for v in range(n)])


def reflection_perm(n):
    return Permutation([(-v) % n for v in range(n)])


def crown_sym_perm(n, alpha_images):
    """alpha in Sym([1..n]) acting simultaneously on both crown sides."""
    return Permutation(
        [alpha_images[v] for v in range(n)] + [n + alpha_images[v] for v in range(n)]
    )


def crown_side_swap(n):
    return Permutation([n + v for v in range(n)] + list(range(n)))


def crown_transitive_gens(n):
    swap01 = list(range(n))
    swap01[0], swap01[1] = 1, 0
    cyc = [(v + 1) % n for v in range(n)]
    return GeneratorSet.of(
        crown_sym_perm(n, swap01), crown_sym_perm(n, cyc), crown_side_swap(n)
    )


def crown_stabilizer_gens(n):
    """Stabilizer of the first left vertex: Sym of the remaining points."""
    swap12 = list(range(n))
    swap12[1], swap12[2] = 2, 1
    cyc = [0] + [1 + (v + 1) % (n - 1) for v in range(n - 1)]
    return GeneratorSet.of(crown_sym_perm(n, swap12), crown_sym_perm(n, cyc))


def johnson_vertices(n, k):
    # colex order, matching the builder's canonical vertex order
    return sorted(combinations(range(1, n + 1), k), key=lambda s: tuple(reversed(s)))


def johnson_induced_perm(n, k, alpha_images):
    verts = johnson_vertices(n, k)
    index = {s: t for t, s in enumerate(verts)}
    return Permutation(
        index[tuple(sorted(alpha_images[x - 1] + 1 for x in s))] for s in verts
    )


def johnson_transitive_gens(n, k):
    swap01 = list(range(n))
    swap01[0], swap01[1] = 1, 0
    cyc = [(v + 1) % n for v in range(n)]
    return GeneratorSet.of(
        johnson_induced_perm(n, k, swap01), johnson_induced_perm(n, k, cyc)
    )


def johnson_pair_stabilizer_gens(n):
    """Setwise stabilizer of {1,2} acting on the 2-subsets of [1..n]."""
    swap01 = list(range(n))
    swap01[0], swap01[1] = 1, 0
    swap23 = list(range(n))
    swap23[2], swap23[3] = 3, 2
    tail_cycle = [0, 1] + [2 + (v + 1) % (n - 2) for v in range(n - 2)]
    return GeneratorSet.of(
        johnson_induced_perm(n, 2, swap01),
        johnson_induced_perm(n, 2, swap23),
        johnson_induced_perm(n, 2, tail_cycle),
    )


def corpus_entries():
    """(name, graph, singleton-cell orbit partition, transitivity gens)."""
    entries = []
    for n in (4, 5, 6, 7):
        g = build_cycle(n)
        pi = orbits(GeneratorSet.of(reflection_perm(n)))
        entries.append((f"cycle({n})", g, pi, GeneratorSet.of(rotation_perm(n))))
    for n, conn in ((6, (1, 2)), (8, (1, 3)), (8, (1, 4)), (12, (1, 2, 3))):
        g = build_circulant(n, conn)
        pi = orbits(GeneratorSet.of(reflection_perm(n)))
        entries.append(
            (f"circulant({n},{conn})", g, pi, GeneratorSet.of(rotation_perm(n)))
        )
    for n in range(3, 9):
        g = build_crown(n)
        pi = orbits(crown_stabilizer_gens(n))
        entries.append((f"crown({n})", g, pi, crown_transitive_gens(n)))
    for n, k in ((4, 2), (5, 2), (6, 2), (5, 1)):
        g = build_johnson(n, k)
        if k == 2:
            pi = orbits(johnson_pair_stabilizer_gens(n))
        else:
            # stabilizer of the 1-subset {1}: permute the other points freely
            swap12 = list(range(n))
            swap12[1], swap12[2] = 2, 1
            tail_cycle = [0] + [1 + (v + 1) % (n - 1) for v in range(n - 1)]
            pi = orbits(
                GeneratorSet.of(
                    johnson_induced_perm(n, 1, swap12),
                    johnson_induced_perm(n, 1, tail_cycle),
                )
            )
        entries.append((f"johnson({n},{k})", g, pi, johnson_transitive_gens(n, k)))
    for n in (4, 5, 6):
        g = build_lcr(n)
        pi = orbits(lcr_stabilizer_gens(n))
        entries.append((f"lcr({n})", g, pi, lcr_automorphism_gens(n)))
    return entries


@pytest.fixture(scope="session")
def corpus():
    return corpus_entries()
