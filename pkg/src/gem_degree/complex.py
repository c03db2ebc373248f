"""Simplex counts of the complex K(Γ) encoded by a closed gem.

K(Γ) has one k-simplex with vertex labels C (|C| = k+1) for each component of
Γ restricted to the complementary colors. Nothing is materialised beyond the
counts.
"""

from itertools import combinations
from typing import Dict, Tuple

from .gem_core import require_closed, residue_count
from .models import FVector, Gem


def simplex_counts(gem: Gem) -> Dict[Tuple[int, ...], int]:
    """Number of simplices of K(Γ) per nonempty label set C."""
    require_closed(gem)
    everything = set(gem.colors)
    counts: Dict[Tuple[int, ...], int] = {}
    for size in range(1, gem.dimension + 2):
        for labels in combinations(gem.colors, size):
            counts[labels] = residue_count(gem, everything - set(labels))
    return counts


def f_vector(gem: Gem) -> FVector:
    """(f_0, ..., f_n) of K(Γ).

    Raises:
        NotClosed: the gem has boundary vertices.
    """
    totals = [0] * (gem.dimension + 1)
    for labels, count in simplex_counts(gem).items():
        totals[len(labels) - 1] += count
    return FVector(counts=tuple(totals))


def euler_characteristic(gem: Gem) -> int:
    """Σ (-1)^k f_k."""
    return f_vector(gem).euler_characteristic()


def num_vertices_of_K(gem: Gem) -> int:
    """f_0 = Σ_j g_{Δ_n \\ {j}}; equals n+1 exactly for crystallizations."""
    require_closed(gem)
    everything = set(gem.colors)
    return sum(residue_count(gem, everything - {j}) for j in gem.colors)
