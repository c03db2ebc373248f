"""Bicolored cycle counts, χ_ε, ρ_ε and the regular genus of closed gems."""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from loguru import logger

from .errors import BadColor, BadParam, OddVertexCount
from .gem_core import require_closed, residue_count, residue_subgem, residues
from .models import (
    CyclicPermutation,
    Gem,
    GenusReport,
    PermutationGenus,
    SphereCertificate,
)

PermutationLike = Union[CyclicPermutation, Sequence[int]]


def bicolored_cycle_count(gem: Gem, i: int, j: int) -> int:
    """g_{i,j}: every component of Γ_{i,j} of a closed gem is a cycle."""
    require_closed(gem)
    if i == j:
        raise BadColor(f"a bicolored cycle needs two colors, got {i} twice")
    return residue_count(gem, (i, j))


def _pair_counts(gem: Gem) -> Dict[Tuple[int, int], int]:
    require_closed(gem)
    if gem.vertex_count % 2 != 0:
        raise OddVertexCount(f"gem has {gem.vertex_count} vertices")
    return {pair: residue_count(gem, pair) for pair in combinations(gem.colors, 2)}


def _order_of(gem: Gem, eps: PermutationLike) -> Tuple[int, ...]:
    order = tuple(eps.order) if isinstance(eps, CyclicPermutation) else tuple(eps)
    if sorted(order) != list(gem.colors):
        raise BadParam(f"{order} is not a cyclic permutation of 0..{gem.dimension}")
    return order


def _chi_from_counts(
    counts: Dict[Tuple[int, int], int], order: Sequence[int], n: int, vertices: int
) -> int:
    size = len(order)
    total = 0
    for index in range(size):
        a, b = order[index], order[(index + 1) % size]
        total += counts[(min(a, b), max(a, b))]
    return total + (1 - n) * vertices // 2


def chi(gem: Gem, eps: PermutationLike) -> int:
    """χ_ε(Γ) = Σ g_{ε_i ε_{i+1}} + (1-n)·V/2, indices mod n+1.

    ``eps`` may be any rotation or reversal; the value does not depend on it.
    """
    order = _order_of(gem, eps)
    return _chi_from_counts(_pair_counts(gem), order, gem.dimension, gem.vertex_count)


def rho(gem: Gem, eps: PermutationLike) -> Fraction:
    """ρ_ε(Γ) = 1 - χ_ε/2, exact."""
    return 1 - Fraction(chi(gem, eps), 2)


def canonical_permutations(n: int) -> Iterator[CyclicPermutation]:
    """Every cyclic permutation of Δ_n up to rotation and reversal.

    Yields n!/2 values for n >= 2 (one for n = 1), lexicographically.
    """
    if n < 1:
        raise BadParam(f"n must be >= 1, got {n}")
    for tail in permutations(range(1, n + 1)):
        if n == 1 or tail[0] < tail[-1]:
            yield CyclicPermutation(order=(0,) + tail)


def regular_genus(gem: Gem, workers: int = 1) -> GenusReport:
    """Scan every canonical ε and report χ_ε, ρ_ε and their minimum ρ(Γ).

    Args:
        gem: A closed gem with an even number of vertices.
        workers: Threads used for the scan (default: 1).

    Returns:
        GenusReport whose argmin is the lexicographically least minimizer.
    """
    counts = _pair_counts(gem)
    n, vertices = gem.dimension, gem.vertex_count
    candidates = list(canonical_permutations(n))

    def evaluate(batch: List[CyclicPermutation]) -> List[Tuple[CyclicPermutation, int]]:
        return [(eps, _chi_from_counts(counts, eps.order, n, vertices)) for eps in batch]

    if workers > 1 and len(candidates) > workers:
        size = -(-len(candidates) // workers)
        batches = [candidates[i : i + size] for i in range(0, len(candidates), size)]
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="genus") as pool:
            results = [row for part in pool.map(evaluate, batches) for row in part]
    else:
        results = evaluate(candidates)

    table: Dict[Tuple[int, ...], PermutationGenus] = {}
    best: Tuple[Fraction, Tuple[int, ...]] = (Fraction(10**9), ())
    for eps, value in results:
        genus = 1 - Fraction(value, 2)
        table[eps.order] = PermutationGenus(chi=value, rho=genus)
        best = min(best, (genus, eps.order))

    logger.debug(f"genus scan over {len(table)} permutations: minimum {best[0]}")
    return GenusReport(
        per_permutation=table,
        regular_genus=best[0],
        argmin=CyclicPermutation(order=best[1]),
    )


def _residues_have_genus_zero(gem: Gem) -> bool:
    """Every m-color residue (3 <= m <= n+1) has regular genus 0."""
    for size in range(3, gem.dimension + 2):
        for colors in combinations(gem.colors, size):
            for component in residues(gem, colors).components:
                sub = residue_subgem(gem, colors, component)
                if regular_genus(sub).regular_genus != 0:
                    logger.debug(
                        f"residue on colors {colors} through {gem.labels[component[0]]} "
                        "has positive genus"
                    )
                    return False
    return True


def certify_sphere(gem: Gem) -> SphereCertificate:
    """Sphere recognition by regular genus 0.

    ``hereditary_certificate`` additionally requires genus 0 on every residue
    with at least three colors (the inductive argument from 3-colored graphs
    upward).
    """
    genus = regular_genus(gem).regular_genus
    return SphereCertificate(
        is_sphere=genus == 0,
        regular_genus=genus,
        hereditary_certificate=genus == 0 and _residues_have_genus_zero(gem),
    )
