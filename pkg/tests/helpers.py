"""Helpers shared by the test modules and step definitions."""

from typing import Dict, List, Tuple

from gem_degree.gem_core import new_gem
from gem_degree.models import Gem

# The construction grid the property suites run over
GRID_N = range(2, 7)
GRID_D = range(1, 6)


def grid() -> List[Tuple[int, int]]:
    return [(n, d) for n in GRID_N for d in GRID_D]


def edge_set(gem: Gem) -> Dict[Tuple[str, str, int], int]:
    """Edge multiset keyed by labels, so gems with different id orders compare."""
    keyed: Dict[Tuple[str, str, int], int] = {}
    for a, b, color in gem.edges:
        x, y = sorted((str(gem.labels[a]), str(gem.labels[b])))
        keyed[(x, y, color)] = keyed.get((x, y, color), 0) + 1
    return keyed


def reversed_ids(gem: Gem) -> Gem:
    """The same gem with vertex ids numbered backwards; labels travel with their vertex."""
    last = gem.vertex_count - 1
    return new_gem(
        gem.dimension,
        [gem.labels[last - i] for i in range(gem.vertex_count)],
        [(last - a, last - b, c) for a, b, c in gem.edges],
    )
