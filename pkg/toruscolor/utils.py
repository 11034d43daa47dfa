from toruscolor._coloring import ListAssignment, RandomListGenerator
from toruscolor._discharging import format_rational
from toruscolor._graph import Graph

__all__ = ('format_rational', 'random_lists')


def random_lists(graph: Graph, size: int = 3, palette: int = 5, seed: int = 0) -> ListAssignment:
    """Lists of `size` colors out of `1..palette` per vertex, the same for the same seed."""

    return RandomListGenerator(size, palette).generate(graph, seed)
