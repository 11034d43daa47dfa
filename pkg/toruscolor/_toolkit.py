from toruscolor._coloring import RandomListGenerator
from toruscolor._components import ComponentSpec, impl
from toruscolor._discharging import builtin_rules
from toruscolor._graph import CycleFinder
from toruscolor._oracle import OracleSolver
from toruscolor._rules import rules_file
from toruscolor._structures import ClassChecker


def default_components() -> ComponentSpec:
    """
    Tunable toolkit parts, configured from TOML tables of the same names::

        [class_checker]
        triangle_mode = 'faces'

        [oracle]
        node_budget = 1_000_000
        workers = 4

        [rules]
        -impl = 'rules_file'
        path = 'my.rules'
    """

    return ComponentSpec([
        impl('cycle_finder', CycleFinder),
        impl('class_checker', ClassChecker),
        impl('oracle', OracleSolver),
        impl('list_generator', RandomListGenerator),
        impl('rules', builtin_rules),
        impl('rules_file', rules_file),
    ])
