import toruscolor.utils
from toruscolor._cli import CommandResult, main, run
from toruscolor._coloring import (
    CONSTRUCTIVE_IMPROPRIETY, CONSTRUCTIVE_LIST_SIZE, ColoringError, DefectiveColoring,
    ExtensionFailed, GuaranteeViolated, ListAssignment, ListTooSmall, RandomListGenerator,
    ReductionOutcome, ReductionPlan, ReductionStep, ReductionTrace, StuckReport, Verdict, Violation,
    ViolationKind, color_from_plan, extend_configuration, plan_reduction, reduce_and_color,
    verify_coloring,
)
from toruscolor._components import (
    ComponentSpec, Container, DependencyCycle, Impl, InvalidComponentType, impl,
    InvalidImplParam, MissingValue,
)
from toruscolor._components_config import (
    ComponentConfig, ComponentError, RefValue, ToolkitConfig, UnknownImpl, UnknownParam,
    check_toolkit_config, load_toolkit_config, read_toolkit_config, with_overrides,
)
from toruscolor._discharging import (
    BOUND_TEMPLATES, AuditReport, BoundTemplate, ChargeStage, ChargeState, ConstantCheck,
    StageError, TemplateCheck, Transfer, TransferLedger, applicable_template, apply_discharging,
    audit, audit_constants, builtin_rules, case1_vertex_floor, case2_vertex_bound_large_r1,
    case2_vertex_bound_small_r1, expected_total, initial_charges, replay_ledger,
)
from toruscolor._embedding import (
    EmbeddedGraph, EmbeddingRequired, NonPermutationRotation, adjacent_triangles_present,
    build_embedded_graph, embed_rotation,
)
from toruscolor._faces import Face, FaceSet, trace_faces
from toruscolor._formats import (
    CorpusEntry, FormatError, FormatParseError, GenusMismatch, MalformedGraph6, Palette,
    Provenance, UnknownVertex, emit_coloring, emit_corpus_entry, emit_graph6, emit_lists,
    emit_rotation, parse_coloring, parse_corpus_entry, parse_graph6, parse_lists, parse_rotation,
)
from toruscolor._generators import (
    ParameterOutOfRange, ParameterTooSmall, gen_complete, gen_cycle, gen_subdivision,
    gen_torus_grid,
)
from toruscolor._graph import (
    AsymmetricAdjacency, CapExceeded, CycleFinder, Graph, GraphError, InvalidVertex, NotSimple,
    has_cycle_of_length,
)
from toruscolor._oracle import (
    DEFAULT_NODE_BUDGET, BudgetExceeded, OracleSolver, Unsatisfiable, oracle_solve, search_order,
)
from toruscolor._rules import (
    Comparison, Condition, OverlappingSelectors, ParseError, Policy, Rule, RuleError, RuleSet,
    condition, emit_rules, face_rule, parse_rules, rules_file, vertex_rule,
)
from toruscolor._structures import (
    NOT_FOUND, ClassChecker, ClassReport, Configuration, ConfigurationKind, IncidenceCounts,
    NotFound, ObservationReport, ObservationResult, Witness, class_membership,
    configuration_holds, find_all_configurations, find_reducible_configuration,
    incidence_bound_violations, incidence_bounds_hold, incidence_counts, verify_observations,
)
from toruscolor._toolkit import default_components
from toruscolor._types import (
    Element, ElementKind, HalfEdge, ToruscolorError, TriangleMode, face, vertex,
)


__all__ = (
    'utils',

    'ToruscolorError',
    'HalfEdge',
    'Element',
    'ElementKind',
    'TriangleMode',
    'vertex',
    'face',

    'Graph',
    'CycleFinder',
    'has_cycle_of_length',
    'GraphError',
    'AsymmetricAdjacency',
    'NotSimple',
    'InvalidVertex',
    'CapExceeded',
    'Face',
    'FaceSet',
    'trace_faces',
    'EmbeddedGraph',
    'build_embedded_graph',
    'embed_rotation',
    'adjacent_triangles_present',
    'NonPermutationRotation',
    'EmbeddingRequired',

    'ClassReport',
    'ClassChecker',
    'class_membership',
    'ConfigurationKind',
    'Configuration',
    'NotFound',
    'NOT_FOUND',
    'find_reducible_configuration',
    'find_all_configurations',
    'configuration_holds',
    'Witness',
    'ObservationResult',
    'ObservationReport',
    'verify_observations',
    'IncidenceCounts',
    'incidence_counts',
    'incidence_bounds_hold',
    'incidence_bound_violations',

    'Comparison',
    'Condition',
    'condition',
    'Policy',
    'Rule',
    'vertex_rule',
    'face_rule',
    'RuleSet',
    'parse_rules',
    'emit_rules',
    'rules_file',
    'RuleError',
    'ParseError',
    'OverlappingSelectors',
    'ChargeStage',
    'ChargeState',
    'Transfer',
    'TransferLedger',
    'initial_charges',
    'expected_total',
    'builtin_rules',
    'apply_discharging',
    'replay_ledger',
    'BoundTemplate',
    'BOUND_TEMPLATES',
    'applicable_template',
    'TemplateCheck',
    'AuditReport',
    'audit',
    'case1_vertex_floor',
    'case2_vertex_bound_small_r1',
    'case2_vertex_bound_large_r1',
    'ConstantCheck',
    'audit_constants',
    'StageError',

    'CONSTRUCTIVE_LIST_SIZE',
    'CONSTRUCTIVE_IMPROPRIETY',
    'ListAssignment',
    'DefectiveColoring',
    'RandomListGenerator',
    'ViolationKind',
    'Violation',
    'Verdict',
    'verify_coloring',
    'extend_configuration',
    'ReductionPlan',
    'ReductionStep',
    'ReductionTrace',
    'ReductionOutcome',
    'StuckReport',
    'plan_reduction',
    'color_from_plan',
    'reduce_and_color',
    'ColoringError',
    'ListTooSmall',
    'GuaranteeViolated',
    'ExtensionFailed',
    'DEFAULT_NODE_BUDGET',
    'Unsatisfiable',
    'OracleSolver',
    'oracle_solve',
    'search_order',
    'BudgetExceeded',

    'Provenance',
    'CorpusEntry',
    'Palette',
    'parse_graph6',
    'emit_graph6',
    'parse_rotation',
    'emit_rotation',
    'parse_lists',
    'emit_lists',
    'parse_coloring',
    'emit_coloring',
    'parse_corpus_entry',
    'emit_corpus_entry',
    'FormatError',
    'MalformedGraph6',
    'FormatParseError',
    'GenusMismatch',
    'UnknownVertex',
    'gen_torus_grid',
    'gen_subdivision',
    'gen_complete',
    'gen_cycle',
    'ParameterOutOfRange',
    'ParameterTooSmall',

    'impl',
    'Impl',
    'ComponentSpec',
    'Container',
    'ComponentConfig',
    'ToolkitConfig',
    'RefValue',
    'load_toolkit_config',
    'read_toolkit_config',
    'with_overrides',
    'check_toolkit_config',
    'default_components',
    'ComponentError',
    'MissingValue',
    'DependencyCycle',
    'InvalidImplParam',
    'InvalidComponentType',
    'UnknownImpl',
    'UnknownParam',

    'CommandResult',
    'run',
    'main',
)
