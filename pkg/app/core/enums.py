from enum import Enum, IntEnum


class MeasurementNames(str, Enum):
    degeneracy = "degeneracy"
    max_attr_degree = "max_attr_degree"
    grad0 = "grad0"
    four_point_delta = "four_point_delta"
    special_certificate = "special_certificate"
    hyperbolicity = "hyperbolicity"
    exposed_giant = "exposed_giant"
    coloring_k = "coloring_k"
    concentration = "concentration"
    degree_tail = "degree_tail"


class Regime(str, Enum):
    SOMEWHERE_DENSE_EXPECTED = "somewhere_dense_expected"
    BOUNDED_EXPANSION_EXPECTED = "bounded_expansion_expected"


class TreewidthStatus(str, Enum):
    EXACT = "exact"
    CERTIFIED = "certified"
    LOWER_BOUND = "lower_bound"
    SKIPPED = "skipped"


class SpecialPathCondition(str, Enum):
    STRUCTURE = "structure"
    ENDPOINT_NEIGHBORS = "i"
    ATTRIBUTE_NEIGHBORS = "ii"
    NODE_NEIGHBORS = "iii"
    COMPONENT = "component"


class Subcommand(str, Enum):
    generate = "generate"
    project = "project"
    analyze = "analyze"
    color = "color"
    hyperbolicity = "hyperbolicity"
    experiment = "experiment"
    verify = "verify"


class ExitCode(IntEnum):
    SUCCESS = 0
    VALIDATION = 1
    CAP_EXCEEDED = 2
    VERIFICATION_FAILED = 3
