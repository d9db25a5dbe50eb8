"""Group-theoretic periodic table built from the Madelung rule.

Exact (n, l, j, m) quartet arithmetic with a closed-form atomic-number
formula, table construction and classification, ladder-operator navigation,
idealized aufbau configurations, an element registry, and least-squares
property fitting over an operator eigenvalue basis.
"""

from .aufbau import Configuration, ShellOccupancy, configuration_of, shell_label, shell_sequence
from .fitting import (
    BasisFunction,
    ConditioningError,
    ExplicitScope,
    FamilyScope,
    FitError,
    FitModel,
    IntegrityBasis,
    PeriodScope,
    RankError,
    ScopeError,
    default_basis,
    design_matrix,
    fit,
    predict,
    predict_many,
)
from .navigation import MoveAlgebra, Path, neighbors, shortest_path
from .quartet import (
    AtomicNumberError,
    MadelungKey,
    Quartet,
    QuartetError,
    block_capacity,
    block_range,
    enumerate_quartets,
    madelung_compare,
    parse_quartet,
    quartet_of,
    row_range,
    z_of,
)
from .registry import (
    ElementRecord,
    PropertyDataset,
    Registry,
    RegistryConflictError,
    RegistryError,
    RegistryParseError,
    Status,
    default_registry,
    load_property,
    load_registry,
    save_registry,
)
from .table import (
    ColumnId,
    Family,
    SeriesKind,
    SeriesSpec,
    SubBlockError,
    TableRegion,
    build_region,
    column_of,
    family_of,
    series_catalog,
    series_of,
    subblock_split,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
