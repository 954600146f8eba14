"""rsklab: a finite-model laboratory for rough-set approximation operators.

The package implements the dual successor-based operator pair, the
non-dual pair (lower via successors, upper via predecessors) and its
mirror, the classical granule-based pair, the 23-property verdict
tables with minimal-counterexample search, the frame characterizations
with constructive witnesses, the covering-based C_t operators with their
reduction to the non-dual pre-order case, and the implication-frame
reading of that case.
"""

from .characterizations import (
    Characterization,
    ConsistencyRecord,
    check_biconditional,
    proof_witness,
)
from .coverings import (
    Covering,
    ct_lower,
    ct_upper,
    definable_family,
    enumerate_coverings,
    induced_relation,
    is_definable,
    neighborhood,
    verify_reduction,
)
from .errors import (
    CapacityError,
    InputError,
    NoWitnessError,
    PreconditionError,
    RskError,
)
from .logic import (
    ImplicationFrame,
    deductive_closure,
    is_theory,
    largest_theory_within,
)
from .operators import (
    Pairing,
    granules,
    lower,
    predecessor_set,
    successor_set,
    upper,
)
from .properties import (
    PROPERTY_ROWS,
    Counterexample,
    PropertyVerdict,
    RelationCheck,
    check_relation,
    eval_property,
    property_row,
    search_class,
)
from .relations import (
    BinaryRelation,
    RelationClass,
    RelationFlags,
    Subset,
    Universe,
    build_relation,
    capacity_bound,
    classify,
    enumerate_relations,
    intersect,
    reflexive_closure,
    transitive_closure,
)
from .tables import (
    TableReport,
    compare_with_reference,
    generate_table,
    reference_grid,
    report_to_json,
    report_to_markdown,
)

__version__ = "0.1.0"
