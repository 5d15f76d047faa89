"""Minimum edge counts of pancyclic graphs.

A pancyclic graph on n vertices has a cycle of every length from 3 to n;
m(n) is the fewest edges such a graph can have. This package computes m(n)
exactly by exhaustive symmetry-pruned search over chorded Hamiltonian
cycles, evaluates the known closed-form bounds, builds the explicit
low-chord constructions, and applies the structural reductions that relate
m(n) across n, all with machine-verifiable output.
"""

from .analysis import (
    HalfArcDichotomy,
    ReductionReport,
    complete_with_single_chord,
    contractible_arcs,
    half_arc_dichotomy,
    is_pancyclic,
    missing_lengths,
    parallel_chord_reduction,
)
from .bounds import (
    BoundsReport,
    bondy_lower,
    bounds_report,
    h_iterated_log,
    max_degree_feasible,
    rs_cycle_bound,
    rs_lower,
)
from .constructions import (
    extend_by_one,
    five_chord_construction,
    five_chord_for_n,
    minimal_pancyclic_14,
)
from .cycle_enum import (
    CycleSpectrum,
    ReducedMultigraph,
    brute_force_spectrum,
    count_cycles_of_length,
    length_tally,
    max_cycle_bound,
    reduce_graph,
    shi_candidates,
    spectrum,
)
from .graph_core import (
    Arc,
    CanonicalForm,
    Chord,
    ChordedCycle,
    InvalidGraphError,
    all_valid_chords,
    arcs_of,
    canonical_form,
    contract_arc,
    delete_chord,
    dihedral_image,
    is_crossing,
    make_graph,
)
from .search import (
    ChordCeilingReached,
    ExhaustionCertificate,
    SearchBudgetExceeded,
    SearchConfig,
    SearchFailure,
    SearchResult,
    build_table,
    enumerate_canonical_chord_sets,
    find_min_chords,
    prove_no_pancyclic,
)

__all__ = [
    "Arc",
    "BoundsReport",
    "CanonicalForm",
    "Chord",
    "ChordCeilingReached",
    "ChordedCycle",
    "CycleSpectrum",
    "ExhaustionCertificate",
    "HalfArcDichotomy",
    "InvalidGraphError",
    "ReducedMultigraph",
    "ReductionReport",
    "SearchBudgetExceeded",
    "SearchConfig",
    "SearchFailure",
    "SearchResult",
    "all_valid_chords",
    "arcs_of",
    "bondy_lower",
    "bounds_report",
    "brute_force_spectrum",
    "build_table",
    "canonical_form",
    "complete_with_single_chord",
    "contract_arc",
    "contractible_arcs",
    "count_cycles_of_length",
    "delete_chord",
    "dihedral_image",
    "enumerate_canonical_chord_sets",
    "extend_by_one",
    "find_min_chords",
    "five_chord_construction",
    "five_chord_for_n",
    "h_iterated_log",
    "half_arc_dichotomy",
    "is_crossing",
    "is_pancyclic",
    "length_tally",
    "make_graph",
    "max_cycle_bound",
    "max_degree_feasible",
    "minimal_pancyclic_14",
    "missing_lengths",
    "parallel_chord_reduction",
    "prove_no_pancyclic",
    "reduce_graph",
    "rs_cycle_bound",
    "rs_lower",
    "shi_candidates",
    "spectrum",
]

__version__ = "0.1.0"
