# type: ignore

"""
Distance-biregular graphs: double intersection arrays, their feasibility conditions, the closed
forms of the potential theory quantities and the recognition of concrete graphs.
"""

from dbrglib.biregular.array import BiregularArray, DerivedCounts, derive_counts
from dbrglib.biregular.feasibility import FeasibilityReport, validate, CONDITIONS
from dbrglib.biregular.closed_form import (
    DbrgEquilibrium,
    equilibrium_arrays,
    dbrg_equilibrium_value,
    sphere_multiplicities,
    cross_relation_check,
    dbrg_capacity,
    group_inverse_entry,
    dbrg_effective_resistance,
    m_property_array,
    necessary_condition,
    recover_array,
)
from dbrglib.biregular.detection import VerificationReport, biregular_sides, detect_dbrg, verify_closed_form
from dbrglib.biregular.families import (
    digon_array,
    star_array,
    complete_bipartite_array,
    even_cycle_array,
    subdivided_complete_array,
    affine_plane_array,
    bipartite_drg_d3_array,
)
