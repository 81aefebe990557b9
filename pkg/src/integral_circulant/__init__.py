"""Integral circulant graphs: spectra, bipartiteness, diameter, extremal
orders and periodic quantum walks."""

from .diameter import (
    DiameterReport,
    ResidueSet,
    check_diameter_bounds,
    diameter_bfs,
    diameter_sumset,
    family_diam2,
    family_diam_2r_plus_1,
    generator_number,
    sumset,
)
from .extremal import ExtremalRecord, enumerate_integral, max_order_for_degree, order_table
from .graph import (
    CirculantGraph,
    DivisorSet,
    SymbolSet,
    adjacency_row,
    from_divisor_set,
    gcd_class,
    integrality_decomposition,
    is_bipartite_bfs,
    is_connected,
)
from .numtheory import divisors, euler_phi, factorize, gcd_all, lcm_all, moebius, ramanujan_sum
from .quantum import (
    PstWitness,
    RationalAngle,
    antipodal_criterion,
    evolution_operator,
    is_periodic,
    no_pst_odd_check,
    period,
    pst_search,
    transfer_amplitude_exact,
)
from .spectral import (
    Spectrum,
    bipartite_divisor_test,
    eigenvalues_exact,
    eigenvalues_numeric,
    is_bipartite_spectral,
    ratio_condition,
    ratio_condition_numeric,
)

__version__ = "0.1.0"
