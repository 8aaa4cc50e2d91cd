"""Exact eigenvalues of the perfect matching derangement graph and the
permutation derangement graph, indexed by integer partitions, with
independent cross-checking recurrences, verification suites for the
comparison theorems, and a brute-force spectral oracle."""

from .exact import (
    binomial,
    derangement_count,
    irrep_dimension,
    odd_double_factorial,
    pm_degree,
    pm_degree_inclusion_exclusion,
)
from .partitions import (
    Dominance,
    Partition,
    TransferMove,
    dominance_chain,
    dominance_compare,
    enumerate_partitions,
    has_first_part_three_rest_small,
)
from .pm_spectrum import EtaValue, eta, eta_alt, f_closed_form_2a1b, f_value, pm_spectrum_table
from .sym_spectrum import XiValue, sym_spectrum_table, xi, xi_by_first_part, xi_by_last_part
from .tables import SpectrumTable

__all__ = [
    "Dominance",
    "EtaValue",
    "Partition",
    "SpectrumTable",
    "TransferMove",
    "XiValue",
    "binomial",
    "derangement_count",
    "dominance_chain",
    "dominance_compare",
    "enumerate_partitions",
    "eta",
    "eta_alt",
    "f_closed_form_2a1b",
    "f_value",
    "has_first_part_three_rest_small",
    "irrep_dimension",
    "odd_double_factorial",
    "pm_degree",
    "pm_degree_inclusion_exclusion",
    "pm_spectrum_table",
    "sym_spectrum_table",
    "xi",
    "xi_by_first_part",
    "xi_by_last_part",
]
