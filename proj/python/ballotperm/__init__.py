"""Ballot permutations, odd-order bijections, pattern counting and walks."""

from ballotperm._core import (
    avoid_count,
    ballot_recurrence,
    count_class,
    count_cluster_cycles,
    count_walks,
    count_wlpp_horizontal,
    cycle_decompose,
    cycles_to_permutation,
    egf_count,
    gessel_closed_form,
    heights,
    is_ballot,
    is_dyck,
    is_odd_order,
    peaks,
    phi_inv_map,
    phi_map,
    psi_inv_map,
    psi_map,
    statistics,
    verify,
    wilf_map,
)

__all__ = [
    "avoid_count",
    "ballot_recurrence",
    "count_class",
    "count_cluster_cycles",
    "count_walks",
    "count_wlpp_horizontal",
    "cycle_decompose",
    "cycles_to_permutation",
    "egf_count",
    "gessel_closed_form",
    "heights",
    "is_ballot",
    "is_dyck",
    "is_odd_order",
    "peaks",
    "phi_inv_map",
    "phi_map",
    "psi_inv_map",
    "psi_map",
    "statistics",
    "verify",
    "wilf_map",
]
