"""Fixed-parameter domination algorithms for sparse graphs."""

from ._core import (
    Graph,
    GuardError,
    ParseError,
    ball,
    bfs_distances,
    brute_force_min_domset,
    brute_force_scattered,
    degree_reduction_gadget,
    dominates,
    emit_instance,
    enumerate_trees,
    find_scattered,
    generate,
    induces_connected,
    is_scattered,
    n_threshold,
    parse_instance,
    power,
    ramsey_upper,
    reduce_step,
    remove_vertices,
    select_connected,
    shallow_clique_minor,
    solve_connected,
    solve_d_connected,
    solve_domset,
    solve_efficient,
    solve_roman,
)

__all__ = [
    "Graph",
    "GuardError",
    "ParseError",
    "ball",
    "bfs_distances",
    "brute_force_min_domset",
    "brute_force_scattered",
    "degree_reduction_gadget",
    "dominates",
    "emit_instance",
    "enumerate_trees",
    "find_scattered",
    "generate",
    "induces_connected",
    "is_scattered",
    "n_threshold",
    "parse_instance",
    "power",
    "ramsey_upper",
    "reduce_step",
    "remove_vertices",
    "select_connected",
    "shallow_clique_minor",
    "solve_connected",
    "solve_d_connected",
    "solve_domset",
    "solve_efficient",
    "solve_roman",
]
