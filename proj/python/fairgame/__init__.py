"""Fair matching games: exact solvers for the game equation.

Everything lives in the compiled core; this package just re-exports it.
Integers cross the boundary as Python ints and rationals as
fractions.Fraction, both exact at any size.
"""

from fairgame._core import (
    BinaryGame,
    LorentzPoint,
    RootRecord,
    RootWitness,
    SolutionVector,
    TernaryGame,
    binary_game,
    c3_contains,
    c3_contains_residue,
    c3_density,
    c3_list,
    children,
    count_c2,
    count_c2_oracle,
    count_f2,
    count_f2_oracle,
    count_f3_ellipsoid,
    count_lorentz,
    count_max_coordinate,
    count_s3_ellipsoid,
    enumerate_component,
    eval_fair_poly,
    extend_game,
    find_roots_extending,
    first_fair_in_component,
    from_lorentz,
    games_with_coordinate,
    games_with_max_coordinate,
    is_fair_game,
    is_root,
    m_sequence,
    max_norm_node,
    min_norm_node,
    mod3_class,
    neighbor,
    neighbors_of,
    parent,
    r_minus,
    r_plus,
    sign_of,
    simulate_game,
    ternary_left_child,
    ternary_parent,
    ternary_right_child,
    to_lorentz,
    win_probability,
)

__all__ = [
    "BinaryGame",
    "LorentzPoint",
    "RootRecord",
    "RootWitness",
    "SolutionVector",
    "TernaryGame",
    "binary_game",
    "c3_contains",
    "c3_contains_residue",
    "c3_density",
    "c3_list",
    "children",
    "count_c2",
    "count_c2_oracle",
    "count_f2",
    "count_f2_oracle",
    "count_f3_ellipsoid",
    "count_lorentz",
    "count_max_coordinate",
    "count_s3_ellipsoid",
    "enumerate_component",
    "eval_fair_poly",
    "extend_game",
    "find_roots_extending",
    "first_fair_in_component",
    "from_lorentz",
    "games_with_coordinate",
    "games_with_max_coordinate",
    "is_fair_game",
    "is_root",
    "m_sequence",
    "max_norm_node",
    "min_norm_node",
    "mod3_class",
    "neighbor",
    "neighbors_of",
    "parent",
    "r_minus",
    "r_plus",
    "sign_of",
    "simulate_game",
    "ternary_left_child",
    "ternary_parent",
    "ternary_right_child",
    "to_lorentz",
    "win_probability",
]

__version__ = "0.1.0"
