"""Exact symbolic computation in the ring generated by odd power sums:
Schur Q-functions, Q-Hall-Littlewood functions, Q-Kostka polynomials,
spin Green polynomials and spin characters of the symmetric group.
"""

__version__ = "0.1.0"

from .gamma import GammaElement, coefficient, d_dp, one, p_monomial, pair, pn_star
from .partitions import (
    HorizontalStrip,
    Partition,
    check_odd,
    check_partition,
    check_strict,
    dominance_leq,
    enumerate_odd,
    enumerate_partitions,
    enumerate_strict,
    epsilon,
    horizontal_strips,
    index_subpartitions,
    n_stat,
    parse_partition,
    partition_str,
    remove_part,
    union_sorted,
    weight,
    z_factor,
)
from .qkostka import (
    LTable,
    QExpansion,
    expand_g_in_q,
    l_direct,
    l_recursive,
    l_table,
    l_two_row,
)
from .spingreen import (
    SpinCharTable,
    YTable,
    spin_char_table,
    spin_character,
    y_direct,
    y_recursive,
    y_table,
    y_two_row,
    y_via_l,
)
from .tpoly import (
    ONE,
    T,
    TLaurent,
    TPoly,
    ZERO,
    d_count,
    d_poly,
    exact_div,
    gauss_binomial,
    inv_z_t,
    regular_part,
    signed_t,
    t_integer,
)
from .vertexops import (
    G_SPEC,
    GSTAR_SPEC,
    OperatorSpec,
    Q_SPEC,
    QSTAR_SPEC,
    apply_component,
    expand_in_schur_q,
    gstar_on_schur,
    q_prod,
    q_row,
    qhl,
    schur_q,
)

__all__ = [name for name in dir() if not name.startswith("_")]
