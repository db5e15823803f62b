"""Hilbert ideals of dihedral groups in characteristic two.

Thin re-export of the native module; see the project README for usage.
"""

from d2p._core import (  # noqa: F401
    BinaryFieldDescriptor,
    CoinvariantStats,
    DihedralRep,
    GeneratorSet,
    Monomial,
    MonomialOrder,
    Poly2,
    ResourceCapError,
    VarLayout,
    buchberger,
    build_field,
    coinvariant_stats,
    compare,
    enumerate_rho_invariant_monomials,
    gf_add,
    gf_mul,
    gf_pow,
    hilbert_ideal_generators,
    hilbert_series_product,
    hsop_bounds,
    is_g_invariant,
    is_groebner_basis,
    is_invariant_poly,
    is_rho_invariant,
    lead_term_ideal,
    leading_monomial,
    monomial_decompose,
    multiplicative_order_of_two,
    normal_form,
    orbit_sum,
    order,
    parse_monomial,
    parse_poly,
    prune_redundant,
    reduce_basis,
    reduce_multiple_to_small,
    reduced_groebner_basis,
    render_monomial,
    render_poly,
    rho_weight,
    run_verify,
    s_polynomial,
    sample_orders,
    schmid_zero_sum,
    sigma,
    standard_monomials,
    top_degree_formula,
    universal_basis,
    weighted,
    zerosum_completion,
)

__version__ = "0.1.0"
