"""Exact arithmetic for Cantor algebras, Higman-Thompson groups, clone
calculus and finite homology.

All values cross the boundary as text literals: terms like
``m(L(g1),R(g1))``, tableaux like ``n=2 r=1 { 0->00, 10->01, 11->1 }``,
codes like ``{0, 10, 11}`` and clone sequences like ``[{0} > {00}]``.
"""

from _cantorv import (
    apply,
    bar_homology,
    block_sum,
    build_q,
    clone_intersect,
    disjointify,
    eq,
    expand_iso,
    finite_segal,
    identity,
    inv,
    k0,
    mul,
    nf,
    perfect,
    product_probe,
    retract_check,
    segal_witness,
    selftest,
    seq_member,
    snf,
    support_iso,
    swap_blocks,
    whitehead,
)

__all__ = [
    "apply", "bar_homology", "block_sum", "build_q", "clone_intersect",
    "disjointify", "eq", "expand_iso", "finite_segal", "identity", "inv",
    "k0", "mul", "nf", "perfect", "product_probe", "retract_check",
    "segal_witness", "selftest", "seq_member", "snf", "support_iso",
    "swap_blocks", "whitehead",
]
