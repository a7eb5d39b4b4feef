"""Exact-arithmetic kernel for Hom-algebra tree calculus.

Planar binary trees with weights drive free algebras over a Hom-module;
ideal closures inside finite windows present enveloping quotients of
Hom-Lie and Hom-Leibniz algebras with exact rational coordinates.
"""

from .algebra import (
    AxiomError,
    BimoduleData,
    HomAlgebra,
    HomDialgebra,
    HomModule,
    Violation,
    algebra_from_json,
    algebra_to_json,
    bimodule_from_json,
    bimodule_to_json,
    check_bimodule,
    check_hom_associative,
    check_hom_dialgebra,
    check_hom_leibniz,
    check_hom_lie,
    check_morphism,
    dialgebra_from_associative,
    dialgebra_from_bimodule,
    hleib,
    hlie,
    hom_module,
)
from .envelope import (
    IdealSpan,
    QuotientPresentation,
    check_quotient_axioms,
    f_has,
    hleib_ideal_generators,
    hlie_ideal_generators,
    ideal_closure,
    induced_morphism_check,
    u_hleib,
    u_hlie,
    unit_map_j,
)
from .free import (
    Element,
    Monomial,
    Window,
    alpha_free,
    alpha_free_di,
    basis_window,
    eval_di_tree_product,
    eval_tree_product,
    format_element,
    format_monomial,
    generator,
    mul_free,
    mul_free_di,
    parse_element,
    parse_monomial,
    universal_map,
)
from .trees import (
    LEAF,
    catalan,
    decompose_di,
    decompose_weighted,
    enumerate_diweighted,
    enumerate_trees,
    enumerate_weighted,
    format_tree,
    graft,
    graft_di,
    graft_weighted,
    parse_tree,
    shift_di,
    shift_weight,
)

__version__ = "0.1.0"
