"""Exact computational algebra for Coxeter graphs.

The modules mirror the pipeline: parse a graph (coxgraph), build the
fusion ring of its edge labels (fusion), unfold to a simply-laced graph
(unfolding), form the zigzag algebra and act on complexes of projectives
by spherical twists (zigzag, homotopy), descend to the Grothendieck
lattice (lattice), and read off central-charge geometry (geometry).
"""

from .coxgraph import (
    INF,
    CoxeterGraph,
    GraphError,
    gram_matrix,
    is_finite_type,
    parse_graph,
)
from .fusion import (
    FusionElement,
    FusionRing,
    coxeter_fusion_ring,
    deligne_product,
    edge_object,
    fpdim,
    multiply,
    tlj_even_ring,
    tlj_ring,
)
from .geometry import (
    CentralCharge,
    ChamberReport,
    embed_real,
    evaluate_charge,
    imaginary_cone_samples,
    in_regular_set,
    in_tits_interior,
    locate_chamber,
    normalize_charge,
    phase_of_imaginary_cone,
    reflect_charge,
)
from .homotopy import (
    Complex,
    apply_braid_word,
    complex_class,
    dual_twist,
    gaussian_eliminate,
    is_identity_word,
    make_complex,
    projective_complex,
    recognize_shift,
    twist,
    words_equal,
)
from .lattice import (
    LatticeVector,
    LaurentFusionMatrix,
    bilinear_form_C,
    burau_generator,
    burau_word,
    coxeter_word_equal,
    coxeter_word_matrix,
    enumerate_positive_roots,
    simple_reflection_matrix,
    specialize_q,
)
from .unfolding import UnfoldedGraph, fiber, lcm_translate, psi_matrix, unfold
from .zigzag import (
    HomElement,
    ZigzagAlgebra,
    build_zigzag,
    compose,
    frobenius_comult,
    hom_basis,
    multiply_basis,
    multiply_combo,
    path_label,
)

__all__ = [
    "CentralCharge",
    "ChamberReport",
    "Complex",
    "CoxeterGraph",
    "FusionElement",
    "FusionRing",
    "GraphError",
    "HomElement",
    "INF",
    "LatticeVector",
    "LaurentFusionMatrix",
    "UnfoldedGraph",
    "ZigzagAlgebra",
    "apply_braid_word",
    "bilinear_form_C",
    "build_zigzag",
    "burau_generator",
    "burau_word",
    "complex_class",
    "compose",
    "coxeter_fusion_ring",
    "coxeter_word_equal",
    "coxeter_word_matrix",
    "deligne_product",
    "dual_twist",
    "edge_object",
    "embed_real",
    "enumerate_positive_roots",
    "evaluate_charge",
    "fiber",
    "fpdim",
    "frobenius_comult",
    "gaussian_eliminate",
    "gram_matrix",
    "hom_basis",
    "imaginary_cone_samples",
    "in_regular_set",
    "in_tits_interior",
    "is_finite_type",
    "is_identity_word",
    "lcm_translate",
    "locate_chamber",
    "make_complex",
    "multiply",
    "multiply_basis",
    "multiply_combo",
    "normalize_charge",
    "parse_graph",
    "path_label",
    "phase_of_imaginary_cone",
    "projective_complex",
    "psi_matrix",
    "recognize_shift",
    "reflect_charge",
    "simple_reflection_matrix",
    "specialize_q",
    "tlj_even_ring",
    "tlj_ring",
    "twist",
    "unfold",
    "words_equal",
]
