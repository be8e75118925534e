"""Modular data of quantum-group categories and the fusion rules of their
Z/2Z permutation gauging."""
from .catops import adjoint_subcategory, deligne_product, reverse, tensor_subcategory
from .expr import parse, render
from .gauge import Diag, Hat, Pair, PermutationGauging, gauged_fusion, gauged_labels, sqrt_twists
from .liealg import LieSpec, build_root_data, level_labels, weyl_group
from .modular import FusionRing, ModularData, derived_scalars, kac_peterson, validate_modular, verlinde
from .ringtools import export_ring, fp_dims, fusion_graph, load_ring, ring_isomorphism, validate_ring

__all__ = [
    "Diag", "FusionRing", "Hat", "LieSpec", "ModularData", "Pair", "PermutationGauging",
    "adjoint_subcategory", "build_root_data", "deligne_product", "derived_scalars",
    "export_ring", "fp_dims", "fusion_graph", "gauged_fusion", "gauged_labels",
    "kac_peterson", "level_labels", "load_ring", "parse", "render", "reverse",
    "ring_isomorphism", "sqrt_twists", "tensor_subcategory", "validate_modular",
    "validate_ring", "verlinde", "weyl_group",
]
