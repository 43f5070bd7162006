"""Combinatorial neural codes, their morphisms, and Boolean matrix factorization."""

from .bits import DomainError, ResourceError, format_word, parse_word
from .code import (
    Code,
    NeuronStatus,
    canonical_key,
    canonical_label,
    closure_intersection,
    closure_union,
    enumerate_trunks,
    is_free,
    is_isomorphic,
    is_reduced,
    neuron_status,
    reduce,
    relative_root,
    root,
    trunk,
    trunk_count,
)
from .covering import collision_check, covering_map, defect, free_neurons
from .galois import F_H, G_H, GaloisPair, bool_mul, image_F, image_G, is_H_maximal, residual
from .ideal import CanonicalForm, Pseudomonomial, canonical_form, code_of_cf
from .morphism import MorphismRep, apply, compose, is_bmf
from .poset import downset, enumerate_reduced_codes
from .rank import brank_bounds, brank_chain, brank_exact, mrank_exact

__version__ = "0.1.0"
