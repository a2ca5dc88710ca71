"""Exact Jordan-like decomposition and Weyr characteristics of linear relations."""

from .decompose import Chain, JordanLikeDecomposition, decompose
from .equiv import apply_transform, random_transform, strictly_equivalent, synthesize
from .field import GaussianRational, Poly, gaussian
from .linalg import Subspace
from .pencil import Pencil, kernel_rep, range_rep
from .relation import LinearRelation, verify_reducing
from .spectral import singular_chain_space, spectral_data, total_root_space
from .weyr import WeyrCharacteristic, weyr_characteristic

__all__ = [
    "Chain",
    "GaussianRational",
    "JordanLikeDecomposition",
    "LinearRelation",
    "Pencil",
    "Poly",
    "Subspace",
    "WeyrCharacteristic",
    "apply_transform",
    "decompose",
    "gaussian",
    "kernel_rep",
    "random_transform",
    "range_rep",
    "singular_chain_space",
    "spectral_data",
    "strictly_equivalent",
    "synthesize",
    "total_root_space",
    "verify_reducing",
    "weyr_characteristic",
]
