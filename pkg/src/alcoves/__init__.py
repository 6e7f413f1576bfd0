"""
Exact computations with alcove walks in affine Weyl groups.

The main entry points:

* :func:`alcoves.cartan.datum_from_type` builds an affine Cartan datum.
* :func:`alcoves.weyl.from_word` builds group elements.
* :func:`alcoves.localization.localize` computes psi^v(w) from any walk to w.
* :func:`alcoves.folded.point_count` counts labeled positively folded walks.
"""
from __future__ import annotations

from .cartan import AlcoveError, CartanDatum, datum_from_matrix, datum_from_type
from .folded import enumerate_positively_folded, folded_image, point_count, r_polynomial
from .localization import gkm_check, localization_class, localize, localize_recursive
from .roots import AffineRoot
from .walks import Mask, enumerate_masks, walk_from_word
from .weyl import WeylElement, from_word, identity, reduced_word

__version__ = "0.1.0"

__all__ = [
    "AffineRoot",
    "AlcoveError",
    "CartanDatum",
    "Mask",
    "WeylElement",
    "datum_from_matrix",
    "datum_from_type",
    "enumerate_masks",
    "enumerate_positively_folded",
    "folded_image",
    "from_word",
    "gkm_check",
    "identity",
    "localization_class",
    "localize",
    "localize_recursive",
    "point_count",
    "r_polynomial",
    "reduced_word",
    "walk_from_word",
]
