"""Exact computations around torus knots, their lens space surgeries and L-space staircases."""

from .exactalg import IntPoly, LaurentPoly, NonExactDivision
from .pairsgen import PairFamilyState, PairInstance, generate, instantiate, step, verify_pair
from .staircase import Staircase, enumerate_staircases, hfk_bigraded, torus_staircase
from .surgery import LensSpace, Slope, classify_torus_surgery, lens_homeo_oriented
from .torusknot import TorusKnot, alexander, delta_dd_half, genus, recognize_from_alexander, signature

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "LensSpace",
    "NonExactDivision",
    "PairFamilyState",
    "PairInstance",
    "Slope",
    "Staircase",
    "TorusKnot",
    "alexander",
    "classify_torus_surgery",
    "delta_dd_half",
    "enumerate_staircases",
    "generate",
    "genus",
    "hfk_bigraded",
    "instantiate",
    "lens_homeo_oriented",
    "recognize_from_alexander",
    "signature",
    "step",
    "torus_staircase",
    "verify_pair",
]
