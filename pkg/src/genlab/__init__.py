"""Exact combinatorics of Ferrers-graph bond lattices, Dumont-type
permutations, surjective staircases and Genocchi numbers."""

from .core import (
    IntPolynomial, Permutation, Poly, SetPartition, T, TruncatedSeries, cycles, drops,
    falling_factorial, rising_factorial, series_inverse_linear,
)
from .errors import (
    ElementNotInLattice, GenlabError, IntegralityFailure, NegativeResult, NotIDTree,
    NotInGSet, NotWWord, SizeLimit,
)
from .ferrers import FerrersGraph, build_gamma, chromatic_polynomial, nbc_forests
from .lattice import BondLattice, build_bond_lattice, build_reduced, characteristic_polynomial, mobius
from .idforests import (
    LabeledTree, PlaneTree, enumerate_id_forests, gamma, hat_form, is_id_tree, postorder,
    psi, psi_forest, tilde_form,
)
from .dperms import count_by_cycles, count_d_perms, enumerate_d_perms, s_d_table
from .staircases import (
    ExcedentFunction, enumerate_g_set, enumerate_staircases, gamma_slide, gamma_unslide,
    lambda_specialized, six_statistics,
)
from .genfun import bd_series, charpoly_series, genocchi_g, genocchi_h, shifted_charpoly_series
from .drops import d_table, drop_expansion_charpoly, parity_poset
from .routes import charpoly

__version__ = "0.1.0"
