"""Ad-nilpotent ideals of a Borel subalgebra, the affine Weyl group elements
encoding them, and their bijection with W-orbits on Q̌/(h+1)Q̌."""

from weylcat.affine import AffineRoot, AffineWeylElement, from_inversions, from_word, inversion_set
from weylcat.bijection import (
    count_formula,
    count_orbits_direct,
    enumerate_alcove_lattice,
    f_inverse,
    f_map,
    ideal_to_representative,
    ideal_to_w,
    normalizer,
)
from weylcat.poset import Ideal, count_abelian, enumerate_antichains, l_set, lower_series
from weylcat.rootsys import RootSystem, WeylElement, build
from weylcat.signtypes import count_regions, ideal_to_signtype, region_witness

__version__ = "0.1.0"
