"""Exact arithmetic for multitwist pseudo-Anosov dilatations.

Words in the two multitwist generators, their PSL2(R) images over
Z[sqrt(mu)], Perron-Frobenius certificates for the built-in multicurve
families, every closed-form dilatation/translation-length bound, and the
Johnson homomorphism on bounding-pair maps.
"""

from .intervals import Interval
from .quadratic import QuadReal, qr_arith, qr_compare
from .words import Word, commutator, cyclic_reduce, nested_commutator, reduce
from .rep import (TwistMatrix, DilatationReport, generator_images, evaluate,
                  classify, dilatation)
from .families import (IntersectionFamily, PFResult, torelli_family,
                       braid_family, nnt, pf_eigenvalue)
from .johnson import (HomologyClass, Wedge3Coset, wedge3, omega_wedge_basis,
                      coset_equal, tau_bounding_pair, lantern_check)
from .search import (SearchReport, LcsRow, enumerate_classes,
                     min_dilatation_search, lcs_table)

__version__ = "0.1.0"
