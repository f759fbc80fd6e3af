"""sbk: exact checks for Lie super-bialgebra structures on osp(2|2) and osp(1|2)+u(1).

All arithmetic uses :class:`fractions.Fraction`; nothing is ever rounded.
"""

from .autos import AutoParams, act_on_r, build_automorphism, is_automorphism, verify_equivalence
from .bialgebra import RMatrix, coboundary_delta, verify_cobracket, verify_cocycle
from .cybe import ad_invariant, is_cybe, schouten_square
from .linsolve import coboundary_solve, cocycle_space
from .superkernel import SuperAlgebra, bracket, verify_lie_superalgebra, z_sign

__version__ = "0.1.0"
