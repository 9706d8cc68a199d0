"""Cosmetic crossing obstructions for genus one knots.

Exact Seifert matrix invariants (Alexander polynomial, determinant, homology
of the double branched cover, signature) and the tests built on them.
"""

from .catalog import KnotRecord, analyze, builtin_table1, parse_catalog, render
from .intlinalg import AbelianGroup, det, signature, smith_normal_form
from .laurent import LaurentPoly, conj, dot_equal, eval_at_sign, normalize
from .obstruct import (
    ObstructionReport,
    SliceWitness,
    Status,
    TestOutcome,
    Verdict,
    alg_slice_test,
    combined_verdict,
    det_square_test,
    homology_cyclic_test,
    metabolizer_gcd_test,
    pretzel_test,
    whitehead_test,
)
from .seifert import (
    PretzelParams,
    SeifertMatrix,
    WhiteheadParams,
    alexander,
    crossing_change,
    double_cover_homology,
    knot_det,
    knot_signature,
    pretzel_seifert,
    seifert,
    symmetrize,
    whitehead_seifert,
)

__version__ = "0.1.0"
