"""Orthogonal frames of every norm k >= 3 in the odd Leech lattice.

Exact-integer toolkit: codes over Z_k and Construction A, LLL reduction and
short-vector enumeration, eta/theta q-series checks, and verified frame
certificates.
"""

from .codes import (
    ZkCode,
    code_c4,
    code_c11,
    code_d4,
    euclidean_weight,
    is_self_dual,
    membership,
    min_euclidean_weight,
    mckay_s,
    negacirculant,
)
from .construction import LatticeRep, construction_a, min_norm_formula
from .analysis import (
    ShortVectorReport,
    is_even,
    is_unimodular,
    min_norm,
    short_vectors,
    theta_coeffs,
)
from .qseries import (
    QSeries,
    a_p_formula,
    b_series,
    congruence_gram,
    eta_product,
    identity_check,
    quaternary_theta,
    ramanujan_check,
    sigma1_series,
    twist,
)
from .frames import (
    FourSquares,
    FrameCertificate,
    QuaternaryRep,
    build_frame,
    extract_code,
    four_squares,
    frame_from_representation,
    multiply_frame,
    p_matrix,
    represent_quaternary,
    standard_frame_11,
    verify_frame,
)

__version__ = "0.1.0"
