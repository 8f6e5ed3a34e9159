"""Exact toolkit for surfaces uniformized by the bidisk.

Modules cover the local special-tensor calculus (``poly``, ``tensor``,
``blowup``), divisor arithmetic on model surfaces (``surfaces``), elliptic
fibration bookkeeping (``elliptic``), the uniformization decision procedure
(``classify``), and a batch command line front end (``cli``).
"""

__version__ = "0.1.0"

from .poly import (
    DegenerateInputError,
    ExtPoly2,
    Poly2,
    PolyParseError,
    SqrtExt,
    Z1,
    Z2,
    colength,
    format_poly,
    gcd3,
    parse_poly,
    poly_gcd,
    poly_sqrt,
    rational_sqrt,
    substitute,
)
from .tensor import (
    EigenSplit,
    NilpotentDecomposition,
    NotASquareError,
    NotSpecialTensorError,
    SymTensor,
    TraceZeroEndo,
    chern_consistency,
    eigen_split,
    endo_square,
    endo_to_tensor,
    nilpotent_decompose,
    tensor_det,
    tensor_to_endo,
)
from .blowup import BlowupChartTensor, pullback, regularity_criterion
from .surfaces import (
    HirzebruchDivisor,
    NumericalProfile,
    ProductSurface,
    h0_lattice,
    h0_recursive,
    h0_reduction_steps,
    p2_parity_obstruction,
    product_invariants,
    product_special_tensor_dim,
    product_uniqueness_note,
    split_tangent_identities,
)
from .elliptic import (
    EllipticDescriptor,
    KodairaFibre,
    TensorExistence,
    WeierstrassFamily,
    canonical_bundle_degree,
    delta_degree,
    exists_nilpotent_special_tensor,
    fibre_by_tag,
    load_fibre_table,
    multiple_fibre_claim_check,
    special_tensor_degree,
    weierstrass_example,
)
from .classify import (
    NO_TENSOR,
    SEMI_SPECIAL_EXISTS,
    SEMI_SPECIAL_UNIQUE,
    Classification,
    SurfaceInvariants,
    TensorStatus,
    Verdict,
    classify,
    double_cover_dims,
    min_bigenus,
    polydisk_necessary_profile,
    special_dim,
)
