"""Orthogonal decoupleability of symmetric rank-3 tensors.

Thin wrapper over the compiled core: tensor construction, the group action,
integrity-basis invariants, membership classifiers, recovery of explicit
orthogonal maps, Molien series, and the numerical orbit-search oracle.
"""

from tridec._core import (  # noqa: F401
    DimensionMismatch,
    DomainExcluded,
    MalformedInput,
    OrthogonalMap,
    SymTensor3,
    __version__,
    act,
    classify_fd_generic,
    classify_fd_n3,
    classify_n2,
    classify_pd_not_fd_n3,
    covariants,
    fd_necessary_quick,
    haar_orthogonal,
    make_fd,
    make_pd_canonical,
    molien_series,
    oa_basis,
    oa_basis_exact,
    orbit_search_oracle,
    pattern_residual,
    qtilde_full,
    qtilde_partial,
    recover_n2,
    recover_pd_params,
    recover_pd_rotation,
    recover_rotation_via_covariant,
    rep_matrix,
    so2_basis,
    tensor_from_cubic,
    u_dot_gamma,
)
