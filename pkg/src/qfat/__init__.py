"""Weight spectra and fatness of linear sets defined by linearized
polynomials over finite fields, plus exhaustive classification search."""

from .field import (
    CapExceededError,
    FFElement,
    FieldCtx,
    arith,
    ctx_create,
    frobenius_q,
    rel_norm,
    rel_trace,
    solve_power_eq,
    subfield_embedding,
)
from .linpoly import (
    DicksonMatrix,
    LinearizedPoly,
    dickson,
    kernel_dim,
    monomial,
    normalize,
    weight_at,
)
from .linset import (
    Classification,
    SpanLinearSet,
    WeightSpectrum,
    classify,
    graph_span,
    pair_count_identity,
    point_set,
    span_weights,
    weight_spectrum,
)
from .families import (
    Family,
    make_basis_club,
    make_lp,
    make_q5_club,
    make_rank4_rep,
    make_trace,
    make_twisted_trace,
    q5_club_stabilizer_check,
    verify_family,
)
from .quadform import (
    LPQuadForm,
    isotropic_count,
    norm_one_deltas,
    predicted_r_lp,
    q_eval,
    radical,
    sigma_eval,
    weight2_correspondence,
)
from .bounds import (
    BoundParams,
    BoundReport,
    chebotarev_ni_bound,
    curve_bound,
    evaluate_bounds,
    exceptional_scan,
    r_lower_bound_curve,
)
from .search import enumerate_polys, run_search, search_summary
from .verify import run_suites

__version__ = "0.1.0"
