"""qgc: zero-dimensional quantum codes as graphs, GF(4) codes and Boolean
functions — construction, distance computation, LC-orbit classification,
and {I,H,N}^n spectral analysis."""

from .kernels import BACKEND
from .graphs import (
    Graph,
    local_complement,
    complement,
    induced_subgraph,
    components,
    is_connected,
    degree_sequence,
    is_k_regular,
    extensions,
    to_graph6,
    from_graph6,
    to_edge_list,
    from_edge_list,
)
from .canon import (
    CanonicalForm,
    Hypergraph,
    canonical_form,
    canonical_key,
    hypergraph_canonical,
    are_isomorphic,
)
from .cliques import (
    independence_number,
    max_independent_set,
    enumerate_cliques,
    min_vertex_cover_size,
)
from .generate import generate_connected
from .codes import (
    StabilizerCode,
    GraphCode,
    trace_inner_product,
    trace_inner_product_rows,
    graph_to_code,
    code_graph,
    stabilizer_to_graph,
    code_distance,
    weight_count,
    partial_weight_distribution,
    full_weight_distribution,
    code_type,
    distance_bound,
    best_known_dm,
    to_z4,
    shorten,
)
from .orbits import (
    GraphStore,
    OrbitRecord,
    lc_orbit,
    lc_canonise,
    classify,
    bucket_by_pwd,
    decomposable_counts,
    lambda_of,
    lambda_min,
    ramsey_lower_bound,
)
from .constructions import (
    LegendreSequence,
    CirculantRow,
    NestedSpec,
    legendre_sequence,
    paley_graph,
    qr_code,
    bordered_qr,
    bqr_regularize,
    code18,
    circulant_graph,
    circulant_search,
    best_circulant,
    nested_build,
    nested_validate,
    minimum_regular_vertex_degree,
)
from .boolfn import (
    BooleanFunction,
    GeneralizedFunction,
    AutocorrelationQuery,
    anft,
    walsh_spectrum,
    autocorrelation,
    crypto_properties,
    pc_check,
    epc_check,
    apc_check,
    apc_distance,
    function_graph,
    function_hypergraph,
    graph_function,
    apply_pauli_error,
    lc_on_function,
)
from .transforms import (
    SpectralVector,
    TransformSet,
    butterfly,
    gray_sequence,
    multispectrum,
    par,
    par_ihn,
    par_ih,
    par_hn,
    recover_boolean_flat,
    ihn_orbit,
    ix_ihn_orbit,
    cmf,
    count_flat_spectra,
    schmidt_bounds,
    construct1,
    construct2,
)
from .interlace import InterlacePolynomial, interlace_q

__version__ = "0.1.0"
