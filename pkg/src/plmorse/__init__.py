"""PL critical points, discrete gradient fields and their correspondence."""

from .correspond import CorrespondenceMap, correspondence, verify_correspondence
from .errors import PLMorseError
from .gvf import (
    GradientField,
    check_relative_perfectness,
    check_weak_morse,
    is_acyclic,
    morse_profile,
    validate_matching,
)
from .homology import BettiVector, Field, betti, reduced_betti, relative_betti
from .plcrit import (
    Kind,
    PLClassification,
    Source,
    banchoff_index,
    classify_all,
    h_classify,
    i_classify,
    is_pl_morse,
    l_classify,
    middle_triangle_count,
    w_classify,
    wedge_count,
)
from .rpbuild import (
    build_rp_gradient,
    cone_gradient,
    find_free_face,
    perfect_gradient_s2_subcomplex,
    spanning_forest_gradient,
)
from .simplicial import (
    SimplicialComplex,
    VertexScalarField,
    build_complex,
    closure,
    cone,
    fmax,
    is_combinatorial_manifold,
    lower_link,
    lower_star,
    predecessor_level,
    sublevel_complex,
)

__version__ = "0.1.0"
