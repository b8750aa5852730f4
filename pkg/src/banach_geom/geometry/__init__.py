from .norms import (
    ball_vertices,
    distance_to_set,
    distances_to_polytope,
    distances_to_set,
    dual_norm,
    facet_normals,
    norm,
    norm_axiom_spot_check,
    sphere_sample,
    subgradient,
    unit,
)
from .faces import (
    a0_set,
    c_region,
    containing_faces,
    d_region,
    directed_hausdorff,
    duality_map,
    exposed_face,
    face_coincidence,
    hausdorff,
    hausdorff_with_error,
    slice_region,
)
from .daugavet import (
    anti_daugavet_probe,
    approx_eigen_residual,
    daugavet_residual,
    operator_norm,
    rank_one_operator,
    spectrum_report,
)
from .properties import (
    check_acs,
    check_hlur,
    check_hs_slices,
    check_lur,
    check_rotund,
    check_smooth,
    cset_convergence,
    dset_convergence,
    finite_dimensional_note,
    sequence_probe,
    verify_certificate,
)
from .farthest import (
    density_experiment,
    far_set,
    farthest_distance,
    farthest_points,
    hull_equality_check,
    hull_vertices,
)

__all__ = [
    # normed-space
    "norm",
    "dual_norm",
    "unit",
    "subgradient",
    "ball_vertices",
    "facet_normals",
    "sphere_sample",
    "distances_to_polytope",
    "distances_to_set",
    "distance_to_set",
    "norm_axiom_spot_check",
    # face-geometry
    "exposed_face",
    "duality_map",
    "containing_faces",
    "a0_set",
    "slice_region",
    "d_region",
    "c_region",
    "directed_hausdorff",
    "hausdorff",
    "hausdorff_with_error",
    "face_coincidence",
    # property-lab
    "check_rotund",
    "check_smooth",
    "check_acs",
    "check_hlur",
    "check_hs_slices",
    "check_lur",
    "dset_convergence",
    "cset_convergence",
    "sequence_probe",
    "finite_dimensional_note",
    "verify_certificate",
    # daugavet-lab
    "operator_norm",
    "daugavet_residual",
    "approx_eigen_residual",
    "rank_one_operator",
    "spectrum_report",
    "anti_daugavet_probe",
    # farthest-points
    "farthest_distance",
    "farthest_points",
    "far_set",
    "hull_vertices",
    "density_experiment",
    "hull_equality_check",
]
