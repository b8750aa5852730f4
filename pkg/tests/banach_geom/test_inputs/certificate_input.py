linf_acs_certificate = {
    "x": [1.0, 1.0],
    "y": [0.0, 1.0],
    "f": [0.5, 0.5],
    "f_of_y": 0.5,
    "norm_sum": 2.0,
}

# f(y) = 1 here, so this "certificate" shows nothing
linf_non_certificate = {
    "x": [1.0, 1.0],
    "y": [1.0, 0.0],
    "f": [1.0, 0.0],
    "f_of_y": 1.0,
    "norm_sum": 2.0,
}

linf_rotund_certificate = {
    "functional": [1.0, 0.0],
    "points": [[1.0, -1.0], [1.0, 1.0]],
    "diameter": 2.0,
}

linf_smooth_certificate = {
    "point": [1.0, 1.0],
    "functionals": [[0.0, 1.0], [1.0, 0.0]],
    "diameter": 2.0,
}

linf_shear_certificate = {
    "kind": "shear",
    "operator": [[0.0, 1.0], [0.0, 0.0]],
}

malformed_certificate = {
    "x": [1.0, 1.0],
}
