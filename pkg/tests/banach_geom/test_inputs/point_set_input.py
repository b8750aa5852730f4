square_points = [[1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0]]

square_with_centroid_points = square_points + [[0.0, 0.0]]

two_points = [[0.0, 0.0], [3.0, 1.0]]

valid_point_set_input = {
    "points": square_points,
    "label": "square",
}

ragged_point_set_input = {
    "points": [[1.0, 1.0], [1.0]],
}

empty_point_set_input = {
    "points": [],
}

nonfinite_point_set_input = {
    "points": [[1.0, float("nan")]],
}

collinear_points = [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]

square_with_duplicate_points = square_points + [[1.0, 1.0]]
