use proptest::prelude::*;
use torinv::matrix::MatrixZ;

/// Random integer matrix with 1..=max_rows rows, 1..=max_cols columns, and
/// entries in [-max_abs, max_abs].
pub fn int_matrix(
    max_rows: usize,
    max_cols: usize,
    max_abs: i64,
) -> impl Strategy<Value = MatrixZ> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-max_abs..=max_abs, c), r)
            .prop_map(MatrixZ::from_i64_rows)
    })
}

/// A matrix together with a random permutation of its column indices.
pub fn matrix_with_column_permutation(
    max_rows: usize,
    max_cols: usize,
    max_abs: i64,
) -> impl Strategy<Value = (MatrixZ, Vec<usize>)> {
    int_matrix(max_rows, max_cols, max_abs).prop_flat_map(|a| {
        let cols = a.cols();
        (
            Just(a),
            Just((0..cols).collect::<Vec<usize>>()).prop_shuffle(),
        )
    })
}
