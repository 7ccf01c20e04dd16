use crate::algebra::{sub_vec, unit_vector, Algebra};
use crate::exact::{Matrix, Scalar};

/// A subspace of an algebra given by a basis in reduced echelon form.
pub type Subspace = Vec<Vec<Scalar>>;

/// Kernel of the linear map whose rows are given, as an echelon basis.
fn solve(a: &Algebra, rows: Vec<Vec<Scalar>>) -> Subspace {
    let m = if rows.is_empty() {
        Matrix::zeros(0, a.dim())
    } else {
        Matrix::from_rows(rows).expect("uniform row length")
    };
    echelon(&m.kernel_basis())
}

/// Canonical basis of the span of `vectors`: the nonzero rows of its RREF.
pub fn echelon(vectors: &[Vec<Scalar>]) -> Subspace {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("uniform row length");
    let (r, rank) = m.rref();
    (0..rank).map(|i| r.row(i).to_vec()).collect()
}

pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    echelon(a) == echelon(b)
}

/// Rows expressing `x ↦ L(x)` for a linear map given by its values on the
/// basis, one row per output coordinate.
fn map_rows(dim: usize, image: impl Fn(usize) -> Vec<Scalar>) -> Vec<Vec<Scalar>> {
    let cols: Vec<Vec<Scalar>> = (0..dim).map(image).collect();
    let out = cols.first().map_or(0, Vec::len);
    (0..out).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

fn commutant_rows(a: &Algebra) -> Vec<Vec<Scalar>> {
    let d = a.dim();
    let mut rows = Vec::new();
    for i in 1..d {
        rows.extend(map_rows(d, |c| sub_vec(a.basis_product(c, i), a.basis_product(i, c))));
    }
    rows
}

fn nucleus_rows(a: &Algebra) -> Vec<Vec<Scalar>> {
    let d = a.dim();
    let mut rows = Vec::new();
    for i in 1..d {
        for j in 1..d {
            rows.extend(map_rows(d, |c| a.basis_associator(c, i, j)));
            rows.extend(map_rows(d, |c| a.basis_associator(i, c, j)));
            rows.extend(map_rows(d, |c| a.basis_associator(i, j, c)));
        }
    }
    rows
}

/// Elements commuting with every element.
pub fn commutant(a: &Algebra) -> Subspace {
    solve(a, commutant_rows(a))
}

/// Elements associating with every pair of elements in each slot.
pub fn nucleus(a: &Algebra) -> Subspace {
    solve(a, nucleus_rows(a))
}

/// Intersection of the commutant and the nucleus.
pub fn center(a: &Algebra) -> Subspace {
    let mut rows = commutant_rows(a);
    rows.extend(nucleus_rows(a));
    solve(a, rows)
}

/// The span of the named basis elements.
pub fn span_of(a: &Algebra, names: &[&str]) -> Option<Subspace> {
    let vs: Option<Vec<Vec<Scalar>>> = names
        .iter()
        .map(|n| a.basis_index(n).map(|i| unit_vector(a.dim(), i)))
        .collect();
    vs.map(|v| echelon(&v))
}
