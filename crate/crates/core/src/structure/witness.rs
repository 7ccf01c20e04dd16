use std::sync::Arc;

use rand::Rng;

use crate::algebra::{Algebra, Element};
use crate::cayley_dickson::{relabel, tower, Tower};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::kingdon::{build_kingdon, FormedSpace, KingdonAlgebra, Mono};
use crate::sampling::Sampler;
use crate::verdict::{Checker, Verdict};

/// Attempts of the randomized isotropic-vector search.
const SEARCH_BUDGET: usize = 20_000;

/// A pair of nonzero elements with product zero, if one exists.
///
/// Tiers, in order: a basis element squaring to zero gives `(e, e)`; a basis
/// element with `e² = s²` for rational `s > 0` gives `(1 - e/s, 1 + e/s)`; a
/// seeded search for `x ≠ 0` with `N(x) = 0` gives `(x, x*)`.
pub fn find_zero_divisor(ka: &KingdonAlgebra) -> Result<Option<(Element, Element)>> {
    let a = ka.algebra();
    let one = Element::one(a);
    let squares: Vec<(Element, Scalar)> = (1..a.dim())
        .filter_map(|l| {
            let e = Element::basis(a, l);
            let sq = &e * &e;
            sq.is_scalar().then(|| (e, sq.scalar_part().clone()))
        })
        .collect();
    if let Some((e, _)) = squares.iter().find(|(_, q)| q.is_zero()) {
        return Ok(Some((e.clone(), e.clone())));
    }
    for (e, q) in &squares {
        if let Some(s) = q.sqrt_exact().filter(|s| !s.is_zero()) {
            let f = e.scale(&s.recip().expect("nonzero"));
            return Ok(Some((&one - &f, &one + &f)));
        }
    }
    if ka.dim_v() != 3 || ka.q_values().iter().all(|q| q.signum() < 0) {
        return Ok(None);
    }
    Ok(isotropic_search(ka)?.map(|x| {
        let xs = x.conjugate().expect("Kingdon algebras carry κ");
        (x, xs)
    }))
}

/// Seeded search for a nonzero `x` with `Σ c_l x_l² = 0` in the diagonal
/// norm form: random values on all coordinates but one, then solve for the
/// last one when the quotient is a rational square.
fn isotropic_search(ka: &KingdonAlgebra) -> Result<Option<Element>> {
    let c = ka.norm_coefficients()?;
    let mut s = Sampler::new(crate::sampling::DEFAULT_SEED);
    let support: Vec<usize> = (0..c.len()).filter(|&l| !c[l].is_zero()).collect();
    for _ in 0..SEARCH_BUDGET {
        let pivot = support[s.rng().random_range(0..support.len())];
        let mut x = vec![Scalar::zero(); c.len()];
        let mut rest = Scalar::zero();
        for &l in &support {
            if l != pivot && s.rng().random_bool(0.5) {
                x[l] = Scalar::from_int(s.int(-6, 6));
                rest += &c[l] * &x[l] * &x[l];
            }
        }
        if rest.is_zero() {
            continue;
        }
        let need = -(rest / &c[pivot]);
        if let Some(root) = need.sqrt_exact() {
            x[pivot] = root;
            return Ok(Some(Element::new(ka.algebra(), x)?));
        }
    }
    Ok(None)
}

/// Checks that a claimed witness consists of nonzero elements with zero product.
pub fn verify_zero_divisor(x: &Element, y: &Element) -> bool {
    !x.is_zero() && !y.is_zero() && (x * y).is_zero()
}

fn scaled_basis_with_square(ka: &KingdonAlgebra, target: &Scalar) -> Vec<Element> {
    let a = ka.algebra();
    let mut out = Vec::new();
    for l in 1..a.dim() {
        let e = Element::basis(a, l);
        let sq = &e * &e;
        if !sq.is_scalar() || sq.scalar_part().is_zero() {
            continue;
        }
        // (t e)² = t² q = target
        let t2 = target / sq.scalar_part();
        if let Some(t) = t2.sqrt_exact() {
            out.push(e.scale(&t));
        }
    }
    out
}

/// A traceless `x` with `x² = 1` among scaled basis elements. Such an `x`
/// spans a copy of the split complex numbers.
pub fn split_complex_witness(ka: &KingdonAlgebra) -> Option<Element> {
    scaled_basis_with_square(ka, &Scalar::one()).into_iter().next()
}

/// Traceless `x, y` with `x² = 1`, `y² = -1` and `xy = -yx` among scaled
/// basis elements. Such a pair generates a copy of the split quaternions.
pub fn split_quaternion_witness(ka: &KingdonAlgebra) -> Option<(Element, Element)> {
    let xs = scaled_basis_with_square(ka, &Scalar::one());
    let ys = scaled_basis_with_square(ka, &-Scalar::one());
    for x in &xs {
        for y in &ys {
            if (&(x * y) + &(y * x)).is_zero() {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// A verified algebra isomorphism between two Kingdon algebras.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    pub source: KingdonAlgebra,
    pub target: KingdonAlgebra,
    /// Columns are the images of the source basis in target coordinates.
    pub matrix: Matrix,
}

/// The isomorphism `K(1,1,1) -> K(1,2,0)` with `v₁² = w₁² = 0`,
/// `v₂² = w₂² = w₃² = 1`, `v₃² = -1`, sending `v₁ ↦ w₁`, `v₂ ↦ w₂`,
/// `v₃ ↦ w₂w₃`, `v₁v₂ ↦ w₁w₂`, `v₁v₃ ↦ -(w₁w₂)w₃`, `v₂v₃ ↦ w₃`,
/// `(v₁v₂)v₃ ↦ -w₁w₃`.
pub fn explicit_iso_111_120() -> Result<Isomorphism> {
    let source = build_kingdon(&FormedSpace::diagonal_ints(&[0, 2, -2])?)?;
    let target = build_kingdon(&FormedSpace::diagonal_ints(&[0, 2, 2])?)?;
    // standard basis 1, i, j, k, ij, jk, ki, ω; ki = -ik and ik = -ki
    let images: [usize; 8] = [0, 1, 2, 5, 4, 3, 7, 6];
    let mut matrix = Matrix::zeros(8, 8);
    for (src, &dst) in images.iter().enumerate() {
        matrix[(dst, src)] = Scalar::one();
    }
    let verdict = check_isomorphism(source.algebra(), target.algebra(), &matrix);
    if let Some(cx) = verdict.counterexample() {
        return Err(Error::VerificationFailed(cx.to_string()));
    }
    Ok(Isomorphism { source, target, matrix })
}

/// Invertibility plus the homomorphism law on all basis pairs.
pub fn check_isomorphism(src: &Algebra, dst: &Algebra, m: &Matrix) -> Verdict {
    let mut chk = Checker::new();
    let invertible = m.is_square() && m.determinant().is_ok_and(|d| !d.is_zero());
    chk.check(invertible, || "map is not invertible".into());
    if !invertible {
        return chk.finish();
    }
    chk.finish().and(crate::algebra::check_homomorphism(src, dst, m))
}

/// The Cayley-Dickson algebra `Q^{ε₁…εₙ}` re-expressed in the standard
/// Kingdon basis, with `i, j, k` sent to the successive new generators.
pub fn tower_in_kingdon_basis(ka: &KingdonAlgebra) -> Result<Algebra> {
    let n = ka.dim_v();
    let t = Arc::new(tower(&Tower::new(ka.q_values().to_vec())?)?);
    let gens: Vec<Element> = (0..n).map(|h| Element::basis(&t, 1 << h)).collect();
    let dim = 1usize << n;
    let mut cols = vec![Vec::new(); dim];
    cols[0] = Element::one(&t).into_coeffs();
    for (h, g) in gens.iter().enumerate() {
        cols[Mono::Gen(h).index(n)] = g.coeffs().to_vec();
    }
    if n >= 2 {
        let pairs: &[(usize, usize)] = if n == 3 { &[(0, 1), (1, 2), (2, 0)] } else { &[(0, 1)] };
        for &(a, b) in pairs {
            cols[Mono::Biv(a, b).index(n)] = (&gens[a] * &gens[b]).into_coeffs();
        }
    }
    if n == 3 {
        cols[Mono::Omega.index(n)] = (&(&gens[0] * &gens[1]) * &gens[2]).into_coeffs();
    }
    let m = Matrix::from_columns(&cols)?;
    if m.determinant()?.is_zero() {
        return Err(Error::Mismatch("generator images are linearly dependent".into()));
    }
    relabel(&t, &m, ka.algebra().basis_names().to_vec())
}

/// Compares the structure tables of `K(V,B)` and `Q^{ε₁…εₙ}` entrywise.
pub fn kingdon_vs_tower(ka: &KingdonAlgebra) -> Result<Verdict> {
    let k = ka.algebra();
    let t = tower_in_kingdon_basis(ka)?;
    let names = k.basis_names();
    let mut chk = Checker::new();
    for a in 0..k.dim() {
        for b in 0..k.dim() {
            let lhs = k.basis_product(a, b);
            let rhs = t.basis_product(a, b);
            chk.check(lhs == rhs, || {
                format!(
                    "entry ({}, {}): Kingdon {} vs Cayley-Dickson {}",
                    names[a],
                    names[b],
                    k.format_coeffs(lhs),
                    k.format_coeffs(rhs)
                )
            });
            if chk.failed() {
                return Ok(chk.finish());
            }
        }
    }
    Ok(chk.finish())
}
