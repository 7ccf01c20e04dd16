//! Finite-dimensional unital algebras given by structure constants, and
//! arithmetic on their elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::verdict::{Checker, Verdict};

/// A unital algebra over the rationals. Basis index 0 is the unit.
///
/// `table[i * dim + j]` holds the coefficient vector of `e_i · e_j`. A sparse
/// integer copy of the table over a common denominator is kept alongside for
/// multiplication.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    table: Vec<Vec<Scalar>>,
    sparse: Vec<Vec<(usize, BigInt)>>,
    sparse_denom: BigInt,
    conjugation: Option<Matrix>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.basis == other.basis
            && self.table == other.table
            && self.conjugation == other.conjugation
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("basis", &self.basis)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    /// Builds an algebra from a full product table `table[i][j] = e_i e_j`.
    ///
    /// The unit must sit at index 0 and act as a two-sided identity on the
    /// basis.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        table: Vec<Vec<Vec<Scalar>>>,
        conjugation: Option<Matrix>,
    ) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be at least 1".into()));
        }
        if table.len() != dim || table.iter().any(|row| row.len() != dim) {
            return Err(Error::InvalidAlgebra(format!("table must be {dim}x{dim}")));
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for row in table {
            for v in row {
                if v.len() != dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "product vectors must have length {dim}, found {}",
                        v.len()
                    )));
                }
                flat.push(v);
            }
        }
        for j in 0..dim {
            let e = unit_vector(dim, j);
            if flat[j] != e || flat[j * dim] != e {
                return Err(Error::InvalidAlgebra(format!(
                    "basis element 0 does not act as the unit on `{}`",
                    basis[j]
                )));
            }
        }
        if let Some(c) = &conjugation {
            if c.rows() != dim || c.cols() != dim {
                return Err(Error::InvalidConjugation(format!(
                    "conjugation matrix must be {dim}x{dim}"
                )));
            }
        }
        let sparse_denom = common_denom(flat.iter().flatten());
        let sparse = flat
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, scaled_numer(c, &sparse_denom)))
                    .collect()
            })
            .collect();
        Ok(Algebra {
            name: name.into(),
            basis,
            table: flat,
            sparse,
            sparse_denom,
            conjugation,
        })
    }

    pub fn into_shared(self) -> Arc<Algebra> {
        Arc::new(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// Coefficients of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    pub fn table_rows(&self) -> Vec<Vec<Vec<Scalar>>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn conjugation(&self) -> Option<&Matrix> {
        self.conjugation.as_ref()
    }

    pub fn with_conjugation(mut self, conj: Option<Matrix>) -> Self {
        self.conjugation = conj;
        self
    }

    /// Same table with every product reversed (`x ∘ y = yx`).
    pub fn opposite(&self) -> Algebra {
        let d = self.dim();
        let table = (0..d)
            .map(|i| (0..d).map(|j| self.basis_product(j, i).to_vec()).collect())
            .collect();
        Algebra::new(
            format!("{}^op", self.name),
            self.basis.clone(),
            table,
            self.conjugation.clone(),
        )
        .expect("opposite of a valid algebra is valid")
    }

    /// Bilinear extension of the table on raw coefficient vectors.
    ///
    /// Works on integer numerators over common denominators and reduces each
    /// output coefficient once.
    pub fn mul_coeffs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        debug_assert!(x.len() == d && y.len() == d);
        let (xn, xd) = integer_form(x);
        let (yn, yd) = integer_form(y);
        let mut acc = vec![BigInt::zero(); d];
        for (i, a) in xn.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in yn.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.sparse[i * d + j] {
                    acc[*k] += &ab * c;
                }
            }
        }
        let denom = xd * yd * &self.sparse_denom;
        acc.into_iter()
            .map(|n| Scalar::from_ratio(BigRational::new(n, denom.clone())))
            .collect()
    }

    /// `(e_a e_b) e_c - e_a (e_b e_c)` on basis indices.
    pub fn basis_associator(&self, a: usize, b: usize, c: usize) -> Vec<Scalar> {
        let d = self.dim();
        let ec = unit_vector(d, c);
        let ea = unit_vector(d, a);
        let left = self.mul_coeffs(self.basis_product(a, b), &ec);
        let right = self.mul_coeffs(&ea, self.basis_product(b, c));
        sub_vec(&left, &right)
    }

    /// Renders a coefficient vector as a signed sum of basis names.
    pub fn format_coeffs(&self, coeffs: &[Scalar]) -> String {
        format_terms(&self.basis, coeffs)
    }

    /// Commutativity decided on all basis pairs.
    pub fn commutativity_verdict(&self) -> Verdict {
        let mut chk = Checker::new();
        let d = self.dim();
        'outer: for a in 0..d {
            for b in a + 1..d {
                chk.check(self.basis_product(a, b) == self.basis_product(b, a), || {
                    format!("{} {} != {} {}", self.basis[a], self.basis[b], self.basis[b], self.basis[a])
                });
                if chk.failed() {
                    break 'outer;
                }
            }
        }
        chk.finish()
    }

    /// Associativity decided on all basis triples.
    pub fn associativity_verdict(&self) -> Verdict {
        self.triple_verdict(|alg, a, b, c| {
            let assoc = alg.basis_associator(a, b, c);
            if assoc.iter().all(Scalar::is_zero) {
                Ok(())
            } else {
                Err(format!(
                    "({},{},{}) = {}",
                    alg.basis[a],
                    alg.basis[b],
                    alg.basis[c],
                    alg.format_coeffs(&assoc)
                ))
            }
        })
    }

    /// Alternativity via the alternating-associator criterion on all basis
    /// triples, which suffices because the associator is trilinear.
    pub fn alternativity_verdict(&self) -> Verdict {
        self.triple_verdict(|alg, a, b, c| {
            let base = alg.basis_associator(a, b, c);
            let neg = neg_vec(&base);
            // Transpositions generate S3; checking (12) and (23) covers the group.
            for (perm, expect) in [((b, a, c), &neg), ((a, c, b), &neg)] {
                let got = alg.basis_associator(perm.0, perm.1, perm.2);
                if &got != expect {
                    return Err(format!(
                        "associator not alternating on ({},{},{})",
                        alg.basis[a], alg.basis[b], alg.basis[c]
                    ));
                }
            }
            Ok(())
        })
    }

    /// Flexibility `(x,y,x) = 0`, linearized to `(a,b,c) + (c,b,a) = 0`.
    pub fn flexibility_verdict(&self) -> Verdict {
        self.triple_verdict(|alg, a, b, c| {
            let s = add_vec(&alg.basis_associator(a, b, c), &alg.basis_associator(c, b, a));
            if s.iter().all(Scalar::is_zero) {
                Ok(())
            } else {
                Err(format!(
                    "(a,b,c)+(c,b,a) != 0 for ({},{},{})",
                    alg.basis[a], alg.basis[b], alg.basis[c]
                ))
            }
        })
    }

    fn triple_verdict<F>(&self, f: F) -> Verdict
    where
        F: Fn(&Algebra, usize, usize, usize) -> std::result::Result<(), String>,
    {
        let d = self.dim();
        let mut chk = Checker::new();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    chk.record(f(self, a, b, c));
                    if chk.failed() {
                        return chk.finish();
                    }
                }
            }
        }
        chk.finish()
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            name: self.name.clone(),
            basis: self.basis.clone(),
            table: self.table_rows(),
            conjugation: self.conjugation.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("algebra serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Algebra> {
        let j: AlgebraJson = serde_json::from_str(s)?;
        Algebra::try_from(j)
    }
}

/// Serialized form: `{ "name", "basis", "table", "conjugation"? }` with
/// rationals written as `"p/q"` strings (integers as `"p"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub basis: Vec<String>,
    pub table: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugation: Option<Matrix>,
}

impl TryFrom<AlgebraJson> for Algebra {
    type Error = Error;
    fn try_from(j: AlgebraJson) -> Result<Algebra> {
        Algebra::new(j.name, j.basis, j.table, j.conjugation)
    }
}

/// An element of a specific algebra.
#[derive(Clone)]
pub struct Element {
    algebra: Arc<Algebra>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_coeffs(&self.coeffs))
    }
}

fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn new(algebra: &Arc<Algebra>, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: coeffs.len(),
            });
        }
        Ok(Element {
            algebra: Arc::clone(algebra),
            coeffs,
        })
    }

    pub fn from_ints(algebra: &Arc<Algebra>, coeffs: &[i64]) -> Result<Self> {
        Self::new(algebra, coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Element {
            algebra: Arc::clone(algebra),
            coeffs: vec![Scalar::zero(); algebra.dim()],
        }
    }

    pub fn one(algebra: &Arc<Algebra>) -> Self {
        Self::basis(algebra, 0)
    }

    pub fn scalar(algebra: &Arc<Algebra>, s: Scalar) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[0] = s;
        e
    }

    /// Basis element `e_i`. Panics if out of range.
    pub fn basis(algebra: &Arc<Algebra>, i: usize) -> Self {
        Element {
            algebra: Arc::clone(algebra),
            coeffs: unit_vector(algebra.dim(), i),
        }
    }

    pub fn named(algebra: &Arc<Algebra>, name: &str) -> Option<Self> {
        algebra.basis_index(name).map(|i| Self::basis(algebra, i))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// True iff the element lies in `F·1`.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    pub fn scalar_part(&self) -> &Scalar {
        &self.coeffs[0]
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn with_coeffs(&self, coeffs: Vec<Scalar>) -> Element {
        Element {
            algebra: Arc::clone(&self.algebra),
            coeffs,
        }
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.with_coeffs(self.algebra.mul_coeffs(&self.coeffs, &other.coeffs)))
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.with_coeffs(add_vec(&self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.with_coeffs(sub_vec(&self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        self.with_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Image under a linear map given as a matrix acting on coefficient columns.
    pub fn apply(&self, m: &Matrix) -> Result<Element> {
        Ok(self.with_coeffs(m.mul_vec(&self.coeffs)?))
    }

    /// `x*` under the algebra's conjugation.
    pub fn conjugate(&self) -> Result<Element> {
        let conj = self
            .algebra
            .conjugation()
            .ok_or_else(|| Error::NoConjugation(self.algebra.name().to_string()))?;
        self.apply(conj)
    }
}

fn expect_same<T>(r: Result<T>) -> T {
    r.expect("element operands must belong to the same algebra")
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        expect_same(Element::add(self, rhs))
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        expect_same(Element::sub(self, rhs))
    }
}

/// Panics when the operands live in different algebras; use
/// [`Element::mul`] for the checked form.
impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        expect_same(Element::mul(self, rhs))
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.with_coeffs(neg_vec(&self.coeffs))
    }
}

pub fn mul(x: &Element, y: &Element) -> Result<Element> {
    x.mul(y)
}

/// `(xy)z - x(yz)`.
pub fn associator(x: &Element, y: &Element, z: &Element) -> Result<Element> {
    x.mul(y)?.mul(z)?.sub(&x.mul(&y.mul(z)?)?)
}

/// `xy - yx`.
pub fn commutator(x: &Element, y: &Element) -> Result<Element> {
    x.mul(y)?.sub(&y.mul(x)?)
}

/// `T(x)` with `x + x* = T(x)·1`.
pub fn trace(x: &Element) -> Result<Scalar> {
    let t = x.add(&x.conjugate()?)?;
    if t.is_scalar() {
        Ok(t.scalar_part().clone())
    } else {
        Err(Error::NotScalar(format!("x + x* = {t}")))
    }
}

/// `N(x)` with `x x* = N(x)·1`.
pub fn norm(x: &Element) -> Result<Scalar> {
    let n = x.mul(&x.conjugate()?)?;
    if n.is_scalar() {
        Ok(n.scalar_part().clone())
    } else {
        Err(Error::NotScalar(format!("x x* = {n}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionKind {
    Automorphism,
    AntiAutomorphism,
}

/// A linear map of order two on an algebra, claimed to be an automorphism
/// or an anti-automorphism.
#[derive(Clone, Debug)]
pub struct Involution {
    pub algebra: Arc<Algebra>,
    pub matrix: Matrix,
    pub kind: InvolutionKind,
}

impl Involution {
    pub fn new(algebra: &Arc<Algebra>, matrix: Matrix, kind: InvolutionKind) -> Self {
        Involution {
            algebra: Arc::clone(algebra),
            matrix,
            kind,
        }
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        x.apply(&self.matrix)
    }
}

/// Checks `φ² = id` and the (anti-)homomorphism law on every basis pair.
pub fn check_involution(inv: &Involution) -> Verdict {
    let d = inv.algebra.dim();
    let mut chk = Checker::new();
    if inv.matrix.rows() != d || inv.matrix.cols() != d {
        chk.check(false, || format!("matrix is not {d}x{d}"));
        return chk.finish();
    }
    let sq = inv.matrix.mul(&inv.matrix).expect("square matrices");
    chk.check(sq == Matrix::identity(d), || "matrix squared is not the identity".into());
    let squared = chk.finish();
    if !squared.is_pass() {
        return squared;
    }
    squared.and(check_linear_map(&inv.algebra, &inv.algebra, &inv.matrix, inv.kind))
}

/// Checks that `m` (columns = images of the source basis, in target
/// coordinates) is a homomorphism `src -> dst` on every basis pair.
pub fn check_homomorphism(src: &Algebra, dst: &Algebra, m: &Matrix) -> Verdict {
    check_linear_map(src, dst, m, InvolutionKind::Automorphism)
}

fn check_linear_map(src: &Algebra, dst: &Algebra, m: &Matrix, kind: InvolutionKind) -> Verdict {
    let mut chk = Checker::new();
    if m.rows() != dst.dim() || m.cols() != src.dim() {
        chk.check(false, || {
            format!("map must be {}x{}, found {}x{}", dst.dim(), src.dim(), m.rows(), m.cols())
        });
        return chk.finish();
    }
    let images: Vec<Vec<Scalar>> = (0..src.dim()).map(|i| m.column(i)).collect();
    for a in 0..src.dim() {
        for b in 0..src.dim() {
            let lhs = m.mul_vec(src.basis_product(a, b)).expect("shape checked");
            let rhs = match kind {
                InvolutionKind::Automorphism => dst.mul_coeffs(&images[a], &images[b]),
                InvolutionKind::AntiAutomorphism => dst.mul_coeffs(&images[b], &images[a]),
            };
            chk.check(lhs == rhs, || {
                format!(
                    "pair ({}, {}): φ(xy) = {} but the law requires {}",
                    src.basis_names()[a],
                    src.basis_names()[b],
                    dst.format_coeffs(&lhs),
                    dst.format_coeffs(&rhs)
                )
            });
            if chk.failed() {
                return chk.finish();
            }
        }
    }
    chk.finish()
}

pub(crate) fn unit_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

pub(crate) fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn neg_vec(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

/// `"2ij - (1/2)k + 3"` style rendering; `"0"` for the zero vector.
fn common_denom<'a>(xs: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    xs.into_iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// `c · denom` for a `denom` that `c`'s denominator divides.
fn scaled_numer(c: &Scalar, denom: &BigInt) -> BigInt {
    c.numer() * (denom / c.denom())
}

fn integer_form(x: &[Scalar]) -> (Vec<BigInt>, BigInt) {
    let d = common_denom(x);
    (x.iter().map(|c| scaled_numer(c, &d)).collect(), d)
}

pub fn format_terms(basis: &[String], coeffs: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.signum() < 0;
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let name = &basis[i];
        if i == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(name);
        } else if mag.is_integer() {
            out.push_str(&format!("{mag}{name}"));
        } else {
            out.push_str(&format!("({mag}){name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
