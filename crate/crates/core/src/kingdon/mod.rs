//! Kingdon algebras `K(V,B)` of formed spaces of dimension at most three.
//!
//! For `dim V = 3` the algebra has the standard basis
//! `1, i, j, k, ij, jk, ki, ω` with `ω = (ij)k`, built on an orthogonal basis
//! of `V`. Smaller spaces give the associative Clifford algebra.

mod form;
mod table;
mod word;

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{check_involution, trace, unit_vector, Algebra, Element, Involution, InvolutionKind};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::verdict::{Checker, Verdict};

pub use form::{FormedSpace, MAX_FORM_DIM};
pub use table::{clifford_basis, clifford_table, table_3, BASIS_3};
pub use word::{mono_mul, poly_coeffs, poly_mul, Mono, Poly, VectorWord};

/// Index of `ω` in the eight-dimensional standard basis.
pub const OMEGA: usize = 7;
pub const EVEN_3: [usize; 4] = [0, 4, 5, 6];
pub const ODD_3: [usize; 4] = [1, 2, 3, 7];

#[derive(Clone, Debug)]
pub struct KingdonAlgebra {
    algebra: Arc<Algebra>,
    fs: FormedSpace,
    q_values: Vec<Scalar>,
    nu: Involution,
    kappa: Involution,
}

fn grade(n: usize, index: usize) -> u32 {
    if n == 3 {
        match index {
            0 => 0,
            1..=3 => 1,
            4..=6 => 2,
            _ => 3,
        }
    } else {
        index.count_ones()
    }
}

/// Builds `K(V,B)` on the orthogonal basis of `fs`.
pub fn build_kingdon(fs: &FormedSpace) -> Result<KingdonAlgebra> {
    let n = fs.dim();
    if n > MAX_FORM_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    let q = fs.q_values();
    let dim = 1usize << n;
    let (basis, tbl): (Vec<String>, _) = if n == 3 {
        let q3 = [q[0].clone(), q[1].clone(), q[2].clone()];
        (BASIS_3.iter().map(|s| s.to_string()).collect(), table_3(&q3))
    } else {
        (clifford_basis(n), clifford_table(&q))
    };
    let (b0, b1, bm1) = fs.sign_counts();
    let name = if n == 3 {
        format!("K({b0},{b1},{bm1})")
    } else {
        format!("Cl[{b0},{b1},{bm1}]")
    };

    let sign = |neg: bool| if neg { -Scalar::one() } else { Scalar::one() };
    let nu_diag: Vec<Scalar> = (0..dim).map(|i| sign(grade(n, i) % 2 == 1)).collect();
    let kappa_diag: Vec<Scalar> = (0..dim).map(|i| sign(i != 0)).collect();
    let kappa = Matrix::from_diagonal(&kappa_diag);

    let algebra = Arc::new(Algebra::new(name, basis, tbl, Some(kappa.clone()))?);
    let nu = Involution::new(&algebra, Matrix::from_diagonal(&nu_diag), InvolutionKind::Automorphism);
    let kappa = Involution::new(&algebra, kappa, InvolutionKind::AntiAutomorphism);
    Ok(KingdonAlgebra {
        algebra,
        fs: fs.clone(),
        q_values: q,
        nu,
        kappa,
    })
}

/// Evaluates a word of vectors in `K(V,B)` by rewriting.
pub fn reduce_word(w: &VectorWord, fs: &FormedSpace) -> Result<Element> {
    build_kingdon(fs)?.reduce(w)
}

impl KingdonAlgebra {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn formed_space(&self) -> &FormedSpace {
        &self.fs
    }

    /// `Q(f_h)` on the orthogonal basis; these are the ε-values.
    pub fn q_values(&self) -> &[Scalar] {
        &self.q_values
    }

    pub fn nu(&self) -> &Involution {
        &self.nu
    }

    pub fn kappa(&self) -> &Involution {
        &self.kappa
    }

    pub fn dim_v(&self) -> usize {
        self.fs.dim()
    }

    pub fn omega_index(&self) -> Option<usize> {
        (self.dim_v() == 3).then_some(OMEGA)
    }

    /// The `h`-th orthogonal basis vector as an algebra element.
    pub fn generator(&self, h: usize) -> Element {
        Element::basis(&self.algebra, Mono::Gen(h).index(self.dim_v()))
    }

    fn vector_poly(&self, x: &[Scalar]) -> Result<Poly> {
        if x.len() != self.dim_v() {
            return Err(Error::DimensionMismatch {
                expected: self.dim_v(),
                found: x.len(),
            });
        }
        let y = self.fs.to_orthogonal(x)?;
        Ok(y.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(h, c)| (c, Mono::Gen(h)))
            .collect())
    }

    /// The image of a vector of `V`, given in input coordinates.
    pub fn vector(&self, x: &[Scalar]) -> Result<Element> {
        let p = self.vector_poly(x)?;
        Element::new(&self.algebra, poly_coeffs(&p, self.dim_v()))
    }

    /// The `a`-th input basis vector of `V` as an algebra element.
    pub fn input_vector(&self, a: usize) -> Element {
        self.vector(&unit_vector(self.dim_v(), a)).expect("basis vector has the right length")
    }

    fn reduce_poly(&self, w: &VectorWord) -> Result<Poly> {
        match w {
            VectorWord::Leaf(x) => self.vector_poly(x),
            VectorWord::Mul(a, b) => {
                let pa = self.reduce_poly(a)?;
                let pb = self.reduce_poly(b)?;
                Ok(poly_mul(&pa, &pb, &self.q_values))
            }
        }
    }

    /// Evaluates a word of vectors by rewriting, independently of the table.
    pub fn reduce(&self, w: &VectorWord) -> Result<Element> {
        let p = self.reduce_poly(w)?;
        Element::new(&self.algebra, poly_coeffs(&p, self.dim_v()))
    }

    /// Evaluates a word by multiplying with the structure table.
    pub fn evaluate(&self, w: &VectorWord) -> Result<Element> {
        match w {
            VectorWord::Leaf(x) => self.vector(x),
            VectorWord::Mul(a, b) => self.evaluate(a)?.mul(&self.evaluate(b)?),
        }
    }

    fn require_dim3(&self) -> Result<()> {
        if self.dim_v() == 3 {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: 3,
                found: self.dim_v(),
            })
        }
    }

    /// All twelve rebracketed and permuted forms of `(ij)k` equal `ω`.
    pub fn forms_of_omega_check(&self) -> Result<Verdict> {
        self.require_dim3()?;
        let g = |h| VectorWord::leaf(self.fs.change_of_basis().column(h));
        let l = |a, b, c| VectorWord::mul(VectorWord::mul(g(a), g(b)), g(c));
        let r = |a, b, c| VectorWord::mul(g(a), VectorWord::mul(g(b), g(c)));
        let (i, j, k) = (0, 1, 2);
        let words: [(&str, i64, VectorWord); 12] = [
            ("(ij)k", 1, l(i, j, k)),
            ("(jk)i", 1, l(j, k, i)),
            ("(ki)j", 1, l(k, i, j)),
            ("-i(jk)", -1, r(i, j, k)),
            ("-j(ki)", -1, r(j, k, i)),
            ("-k(ij)", -1, r(k, i, j)),
            ("i(kj)", 1, r(i, k, j)),
            ("j(ik)", 1, r(j, i, k)),
            ("k(ji)", 1, r(k, j, i)),
            ("-(ik)j", -1, l(i, k, j)),
            ("-(ji)k", -1, l(j, i, k)),
            ("-(kj)i", -1, l(k, j, i)),
        ];
        let omega = Element::basis(&self.algebra, OMEGA);
        let mut chk = Checker::new();
        for (label, sign, w) in &words {
            let v = self.reduce(w)?.scale(&Scalar::from_int(*sign));
            chk.check(v == omega, || format!("{label} = {v}, expected ω"));
        }
        Ok(chk.finish())
    }

    /// Every word of length at most three in the input basis vectors gives
    /// the same element by rewriting and by table multiplication.
    pub fn table_agreement_check(&self) -> Result<Verdict> {
        let n = self.dim_v();
        let leaf = |h| VectorWord::basis(n, h);
        let mut words = Vec::new();
        for a in 0..n {
            words.push(leaf(a));
            for b in 0..n {
                words.push(VectorWord::mul(leaf(a), leaf(b)));
                for c in 0..n {
                    words.push(VectorWord::mul(VectorWord::mul(leaf(a), leaf(b)), leaf(c)));
                    words.push(VectorWord::mul(leaf(a), VectorWord::mul(leaf(b), leaf(c))));
                }
            }
        }
        let mut chk = Checker::new();
        for w in &words {
            let by_rules = self.reduce(w)?;
            let by_table = self.evaluate(w)?;
            chk.check(by_rules == by_table, || {
                format!("{w:?}: rewriting gives {by_rules}, table gives {by_table}")
            });
        }
        Ok(chk.finish())
    }

    /// `ℤ/2` grading of the basis, and `ν` acting as the grading operator.
    pub fn grading_check(&self) -> Result<Verdict> {
        let n = self.dim_v();
        let dim = self.algebra.dim();
        let odd = |i: usize| grade(n, i) % 2 == 1;
        let mut chk = Checker::new();
        for a in 0..dim {
            for b in 0..dim {
                let parity = odd(a) ^ odd(b);
                let prod = self.algebra.basis_product(a, b);
                let stray = (0..dim).find(|&c| !prod[c].is_zero() && odd(c) != parity);
                chk.check(stray.is_none(), || {
                    let names = self.algebra.basis_names();
                    format!(
                        "{}·{} = {} leaves the {} part",
                        names[a],
                        names[b],
                        self.algebra.format_coeffs(prod),
                        if parity { "odd" } else { "even" }
                    )
                });
            }
        }
        for a in 0..dim {
            let expect = if odd(a) { -Scalar::one() } else { Scalar::one() };
            let names = self.algebra.basis_names();
            chk.check(self.nu.matrix[(a, a)] == expect, || {
                format!("ν({}) has the wrong sign", names[a])
            });
        }
        Ok(chk.finish().and(check_involution(&self.nu)))
    }

    /// `(uv)w = w(vu)` for all input basis vectors.
    pub fn palindromic_check(&self) -> Verdict {
        let n = self.dim_v();
        let v: Vec<Element> = (0..n).map(|a| self.input_vector(a)).collect();
        let mut chk = Checker::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = &(&v[a] * &v[b]) * &v[c];
                    let rhs = &v[c] * &(&v[b] * &v[a]);
                    chk.check(lhs == rhs, || format!("(e{a}e{b})e{c} = {lhs} but e{c}(e{b}e{a}) = {rhs}"));
                }
            }
        }
        chk.finish()
    }

    /// `uv + vu = B(u,v)` for all input basis vectors.
    pub fn clifford_relation_check(&self) -> Verdict {
        let n = self.dim_v();
        let v: Vec<Element> = (0..n).map(|a| self.input_vector(a)).collect();
        let mut chk = Checker::new();
        for a in 0..n {
            for b in 0..n {
                let lhs = &(&v[a] * &v[b]) + &(&v[b] * &v[a]);
                let rhs = Element::scalar(&self.algebra, self.fs.gram()[(a, b)].clone());
                chk.check(lhs == rhs, || format!("e{a}e{b} + e{b}e{a} = {lhs} but B = {rhs}"));
            }
        }
        chk.finish()
    }

    /// `κ(x) = T(x) - x` on the basis, plus the involution laws of `ν` and `κ`.
    pub fn involution_check(&self) -> Result<Verdict> {
        let mut chk = Checker::new();
        for a in 0..self.algebra.dim() {
            let x = Element::basis(&self.algebra, a);
            let lhs = self.kappa.apply(&x)?;
            let rhs = &Element::scalar(&self.algebra, trace(&x)?) - &x;
            chk.check(lhs == rhs, || format!("κ({x}) = {lhs} but T(x) - x = {rhs}"));
        }
        Ok(chk
            .finish()
            .and(check_involution(&self.nu))
            .and(check_involution(&self.kappa)))
    }

    /// Norm as the diagonal form in the ε-values:
    /// `a₀² - ε₁a₁² - ε₂a₂² - ε₃a₃² + ε₁ε₂a₄² + ε₂ε₃a₅² + ε₃ε₁a₆² - ε₁ε₂ε₃a₇²`.
    pub fn norm_coefficients(&self) -> Result<Vec<Scalar>> {
        self.require_dim3()?;
        let e = &self.q_values;
        Ok(vec![
            Scalar::one(),
            -&e[0],
            -&e[1],
            -&e[2],
            &e[0] * &e[1],
            &e[1] * &e[2],
            &e[2] * &e[0],
            -(&e[0] * &e[1] * &e[2]),
        ])
    }
}

/// The norm of `x` from the diagonal norm form of an eight-dimensional
/// Kingdon algebra.
pub fn kingdon_norm(ka: &KingdonAlgebra, x: &Element) -> Result<Scalar> {
    if !Arc::ptr_eq(x.algebra(), ka.algebra()) && **x.algebra() != **ka.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let coeffs = ka.norm_coefficients()?;
    Ok(coeffs.iter().zip(x.coeffs()).map(|(c, a)| c * a * a).sum())
}

/// The admissible triples of the octonions with their cyclic permutations.
pub const ADMISSIBLE_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 1, 6],
    [1, 7, 5],
    [2, 7, 6],
    [3, 7, 4],
    [4, 5, 6],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoReport {
    pub triples: Vec<[usize; 3]>,
    pub failures: Vec<String>,
    pub verdict: Verdict,
}

/// Checks `xy = z` and `yx = -z` for every listed triple and its cyclic
/// permutations, in an algebra with `Q(i) = Q(j) = Q(k) = -1`.
pub fn admissible_triples(ka: &KingdonAlgebra) -> Result<FanoReport> {
    oriented_triples_check(ka, &ADMISSIBLE_TRIPLES)
}

pub fn oriented_triples_check(ka: &KingdonAlgebra, lines: &[[usize; 3]]) -> Result<FanoReport> {
    let minus_one = -Scalar::one();
    if ka.dim_v() != 3 || ka.q_values().iter().any(|q| *q != minus_one) {
        return Err(Error::NotOctonions);
    }
    let alg = ka.algebra();
    let names = alg.basis_names();
    let mut triples = Vec::new();
    for &[x, y, z] in lines {
        triples.extend([[x, y, z], [y, z, x], [z, x, y]]);
    }
    let mut chk = Checker::new();
    let mut failures = Vec::new();
    for &[x, y, z] in &triples {
        let ex = Element::basis(alg, x);
        let ey = Element::basis(alg, y);
        let ez = Element::basis(alg, z);
        for (lhs, rhs, label) in [
            (&ex * &ey, ez.clone(), format!("{}·{} = {}", names[x], names[y], names[z])),
            (&ey * &ex, -&ez, format!("{}·{} = -{}", names[y], names[x], names[z])),
        ] {
            let ok = lhs == rhs;
            if !ok {
                failures.push(format!("{label} fails: product is {lhs}"));
            }
            chk.check(ok, || format!("{label} fails: product is {lhs}"));
        }
    }
    Ok(FanoReport {
        triples,
        failures,
        verdict: chk.finish(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::norm;

    fn ka(d: &[i64]) -> KingdonAlgebra {
        build_kingdon(&FormedSpace::diagonal_ints(d).unwrap()).unwrap()
    }

    #[test]
    fn exterior_algebra_basics() {
        let k = ka(&[0, 0, 0]);
        let a = k.algebra();
        let i = Element::named(a, "i").unwrap();
        let j = Element::named(a, "j").unwrap();
        let w = Element::named(a, "ω").unwrap();
        assert_eq!(&i * &j, Element::named(a, "ij").unwrap());
        assert!((&w * &w).is_zero());
        assert_eq!(a.name(), "K(3,0,0)");
    }

    #[test]
    fn octonion_volume_element() {
        let k = ka(&[-2, -2, -2]);
        let a = k.algebra();
        let i = Element::named(a, "i").unwrap();
        let jk = Element::named(a, "jk").unwrap();
        let w = Element::named(a, "ω").unwrap();
        assert_eq!(&i * &jk, -&w);
        assert_eq!(&w * &w, Element::scalar(a, -Scalar::one()));
    }

    #[test]
    fn small_dimensions_are_clifford() {
        let k = ka(&[]);
        assert_eq!(k.algebra().dim(), 1);
        let c = ka(&[-2]);
        let i = k_gen(&c, 0);
        assert_eq!(&i * &i, Element::scalar(c.algebra(), -Scalar::one()));
        let h = ka(&[-2, -2]);
        assert!(h.algebra().associativity_verdict().is_pass());
        assert!(!h.algebra().commutativity_verdict().is_pass());
        assert!(h.table_agreement_check().unwrap().is_pass());
        assert!(h.involution_check().unwrap().is_pass());
    }

    fn k_gen(k: &KingdonAlgebra, h: usize) -> Element {
        k.generator(h)
    }

    #[test]
    fn reduce_examples() {
        let fs = FormedSpace::diagonal_ints(&[0, 0, 0]).unwrap();
        let b = |h| VectorWord::basis(3, h);
        let w = VectorWord::mul(VectorWord::mul(b(0), b(1)), b(2));
        let omega = reduce_word(&w, &fs).unwrap();
        assert_eq!(omega, Element::basis(omega.algebra(), OMEGA));
        let w2 = VectorWord::mul(b(2), VectorWord::mul(b(1), b(0)));
        assert_eq!(reduce_word(&w2, &fs).unwrap(), omega);

        let fs = FormedSpace::diagonal_ints(&[-2, 0, 0]).unwrap();
        let w3 = VectorWord::mul(VectorWord::mul(b(0), b(0)), b(1));
        let r = reduce_word(&w3, &fs).unwrap();
        assert_eq!(r, -&Element::basis(r.algebra(), 2));
    }

    #[test]
    fn reduce_rejects_wrong_length_leaves() {
        let k = ka(&[0, 0, 0]);
        assert!(k.reduce(&VectorWord::basis(2, 0)).is_err());
    }

    #[test]
    fn norm_formula_matches() {
        let k = ka(&[-2, -2, -2]);
        let x = Element::from_ints(k.algebra(), &[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(kingdon_norm(&k, &x).unwrap(), Scalar::from_int(204));
        assert_eq!(norm(&x).unwrap(), Scalar::from_int(204));
        let z = ka(&[0, 0, 0]);
        let y = Element::from_ints(z.algebra(), &[3, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(kingdon_norm(&z, &y).unwrap(), Scalar::from_int(9));
    }

    #[test]
    fn non_diagonal_forms() {
        let g = Matrix::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, -2]]);
        let k = build_kingdon(&FormedSpace::new(g).unwrap()).unwrap();
        assert!(k.clifford_relation_check().is_pass());
        assert!(k.palindromic_check().is_pass());
        assert!(k.table_agreement_check().unwrap().is_pass());
    }

    #[test]
    fn fano_requires_octonions() {
        assert!(matches!(admissible_triples(&ka(&[0, 0, 0])), Err(Error::NotOctonions)));
    }
}
