//! The Cayley-Dickson doubling process `A -> A^γ` on symmetric quadratic
//! algebras, and iterated towers over the rationals.
//!
//! Pairs multiply as `(a,b)(c,d) = (ac + γ d* b, da + b c*)` and conjugate as
//! `(a,b)* = (a*, -b)`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{
    check_homomorphism, check_involution, norm, trace, Algebra, Element, Involution, InvolutionKind,
};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::sampling::Sampler;
use crate::verdict::{Checker, Verdict};

/// Longest tower supported; four doublings give dimension 16.
pub const MAX_TOWER_HEIGHT: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublingParams {
    pub gamma: Scalar,
}

/// Doubling parameters applied left to right starting from the base field.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tower {
    gammas: Vec<Scalar>,
}

impl Tower {
    pub fn new(gammas: Vec<Scalar>) -> Result<Self> {
        if gammas.len() > MAX_TOWER_HEIGHT {
            return Err(Error::TowerTooTall(gammas.len()));
        }
        Ok(Tower { gammas })
    }

    pub fn from_ints(gammas: &[i64]) -> Result<Self> {
        Self::new(gammas.iter().map(|&g| Scalar::from_int(g)).collect())
    }

    pub fn gammas(&self) -> &[Scalar] {
        &self.gammas
    }

    pub fn height(&self) -> usize {
        self.gammas.len()
    }
}

/// The rationals as a one-dimensional algebra with trivial conjugation.
pub fn base_field() -> Algebra {
    Algebra::new(
        "Q",
        vec!["1".to_string()],
        vec![vec![vec![Scalar::one()]]],
        Some(Matrix::identity(1)),
    )
    .expect("base field is a valid algebra")
}

fn generator_name(dim: usize) -> String {
    if dim.is_power_of_two() {
        format!("e{}", dim.trailing_zeros() + 1)
    } else {
        "e".to_string()
    }
}

/// One Cayley-Dickson step. The basis of the result is `(b, 0)` for each
/// basis element `b` of `a` followed by `(0, b)`, named `b` and `b·e_n`.
pub fn double(a: &Algebra, gamma: &Scalar) -> Result<Algebra> {
    let conj = a
        .conjugation()
        .ok_or_else(|| Error::InvalidConjugation(format!("`{}` has no conjugation", a.name())))?;
    let shared = Arc::new(a.clone());
    let verdict = check_involution(&Involution::new(
        &shared,
        conj.clone(),
        InvolutionKind::AntiAutomorphism,
    ));
    if let Verdict::Fail { counterexample, .. } = verdict {
        return Err(Error::InvalidConjugation(counterexample));
    }

    let n = a.dim();
    let d = 2 * n;
    let star: Vec<Vec<Scalar>> = (0..n).map(|q| conj.column(q)).collect();
    let unit = |q: usize| {
        let mut v = vec![Scalar::zero(); n];
        v[q] = Scalar::one();
        v
    };
    let embed = |first: Vec<Scalar>, second: Vec<Scalar>| -> Vec<Scalar> {
        let mut v = first;
        v.extend(second);
        v
    };
    let zero = vec![Scalar::zero(); n];

    let mut table = vec![vec![Vec::new(); d]; d];
    for p in 0..n {
        for q in 0..n {
            // (e_p,0)(e_q,0) = (e_p e_q, 0)
            table[p][q] = embed(a.basis_product(p, q).to_vec(), zero.clone());
            // (e_p,0)(0,e_q) = (0, e_q e_p)
            table[p][n + q] = embed(zero.clone(), a.basis_product(q, p).to_vec());
            // (0,e_p)(e_q,0) = (0, e_p e_q*)
            table[n + p][q] = embed(zero.clone(), a.mul_coeffs(&unit(p), &star[q]));
            // (0,e_p)(0,e_q) = (γ e_q* e_p, 0)
            let prod = a.mul_coeffs(&star[q], &unit(p));
            table[n + p][n + q] = embed(prod.iter().map(|c| c * gamma).collect(), zero.clone());
        }
    }

    let mut new_conj = Matrix::zeros(d, d);
    for r in 0..n {
        for c in 0..n {
            new_conj[(r, c)] = conj[(r, c)].clone();
        }
        new_conj[(n + r, n + r)] = -Scalar::one();
    }

    let g = generator_name(n);
    let mut basis: Vec<String> = a.basis_names().to_vec();
    for b in a.basis_names() {
        basis.push(if b == "1" { g.clone() } else { format!("{b}{g}") });
    }
    Algebra::new(format!("{}^({gamma})", a.name()), basis, table, Some(new_conj))
}

/// Iterated doubling from the base field.
pub fn tower(t: &Tower) -> Result<Algebra> {
    let mut alg = base_field();
    for g in t.gammas() {
        alg = double(&alg, g)?;
    }
    let label = t
        .gammas()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(alg.with_name(format!("Q^[{label}]")))
}

/// Re-expresses `a` in a new basis whose vectors are the columns of `m`
/// (in `a`'s coordinates), under the given names.
pub fn relabel(a: &Algebra, m: &Matrix, names: Vec<String>) -> Result<Algebra> {
    let inv = m.inverse()?;
    let d = a.dim();
    if names.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: names.len(),
        });
    }
    let cols: Vec<Vec<Scalar>> = (0..d).map(|c| m.column(c)).collect();
    let mut table = vec![vec![Vec::new(); d]; d];
    for (p, row) in table.iter_mut().enumerate() {
        for (q, entry) in row.iter_mut().enumerate() {
            *entry = inv.mul_vec(&a.mul_coeffs(&cols[p], &cols[q]))?;
        }
    }
    let conj = match a.conjugation() {
        Some(c) => Some(inv.mul(c)?.mul(m)?),
        None => None,
    };
    Algebra::new(a.name(), names, table, conj)
}

/// Checks `T((a,b)) = T(a)` and `N((a,b)) = N(a) - γ N(b)` on every pair of
/// basis elements and on `samples` seeded random pairs.
pub fn cd_trace_norm_check(base: &Algebra, gamma: &Scalar, samples: usize, seed: u64) -> Result<Verdict> {
    let base = Arc::new(base.clone());
    let doubled = Arc::new(double(&base, gamma)?);
    let n = base.dim();
    let mut chk = Checker::new();
    let check_pair = |a: Vec<Scalar>, b: Vec<Scalar>, chk: &mut Checker| {
        let mut coeffs = a.clone();
        coeffs.extend(b.iter().cloned());
        let x = Element::new(&doubled, coeffs).expect("length 2n");
        let a = Element::new(&base, a).expect("length n");
        let b = Element::new(&base, b).expect("length n");
        let outcome = (|| -> Result<std::result::Result<(), String>> {
            let t_pair = trace(&x)?;
            let t_a = trace(&a)?;
            if t_pair != t_a {
                return Ok(Err(format!("T(({a}),({b})) = {t_pair} but T(a) = {t_a}")));
            }
            let n_pair = norm(&x)?;
            let expect = norm(&a)? - gamma * norm(&b)?;
            if n_pair != expect {
                return Ok(Err(format!(
                    "N(({a}),({b})) = {n_pair} but N(a) - γN(b) = {expect}"
                )));
            }
            Ok(Ok(()))
        })();
        chk.record(match outcome {
            Ok(r) => r,
            Err(e) => Err(e.to_string()),
        });
    };
    for p in 0..n {
        for q in 0..n {
            let mut a = vec![Scalar::zero(); n];
            a[p] = Scalar::one();
            let mut b = vec![Scalar::zero(); n];
            b[q] = Scalar::one();
            check_pair(a, b, &mut chk);
        }
    }
    let mut sampler = Sampler::new(seed);
    for _ in 0..samples {
        let a = sampler.coeffs(n);
        let b = sampler.coeffs(n);
        check_pair(a, b, &mut chk);
        if chk.failed() {
            break;
        }
    }
    Ok(chk.finish())
}

/// Basis-exhaustive structural flags of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub commutative: bool,
    pub associative: bool,
    pub alternative: bool,
    pub trivial_conjugation: bool,
}

impl Properties {
    pub fn of(a: &Algebra) -> Self {
        Properties {
            commutative: a.commutativity_verdict().is_pass(),
            associative: a.associativity_verdict().is_pass(),
            alternative: a.alternativity_verdict().is_pass(),
            trivial_conjugation: a
                .conjugation()
                .is_some_and(|c| *c == Matrix::identity(a.dim())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderReport {
    pub base: Properties,
    pub doubled: Properties,
}

impl LadderReport {
    /// Whether the three doubling biconditionals hold for this step:
    /// commutative ⇔ base commutative with trivial conjugation,
    /// associative ⇔ base associative and commutative,
    /// alternative ⇔ base associative.
    pub fn biconditionals_hold(&self) -> bool {
        let b = self.base;
        let d = self.doubled;
        d.commutative == (b.commutative && b.trivial_conjugation)
            && d.associative == (b.associative && b.commutative)
            && d.alternative == b.associative
    }
}

pub fn property_ladder(a: &Algebra, gamma: &Scalar) -> Result<LadderReport> {
    let doubled = double(a, gamma)?;
    Ok(LadderReport {
        base: Properties::of(a),
        doubled: Properties::of(&doubled),
    })
}

/// For `γ ≠ 0` with `|γ|` a rational square, verifies that
/// `(1,0) -> (1,0)`, `(0,1) -> (0, |γ|^{-1/2})` extends to an isomorphism
/// `A^{γ/|γ|} -> A^γ`.
pub fn scaling_isomorphism(a: &Algebra, gamma: &Scalar) -> Result<Verdict> {
    if gamma.is_zero() {
        return Err(Error::InvalidParameter("γ must be nonzero".into()));
    }
    let root = gamma
        .abs()
        .sqrt_exact()
        .ok_or_else(|| Error::InvalidParameter(format!("|{gamma}| is not a rational square")))?;
    let scale = root.recip().expect("nonzero");
    let unit_gamma = Scalar::from_int(gamma.signum() as i64);
    let src = double(a, &unit_gamma)?;
    let dst = double(a, gamma)?;
    let n = a.dim();
    let mut diag = vec![Scalar::one(); n];
    diag.extend(std::iter::repeat_n(scale, n));
    Ok(check_homomorphism(&src, &dst, &Matrix::from_diagonal(&diag)))
}
