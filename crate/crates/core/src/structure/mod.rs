//! Commutants, nuclei and centers; simplicity and division; signatures and
//! the classification of eight-dimensional real Kingdon algebras.

mod subspace;
mod witness;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{format_terms, Algebra, Element};
use crate::cayley_dickson::{tower, Tower};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::kingdon::{build_kingdon, FormedSpace, KingdonAlgebra};
use crate::verdict::Verdict;

pub use subspace::{center, commutant, echelon, nucleus, same_span, span_of, Subspace};
pub use witness::{
    check_isomorphism, explicit_iso_111_120, find_zero_divisor, kingdon_vs_tower, split_complex_witness,
    split_quaternion_witness, tower_in_kingdon_basis, verify_zero_divisor, Isomorphism,
};

/// Counts `(b₀, b₁, b₋₁)` of orthogonal basis vectors with `B(e,e)` zero,
/// positive and negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub b0: usize,
    pub b1: usize,
    pub bneg1: usize,
}

impl Signature {
    pub const fn new(b0: usize, b1: usize, bneg1: usize) -> Self {
        Signature { b0, b1, bneg1 }
    }

    pub fn of(fs: &FormedSpace) -> Self {
        let (b0, b1, bneg1) = fs.sign_counts();
        Signature { b0, b1, bneg1 }
    }

    pub fn dim(&self) -> usize {
        self.b0 + self.b1 + self.bneg1
    }

    /// All ten signatures with `b₀ + b₁ + b₋₁ = 3`.
    pub fn all() -> Vec<Signature> {
        let mut out = Vec::new();
        for b0 in (0..=3).rev() {
            for b1 in (0..=3 - b0).rev() {
                out.push(Signature::new(b0, b1, 3 - b0 - b1));
            }
        }
        out
    }

    /// The nine canonical signatures, in the row order of the classification
    /// table; `(1,2,0)` is omitted as it gives the same algebra as `(1,1,1)`.
    pub fn canonical() -> [Signature; 9] {
        [
            Signature::new(3, 0, 0),
            Signature::new(2, 0, 1),
            Signature::new(2, 1, 0),
            Signature::new(1, 1, 1),
            Signature::new(1, 0, 2),
            Signature::new(0, 3, 0),
            Signature::new(0, 2, 1),
            Signature::new(0, 1, 2),
            Signature::new(0, 0, 3),
        ]
    }

    /// Diagonal Gram matrix with the zero entries first, then `-2`, then `2`.
    pub fn gram(&self) -> Matrix {
        let mut d = vec![Scalar::zero(); self.b0];
        d.extend(std::iter::repeat_n(Scalar::from_int(-2), self.bneg1));
        d.extend(std::iter::repeat_n(Scalar::from_int(2), self.b1));
        Matrix::from_diagonal(&d)
    }

    pub fn formed_space(&self) -> Result<FormedSpace> {
        FormedSpace::new(self.gram())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.b0, self.b1, self.bneg1)
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts `b0,b1,b-1`, optionally wrapped in `()` or `K(...)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("signature `{s}` is not of the form b0,b1,b-1"));
        let t = s.trim();
        let t = t.strip_prefix('K').unwrap_or(t);
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
        let parts: Vec<usize> = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match parts[..] {
            [b0, b1, bneg1] => Ok(Signature { b0, b1, bneg1 }),
            _ => Err(bad()),
        }
    }
}

/// Isomorphism classes of eight-dimensional real Kingdon algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IsoClass {
    #[serde(rename = "ALT_EXT")]
    AltExt,
    #[serde(rename = "K(2,1,0)")]
    K210,
    #[serde(rename = "K(2,0,1)")]
    K201,
    #[serde(rename = "K(1,1,1)")]
    K111,
    #[serde(rename = "K(1,0,2)")]
    K102,
    #[serde(rename = "SPLIT_OCT")]
    SplitOct,
    #[serde(rename = "OCT")]
    Oct,
}

impl IsoClass {
    pub fn label(&self) -> &'static str {
        match self {
            IsoClass::AltExt => "ALT_EXT",
            IsoClass::K210 => "K(2,1,0)",
            IsoClass::K201 => "K(2,0,1)",
            IsoClass::K111 => "K(1,1,1)",
            IsoClass::K102 => "K(1,0,2)",
            IsoClass::SplitOct => "SPLIT_OCT",
            IsoClass::Oct => "OCT",
        }
    }

    pub fn of(sig: Signature) -> Result<Self> {
        Ok(match (sig.b0, sig.b1, sig.bneg1) {
            (3, 0, 0) => IsoClass::AltExt,
            (2, 1, 0) => IsoClass::K210,
            (2, 0, 1) => IsoClass::K201,
            (1, 1, 1) | (1, 2, 0) => IsoClass::K111,
            (1, 0, 2) => IsoClass::K102,
            (0, 0, 3) => IsoClass::Oct,
            (0, b1, _) if b1 >= 1 && sig.dim() == 3 => IsoClass::SplitOct,
            _ => return Err(Error::InvalidParameter(format!("{sig} is not a signature of a 3-dimensional form"))),
        })
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Signature and isomorphism class of `K(V,B)` for a three-dimensional form.
pub fn classify(fs: &FormedSpace) -> Result<(Signature, IsoClass)> {
    if fs.dim() != 3 {
        return Err(if fs.dim() > 3 {
            Error::DimensionTooLarge(fs.dim())
        } else {
            Error::DimensionMismatch {
                expected: 3,
                found: fs.dim(),
            }
        });
    }
    let sig = Signature::of(fs);
    Ok((sig, IsoClass::of(sig)?))
}

/// Whether `K(V,B)` is simple: the form is nondegenerate. Cross-checked
/// against the diagonal norm form having no zero coefficient.
pub fn is_simple(ka: &KingdonAlgebra) -> Result<bool> {
    let by_det = !ka.formed_space().gram().determinant()?.is_zero();
    let by_norm = ka.norm_coefficients()?.iter().all(|c| !c.is_zero());
    if by_det != by_norm {
        return Err(Error::VerificationFailed(
            "det(B) and the norm form disagree on degeneracy".into(),
        ));
    }
    Ok(by_det)
}

/// Whether every nonzero element is invertible: the norm form is definite,
/// which for these algebras means every `Q(e_h) < 0`.
pub fn is_division(ka: &KingdonAlgebra) -> bool {
    ka.q_values().iter().all(|q| q.signum() < 0)
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub signature: Signature,
    pub iso_class: IsoClass,
    pub commutant_basis: Vec<Element>,
    pub nucleus_basis: Vec<Element>,
    pub center_basis: Vec<Element>,
    pub simple: bool,
    pub division: bool,
    pub zero_divisor_witness: Option<(Element, Element)>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    algebra: &'a str,
    signature: String,
    iso_class: IsoClass,
    commutant_basis: Vec<String>,
    nucleus_basis: Vec<String>,
    center_basis: Vec<String>,
    simple: bool,
    division: bool,
    zero_divisor_witness: Option<[String; 2]>,
}

impl StructureReport {
    pub fn to_json_string(&self) -> String {
        let algebra = self
            .commutant_basis
            .first()
            .map(|e| e.algebra().name())
            .unwrap_or_default();
        let fmt = |v: &[Element]| v.iter().map(ToString::to_string).collect();
        let json = ReportJson {
            algebra,
            signature: self.signature.to_string(),
            iso_class: self.iso_class,
            commutant_basis: fmt(&self.commutant_basis),
            nucleus_basis: fmt(&self.nucleus_basis),
            center_basis: fmt(&self.center_basis),
            simple: self.simple,
            division: self.division,
            zero_divisor_witness: self
                .zero_divisor_witness
                .as_ref()
                .map(|(x, y)| [x.to_string(), y.to_string()]),
        };
        serde_json::to_string_pretty(&json).expect("report serializes")
    }
}

fn elements(a: &Arc<Algebra>, s: Subspace) -> Vec<Element> {
    s.into_iter()
        .map(|v| Element::new(a, v).expect("subspace vectors have algebra length"))
        .collect()
}

/// Full structural report of an eight-dimensional Kingdon algebra.
pub fn structure_report(ka: &KingdonAlgebra) -> Result<StructureReport> {
    let (signature, iso_class) = classify(ka.formed_space())?;
    let a = ka.algebra();
    let division = is_division(ka);
    let zero_divisor_witness = find_zero_divisor(ka)?;
    match &zero_divisor_witness {
        Some((x, y)) if !verify_zero_divisor(x, y) => {
            return Err(Error::VerificationFailed(format!("({x}, {y}) is not a zero divisor pair")));
        }
        None if !division => {
            return Err(Error::VerificationFailed(
                "no zero divisor found for an algebra with an isotropic norm form".into(),
            ));
        }
        Some(_) if division => {
            return Err(Error::VerificationFailed("zero divisor found in a division algebra".into()));
        }
        _ => {}
    }
    Ok(StructureReport {
        signature,
        iso_class,
        commutant_basis: elements(a, commutant(a)),
        nucleus_basis: elements(a, nucleus(a)),
        center_basis: elements(a, center(a)),
        simple: is_simple(ka)?,
        division,
        zero_divisor_witness,
    })
}

/// Answer to whether the Kingdon algebras of two signatures are isomorphic.
#[derive(Clone, Debug)]
pub struct IsomorphismAnswer {
    pub isomorphic: bool,
    pub classes: (IsoClass, IsoClass),
    /// Verified explicit map when one is available.
    pub map: Option<Matrix>,
    /// Why the algebras differ, when they do.
    pub reason: Option<String>,
}

/// Decides isomorphism of `K(a)` and `K(b)` by classification.
pub fn isomorphic(a: Signature, b: Signature) -> Result<IsomorphismAnswer> {
    let ca = IsoClass::of(a)?;
    let cb = IsoClass::of(b)?;
    let isomorphic = ca == cb;
    let map = match (a, b) {
        _ if a == b => Some(Matrix::identity(8)),
        (Signature { b0: 1, b1: 1, bneg1: 1 }, Signature { b0: 1, b1: 2, bneg1: 0 }) => {
            Some(explicit_iso_111_120()?.matrix)
        }
        (Signature { b0: 1, b1: 2, bneg1: 0 }, Signature { b0: 1, b1: 1, bneg1: 1 }) => {
            Some(explicit_iso_111_120()?.matrix.inverse()?)
        }
        _ => None,
    };
    let reason = (!isomorphic).then(|| distinguish(a, b)).transpose()?;
    Ok(IsomorphismAnswer {
        isomorphic,
        classes: (ca, cb),
        map,
        reason,
    })
}

fn distinguish(a: Signature, b: Signature) -> Result<String> {
    let ka = build_kingdon(&a.formed_space()?)?;
    let kb = build_kingdon(&b.formed_space()?)?;
    let na = nucleus(ka.algebra()).len();
    let nb = nucleus(kb.algebra()).len();
    if na != nb {
        return Ok(format!("nuclei have dimensions {na} and {nb}"));
    }
    let ca = center(ka.algebra()).len();
    let cb = center(kb.algebra()).len();
    if ca != cb {
        return Ok(format!("centers have dimensions {ca} and {cb}"));
    }
    if is_division(&ka) != is_division(&kb) {
        return Ok("exactly one is a division algebra".into());
    }
    let sa = split_complex_witness(&ka);
    let sb = split_complex_witness(&kb);
    if sa.is_some() != sb.is_some() {
        let (who, x) = if let Some(x) = sa { (a, x) } else { (b, sb.expect("one is some")) };
        return Ok(format!("only K{who} contains a traceless x with x² = 1, e.g. x = {x}"));
    }
    let qa = split_quaternion_witness(&ka);
    let qb = split_quaternion_witness(&kb);
    if qa.is_some() != qb.is_some() {
        let (who, (x, y)) = if let Some(p) = qa { (a, p) } else { (b, qb.expect("one is some")) };
        return Ok(format!("only K{who} contains split quaternions, e.g. x = {x}, y = {y}"));
    }
    Ok("different isomorphism classes".into())
}

/// One arrow `A --γ--> A^γ` between real Clifford algebras of dimension at
/// most four, with the label of its target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordArrow {
    pub source: Vec<i64>,
    pub gamma: i64,
    pub target: &'static str,
}

/// The arrows realizing the real Clifford algebras of dimension at most
/// four by doubling, from `Q`.
pub fn clifford_cayley_arrows() -> Vec<CliffordArrow> {
    let arrow = |source: &[i64], gamma, target| CliffordArrow {
        source: source.to_vec(),
        gamma,
        target,
    };
    vec![
        arrow(&[], 0, "Cl[1,0,0]"),
        arrow(&[], 1, "Cl[0,1,0]"),
        arrow(&[], -1, "Cl[0,0,1]"),
        arrow(&[0], 0, "Cl[2,0,0]"),
        arrow(&[0], 1, "Cl[1,1,0]"),
        arrow(&[0], -1, "Cl[1,0,1]"),
        arrow(&[1], 0, "Cl[1,1,0]"),
        arrow(&[1], 1, "Cl[0,2,0]"),
        arrow(&[1], -1, "Cl[0,1,1]"),
        arrow(&[-1], 0, "Cl[1,0,1]"),
        arrow(&[-1], 1, "Cl[0,1,1]"),
        arrow(&[-1], -1, "Cl[0,0,2]"),
    ]
}

/// Verifies an arrow: the double is isomorphic to the Clifford algebra of
/// the diagonal form `2·(source, γ)`, whose signature is the target label.
pub fn check_clifford_arrow(arrow: &CliffordArrow) -> Result<Verdict> {
    let mut gammas = arrow.source.clone();
    gammas.push(arrow.gamma);
    let doubled = tower(&Tower::from_ints(&gammas)?)?;
    let diag: Vec<i64> = gammas.iter().map(|g| 2 * g).collect();
    let ka = build_kingdon(&FormedSpace::diagonal_ints(&diag)?)?;
    let label = ka.algebra().name().to_string();
    if label != arrow.target {
        return Ok(Verdict::Fail {
            checks: 1,
            counterexample: format!("double is {label}, arrow claims {}", arrow.target),
        });
    }
    let source_ok = tower(&Tower::from_ints(&arrow.source)?)?.dim() * 2 == doubled.dim();
    let size = Verdict::Pass { checks: 1 };
    let size = if source_ok {
        size
    } else {
        Verdict::Fail {
            checks: 1,
            counterexample: "dimension did not double".into(),
        }
    };
    Ok(size.and(kingdon_vs_tower(&ka)?))
}

/// `Cl[0,2,0] ≅ Cl[0,1,1]` via `g₁ ↦ e₁`, `g₂ ↦ e₁e₂`, `g₁g₂ ↦ e₂`, where
/// `g₁² = 1`, `g₂² = -1` and `e₁² = e₂² = 1`.
pub fn split_quaternion_identification() -> Result<Verdict> {
    let src = build_kingdon(&FormedSpace::diagonal_ints(&[2, -2])?)?;
    let dst = build_kingdon(&FormedSpace::diagonal_ints(&[2, 2])?)?;
    // blade basis 1, i, j, ij
    let m = Matrix::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
    Ok(check_isomorphism(src.algebra(), dst.algebra(), &m))
}

/// Renders a subspace basis as `{1, ω}`.
pub fn format_basis(a: &Algebra, s: &[Vec<Scalar>]) -> String {
    let terms: Vec<String> = s.iter().map(|v| format_terms(a.basis_names(), v)).collect();
    format!("{{{}}}", terms.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ka(sig: Signature) -> KingdonAlgebra {
        build_kingdon(&sig.formed_space().unwrap()).unwrap()
    }

    #[test]
    fn exterior_algebra_structure() {
        let k = ka(Signature::new(3, 0, 0));
        let a = k.algebra();
        assert_eq!(format_basis(a, &commutant(a)), "{1, ω}");
        assert_eq!(format_basis(a, &nucleus(a)), "{1, ij, jk, ki, ω}");
        assert_eq!(format_basis(a, &center(a)), "{1, ω}");
        assert!(!is_simple(&k).unwrap());
    }

    #[test]
    fn octonion_structure() {
        let k = ka(Signature::new(0, 0, 3));
        let a = k.algebra();
        assert_eq!(format_basis(a, &center(a)), "{1}");
        assert!(is_simple(&k).unwrap());
        assert!(find_zero_divisor(&k).unwrap().is_none());
    }

    #[test]
    fn signature_parsing() {
        assert_eq!("1,2,0".parse::<Signature>().unwrap(), Signature::new(1, 2, 0));
        assert_eq!("K(0,0,3)".parse::<Signature>().unwrap(), Signature::new(0, 0, 3));
        assert_eq!("(3,0,0)".parse::<Signature>().unwrap(), Signature::new(3, 0, 0));
        assert!("1,2".parse::<Signature>().is_err());
    }

    #[test]
    fn classify_examples() {
        let c = |d: &[i64]| classify(&FormedSpace::diagonal_ints(d).unwrap()).unwrap();
        assert_eq!(c(&[2, 2, -2]), (Signature::new(0, 2, 1), IsoClass::SplitOct));
        assert_eq!(c(&[0, 4, -6]), (Signature::new(1, 1, 1), IsoClass::K111));
        assert_eq!(c(&[0, 0, 0]), (Signature::new(3, 0, 0), IsoClass::AltExt));
        assert!(classify(&FormedSpace::diagonal_ints(&[1, 1]).unwrap()).is_err());
    }

    #[test]
    fn split_quaternions_are_one_algebra() {
        assert!(split_quaternion_identification().unwrap().is_pass());
    }

    #[test]
    fn rational_forms_need_the_search_tier() {
        // Q = (-1, -1, 3): no basis element squares to a rational square.
        let k = build_kingdon(&FormedSpace::diagonal_ints(&[-2, -2, 6]).unwrap()).unwrap();
        let (x, y) = find_zero_divisor(&k).unwrap().expect("indefinite norm form is isotropic");
        assert!(verify_zero_divisor(&x, &y));
    }
}
