//! Exhaustive and seeded-random checks of algebraic identities.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{norm, trace, Algebra, Element};
use crate::error::Result;
use crate::exact::Scalar;
use crate::sampling::Sampler;
use crate::verdict::{Checker, Verdict};

const PERMUTATIONS: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

/// The associator is alternating: `(x_π1, x_π2, x_π3) = sgn(π)(x1, x2, x3)`
/// for all basis triples and all six permutations.
pub fn alternating_associator_check(a: &Algebra) -> Verdict {
    let d = a.dim();
    let names = a.basis_names();
    let mut chk = Checker::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let t = [x, y, z];
                let base = a.basis_associator(x, y, z);
                for (p, sign) in PERMUTATIONS {
                    let permuted = a.basis_associator(t[p[0]], t[p[1]], t[p[2]]);
                    let ok = permuted
                        .iter()
                        .zip(&base)
                        .all(|(u, v)| *u == Scalar::from_int(sign) * v);
                    chk.check(ok, || {
                        format!(
                            "({}, {}, {}) permuted by {p:?} is not {sign} times ({}, {}, {})",
                            names[x], names[y], names[z], names[x], names[y], names[z]
                        )
                    });
                }
            }
        }
    }
    chk.finish()
}

/// `(x(yz))x = x((yz)x) = (xy)(zx)` on seeded random triples.
pub fn moufang_check(a: &Arc<Algebra>, samples: usize, seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let mut chk = Checker::new();
    for _ in 0..samples {
        let (x, y, z) = (s.element(a), s.element(a), s.element(a));
        let yz = &y * &z;
        let left = &(&x * &yz) * &x;
        let middle = &x * &(&yz * &x);
        let right = &(&x * &y) * &(&z * &x);
        chk.check(left == middle && middle == right, || {
            format!("Moufang fails for x = {x}, y = {y}, z = {z}")
        });
        if chk.failed() {
            break;
        }
    }
    chk.finish()
}

/// For seeded random pairs `(x, y)`, every bracketing of every word of
/// length at most `max_len` in `x, y` gives the same element.
pub fn diassociativity_check(a: &Arc<Algebra>, samples: usize, max_len: usize, seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let mut chk = Checker::new();
    for _ in 0..samples {
        let x = s.element(a);
        let y = s.element(a);
        if let Err(msg) = all_bracketings_agree(&x, &y, max_len) {
            chk.record(Err(msg));
            break;
        }
        chk.record(Ok(()));
    }
    chk.finish()
}

/// Dynamic programming over subwords: once all bracketings of each proper
/// subword agree, a word's bracketings are the products over its split points.
fn all_bracketings_agree(x: &Element, y: &Element, max_len: usize) -> std::result::Result<(), String> {
    let mut value: HashMap<Vec<bool>, Element> = HashMap::new();
    value.insert(vec![false], x.clone());
    value.insert(vec![true], y.clone());
    for len in 2..=max_len {
        for bits in 0..1u32 << len {
            let word: Vec<bool> = (0..len).map(|h| bits >> h & 1 == 1).collect();
            let mut first: Option<Element> = None;
            for split in 1..len {
                let p = &value[&word[..split]] * &value[&word[split..]];
                match &first {
                    None => first = Some(p),
                    Some(f) if *f != p => {
                        let w: String = word.iter().map(|&b| if b { 'y' } else { 'x' }).collect();
                        return Err(format!("bracketings of {w} disagree for x = {x}, y = {y}"));
                    }
                    Some(_) => {}
                }
            }
            value.insert(word, first.expect("len >= 2 has a split"));
        }
    }
    Ok(())
}

/// `x² - T(x)x + N(x) = 0`, `x* = T(x) - x` and `(x*)* = x` on the basis
/// and on seeded random elements.
pub fn quadratic_check(a: &Arc<Algebra>, samples: usize, seed: u64) -> Result<Verdict> {
    let mut s = Sampler::new(seed);
    let mut elements: Vec<Element> = (0..a.dim()).map(|i| Element::basis(a, i)).collect();
    elements.extend((0..samples).map(|_| s.element(a)));
    let mut chk = Checker::new();
    for x in &elements {
        let t = trace(x)?;
        let n = norm(x)?;
        let q = &(&(x * x) - &x.scale(&t)) + &Element::scalar(a, n.clone());
        chk.check(q.is_zero(), || format!("x² - T(x)x + N(x) = {q} for x = {x}"));
        let xs = x.conjugate()?;
        chk.check(xs == &Element::scalar(a, t.clone()) - x, || format!("x* ≠ T(x) - x for x = {x}"));
        chk.check(xs.conjugate()? == *x, || format!("(x*)* ≠ x for x = {x}"));
    }
    Ok(chk.finish())
}

/// `N(xy) = N(x)N(y)` for the given norm on seeded random pairs.
pub fn norm_multiplicativity_check(
    a: &Arc<Algebra>,
    norm_fn: impl Fn(&Element) -> Result<Scalar>,
    samples: usize,
    seed: u64,
) -> Result<Verdict> {
    let mut s = Sampler::new(seed);
    let mut chk = Checker::new();
    for _ in 0..samples {
        let x = s.element(a);
        let y = s.element(a);
        let lhs = norm_fn(&(&x * &y))?;
        let rhs = norm_fn(&x)? * norm_fn(&y)?;
        chk.check(lhs == rhs, || format!("N(xy) = {lhs} but N(x)N(y) = {rhs} for x = {x}, y = {y}"));
        if chk.failed() {
            break;
        }
    }
    Ok(chk.finish())
}

/// Linearity of multiplication in each factor and of the associator in each
/// slot, on seeded random data.
pub fn bilinearity_check(a: &Arc<Algebra>, samples: usize, seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let mut chk = Checker::new();
    for _ in 0..samples {
        let (x, y, z, w) = (s.element(a), s.element(a), s.element(a), s.element(a));
        let (p, q) = (s.scalar(), s.scalar());
        let comb = &x.scale(&p) + &y.scale(&q);
        chk.check(&comb * &z == &(&x * &z).scale(&p) + &(&y * &z).scale(&q), || {
            format!("left linearity fails for x = {x}, y = {y}, z = {z}")
        });
        chk.check(&z * &comb == &(&z * &x).scale(&p) + &(&z * &y).scale(&q), || {
            format!("right linearity fails for x = {x}, y = {y}, z = {z}")
        });
        let assoc = |u: &Element, v: &Element, t: &Element| &(&(u * v) * t) - &(u * &(v * t));
        for slot in 0..3 {
            let args = |e: &Element| -> [Element; 3] {
                let mut v = [z.clone(), w.clone(), x.clone()];
                v[slot] = e.clone();
                v
            };
            let [a1, b1, c1] = args(&comb);
            let [a2, b2, c2] = args(&x);
            let [a3, b3, c3] = args(&y);
            let lhs = assoc(&a1, &b1, &c1);
            let rhs = &assoc(&a2, &b2, &c2).scale(&p) + &assoc(&a3, &b3, &c3).scale(&q);
            chk.check(lhs == rhs, || format!("associator is not linear in slot {slot}"));
        }
    }
    chk.finish()
}
