//! Products of vectors evaluated by rewriting, without consulting the
//! structure table.
//!
//! Monomials are multiplied using only `e_h² = Q(e_h)`, anticommutation of
//! orthogonal vectors, the reduction identity
//! `a(bc) = -(ab)c + aB(b,c) - bB(c,a) + cB(a,b)`, the rebracketings of the
//! volume element, and the alternative laws (Moufang, diassociativity).

use std::fmt;

use crate::exact::Scalar;

/// A monomial in the orthogonal generators `0, 1, 2` (`i, j, k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mono {
    One,
    Gen(usize),
    /// `ab` with `(a, b)` one of `(0,1)`, `(1,2)`, `(2,0)`.
    Biv(usize, usize),
    Omega,
}

impl Mono {
    /// The bivector on two distinct generators in cyclic order, with the sign
    /// relating it to `ab`.
    fn biv(a: usize, b: usize) -> (i64, Mono) {
        debug_assert!(a != b);
        if (a + 1) % 3 == b {
            (1, Mono::Biv(a, b))
        } else {
            (-1, Mono::Biv(b, a))
        }
    }

    /// Basis index in the standard basis of a Kingdon algebra on `n`
    /// generators: `1,i,j,k,ij,jk,ki,ω` for `n = 3`, the blade bitmask below.
    pub fn index(self, n: usize) -> usize {
        match (n, self) {
            (_, Mono::One) => 0,
            (3, Mono::Gen(g)) => 1 + g,
            (3, Mono::Biv(0, 1)) => 4,
            (3, Mono::Biv(1, 2)) => 5,
            (3, Mono::Biv(2, 0)) => 6,
            (3, Mono::Omega) => 7,
            (_, Mono::Gen(g)) => 1 << g,
            (_, Mono::Biv(a, b)) => (1 << a) | (1 << b),
            (_, Mono::Omega) => 7,
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const G: [&str; 3] = ["i", "j", "k"];
        match *self {
            Mono::One => f.write_str("1"),
            Mono::Gen(g) => f.write_str(G[g]),
            Mono::Biv(a, b) => write!(f, "{}{}", G[a], G[b]),
            Mono::Omega => f.write_str("ω"),
        }
    }
}

/// A linear combination of monomials.
pub type Poly = Vec<(Scalar, Mono)>;

fn scaled(c: Scalar, p: Poly) -> Poly {
    p.into_iter().map(|(d, m)| (&c * &d, m)).collect()
}

fn third(a: usize, b: usize) -> usize {
    3 - a - b
}

/// Product of two monomials given `q[h] = Q(e_h)`.
pub fn mono_mul(x: Mono, y: Mono, q: &[Scalar]) -> Poly {
    use Mono::*;
    let int = Scalar::from_int;
    match (x, y) {
        (One, m) | (m, One) => vec![(Scalar::one(), m)],
        (Gen(a), Gen(b)) if a == b => vec![(q[a].clone(), One)],
        (Gen(a), Gen(b)) => {
            let (s, m) = Mono::biv(a, b);
            vec![(int(s), m)]
        }
        // (ab)c
        (Biv(a, b), Gen(c)) if c == a => vec![(-&q[a], Gen(b))],
        (Biv(a, b), Gen(c)) if c == b => vec![(q[b].clone(), Gen(a))],
        (Biv(_, _), Gen(_)) => vec![(Scalar::one(), Omega)],
        // a(bc) by the reduction identity, with B(u,v) = 2Q(u)δ(u,v)
        (Gen(a), Biv(b, c)) => {
            let mut out = Vec::new();
            for (s, m) in mono_mul(Gen(a), Gen(b), q) {
                out.extend(scaled(-s, mul_poly_mono(&[(Scalar::one(), m)], Gen(c), q)));
            }
            if a == c {
                out.push((-(int(2) * &q[a]), Gen(b)));
            }
            if a == b {
                out.push((int(2) * &q[a], Gen(c)));
            }
            out
        }
        // ω = (xy)g, so ωg = (xy)g²
        (Omega, Gen(g)) => {
            let (s, m) = Mono::biv((g + 1) % 3, (g + 2) % 3);
            vec![(int(s) * &q[g], m)]
        }
        // ω = -g(xy), so gω = -g²(xy)
        (Gen(g), Omega) => {
            let (s, m) = Mono::biv((g + 1) % 3, (g + 2) % 3);
            vec![(-(int(s) * &q[g]), m)]
        }
        // (ab)(ab) = -(ab)(ba) = -a b² a
        (Biv(a, b), Biv(c, d)) if (a, b) == (c, d) => vec![(-(&q[a] * &q[b]), One)],
        // (xy)(zx) = (x(yz))x for the shared generator x
        (Biv(a, b), Biv(c, d)) => {
            let x = if a == c || a == d { a } else { b };
            let (s1, y) = if a == x { (1, b) } else { (-1, a) };
            let (s2, z) = if d == x { (1, c) } else { (-1, d) };
            let yz = mono_mul(Gen(y), Gen(z), q);
            let x_yz = mul_mono_poly(Gen(x), &yz, q);
            scaled(int(s1 * s2), mul_poly_mono(&x_yz, Gen(x), q))
        }
        // ω = m·g, so mω = m(mg) = m²g
        (Biv(a, b), Omega) => vec![(-(&q[a] * &q[b]), Gen(third(a, b)))],
        // ω = -g·m, so ωm = -(gm)m = -g·m²
        (Omega, Biv(a, b)) => vec![(&q[a] * &q[b], Gen(third(a, b)))],
        // ω = mk with m = ij and mk = -km, so ωω = -(mk)(km) = -m k² m
        (Omega, Omega) => vec![(&q[0] * &q[1] * &q[2], One)],
    }
}

fn mul_poly_mono(p: &[(Scalar, Mono)], y: Mono, q: &[Scalar]) -> Poly {
    let mut out = Vec::new();
    for (c, m) in p {
        out.extend(scaled(c.clone(), mono_mul(*m, y, q)));
    }
    out
}

fn mul_mono_poly(x: Mono, p: &[(Scalar, Mono)], q: &[Scalar]) -> Poly {
    let mut out = Vec::new();
    for (c, m) in p {
        out.extend(scaled(c.clone(), mono_mul(x, *m, q)));
    }
    out
}

/// Bilinear product of two polynomials.
pub fn poly_mul(x: &[(Scalar, Mono)], y: &[(Scalar, Mono)], q: &[Scalar]) -> Poly {
    let mut out = Vec::new();
    for (c, m) in x {
        for (d, n) in y {
            out.extend(scaled(c * d, mono_mul(*m, *n, q)));
        }
    }
    out
}

/// Coefficient vector of a polynomial in the standard basis on `n` generators.
pub fn poly_coeffs(p: &[(Scalar, Mono)], n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 1 << n];
    for (c, m) in p {
        v[m.index(n)] += c;
    }
    v
}

/// A bracketed product of vectors, leaves given in input coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VectorWord {
    Leaf(Vec<Scalar>),
    Mul(Box<VectorWord>, Box<VectorWord>),
}

impl VectorWord {
    pub fn leaf(v: Vec<Scalar>) -> Self {
        VectorWord::Leaf(v)
    }

    /// The `h`-th standard basis vector of an `n`-dimensional space.
    pub fn basis(n: usize, h: usize) -> Self {
        let mut v = vec![Scalar::zero(); n];
        v[h] = Scalar::one();
        VectorWord::Leaf(v)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: VectorWord, b: VectorWord) -> Self {
        VectorWord::Mul(Box::new(a), Box::new(b))
    }

    pub fn leaves(&self) -> usize {
        match self {
            VectorWord::Leaf(_) => 1,
            VectorWord::Mul(a, b) => a.leaves() + b.leaves(),
        }
    }
}
