use kingdon_core::algebra::{norm, Element};
use kingdon_core::export::markdown;
use kingdon_core::kingdon::{admissible_triples, oriented_triples_check, EVEN_3, ODD_3};
use kingdon_core::{build_kingdon, kingdon_norm, reduce_word, Error, FormedSpace, KingdonAlgebra, Matrix, Scalar, VectorWord};
use proptest::prelude::*;

fn ka(diag: &[i64]) -> KingdonAlgebra {
    build_kingdon(&FormedSpace::diagonal_ints(diag).unwrap()).unwrap()
}

fn named(k: &KingdonAlgebra, n: &str) -> Element {
    Element::named(k.algebra(), n).unwrap()
}

fn leaf(h: usize) -> VectorWord {
    VectorWord::basis(3, h)
}

fn l(a: VectorWord, b: VectorWord) -> VectorWord {
    VectorWord::mul(a, b)
}

fn epsilon_patterns() -> impl Iterator<Item = [i64; 3]> {
    let e = [0, 1, -1];
    e.into_iter()
        .flat_map(move |a| e.into_iter().flat_map(move |b| e.into_iter().map(move |c| [a, b, c])))
}

/// Symmetric forms that are neither diagonal nor nondegenerate in general.
fn skew_forms() -> Vec<Matrix> {
    vec![
        Matrix::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, -2]]),
        Matrix::from_ints(&[[2, 1, 1], [1, 2, 1], [1, 1, 2]]),
        Matrix::from_ints(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]),
        Matrix::from_ints(&[[1, 1, 0], [1, 1, 0], [0, 0, 0]]),
        Matrix::from_ints(&[[-4, 2, 0], [2, 0, 3], [0, 3, 6]]),
    ]
}

#[test]
fn octonion_examples() {
    let o = ka(&[-2, -2, -2]);
    assert_eq!(&named(&o, "i") * &named(&o, "jk"), -&named(&o, "ω"));
    assert_eq!(&named(&o, "ω") * &named(&o, "ω"), -&Element::one(o.algebra()));
    assert_eq!(o.algebra().name(), "K(0,0,3)");
}

#[test]
fn zero_form_gives_the_exterior_table() {
    let md = markdown(ka(&[0, 0, 0]).algebra());
    assert!(md.starts_with("| 1 | i | j | k | ij | jk | ki | ω |\n"));
    assert!(md.contains("| i | 0 | ij | -ki | 0 | -ω | 0 | 0 |\n"));
}

#[test]
fn small_dimensions_are_clifford_algebras() {
    let f = build_kingdon(&FormedSpace::new(Matrix::zeros(0, 0)).unwrap()).unwrap();
    assert_eq!(f.algebra().dim(), 1);
    let c = ka(&[-2]);
    assert_eq!(c.algebra().dim(), 2);
    let h = ka(&[-2, -2]);
    assert_eq!(h.algebra().dim(), 4);
    assert!(h.algebra().associativity_verdict().is_pass());
    assert!(!h.algebra().commutativity_verdict().is_pass());
    for k in [&c, &h, &ka(&[0, 2])] {
        assert!(k.table_agreement_check().unwrap().is_pass());
        assert!(k.clifford_relation_check().is_pass());
        assert!(k.involution_check().unwrap().is_pass());
    }
}

#[test]
fn large_forms_are_rejected() {
    let g = Matrix::identity(4);
    assert!(matches!(FormedSpace::new(g), Err(Error::DimensionTooLarge(4))));
}

#[test]
fn reduction_examples() {
    let zero = FormedSpace::diagonal_ints(&[0, 0, 0]).unwrap();
    let k = build_kingdon(&zero).unwrap();
    let ijk = reduce_word(&l(l(leaf(0), leaf(1)), leaf(2)), &zero).unwrap();
    assert_eq!(ijk, named(&k, "ω"));
    let kji = reduce_word(&l(leaf(2), l(leaf(1), leaf(0))), &zero).unwrap();
    assert_eq!(kji, ijk);

    let oct = FormedSpace::diagonal_ints(&[-2, -2, -2]).unwrap();
    let o = build_kingdon(&oct).unwrap();
    let iij = reduce_word(&l(l(leaf(0), leaf(0)), leaf(1)), &oct).unwrap();
    assert_eq!(iij, -&named(&o, "j"));
}

#[test]
fn reduction_agrees_with_the_table_for_all_patterns() {
    for eps in epsilon_patterns() {
        let k = ka(&eps.map(|e| 2 * e));
        let v = k.table_agreement_check().unwrap();
        assert!(v.is_pass(), "ε = {eps:?}: {v:?}");
    }
    for g in skew_forms() {
        let k = build_kingdon(&FormedSpace::new(g.clone()).unwrap()).unwrap();
        assert!(k.table_agreement_check().unwrap().is_pass(), "{g:?}");
    }
}

#[test]
fn defining_relations_hold() {
    let diagonal = epsilon_patterns().map(|e| FormedSpace::diagonal_ints(&e.map(|x| 2 * x)).unwrap());
    let skew = skew_forms().into_iter().map(|g| FormedSpace::new(g).unwrap());
    for fs in diagonal.chain(skew) {
        let k = build_kingdon(&fs).unwrap();
        assert!(k.palindromic_check().is_pass(), "{fs:?}");
        assert!(k.clifford_relation_check().is_pass(), "{fs:?}");
        assert!(k.forms_of_omega_check().unwrap().is_pass(), "{fs:?}");
        assert!(k.grading_check().unwrap().is_pass(), "{fs:?}");
        assert!(k.involution_check().unwrap().is_pass(), "{fs:?}");
    }
}

#[test]
fn grading_sample() {
    let k = ka(&[2, -2, 0]);
    let p = &named(&k, "i") * &named(&k, "ω");
    assert_eq!(p, -&named(&k, "jk"));
    assert!(EVEN_3.contains(&5) && ODD_3.contains(&7));
}

#[test]
fn involutions() {
    let k = ka(&[0, 2, -2]);
    let nu = &k.nu().matrix;
    let kappa = &k.kappa().matrix;
    assert_eq!(nu.diagonal(), [1, -1, -1, -1, 1, 1, 1, -1].map(Scalar::from_int));
    assert_eq!(kappa.diagonal(), [1, -1, -1, -1, -1, -1, -1, -1].map(Scalar::from_int));
    assert_eq!(nu.mul(nu).unwrap(), Matrix::identity(8));
    assert_eq!(kappa.mul(kappa).unwrap(), Matrix::identity(8));
}

#[test]
fn norm_formula_examples() {
    let o = ka(&[-2, -2, -2]);
    let x = Element::from_ints(o.algebra(), &[1, -2, 3, 0, 1, 1, -1, 2]).unwrap();
    assert_eq!(kingdon_norm(&o, &x).unwrap(), Scalar::from_int(21));
    assert_eq!(kingdon_norm(&o, &Element::one(o.algebra())).unwrap(), Scalar::one());
    let z = ka(&[0, 0, 0]);
    let x = Element::from_ints(z.algebra(), &[3, -2, 3, 5, 1, 1, -1, 2]).unwrap();
    assert_eq!(kingdon_norm(&z, &x).unwrap(), Scalar::from_int(9));
}

#[test]
fn admissible_triple_examples() {
    let o = ka(&[-2, -2, -2]);
    let (i, j, ij) = (1, 2, 4);
    assert!(oriented_triples_check(&o, &[[i, j, ij]]).unwrap().verdict.is_pass());
    assert!(oriented_triples_check(&o, &[[j, ij, i]]).unwrap().verdict.is_pass());
    assert!(matches!(admissible_triples(&ka(&[-2, -2, 2])), Err(Error::NotOctonions)));
}

#[test]
fn even_triple_orientation_follows_the_table() {
    // (ij)(jk) = Q(j)ki, which is -ki in the octonions
    let o = ka(&[-2, -2, -2]);
    assert_eq!(&named(&o, "ij") * &named(&o, "jk"), -&named(&o, "ki"));
    let report = admissible_triples(&o).unwrap();
    assert_eq!(report.verdict.checks(), 42);
    assert_eq!(report.failures.len(), 6);
    let even = |f: &String| ["ij·jk", "jk·ki", "ki·ij", "jk·ij", "ki·jk", "ij·ki"].iter().any(|p| f.starts_with(p));
    assert!(report.failures.iter().all(even), "{:?}", report.failures);
    assert!(oriented_triples_check(&o, &[[4, 6, 5]]).unwrap().verdict.is_pass());
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::new(n, d))
}

fn form() -> impl Strategy<Value = FormedSpace> {
    proptest::collection::vec(prop_oneof![2 => Just(Scalar::zero()), 3 => scalar()], 6).prop_map(|u| {
        let rows = vec![
            vec![u[0].clone(), u[1].clone(), u[2].clone()],
            vec![u[1].clone(), u[3].clone(), u[4].clone()],
            vec![u[2].clone(), u[4].clone(), u[5].clone()],
        ];
        FormedSpace::new(Matrix::from_rows(rows).unwrap()).unwrap()
    })
}

fn vector() -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar(), 3)
}

fn word() -> impl Strategy<Value = VectorWord> {
    vector().prop_map(VectorWord::leaf).prop_recursive(3, 6, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| VectorWord::mul(a, b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rewriting_matches_table_multiplication(fs in form(), w in word()) {
        let k = build_kingdon(&fs).unwrap();
        prop_assert_eq!(reduce_word(&w, &fs).unwrap(), k.evaluate(&w).unwrap());
    }

    #[test]
    fn clifford_relation_on_vectors(fs in form(), u in vector(), v in vector()) {
        let k = build_kingdon(&fs).unwrap();
        let (x, y) = (k.vector(&u).unwrap(), k.vector(&v).unwrap());
        let b = fs.bilinear(&u, &v).unwrap();
        prop_assert_eq!(&(&x * &y) + &(&y * &x), Element::scalar(k.algebra(), b));
    }

    #[test]
    fn palindromic_relation_on_vectors(fs in form(), u in vector(), v in vector(), t in vector()) {
        let k = build_kingdon(&fs).unwrap();
        let (x, y, z) = (k.vector(&u).unwrap(), k.vector(&v).unwrap(), k.vector(&t).unwrap());
        prop_assert_eq!(&(&x * &y) * &z, &z * &(&y * &x));
    }

    #[test]
    fn reduction_identity(fs in form(), u in vector(), v in vector(), t in vector()) {
        // (ab)c + a(bc) = aB(b,c) - bB(c,a) + cB(a,b)
        let k = build_kingdon(&fs).unwrap();
        let (a, b, c) = (k.vector(&u).unwrap(), k.vector(&v).unwrap(), k.vector(&t).unwrap());
        let lhs = &(&(&a * &b) * &c) + &(&a * &(&b * &c));
        let rhs = &(&a.scale(&fs.bilinear(&v, &t).unwrap()) - &b.scale(&fs.bilinear(&t, &u).unwrap()))
            + &c.scale(&fs.bilinear(&u, &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_formula_matches_conjugation(fs in form(), x in proptest::collection::vec(scalar(), 8)) {
        let k = build_kingdon(&fs).unwrap();
        let x = Element::new(k.algebra(), x).unwrap();
        prop_assert_eq!(kingdon_norm(&k, &x).unwrap(), norm(&x).unwrap());
    }
}
