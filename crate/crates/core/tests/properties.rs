use proptest::prelude::*;

use invol2::field::poly::{gcd, Poly};
use invol2::structure::{represents, FactorSpec, QuatInvolution};
use invol2::{AlgElement, DecomposedAlgebra, FieldCtx, FrobCoords, Matrix, RatFunc};

const VARS: [&str; 3] = ["x", "y", "z"];

fn ctx() -> FieldCtx {
    FieldCtx::new(&VARS).unwrap()
}

/// A polynomial in x, y, z of degree <= 2 in each variable, as text.
fn poly_text() -> impl Strategy<Value = String> {
    prop::collection::vec((0u8..3, 0u8..3, 0u8..3), 0..5).prop_map(|ms| {
        if ms.is_empty() {
            return "0".to_string();
        }
        ms.iter().map(|(a, b, c)| format!("x^{a}*y^{b}*z^{c}")).collect::<Vec<_>>().join(" + ")
    })
}

fn poly() -> impl Strategy<Value = RatFunc> {
    poly_text().prop_map(|t| ctx().parse(&t).unwrap())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| n.div(&d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.add(&a).unwrap().is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
        }
        prop_assert_eq!(a.add(&b).unwrap().square().unwrap(), a.square().unwrap().add(&b.square().unwrap()).unwrap());
    }

    #[test]
    fn frobenius_reconstruction(f in ratfunc()) {
        let k = f.ctx().clone();
        let coords = f.frobenius_decompose().unwrap();
        let mut acc = k.zero();
        for (&key, c) in coords.iter() {
            let term = c.square().unwrap().mul(&FrobCoords::basis_element(&k, key)).unwrap();
            acc = acc.add(&term).unwrap();
        }
        prop_assert_eq!(acc, f.clone());
        let sq = f.square().unwrap();
        let root = sq.is_square().unwrap().expect("a square is a square");
        prop_assert_eq!(root.square().unwrap(), sq);
    }
}

fn raw_poly() -> impl Strategy<Value = Poly> {
    poly().prop_map(|f| f.numerator().expect("base field").clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gcd_divides_and_keeps_common_factor(g in raw_poly(), a in raw_poly(), b in raw_poly()) {
        prop_assume!(!g.is_zero() && !a.is_zero() && !b.is_zero());
        let (ga, gb) = (g.mul(&a).unwrap(), g.mul(&b).unwrap());
        let h = gcd(&ga, &gb).unwrap();
        prop_assert!(ga.exact_div(&h).is_some());
        prop_assert!(gb.exact_div(&h).is_some());
        prop_assert!(h.exact_div(&g).is_some());
        let (qa, qb) = (ga.exact_div(&h).unwrap(), gb.exact_div(&h).unwrap());
        prop_assert!(gcd(&qa, &qb).unwrap().is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn solve_returns_a_solution(entries in prop::collection::vec(poly(), 9), x in prop::collection::vec(poly(), 3)) {
        let k = ctx();
        let rows = entries.chunks(3).map(|r| r.to_vec()).collect();
        let a = Matrix::from_rows(&k, rows).unwrap();
        let b = a.mul_vec(&x).unwrap();
        let y = a.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
        let kernel = a.kernel_basis().unwrap();
        prop_assert_eq!(kernel.len() + a.rank().unwrap(), 3);
        for v in kernel {
            prop_assert!(a.mul_vec(&v).unwrap().iter().all(|e| e.is_zero()));
        }
    }
}

fn decomposed() -> DecomposedAlgebra {
    let k = FieldCtx::new(&["a", "b", "c", "d"]).unwrap();
    let q = |i: usize, j: usize| FactorSpec::Quat { alpha: k.var(i), beta: k.var(j), involution: QuatInvolution::Tau };
    DecomposedAlgebra::new(&k, &[q(0, 1), q(2, 3)]).unwrap()
}

fn field_text() -> impl Strategy<Value = String> {
    prop::collection::vec((0u8..3, 0u8..3, 0u8..2, 0u8..2), 0..4).prop_map(|ms| {
        if ms.is_empty() {
            return "0".to_string();
        }
        ms.iter().map(|(a, b, c, d)| format!("a^{a}*b^{b}*c^{c}*d^{d}")).collect::<Vec<_>>().join(" + ")
    })
}

/// Element of the commutative subalgebra generated by v_0, v_1.
fn in_v_span(d: &DecomposedAlgebra, coeffs: &[String]) -> AlgElement {
    let mut acc = d.algebra().zero();
    for (m, c) in d.v_monomials().unwrap().iter().zip(coeffs) {
        let c = d.ctx().parse(c).unwrap();
        acc = acc.add(&m.scale(&c).unwrap()).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_is_anti_automorphism(ca in prop::collection::vec(field_text(), 16), cb in prop::collection::vec(field_text(), 16)) {
        let d = decomposed();
        let alg = d.algebra();
        let el = |cs: &[String]| {
            let coords = cs.iter().map(|c| d.ctx().parse(c).unwrap()).collect();
            alg.element(coords).unwrap()
        };
        let (x, y) = (el(&ca), el(&cb));
        let s = d.involution();
        prop_assert_eq!(s.apply(&s.apply(&x).unwrap()).unwrap(), x.clone());
        let lhs = s.apply(&x.mul(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, s.apply(&y).unwrap().mul(&s.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn v_span_is_symmetric_with_scalar_squares(cs in prop::collection::vec(field_text(), 4)) {
        let d = decomposed();
        let x = in_v_span(&d, &cs);
        prop_assert!(d.involution().is_symmetric(&x).unwrap());
        let alpha = x.square().unwrap().is_scalar().expect("squares in F[v] are scalars");
        let rep = represents(&d, &alpha).unwrap();
        if x.is_zero() {
            return Ok(());
        }
        let w = rep.witness().expect("x^2 is represented by x");
        prop_assert_eq!(w.square().unwrap(), d.algebra().scalar(&alpha));
    }
}
