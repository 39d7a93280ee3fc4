use osvg::symfunc::poly::{add_into, h_poly, schur_poly, Polynomial};
use osvg::symfunc::{h_inner, h_to_schur, pieri, pieri_single_row, predicted_invariant_dims, HSum, Partition};
use osvg::Ring;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn inner_product_symmetry() {
    for a in 0..=8 {
        let parts = Partition::all(a);
        for l in &parts {
            for m in &parts {
                assert_eq!(h_inner(l, m), h_inner(m, l), "{l} {m}");
            }
        }
    }
}

/// `⟨h_λ, h_µ⟩` is the coefficient of `x^µ` in `h_λ(x_1, …, x_ℓ(µ))`.
#[test]
fn inner_product_from_monomial_coefficients() {
    for a in 1..=6 {
        for l in Partition::all(a) {
            for m in Partition::all(a) {
                let poly = h_poly(&l, m.len());
                let key: Vec<u32> = m.parts().iter().map(|&x| x as u32).collect();
                let coeff = poly.get(&key).copied().unwrap_or(0);
                assert_eq!(h_inner(&l, &m) as i64, coeff, "{l} {m}");
            }
        }
    }
}

#[test]
fn iterated_pieri_matches_polynomials() {
    for a in 1..=6 {
        for l in Partition::all(a) {
            for vars in 1..=6 {
                let mut from_schur = Polynomial::new();
                for (mu, c) in h_to_schur(&l) {
                    add_into(&mut from_schur, &schur_poly(&mu, vars), c as i64);
                }
                assert_eq!(from_schur, h_poly(&l, vars), "{l} vars={vars}");
            }
        }
    }
}

#[test]
fn single_row_pieri() {
    let sorted = |mut v: Vec<Partition>| {
        v.sort();
        v
    };
    assert_eq!(sorted(pieri_single_row(2, 1)), sorted(vec![p("3"), p("2,1")]));
    assert_eq!(sorted(pieri_single_row(1, 1)), sorted(vec![p("2"), p("1,1")]));
    for l1 in 1..=5 {
        for k in 1..=5 {
            assert_eq!(sorted(pieri_single_row(l1, k)), sorted(pieri(&Partition::new([l1]), k)));
        }
    }
    let mut h21 = h_poly(&p("2"), 3);
    h21 = osvg::symfunc::poly::mul(&h21, &h_poly(&p("1"), 3));
    let mut sum = Polynomial::new();
    for mu in pieri_single_row(2, 1) {
        add_into(&mut sum, &schur_poly(&mu, 3), 1);
    }
    assert_eq!(sum, h21);
}

#[test]
fn frobenius_pairings() {
    for n in 2..=8 {
        let ones = Partition::new(vec![1; n + 1]);
        let hook = Partition::hook(2, n - 1);
        let hn1 = Partition::new([n, 1]);
        assert_eq!(h_inner(&ones, &hn1), n as u64 + 1);
        assert_eq!(h_inner(&hook, &hn1), n as u64);
        assert_eq!(h_inner(&hook, &Partition::new([n + 1])), 1);
        assert_eq!(h_inner(&Partition::new([n]), &Partition::new([n])), 1);
        let os = predicted_invariant_dims(Ring::OS, n).unwrap();
        let vg = predicted_invariant_dims(Ring::VG, n).unwrap();
        assert_eq!((os.restricted, os.full, vg.restricted, vg.full), (2 * n as u64, 2, n as u64 + 1, 1));
    }
}

#[test]
fn text_forms() {
    let x: HSum = "2*h[2,1,1,1]".parse().unwrap();
    assert_eq!(x.to_string(), "2*h[2,1,1,1]");
    assert_eq!(p("2,1,1").to_string(), "2,1,1");
}
