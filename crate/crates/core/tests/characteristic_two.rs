//! Descent over `F_2[t]`, where the bilinear form of a diagonal form vanishes.

mod common;

use adc_core::{
    brute_integral_zero, chord_zero, descend, parse_form, random_rational_zero, FractionPoint,
    NormedDomain, PrimeFieldPolynomials, SearchBox,
};
use common::rng;
use num_bigint::BigUint;
use rand::Rng;

fn f2() -> PrimeFieldPolynomials {
    PrimeFieldPolynomials::new(2).unwrap()
}

#[test]
fn diagonal_form_with_constant_has_no_other_chord_zeros() {
    // On X^2 + tY^2 + c every line through a zero y0 has B = 0 (the bilinear
    // form is 2 * ... = 0), so the chord is tangent and returns y0 itself.
    let d = f2();
    for c in ["t", "t^3+t", "t^2+t+1"] {
        let f = parse_form(&d, &format!("x^2+t*y^2+{c}"), 2).unwrap();
        let Some(y0) = brute_integral_zero(&d, &f, SearchBox::new(3, 0)) else {
            continue;
        };
        for w1 in d.box_elements(2) {
            for w2 in d.box_elements(2) {
                let w = [w1.clone(), w2];
                if let Ok(x) = chord_zero(&d, &f, &y0, &w) {
                    assert_eq!(x.as_integral(&d), Some(y0.clone()), "{c}");
                }
            }
        }
        assert!(random_rational_zero(&d, &f, &y0, 0, &BigUint::from(1u32)).is_err());
    }
}

#[test]
fn explicit_chord_point_descends() {
    let d = f2();
    let f = parse_form(&d, "x^2+t*y^2+x+t^2+t", 2).unwrap();
    let x = FractionPoint::reduce(&d, vec![d.poly(&[1, 1, 1]), d.one()], d.poly(&[1, 1])).unwrap();
    assert!(f.eval(&d, &x).unwrap().is_zero(&d));
    let t = descend(&d, &f, &x, 2).unwrap();
    assert_eq!(t.steps.len(), 1);
    assert!(d.is_zero(&f.eval_integral(&d, &t.result).unwrap()));
}

#[test]
fn brute_base_point_chord_and_descent() {
    let d = f2();
    let f = parse_form(&d, "x^2+t*y^2+x+t^2+t", 2).unwrap();
    let y0 = brute_integral_zero(&d, &f, SearchBox::new(3, 0)).expect("zero in the degree-3 box");
    assert!(d.is_zero(&f.eval_integral(&d, &y0).unwrap()));
    let mut r = rng(2);
    for _ in 0..200 {
        let seed = r.random();
        let height = BigUint::from(1u32 << r.random_range(1..6));
        let x = random_rational_zero(&d, &f, &y0, seed, &height).unwrap();
        assert!(!x.is_integral(&d) && d.norm(x.den()) >= height);
        let trace = descend(&d, &f, &x, 2).unwrap();
        let mut degree = x.den().degree().unwrap();
        for s in &trace.steps {
            let next = s.den_next.degree().unwrap();
            assert!(next < s.den.degree().unwrap() && s.den.degree().unwrap() <= degree);
            degree = next;
        }
        assert!(d.is_zero(&f.eval_integral(&d, &trace.result).unwrap()));
    }
}

#[test]
fn high_degree_chords_descend() {
    // With the bilinear form gone, f2(a - b*y) = f2(a) + b^2 f2(y). Every
    // trace seen on this surface ends after a single step, even from
    // denominators of degree 11; only the postconditions are asserted.
    let d = f2();
    let f = parse_form(&d, "x^2+t*y^2+x+t^2+t", 2).unwrap();
    let y0 = vec![d.poly(&[0, 1]), d.zero()];
    let mut r = rng(5);
    for _ in 0..300 {
        let w = common::random_vec(&d, &mut r, 2, 7);
        let Ok(x) = chord_zero(&d, &f, &y0, &w) else {
            continue;
        };
        let trace = descend(&d, &f, &x, 2).unwrap();
        for s in &trace.steps {
            assert!(d.norm(&s.den_next) < d.norm(&s.den));
        }
        assert!(d.is_zero(&f.eval_integral(&d, &trace.result).unwrap()));
    }
}

#[test]
fn odd_characteristic_traces_are_longer() {
    let d = PrimeFieldPolynomials::new(3).unwrap();
    let f = parse_form(&d, "x^2+t*y^2-t^2-t", 2).unwrap();
    let y0 = vec![d.poly(&[0, 1]), d.one()];
    let mut r = rng(5);
    let mut longest = 0;
    for _ in 0..300 {
        let w = common::random_vec(&d, &mut r, 2, 5);
        let Ok(x) = chord_zero(&d, &f, &y0, &w) else {
            continue;
        };
        let trace = descend(&d, &f, &x, 2).unwrap();
        for s in &trace.steps {
            assert!(d.norm(&s.den_next) < d.norm(&s.den));
        }
        assert!(d.is_zero(&f.eval_integral(&d, &trace.result).unwrap()));
        longest = longest.max(trace.steps.len());
    }
    assert!(longest >= 3, "longest trace {longest}");
}
