//! Randomized regression check of the norm axioms for a domain.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::NormedDomain;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub failures: Vec<AxiomFailure>,
}

/// Draws `samples` seeded pairs `(u, v)` of size at most `size` and checks
/// (N0), (N1), the zero-product property, `‖1‖ = 1`, `‖ε‖ = 1` for every unit,
/// and that exactly the units have norm 1.
pub fn check_norm_axioms<D: NormedDomain>(
    d: &D,
    samples: usize,
    size: u32,
    seed: u64,
) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport::default();
    let mut fail = |axiom: &'static str, witness: String| {
        report.failures.push(AxiomFailure { axiom, witness });
    };

    if !d.norm(&d.one()).is_one() {
        fail("norm(1) = 1", d.format_elem(&d.one()));
    }
    if !d.norm(&d.zero()).is_zero() {
        fail("N0", d.format_elem(&d.zero()));
    }
    for u in d.units() {
        if !d.norm(&u).is_one() {
            fail("unit norm 1", d.format_elem(&u));
        }
    }

    for _ in 0..samples {
        let u = d.random_element(&mut rng, size);
        let v = d.random_element(&mut rng, size);
        let uv = d.mul(&u, &v);
        let show = |x: &D::Elem| d.format_elem(x);

        for x in [&u, &v, &uv] {
            if d.norm(x).is_zero() != d.is_zero(x) {
                fail("N0", show(x));
            }
            if d.norm(x).is_one() != d.is_unit(x) {
                fail("norm 1 iff unit", show(x));
            }
        }
        if d.norm(&uv) != d.norm(&u) * d.norm(&v) {
            fail("N1", format!("{} * {}", show(&u), show(&v)));
        }
        if !d.is_zero(&u) && !d.is_zero(&v) && d.is_zero(&uv) {
            fail("zero product", format!("{} * {}", show(&u), show(&v)));
        }
    }
    report.checked = samples;
    report
}
