//! Random element generators for the property and acceptance suites.
//!
//! Everything takes an external RNG so test runs stay reproducible under a
//! fixed seed. Coefficients are small nonzero integers.

use crate::poly::{coeff_int, Monomial, SuperPoly};
use crate::space::{Bidegree, Generator, GeneratorSpace};
use rand::seq::IteratorRandom;
use rand::Rng;

const COEFF_BOUND: i64 = 10;

fn random_coeff<R: Rng>(rng: &mut R) -> i64 {
    let mut c = 0;
    while c == 0 {
        c = rng.random_range(-COEFF_BOUND..=COEFF_BOUND);
    }
    c
}

/// A random monomial of total weight at most `max_weight`, with base
/// exponents at most `max_x_degree`.
pub fn random_monomial<R: Rng>(
    rng: &mut R,
    space: GeneratorSpace,
    max_weight: usize,
    max_x_degree: u64,
) -> Monomial {
    loop {
        let mut factors: Vec<Generator> = Vec::new();
        for g in space.base_gens() {
            for _ in 0..rng.random_range(0..=max_x_degree) {
                factors.push(g);
            }
        }
        for g in space.momentum_gens() {
            if rng.random_bool(0.3) {
                factors.push(g);
            }
        }
        for g in space.fibre_gens().chain(space.cofibre_gens()) {
            if rng.random_bool(0.4) {
                factors.push(g);
            }
        }
        let (m, sign) = Monomial::normalize(&factors);
        debug_assert_ne!(sign, 0);
        if m.total_weight() <= max_weight {
            return m;
        }
    }
}

/// A random polynomial with up to `max_terms` monomials of weight at most
/// `max_weight`.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    space: GeneratorSpace,
    max_weight: usize,
    max_terms: usize,
    max_x_degree: u64,
) -> SuperPoly {
    let mut out = SuperPoly::zero(space);
    for _ in 0..rng.random_range(1..=max_terms) {
        let m = random_monomial(rng, space, max_weight, max_x_degree);
        let c = coeff_int(random_coeff(rng));
        out = &out
            + &SuperPoly::from_monomial(space, m, c).expect("sampled in range");
    }
    out
}

/// A random nonzero parity-homogeneous polynomial.
pub fn random_parity_homogeneous<R: Rng>(
    rng: &mut R,
    space: GeneratorSpace,
    max_weight: usize,
    max_terms: usize,
    max_x_degree: u64,
) -> SuperPoly {
    loop {
        let want_odd = rng.random_bool(0.5);
        let mut out = SuperPoly::zero(space);
        let mut placed = 0;
        let mut attempts = 0;
        while placed < rng.random_range(1..=max_terms) && attempts < 200 {
            attempts += 1;
            let m = random_monomial(rng, space, max_weight, max_x_degree);
            if m.is_odd() != want_odd {
                continue;
            }
            let c = coeff_int(random_coeff(rng));
            out = &out
                + &SuperPoly::from_monomial(space, m, c).expect("sampled in range");
            placed += 1;
        }
        if !out.is_zero() {
            return out;
        }
    }
}

/// A random monomial of an exact bidegree (base factors fill in freely).
fn random_monomial_of_bidegree<R: Rng>(
    rng: &mut R,
    space: GeneratorSpace,
    d: Bidegree,
    max_x_degree: u64,
) -> Option<Monomial> {
    let max_p = d.horizontal.min(d.vertical);
    for _ in 0..400 {
        let j = rng.random_range(0..=max_p);
        let need_th = d.horizontal - j;
        let need_xi = d.vertical - j;
        if need_th > space.fibre_rank || need_xi > space.fibre_rank {
            continue;
        }
        if j > 0 && space.base_dim == 0 {
            continue;
        }
        let mut factors: Vec<Generator> = Vec::new();
        for _ in 0..j {
            factors.push(Generator::momentum(rng.random_range(1..=space.base_dim)));
        }
        let th = space.cofibre_gens().choose_multiple(rng, need_th);
        let xi = space.fibre_gens().choose_multiple(rng, need_xi);
        if th.len() < need_th || xi.len() < need_xi {
            continue;
        }
        factors.extend(th);
        factors.extend(xi);
        for g in space.base_gens() {
            for _ in 0..rng.random_range(0..=max_x_degree) {
                factors.push(g);
            }
        }
        let (m, sign) = Monomial::normalize(&factors);
        if sign != 0 && m.bidegree() == d {
            return Some(m);
        }
    }
    None
}

/// A random bihomogeneous polynomial of the exact bidegree `d` (zero when no
/// monomial of that bidegree exists in the space).
pub fn random_bihomogeneous<R: Rng>(
    rng: &mut R,
    space: GeneratorSpace,
    d: Bidegree,
    max_terms: usize,
    max_x_degree: u64,
) -> SuperPoly {
    let mut out = SuperPoly::zero(space);
    for _ in 0..rng.random_range(1..=max_terms) {
        if let Some(m) = random_monomial_of_bidegree(rng, space, d, max_x_degree) {
            let c = coeff_int(random_coeff(rng));
            out = &out
                + &SuperPoly::from_monomial(space, m, c).expect("sampled in range");
        }
    }
    out
}

/// A random total-weight-3 polynomial spread over the four cubic bidegrees.
pub fn random_cubic<R: Rng>(
    rng: &mut R,
    space: GeneratorSpace,
    max_terms: usize,
    max_x_degree: u64,
) -> SuperPoly {
    let mut out = SuperPoly::zero(space);
    for d in [
        Bidegree::new(1, 2),
        Bidegree::new(2, 1),
        Bidegree::new(0, 3),
        Bidegree::new(3, 0),
    ] {
        out = &out + &random_bihomogeneous(rng, space, d, max_terms, max_x_degree);
    }
    out
}

/// A random constant-coefficient quadratic twist input matrix entry set is
/// produced through the polynomial sampler with base degree 0.
pub fn random_quadratic<R: Rng>(
    rng: &mut R,
    space: GeneratorSpace,
    d: Bidegree,
    constant: bool,
) -> SuperPoly {
    random_bihomogeneous(rng, space, d, 3, if constant { 0 } else { 2 })
}
