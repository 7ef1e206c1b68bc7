//! The canonical even symplectic structure: graded Poisson bracket,
//! Hamiltonian flows, Legendre transform.
//!
//! The bracket is fixed on generators by
//!
//! ```text
//! {p_i, x_j} = delta_ij      {th_a, xi_b} = delta_ab = {xi_b, th_a}
//! ```
//!
//! (all other generator pairs bracket to zero) and extended as a graded
//! biderivation. In terms of left partial derivatives, monomial-wise in `F`:
//!
//! ```text
//! {F,G} = sum_i  dF/dp_i dG/dx_i - dF/dx_i dG/dp_i
//!       + (-1)^(|F|+1) sum_a  dF/dth_a dG/dxi_a + dF/dxi_a dG/dth_a
//! ```
//!
//! This is an even bracket of bidegree (-1,-1): graded antisymmetry reads
//! `{F,G} = -(-1)^{|F||G|}{G,F}`, Leibniz `{F,GH} = {F,G}H + (-1)^{|F||G|}G{F,H}`,
//! and the graded Jacobi identity holds exactly. A second, independent
//! implementation by recursive Leibniz expansion is kept as an in-repo
//! cross-check.

use crate::error::{Error, Result};
use crate::poly::{coeff_int, Coeff, SuperPoly};
use crate::space::{Bidegree, Family, Generator, GeneratorSpace};
use num_bigint::BigInt;
use num_rational::BigRational;

/// The canonical graded Poisson bracket.
pub fn poisson_bracket(f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
    if f.space() != g.space() {
        return Err(Error::SpaceMismatch);
    }
    let space = f.space();
    let mut out = SuperPoly::zero(space);
    for i in 1..=space.base_dim {
        let p = Generator::momentum(i);
        let x = Generator::base(i);
        out = &out + &(&f.partial_derivative(p) * &g.partial_derivative(x));
        out = &out - &(&f.partial_derivative(x) * &g.partial_derivative(p));
    }
    let (f_even, f_odd) = f.split_parity();
    for a in 1..=space.fibre_rank {
        let th = Generator::cofibre(a);
        let xi = Generator::fibre(a);
        let even_part = &(&f_even.partial_derivative(th) * &g.partial_derivative(xi))
            + &(&f_even.partial_derivative(xi) * &g.partial_derivative(th));
        let odd_part = &(&f_odd.partial_derivative(th) * &g.partial_derivative(xi))
            + &(&f_odd.partial_derivative(xi) * &g.partial_derivative(th));
        out = &(&out - &even_part) + &odd_part;
    }
    Ok(out)
}

/// Reference implementation of the bracket by recursive Leibniz expansion on
/// monomial factor lists. Slower than [`poisson_bracket`] and entirely
/// independent of the partial-derivative route; the two are asserted equal in
/// the test suite.
pub fn poisson_bracket_reference(f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
    if f.space() != g.space() {
        return Err(Error::SpaceMismatch);
    }
    let space = f.space();
    let mut out = SuperPoly::zero(space);
    for (m1, c1) in f.terms() {
        for (m2, c2) in g.terms() {
            let b = bracket_factor_lists(space, &m1.factor_list(), &m2.factor_list());
            out = &out + &b.scale(&(c1 * c2));
        }
    }
    Ok(out)
}

fn generator_table(a: Generator, b: Generator) -> i64 {
    match (a.family, b.family) {
        (Family::Momentum, Family::Base) if a.index == b.index => 1,
        (Family::Base, Family::Momentum) if a.index == b.index => -1,
        (Family::Cofibre, Family::Fibre) if a.index == b.index => 1,
        (Family::Fibre, Family::Cofibre) if a.index == b.index => 1,
        _ => 0,
    }
}

fn parity_of_list(xs: &[Generator]) -> bool {
    xs.iter().filter(|g| g.is_odd()).count() % 2 == 1
}

// {x1..xk, Y} = x1 {rest, Y} + (-1)^{|rest||Y|} {x1, Y} rest
fn bracket_factor_lists(
    space: GeneratorSpace,
    xs: &[Generator],
    ys: &[Generator],
) -> SuperPoly {
    if xs.is_empty() {
        return SuperPoly::zero(space);
    }
    if xs.len() == 1 {
        return bracket_gen_list(space, xs[0], ys);
    }
    let head = xs[0];
    let rest = &xs[1..];
    let head_poly = SuperPoly::generator(space, head).expect("validated generator");
    let rest_poly =
        SuperPoly::from_factors(space, vec![(rest.to_vec(), Coeff::from_integer(1.into()))])
            .expect("validated generators");
    let term1 = &head_poly * &bracket_factor_lists(space, rest, ys);
    let mut term2 = &bracket_gen_list(space, head, ys) * &rest_poly;
    if parity_of_list(rest) && parity_of_list(ys) {
        term2 = term2.negate();
    }
    &term1 + &term2
}

// {g, y1..yk} = {g, y1} rest + (-1)^{|g||y1|} y1 {g, rest}
fn bracket_gen_list(space: GeneratorSpace, g: Generator, ys: &[Generator]) -> SuperPoly {
    if ys.is_empty() {
        return SuperPoly::zero(space);
    }
    let head = ys[0];
    let rest = &ys[1..];
    if rest.is_empty() {
        return SuperPoly::scalar(space, coeff_int(generator_table(g, head)));
    }
    let head_poly = SuperPoly::generator(space, head).expect("validated generator");
    let rest_poly =
        SuperPoly::from_factors(space, vec![(rest.to_vec(), Coeff::from_integer(1.into()))])
            .expect("validated generators");
    let term1 =
        &SuperPoly::scalar(space, coeff_int(generator_table(g, head))) * &rest_poly;
    let mut term2 = &head_poly * &bracket_gen_list(space, g, rest);
    if g.is_odd() && head.is_odd() {
        term2 = term2.negate();
    }
    &term1 + &term2
}

/// The time-1 pullback of the Hamiltonian flow of `h`, applied to `f`:
/// the truncating exponential series `sum_k X_h^k f / k!`.
///
/// `h` must be bihomogeneous with bidegree `(0,m)` or `(m,0)`, so that each
/// application of `X_h` strictly lowers one grading component and the series
/// terminates. The iteration cap `max_total_weight(f) + 1` is a hard bound,
/// not a tolerance.
pub fn exp_flow(h: &SuperPoly, f: &SuperPoly) -> Result<SuperPoly> {
    if h.space() != f.space() {
        return Err(Error::SpaceMismatch);
    }
    if h.is_zero() {
        return Ok(f.clone());
    }
    match h.bidegree() {
        Some(d) if d.horizontal == 0 || d.vertical == 0 => {}
        _ => {
            return Err(Error::Precondition(
                "flow hamiltonian must be bihomogeneous of bidegree (0,m) or (m,0)".into(),
            ))
        }
    }
    let cap = f.max_total_weight() + 1;
    let mut out = f.clone();
    let mut term = f.clone();
    for k in 1..=cap as u64 {
        term = poisson_bracket(h, &term)?;
        if term.is_zero() {
            return Ok(out);
        }
        term = term.scale(&BigRational::new(BigInt::from(1), BigInt::from(k)));
        out = &out + &term;
    }
    if poisson_bracket(h, &term)?.is_zero() {
        Ok(out)
    } else {
        Err(Error::NonNilpotent)
    }
}

/// The Legendre transform: the algebra automorphism exchanging `xi_a` with
/// `th_a` while fixing `x` and `p`. An involution, a Poisson map, and it
/// swaps the two grading components.
pub fn legendre(f: &SuperPoly) -> SuperPoly {
    let space = f.space();
    f.substitute(&|g: Generator| {
        let swapped = match g.family {
            Family::Fibre => Generator::cofibre(g.index),
            Family::Cofibre => Generator::fibre(g.index),
            _ => g,
        };
        SuperPoly::generator(space, swapped).expect("index preserved")
    })
    .expect("same space")
}

/// Common bidegree bookkeeping: the bracket drops bidegree by (1,1).
pub fn bracket_bidegree(a: Bidegree, b: Bidegree) -> Option<Bidegree> {
    let k = (a.horizontal + b.horizontal).checked_sub(1)?;
    let l = (a.vertical + b.vertical).checked_sub(1)?;
    Some(Bidegree::new(k, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse::parse_expression;

    fn sp(n: usize, r: usize) -> GeneratorSpace {
        GeneratorSpace::new(n, r)
    }

    fn pp(space: GeneratorSpace, text: &str) -> SuperPoly {
        parse_expression(text, space).unwrap()
    }

    fn pb(f: &SuperPoly, g: &SuperPoly) -> SuperPoly {
        poisson_bracket(f, g).unwrap()
    }

    #[test]
    fn generator_bracket_table() {
        let s = sp(2, 2);
        let p1 = pp(s, "p1");
        let x1 = pp(s, "x1");
        let x2 = pp(s, "x2");
        let th1 = pp(s, "th1");
        let xi1 = pp(s, "xi1");
        let xi2 = pp(s, "xi2");
        assert_eq!(pb(&p1, &x1), SuperPoly::one(s));
        assert_eq!(pb(&p1, &x2), SuperPoly::zero(s));
        assert_eq!(pb(&x1, &p1), SuperPoly::one(s).negate());
        assert_eq!(pb(&th1, &xi1), SuperPoly::one(s));
        assert_eq!(pb(&xi1, &th1), SuperPoly::one(s));
        assert_eq!(pb(&th1, &xi2), SuperPoly::zero(s));
        assert_eq!(pb(&x1, &xi1), SuperPoly::zero(s));
        assert_eq!(pb(&p1, &th1), SuperPoly::zero(s));
    }

    #[test]
    fn bracket_of_bivector_and_form_is_endomorphism_hamiltonian() {
        // {th1*th2, xi1*xi2} = xi1*th1 + xi2*th2
        let s = sp(0, 2);
        let pi = pp(s, "th1*th2");
        let om = pp(s, "xi1*xi2");
        assert_eq!(pb(&pi, &om), pp(s, "xi1*th1 + xi2*th2"));
    }

    #[test]
    fn bracket_matches_reference_on_fixed_inputs() {
        let s = sp(2, 2);
        let cases = [
            ("x1^2*p1 + th1*th2", "xi1*p2 - x2*th1"),
            ("xi1*xi2*th1", "p1*p2"),
            ("x1*xi1 + x2*xi2", "th1*th2 + p1"),
            ("1/2*x1*th1*th2", "xi1*p1 + xi2*p2"),
        ];
        for (a, b) in cases {
            let f = pp(s, a);
            let g = pp(s, b);
            assert_eq!(
                pb(&f, &g),
                poisson_bracket_reference(&f, &g).unwrap(),
                "bracket vs reference on ({a}, {b})"
            );
        }
    }

    #[test]
    fn bracket_bidegree_drop() {
        let s = sp(2, 2);
        let f = pp(s, "x1*th1*p2");
        let g = pp(s, "xi1*xi2");
        let b = pb(&f, &g);
        assert!(!b.is_zero());
        assert_eq!(
            b.bidegree().unwrap(),
            bracket_bidegree(f.bidegree().unwrap(), g.bidegree().unwrap()).unwrap()
        );
    }

    #[test]
    fn flow_of_zero_is_identity() {
        let s = sp(1, 1);
        let f = pp(s, "x1*xi1 + p1");
        assert_eq!(exp_flow(&SuperPoly::zero(s), &f).unwrap(), f);
    }

    #[test]
    fn flow_by_form_reproduces_translation_table() {
        // omega = xi1*xi2 (omega_12 = 1): th1 -> th1 - xi2, th2 -> th2 + xi1
        let s = sp(0, 2);
        let om = pp(s, "xi1*xi2");
        assert_eq!(exp_flow(&om, &pp(s, "th1")).unwrap(), pp(s, "th1 - xi2"));
        assert_eq!(exp_flow(&om, &pp(s, "th2")).unwrap(), pp(s, "th2 + xi1"));
        assert_eq!(exp_flow(&om, &pp(s, "xi1")).unwrap(), pp(s, "xi1"));
    }

    #[test]
    fn flow_by_bivector_reproduces_translation_table() {
        // pi = th1*th2: xi1 -> xi1 - th2, xi2 -> xi2 + th1
        let s = sp(0, 2);
        let pi = pp(s, "th1*th2");
        assert_eq!(exp_flow(&pi, &pp(s, "xi1")).unwrap(), pp(s, "xi1 - th2"));
        assert_eq!(exp_flow(&pi, &pp(s, "xi2")).unwrap(), pp(s, "xi2 + th1"));
        assert_eq!(exp_flow(&pi, &pp(s, "th1")).unwrap(), pp(s, "th1"));
    }

    #[test]
    fn flow_moves_momentum_by_coefficient_gradient() {
        // omega = 1/2*w_ab xi_a xi_b with w_12 = x1:
        // p1 -> p1 - 1/2 * d(w_ab)/dx1 xi_a xi_b = p1 - xi1*xi2
        let s = sp(1, 2);
        let om = pp(s, "x1*xi1*xi2");
        assert_eq!(
            exp_flow(&om, &pp(s, "p1")).unwrap(),
            pp(s, "p1 - xi1*xi2")
        );
    }

    #[test]
    fn flow_rejects_non_nilpotent_direction() {
        let s = sp(1, 1);
        let h = pp(s, "xi1*th1"); // bidegree (1,1)
        assert!(matches!(
            exp_flow(&h, &pp(s, "x1")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn flow_inverts_under_sign_flip() {
        let s = sp(1, 2);
        let om = pp(s, "x1*xi1*xi2");
        let f = pp(s, "th1*p1 + x1^2*th2");
        let there = exp_flow(&om, &f).unwrap();
        let back = exp_flow(&om.negate(), &there).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn legendre_swaps_and_involutes() {
        let s = sp(1, 2);
        assert_eq!(legendre(&pp(s, "xi1*p1")), pp(s, "th1*p1"));
        let f = pp(s, "x1*xi1*th2 + p1 - 2*xi1*xi2");
        assert_eq!(legendre(&legendre(&f)), f);
    }

    #[test]
    fn legendre_is_poisson_map_on_samples() {
        let s = sp(2, 2);
        let cases = [
            ("th1*p1 + xi2", "x1*xi1*xi2"),
            ("x2*th1*th2", "xi1*p2 - th2"),
        ];
        for (a, b) in cases {
            let f = pp(s, a);
            let g = pp(s, b);
            assert_eq!(legendre(&pb(&f, &g)), pb(&legendre(&f), &legendre(&g)));
        }
    }
}
