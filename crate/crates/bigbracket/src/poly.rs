//! Exact supercommutative polynomials over the doubly-graded generator set.
//!
//! Elements are stored in canonical form: a map from normalized monomials to
//! nonzero rational coefficients. Even generators (`x`, `p`) carry integer
//! exponents; odd generators (`xi`, `th`) appear at most once per monomial and
//! are kept in the fixed order `xi_1 < .. < xi_r < th_1 < .. < th_r`. Moving
//! odd factors into that order contributes the Koszul sign of the permutation.

use crate::error::{Error, Result};
use crate::space::{Bidegree, Generator, GeneratorSpace};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact coefficient type: arbitrary-precision rationals.
pub type Coeff = BigRational;

/// Build a rational coefficient from an integer.
pub fn coeff_int(k: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(k))
}

/// Build the rational `num/den`.
pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A normalized monomial: even exponents plus a strictly increasing list of
/// odd generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    evens: Vec<(Generator, u64)>,
    odds: Vec<Generator>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial {
            evens: Vec::new(),
            odds: Vec::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.evens.is_empty() && self.odds.is_empty()
    }

    pub fn generator(g: Generator) -> Self {
        if g.is_odd() {
            Monomial {
                evens: Vec::new(),
                odds: vec![g],
            }
        } else {
            Monomial {
                evens: vec![(g, 1)],
                odds: Vec::new(),
            }
        }
    }

    pub fn even_exponents(&self) -> &[(Generator, u64)] {
        &self.evens
    }

    pub fn odd_factors(&self) -> &[Generator] {
        &self.odds
    }

    pub fn bidegree(&self) -> Bidegree {
        let mut k = 0usize;
        let mut l = 0usize;
        for &(g, e) in &self.evens {
            let d = g.bidegree();
            k += d.horizontal * e as usize;
            l += d.vertical * e as usize;
        }
        for &g in &self.odds {
            let d = g.bidegree();
            k += d.horizontal;
            l += d.vertical;
        }
        Bidegree::new(k, l)
    }

    pub fn total_weight(&self) -> usize {
        self.bidegree().total_weight()
    }

    /// True when the monomial is odd, i.e. carries an odd number of odd
    /// factors. Always equal to `total_weight() % 2 == 1`.
    pub fn is_odd(&self) -> bool {
        self.odds.len() % 2 == 1
    }

    pub fn degree_of(&self, g: Generator) -> u64 {
        if g.is_odd() {
            u64::from(self.odds.contains(&g))
        } else {
            self.evens
                .iter()
                .find(|&&(h, _)| h == g)
                .map_or(0, |&(_, e)| e)
        }
    }

    /// The flat factor list in canonical order, evens expanded by exponent.
    pub fn factor_list(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for &(g, e) in &self.evens {
            for _ in 0..e {
                out.push(g);
            }
        }
        out.extend(self.odds.iter().copied());
        out
    }

    /// Normalize a raw factor sequence. Returns the canonical monomial and
    /// the Koszul sign of the sorting permutation, or sign 0 (with the empty
    /// monomial) when an odd generator repeats.
    pub fn normalize(factors: &[Generator]) -> (Monomial, i8) {
        let mut evens: BTreeMap<Generator, u64> = BTreeMap::new();
        let mut odds: Vec<Generator> = Vec::new();
        let mut sign = 1i8;
        for &g in factors {
            if g.is_odd() {
                // Insertion sort keeps the count of transpositions explicit.
                let pos = odds.partition_point(|&h| h < g);
                if odds.get(pos) == Some(&g) {
                    return (Monomial::one(), 0);
                }
                if (odds.len() - pos) % 2 == 1 {
                    sign = -sign;
                }
                odds.insert(pos, g);
            } else {
                *evens.entry(g).or_insert(0) += 1;
            }
        }
        (
            Monomial {
                evens: evens.into_iter().collect(),
                odds,
            },
            sign,
        )
    }

    /// Product of two canonical monomials: `None` when an odd generator
    /// repeats, otherwise the merged monomial with the Koszul merge sign.
    pub fn merge(&self, other: &Monomial) -> Option<(Monomial, i8)> {
        let mut evens: BTreeMap<Generator, u64> = self.evens.iter().copied().collect();
        for &(g, e) in &other.evens {
            *evens.entry(g).or_insert(0) += e;
        }
        let mut odds = Vec::with_capacity(self.odds.len() + other.odds.len());
        let mut sign = 1i8;
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.odds.len() || j < other.odds.len() {
            match (self.odds.get(i), other.odds.get(j)) {
                (Some(&a), Some(&b)) => match a.cmp(&b) {
                    Ordering::Equal => return None,
                    Ordering::Less => {
                        odds.push(a);
                        i += 1;
                    }
                    Ordering::Greater => {
                        // b crosses the remaining odd factors of self
                        if (self.odds.len() - i) % 2 == 1 {
                            sign = -sign;
                        }
                        odds.push(b);
                        j += 1;
                    }
                },
                (Some(&a), None) => {
                    odds.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    odds.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Some((
            Monomial {
                evens: evens.into_iter().collect(),
                odds,
            },
            sign,
        ))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Deterministic term order: total weight first, then bidegree, then the
    /// factor data. Only used to fix a canonical printing order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_weight()
            .cmp(&other.total_weight())
            .then_with(|| {
                let (a, b) = (self.bidegree(), other.bidegree());
                (a.horizontal, a.vertical).cmp(&(b.horizontal, b.vertical))
            })
            .then_with(|| self.evens.cmp(&other.evens))
            .then_with(|| self.odds.cmp(&other.odds))
    }
}

/// A supercommutative polynomial in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPoly {
    space: GeneratorSpace,
    terms: BTreeMap<Monomial, Coeff>,
}

impl SuperPoly {
    pub fn zero(space: GeneratorSpace) -> Self {
        SuperPoly {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(space: GeneratorSpace, c: Coeff) -> Self {
        let mut p = SuperPoly::zero(space);
        p.accumulate(Monomial::one(), c);
        p
    }

    pub fn one(space: GeneratorSpace) -> Self {
        SuperPoly::scalar(space, Coeff::one())
    }

    pub fn generator(space: GeneratorSpace, g: Generator) -> Result<Self> {
        space.check(g)?;
        let mut p = SuperPoly::zero(space);
        p.accumulate(Monomial::generator(g), Coeff::one());
        Ok(p)
    }

    /// Build from raw factor sequences with coefficients, normalizing each.
    pub fn from_factors(
        space: GeneratorSpace,
        terms: impl IntoIterator<Item = (Vec<Generator>, Coeff)>,
    ) -> Result<Self> {
        let mut p = SuperPoly::zero(space);
        for (factors, c) in terms {
            for &g in &factors {
                space.check(g)?;
            }
            let (m, s) = Monomial::normalize(&factors);
            if s != 0 {
                p.accumulate(m, c * coeff_int(s.into()));
            }
        }
        Ok(p)
    }

    pub fn from_monomial(space: GeneratorSpace, m: Monomial, c: Coeff) -> Result<Self> {
        for g in m.factor_list() {
            space.check(g)?;
        }
        let mut p = SuperPoly::zero(space);
        p.accumulate(m, c);
        Ok(p)
    }

    pub fn space(&self) -> GeneratorSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    fn accumulate(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_space(&self, other: &SuperPoly) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn add(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn negate(&self) -> SuperPoly {
        let mut out = SuperPoly::zero(self.space);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero(self.space);
        }
        let mut out = SuperPoly::zero(self.space);
        for (m, k) in &self.terms {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> SuperPoly {
        self.scale(&coeff_int(k))
    }

    /// Supercommutative product in canonical form.
    pub fn mul(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check_space(other)?;
        let mut out = SuperPoly::zero(self.space);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, s)) = m1.merge(m2) {
                    out.accumulate(m, c1 * c2 * coeff_int(s.into()));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u64) -> SuperPoly {
        let mut out = SuperPoly::one(self.space);
        for _ in 0..e {
            out = out.mul(self).expect("same space");
        }
        out
    }

    /// Left graded derivative with respect to a generator.
    ///
    /// For an odd generator the sign is the parity of the factors skipped to
    /// reach it, which makes this the left derivative:
    /// `d(xi1*xi2)/d xi2 = -xi1`.
    pub fn partial_derivative(&self, g: Generator) -> SuperPoly {
        let mut out = SuperPoly::zero(self.space);
        for (m, c) in &self.terms {
            if g.is_odd() {
                if let Some(pos) = m.odds.iter().position(|&h| h == g) {
                    let mut odds = m.odds.clone();
                    odds.remove(pos);
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    out.accumulate(
                        Monomial {
                            evens: m.evens.clone(),
                            odds,
                        },
                        c * coeff_int(sign),
                    );
                }
            } else if let Some(i) = m.evens.iter().position(|&(h, _)| h == g) {
                let e = m.evens[i].1;
                let mut evens = m.evens.clone();
                if e == 1 {
                    evens.remove(i);
                } else {
                    evens[i].1 = e - 1;
                }
                out.accumulate(
                    Monomial {
                        evens,
                        odds: m.odds.clone(),
                    },
                    c * Coeff::from_integer(BigInt::from(e)),
                );
            }
        }
        out
    }

    /// The bihomogeneous component of the given bidegree.
    pub fn project_bidegree(&self, d: Bidegree) -> SuperPoly {
        let mut out = SuperPoly::zero(self.space);
        for (m, c) in &self.terms {
            if m.bidegree() == d {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// All bihomogeneous components, keyed by bidegree.
    pub fn components(&self) -> BTreeMap<Bidegree, SuperPoly> {
        let mut out: BTreeMap<Bidegree, SuperPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| SuperPoly::zero(self.space))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The common bidegree of all monomials, `None` for zero or mixed.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys();
        let first = it.next()?.bidegree();
        for m in it {
            if m.bidegree() != first {
                return None;
            }
        }
        Some(first)
    }

    /// True when zero or concentrated in the single bidegree `d`.
    pub fn is_bihomogeneous_of(&self, d: Bidegree) -> bool {
        self.terms.keys().all(|m| m.bidegree() == d)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    /// Largest total weight among monomials (0 for the zero polynomial).
    pub fn max_total_weight(&self) -> usize {
        self.terms
            .keys()
            .map(Monomial::total_weight)
            .max()
            .unwrap_or(0)
    }

    /// True when every monomial has the same total weight `w`.
    pub fn is_weight_homogeneous_of(&self, w: usize) -> bool {
        self.terms.keys().all(|m| m.total_weight() == w)
    }

    /// The common parity of all monomials: `Some(true)` for odd. Zero counts
    /// as even; mixed parity gives `None`.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(false),
            Some(m) => m.is_odd(),
        };
        for m in it {
            if m.is_odd() != first {
                return None;
            }
        }
        Some(first)
    }

    /// Split into (even-parity part, odd-parity part).
    pub fn split_parity(&self) -> (SuperPoly, SuperPoly) {
        let mut even = SuperPoly::zero(self.space);
        let mut odd = SuperPoly::zero(self.space);
        for (m, c) in &self.terms {
            let target = if m.is_odd() { &mut odd } else { &mut even };
            target.terms.insert(m.clone(), c.clone());
        }
        (even, odd)
    }

    /// Apply an algebra homomorphism given by generator images. Each image
    /// must have the parity of its generator; the images are multiplied in
    /// the canonical factor order of every monomial, which realizes all
    /// Koszul signs through the product.
    pub fn substitute(&self, image: &dyn Fn(Generator) -> SuperPoly) -> Result<SuperPoly> {
        let mut out = SuperPoly::zero(self.space);
        for (m, c) in &self.terms {
            let mut term = SuperPoly::scalar(self.space, c.clone());
            for g in m.factor_list() {
                let img = image(g);
                debug_assert_eq!(
                    img.parity(),
                    Some(g.is_odd()),
                    "substitution image must preserve parity"
                );
                term = term.mul(&img)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Largest coefficient denominator/numerator magnitudes are unbounded;
    /// this hook exists for tests that want the raw map.
    pub fn into_terms(self) -> BTreeMap<Monomial, Coeff> {
        self.terms
    }
}

impl Add for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, other: &SuperPoly) -> SuperPoly {
        SuperPoly::add(self, other).expect("space mismatch in +")
    }
}

impl Sub for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, other: &SuperPoly) -> SuperPoly {
        SuperPoly::sub(self, other).expect("space mismatch in -")
    }
}

impl Mul for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, other: &SuperPoly) -> SuperPoly {
        SuperPoly::mul(self, other).expect("space mismatch in *")
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.negate()
    }
}

/// `normalize_monomial` as a standalone operation: canonical monomial plus
/// Koszul sign, after validating every generator against the space.
pub fn normalize_monomial(
    space: GeneratorSpace,
    factors: &[Generator],
) -> Result<(Monomial, i8)> {
    for &g in factors {
        space.check(g)?;
    }
    Ok(Monomial::normalize(factors))
}

impl std::fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::frontend::print::print_expression(self))
    }
}

/// True when the coefficient is negative (used by the printer).
pub(crate) fn coeff_is_negative(c: &Coeff) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Family;

    fn sp(n: usize, r: usize) -> GeneratorSpace {
        GeneratorSpace::new(n, r)
    }

    fn gen_poly(space: GeneratorSpace, g: Generator) -> SuperPoly {
        SuperPoly::generator(space, g).unwrap()
    }

    #[test]
    fn normalize_swaps_odd_pair() {
        let s = sp(1, 2);
        let (m, sign) =
            normalize_monomial(s, &[Generator::fibre(2), Generator::fibre(1)]).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(m.odd_factors(), &[Generator::fibre(1), Generator::fibre(2)]);
    }

    #[test]
    fn normalize_kills_odd_square() {
        let s = sp(1, 2);
        let (m, sign) =
            normalize_monomial(s, &[Generator::cofibre(1), Generator::cofibre(1)]).unwrap();
        assert_eq!(sign, 0);
        assert!(m.is_one());
    }

    #[test]
    fn normalize_commutes_even_factors() {
        let s = sp(1, 1);
        let (m, sign) = normalize_monomial(
            s,
            &[Generator::base(1), Generator::fibre(1), Generator::base(1)],
        )
        .unwrap();
        assert_eq!(sign, 1);
        assert_eq!(m.degree_of(Generator::base(1)), 2);
        assert_eq!(m.odd_factors(), &[Generator::fibre(1)]);
    }

    #[test]
    fn normalize_rejects_out_of_range() {
        let s = sp(1, 1);
        assert!(normalize_monomial(s, &[Generator::fibre(2)]).is_err());
    }

    #[test]
    fn mul_anticommutes_odd_generators() {
        let s = sp(0, 2);
        let xi1 = gen_poly(s, Generator::fibre(1));
        let xi2 = gen_poly(s, Generator::fibre(2));
        let fwd = xi1.mul(&xi2).unwrap();
        let bwd = xi2.mul(&xi1).unwrap();
        assert_eq!(bwd, fwd.negate());
        assert!(!fwd.is_zero());
    }

    #[test]
    fn mul_kills_odd_square_across_sum() {
        // (x1 + th1) * th1 = x1*th1
        let s = sp(1, 1);
        let x1 = gen_poly(s, Generator::base(1));
        let th1 = gen_poly(s, Generator::cofibre(1));
        let lhs = (&(&x1 + &th1)) * &th1;
        let expected = &x1 * &th1;
        assert_eq!(lhs, expected);
    }

    #[test]
    fn mul_even_generator_commutes() {
        let s = sp(1, 1);
        let p1 = gen_poly(s, Generator::momentum(1));
        let xi1 = gen_poly(s, Generator::fibre(1));
        assert_eq!(&p1 * &xi1, &xi1 * &p1);
    }

    #[test]
    fn mul_rejects_space_mismatch() {
        let a = SuperPoly::one(sp(1, 1));
        let b = SuperPoly::one(sp(1, 2));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn derivative_even_power() {
        let s = sp(1, 0);
        let x1 = gen_poly(s, Generator::base(1));
        let sq = &x1 * &x1;
        assert_eq!(sq.partial_derivative(Generator::base(1)), x1.scale_int(2));
    }

    #[test]
    fn derivative_leading_odd_factor() {
        let s = sp(0, 2);
        let xi1 = gen_poly(s, Generator::fibre(1));
        let xi2 = gen_poly(s, Generator::fibre(2));
        let m = &xi1 * &xi2;
        assert_eq!(m.partial_derivative(Generator::fibre(1)), xi2);
    }

    #[test]
    fn derivative_trailing_odd_factor_gets_left_sign() {
        // d(xi1*xi2)/d xi2 = -xi1, fixed by the left-derivative convention.
        let s = sp(0, 2);
        let xi1 = gen_poly(s, Generator::fibre(1));
        let xi2 = gen_poly(s, Generator::fibre(2));
        let m = &xi1 * &xi2;
        assert_eq!(m.partial_derivative(Generator::fibre(2)), xi1.negate());
    }

    #[test]
    fn odd_derivatives_anticommute() {
        let s = sp(1, 2);
        let terms = vec![
            (
                vec![Generator::base(1), Generator::fibre(1), Generator::fibre(2)],
                coeff_int(3),
            ),
            (vec![Generator::fibre(2), Generator::cofibre(1)], coeff_int(5)),
        ];
        let f = SuperPoly::from_factors(s, terms).unwrap();
        let a = Generator::fibre(1);
        let b = Generator::fibre(2);
        let ab = f.partial_derivative(a).partial_derivative(b);
        let ba = f.partial_derivative(b).partial_derivative(a);
        assert_eq!(ab, ba.negate());
    }

    #[test]
    fn projection_examples() {
        let s = sp(1, 2);
        let xi1p1 = SuperPoly::from_factors(
            s,
            vec![(
                vec![Generator::fibre(1), Generator::momentum(1)],
                coeff_int(1),
            )],
        )
        .unwrap();
        let th1th2 = SuperPoly::from_factors(
            s,
            vec![(
                vec![Generator::cofibre(1), Generator::cofibre(2)],
                coeff_int(1),
            )],
        )
        .unwrap();
        let f = &xi1p1 + &th1th2;
        assert_eq!(f.project_bidegree(Bidegree::new(1, 2)), xi1p1);
        assert_eq!(f.project_bidegree(Bidegree::new(2, 0)), th1th2);
        let x1 = gen_poly(s, Generator::base(1));
        assert_eq!(x1.project_bidegree(Bidegree::new(0, 0)), x1);
        let mut sum = SuperPoly::zero(s);
        for (_, part) in f.components() {
            sum = &sum + &part;
        }
        assert_eq!(sum, f);
    }

    #[test]
    fn bidegree_adds_under_mul() {
        let s = sp(2, 2);
        let f = SuperPoly::from_factors(
            s,
            vec![(
                vec![Generator::fibre(1), Generator::momentum(2)],
                coeff_int(2),
            )],
        )
        .unwrap();
        let g = SuperPoly::from_factors(
            s,
            vec![(vec![Generator::cofibre(2)], coeff_int(1))],
        )
        .unwrap();
        let fg = &f * &g;
        assert_eq!(
            fg.bidegree().unwrap(),
            Bidegree::new(1 + 1, 2) // (1,1)+(0,1)+(1,0)
        );
    }

    #[test]
    fn parity_equals_weight_mod_two() {
        let s = sp(2, 2);
        let f = SuperPoly::from_factors(
            s,
            vec![
                (vec![Generator::fibre(1)], coeff_int(1)),
                (
                    vec![Generator::base(2), Generator::cofibre(2)],
                    coeff_int(4),
                ),
            ],
        )
        .unwrap();
        for (m, _) in f.terms() {
            assert_eq!(m.is_odd(), m.total_weight() % 2 == 1);
        }
        assert_eq!(f.parity(), Some(true));
    }

    #[test]
    fn normalize_is_idempotent() {
        let s = sp(1, 2);
        let factors = [
            Generator::cofibre(2),
            Generator::base(1),
            Generator::fibre(1),
        ];
        // th2 before xi1 costs one transposition.
        let (m, sign) = normalize_monomial(s, &factors).unwrap();
        assert_eq!(sign, -1);
        let (m2, sign2) = Monomial::normalize(&m.factor_list());
        assert_eq!(m, m2);
        assert_eq!(sign2, 1);
        let _ = Family::Base;
    }
}
