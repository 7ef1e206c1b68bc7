//! The quadratic symmetry algebra: tilde matrices of 2-forms and bivectors,
//! transition matrices, tau actions, the infinitesimal action, and the two
//! group-level checks (factorization and gauge equivalence of twisted
//! structures).
//!
//! Matrix conventions. `tilde_of` extracts the raw antisymmetric coefficient
//! array of `w = 1/2 w_ab xi_a xi_b` (entry `(a,b)` is the coefficient of the
//! canonical monomial `xi_a xi_b` for `a < b`), and dually for bivectors.
//! With these raw arrays the composite operator of the bracket identity
//! `{v, w} = v~ w~` has array `V W` (ordinary matrix product), realized as
//! the quadratic Hamiltonian `h_M = -M_ab xi_a th_b`, and
//!
//! ```text
//! transition:       T(v, w)   = 1 + V W
//! tau actions:      tau_v w   = W (1 + V W)^{-1}
//!                   tau_w v   = V (1 + W V)^{-1}
//! infinitesimal:    delta_w v = - V W V
//! ```
//!
//! A matrix over the coefficient ring is invertible exactly when its
//! determinant is a nonzero rational constant; pointwise evaluation at a
//! sample point is available for exploration but never feeds a verdict.

use crate::error::{Error, Result};
use crate::poly::{Coeff, SuperPoly};
use crate::space::{Bidegree, Family, Generator, GeneratorSpace};
use crate::structures::{CheckReport, StructureTheta};
use crate::symplectic::{exp_flow, poisson_bracket};
use crate::twisting::{twist, TwistInput, TwistKind};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Square matrix of coefficient-ring elements (bidegree-(0,0) polynomials).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    space: GeneratorSpace,
    size: usize,
    entries: Vec<Vec<SuperPoly>>,
}

impl PolyMatrix {
    pub fn zero(space: GeneratorSpace, size: usize) -> Self {
        PolyMatrix {
            space,
            size,
            entries: vec![vec![SuperPoly::zero(space); size]; size],
        }
    }

    pub fn identity(space: GeneratorSpace, size: usize) -> Self {
        let mut m = PolyMatrix::zero(space, size);
        for i in 0..size {
            m.entries[i][i] = SuperPoly::one(space);
        }
        m
    }

    pub fn from_entries(space: GeneratorSpace, entries: Vec<Vec<SuperPoly>>) -> Result<Self> {
        let size = entries.len();
        for row in &entries {
            if row.len() != size {
                return Err(Error::Precondition("matrix must be square".into()));
            }
            for e in row {
                if e.space() != space {
                    return Err(Error::SpaceMismatch);
                }
                if !e.is_bihomogeneous_of(Bidegree::new(0, 0)) {
                    return Err(Error::Degree(
                        "matrix entries must be coefficient-ring elements".into(),
                    ));
                }
            }
        }
        Ok(PolyMatrix {
            space,
            size,
            entries,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn space(&self) -> GeneratorSpace {
        self.space
    }

    /// 1-based entry access.
    pub fn entry(&self, row: usize, col: usize) -> &SuperPoly {
        &self.entries[row - 1][col - 1]
    }

    fn set(&mut self, row: usize, col: usize, value: SuperPoly) {
        self.entries[row - 1][col - 1] = value;
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        let mut out = PolyMatrix::zero(self.space, self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.entries[i][j] = &self.entries[i][j] + &other.entries[i][j];
            }
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        let mut out = PolyMatrix::zero(self.space, self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                let mut acc = SuperPoly::zero(self.space);
                for k in 0..self.size {
                    acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn negate(&self) -> PolyMatrix {
        let mut out = self.clone();
        for row in &mut out.entries {
            for e in row {
                *e = e.negate();
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> PolyMatrix {
        let mut out = self.clone();
        for row in &mut out.entries {
            for e in row {
                *e = e.scale(c);
            }
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.space, self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.entries[j][i] = self.entries[i][j].clone();
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        for i in 0..self.size {
            for j in 0..self.size {
                if self.entries[i][j] != self.entries[j][i].negate() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().flatten().all(|e| {
            e.is_zero() || (e.num_terms() == 1 && e.terms().all(|(m, _)| m.is_one()))
        })
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.space, self.size - 1);
        let mut r = 0;
        for i in 0..self.size {
            if i == skip_row {
                continue;
            }
            let mut c = 0;
            for j in 0..self.size {
                if j == skip_col {
                    continue;
                }
                out.entries[r][c] = self.entries[i][j].clone();
                c += 1;
            }
            r += 1;
        }
        out
    }

    /// Exact determinant by Laplace expansion along the first row.
    pub fn det(&self) -> SuperPoly {
        if self.size == 0 {
            return SuperPoly::one(self.space);
        }
        if self.size == 1 {
            return self.entries[0][0].clone();
        }
        let mut acc = SuperPoly::zero(self.space);
        for j in 0..self.size {
            if self.entries[0][j].is_zero() {
                continue;
            }
            let cofactor = &self.entries[0][j] * &self.minor(0, j).det();
            acc = if j % 2 == 0 {
                &acc + &cofactor
            } else {
                &acc - &cofactor
            };
        }
        acc
    }

    pub fn adjugate(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.space, self.size);
        if self.size == 0 {
            return out;
        }
        if self.size == 1 {
            out.entries[0][0] = SuperPoly::one(self.space);
            return out;
        }
        for i in 0..self.size {
            for j in 0..self.size {
                let c = self.minor(i, j).det();
                out.entries[j][i] = if (i + j) % 2 == 0 { c } else { c.negate() };
            }
        }
        out
    }

    /// Constant value of the determinant, when it is a nonzero rational.
    pub fn unit_det(&self) -> Option<Coeff> {
        let d = self.det();
        if d.is_zero() || !d.is_bihomogeneous_of(Bidegree::new(0, 0)) {
            return None;
        }
        let mut terms = d.terms();
        let (m, c) = terms.next()?;
        if !m.is_one() || terms.next().is_some() {
            return None;
        }
        Some(c.clone())
    }

    /// Exact inverse over the ring: defined iff the determinant is a nonzero
    /// constant.
    pub fn try_inverse(&self) -> Option<PolyMatrix> {
        let d = self.unit_det()?;
        Some(self.adjugate().scale(&(Coeff::one() / d)))
    }

    /// Evaluate the determinant at a rational sample point for the base
    /// coordinates. Exploration aid only.
    pub fn det_at(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.space.base_dim {
            return Err(Error::Precondition(format!(
                "sample point needs {} coordinates",
                self.space.base_dim
            )));
        }
        evaluate_coefficient(&self.det(), point)
    }
}

/// Evaluate a coefficient-ring element at a rational point.
pub fn evaluate_coefficient(p: &SuperPoly, point: &[Coeff]) -> Result<Coeff> {
    if !p.is_bihomogeneous_of(Bidegree::new(0, 0)) {
        return Err(Error::Degree(
            "evaluation requires a coefficient-ring element".into(),
        ));
    }
    let mut total = Coeff::zero();
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for &(g, e) in m.even_exponents() {
            let x = point
                .get(g.index - 1)
                .ok_or_else(|| Error::Precondition("sample point too short".into()))?;
            for _ in 0..e {
                v *= x;
            }
        }
        total += v;
    }
    Ok(total)
}

/// Direction of the map a tilde matrix represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    /// A 2-form, mapping sections to forms.
    Form,
    /// A bivector, mapping forms to sections.
    Bivector,
}

/// The antisymmetric coefficient matrix of a 2-form or bivector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeMatrix {
    pub matrix: PolyMatrix,
    pub variance: Variance,
}

/// Extract the tilde matrix under the normalization `w = 1/2 w_ab xi_a xi_b`
/// (so the entry `(a,b)`, `a < b`, is the coefficient of the canonical
/// monomial `xi_a xi_b`), and dually for bivectors.
pub fn tilde_of(w: &TwistInput) -> Result<TildeMatrix> {
    let space = w.space();
    let rank = space.fibre_rank;
    let mut matrix = PolyMatrix::zero(space, rank);
    for (m, c) in w.generator().terms() {
        let odds = m.odd_factors();
        debug_assert_eq!(odds.len(), 2, "quadratic twist data");
        let (a, b) = (odds[0].index, odds[1].index);
        let mut xpart = SuperPoly::scalar(space, c.clone());
        for &(g, e) in m.even_exponents() {
            let gp = SuperPoly::generator(space, g)?;
            xpart = &xpart * &gp.pow(e);
        }
        matrix.set(a, b, &matrix.entry(a, b).clone() + &xpart);
        matrix.set(b, a, &matrix.entry(b, a).clone() - &xpart);
    }
    let variance = match w.kind() {
        TwistKind::ByForm => Variance::Form,
        TwistKind::ByBivector => Variance::Bivector,
    };
    Ok(TildeMatrix { matrix, variance })
}

/// Rebuild the quadratic element from its tilde matrix.
pub fn reassemble(t: &TildeMatrix) -> Result<TwistInput> {
    if !t.matrix.is_antisymmetric() {
        return Err(Error::Precondition(
            "tilde matrix must be antisymmetric".into(),
        ));
    }
    let space = t.matrix.space();
    let family = match t.variance {
        Variance::Form => Family::Fibre,
        Variance::Bivector => Family::Cofibre,
    };
    let mut out = SuperPoly::zero(space);
    for a in 1..=t.matrix.size() {
        for b in (a + 1)..=t.matrix.size() {
            let ga = SuperPoly::generator(space, Generator::new(family, a))?;
            let gb = SuperPoly::generator(space, Generator::new(family, b))?;
            out = &out + &(&(t.matrix.entry(a, b) * &ga) * &gb);
        }
    }
    match t.variance {
        Variance::Form => TwistInput::by_form(out),
        Variance::Bivector => TwistInput::by_bivector(out),
    }
}

/// The quadratic Hamiltonian of an endomorphism matrix: `h_M = -M_ab xi_a
/// th_b`, normalized so that `{h_M, th_c} = M_cb th_b` (and `xi` transforms
/// by the negative transpose).
pub fn endo_hamiltonian(m: &PolyMatrix) -> Result<SuperPoly> {
    let space = m.space();
    if m.size() != space.fibre_rank {
        return Err(Error::Precondition(
            "endomorphism matrix must have size r".into(),
        ));
    }
    let mut out = SuperPoly::zero(space);
    for a in 1..=m.size() {
        for b in 1..=m.size() {
            let xi = SuperPoly::generator(space, Generator::fibre(a))?;
            let th = SuperPoly::generator(space, Generator::cofibre(b))?;
            out = &out - &(&(m.entry(a, b) * &xi) * &th);
        }
    }
    Ok(out)
}

/// A quadratic Hamiltonian split into its three bihomogeneous parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticHamiltonian {
    pub form_part: SuperPoly,
    pub endo_part: SuperPoly,
    pub bivector_part: SuperPoly,
}

impl QuadraticHamiltonian {
    pub fn new(
        form_part: SuperPoly,
        endo_part: SuperPoly,
        bivector_part: SuperPoly,
    ) -> Result<Self> {
        let space = form_part.space();
        if endo_part.space() != space || bivector_part.space() != space {
            return Err(Error::SpaceMismatch);
        }
        if !form_part.is_bihomogeneous_of(Bidegree::new(0, 2))
            || !endo_part.is_bihomogeneous_of(Bidegree::new(1, 1))
            || !bivector_part.is_bihomogeneous_of(Bidegree::new(2, 0))
        {
            return Err(Error::Degree(
                "quadratic hamiltonian parts must have bidegrees (0,2), (1,1), (2,0)".into(),
            ));
        }
        Ok(QuadraticHamiltonian {
            form_part,
            endo_part,
            bivector_part,
        })
    }

    /// Split a total-weight-2 element into its three parts.
    pub fn decompose(h: &SuperPoly) -> Result<Self> {
        if !h.is_weight_homogeneous_of(2) {
            return Err(Error::Degree(
                "quadratic hamiltonian requires total weight 2".into(),
            ));
        }
        QuadraticHamiltonian::new(
            h.project_bidegree(Bidegree::new(0, 2)),
            h.project_bidegree(Bidegree::new(1, 1)),
            h.project_bidegree(Bidegree::new(2, 0)),
        )
    }

    pub fn total(&self) -> SuperPoly {
        &(&self.form_part + &self.endo_part) + &self.bivector_part
    }
}

/// The transition matrix `T(v, w) = 1 + v~ w~` with its exact invertibility
/// status over the coefficient ring.
#[derive(Debug, Clone)]
pub struct Transition {
    pub matrix: PolyMatrix,
    pub det: SuperPoly,
    pub inverse: Option<PolyMatrix>,
}

impl Transition {
    pub fn invertible(&self) -> bool {
        self.inverse.is_some()
    }
}

fn expect_kinds(pi: &TwistInput, omega: &TwistInput) -> Result<GeneratorSpace> {
    if pi.space() != omega.space() {
        return Err(Error::SpaceMismatch);
    }
    if pi.kind() != TwistKind::ByBivector || omega.kind() != TwistKind::ByForm {
        return Err(Error::Precondition(
            "expected a bivector and a 2-form".into(),
        ));
    }
    Ok(pi.space())
}

/// Form `T = 1 + pi~ omega~` and decide ring-level invertibility.
pub fn transition(pi: &TwistInput, omega: &TwistInput) -> Result<Transition> {
    let space = expect_kinds(pi, omega)?;
    let p = tilde_of(pi)?.matrix;
    let w = tilde_of(omega)?.matrix;
    let matrix = PolyMatrix::identity(space, space.fibre_rank).add(&p.mul(&w));
    let det = matrix.det();
    let inverse = matrix.try_inverse();
    Ok(Transition {
        matrix,
        det,
        inverse,
    })
}

/// The two tau actions, defined when the transition is invertible:
/// `tau_pi omega` has raw matrix `W (1 + P W)^{-1}` and `tau_omega pi` has
/// raw matrix `P (1 + W P)^{-1}`. Antisymmetry of both results is asserted.
pub fn tau_actions(pi: &TwistInput, omega: &TwistInput) -> Result<(TwistInput, TwistInput)> {
    let space = expect_kinds(pi, omega)?;
    let p = tilde_of(pi)?.matrix;
    let w = tilde_of(omega)?.matrix;
    let id = PolyMatrix::identity(space, space.fibre_rank);
    let t1 = id.add(&p.mul(&w));
    let t2 = id.add(&w.mul(&p));
    let t1_inv = t1.try_inverse().ok_or(Error::NonInvertible)?;
    let t2_inv = t2.try_inverse().ok_or(Error::NonInvertible)?;
    let tau_pi_omega = w.mul(&t1_inv);
    let tau_omega_pi = p.mul(&t2_inv);
    for (name, m) in [("tau_pi_omega", &tau_pi_omega), ("tau_omega_pi", &tau_omega_pi)] {
        if !m.is_antisymmetric() {
            return Err(Error::CrossCheck(format!("{name} is not antisymmetric")));
        }
    }
    Ok((
        reassemble(&TildeMatrix {
            matrix: tau_pi_omega,
            variance: Variance::Form,
        })?,
        reassemble(&TildeMatrix {
            matrix: tau_omega_pi,
            variance: Variance::Bivector,
        })?,
    ))
}

/// The infinitesimal action of a 2-form on a bivector, raw matrix `-P W P`.
pub fn infinitesimal_action(pi: &TwistInput, omega: &TwistInput) -> Result<TwistInput> {
    expect_kinds(pi, omega)?;
    let p = tilde_of(pi)?.matrix;
    let w = tilde_of(omega)?.matrix;
    let m = p.mul(&w).mul(&p).negate();
    if !m.is_antisymmetric() {
        return Err(Error::CrossCheck("delta_omega pi is not antisymmetric".into()));
    }
    reassemble(&TildeMatrix {
        matrix: m,
        variance: Variance::Bivector,
    })
}

/// An algebra automorphism stored by its generator images.
#[derive(Debug, Clone)]
pub struct GaugeMap {
    space: GeneratorSpace,
    images: BTreeMap<Generator, SuperPoly>,
}

impl GaugeMap {
    pub fn identity(space: GeneratorSpace) -> Self {
        let images = space
            .all_gens()
            .map(|g| (g, SuperPoly::generator(space, g).unwrap()))
            .collect();
        GaugeMap { space, images }
    }

    /// The pullback of the time-1 flow of a quadratic twist generator.
    pub fn flow(w: &TwistInput) -> Result<Self> {
        let space = w.space();
        let mut images = BTreeMap::new();
        for g in space.all_gens() {
            images.insert(
                g,
                exp_flow(w.generator(), &SuperPoly::generator(space, g)?)?,
            );
        }
        Ok(GaugeMap { space, images })
    }

    /// The linear substitution of a constant invertible endomorphism matrix
    /// `A`: `th_a -> A_ab th_b`, `xi_a -> (A^-t)_ab xi_b`, base and momentum
    /// coordinates fixed. This preserves the pairing bracket.
    pub fn endomorphism(a: &PolyMatrix) -> Result<Self> {
        let space = a.space();
        if a.size() != space.fibre_rank {
            return Err(Error::Precondition(
                "endomorphism matrix must have size r".into(),
            ));
        }
        if !a.is_constant() {
            return Err(Error::Precondition(
                "endomorphism substitution requires constant coefficients".into(),
            ));
        }
        let a_inv = a.try_inverse().ok_or(Error::NonInvertible)?;
        let a_inv_t = a_inv.transpose();
        let mut images = BTreeMap::new();
        for g in space.base_gens().chain(space.momentum_gens()) {
            images.insert(g, SuperPoly::generator(space, g)?);
        }
        for idx in 1..=space.fibre_rank {
            let mut th_image = SuperPoly::zero(space);
            let mut xi_image = SuperPoly::zero(space);
            for b in 1..=space.fibre_rank {
                let th_b = SuperPoly::generator(space, Generator::cofibre(b))?;
                let xi_b = SuperPoly::generator(space, Generator::fibre(b))?;
                th_image = &th_image + &(a.entry(idx, b) * &th_b);
                xi_image = &xi_image + &(a_inv_t.entry(idx, b) * &xi_b);
            }
            images.insert(Generator::cofibre(idx), th_image);
            images.insert(Generator::fibre(idx), xi_image);
        }
        Ok(GaugeMap { space, images })
    }

    pub fn apply(&self, f: &SuperPoly) -> Result<SuperPoly> {
        if f.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        f.substitute(&|g| self.images[&g].clone())
    }

    /// Composition as operators: `(self . other)(f) = self(other(f))`.
    pub fn compose(&self, other: &GaugeMap) -> Result<GaugeMap> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut images = BTreeMap::new();
        for g in self.space.all_gens() {
            images.insert(g, self.apply(&other.images[&g])?);
        }
        Ok(GaugeMap {
            space: self.space,
            images,
        })
    }

    pub fn image(&self, g: Generator) -> &SuperPoly {
        &self.images[&g]
    }
}

fn constant_input(w: &TwistInput) -> Result<PolyMatrix> {
    let m = tilde_of(w)?.matrix;
    if !m.is_constant() {
        return Err(Error::Precondition(
            "this check requires constant coefficients".into(),
        ));
    }
    Ok(m)
}

/// Verify the group factorization `pi . omega = (tau_pi omega) T^{-1}(pi,
/// omega) (tau_omega pi)` by applying both sides to every generator.
///
/// Both sides are realized as compositions of flow pullbacks, with the middle
/// factor acting as the endomorphism substitution of `T^{-1}`. On pullbacks
/// the composition order reverses, so with `F*` denoting a flow pullback the
/// identity checked is
///
/// ```text
/// F*_omega . F*_pi  =  F*_{tau_omega pi} . Endo(T^{-1}) . F*_{tau_pi omega}
/// ```
///
/// Requires constant coefficients and an invertible transition.
pub fn factorization_check(pi: &TwistInput, omega: &TwistInput) -> Result<CheckReport> {
    let space = expect_kinds(pi, omega)?;
    constant_input(pi)?;
    constant_input(omega)?;
    let t = transition(pi, omega)?;
    let t_inv = t.inverse.clone().ok_or(Error::NonInvertible)?;
    let (tau_pi_omega, tau_omega_pi) = tau_actions(pi, omega)?;

    let lhs = GaugeMap::flow(omega)?.compose(&GaugeMap::flow(pi)?)?;
    let rhs = GaugeMap::flow(&tau_omega_pi)?
        .compose(&GaugeMap::endomorphism(&t_inv)?)?
        .compose(&GaugeMap::flow(&tau_pi_omega)?)?;

    let mut residuals = BTreeMap::new();
    for g in space.all_gens() {
        let diff = lhs.image(g) - rhs.image(g);
        if !diff.is_zero() {
            residuals
                .entry(diff.bidegree().unwrap_or(Bidegree::new(0, 0)))
                .or_insert(diff);
        }
    }
    let verdict = residuals.is_empty();
    Ok(CheckReport {
        verdict,
        residuals,
        classification: crate::structures::Classification::None,
    })
}

/// Verify gauge equivalence of twisted structures: with `mu` the standard
/// lift (base dimension equals fibre rank), constant `pi` and `omega`, and
/// any 3-form `phi`,
///
/// ```text
/// Theta_{phi - d omega, tau_{-omega} pi} = Phi* Theta_{phi, pi}
/// ```
///
/// where `Phi* = Endo(T^{-1}(-pi, omega)) . F*_{tau_{-pi} omega}`. Also
/// certifies the corollary: when `pi` solves its Maurer-Cartan equation
/// against `phi`, the transformed bivector solves it against `phi - d omega`.
pub fn gauge_equivalence_check(
    pi: &TwistInput,
    omega: &TwistInput,
    phi: &SuperPoly,
) -> Result<CheckReport> {
    let space = expect_kinds(pi, omega)?;
    if phi.space() != space {
        return Err(Error::SpaceMismatch);
    }
    if !phi.is_bihomogeneous_of(Bidegree::new(0, 3)) {
        return Err(Error::Degree("phi must have bidegree (0,3)".into()));
    }
    constant_input(pi)?;
    constant_input(omega)?;
    let mu = StructureTheta::derham_mu(space)?;
    let zero = SuperPoly::zero(space);
    let theta_phi = StructureTheta::new(mu.clone(), zero.clone(), phi.clone(), zero.clone())?;

    // tau_{-omega} pi and tau_{-pi} omega, both governed by T(-pi, omega).
    let t = transition(&pi.negate(), omega)?;
    let t_inv = t.inverse.clone().ok_or(Error::NonInvertible)?;
    let (_, tau_minus_omega_pi) = tau_actions(pi, &omega.negate())?;
    let (tau_minus_pi_omega, _) = tau_actions(&pi.negate(), omega)?;

    // Left side: twist mu + (phi - d_mu omega) by tau_{-omega} pi.
    let d_omega = poisson_bracket(&mu, omega.generator())?;
    let phi_shifted = phi - &d_omega;
    let theta_left_base =
        StructureTheta::new(mu.clone(), zero.clone(), phi_shifted.clone(), zero.clone())?;
    let left = twist(&theta_left_base, &tau_minus_omega_pi)?;

    // Right side: Phi* applied to the pi-twist of Theta_phi.
    let theta_pi = twist(&theta_phi, pi)?;
    let phi_star = GaugeMap::endomorphism(&t_inv)?
        .compose(&GaugeMap::flow(&tau_minus_pi_omega)?)?;
    let right = StructureTheta::decompose_cubic(&phi_star.apply(&theta_pi.total())?)?;

    let mut residuals = BTreeMap::new();
    let diff = &left.total() - &right.total();
    for (d, component) in diff.components() {
        if !component.is_zero() {
            residuals.insert(d, component);
        }
    }

    // Corollary: Maurer-Cartan is transported.
    let mc_before = crate::twisting::mc_residual(pi, &theta_phi)?;
    if mc_before.is_zero() {
        let mc_after = crate::twisting::mc_residual(&tau_minus_omega_pi, &theta_left_base)?;
        if !mc_after.is_zero() {
            residuals
                .entry(Bidegree::new(3, 0))
                .or_insert(mc_after);
        }
    }

    let verdict = residuals.is_empty();
    let classification = left.classify().classification;
    Ok(CheckReport {
        verdict,
        residuals,
        classification,
    })
}
