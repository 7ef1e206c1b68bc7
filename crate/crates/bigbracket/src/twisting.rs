//! Twisting by 2-forms and bivectors.
//!
//! A twist is the pullback along the time-1 flow of the Hamiltonian vector
//! field of a bidegree-(0,2) or (2,0) element. Applying it to a cubic
//! structure gives new components in closed form:
//!
//! ```text
//! by a form w:              by a bivector v:
//!   mu'    = mu + {w,gamma} + /\^2 w~ psi      mu'    = mu + v~ phi
//!   gamma' = gamma + w~ psi                    gamma' = gamma + {v,mu} + /\^2 v~ phi
//!   phi'   = phi - d_mu w - 1/2[w,w]_gamma     phi'   = phi
//!            + /\^3 w~ psi
//!   psi'   = psi                               psi'   = psi - d_gamma v - 1/2[v,v]_mu
//!                                                       + /\^3 v~ phi
//! ```
//!
//! The contraction powers `/\^k` are defined as `X_w^k / k!`; the equality of
//! the closed formulas with the exponential series is the principal
//! cross-check of the kernel and is enforced test-side on random data.

use crate::error::{Error, Result};
use crate::gauge::tilde_of;
use crate::poly::{coeff_ratio, SuperPoly};
use crate::space::{Bidegree, Family, Generator, GeneratorSpace};
use crate::structures::{koszul_bracket, koszul_bracket_dual, StructureTheta};
use crate::symplectic::{exp_flow, poisson_bracket};
use std::collections::BTreeMap;

/// Which kind of quadratic element drives the twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistKind {
    ByForm,
    ByBivector,
}

impl TwistKind {
    pub fn generator_degree(self) -> Bidegree {
        match self {
            TwistKind::ByForm => Bidegree::new(0, 2),
            TwistKind::ByBivector => Bidegree::new(2, 0),
        }
    }

    pub fn carrier_degree(self) -> Bidegree {
        match self {
            TwistKind::ByForm => Bidegree::new(3, 0),
            TwistKind::ByBivector => Bidegree::new(0, 3),
        }
    }
}

/// Twist data: a bihomogeneous 2-form (bidegree (0,2)) or bivector (2,0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistInput {
    kind: TwistKind,
    generator: SuperPoly,
}

impl TwistInput {
    pub fn new(kind: TwistKind, generator: SuperPoly) -> Result<Self> {
        if !generator.is_bihomogeneous_of(kind.generator_degree()) {
            return Err(Error::Degree(format!(
                "twist generator must be bihomogeneous of bidegree {}",
                kind.generator_degree()
            )));
        }
        Ok(TwistInput { kind, generator })
    }

    pub fn by_form(omega: SuperPoly) -> Result<Self> {
        TwistInput::new(TwistKind::ByForm, omega)
    }

    pub fn by_bivector(pi: SuperPoly) -> Result<Self> {
        TwistInput::new(TwistKind::ByBivector, pi)
    }

    pub fn kind(&self) -> TwistKind {
        self.kind
    }

    pub fn generator(&self) -> &SuperPoly {
        &self.generator
    }

    pub fn space(&self) -> GeneratorSpace {
        self.generator.space()
    }

    pub fn negate(&self) -> TwistInput {
        TwistInput {
            kind: self.kind,
            generator: self.generator.negate(),
        }
    }
}

fn pb(a: &SuperPoly, b: &SuperPoly) -> Result<SuperPoly> {
    poisson_bracket(a, b)
}

/// Twist a structure by the exponential flow and re-split by bidegree.
pub fn twist(t: &StructureTheta, w: &TwistInput) -> Result<StructureTheta> {
    if t.space() != w.space() {
        return Err(Error::SpaceMismatch);
    }
    let image = exp_flow(w.generator(), &t.total())?;
    StructureTheta::decompose_cubic(&image)
}

/// The `k`-fold contraction `/\^k (tilde map)` applied to the cubic carrier:
/// `X_w^k (carrier) / k!`.
pub fn contraction_powers(
    carrier: &SuperPoly,
    w: &TwistInput,
    k: u32,
) -> Result<SuperPoly> {
    if carrier.space() != w.space() {
        return Err(Error::SpaceMismatch);
    }
    if !(1..=3).contains(&k) {
        return Err(Error::Precondition("contraction power must be 1, 2 or 3".into()));
    }
    if !carrier.is_bihomogeneous_of(w.kind().carrier_degree()) {
        return Err(Error::Degree(format!(
            "carrier must be bihomogeneous of bidegree {}",
            w.kind().carrier_degree()
        )));
    }
    let mut out = carrier.clone();
    for i in 1..=k {
        out = pb(w.generator(), &out)?.scale(&coeff_ratio(1, i64::from(i)));
    }
    Ok(out)
}

/// Twisted components through the closed per-component formulas, built from
/// named operations (differentials, derived brackets, contraction powers)
/// rather than the exponential series. Must agree with [`twist`] exactly.
pub fn closed_form_twist(t: &StructureTheta, w: &TwistInput) -> Result<StructureTheta> {
    if t.space() != w.space() {
        return Err(Error::SpaceMismatch);
    }
    let g = w.generator();
    let cp = |carrier: &SuperPoly, k: u32| -> Result<SuperPoly> {
        if carrier.is_zero() {
            Ok(SuperPoly::zero(t.space()))
        } else {
            contraction_powers(carrier, w, k)
        }
    };
    match w.kind() {
        TwistKind::ByForm => {
            let mu = &(t.mu() + &pb(g, t.gamma())?) + &cp(t.psi(), 2)?;
            let gamma = t.gamma() + &cp(t.psi(), 1)?;
            let d_mu_w = pb(t.mu(), g)?;
            let half_sq = pb(&pb(g, t.gamma())?, g)?.scale(&coeff_ratio(1, 2));
            let phi = &(&(t.phi() - &d_mu_w) - &half_sq) + &cp(t.psi(), 3)?;
            let psi = t.psi().clone();
            StructureTheta::new(mu, gamma, phi, psi)
        }
        TwistKind::ByBivector => {
            let mu = t.mu() + &cp(t.phi(), 1)?;
            let gamma = &(t.gamma() + &pb(g, t.mu())?) + &cp(t.phi(), 2)?;
            let phi = t.phi().clone();
            let d_gamma_v = pb(t.gamma(), g)?;
            let half_sq = pb(&pb(g, t.mu())?, g)?.scale(&coeff_ratio(1, 2));
            let psi = &(&(t.psi() - &d_gamma_v) - &half_sq) + &cp(t.phi(), 3)?;
            StructureTheta::new(mu, gamma, phi, psi)
        }
    }
}

/// Left-minus-right side of the applicable twisted Maurer-Cartan equation:
///
/// - by a bivector `v` (requires `psi = 0`):
///   `d_gamma v + 1/2 [v,v]_mu - /\^3 v~ phi`;
/// - by a form `w` (requires `phi = 0`):
///   `d_mu w + 1/2 [w,w]_gamma - /\^3 w~ psi`.
///
/// Equal to minus the obstruction component (`psi` resp. `phi`) of
/// [`closed_form_twist`].
pub fn mc_residual(w: &TwistInput, t: &StructureTheta) -> Result<SuperPoly> {
    if t.space() != w.space() {
        return Err(Error::SpaceMismatch);
    }
    let g = w.generator();
    let cp3 = |carrier: &SuperPoly| -> Result<SuperPoly> {
        if carrier.is_zero() {
            Ok(SuperPoly::zero(t.space()))
        } else {
            contraction_powers(carrier, w, 3)
        }
    };
    match w.kind() {
        TwistKind::ByBivector => {
            if !t.psi().is_zero() {
                return Err(Error::Precondition(
                    "bivector Maurer-Cartan residual requires psi = 0".into(),
                ));
            }
            let d = pb(t.gamma(), g)?;
            let half = pb(&pb(g, t.mu())?, g)?.scale(&coeff_ratio(-1, 2));
            Ok(&(&d + &half) - &cp3(t.phi())?)
        }
        TwistKind::ByForm => {
            if !t.phi().is_zero() {
                return Err(Error::Precondition(
                    "form Maurer-Cartan residual requires phi = 0".into(),
                ));
            }
            let d = pb(t.mu(), g)?;
            let half = pb(&pb(g, t.gamma())?, g)?.scale(&coeff_ratio(-1, 2));
            Ok(&(&d + &half) - &cp3(t.psi())?)
        }
    }
}

/// The coordinate images of the time-1 flow, assembled from the tilde matrix
/// of the twist data rather than from bracket iteration:
///
/// ```text
/// by a form (matrix w_ab):        th_a -> th_a - w_ab xi_b
///                                 p_i  -> p_i - 1/2 (d w_ab / d x_i) xi_a xi_b
/// by a bivector (matrix v^ab):    xi_a -> xi_a - v^ab th_b
///                                 p_i  -> p_i - 1/2 (d v^ab / d x_i) th_a th_b
/// ```
///
/// Used as an independent oracle for [`exp_flow`][crate::symplectic::exp_flow].
pub fn coordinate_flow_table(
    w: &TwistInput,
) -> Result<BTreeMap<Generator, SuperPoly>> {
    let space = w.space();
    let tilde = tilde_of(w)?;
    let rank = space.fibre_rank;
    let mut table = BTreeMap::new();
    for g in space.all_gens() {
        table.insert(g, SuperPoly::generator(space, g)?);
    }
    let (moved_family, partner_family) = match w.kind() {
        TwistKind::ByForm => (Family::Cofibre, Family::Fibre),
        TwistKind::ByBivector => (Family::Fibre, Family::Cofibre),
    };
    for a in 1..=rank {
        let mut image = SuperPoly::generator(space, Generator::new(moved_family, a))?;
        for b in 1..=rank {
            let partner = SuperPoly::generator(space, Generator::new(partner_family, b))?;
            image = &image - &(&tilde.matrix.entry(a, b).clone() * &partner);
        }
        table.insert(Generator::new(moved_family, a), image);
    }
    for i in 1..=space.base_dim {
        let mut image = SuperPoly::generator(space, Generator::momentum(i))?;
        for a in 1..=rank {
            for b in 1..=rank {
                let da = SuperPoly::generator(space, Generator::new(partner_family, a))?;
                let db = SuperPoly::generator(space, Generator::new(partner_family, b))?;
                let coeff = tilde
                    .matrix
                    .entry(a, b)
                    .partial_derivative(Generator::base(i))
                    .scale(&coeff_ratio(1, 2));
                image = &image - &(&(&coeff * &da) * &db);
            }
        }
        table.insert(Generator::momentum(i), image);
    }
    Ok(table)
}

/// Evaluators for the twisted differentials and brackets. Every call computes
/// the answer twice — once through the displayed formulas in terms of the
/// untwisted data, once through derived brackets of the twisted structure —
/// and fails with [`Error::CrossCheck`] if the routes disagree.
pub struct TwistedCalculus {
    original: StructureTheta,
    twisted: StructureTheta,
    w: TwistInput,
}

impl TwistedCalculus {
    pub fn new(t: &StructureTheta, w: &TwistInput) -> Result<Self> {
        match w.kind() {
            TwistKind::ByBivector if !t.psi().is_zero() => {
                return Err(Error::Precondition(
                    "twisted calculus by a bivector requires psi = 0".into(),
                ));
            }
            TwistKind::ByForm if !t.phi().is_zero() => {
                return Err(Error::Precondition(
                    "twisted calculus by a form requires phi = 0".into(),
                ));
            }
            _ => {}
        }
        Ok(TwistedCalculus {
            original: t.clone(),
            twisted: twist(t, w)?,
            w: w.clone(),
        })
    }

    pub fn twisted(&self) -> &StructureTheta {
        &self.twisted
    }

    fn cp(&self, k: u32) -> Result<SuperPoly> {
        let carrier = match self.w.kind() {
            TwistKind::ByBivector => self.original.phi(),
            TwistKind::ByForm => self.original.psi(),
        };
        if carrier.is_zero() {
            Ok(SuperPoly::zero(self.original.space()))
        } else {
            contraction_powers(carrier, &self.w, k)
        }
    }

    fn crosscheck(
        &self,
        name: &str,
        a: SuperPoly,
        b: SuperPoly,
    ) -> Result<SuperPoly> {
        if a == b {
            Ok(a)
        } else {
            Err(Error::CrossCheck(format!(
                "twisted {name}: formula route and flow route disagree"
            )))
        }
    }

    /// The twisted quasi-differential `d_{mu_w}`.
    pub fn d_mu(&self, f: &SuperPoly) -> Result<SuperPoly> {
        let t = &self.original;
        let formula = match self.w.kind() {
            TwistKind::ByBivector => {
                let iota = pb(&pb(self.w.generator(), t.phi())?, f)?;
                &pb(t.mu(), f)? + &iota
            }
            TwistKind::ByForm => {
                let bracket_term = pb(&pb(self.w.generator(), t.gamma())?, f)?;
                let iota = pb(&self.cp(2)?, f)?;
                &(&pb(t.mu(), f)? + &bracket_term) + &iota
            }
        };
        let flow = pb(self.twisted.mu(), f)?;
        self.crosscheck("d_mu", formula, flow)
    }

    /// The twisted differential `d_{gamma_w}`.
    pub fn d_gamma(&self, f: &SuperPoly) -> Result<SuperPoly> {
        let t = &self.original;
        let formula = match self.w.kind() {
            TwistKind::ByBivector => {
                let bracket_term = pb(&pb(self.w.generator(), t.mu())?, f)?;
                let iota = pb(&self.cp(2)?, f)?;
                &(&pb(t.gamma(), f)? + &bracket_term) + &iota
            }
            TwistKind::ByForm => {
                let iota = pb(&self.cp(1)?, f)?;
                &pb(t.gamma(), f)? + &iota
            }
        };
        let flow = pb(self.twisted.gamma(), f)?;
        self.crosscheck("d_gamma", formula, flow)
    }

    /// The twisted bracket of two multivectors (pullbacks generated by x, th).
    pub fn bracket_mu(&self, x: &SuperPoly, y: &SuperPoly) -> Result<SuperPoly> {
        let t = &self.original;
        let base = pb(&pb(x, t.mu())?, y)?;
        let formula = match self.w.kind() {
            TwistKind::ByBivector => {
                let pairing = pb(&pb(x, &pb(self.w.generator(), t.phi())?)?, y)?;
                &base + &pairing
            }
            TwistKind::ByForm => {
                let koszul = koszul_bracket_dual(x, y, self.w.generator(), t.gamma())?;
                let pairing = pb(&pb(x, &self.cp(2)?)?, y)?;
                &(&base + &koszul) + &pairing
            }
        };
        let flow = pb(&pb(x, self.twisted.mu())?, y)?;
        self.crosscheck("bracket_mu", formula, flow)
    }

    /// The twisted bracket of two forms (pullbacks generated by x, xi).
    pub fn bracket_gamma(&self, alpha: &SuperPoly, beta: &SuperPoly) -> Result<SuperPoly> {
        let t = &self.original;
        let base = pb(&pb(alpha, t.gamma())?, beta)?;
        let formula = match self.w.kind() {
            TwistKind::ByBivector => {
                let koszul = koszul_bracket(alpha, beta, self.w.generator(), t.mu())?;
                let pairing = pb(&pb(alpha, &self.cp(2)?)?, beta)?;
                &(&base + &koszul) + &pairing
            }
            TwistKind::ByForm => {
                let pairing = pb(&pb(alpha, &self.cp(1)?)?, beta)?;
                &base + &pairing
            }
        };
        let flow = pb(&pb(alpha, self.twisted.gamma())?, beta)?;
        self.crosscheck("bracket_gamma", formula, flow)
    }
}

/// Residual of the twisted Jacobi identity of a bivector against a 3-form
/// background, on a triple of functions:
///
/// ```text
/// {{f,g},h} + {{g,h},f} + {{h,f},g} - phi(X_f, X_g, X_h)
/// ```
///
/// where `{f,g} = [[f,v],g]` (both brackets derived from `mu`) and
/// `X_f = [f,v]`. Zero on all coordinate triples when the bivector satisfies
/// its Maurer-Cartan equation against `phi`.
pub fn twisted_jacobi_residual(
    mu: &SuperPoly,
    v: &SuperPoly,
    phi: &SuperPoly,
    f: &SuperPoly,
    g: &SuperPoly,
    h: &SuperPoly,
) -> Result<SuperPoly> {
    let hamiltonian = |a: &SuperPoly| -> Result<SuperPoly> {
        // X_a = {{mu, a}, v}, normalized so that X_{x_i} is the contraction
        // of the bivector with the i-th coordinate differential.
        pb(&pb(mu, a)?, v)
    };
    let fn_bracket = |a: &SuperPoly, b: &SuperPoly| -> Result<SuperPoly> {
        // {a,b} = [[a,v], b]_mu
        pb(&pb(&hamiltonian(a)?, mu)?, b)
    };
    let lhs = &(&fn_bracket(&fn_bracket(f, g)?, h)? + &fn_bracket(&fn_bracket(g, h)?, f)?)
        + &fn_bracket(&fn_bracket(h, f)?, g)?;
    let xf = hamiltonian(f)?;
    let xg = hamiltonian(g)?;
    let xh = hamiltonian(h)?;
    let rhs = pb(&xh, &pb(&xg, &pb(&xf, phi)?)?)?;
    Ok(&lhs - &rhs)
}
