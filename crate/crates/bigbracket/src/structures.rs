//! Cubic structure Hamiltonians and their verification.
//!
//! A cubic element `Theta = mu + gamma + phi + psi` (bidegrees (1,2), (2,1),
//! (0,3), (3,0)) encodes brackets, differentials and background forms all at
//! once; the single master equation `{Theta, Theta} = 0` bundles the five
//! component equations
//!
//! ```text
//! 1/2{mu,mu} + {gamma,phi} = 0        (bidegree (1,3))
//! 1/2{gamma,gamma} + {mu,psi} = 0     (bidegree (3,1))
//! {mu,gamma} + {phi,psi} = 0          (bidegree (2,2))
//! {mu,phi} = 0                        (bidegree (0,4))
//! {gamma,psi} = 0                     (bidegree (4,0))
//! ```
//!
//! Everything downstream (derived brackets, differentials, the homotopy
//! bracket tower, the relation checks) is expressed through the canonical
//! Poisson bracket, so all sign conventions are inherited from one place.

use crate::error::{Error, Result};
use crate::poly::{coeff_ratio, SuperPoly};
use crate::space::{Bidegree, Generator, GeneratorSpace};
use crate::symplectic::poisson_bracket;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub const MU_DEGREE: Bidegree = Bidegree::new(1, 2);
pub const GAMMA_DEGREE: Bidegree = Bidegree::new(2, 1);
pub const PHI_DEGREE: Bidegree = Bidegree::new(0, 3);
pub const PSI_DEGREE: Bidegree = Bidegree::new(3, 0);

/// A cubic Hamiltonian split into its four bihomogeneous components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTheta {
    space: GeneratorSpace,
    mu: SuperPoly,
    gamma: SuperPoly,
    phi: SuperPoly,
    psi: SuperPoly,
}

/// Names for the structures the classifier can recognize.
///
/// When the master equation holds the finest matching class is reported, with
/// the convention that a lone self-commuting `mu` (or `gamma`) counts as a
/// bialgebroid with the zero dual structure. The two single-algebroid labels
/// are reserved for inputs whose master equation fails although one side
/// survives on its own: `mu` self-commuting with `gamma = psi = 0`, or the
/// mirror case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    None,
    LieAlgebroidA,
    LieAlgebroidAstar,
    LieBialgebroid,
    QuasiLieBialgebroidA,
    QuasiLieBialgebroidAstar,
    ProtoBialgebroid,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::None => "none",
            Classification::LieAlgebroidA => "lie_algebroid_A",
            Classification::LieAlgebroidAstar => "lie_algebroid_Astar",
            Classification::LieBialgebroid => "lie_bialgebroid",
            Classification::QuasiLieBialgebroidA => "quasi_lie_bialgebroid_A",
            Classification::QuasiLieBialgebroidAstar => "quasi_lie_bialgebroid_Astar",
            Classification::ProtoBialgebroid => "proto_bialgebroid",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Classification {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(Classification::None),
            "lie_algebroid_A" => Ok(Classification::LieAlgebroidA),
            "lie_algebroid_Astar" => Ok(Classification::LieAlgebroidAstar),
            "lie_bialgebroid" => Ok(Classification::LieBialgebroid),
            "quasi_lie_bialgebroid_A" => Ok(Classification::QuasiLieBialgebroidA),
            "quasi_lie_bialgebroid_Astar" => Ok(Classification::QuasiLieBialgebroidAstar),
            "proto_bialgebroid" => Ok(Classification::ProtoBialgebroid),
            other => Err(format!("unknown classification `{other}`")),
        }
    }
}

/// Structured outcome of a verification: residual polynomials keyed by their
/// actual bidegree (only nonzero residuals are stored), so the verdict is
/// true exactly when the map is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: bool,
    pub residuals: BTreeMap<Bidegree, SuperPoly>,
    pub classification: Classification,
}

impl CheckReport {
    fn from_residuals(
        residuals: BTreeMap<Bidegree, SuperPoly>,
        classification: Classification,
    ) -> Self {
        CheckReport {
            verdict: residuals.is_empty(),
            residuals,
            classification,
        }
    }
}

fn pb(a: &SuperPoly, b: &SuperPoly) -> SuperPoly {
    poisson_bracket(a, b).expect("space checked at construction")
}

fn check_component(p: &SuperPoly, d: Bidegree, name: &str) -> Result<()> {
    if p.is_bihomogeneous_of(d) {
        Ok(())
    } else {
        Err(Error::Degree(format!(
            "component {name} must be bihomogeneous of bidegree {d}"
        )))
    }
}

impl StructureTheta {
    pub fn new(
        mu: SuperPoly,
        gamma: SuperPoly,
        phi: SuperPoly,
        psi: SuperPoly,
    ) -> Result<Self> {
        let space = mu.space();
        if gamma.space() != space || phi.space() != space || psi.space() != space {
            return Err(Error::SpaceMismatch);
        }
        check_component(&mu, MU_DEGREE, "mu")?;
        check_component(&gamma, GAMMA_DEGREE, "gamma")?;
        check_component(&phi, PHI_DEGREE, "phi")?;
        check_component(&psi, PSI_DEGREE, "psi")?;
        Ok(StructureTheta {
            space,
            mu,
            gamma,
            phi,
            psi,
        })
    }

    pub fn zero(space: GeneratorSpace) -> Self {
        StructureTheta {
            space,
            mu: SuperPoly::zero(space),
            gamma: SuperPoly::zero(space),
            phi: SuperPoly::zero(space),
            psi: SuperPoly::zero(space),
        }
    }

    /// The standard lift of the de Rham vector field, `mu = sum_i xi_i p_i`.
    /// Only defined when base dimension equals fibre rank.
    pub fn derham_mu(space: GeneratorSpace) -> Result<SuperPoly> {
        if space.base_dim != space.fibre_rank {
            return Err(Error::Precondition(
                "derham requires base_dim == fibre_rank".into(),
            ));
        }
        let mut mu = SuperPoly::zero(space);
        for i in 1..=space.base_dim {
            let xi = SuperPoly::generator(space, Generator::fibre(i))?;
            let p = SuperPoly::generator(space, Generator::momentum(i))?;
            mu = &mu + &(&xi * &p);
        }
        Ok(mu)
    }

    pub fn derham(space: GeneratorSpace) -> Result<Self> {
        let mu = Self::derham_mu(space)?;
        StructureTheta::new(
            mu,
            SuperPoly::zero(space),
            SuperPoly::zero(space),
            SuperPoly::zero(space),
        )
    }

    /// Split a total-weight-3 polynomial into its four components.
    pub fn decompose_cubic(t: &SuperPoly) -> Result<Self> {
        if !t.is_weight_homogeneous_of(3) {
            return Err(Error::Degree(
                "cubic decomposition requires total weight 3".into(),
            ));
        }
        Ok(StructureTheta {
            space: t.space(),
            mu: t.project_bidegree(MU_DEGREE),
            gamma: t.project_bidegree(GAMMA_DEGREE),
            phi: t.project_bidegree(PHI_DEGREE),
            psi: t.project_bidegree(PSI_DEGREE),
        })
    }

    pub fn space(&self) -> GeneratorSpace {
        self.space
    }

    pub fn mu(&self) -> &SuperPoly {
        &self.mu
    }

    pub fn gamma(&self) -> &SuperPoly {
        &self.gamma
    }

    pub fn phi(&self) -> &SuperPoly {
        &self.phi
    }

    pub fn psi(&self) -> &SuperPoly {
        &self.psi
    }

    pub fn total(&self) -> SuperPoly {
        &(&(&self.mu + &self.gamma) + &self.phi) + &self.psi
    }

    /// Residuals of the master equation: the bihomogeneous components of
    /// `1/2 {Theta, Theta}`, keyed by their actual bidegrees.
    pub fn master_residual(&self) -> CheckReport {
        let theta = self.total();
        let half = pb(&theta, &theta).scale(&coeff_ratio(1, 2));
        let residuals: BTreeMap<Bidegree, SuperPoly> = half
            .components()
            .into_iter()
            .filter(|(_, p)| !p.is_zero())
            .collect();
        let classification = self.classification(residuals.is_empty());
        CheckReport::from_residuals(residuals, classification)
    }

    /// The five displayed component combinations of `1/2 {Theta,Theta}`.
    /// Computed independently of [`master_residual`]; the two routes are
    /// asserted equal in the test suite.
    pub fn master_system(&self) -> [(Bidegree, SuperPoly); 5] {
        let half = coeff_ratio(1, 2);
        [
            (
                Bidegree::new(1, 3),
                &pb(&self.mu, &self.mu).scale(&half) + &pb(&self.gamma, &self.phi),
            ),
            (
                Bidegree::new(3, 1),
                &pb(&self.gamma, &self.gamma).scale(&half) + &pb(&self.mu, &self.psi),
            ),
            (
                Bidegree::new(2, 2),
                &pb(&self.mu, &self.gamma) + &pb(&self.phi, &self.psi),
            ),
            (Bidegree::new(0, 4), pb(&self.mu, &self.phi)),
            (Bidegree::new(4, 0), pb(&self.gamma, &self.psi)),
        ]
    }

    fn classification(&self, master_ok: bool) -> Classification {
        if master_ok {
            match (self.phi.is_zero(), self.psi.is_zero()) {
                (true, true) => Classification::LieBialgebroid,
                (false, true) => Classification::QuasiLieBialgebroidA,
                (true, false) => Classification::QuasiLieBialgebroidAstar,
                (false, false) => Classification::ProtoBialgebroid,
            }
        } else if self.gamma.is_zero()
            && self.psi.is_zero()
            && !self.mu.is_zero()
            && pb(&self.mu, &self.mu).is_zero()
        {
            Classification::LieAlgebroidA
        } else if self.mu.is_zero()
            && self.phi.is_zero()
            && !self.gamma.is_zero()
            && pb(&self.gamma, &self.gamma).is_zero()
        {
            Classification::LieAlgebroidAstar
        } else {
            Classification::None
        }
    }

    /// Classify which named structure the data carries.
    pub fn classify(&self) -> CheckReport {
        self.master_residual()
    }

    /// The derived bracket `{{x, Theta}, y}`.
    pub fn derived_bracket(&self, x: &SuperPoly, y: &SuperPoly) -> Result<SuperPoly> {
        if x.space() != self.space || y.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        let theta = self.total();
        let inner = poisson_bracket(x, &theta)?;
        poisson_bracket(&inner, y)
    }

    /// `{selected component, f}`: the full differential `D` or the component
    /// differentials `d_mu`, `d_gamma`.
    pub fn differential_of(&self, part: DifferentialPart, f: &SuperPoly) -> Result<SuperPoly> {
        if f.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        let h = match part {
            DifferentialPart::Full => self.total(),
            DifferentialPart::Mu => self.mu.clone(),
            DifferentialPart::Gamma => self.gamma.clone(),
        };
        poisson_bracket(&h, f)
    }

    /// The homotopy bracket tower determined by (gamma, mu, phi).
    pub fn linfty_brackets(&self) -> LInftyBrackets {
        LInftyBrackets {
            space: self.space,
            gamma: self.gamma.clone(),
            mu: self.mu.clone(),
            phi: self.phi.clone(),
        }
    }

    /// The Maurer-Cartan structure equation of the homotopy tower evaluated
    /// on a bivector: `l1(pi) + 1/2 l2(pi,pi) + 1/6 l3(pi,pi,pi)`.
    ///
    /// Requires `psi = 0` and `pi` bihomogeneous of bidegree (2,0). Agrees
    /// with the twisted Maurer-Cartan residual as an exact polynomial
    /// identity.
    pub fn mc_structure_equation(&self, pi: &SuperPoly) -> Result<SuperPoly> {
        if pi.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        if !pi.is_bihomogeneous_of(Bidegree::new(2, 0)) {
            return Err(Error::Degree("pi must have bidegree (2,0)".into()));
        }
        if !self.psi.is_zero() {
            return Err(Error::Precondition(
                "mc_structure_equation requires psi = 0".into(),
            ));
        }
        let l = self.linfty_brackets();
        let t1 = l.l1(pi)?;
        let t2 = l.l2(pi, pi)?.scale(&coeff_ratio(1, 2));
        let t3 = l.l3(pi, pi, pi)?.scale(&coeff_ratio(1, 6));
        Ok(&(&t1 + &t2) + &t3)
    }

    /// Verify the three quasi-Gerstenhaber relations on the generator basis
    /// of sections and on coordinate test functions. Requires `psi = 0`.
    ///
    /// The relations are evaluated through bracket expressions; for a
    /// structure with vanishing master residual all three hold, and a
    /// corrupted component shows up as a nonzero witness residual.
    pub fn quasi_gerstenhaber_check(&self) -> Result<CheckReport> {
        if !self.psi.is_zero() {
            return Err(Error::Precondition(
                "quasi_gerstenhaber_check requires psi = 0".into(),
            ));
        }
        let space = self.space;
        let l = self.linfty_brackets();
        let mut residuals: BTreeMap<Bidegree, SuperPoly> = BTreeMap::new();
        let mut witness = |r: SuperPoly| {
            if !r.is_zero() {
                let d = r.bidegree().unwrap_or(Bidegree::new(0, 0));
                residuals.entry(d).or_insert(r);
            }
        };
        let sections: Vec<SuperPoly> = space
            .cofibre_gens()
            .map(|g| SuperPoly::generator(space, g).unwrap())
            .collect();
        let functions: Vec<SuperPoly> = space
            .base_gens()
            .map(|g| SuperPoly::generator(space, g).unwrap())
            .collect();

        // Anchor relation: a([X,Y])f - [a(X),a(Y)]f = (a_* phi(X,Y))f.
        for x in &sections {
            for y in &sections {
                let bracket_xy = l.l2(x, y)?;
                for f in &functions {
                    let lhs = self.anchor_action(&bracket_xy, f)?;
                    let comm = &self.anchor_action(x, &self.anchor_action(y, f)?)?
                        - &self.anchor_action(y, &self.anchor_action(x, f)?)?;
                    let phi_xy = self.contract_two(x, y)?;
                    let correction = poisson_bracket(
                        &poisson_bracket(&phi_xy, &self.gamma)?,
                        f,
                    )?
                    .scale_int(ANCHOR_SIGN);
                    witness(&(&lhs - &comm) - &correction);
                }
            }
        }

        // Homotopy Jacobi: the Jacobiator of l2 is controlled by l1 and phi.
        for x in &sections {
            for y in &sections {
                for z in &sections {
                    let jac = &(&l.l2(&l.l2(x, y)?, z)? + &l.l2(&l.l2(y, z)?, x)?)
                        + &l.l2(&l.l2(z, x)?, y)?;
                    let boundary = self.jacobi_boundary(&l, x, y, z)?;
                    witness(&jac - &boundary);
                }
            }
        }

        // Coherence between the bracket and phi.
        for x in &sections {
            for y in &sections {
                for z in &sections {
                    for w in &sections {
                        witness(self.coherence_residual(&l, x, y, z, w)?);
                    }
                }
            }
        }

        let classification = self.classification(self.master_residual().verdict);
        Ok(CheckReport::from_residuals(residuals, classification))
    }

    /// `a(X) f = {{X, mu}, f}` — the anchor action of a section on a function.
    fn anchor_action(&self, x: &SuperPoly, f: &SuperPoly) -> Result<SuperPoly> {
        let inner = poisson_bracket(x, &self.mu)?;
        poisson_bracket(&inner, f)
    }

    /// `phi(X,Y) = {Y, {X, phi}}` — a section of the dual.
    fn contract_two(&self, x: &SuperPoly, y: &SuperPoly) -> Result<SuperPoly> {
        let inner = poisson_bracket(x, &self.phi)?;
        poisson_bracket(y, &inner)
    }

    /// `phi(U,Y,Z) = {Z, {Y, {U, phi}}}` for a multivector `U`.
    fn contract_three(
        &self,
        u: &SuperPoly,
        y: &SuperPoly,
        z: &SuperPoly,
    ) -> Result<SuperPoly> {
        let a = poisson_bracket(u, &self.phi)?;
        let b = poisson_bracket(y, &a)?;
        poisson_bracket(z, &b)
    }

    fn jacobi_boundary(
        &self,
        l: &LInftyBrackets,
        x: &SuperPoly,
        y: &SuperPoly,
        z: &SuperPoly,
    ) -> Result<SuperPoly> {
        let phixyz = self.contract_three(x, y, z)?;
        let t0 = l.l1(&phixyz)?.scale_int(JACOBI_SIGNS[0]);
        let t1 = self
            .contract_three(&l.l1(x)?, y, z)?
            .scale_int(JACOBI_SIGNS[1]);
        let t2 = self
            .contract_three(&l.l1(y)?, x, z)?
            .scale_int(JACOBI_SIGNS[2]);
        let t3 = self
            .contract_three(&l.l1(z)?, x, y)?
            .scale_int(JACOBI_SIGNS[3]);
        Ok(&(&(&t0 + &t1) + &t2) + &t3)
    }

    fn coherence_residual(
        &self,
        l: &LInftyBrackets,
        x: &SuperPoly,
        y: &SuperPoly,
        z: &SuperPoly,
        w: &SuperPoly,
    ) -> Result<SuperPoly> {
        // [phi(X,Y,Z), W] - [phi(X,Y,W), Z] + [phi(X,Z,W), Y] - [phi(Y,Z,W), X]
        let g1 = &(&l.l2(&self.contract_three(x, y, z)?, w)?
            - &l.l2(&self.contract_three(x, y, w)?, z)?)
            + &(&l.l2(&self.contract_three(x, z, w)?, y)?
                - &l.l2(&self.contract_three(y, z, w)?, x)?);
        // phi([X,Y],Z,W) - phi([X,Z],Y,W) + phi([X,W],Y,Z)
        //   + phi([Y,Z],X,W) - phi([Y,W],X,Z) + phi([Z,W],X,Y)
        let g2 = &(&(&self.contract_three(&l.l2(x, y)?, z, w)?
            - &self.contract_three(&l.l2(x, z)?, y, w)?)
            + &(&self.contract_three(&l.l2(x, w)?, y, z)?
                + &self.contract_three(&l.l2(y, z)?, x, w)?))
            + &(&self.contract_three(&l.l2(z, w)?, x, y)?
                - &self.contract_three(&l.l2(y, w)?, x, z)?);
        Ok(&g1 - &g2.scale_int(COHERENCE_SIGN))
    }
}

/// Overall sign linking the dual-anchor correction `a_* phi(X,Y)` to the
/// bracket conventions; pinned by requiring the anchor relation to be
/// equivalent to the (1,3) master component and then frozen.
const ANCHOR_SIGN: i64 = 1;

/// Signs of the four boundary terms in the homotopy Jacobi relation, in the
/// order `d(phi(X,Y,Z))`, `phi(dX,Y,Z)`, `phi(X,dY,Z)`, `phi(X,Y,dZ)`.
const JACOBI_SIGNS: [i64; 4] = [1, 1, -1, 1];

/// Relative sign between the two groups of the coherence relation.
const COHERENCE_SIGN: i64 = 1;

/// Selector for [`StructureTheta::differential_of`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferentialPart {
    Full,
    Mu,
    Gamma,
}

/// The homotopy bracket tower of a quasi structure:
/// `l1 = {gamma, .}`, `l2 = {{., mu}, .}`, `l3 = -{., {., {., phi}}}`.
#[derive(Debug, Clone)]
pub struct LInftyBrackets {
    space: GeneratorSpace,
    gamma: SuperPoly,
    mu: SuperPoly,
    phi: SuperPoly,
}

impl LInftyBrackets {
    pub fn l1(&self, f: &SuperPoly) -> Result<SuperPoly> {
        if f.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        poisson_bracket(&self.gamma, f)
    }

    pub fn l2(&self, f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
        if f.space() != self.space || g.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        let inner = poisson_bracket(f, &self.mu)?;
        poisson_bracket(&inner, g)
    }

    pub fn l3(&self, f: &SuperPoly, g: &SuperPoly, h: &SuperPoly) -> Result<SuperPoly> {
        if f.space() != self.space || g.space() != self.space || h.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        let a = poisson_bracket(h, &self.phi)?;
        let b = poisson_bracket(g, &a)?;
        Ok(poisson_bracket(f, &b)?.negate())
    }
}

/// The Koszul bracket of two 1-forms induced by a bivector and a bracket
/// component: `[alpha,beta] = L_{pi~alpha} beta - L_{pi~beta} alpha
/// - d_mu(pi(alpha,beta))`.
///
/// Conventions realized inside the algebra, fixed once and verified against
/// the derived-bracket route: the contracted section is `pi~alpha = {alpha,
/// pi}`, the pairing is `pi(alpha,beta) = {beta, {alpha, pi}}`, the
/// contraction operator is `i_X = {X, .}` and `L_X = i_X d_mu + d_mu i_X`.
pub fn koszul_bracket(
    alpha: &SuperPoly,
    beta: &SuperPoly,
    pi: &SuperPoly,
    mu: &SuperPoly,
) -> Result<SuperPoly> {
    let space = alpha.space();
    if beta.space() != space || pi.space() != space || mu.space() != space {
        return Err(Error::SpaceMismatch);
    }
    if !alpha.is_bihomogeneous_of(Bidegree::new(0, 1))
        || !beta.is_bihomogeneous_of(Bidegree::new(0, 1))
    {
        return Err(Error::Degree("alpha, beta must have bidegree (0,1)".into()));
    }
    if !pi.is_bihomogeneous_of(Bidegree::new(2, 0)) {
        return Err(Error::Degree("pi must have bidegree (2,0)".into()));
    }
    if !mu.is_bihomogeneous_of(MU_DEGREE) {
        return Err(Error::Degree("mu must have bidegree (1,2)".into()));
    }
    let x_alpha = poisson_bracket(alpha, pi)?;
    let x_beta = poisson_bracket(beta, pi)?;
    let term1 = lie_derivative(mu, &x_alpha, beta)?;
    let term2 = lie_derivative(mu, &x_beta, alpha)?;
    let pairing = poisson_bracket(beta, &poisson_bracket(alpha, pi)?)?;
    let term3 = poisson_bracket(mu, &pairing)?;
    Ok(&(&term1 - &term2) - &term3)
}

/// Mirror Koszul bracket of two sections induced by a 2-form and the dual
/// bracket component; the Legendre image of [`koszul_bracket`].
pub fn koszul_bracket_dual(
    x: &SuperPoly,
    y: &SuperPoly,
    omega: &SuperPoly,
    gamma: &SuperPoly,
) -> Result<SuperPoly> {
    let space = x.space();
    if y.space() != space || omega.space() != space || gamma.space() != space {
        return Err(Error::SpaceMismatch);
    }
    if !x.is_bihomogeneous_of(Bidegree::new(1, 0))
        || !y.is_bihomogeneous_of(Bidegree::new(1, 0))
    {
        return Err(Error::Degree("x, y must have bidegree (1,0)".into()));
    }
    if !omega.is_bihomogeneous_of(Bidegree::new(0, 2)) {
        return Err(Error::Degree("omega must have bidegree (0,2)".into()));
    }
    if !gamma.is_bihomogeneous_of(GAMMA_DEGREE) {
        return Err(Error::Degree("gamma must have bidegree (2,1)".into()));
    }
    let w_x = poisson_bracket(x, omega)?;
    let w_y = poisson_bracket(y, omega)?;
    let term1 = lie_derivative(gamma, &w_x, y)?;
    let term2 = lie_derivative(gamma, &w_y, x)?;
    let pairing = poisson_bracket(y, &poisson_bracket(x, omega)?)?;
    let term3 = poisson_bracket(gamma, &pairing)?;
    Ok(&(&term1 - &term2) - &term3)
}

/// `L_X f = {X, {h, f}} + {h, {X, f}}` — the Cartan-style Lie derivative
/// along the contraction of `X`, with respect to the differential `{h, .}`.
pub fn lie_derivative(h: &SuperPoly, x: &SuperPoly, f: &SuperPoly) -> Result<SuperPoly> {
    let a = poisson_bracket(x, &poisson_bracket(h, f)?)?;
    let b = poisson_bracket(h, &poisson_bracket(x, f)?)?;
    Ok(&a + &b)
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

    /// mu for the Chevalley-Eilenberg structure of sl(2) in the basis
    /// (h, e, f) = (1, 2, 3): [h,e]=2e, [h,f]=-2f, [e,f]=h.
    pub(crate) fn sl2_mu(space: GeneratorSpace) -> SuperPoly {
        pp(
            space,
            "-2*xi1*xi2*th2 + 2*xi1*xi3*th3 - xi2*xi3*th1",
        )
    }

    #[test]
    fn decompose_sorts_components() {
        let s = sp(1, 3);
        let t = pp(s, "xi1*p1 + xi1*xi2*xi3 - th1*th2*th3");
        let theta = StructureTheta::decompose_cubic(&t).unwrap();
        assert_eq!(theta.mu(), &pp(s, "xi1*p1"));
        assert_eq!(theta.phi(), &pp(s, "xi1*xi2*xi3"));
        assert_eq!(theta.psi(), &pp(s, "-th1*th2*th3"));
        assert!(theta.gamma().is_zero());
    }

    #[test]
    fn decompose_keeps_x_coefficients_in_phi() {
        let s = sp(1, 3);
        let theta =
            StructureTheta::decompose_cubic(&pp(s, "x1*xi1*xi2*xi3")).unwrap();
        assert_eq!(theta.phi(), &pp(s, "x1*xi1*xi2*xi3"));
    }

    #[test]
    fn decompose_rejects_non_cubic() {
        let s = sp(1, 1);
        assert!(StructureTheta::decompose_cubic(&pp(s, "xi1*p1 + x1")).is_err());
    }

    #[test]
    fn derham_satisfies_master() {
        for n in 1..=3 {
            let theta = StructureTheta::derham(sp(n, n)).unwrap();
            let report = theta.master_residual();
            assert!(report.verdict);
            assert!(report.residuals.is_empty());
        }
    }

    #[test]
    fn sl2_ce_satisfies_master() {
        let s = sp(0, 3);
        let theta = StructureTheta::new(
            sl2_mu(s),
            SuperPoly::zero(s),
            SuperPoly::zero(s),
            SuperPoly::zero(s),
        )
        .unwrap();
        assert!(theta.master_residual().verdict);
    }

    #[test]
    fn sl2_structure_constants_satisfy_jacobi_directly() {
        // Independent check of the same fact: sum_d C^d_ab C^e_dc + cyclic = 0.
        let mut c = [[[0i64; 3]; 3]; 3]; // c[a][b][d]: [e_a, e_b] = c^d e_d
        c[0][1][1] = 2;
        c[1][0][1] = -2;
        c[0][2][2] = -2;
        c[2][0][2] = 2;
        c[1][2][0] = 1;
        c[2][1][0] = -1;
        for a in 0..3 {
            for b in 0..3 {
                for cc in 0..3 {
                    for e in 0..3 {
                        let mut total = 0i64;
                        for d in 0..3 {
                            total += c[a][b][d] * c[d][cc][e];
                            total += c[b][cc][d] * c[d][a][e];
                            total += c[cc][a][d] * c[d][b][e];
                        }
                        assert_eq!(total, 0, "jacobi at ({a},{b},{cc},{e})");
                    }
                }
            }
        }
    }

    #[test]
    fn non_closed_phi_fails_master_with_exact_residual() {
        // phi = x4*xi1*xi2*xi3 on n=r=4 is not closed; the only residual is
        // {mu, phi} in bidegree (0,4).
        let s = sp(4, 4);
        let mu = StructureTheta::derham_mu(s).unwrap();
        let phi = pp(s, "x4*xi1*xi2*xi3");
        let theta = StructureTheta::new(
            mu.clone(),
            SuperPoly::zero(s),
            phi.clone(),
            SuperPoly::zero(s),
        )
        .unwrap();
        let report = theta.master_residual();
        assert!(!report.verdict);
        let residual = report.residuals.get(&Bidegree::new(0, 4)).unwrap();
        assert_eq!(residual, &pb(&mu, &phi));
        assert_eq!(residual, &pp(s, "-xi1*xi2*xi3*xi4"));
        assert_eq!(report.classification, Classification::LieAlgebroidA);
    }

    #[test]
    fn master_residual_matches_component_system() {
        let s = sp(3, 3);
        let t = pp(
            s,
            "xi1*p1 + x1*xi1*xi2*th2 + xi1*th1*th2 - 2*x2*xi3*th2*th3 \
             + x2*xi1*xi2*xi3 - th1*th2*th3",
        );
        let theta = StructureTheta::decompose_cubic(&t).unwrap();
        let report = theta.master_residual();
        let mut recombined = SuperPoly::zero(s);
        for (d, comp) in theta.master_system() {
            assert!(comp.is_bihomogeneous_of(d), "component at {d}");
            recombined = &recombined + &comp;
        }
        let mut from_report = SuperPoly::zero(s);
        for r in report.residuals.values() {
            from_report = &from_report + r;
        }
        assert_eq!(recombined, from_report);
    }

    #[test]
    fn classify_trivial_bialgebroid() {
        let theta = StructureTheta::derham(sp(2, 2)).unwrap();
        assert_eq!(
            theta.classify().classification,
            Classification::LieBialgebroid
        );
    }

    #[test]
    fn classify_quasi_a() {
        let s = sp(3, 3);
        let theta = StructureTheta::new(
            StructureTheta::derham_mu(s).unwrap(),
            SuperPoly::zero(s),
            pp(s, "x1*xi1*xi2*xi3"),
            SuperPoly::zero(s),
        )
        .unwrap();
        assert_eq!(
            theta.classify().classification,
            Classification::QuasiLieBialgebroidA
        );
    }

    #[test]
    fn derived_bracket_anchor_is_coordinate_derivative() {
        let s = sp(2, 2);
        let theta = StructureTheta::derham(s).unwrap();
        let th1 = pp(s, "th1");
        let f = pp(s, "x1^2*x2");
        let result = theta.derived_bracket(&th1, &f).unwrap();
        assert_eq!(result, f.partial_derivative(Generator::base(1)));
    }

    #[test]
    fn derived_bracket_of_functions_vanishes() {
        let s = sp(2, 2);
        let theta = StructureTheta::derham(s).unwrap();
        let f = pp(s, "x1*x2");
        assert!(theta.derived_bracket(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn differential_of_base_coordinate() {
        let s = sp(2, 2);
        let theta = StructureTheta::derham(s).unwrap();
        let d = theta
            .differential_of(DifferentialPart::Mu, &pp(s, "x1"))
            .unwrap();
        assert_eq!(d, pp(s, "xi1"));
    }

    #[test]
    fn full_differential_squares_to_zero_for_master_structures() {
        let s = sp(2, 2);
        let theta = StructureTheta::derham(s).unwrap();
        for text in ["x1*th1*p2", "xi1*xi2 - th2", "p1*p2 + x2^2"] {
            let f = pp(s, text);
            let df = theta.differential_of(DifferentialPart::Full, &f).unwrap();
            let ddf = theta.differential_of(DifferentialPart::Full, &df).unwrap();
            assert!(ddf.is_zero(), "D^2 on {text}");
        }
    }

    #[test]
    fn l3_on_three_sections_is_scalar() {
        let s = sp(0, 3);
        let theta = StructureTheta::new(
            SuperPoly::zero(s),
            SuperPoly::zero(s),
            pp(s, "xi1*xi2*xi3"),
            SuperPoly::zero(s),
        )
        .unwrap();
        let l = theta.linfty_brackets();
        let v = l
            .l3(&pp(s, "th1"), &pp(s, "th2"), &pp(s, "th3"))
            .unwrap();
        assert_eq!(v, SuperPoly::one(s));
    }

    #[test]
    fn l3_vanishes_on_functions() {
        let s = sp(2, 3);
        let theta = StructureTheta::new(
            SuperPoly::zero(s),
            SuperPoly::zero(s),
            pp(s, "x2*xi1*xi2*xi3"),
            SuperPoly::zero(s),
        )
        .unwrap();
        let l = theta.linfty_brackets();
        let f = pp(s, "x1*x2");
        let th1 = pp(s, "th1");
        let th2 = pp(s, "th2");
        assert!(l.l3(&f, &th1, &th2).unwrap().is_zero());
        assert!(l.l3(&th1, &f, &th2).unwrap().is_zero());
        assert!(l.l3(&th1, &th2, &f).unwrap().is_zero());
    }

    #[test]
    fn sl2_derived_brackets_reproduce_structure_constants() {
        let s = sp(0, 3);
        let theta = StructureTheta::new(
            sl2_mu(s),
            SuperPoly::zero(s),
            SuperPoly::zero(s),
            SuperPoly::zero(s),
        )
        .unwrap();
        let h = pp(s, "th1");
        let e = pp(s, "th2");
        let f = pp(s, "th3");
        assert_eq!(theta.derived_bracket(&h, &e).unwrap(), pp(s, "2*th2"));
        assert_eq!(theta.derived_bracket(&h, &f).unwrap(), pp(s, "-2*th3"));
        assert_eq!(theta.derived_bracket(&e, &f).unwrap(), pp(s, "th1"));
    }

    #[test]
    fn koszul_bracket_constant_bivector_constant_forms() {
        let s = sp(2, 2);
        let mu = StructureTheta::derham_mu(s).unwrap();
        let k = koszul_bracket(&pp(s, "xi1"), &pp(s, "xi2"), &pp(s, "th1*th2"), &mu)
            .unwrap();
        assert!(k.is_zero());
    }

    #[test]
    fn koszul_bracket_matches_derived_route() {
        let s = sp(2, 2);
        let mu = StructureTheta::derham_mu(s).unwrap();
        let pi = pp(s, "x1*th1*th2");
        let alpha = pp(s, "xi1");
        let beta = pp(s, "xi2");
        let k = koszul_bracket(&alpha, &beta, &pi, &mu).unwrap();
        // gamma_pi = {pi, mu}; the Koszul bracket is its derived bracket.
        let gamma_pi = poisson_bracket(&pi, &mu).unwrap();
        let derived = poisson_bracket(
            &poisson_bracket(&alpha, &gamma_pi).unwrap(),
            &beta,
        )
        .unwrap();
        assert_eq!(k, derived);
        assert_eq!(k, pp(s, "xi1"));
    }

    #[test]
    fn koszul_bracket_leibniz_in_first_argument() {
        let s = sp(2, 2);
        let mu = StructureTheta::derham_mu(s).unwrap();
        let pi = pp(s, "x1*th1*th2 + th1*th2");
        let alpha = pp(s, "xi1");
        let beta = pp(s, "xi2");
        let f = pp(s, "x2");
        // [f alpha, beta] = f [alpha, beta] - (anchor term) with the anchor
        // correction given by the pairing against d f; verify through the
        // derived route, which encodes the same Leibniz rule.
        let gamma_pi = poisson_bracket(&pi, &mu).unwrap();
        let falpha = &f * &alpha;
        let k = koszul_bracket(&falpha, &beta, &pi, &mu).unwrap();
        let derived = poisson_bracket(
            &poisson_bracket(&falpha, &gamma_pi).unwrap(),
            &beta,
        )
        .unwrap();
        assert_eq!(k, derived);
    }

    #[test]
    fn koszul_bracket_rejects_wrong_degrees() {
        let s = sp(1, 2);
        let mu = pp(s, "xi1*p1");
        assert!(koszul_bracket(&pp(s, "th1"), &pp(s, "xi2"), &pp(s, "th1*th2"), &mu)
            .is_err());
        assert!(koszul_bracket(&pp(s, "xi1"), &pp(s, "xi2"), &pp(s, "xi1*xi2"), &mu)
            .is_err());
    }

    #[test]
    fn mc_structure_equation_zero_bivector() {
        let s = sp(3, 3);
        let theta = StructureTheta::new(
            StructureTheta::derham_mu(s).unwrap(),
            SuperPoly::zero(s),
            pp(s, "x1*xi1*xi2*xi3"),
            SuperPoly::zero(s),
        )
        .unwrap();
        let z = SuperPoly::zero(s);
        assert!(theta.mc_structure_equation(&z).unwrap().is_zero());
    }

    #[test]
    fn mc_structure_equation_requires_quasi() {
        let s = sp(3, 3);
        let theta = StructureTheta::new(
            StructureTheta::derham_mu(s).unwrap(),
            SuperPoly::zero(s),
            SuperPoly::zero(s),
            pp(s, "th1*th2*th3"),
        )
        .unwrap();
        assert!(matches!(
            theta.mc_structure_equation(&pp(s, "th1*th2")),
            Err(Error::Precondition(_))
        ));
    }
}
