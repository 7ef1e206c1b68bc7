use bigbracket::frontend::parse::parse_expression;
use bigbracket::structures::StructureTheta;
use bigbracket::twisting::{twist, TwistInput};
use bigbracket::{GeneratorSpace, SuperPoly};

fn pp(s: GeneratorSpace, t: &str) -> SuperPoly {
    parse_expression(t, s).unwrap()
}

fn show(name: &str, theta: &StructureTheta) {
    let report = theta.master_residual();
    println!("== {name}");
    println!("   mu    = {}", theta.mu());
    println!("   gamma = {}", theta.gamma());
    println!("   phi   = {}", theta.phi());
    println!("   psi   = {}", theta.psi());
    println!(
        "   verdict={} classification={}",
        report.verdict, report.classification
    );
}

#[test]
fn print_fixture_components() {
    // r2-poisson
    {
        let s = GeneratorSpace::new(2, 2);
        let base = StructureTheta::derham(s).unwrap();
        let pi = TwistInput::by_bivector(pp(s, "x1*th1*th2")).unwrap();
        show("r2-poisson", &twist(&base, &pi).unwrap());
    }
    // candidate non-poisson bivectors on n=r=3
    {
        let s = GeneratorSpace::new(3, 3);
        let base = StructureTheta::derham(s).unwrap();
        for cand in ["th1*th2 + x2*th1*th3", "th1*th2 + x3*th1*th3", "x2*th1*th3 + th2*th3"] {
            let pi = TwistInput::by_bivector(pp(s, cand)).unwrap();
            let t = twist(&base, &pi).unwrap();
            println!("-- pi = {cand}: psi_pi = {}", t.psi());
        }
        let pi = TwistInput::by_bivector(pp(s, "th1*th2 + x2*th1*th3")).unwrap();
        show("r2-nonpoisson", &twist(&base, &pi).unwrap());
    }
    // r3-rank2
    {
        let s = GeneratorSpace::new(3, 3);
        let base = StructureTheta::new(
            StructureTheta::derham_mu(s).unwrap(),
            SuperPoly::zero(s),
            pp(s, "x1*xi1*xi2*xi3"),
            SuperPoly::zero(s),
        )
        .unwrap();
        let pi = TwistInput::by_bivector(pp(s, "th1*th2")).unwrap();
        show("r3-rank2", &twist(&base, &pi).unwrap());
    }
    // r4-symplectic (truncated twist: drop psi_pi)
    {
        let s = GeneratorSpace::new(4, 4);
        let base = StructureTheta::new(
            StructureTheta::derham_mu(s).unwrap(),
            SuperPoly::zero(s),
            pp(s, "xi1*xi2*xi3"),
            SuperPoly::zero(s),
        )
        .unwrap();
        let pi = TwistInput::by_bivector(pp(s, "th1*th2 + th3*th4")).unwrap();
        let full = twist(&base, &pi).unwrap();
        println!("-- r4-symplectic psi_pi = {}", full.psi());
        let truncated = StructureTheta::new(
            full.mu().clone(),
            full.gamma().clone(),
            full.phi().clone(),
            SuperPoly::zero(s),
        )
        .unwrap();
        show("r4-symplectic (truncated)", &truncated);
        for (d, r) in truncated.master_residual().residuals {
            println!("   residual {d}: {r}");
        }
    }
    // r4-twisted: honest twisted Poisson pair
    {
        let s = GeneratorSpace::new(4, 4);
        let base = StructureTheta::new(
            StructureTheta::derham_mu(s).unwrap(),
            SuperPoly::zero(s),
            pp(s, "xi1*xi2*xi3"),
            SuperPoly::zero(s),
        )
        .unwrap();
        let pi = TwistInput::by_bivector(pp(s, "th1*th2 + th3*th4 + x1*th1*th4")).unwrap();
        show("r4-twisted", &twist(&base, &pi).unwrap());
    }
    // sl2 family
    {
        let s = GeneratorSpace::new(0, 3);
        let mu = pp(s, "-2*xi1*xi2*th2 + 2*xi1*xi3*th3 - xi2*xi3*th1");
        let zero = SuperPoly::zero(s);
        let ce = StructureTheta::new(mu.clone(), zero.clone(), zero.clone(), zero.clone())
            .unwrap();
        show("sl2-ce", &ce);
        let cartan = StructureTheta::new(
            mu.clone(),
            zero.clone(),
            pp(s, "xi1*xi2*xi3"),
            zero.clone(),
        )
        .unwrap();
        show("sl2-cartan", &cartan);
        let pi = TwistInput::by_bivector(pp(s, "th2*th3")).unwrap();
        show("sl2-rmatrix", &twist(&ce, &pi).unwrap());
    }
}
