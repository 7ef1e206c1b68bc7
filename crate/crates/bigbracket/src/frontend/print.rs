//! Canonical pretty-printer. `parse(print(f)) == f` for every polynomial.

use crate::poly::{coeff_is_negative, Coeff, Monomial, SuperPoly};
use num_traits::One;

fn print_coeff_abs(c: &Coeff) -> String {
    let n = c.numer().magnitude();
    let d = c.denom().magnitude();
    if d.is_one() {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

fn print_monomial(m: &Monomial) -> String {
    let mut factors: Vec<String> = Vec::new();
    let mut evens = m.even_exponents().iter().peekable();
    let mut odds = m.odd_factors().iter().peekable();
    // Merge the two sorted runs so factors appear in generator order.
    loop {
        match (evens.peek(), odds.peek()) {
            (Some(&&(g, e)), Some(&&h)) => {
                if g < h {
                    factors.push(if e == 1 {
                        g.to_string()
                    } else {
                        format!("{g}^{e}")
                    });
                    evens.next();
                } else {
                    factors.push(h.to_string());
                    odds.next();
                }
            }
            (Some(&&(g, e)), None) => {
                factors.push(if e == 1 {
                    g.to_string()
                } else {
                    format!("{g}^{e}")
                });
                evens.next();
            }
            (None, Some(&&h)) => {
                factors.push(h.to_string());
                odds.next();
            }
            (None, None) => break,
        }
    }
    factors.join("*")
}

/// Deterministic canonical rendering of a polynomial.
pub fn print_expression(f: &SuperPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms().enumerate() {
        let negative = coeff_is_negative(c);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = print_coeff_abs(c);
        if m.is_one() {
            out.push_str(&abs);
        } else if abs == "1" {
            out.push_str(&print_monomial(m));
        } else {
            out.push_str(&abs);
            out.push('*');
            out.push_str(&print_monomial(m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse::parse_expression;
    use crate::space::GeneratorSpace;

    fn sp(n: usize, r: usize) -> GeneratorSpace {
        GeneratorSpace::new(n, r)
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(print_expression(&SuperPoly::zero(sp(1, 1))), "0");
    }

    #[test]
    fn leading_negative_has_no_space() {
        let s = sp(0, 2);
        let f = parse_expression("-th1*th2", s).unwrap();
        assert_eq!(print_expression(&f), "-th1*th2");
    }

    #[test]
    fn powers_and_unit_coefficients() {
        let s = sp(1, 1);
        let f = parse_expression("x1*x1*xi1", s).unwrap();
        assert_eq!(print_expression(&f), "x1^2*xi1");
    }

    #[test]
    fn factor_order_is_x_xi_th_p() {
        let s = sp(1, 1);
        let f = parse_expression("p1*xi1*th1*x1", s).unwrap();
        assert_eq!(print_expression(&f), "x1*xi1*th1*p1");
    }

    #[test]
    fn round_trip_on_samples() {
        let s = sp(2, 3);
        for text in [
            "0",
            "-5/3",
            "x1^2*xi1 - 2*th1*th2 + 7/2",
            "p1*p2 + x2^3*xi1*xi2*xi3 - th3*p1",
            "1/2*x1*th1*th2 - xi1*p1",
        ] {
            let f = parse_expression(text, s).unwrap();
            let printed = print_expression(&f);
            let g = parse_expression(&printed, s).unwrap();
            assert_eq!(f, g, "round trip through `{printed}`");
        }
    }
}
