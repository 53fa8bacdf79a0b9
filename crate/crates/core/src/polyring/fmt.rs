//! Printers. Text output writes `C_{-k}` with explicit `p/q` coefficients;
//! the LaTeX emitter follows the compact display conventions of the system
//! listings (`2C_{-3}+C_{-1}^{2}`).

use std::fmt;

use crate::exactnum::Rational;

use super::{IdealBasis, Monomial, Polynomial, Ring};

fn push_factors(out: &mut String, ring: &Ring, mono: &Monomial, sep: &str) {
    for (i, &e) in mono.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(sep);
        }
        out.push_str(&ring.display_name(i));
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            if n == 0 {
                if t.coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if t.coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = String::new();
            push_factors(&mut factors, &self.ring, &t.mono, " ");
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{factors}")?;
            } else {
                write!(f, "{mag} {factors}")?;
            }
        }
        Ok(())
    }
}

fn latex_coeff(mag: &Rational) -> String {
    if mag.is_integer() {
        format!("{}", mag.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

impl Polynomial {
    /// Compact LaTeX form, e.g. `2C_{-5}+2C_{-3}C_{-1}+C_{-2}^{2}`.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            if t.coeff.is_negative() {
                out.push('-');
            } else if n > 0 {
                out.push('+');
            }
            let mut factors = String::new();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                factors.push_str(&self.ring.display_name(i));
                if e > 1 {
                    factors.push_str(&format!("^{{{e}}}"));
                }
            }
            if factors.is_empty() {
                out.push_str(&latex_coeff(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&latex_coeff(&mag));
                }
                out.push_str(&factors);
            }
        }
        out
    }
}

impl fmt::Display for IdealBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} ({} generators)", self.label, self.gens.len())?;
        for (i, g) in self.gens.iter().enumerate() {
            writeln!(f, "g_{} = {}", i + 1, g)?;
        }
        Ok(())
    }
}

/// `align*` block with one `lhs &= poly,` line per entry.
pub fn latex_align<'a, I>(rows: I) -> String
where
    I: IntoIterator<Item = (String, &'a Polynomial)>,
{
    let mut body = String::new();
    let rows: Vec<_> = rows.into_iter().collect();
    let last = rows.len().saturating_sub(1);
    for (n, (lhs, poly)) in rows.into_iter().enumerate() {
        body.push_str(&format!("{lhs} &= {}", poly.latex()));
        body.push_str(if n == last { "\n" } else { ",\\\\\n" });
    }
    format!("\\begin{{align*}}\n{body}\\end{{align*}}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarTable;

    #[test]
    fn display_matches_expected_layout() {
        let ring = VarTable::series_ring(5);
        let f = Polynomial::parse(&ring, "2 C5 + 2 C3 C1 + C2^2").unwrap();
        assert_eq!(f.to_string(), "2 C_{-5} + 2 C_{-3} C_{-1} + C_{-2}^2");
        let g = Polynomial::parse(&ring, "C3 - 1/3 y").unwrap();
        assert_eq!(g.to_string(), "C_{-3} - 1/3 y");
        assert_eq!(Polynomial::zero(&ring).to_string(), "0");
    }

    #[test]
    fn latex_matches_expected_layout() {
        let ring = VarTable::series_ring(5);
        let f = Polynomial::parse(&ring, "2 C5 + 2 C3 C1 + C2^2").unwrap();
        assert_eq!(f.latex(), "2C_{-5}+2C_{-3}C_{-1}+C_{-2}^{2}");
        let g = Polynomial::parse(&ring, "3/2 C1^2 + y").unwrap();
        assert_eq!(g.latex(), "\\frac{3}{2}C_{-1}^{2}+y");
        let h = Polynomial::parse(&ring, "C5 - 1/2 C1^3").unwrap();
        assert_eq!(h.latex(), "C_{-5}-\\frac{1}{2}C_{-1}^{3}");
    }

    #[test]
    fn align_block_shape() {
        let ring = VarTable::series_ring(2);
        let e1 = Polynomial::parse(&ring, "2 C2").unwrap();
        let out = latex_align(vec![("E_{1}".to_string(), &e1)]);
        assert_eq!(out, "\\begin{align*}\nE_{1} &= 2C_{-2}\n\\end{align*}\n");
    }
}
