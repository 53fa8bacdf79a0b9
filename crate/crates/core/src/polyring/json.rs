//! JSON form of polynomials and bases.
//!
//! A polynomial serializes as `{"vars": [...], "terms": [{"c": "p/q",
//! "e": [..]}, ...]}` with terms in canonical order; a basis as
//! `{"label", "order", "ring", "generators"}`. [`BasisDocument`] is the
//! loose on-disk schema shared by the CLI file formats: a system file adds
//! a `spec` object, a Groebner run adds a `log`.

use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;

use super::{IdealBasis, Monomial, MonomialOrder, Polynomial, Ring, Term, VarTable};

#[derive(Serialize, Deserialize)]
struct TermDto {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialDto {
    vars: Vec<String>,
    terms: Vec<TermDto>,
}

impl From<&Polynomial> for PolynomialDto {
    fn from(p: &Polynomial) -> Self {
        PolynomialDto {
            vars: p.ring().names().to_vec(),
            terms: p
                .terms()
                .iter()
                .map(|t| TermDto { c: t.coeff.to_string(), e: t.mono.exps().to_vec() })
                .collect(),
        }
    }
}

impl PolynomialDto {
    fn into_polynomial(self, ring: &Ring) -> Result<Polynomial, String> {
        if self.vars != ring.names() {
            return Err(format!(
                "polynomial variables {:?} do not match ring {:?}",
                self.vars,
                ring.names()
            ));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            if t.e.len() != ring.len() {
                return Err(format!("exponent vector of length {} in ring of rank {}", t.e.len(), ring.len()));
            }
            let coeff: Rational = t.c.parse().map_err(|e| format!("{e}"))?;
            terms.push(Term { coeff, mono: Monomial::from_exps(t.e) });
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialDto::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = PolynomialDto::deserialize(deserializer)?;
        let ring = VarTable::shared(dto.vars.clone());
        dto.into_polynomial(&ring).map_err(serde::de::Error::custom)
    }
}

/// On-disk schema for system and basis files.
#[derive(Serialize, Deserialize)]
pub struct BasisDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<crate::laurent::SystemSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default)]
    pub order: MonomialOrder,
    pub ring: Vec<String>,
    pub generators: Vec<Polynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log: Option<crate::groebner::BuchbergerLog>,
}

impl BasisDocument {
    pub fn from_basis(basis: &IdealBasis) -> Self {
        BasisDocument {
            spec: None,
            label: Some(basis.label().to_string()),
            order: basis.order(),
            ring: basis.ring().names().to_vec(),
            generators: basis.gens().to_vec(),
        log: None,
        }
    }

    /// Rebuilds the basis on a single shared ring, checking that every
    /// generator was serialized over the same variables.
    pub fn to_basis(&self) -> Result<IdealBasis, String> {
        let ring = VarTable::shared(self.ring.clone());
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let dto = PolynomialDto::from(g);
            gens.push(dto.into_polynomial(&ring)?);
        }
        let label = self.label.clone().unwrap_or_else(|| "basis".to_string());
        Ok(IdealBasis::new(&ring, label, gens))
    }
}

impl Serialize for IdealBasis {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BasisDocument::from_basis(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IdealBasis {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = BasisDocument::deserialize(deserializer)?;
        doc.to_basis().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_json_shape() {
        let ring = VarTable::series_ring(2);
        let f = Polynomial::parse(&ring, "C2 - 1/2 C1^2").unwrap();
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "vars": ["C2", "C1", "y"],
                "terms": [
                    {"c": "1", "e": [1, 0, 0]},
                    {"c": "-1/2", "e": [0, 2, 0]},
                ],
            })
        );
        let back: Polynomial = serde_json::from_value(json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn basis_roundtrip() {
        let ring = VarTable::series_ring(3);
        let basis = IdealBasis::new(
            &ring,
            "demo",
            vec![
                Polynomial::parse(&ring, "C2").unwrap(),
                Polynomial::parse(&ring, "C3 + 1/2 C1^2").unwrap(),
            ],
        );
        let json = serde_json::to_string(&basis).unwrap();
        let back: IdealBasis = serde_json::from_str(&json).unwrap();
        assert!(back.eq_generators(&basis));
        assert_eq!(back.label(), "demo");
        assert_eq!(back.order(), MonomialOrder::Lex);
    }

    #[test]
    fn mismatched_generator_vars_rejected() {
        let json = serde_json::json!({
            "ring": ["C2", "C1", "y"],
            "generators": [
                {"vars": ["C1", "y"], "terms": [{"c": "1", "e": [1, 0]}]}
            ],
        });
        assert!(serde_json::from_value::<IdealBasis>(json).is_err());
    }
}
