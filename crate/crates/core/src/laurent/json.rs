//! Serde forms of polynomials, series and matrices. Coefficients travel as
//! decimal strings so big integers survive any JSON reader.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExponentVector, LaurentPoly, Ring, SquareMatrix, TruncatedSeries};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: Vec<i32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n_vars: usize,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    n_vars: usize,
    max_deg: u32,
    terms: Vec<TermRepr>,
}

fn term_reprs<'a>(terms: impl Iterator<Item = (&'a ExponentVector, &'a BigInt)>) -> Vec<TermRepr> {
    terms.map(|(e, c)| TermRepr { e: e.as_slice().to_vec(), c: c.to_string() }).collect()
}

fn parse_terms<E: serde::de::Error>(terms: Vec<TermRepr>) -> Result<Vec<(Vec<i32>, BigInt)>, E> {
    terms
        .into_iter()
        .map(|t| {
            let c: BigInt = t.c.parse().map_err(|_| E::custom(format!("invalid decimal coefficient {:?}", t.c)))?;
            Ok((t.e, c))
        })
        .collect()
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr { n_vars: self.n_vars(), terms: term_reprs(self.terms()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let terms = parse_terms::<D::Error>(repr.terms)?;
        LaurentPoly::from_terms(repr.n_vars, terms).map_err(D::Error::custom)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr { n_vars: self.n_vars(), max_deg: self.max_deg(), terms: term_reprs(self.terms()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        let terms = parse_terms::<D::Error>(repr.terms)?;
        if let Some((e, _)) = terms.iter().find(|(e, _)| e.iter().sum::<i32>() > repr.max_deg as i32) {
            return Err(D::Error::custom(format!("term {e:?} exceeds the truncation degree {}", repr.max_deg)));
        }
        TruncatedSeries::from_terms(repr.n_vars, repr.max_deg, terms).map_err(D::Error::custom)
    }
}

impl<R: Ring + Serialize> Serialize for SquareMatrix<R> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[R]> = self.rows().collect();
        if self.size() == 0 {
            return Vec::<Vec<R>>::new().serialize(s);
        }
        rows.serialize(s)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for SquareMatrix<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<R>>::deserialize(d)?;
        SquareMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}
