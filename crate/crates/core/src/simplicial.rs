//! Simplicial complexes given by facets, f/h-vector transforms, links, and
//! the identities tying the derivative of f and h to the links of faces.
//!
//! Faces are vertex bitmasks, so a complex may have at most 64 vertices.
//! Faces are enumerated on demand from the facets.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::ftypesum_gamma;
use crate::error::{Error, Result};
use crate::rational::{binomial, binomial_q, is_integer, serde_rational_vec, sign_power, Rational};
use crate::series::Polynomial;

pub type Face = u64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Face>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub facets: Vec<Vec<String>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`. Facets contained in other
    /// facets are dropped; an empty list gives the complex `{∅}`.
    pub fn from_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let labels: BTreeSet<String> = facets
            .iter()
            .flatten()
            .map(|s| s.as_ref().to_string())
            .collect();
        if labels.len() > 64 {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let vertices: Vec<String> = labels.into_iter().collect();
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let masks = facets
            .iter()
            .map(|f| f.iter().fold(0u64, |m, v| m | 1 << index[v.as_ref()]))
            .collect();
        Ok(SimplicialComplex {
            vertices,
            facets: maximal(masks),
        })
    }

    fn from_masks(vertices: Vec<String>, masks: Vec<Face>) -> Self {
        SimplicialComplex {
            vertices,
            facets: maximal(masks),
        }
    }

    /// Boundary of the simplex on `n` vertices labelled `1..=n`.
    pub fn simplex_boundary(n: usize) -> Self {
        let full: Face = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let masks = (0..n).map(|v| full & !(1 << v)).collect();
        Self::from_masks((1..=n).map(|i| i.to_string()).collect(), masks)
    }

    /// Boundary of the `d`-dimensional cross-polytope: vertices `±1..±d`,
    /// facets pick one of each antipodal pair.
    pub fn cross_polytope_boundary(d: usize) -> Self {
        let mut vertices = Vec::with_capacity(2 * d);
        for i in 1..=d {
            vertices.push(format!("+{i}"));
            vertices.push(format!("-{i}"));
        }
        let masks = (0..1u64 << d)
            .map(|choice| (0..d).fold(0u64, |m, i| m | 1 << (2 * i + ((choice >> i) & 1) as usize)))
            .collect();
        Self::from_masks(vertices, masks)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            facets: self.facets.iter().map(|&f| self.labels(f)).collect(),
        }
    }

    pub fn labels(&self, face: Face) -> Vec<String> {
        (0..self.vertices.len())
            .filter(|&i| face >> i & 1 == 1)
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    fn mask_of<S: AsRef<str>>(&self, face: &[S]) -> Option<Face> {
        face.iter().try_fold(0u64, |m, v| {
            self.vertices
                .iter()
                .position(|x| x == v.as_ref())
                .map(|i| m | 1 << i)
        })
    }

    /// `d = dimension + 1`, the size of the largest facet.
    pub fn d(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// All faces including the empty one, in increasing mask order.
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        out.insert(0);
        for &f in &self.facets {
            // enumerate submasks of f
            let mut sub = f;
            loop {
                out.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        out
    }

    pub fn faces_of_size(&self, k: usize) -> Vec<Face> {
        self.faces()
            .into_iter()
            .filter(|f| f.count_ones() as usize == k)
            .collect()
    }

    /// `{G : F ∪ G ∈ K, F ∩ G = ∅}`, on the same vertex labels.
    pub fn link_mask(&self, face: Face) -> Result<Self> {
        if !self.is_face(face) {
            return Err(Error::NotAFace {
                face: self.labels(face),
            });
        }
        let masks = self
            .facets
            .iter()
            .filter(|&&f| f & face == face)
            .map(|&f| f & !face)
            .collect();
        Ok(Self::from_masks(self.vertices.clone(), masks))
    }

    /// `(f_{-1}, f_0, ..., f_{d-1})` as integers.
    pub fn face_counts(&self) -> Vec<usize> {
        let d = self.d();
        let mut counts = vec![0usize; d + 1];
        for f in self.faces() {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }

    /// `f_K(t) = sum_i f_{i-1} t^i`, padded to formal degree `degree`.
    pub fn f_polynomial(&self, degree: usize) -> Polynomial {
        let coeffs = self
            .face_counts()
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        Polynomial::new(coeffs, degree).expect("face sizes bounded by degree")
    }
}

fn maximal(mut masks: Vec<Face>) -> Vec<Face> {
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut kept: Vec<Face> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    if kept.is_empty() {
        kept.push(0);
    }
    kept.sort_unstable();
    kept
}

impl TryFrom<&ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(j: &ComplexJson) -> Result<Self> {
        SimplicialComplex::from_facets(&j.facets)
    }
}

/// Face vector `(f_{-1}, ..., f_{L-1})` with its h-vector for parameter `d`.
///
/// Genuine vectors have `f_{-1} = 1` and `L = d + 1`. Formal vectors allow any
/// empty-face entry and any length; the transform is then applied linearly
/// with generalized binomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FHVectors {
    #[serde(with = "serde_rational_vec")]
    pub f: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub h: Vec<Rational>,
    pub d: i64,
    pub formal: bool,
}

impl FHVectors {
    /// Genuine vectors from `(f_{-1}, ..., f_{d-1})`; `d = f.len() - 1`.
    pub fn from_f(f: Vec<Rational>) -> Result<Self> {
        if f.is_empty() || !f[0].is_one() {
            return Err(Error::Domain(
                "a genuine f-vector starts with f_{-1} = 1; use FHVectors::formal".into(),
            ));
        }
        let d = f.len() as i64 - 1;
        let h = h_from_f(&f, d);
        Ok(FHVectors {
            f,
            h,
            d,
            formal: false,
        })
    }

    /// Formal vectors: any `f_{-1}` and any length.
    pub fn formal(f: Vec<Rational>, d: i64) -> Self {
        assert!(!f.is_empty(), "need at least the f_{{-1}} slot");
        let h = h_from_f(&f, d);
        FHVectors {
            f,
            h,
            d,
            formal: true,
        }
    }

    /// Inverts the transform from `(h_0, ..., h_{L-1})`.
    pub fn from_h(h: Vec<Rational>, d: i64) -> Self {
        assert!(!h.is_empty(), "need at least h_0");
        let f = f_from_h(&h, d);
        let formal = !(f[0].is_one() && f.len() as i64 == d + 1);
        FHVectors { f, h, d, formal }
    }

    /// `f_{i-1}` for slot `i` (so `f_slot(0)` is the empty face).
    pub fn f_slot(&self, i: usize) -> Rational {
        self.f.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn h_at(&self, j: usize) -> Rational {
        self.h.get(j).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `h_j = sum_{i <= j} (-1)^{j-i} binom(d - i, j - i) f_{i-1}`.
pub fn h_from_f(f: &[Rational], d: i64) -> Vec<Rational> {
    (0..f.len())
        .map(|j| {
            (0..=j).fold(Rational::zero(), |acc, i| {
                let c = binomial(d - i as i64, (j - i) as i64) * sign_power((j - i) as i64);
                acc + &f[i] * Rational::from_integer(c)
            })
        })
        .collect()
}

/// `f_{j-1} = sum_{i <= j} binom(d - i, j - i) h_i`.
pub fn f_from_h(h: &[Rational], d: i64) -> Vec<Rational> {
    (0..h.len())
        .map(|j| {
            (0..=j).fold(Rational::zero(), |acc, i| {
                acc + &h[i] * binomial_q(d - i as i64, (j - i) as i64)
            })
        })
        .collect()
}

pub fn f_vector(k: &SimplicialComplex) -> FHVectors {
    let f = k
        .face_counts()
        .into_iter()
        .map(|c| Rational::from_integer(c.into()))
        .collect();
    FHVectors::from_f(f).expect("every complex contains the empty face")
}

/// h-polynomial of `k` for parameter `d` (which may exceed `k.d()`).
fn h_polynomial(k: &SimplicialComplex, d: usize) -> Polynomial {
    let f = k.f_polynomial(d).into_coeffs();
    Polynomial::from_coeffs(h_from_f(&f, d as i64))
}

/// Link of the face with the given vertex labels.
pub fn link<S: AsRef<str>>(k: &SimplicialComplex, face: &[S]) -> Result<SimplicialComplex> {
    let mask = k.mask_of(face).ok_or_else(|| Error::NotAFace {
        face: face.iter().map(|s| s.as_ref().to_string()).collect(),
    })?;
    k.link_mask(mask)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    /// Which identity failed.
    pub identity: String,
    /// Face size for the f-identity; absent for h-identities.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub coefficient: usize,
    #[serde(with = "crate::rational::serde_rational")]
    pub lhs: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityReport {
    fn from_mismatch(first_mismatch: Option<Mismatch>) -> Self {
        IdentityReport {
            holds: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

fn first_difference(
    identity: &str,
    k: Option<usize>,
    lhs: &Polynomial,
    rhs: &Polynomial,
) -> Option<Mismatch> {
    let len = lhs.formal_degree().max(rhs.formal_degree());
    (0..=len).find_map(|i| {
        let (a, b) = (lhs.coeff(i), rhs.coeff(i));
        (a != b).then(|| Mismatch {
            identity: identity.to_string(),
            k,
            coefficient: i,
            lhs: a,
            rhs: b,
        })
    })
}

/// For every `k <= d`, compares `sum_{|F| = k} f_{lk F}(t)` with
/// `f_K^{(k)}(t) / k!`.
pub fn verify_link_f_identity(k: &SimplicialComplex) -> IdentityReport {
    let d = k.d();
    let f_poly = k.f_polynomial(d);
    let mut derivative = f_poly.clone();
    let mut factorial = Rational::one();
    for size in 0..=d {
        if size > 0 {
            derivative = derivative.derivative();
            factorial *= Rational::from_integer(size.into());
        }
        let rhs = derivative.scale(&(Rational::one() / &factorial));
        let mut lhs = Polynomial::zero(d - size);
        for face in k.faces_of_size(size) {
            let lk = k.link_mask(face).expect("enumerated face");
            lhs = &lhs + &lk.f_polynomial(d - size);
        }
        if let Some(m) = first_difference("link_f_sum", Some(size), &lhs, &rhs) {
            return IdentityReport::from_mismatch(Some(m));
        }
    }
    IdentityReport::from_mismatch(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HLinkReport {
    pub holds: bool,
    /// `(1 - w) h'(w) = sum_p h_{lk p}(w) - d h(w)`.
    pub derivative_form: bool,
    /// `(1 - w)((1 + w) h'(w) - d h(w)) = (1 + w) sum_p h_{lk p}(w) - 2d h(w)`.
    pub local_global_form: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

/// Checks the vertex-link identities for the h-polynomial. Links are
/// transformed with parameter `d - 1` regardless of their own dimension.
pub fn verify_h_link_identity(k: &SimplicialComplex) -> HLinkReport {
    let d = k.d();
    let h = h_polynomial(k, d);
    let dh = h.derivative();
    let one_minus = Polynomial::from_ints(&[1, -1]);
    let one_plus = Polynomial::from_ints(&[1, 1]);
    let d_q = Rational::from_integer(d.into());

    let mut link_sum = Polynomial::zero(d.saturating_sub(1));
    for v in 0..k.vertices.len() {
        let mask = 1u64 << v;
        if !k.is_face(mask) {
            continue;
        }
        let lk = k.link_mask(mask).expect("vertex is a face");
        link_sum = &link_sum + &h_polynomial(&lk, d - 1);
    }

    let lhs1 = &one_minus * &dh;
    let rhs1 = &link_sum - &h.scale(&d_q);
    let m1 = first_difference("h_link_derivative", None, &lhs1, &rhs1);

    let numerator = &(&one_plus * &dh) - &h.scale(&d_q);
    let lhs2 = &one_minus * &numerator;
    let rhs2 = &(&one_plus * &link_sum) - &h.scale(&(d_q.clone() + d_q));
    let m2 = first_difference("h_link_local_global", None, &lhs2, &rhs2);

    HLinkReport {
        holds: m1.is_none() && m2.is_none(),
        derivative_form: m1.is_none(),
        local_global_form: m2.is_none(),
        first_mismatch: m1.or(m2),
    }
}

/// `f_i >= binom(d, i + 1)` for `0 <= i <= d - 1`: the f-vectors of
/// simplicial posets of dimension `d - 1`.
pub fn fhex_realizable(f: &FHVectors) -> Result<bool> {
    if f.formal || !f.f[0].is_one() {
        return Err(Error::Domain(
            "realizability needs a genuine f-vector with f_{-1} = 1".into(),
        ));
    }
    Ok(fhex_violations(f)?.is_empty())
}

/// Indices `i` (of `f_i`) that fall below `binom(d, i + 1)`. Formal vectors
/// are checked on their nonnegative-index slots up to `f_{d-1}`.
pub fn fhex_violations(f: &FHVectors) -> Result<Vec<usize>> {
    if let Some(bad) = f.f.iter().position(|x| !is_integer(x)) {
        return Err(Error::Domain(format!(
            "f-vector slot {bad} is not an integer"
        )));
    }
    let top = (f.d.max(0) as usize).min(f.f.len().saturating_sub(1));
    Ok((0..top)
        .filter(|&i| f.f[i + 1] < binomial_q(f.d, i as i64 + 1))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AuxVariant {
    Part1,
    Part2,
}

/// `r gamma_r` of `B` split into h- and f-numbers of two formal auxiliary
/// vectors of dimension `d - r - 2` (transform parameter `d - r - 1`).
///
/// Part 1: `r gamma_r = h_r(P) - f_{r-1}(P) - d h_{r-1}(Q) + correction`;
/// part 2: `r gamma_r = -h_{r-1}(R) - d h_{r-1}(S) + correction`.
/// The correction collects the constant binomial term and the `k = r` term
/// `r b_r` of the first sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxDecomposition {
    pub variant: AuxVariant,
    pub d: usize,
    pub r: usize,
    /// P (part 1) or R (part 2).
    pub first: FHVectors,
    /// Q (part 1) or S (part 2).
    pub second: FHVectors,
    #[serde(with = "crate::rational::serde_rational")]
    pub correction: Rational,
    /// `r gamma_r` recombined from the pieces above.
    #[serde(with = "crate::rational::serde_rational")]
    pub r_gamma_r: Rational,
    /// The fhex bounds hold on the nonnegative-index slots of both vectors.
    pub realizable: bool,
}

impl AuxDecomposition {
    pub fn recombine(&self) -> Rational {
        let d = Rational::from_integer(self.d.into());
        let r = self.r;
        match self.variant {
            AuxVariant::Part1 => {
                self.first.h_at(r) - self.first.f_slot(r) - d * self.second.h_at(r - 1)
                    + &self.correction
            }
            AuxVariant::Part2 => {
                -self.first.h_at(r - 1) - d * self.second.h_at(r - 1) + &self.correction
            }
        }
    }
}

pub fn gamauxpo_decompose(
    b: &[Rational],
    d: usize,
    r: usize,
    variant: AuxVariant,
) -> Result<AuxDecomposition> {
    if r == 0 || 2 * r > d {
        return Err(Error::Index {
            index: r as i64,
            reason: format!("auxiliary decomposition needs 1 <= r <= d/2 = {}", d / 2),
        });
    }
    if b.len() > d + 1 {
        return Err(Error::DegreeOverflow {
            len: b.len(),
            formal_degree: d,
        });
    }
    let coeff = |k: usize| b.get(k).cloned().unwrap_or_else(Rational::zero);
    let q = |x: i64| Rational::from_integer(x.into());
    let dim_param = d as i64 - r as i64 - 1;
    let sign_r = q(sign_power(r as i64));
    let top_term = q(r as i64) * coeff(r);

    // Q / S: f_{k-1} = b_k for 0 <= k <= r - 1, with b_0 in the empty-face slot
    let second = FHVectors::formal((0..r).map(coeff).collect(), dim_param);

    let (first, correction) = match variant {
        AuxVariant::Part1 => {
            let mut f = vec![Rational::one()];
            f.extend((1..r).map(|k| q(k as i64) * coeff(k)));
            // the top slot cancels; pick the fhex lower bound
            f.push(binomial_q(dim_param, r as i64));
            let correction = top_term - &sign_r * binomial_q(dim_param, r as i64);
            (FHVectors::formal(f, dim_param), correction)
        }
        AuxVariant::Part2 => {
            let mut f = vec![Rational::one()];
            for k in 1..r {
                let scaled = q(k as i64) * coeff(k);
                let quotient = &scaled / q((r - k) as i64);
                if !is_integer(&quotient) {
                    return Err(Error::Hypothesis {
                        index: k,
                        reason: format!("r - k = {} does not divide k b_k = {}", r - k, scaled),
                    });
                }
                // binom(D - k, r - k) = binom(D - k, r - k - 1) (d - 2r) / (r - k)
                f.push(quotient * q(d as i64 - 2 * r as i64));
            }
            let correction = top_term - &sign_r * binomial_q(dim_param, r as i64 - 1);
            (FHVectors::formal(f, dim_param), correction)
        }
    };

    let realizable = fhex_violations(&first)
        .map(|v| v.is_empty())
        .unwrap_or(false)
        && fhex_violations(&second)
            .map(|v| v.is_empty())
            .unwrap_or(false);
    let mut out = AuxDecomposition {
        variant,
        d,
        r,
        first,
        second,
        correction,
        r_gamma_r: Rational::zero(),
        realizable,
    };
    out.r_gamma_r = out.recombine();
    let expected = ftypesum_gamma(b, d, r)? * q(r as i64);
    assert_eq!(
        out.r_gamma_r, expected,
        "auxiliary decomposition does not recombine to r gamma_r"
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::gamma_extended;
    use crate::rational::{int, ints};

    fn complex(facets: &[&[&str]]) -> SimplicialComplex {
        let v: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(&v).unwrap()
    }

    fn triangle() -> SimplicialComplex {
        complex(&[&["1", "2"], &["1", "3"], &["2", "3"]])
    }

    #[test]
    fn f_vector_examples() {
        let t = f_vector(&triangle());
        assert_eq!(t.f, ints(&[1, 3, 3]));
        assert_eq!(t.h, ints(&[1, 1, 1]));

        let v = f_vector(&complex(&[&["a"]]));
        assert_eq!(v.f, ints(&[1, 1]));
        assert_eq!(v.h, ints(&[1, 0]));

        let tet = f_vector(&SimplicialComplex::simplex_boundary(4));
        assert_eq!(tet.f, ints(&[1, 4, 6, 4]));
        assert_eq!(tet.h, ints(&[1, 1, 1, 1]));

        let edge = f_vector(&complex(&[&["1", "2"]]));
        assert_eq!(edge.h, ints(&[1, 0, 0]));
    }

    #[test]
    fn cross_polytope_h_vector() {
        // octahedron: h = (1, 3, 3, 1)
        let oct = f_vector(&SimplicialComplex::cross_polytope_boundary(3));
        assert_eq!(oct.f, ints(&[1, 6, 12, 8]));
        assert_eq!(oct.h, ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn non_maximal_facets_are_dropped() {
        let k = complex(&[&["1", "2", "3"], &["1", "2"], &["4"]]);
        assert_eq!(k.facets().len(), 2);
        assert_eq!(
            SimplicialComplex::from_facets::<&str>(&[])
                .unwrap()
                .faces()
                .len(),
            1
        );
    }

    #[test]
    fn link_examples() {
        let t = triangle();
        let lk = link(&t, &["1"]).unwrap();
        assert_eq!(
            lk.to_json().facets,
            vec![vec!["2".to_string()], vec!["3".to_string()]]
        );

        let lk = link::<&str>(&t, &[]).unwrap();
        assert_eq!(lk, t);

        let tet = SimplicialComplex::simplex_boundary(4);
        let lk = link(&tet, &["1"]).unwrap();
        assert_eq!(
            lk.to_json().facets,
            vec![vec!["2", "3"], vec!["2", "4"], vec!["3", "4"]]
                .into_iter()
                .map(|f| f.into_iter().map(String::from).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );
        assert_eq!(f_vector(&lk).f, ints(&[1, 3, 3]));
    }

    #[test]
    fn link_of_non_face_is_rejected() {
        let t = triangle();
        assert!(matches!(
            link(&t, &["1", "2", "3"]),
            Err(Error::NotAFace { .. })
        ));
        assert!(matches!(link(&t, &["9"]), Err(Error::NotAFace { .. })));
    }

    #[test]
    fn link_identities_on_examples() {
        for k in [
            triangle(),
            SimplicialComplex::simplex_boundary(4),
            complex(&[&["1", "2"]]),
            complex(&[&["1", "2"], &["3"]]),
            complex(&[]),
            SimplicialComplex::cross_polytope_boundary(3),
        ] {
            assert!(verify_link_f_identity(&k).holds, "{k:?}");
            let r = verify_h_link_identity(&k);
            assert!(r.holds && r.derivative_form && r.local_global_form, "{k:?}");
        }
    }

    #[test]
    fn h_link_identity_triangle_by_hand() {
        // (1 - w)(1 + 2w) = 3(1 + w) - 2(1 + w + w^2)
        let lhs = &Polynomial::from_ints(&[1, -1]) * &Polynomial::from_ints(&[1, 2]);
        let rhs = &Polynomial::from_ints(&[3, 3]) - &Polynomial::from_ints(&[2, 2, 2]);
        assert_eq!(lhs.coeffs(), rhs.coeffs());
    }

    #[test]
    fn transform_round_trip() {
        let f = ints(&[3, -2, 7, 0, 5]);
        let v = FHVectors::formal(f.clone(), 2);
        assert_eq!(f_from_h(&v.h, 2), f);
        let back = FHVectors::from_h(v.h.clone(), 2);
        assert_eq!(back.f, f);
        assert!(back.formal);
    }

    #[test]
    fn fhex_examples() {
        assert!(fhex_realizable(&FHVectors::from_f(ints(&[1, 3, 3])).unwrap()).unwrap());
        assert!(!fhex_realizable(&FHVectors::from_f(ints(&[1, 1, 0])).unwrap()).unwrap());
        for n in 2..8 {
            let f = f_vector(&SimplicialComplex::simplex_boundary(n));
            assert!(fhex_realizable(&f).unwrap());
        }
        let bad = FHVectors::from_f(vec![int(1), Rational::new(3.into(), 2.into())]).unwrap();
        assert!(fhex_realizable(&bad).is_err());
        assert!(fhex_realizable(&FHVectors::formal(ints(&[2, 5]), 1)).is_err());
    }

    fn r_gamma(b: &[i64], d: usize, r: usize) -> Rational {
        let h = Polynomial::new(ints(b), d).unwrap();
        gamma_extended(&h, r).entries[r].clone() * int(r as i64)
    }

    #[test]
    fn aux_examples() {
        let zero = vec![Rational::zero(); 7];
        for r in 1..=3 {
            for variant in [AuxVariant::Part1, AuxVariant::Part2] {
                let a = gamauxpo_decompose(&zero, 6, r, variant).unwrap();
                assert_eq!(a.r_gamma_r, int(0));
            }
        }
        let a = gamauxpo_decompose(&ints(&[3, 3, 1]), 2, 1, AuxVariant::Part1).unwrap();
        assert_eq!(a.r_gamma_r, int(-3));
        assert_eq!(a.r_gamma_r, r_gamma(&[3, 3, 1], 2, 1));
    }

    #[test]
    fn aux_matches_gamma_for_nonnegative_input() {
        let b = [4, 9, 2, 7, 1, 1, 3, 0, 5, 2, 6];
        for r in 1..=5 {
            let a = gamauxpo_decompose(&ints(&b), 10, r, AuxVariant::Part1).unwrap();
            assert_eq!(a.r_gamma_r, r_gamma(&b, 10, r), "r={r}");
        }
    }

    #[test]
    fn aux_part2_divisibility() {
        // r = 3: needs 2 | b_1 and 1 | 2 b_2
        let ok = ints(&[1, 4, 5, 1, 1, 1, 1, 1]);
        let a = gamauxpo_decompose(&ok, 7, 3, AuxVariant::Part2).unwrap();
        assert_eq!(a.r_gamma_r, r_gamma(&[1, 4, 5, 1, 1, 1, 1, 1], 7, 3));
        let bad = ints(&[1, 3, 5, 1, 1, 1, 1, 1]);
        assert!(matches!(
            gamauxpo_decompose(&bad, 7, 3, AuxVariant::Part2),
            Err(Error::Hypothesis { index: 1, .. })
        ));
    }

    #[test]
    fn aux_rejects_bad_index() {
        assert!(gamauxpo_decompose(&ints(&[1, 1, 1]), 2, 2, AuxVariant::Part1).is_err());
        assert!(gamauxpo_decompose(&ints(&[1, 1, 1]), 2, 0, AuxVariant::Part1).is_err());
    }
}
