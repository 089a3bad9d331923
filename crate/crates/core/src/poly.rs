//! The free associative algebra with involution, at the level this crate
//! needs it: rational linear combinations of words in tagged variables
//! `y<i>` (symmetric), `z<i>` (skew) and `x<i>` (general).
//!
//! Polynomials are kept canonical: no zero coefficients, and terms ordered
//! by length first, then lexicographically on `(index, parity)`. Canonical
//! order is what makes coefficient vectors of multilinear components well
//! defined across the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::Parity;
use crate::error::{Error, Result};
use crate::rat::{render_rat, Rat};

macro_rules! serialize_as_display {
    ($($ty:ty),*) => {$(
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

/// A tagged variable such as `y3` or `z1`. Indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarRef {
    pub index: u32,
    pub parity: Parity,
}

impl VarRef {
    pub fn new(index: u32, parity: Parity) -> Self {
        debug_assert!(index >= 1);
        VarRef { index, parity }
    }
}

impl PartialOrd for VarRef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VarRef {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.index, self.parity).cmp(&(other.index, other.parity))
    }
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.parity, self.index)
    }
}

/// A nonempty word in tagged variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarMonomial(Vec<VarRef>);

impl StarMonomial {
    pub fn new(factors: Vec<VarRef>) -> Self {
        assert!(!factors.is_empty(), "monomials are nonempty");
        StarMonomial(factors)
    }

    pub fn factors(&self) -> &[VarRef] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, rhs: &StarMonomial) -> StarMonomial {
        let mut f = self.0.clone();
        f.extend_from_slice(&rhs.0);
        StarMonomial(f)
    }
}

impl PartialOrd for StarMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Length first, then lexicographic on `(index, parity)` per factor.
impl Ord for StarMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for StarMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// The parity pattern of the multilinear component of degree `d`:
/// variable `i` carries parity `parities[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature(Vec<Parity>);

impl Signature {
    pub fn new(parities: Vec<Parity>) -> Self {
        assert!(!parities.is_empty(), "signatures have degree >= 1");
        Signature(parities)
    }

    pub fn uniform(parity: Parity, degree: usize) -> Self {
        Self::new(vec![parity; degree])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.0
    }

    pub fn parity_of_index(&self, index: u32) -> Parity {
        self.0[(index - 1) as usize]
    }

    /// Renders as in the grammar: `y,z,x`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        parts.join(",")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut parities = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let mut chars = part.chars();
            match (chars.next().and_then(Parity::from_letter), chars.next()) {
                (Some(p), None) => parities.push(p),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "bad parity `{part}`; expected one of y, z, x"
                    )))
                }
            }
        }
        if parities.is_empty() {
            return Err(Error::InvalidInput("empty signature".into()));
        }
        Ok(Signature(parities))
    }

    /// All `{Y,Z}` signatures of the given degree, in lexicographic order
    /// with `Y < Z`.
    pub fn all_yz_of_degree(degree: usize) -> Vec<Signature> {
        assert!(degree >= 1);
        let mut out = Vec::with_capacity(1 << degree);
        for mask in 0..(1u64 << degree) {
            let parities = (0..degree)
                .map(|i| {
                    if mask >> (degree - 1 - i) & 1 == 0 {
                        Parity::Y
                    } else {
                        Parity::Z
                    }
                })
                .collect();
            out.push(Signature(parities));
        }
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A rational linear combination of monomials, canonical by construction.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StarPolynomial {
    terms: BTreeMap<StarMonomial, Rat>,
}

impl StarPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(mono: StarMonomial, coeff: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn variable(var: VarRef) -> Self {
        Self::from_term(StarMonomial::new(vec![var]), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&StarMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &StarMonomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `coeff * mono`, dropping the term if the sum cancels.
    pub fn add_term(&mut self, mono: StarMonomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &StarPolynomial) -> StarPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &StarPolynomial) -> StarPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> StarPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        StarPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> StarPolynomial {
        StarPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), -v)).collect(),
        }
    }

    /// Noncommutative product, expanding term by term.
    pub fn mul(&self, rhs: &StarPolynomial) -> StarPolynomial {
        let mut out = Self::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.concat(mb), ca * cb);
            }
        }
        out
    }

    /// The commutator `self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &StarPolynomial) -> StarPolynomial {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Every variable occurring, deduplicated, in canonical order.
    pub fn variables(&self) -> Vec<VarRef> {
        let mut vars: Vec<VarRef> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().copied())
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Decides multilinearity: true iff there is a degree `d` such that
    /// every monomial uses each index `1..=d` exactly once and each index
    /// has the same parity in every occurrence. Returns the degree and the
    /// signature.
    pub fn multilinear_signature(&self) -> Option<(usize, Signature)> {
        let first = self.terms.keys().next()?;
        let d = first.degree();
        let mut parities: Vec<Option<Parity>> = vec![None; d];
        for mono in self.terms.keys() {
            if mono.degree() != d {
                return None;
            }
            let mut seen = vec![false; d];
            for v in mono.factors() {
                let idx = v.index as usize;
                if idx < 1 || idx > d || seen[idx - 1] {
                    return None;
                }
                seen[idx - 1] = true;
                match parities[idx - 1] {
                    None => parities[idx - 1] = Some(v.parity),
                    Some(p) if p == v.parity => {}
                    Some(_) => return None,
                }
            }
        }
        let parities: Option<Vec<Parity>> = parities.into_iter().collect();
        Some((d, Signature::new(parities?)))
    }

    /// Detects `c * St_d` with a uniform parity: multilinear, `d!` terms,
    /// every coefficient `c * sign`. The alternating-combinations check is
    /// only sound for such polynomials.
    pub fn as_scaled_standard(&self) -> Option<(usize, Parity, Rat)> {
        let (d, sig) = self.multilinear_signature()?;
        let parity = sig.parities()[0];
        if sig.parities().iter().any(|&p| p != parity) {
            return None;
        }
        if self.term_count() != factorial_checked(d)? {
            return None;
        }
        let ident = StarMonomial::new((1..=d as u32).map(|i| VarRef::new(i, parity)).collect());
        let c = self.terms.get(&ident)?.clone();
        for (mono, coeff) in self.terms() {
            let perm: Vec<usize> = mono.factors().iter().map(|v| v.index as usize - 1).collect();
            let expected = if permutation_sign(&perm) > 0 { c.clone() } else { -c.clone() };
            if *coeff != expected {
                return None;
            }
        }
        Some((d, parity, c))
    }

    /// Renders in the text grammar; `parse` inverts this exactly.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (mono, coeff)) in self.terms().enumerate() {
            let neg = coeff < &Rat::zero();
            let abs = if neg { -coeff } else { coeff.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&render_rat(&abs));
                out.push('*');
            }
            out.push_str(&mono.to_string());
        }
        out
    }
}

impl fmt::Display for StarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

serialize_as_display!(VarRef, StarMonomial, Signature, StarPolynomial);

/// The standard polynomial of degree `d`: the signed sum over all
/// permutations of `d` variables, variable `i` tagged with `sig[i-1]`.
pub fn standard_poly(sig: &Signature) -> StarPolynomial {
    let d = sig.degree();
    let mut p = StarPolynomial::zero();
    for_each_permutation(d, |perm, sign| {
        let factors = perm
            .iter()
            .map(|&i| VarRef::new(i as u32 + 1, sig.parities()[i]))
            .collect();
        p.add_term(
            StarMonomial::new(factors),
            if sign > 0 { Rat::one() } else { -Rat::one() },
        );
    });
    p
}

/// Calls `f` with every permutation of `0..d` and its sign.
pub fn for_each_permutation(d: usize, mut f: impl FnMut(&[usize], i32)) {
    let mut perm: Vec<usize> = (0..d).collect();
    loop {
        f(&perm, permutation_sign(&perm));
        // Lexicographic successor.
        let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return;
        };
        let j = (i + 1..d).rev().find(|&j| perm[j] > perm[i]).expect("successor exists");
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Sign of a permutation of `0..n` by inversion count.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn factorial_checked(d: usize) -> Option<usize> {
    let mut acc = 1usize;
    for i in 2..=d {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

/// `d!` as u64; panics past u64 range (degrees that large are rejected by
/// budgets long before this is reached).
pub fn factorial(d: usize) -> u64 {
    let mut acc = 1u64;
    for i in 2..=d as u64 {
        acc = acc.checked_mul(i).expect("factorial overflow");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn y(i: u32) -> VarRef {
        VarRef::new(i, Parity::Y)
    }

    fn z(i: u32) -> VarRef {
        VarRef::new(i, Parity::Z)
    }

    #[test]
    fn monomial_order_is_length_then_lex() {
        let a = StarMonomial::new(vec![z(1), z(2)]);
        let b = StarMonomial::new(vec![z(2), z(1)]);
        let c = StarMonomial::new(vec![z(1)]);
        assert!(c < a);
        assert!(a < b);
        let yz = StarMonomial::new(vec![y(1), z(1)]);
        let zy = StarMonomial::new(vec![z(1), y(1)]);
        assert!(yz < zy, "parity breaks ties with y < z");
    }

    #[test]
    fn standard_poly_small_cases() {
        let st2 = standard_poly(&Signature::uniform(Parity::Z, 2));
        assert_eq!(st2.render(), "z1*z2 - z2*z1");

        let st1 = standard_poly(&Signature::uniform(Parity::Y, 1));
        assert_eq!(st1.render(), "y1");

        let st4 = standard_poly(&Signature::uniform(Parity::X, 4));
        assert_eq!(st4.term_count(), 24);
        let m = StarMonomial::new(vec![
            VarRef::new(2, Parity::X),
            VarRef::new(1, Parity::X),
            VarRef::new(3, Parity::X),
            VarRef::new(4, Parity::X),
        ]);
        assert_eq!(st4.coefficient(&m), rat_int(-1));
    }

    #[test]
    fn term_count_is_factorial_up_to_six() {
        for d in 1..=6 {
            let st = standard_poly(&Signature::uniform(Parity::X, d));
            assert_eq!(st.term_count() as u64, factorial(d));
        }
    }

    #[test]
    fn multilinear_signature_detection() {
        let st3 = standard_poly(&Signature::uniform(Parity::Z, 3));
        assert_eq!(
            st3.multilinear_signature(),
            Some((3, Signature::uniform(Parity::Z, 3)))
        );

        // Repeated index.
        let sq = StarPolynomial::from_term(StarMonomial::new(vec![y(1), y(1)]), Rat::one());
        assert_eq!(sq.multilinear_signature(), None);

        // Inconsistent parity for index 1.
        let mut p = StarPolynomial::from_term(StarMonomial::new(vec![y(1), z(2)]), Rat::one());
        p.add_term(StarMonomial::new(vec![z(1), y(2)]), Rat::one());
        assert_eq!(p.multilinear_signature(), None);
    }

    #[test]
    fn scaled_standard_detection() {
        let st3 = standard_poly(&Signature::uniform(Parity::Z, 3));
        let (d, parity, c) = st3.scale(&rat_int(-5)).as_scaled_standard().unwrap();
        assert_eq!((d, parity, c), (3, Parity::Z, rat_int(-5)));

        // A commutator of distinct parities is not a uniform standard polynomial.
        let p = StarPolynomial::variable(y(1)).commutator(&StarPolynomial::variable(z(2)));
        assert!(p.as_scaled_standard().is_none());

        // Breaking one sign disqualifies it.
        let mut broken = standard_poly(&Signature::uniform(Parity::Z, 3));
        broken.add_term(StarMonomial::new(vec![z(2), z(1), z(3)]), rat_int(2));
        assert!(broken.as_scaled_standard().is_none());
    }

    #[test]
    fn yz_signatures_enumerate_in_order() {
        let sigs = Signature::all_yz_of_degree(2);
        let rendered: Vec<String> = sigs.iter().map(|s| s.render()).collect();
        assert_eq!(rendered, ["y,y", "y,z", "z,y", "z,z"]);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = StarPolynomial::from_term(StarMonomial::new(vec![y(1)]), rat_int(2));
        p.add_term(StarMonomial::new(vec![y(1)]), rat_int(-2));
        assert!(p.is_zero());
        assert_eq!(p.render(), "0");
    }
}
