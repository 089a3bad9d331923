//! Finite-dimensional *-simple algebras over the rationals.
//!
//! Three families are supported, written `t:<n>`, `s:<even n>` and `ex:<k>`
//! in descriptors:
//!
//! - `t:n` — `n x n` matrices with the transpose involution;
//! - `s:2k` — `2k x 2k` matrices with the symplectic involution
//!   `a ^s = T a^t T^{-1}`, `T = sum_i (e_{i,i+k} - e_{i+k,i})`, computed
//!   blockwise as `(R S; P Q)^s = (Q^t -S^t; -P^t R^t)`;
//! - `ex:k` — pairs `(A, B)` of `k x k` matrices where the second
//!   coordinate multiplies in the opposite order and the involution swaps
//!   the coordinates.
//!
//! Every algebra carries precomputed ordered bases of its symmetric part
//! (`Y`), its skew part (`Z`) and the whole space (`X`); identity checking
//! reduces to substitutions from these bases.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::SubspaceBasis;
use crate::matrix::RatMatrix;
use crate::rat::{rat, Rat};

/// Which part of the algebra a variable ranges over: the symmetric part,
/// the skew part, or the whole algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Parity {
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "x")]
    X,
}

impl Parity {
    pub fn letter(self) -> char {
        match self {
            Parity::Y => 'y',
            Parity::Z => 'z',
            Parity::X => 'x',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'y' => Some(Parity::Y),
            'z' => Some(Parity::Z),
            'x' => Some(Parity::X),
            _ => None,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The involution type together with the algebra size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvolutionKind {
    /// `M_n` with transpose.
    Transpose(usize),
    /// `M_n`, `n` even, with the symplectic involution.
    Symplectic(usize),
    /// `M_k + M_k^op` with the exchange involution.
    Exchange(usize),
}

impl InvolutionKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            InvolutionKind::Transpose(n) | InvolutionKind::Exchange(n) if n >= 1 => Ok(()),
            InvolutionKind::Symplectic(n) if n >= 2 && n % 2 == 0 => Ok(()),
            InvolutionKind::Symplectic(n) => Err(Error::BadDescriptor {
                text: format!("s:{n}"),
                message: "symplectic size must be even and >= 2".into(),
            }),
            _ => Err(Error::BadDescriptor {
                text: format!("{self}"),
                message: "size must be >= 1".into(),
            }),
        }
    }

    /// Side length of the matrices elements are made of (`k` for `ex:k`).
    pub fn matrix_size(&self) -> usize {
        match *self {
            InvolutionKind::Transpose(n) | InvolutionKind::Symplectic(n) => n,
            InvolutionKind::Exchange(k) => k,
        }
    }

    /// Linear dimension of the algebra.
    pub fn dim(&self) -> usize {
        match *self {
            InvolutionKind::Transpose(n) | InvolutionKind::Symplectic(n) => n * n,
            InvolutionKind::Exchange(k) => 2 * k * k,
        }
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InvolutionKind::Transpose(n) => write!(f, "t:{n}"),
            InvolutionKind::Symplectic(n) => write!(f, "s:{n}"),
            InvolutionKind::Exchange(k) => write!(f, "ex:{k}"),
        }
    }
}

impl FromStr for InvolutionKind {
    type Err = Error;

    /// Parses the descriptor grammar `t:<n> | s:<even n> | ex:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::BadDescriptor {
            text: s.to_string(),
            message: message.to_string(),
        };
        let (tag, size) = s.split_once(':').ok_or_else(|| bad("expected `<kind>:<size>`"))?;
        let size: usize = size.trim().parse().map_err(|_| bad("size is not a number"))?;
        let kind = match tag.trim() {
            "t" => InvolutionKind::Transpose(size),
            "s" => InvolutionKind::Symplectic(size),
            "ex" => InvolutionKind::Exchange(size),
            _ => return Err(bad("kind must be one of t, s, ex")),
        };
        kind.validate()?;
        Ok(kind)
    }
}

/// An element of a *-simple algebra: a square matrix, or an ordered pair of
/// matrices for the exchange case.
#[derive(Clone, PartialEq, Eq)]
pub enum Element {
    Matrix(RatMatrix),
    Pair(RatMatrix, RatMatrix),
}

impl Element {
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Matrix(m) => m.is_zero(),
            Element::Pair(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Element {
        match self {
            Element::Matrix(m) => Element::Matrix(m.scale(c)),
            Element::Pair(a, b) => Element::Pair(a.scale(c), b.scale(c)),
        }
    }

    /// The underlying matrix; panics on pair elements.
    pub fn matrix(&self) -> &RatMatrix {
        match self {
            Element::Matrix(m) => m,
            Element::Pair(..) => panic!("pair element where a matrix was expected"),
        }
    }

    /// The underlying pair; panics on matrix elements.
    pub fn pair(&self) -> (&RatMatrix, &RatMatrix) {
        match self {
            Element::Pair(a, b) => (a, b),
            Element::Matrix(_) => panic!("matrix element where a pair was expected"),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Element::Matrix(m) => m.render(),
            Element::Pair(a, b) => format!("({}, {})", a.render(), b.render()),
        }
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        match (self, rhs) {
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a + b),
            (Element::Pair(a, b), Element::Pair(c, d)) => Element::Pair(a + c, b + d),
            _ => panic!("mixed element variants"),
        }
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        match (self, rhs) {
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a - b),
            (Element::Pair(a, b), Element::Pair(c, d)) => Element::Pair(a - c, b - d),
            _ => panic!("mixed element variants"),
        }
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        match self {
            Element::Matrix(a) => Element::Matrix(-a),
            Element::Pair(a, b) => Element::Pair(-a, -b),
        }
    }
}

/// Matrices serialize as nested entry arrays; pairs as
/// `{"first": ..., "second": ...}`.
impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Matrix(m) => m.serialize(serializer),
            Element::Pair(a, b) => {
                let mut s = serializer.serialize_struct("Pair", 2)?;
                s.serialize_field("first", a)?;
                s.serialize_field("second", b)?;
                s.end()
            }
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A *-simple algebra with precomputed `Y`/`Z`/`X` bases.
///
/// Construction is the only place bases are computed; afterwards the value
/// is immutable and safe to share read-only across worker threads.
#[derive(Clone, Debug)]
pub struct StarAlgebra {
    kind: InvolutionKind,
    x_basis: Vec<Element>,
    y_basis: Vec<Element>,
    z_basis: Vec<Element>,
}

impl StarAlgebra {
    pub fn new(kind: InvolutionKind) -> Result<Self> {
        kind.validate()?;
        let x_basis = canonical_basis(kind);
        let mut alg = StarAlgebra {
            kind,
            x_basis,
            y_basis: Vec::new(),
            z_basis: Vec::new(),
        };
        alg.y_basis = alg.projected_basis(true);
        alg.z_basis = alg.projected_basis(false);
        Ok(alg)
    }

    pub fn from_descriptor(text: &str) -> Result<Self> {
        Self::new(text.parse()?)
    }

    pub fn descriptor(&self) -> String {
        self.kind.to_string()
    }

    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn matrix_size(&self) -> usize {
        self.kind.matrix_size()
    }

    pub fn y_dim(&self) -> usize {
        self.y_basis.len()
    }

    pub fn z_dim(&self) -> usize {
        self.z_basis.len()
    }

    /// Ordered, deterministic basis of the requested space.
    pub fn space_basis(&self, parity: Parity) -> &[Element] {
        match parity {
            Parity::Y => &self.y_basis,
            Parity::Z => &self.z_basis,
            Parity::X => &self.x_basis,
        }
    }

    pub fn space_dim(&self, parity: Parity) -> usize {
        self.space_basis(parity).len()
    }

    /// True iff `e` has the shape of an element of this algebra.
    pub fn contains(&self, e: &Element) -> bool {
        let n = self.matrix_size();
        match (self.kind, e) {
            (InvolutionKind::Transpose(_) | InvolutionKind::Symplectic(_), Element::Matrix(m)) => {
                m.rows() == n && m.cols() == n
            }
            (InvolutionKind::Exchange(_), Element::Pair(a, b)) => {
                a.rows() == n && a.cols() == n && b.rows() == n && b.cols() == n
            }
            _ => false,
        }
    }

    fn check_member(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "element does not belong to {}",
                self.descriptor()
            )))
        }
    }

    pub fn zero(&self) -> Element {
        let n = self.matrix_size();
        match self.kind {
            InvolutionKind::Exchange(_) => Element::Pair(RatMatrix::zero(n, n), RatMatrix::zero(n, n)),
            _ => Element::Matrix(RatMatrix::zero(n, n)),
        }
    }

    pub fn identity(&self) -> Element {
        let n = self.matrix_size();
        match self.kind {
            InvolutionKind::Exchange(_) => Element::Pair(RatMatrix::identity(n), RatMatrix::identity(n)),
            _ => Element::Matrix(RatMatrix::identity(n)),
        }
    }

    /// Associative bilinear product. The second coordinate of an exchange
    /// pair multiplies in the opposite order.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(self.multiply_unchecked(a, b))
    }

    pub(crate) fn multiply_unchecked(&self, a: &Element, b: &Element) -> Element {
        match (a, b) {
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a * b),
            (Element::Pair(a1, a2), Element::Pair(b1, b2)) => Element::Pair(a1 * b1, b2 * a2),
            _ => unreachable!("members validated"),
        }
    }

    /// The involution: transpose, the symplectic block formula, or the
    /// coordinate swap.
    pub fn involute(&self, a: &Element) -> Result<Element> {
        self.check_member(a)?;
        Ok(self.involute_unchecked(a))
    }

    pub(crate) fn involute_unchecked(&self, a: &Element) -> Element {
        match (self.kind, a) {
            (InvolutionKind::Transpose(_), Element::Matrix(m)) => Element::Matrix(m.transpose()),
            (InvolutionKind::Symplectic(n), Element::Matrix(m)) => {
                let k = n / 2;
                let r = m.block(0, 0, k, k);
                let s = m.block(0, k, k, k);
                let p = m.block(k, 0, k, k);
                let q = m.block(k, k, k, k);
                let mut out = RatMatrix::zero(n, n);
                out.set_block(0, 0, &q.transpose());
                out.set_block(0, k, &-&s.transpose());
                out.set_block(k, 0, &-&p.transpose());
                out.set_block(k, k, &r.transpose());
                Element::Matrix(out)
            }
            (InvolutionKind::Exchange(_), Element::Pair(a, b)) => Element::Pair(b.clone(), a.clone()),
            _ => unreachable!("members validated"),
        }
    }

    /// Splits `a` into its symmetric and skew parts:
    /// `((a + a*)/2, (a - a*)/2)`.
    pub fn decompose(&self, a: &Element) -> Result<(Element, Element)> {
        self.check_member(a)?;
        let star = self.involute_unchecked(a);
        let half = rat(1, 2);
        let sym = (a + &star).scale(&half);
        let skew = (a - &star).scale(&half);
        Ok((sym, skew))
    }

    /// Coordinates of `e` over the canonical element basis: row-major
    /// matrix entries; for pairs, first coordinate then second.
    pub fn coords(&self, e: &Element) -> Vec<Rat> {
        debug_assert!(self.contains(e));
        match e {
            Element::Matrix(m) => m.entries().to_vec(),
            Element::Pair(a, b) => {
                let mut v = a.entries().to_vec();
                v.extend_from_slice(b.entries());
                v
            }
        }
    }

    pub fn element_from_coords(&self, coords: &[Rat]) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coordinates for {}, got {}",
                self.dim(),
                self.descriptor(),
                coords.len()
            )));
        }
        let n = self.matrix_size();
        Ok(match self.kind {
            InvolutionKind::Exchange(_) => Element::Pair(
                RatMatrix::new(n, n, coords[..n * n].to_vec()),
                RatMatrix::new(n, n, coords[n * n..].to_vec()),
            ),
            _ => Element::Matrix(RatMatrix::new(n, n, coords.to_vec())),
        })
    }

    /// The conjugating matrix `T` of the symplectic involution
    /// (`a^s = T a^t T^{-1}`); `None` for the other kinds. The block
    /// formula used by `involute` is checked against conjugation by `T`
    /// in the test suite.
    pub fn symplectic_conjugator(&self) -> Option<RatMatrix> {
        let InvolutionKind::Symplectic(n) = self.kind else {
            return None;
        };
        let k = n / 2;
        let mut t = RatMatrix::zero(n, n);
        for i in 0..k {
            t[(i, i + k)] = rat(1, 1);
            t[(i + k, i)] = rat(-1, 1);
        }
        Some(t)
    }

    /// Projects the canonical basis through `decompose` and extracts the
    /// canonical maximal independent subset.
    fn projected_basis(&self, symmetric: bool) -> Vec<Element> {
        let rows = self.x_basis.iter().map(|b| {
            let (sym, skew) = self.decompose(b).expect("basis elements are members");
            self.coords(if symmetric { &sym } else { &skew })
        });
        let basis = SubspaceBasis::from_spanning(self.dim(), rows);
        basis
            .vectors()
            .iter()
            .map(|v| self.element_from_coords(v).expect("coords have full length"))
            .collect()
    }
}

impl fmt::Display for StarAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

/// Canonical element basis: matrix units in row-major order; for the
/// exchange case, first-coordinate units then second-coordinate units.
fn canonical_basis(kind: InvolutionKind) -> Vec<Element> {
    let n = kind.matrix_size();
    match kind {
        InvolutionKind::Exchange(_) => {
            let mut basis = Vec::with_capacity(2 * n * n);
            for i in 0..n {
                for j in 0..n {
                    basis.push(Element::Pair(RatMatrix::unit(n, i, j), RatMatrix::zero(n, n)));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    basis.push(Element::Pair(RatMatrix::zero(n, n), RatMatrix::unit(n, i, j)));
                }
            }
            basis
        }
        _ => {
            let mut basis = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    basis.push(Element::Matrix(RatMatrix::unit(n, i, j)));
                }
            }
            basis
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn alg(desc: &str) -> StarAlgebra {
        StarAlgebra::from_descriptor(desc).unwrap()
    }

    fn unit(n: usize, i: usize, j: usize) -> Element {
        Element::Matrix(RatMatrix::unit(n, i, j))
    }

    #[test]
    fn descriptor_round_trip_and_validation() {
        for d in ["t:1", "t:5", "s:2", "s:8", "ex:1", "ex:3"] {
            assert_eq!(alg(d).descriptor(), d);
        }
        assert!(StarAlgebra::from_descriptor("s:3").is_err());
        assert!(StarAlgebra::from_descriptor("t:0").is_err());
        assert!(StarAlgebra::from_descriptor("q:2").is_err());
        assert!(StarAlgebra::from_descriptor("t").is_err());
    }

    #[test]
    fn matrix_units_multiply() {
        let a = alg("t:2");
        let prod = a.multiply(&unit(2, 0, 1), &unit(2, 1, 0)).unwrap();
        assert_eq!(prod, unit(2, 0, 0));
    }

    #[test]
    fn exchange_product_uses_opposite_order_in_second_coordinate() {
        let a = alg("ex:1");
        let x = Element::Pair(
            RatMatrix::new(1, 1, vec![rat_int(2)]),
            RatMatrix::new(1, 1, vec![rat_int(3)]),
        );
        let y = Element::Pair(
            RatMatrix::new(1, 1, vec![rat_int(5)]),
            RatMatrix::new(1, 1, vec![rat_int(7)]),
        );
        let p = a.multiply(&x, &y).unwrap();
        assert_eq!(
            p,
            Element::Pair(
                RatMatrix::new(1, 1, vec![rat_int(10)]),
                RatMatrix::new(1, 1, vec![rat_int(21)]),
            )
        );

        let a2 = alg("ex:2");
        let e12 = RatMatrix::unit(2, 0, 1);
        let e21 = RatMatrix::unit(2, 1, 0);
        let p2 = a2
            .multiply(
                &Element::Pair(e12.clone(), e12.clone()),
                &Element::Pair(e21.clone(), e21.clone()),
            )
            .unwrap();
        // (A C, D B) with matrix units: (e12 e21, e21 e12) = (e11, e22).
        assert_eq!(
            p2,
            Element::Pair(RatMatrix::unit(2, 0, 0), RatMatrix::unit(2, 1, 1))
        );
    }

    #[test]
    fn symplectic_involution_2x2() {
        let a = alg("s:2");
        let m = Element::Matrix(RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]));
        let star = a.involute(&m).unwrap();
        assert_eq!(
            star,
            Element::Matrix(RatMatrix::from_int_rows(&[&[4, -2], &[-3, 1]]))
        );
    }

    #[test]
    fn transpose_involution_moves_units() {
        let a = alg("t:3");
        assert_eq!(a.involute(&unit(3, 0, 1)).unwrap(), unit(3, 1, 0));
    }

    #[test]
    fn exchange_involution_has_order_two() {
        let a = alg("ex:2");
        let x = Element::Pair(
            RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]),
            RatMatrix::from_int_rows(&[&[5, 6], &[7, 8]]),
        );
        let once = a.involute(&x).unwrap();
        assert_eq!(once.pair().0, x.pair().1);
        assert_eq!(a.involute(&once).unwrap(), x);
    }

    #[test]
    fn decompose_splits_and_recombines() {
        let a = alg("t:2");
        let (sym, skew) = a.decompose(&unit(2, 0, 1)).unwrap();
        let half = rat(1, 2);
        assert_eq!(sym, (&unit(2, 0, 1) + &unit(2, 1, 0)).scale(&half));
        assert_eq!(skew, (&unit(2, 0, 1) - &unit(2, 1, 0)).scale(&half));
        assert_eq!(&sym + &skew, unit(2, 0, 1));

        // Symmetric elements decompose as (a, 0).
        let s = &unit(2, 0, 1) + &unit(2, 1, 0);
        let (sym, skew) = a.decompose(&s).unwrap();
        assert_eq!(sym, s);
        assert!(skew.is_zero());

        // Symplectic: e11 = I/2 + (e11 - e22)/2.
        let sp = alg("s:2");
        let (sym, skew) = sp.decompose(&unit(2, 0, 0)).unwrap();
        assert_eq!(sym, Element::Matrix(RatMatrix::identity(2).scale(&half)));
        assert_eq!(
            skew,
            Element::Matrix(RatMatrix::from_int_rows(&[&[1, 0], &[0, -1]]).scale(&half))
        );
    }

    #[test]
    fn space_bases_match_known_small_cases() {
        let t2 = alg("t:2");
        assert_eq!(
            t2.space_basis(Parity::Z),
            &[Element::Matrix(RatMatrix::from_int_rows(&[&[0, 1], &[-1, 0]]))]
        );

        let s2 = alg("s:2");
        assert_eq!(s2.space_basis(Parity::Y), &[Element::Matrix(RatMatrix::identity(2))]);

        let ex1 = alg("ex:1");
        assert_eq!(
            ex1.space_basis(Parity::Y),
            &[Element::Pair(
                RatMatrix::new(1, 1, vec![rat_int(1)]),
                RatMatrix::new(1, 1, vec![rat_int(1)]),
            )]
        );
        assert_eq!(
            ex1.space_basis(Parity::Z),
            &[Element::Pair(
                RatMatrix::new(1, 1, vec![rat_int(1)]),
                RatMatrix::new(1, 1, vec![rat_int(-1)]),
            )]
        );
    }

    #[test]
    fn dimension_table_holds_up_to_size_eight() {
        for n in 1..=8usize {
            let a = alg(&format!("t:{n}"));
            assert_eq!(a.y_dim(), n * (n + 1) / 2);
            assert_eq!(a.z_dim(), n * (n - 1) / 2);
            assert_eq!(a.y_dim() + a.z_dim(), a.dim());
        }
        for k in 1..=4usize {
            let a = alg(&format!("s:{}", 2 * k));
            assert_eq!(a.y_dim(), k * (2 * k - 1));
            assert_eq!(a.z_dim(), k * (2 * k + 1));
            assert_eq!(a.y_dim() + a.z_dim(), a.dim());
        }
        for k in 1..=8usize {
            let a = alg(&format!("ex:{k}"));
            assert_eq!(a.y_dim(), k * k);
            assert_eq!(a.z_dim(), k * k);
            assert_eq!(a.y_dim() + a.z_dim(), a.dim());
        }
    }

    #[test]
    fn involution_is_an_anti_automorphism_of_order_two() {
        for desc in ["t:2", "t:3", "s:2", "s:4", "ex:1", "ex:2"] {
            let a = alg(desc);
            let basis = a.space_basis(Parity::X);
            for u in basis {
                assert_eq!(a.involute(&a.involute(u).unwrap()).unwrap(), *u, "{desc}");
                for v in basis {
                    let lhs = a.involute(&a.multiply(u, v).unwrap()).unwrap();
                    let rhs = a
                        .multiply(&a.involute(v).unwrap(), &a.involute(u).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "{desc}");
                }
            }
        }
    }

    #[test]
    fn symplectic_block_formula_equals_conjugation() {
        for desc in ["s:2", "s:4", "s:6"] {
            let a = alg(desc);
            let t = a.symplectic_conjugator().unwrap();
            // T T = -I, so T^{-1} = -T.
            let n = a.matrix_size();
            assert_eq!(&t * &t, -&RatMatrix::identity(n));
            let t_inv = -&t;
            for b in a.space_basis(Parity::X) {
                let via_blocks = a.involute(b).unwrap();
                let via_conj = Element::Matrix(&(&t * &b.matrix().transpose()) * &t_inv);
                assert_eq!(via_blocks, via_conj, "{desc}");
            }
        }
    }

    #[test]
    fn y_basis_fixed_z_basis_negated() {
        for desc in ["t:3", "s:4", "ex:2"] {
            let a = alg(desc);
            for y in a.space_basis(Parity::Y) {
                assert_eq!(a.involute(y).unwrap(), *y);
            }
            for z in a.space_basis(Parity::Z) {
                assert_eq!(a.involute(z).unwrap(), -z);
            }
        }
    }

    #[test]
    fn membership_is_checked() {
        let a = alg("t:2");
        let wrong = unit(3, 0, 0);
        assert!(a.multiply(&wrong, &wrong).is_err());
        assert!(a.involute(&wrong).is_err());
        assert!(a.decompose(&Element::Pair(RatMatrix::identity(2), RatMatrix::identity(2))).is_err());
    }

    #[test]
    fn coords_round_trip() {
        for desc in ["t:3", "s:4", "ex:2"] {
            let a = alg(desc);
            for b in a.space_basis(Parity::X) {
                let c = a.coords(b);
                assert_eq!(a.element_from_coords(&c).unwrap(), *b);
            }
        }
    }
}
