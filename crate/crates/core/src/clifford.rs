//! Exact Clifford algebra `Cl(n)` over the rationals with positive-definite
//! signature (`e_i² = +1`).
//!
//! Group elements are handled in the Lipschitz group: products of
//! arbitrary-norm (non-zero) vectors. Every Pin(n) element is a real multiple
//! of such a product, and the quantities computed here (twisted adjoint
//! matrices, commutators) do not see that scalar, so nothing ever needs a
//! square root.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::RatMatrix;
use crate::Rational;

/// Largest supported dimension; blade masks live in a `u32`.
pub const MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {0} outside supported range 1..={MAX_DIM}")]
    BadDimension(usize),
    #[error("blade mask {mask:#x} out of range for n = {n}")]
    BadMask { mask: u32, n: usize },
    #[error("element is not a versor (g times its reversal is not a non-zero scalar)")]
    NotAVersor,
    #[error("twisted conjugation sends e_{index} outside the vectors")]
    NotVectorPreserving { index: usize },
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("commutator product is not one of 1, -1, w, -w")]
    NotInKernel,
    #[error("expected an even, non-empty list of lifts, got {0}")]
    BadLiftCount(usize),
}

/// A basis monomial `e_{i1} e_{i2} ... e_{ik}` with `i1 < ... < ik`; bit `i`
/// of the mask stands for `e_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn new(mask: u32, n: usize) -> Result<Self, CliffordError> {
        check_dim(n)?;
        if (mask as u64) >> n != 0 {
            return Err(CliffordError::BadMask { mask, n });
        }
        Ok(Blade(mask))
    }

    /// `e_{i+1}` (zero-based index).
    pub fn basis(i: usize) -> Self {
        assert!(i < MAX_DIM, "basis index {i} out of range");
        Blade(1 << i)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..32 {
            if self.0 & (1 << i) != 0 {
                if !first {
                    write!(f, "^")?;
                }
                write!(f, "e{}", i + 1)?;
                first = false;
            }
        }
        Ok(())
    }
}

fn check_dim(n: usize) -> Result<(), CliffordError> {
    if n == 0 || n > MAX_DIM {
        Err(CliffordError::BadDimension(n))
    } else {
        Ok(())
    }
}

/// Product of two basis blades: returns the sign (`+1` or `-1`) and the
/// resulting blade. The sign is the parity of the transpositions needed to
/// sort the concatenated index list; repeated indices contract to `+1`.
pub fn blade_mul(a: Blade, b: Blade, n: usize) -> (i8, Blade) {
    debug_assert!(n <= MAX_DIM && (a.0 as u64) >> n == 0 && (b.0 as u64) >> n == 0);
    // Each e_j in b must move left past every e_i in a with i > j.
    let mut swaps = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a.0 >> j >> 1).count_ones();
        rest &= rest - 1;
    }
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// The four elements of the kernel of `Pin(n) -> PO(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelElement {
    One,
    MinusOne,
    Omega,
    MinusOmega,
}

impl fmt::Display for KernelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelElement::One => "1",
            KernelElement::MinusOne => "-1",
            KernelElement::Omega => "w",
            KernelElement::MinusOmega => "-w",
        })
    }
}

/// Sparse multivector of `Cl(n)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    n: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl CliffordElement {
    pub fn zero(n: usize) -> Result<Self, CliffordError> {
        check_dim(n)?;
        Ok(CliffordElement {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn scalar(n: usize, value: Rational) -> Result<Self, CliffordError> {
        Self::from_terms(n, [(Blade::SCALAR, value)])
    }

    pub fn one(n: usize) -> Result<Self, CliffordError> {
        Self::scalar(n, Rational::one())
    }

    pub fn blade(n: usize, blade: Blade, coeff: Rational) -> Result<Self, CliffordError> {
        Self::from_terms(n, [(blade, coeff)])
    }

    /// The grade-1 element `sum_i coords[i] e_{i+1}`.
    pub fn vector(coords: &[Rational]) -> Result<Self, CliffordError> {
        let n = coords.len();
        Self::from_terms(
            n,
            coords
                .iter()
                .enumerate()
                .map(|(i, c)| (Blade::basis(i), c.clone())),
        )
    }

    /// Builds an element from (blade, coefficient) pairs; repeated blades are
    /// summed and zero results dropped.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, CliffordError>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        let mut out = Self::zero(n)?;
        for (blade, coeff) in terms {
            if (blade.0 as u64) >> n != 0 {
                return Err(CliffordError::BadMask { mask: blade.0, n });
            }
            out.add_term(blade, coeff);
        }
        Ok(out)
    }

    fn add_term(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(blade).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the element is the scalar `c` (including zero).
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    /// True if every term has even grade.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    /// True if every term has odd grade.
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 1)
    }

    /// `Some(coords)` when the element is a pure vector (or zero).
    pub fn as_vector(&self) -> Option<Vec<Rational>> {
        if self.terms.keys().any(|b| b.grade() != 1) {
            return None;
        }
        Some(
            (0..self.n)
                .map(|i| self.coefficient(Blade::basis(i)))
                .collect(),
        )
    }

    fn same_dim(&self, other: &Self) -> Result<(), CliffordError> {
        if self.n != other.n {
            Err(CliffordError::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| -c)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return CliffordElement {
                n: self.n,
                terms: BTreeMap::new(),
            };
        }
        self.map_coeffs(|_, c| c * factor)
    }

    fn map_coeffs(&self, f: impl Fn(Blade, &Rational) -> Rational) -> Self {
        CliffordElement {
            n: self.n,
            terms: self.terms.iter().map(|(b, c)| (*b, f(*b, c))).collect(),
        }
    }

    /// Geometric product.
    ///
    /// Coefficients are brought to a common denominator so the inner loop
    /// runs on integers; each output coefficient is reduced once.
    pub fn mul(&self, other: &Self) -> Result<Self, CliffordError> {
        self.same_dim(other)?;
        let (left, da) = self.integer_terms();
        let (right, db) = other.integer_terms();
        let mut acc = vec![BigInt::zero(); 1usize << self.n];
        for (a, na) in &left {
            for (b, nb) in &right {
                let (sign, blade) = blade_mul(*a, *b, self.n);
                let slot = &mut acc[blade.0 as usize];
                if sign > 0 {
                    *slot += na * nb;
                } else {
                    *slot -= na * nb;
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mask, c)| (Blade(mask as u32), Rational::new(c, den.clone())))
            .collect();
        Ok(CliffordElement { n: self.n, terms })
    }

    /// Integer numerators over the least common denominator.
    fn integer_terms(&self) -> (Vec<(Blade, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (*b, c.numer() * (&den / c.denom())))
            .collect();
        (terms, den)
    }

    /// The main involution: negates odd-grade terms.
    pub fn grade_involution(&self) -> Self {
        self.map_coeffs(|b, c| if b.grade() % 2 == 1 { -c } else { c.clone() })
    }

    /// Reverses the order of basis vectors in each blade; grade `k` picks up
    /// `(-1)^{k(k-1)/2}`.
    pub fn reversal(&self) -> Self {
        self.map_coeffs(|b, c| {
            let k = b.grade();
            if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        })
    }

    /// Inverse of a Lipschitz-group element: `reversal(g) / (g reversal(g))`.
    pub fn versor_inverse(&self) -> Result<Self, CliffordError> {
        let rev = self.reversal();
        let norm = self
            .mul(&rev)?
            .as_scalar()
            .ok_or(CliffordError::NotAVersor)?;
        if norm.is_zero() {
            return Err(CliffordError::NotAVersor);
        }
        Ok(rev.scale(&norm.recip()))
    }

    /// Orthogonal matrix of the twisted adjoint action `x -> α(g) x g⁻¹`;
    /// column `i` holds the image of `e_{i+1}`.
    pub fn twisted_conjugation_matrix(&self) -> Result<RatMatrix, CliffordError> {
        let n = self.n;
        let inv = self.versor_inverse()?;
        let twisted = self.grade_involution();
        let mut out = RatMatrix::zeros(n);
        for i in 0..n {
            let e = CliffordElement::blade(n, Blade::basis(i), Rational::one())?;
            let image = twisted.mul(&e)?.mul(&inv)?;
            let coords = image
                .as_vector()
                .ok_or(CliffordError::NotVectorPreserving { index: i + 1 })?;
            for (row, c) in coords.into_iter().enumerate() {
                out.set(row, i, c);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (b.0 == 0, mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{b}")?,
                (false, false) => write!(f, "{mag}*{b}")?,
            }
        }
        Ok(())
    }
}

/// The oriented volume element `e_1 e_2 ... e_n`.
pub fn volume_element(n: usize) -> Result<CliffordElement, CliffordError> {
    check_dim(n)?;
    CliffordElement::blade(n, Blade(omega_mask(n)), Rational::one())
}

/// Writes an orthogonal matrix as a product of at most `n` reflections and
/// returns the product of the (non-normalized) reflection vectors.
///
/// Columns are processed left to right: whenever the partially reduced
/// matrix sends `e_i` to some `v != e_i`, it is multiplied on the left by the
/// reflection along `v - e_i`, which maps `v` to `e_i` and fixes the columns
/// already reduced.
pub fn lift_orthogonal(a: &RatMatrix) -> Result<CliffordElement, CliffordError> {
    let n = a.size();
    check_dim(n)?;
    if !a.is_orthogonal() {
        return Err(CliffordError::NotOrthogonal);
    }
    let mut current = a.clone();
    let mut versor = CliffordElement::one(n)?;
    for i in 0..n {
        let v = current.column(i);
        let mut u = v;
        u[i] -= Rational::one();
        if u.iter().all(Zero::is_zero) {
            continue;
        }
        let reflection = RatMatrix::reflection(&u).map_err(|_| CliffordError::NotOrthogonal)?;
        current = reflection.mul(&current).expect("same size");
        versor = versor.mul(&CliffordElement::vector(&u)?)?;
    }
    debug_assert!(current.is_identity());
    Ok(versor)
}

/// Evaluates `prod_i g_i h_i g_i⁻¹ h_i⁻¹` for the lifts
/// `[g_1, h_1, g_2, h_2, ...]` and identifies the result in the kernel
/// `{1, -1, ω_n, -ω_n}`.
pub fn commutator_product(lifts: &[CliffordElement]) -> Result<KernelElement, CliffordError> {
    if lifts.is_empty() || !lifts.len().is_multiple_of(2) {
        return Err(CliffordError::BadLiftCount(lifts.len()));
    }
    let n = lifts[0].dim();
    let mut acc = CliffordElement::one(n)?;
    for pair in lifts.chunks(2) {
        let (g, h) = (&pair[0], &pair[1]);
        let commutator = g
            .mul(h)?
            .mul(&g.versor_inverse()?)?
            .mul(&h.versor_inverse()?)?;
        acc = acc.mul(&commutator)?;
    }
    classify_kernel(&acc)
}

fn classify_kernel(x: &CliffordElement) -> Result<KernelElement, CliffordError> {
    let one = Rational::one();
    let minus_one = -Rational::one();
    if let Some(c) = x.as_scalar() {
        if c == one {
            return Ok(KernelElement::One);
        }
        if c == minus_one {
            return Ok(KernelElement::MinusOne);
        }
        return Err(CliffordError::NotInKernel);
    }
    if x.terms.len() == 1 {
        let (b, c) = x.terms.iter().next().expect("one term");
        if b.0 == omega_mask(x.dim()) {
            if *c == one {
                return Ok(KernelElement::Omega);
            }
            if *c == minus_one {
                return Ok(KernelElement::MinusOmega);
            }
        }
    }
    Err(CliffordError::NotInKernel)
}

fn omega_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn e(n: usize, mask: u32) -> CliffordElement {
        CliffordElement::blade(n, Blade::new(mask, n).unwrap(), r(1, 1)).unwrap()
    }

    #[test]
    fn blade_signs() {
        assert_eq!(blade_mul(Blade(1), Blade(1), 3), (1, Blade::SCALAR));
        assert_eq!(blade_mul(Blade(1), Blade(2), 3), (1, Blade(3)));
        assert_eq!(blade_mul(Blade(2), Blade(1), 3), (-1, Blade(3)));
    }

    #[test]
    fn blade_sign_matches_index_sort() {
        // brute force: concatenate index lists, bubble sort, cancel pairs
        fn oracle(a: u32, b: u32) -> (i8, u32) {
            let mut idx: Vec<u32> = (0..8).filter(|i| a & (1 << i) != 0).collect();
            idx.extend((0..8).filter(|i| b & (1 << i) != 0));
            let mut sign = 1i8;
            let mut changed = true;
            while changed {
                changed = false;
                for k in 0..idx.len().saturating_sub(1) {
                    if idx[k] > idx[k + 1] {
                        idx.swap(k, k + 1);
                        sign = -sign;
                        changed = true;
                    }
                }
            }
            let mut mask = 0;
            for i in idx {
                mask ^= 1 << i;
            }
            (sign, mask)
        }
        for a in 0..64u32 {
            for b in 0..64u32 {
                let (s, blade) = blade_mul(Blade(a), Blade(b), 6);
                assert_eq!((s, blade.0), oracle(a, b), "a={a:b} b={b:b}");
            }
        }
    }

    #[test]
    fn small_products() {
        let x = e(3, 0b011).mul(&e(3, 0b101)).unwrap();
        assert_eq!(x, e(3, 0b110).neg());
        let y = e(3, 0b111)
            .add(&CliffordElement::scalar(3, r(2, 3)).unwrap())
            .unwrap();
        assert_eq!(CliffordElement::one(3).unwrap().mul(&y).unwrap(), y);
        let w = volume_element(4).unwrap();
        assert_eq!(w.mul(&w).unwrap(), CliffordElement::one(4).unwrap());
        let w6 = volume_element(6).unwrap();
        assert_eq!(w6.mul(&w6).unwrap(), CliffordElement::one(6).unwrap().neg());
    }

    #[test]
    fn dimension_errors() {
        assert!(matches!(
            e(3, 1).mul(&e(4, 1)),
            Err(CliffordError::DimensionMismatch { left: 3, right: 4 })
        ));
        assert!(CliffordElement::zero(17).is_err());
        assert!(CliffordElement::zero(0).is_err());
        assert!(Blade::new(0b1000, 3).is_err());
    }

    #[test]
    fn involutions() {
        assert_eq!(e(2, 1).grade_involution(), e(2, 1).neg());
        assert_eq!(e(2, 3).reversal(), e(2, 3).neg());
        let x = CliffordElement::one(2).unwrap().add(&e(2, 3)).unwrap();
        assert_eq!(x.grade_involution(), x);
    }

    #[test]
    fn volume_elements() {
        assert_eq!(volume_element(1).unwrap(), e(1, 1));
        assert_eq!(volume_element(2).unwrap(), e(2, 3));
        assert_eq!(volume_element(4).unwrap(), e(4, 0b1111));
        assert_eq!(
            volume_element(16)
                .unwrap()
                .terms()
                .next()
                .unwrap()
                .0
                .grade(),
            16
        );
    }

    #[test]
    fn versor_inverses() {
        assert_eq!(e(2, 1).versor_inverse().unwrap(), e(2, 1));
        let two_e1 = e(2, 1).scale(&r(2, 1));
        assert_eq!(two_e1.versor_inverse().unwrap(), e(2, 1).scale(&r(1, 2)));
        let u = CliffordElement::vector(&[r(3, 5), r(4, 5)]).unwrap();
        let inv = u.versor_inverse().unwrap();
        assert_eq!(inv, u);
        assert_eq!(u.mul(&inv).unwrap(), CliffordElement::one(2).unwrap());
        // 1 + e1 squares to 2 + 2e1, not a scalar
        let bad = CliffordElement::one(2).unwrap().add(&e(2, 1)).unwrap();
        assert_eq!(bad.versor_inverse(), Err(CliffordError::NotAVersor));
    }

    #[test]
    fn twisted_conjugation_examples() {
        assert!(CliffordElement::one(3)
            .unwrap()
            .twisted_conjugation_matrix()
            .unwrap()
            .is_identity());
        assert_eq!(
            e(3, 1).twisted_conjugation_matrix().unwrap(),
            RatMatrix::diag_i64(&[-1, 1, 1])
        );
        assert_eq!(
            e(4, 0b11).twisted_conjugation_matrix().unwrap(),
            RatMatrix::diag_i64(&[-1, -1, 1, 1])
        );
    }

    #[test]
    fn lift_examples() {
        assert_eq!(
            lift_orthogonal(&RatMatrix::identity(4)).unwrap(),
            CliffordElement::one(4).unwrap()
        );
        let g = lift_orthogonal(&RatMatrix::diag_i64(&[-1, 1, 1])).unwrap();
        assert_eq!(g.terms().count(), 1);
        assert_eq!(g.terms().next().unwrap().0, Blade(1));
        let rot =
            RatMatrix::from_rows(vec![vec![r(3, 5), r(-4, 5)], vec![r(4, 5), r(3, 5)]]).unwrap();
        let g = lift_orthogonal(&rot).unwrap();
        assert!(g.is_even());
        assert_eq!(g.twisted_conjugation_matrix().unwrap(), rot);
        let shear =
            RatMatrix::from_rows(vec![vec![r(1, 1), r(1, 1)], vec![r(0, 1), r(1, 1)]]).unwrap();
        assert_eq!(lift_orthogonal(&shear), Err(CliffordError::NotOrthogonal));
    }

    #[test]
    fn commutator_examples() {
        let one = CliffordElement::one(4).unwrap();
        assert_eq!(
            commutator_product(&[one.clone(), one.clone(), one.clone(), one]).unwrap(),
            KernelElement::One
        );
        // (e1e2)(e1e3)(e1e2)^-1(e1e3)^-1 = -1 by hand
        let k = commutator_product(&[e(4, 0b011), e(4, 0b101)]).unwrap();
        assert_eq!(k, KernelElement::MinusOne);
        assert_eq!(commutator_product(&[]), Err(CliffordError::BadLiftCount(0)));
        // e1 and e1+e2 do not satisfy any kernel relation
        let v = CliffordElement::vector(&[r(1, 1), r(1, 1), r(0, 1), r(0, 1)]).unwrap();
        assert_eq!(
            commutator_product(&[e(4, 1), v]),
            Err(CliffordError::NotInKernel)
        );
    }

    #[test]
    fn display() {
        let x = e(3, 0b011)
            .scale(&r(-3, 2))
            .add(&CliffordElement::scalar(3, r(1, 1)).unwrap())
            .unwrap();
        assert_eq!(x.to_string(), "1 - 3/2*e1^e2");
        assert_eq!(CliffordElement::zero(2).unwrap().to_string(), "0");
    }
}
