//! Explicit orthogonal matrices and representations realizing every
//! invariant class.
//!
//! Everything is built from the 2x2 seeds
//!
//! ```text
//! X2 = [0 1; 1 0]   X'2 = diag(1, -1)   Y2 = X'2   Y'2 = -X'2   Z2 = [0 -1; 1 0]
//! ```
//!
//! and the block recursions
//! `X_n = X2 ⊕ X_{n-2}`, `X'_n = X'2 ⊕ X'_{n-2}`, `Y_n = Y2 ⊕ I`,
//! `Y'_n = Y'2 ⊕ I`, `Z_n = Z2 ⊕ X'_{n-2}`, `W_n = X2 ⊕ Z_{n-2}`,
//! `W'_n = Z2 ⊕ X_{n-2}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::{OrthComponent, RatMatrix};
use crate::surfrep::{InvariantClass, Mu2Value, SurfRepError, SurfaceRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("no {name} matrix of size {n}")]
    BadDimension { name: CatalogueName, n: usize },
    #[error("invalid target class: {0}")]
    InvalidClass(String),
    #[error("constructed representation has invariants {got}, expected {want}")]
    Mismatch { want: String, got: String },
    #[error(transparent)]
    SurfRep(#[from] SurfRepError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogueName {
    X,
    XPrime,
    Y,
    YPrime,
    Z,
    W,
    WPrime,
}

impl CatalogueName {
    pub const ALL: [CatalogueName; 7] = [
        CatalogueName::X,
        CatalogueName::XPrime,
        CatalogueName::Y,
        CatalogueName::YPrime,
        CatalogueName::Z,
        CatalogueName::W,
        CatalogueName::WPrime,
    ];

    fn min_dim(self) -> usize {
        match self {
            CatalogueName::W | CatalogueName::WPrime => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for CatalogueName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CatalogueName::X => "X",
            CatalogueName::XPrime => "X'",
            CatalogueName::Y => "Y",
            CatalogueName::YPrime => "Y'",
            CatalogueName::Z => "Z",
            CatalogueName::W => "W",
            CatalogueName::WPrime => "W'",
        })
    }
}

impl FromStr for CatalogueName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogueName::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| format!("unknown catalogue matrix {s:?}"))
    }
}

fn seed(name: CatalogueName) -> RatMatrix {
    let rows: [[i64; 2]; 2] = match name {
        CatalogueName::X => [[0, 1], [1, 0]],
        CatalogueName::XPrime | CatalogueName::Y => [[1, 0], [0, -1]],
        CatalogueName::YPrime => [[-1, 0], [0, 1]],
        CatalogueName::Z => [[0, -1], [1, 0]],
        CatalogueName::W | CatalogueName::WPrime => unreachable!("no 2x2 seed"),
    };
    RatMatrix::from_i64_rows(&[&rows[0], &rows[1]]).expect("2x2")
}

/// Matrix `name` of even size `n`.
pub fn catalogue_matrix(name: CatalogueName, n: usize) -> Result<RatMatrix, ConstructError> {
    if !n.is_multiple_of(2) || n < name.min_dim() {
        return Err(ConstructError::BadDimension { name, n });
    }
    if n == 2 {
        return Ok(seed(name));
    }
    let (head, tail) = match name {
        CatalogueName::X => (
            seed(CatalogueName::X),
            catalogue_matrix(CatalogueName::X, n - 2)?,
        ),
        CatalogueName::XPrime => (
            seed(CatalogueName::XPrime),
            catalogue_matrix(CatalogueName::XPrime, n - 2)?,
        ),
        CatalogueName::Y => (seed(CatalogueName::Y), RatMatrix::identity(n - 2)),
        CatalogueName::YPrime => (seed(CatalogueName::YPrime), RatMatrix::identity(n - 2)),
        CatalogueName::Z => (
            seed(CatalogueName::Z),
            catalogue_matrix(CatalogueName::XPrime, n - 2)?,
        ),
        CatalogueName::W => (
            seed(CatalogueName::X),
            catalogue_matrix(CatalogueName::Z, n - 2)?,
        ),
        CatalogueName::WPrime => (
            seed(CatalogueName::Z),
            catalogue_matrix(CatalogueName::X, n - 2)?,
        ),
    };
    Ok(RatMatrix::block_diag(&[&head, &tail]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// Commutator `+I`.
    Commuting,
    /// Commutator `-I`.
    Anticommuting,
}

/// Requested commutation behaviour and components of a generator pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairSpec {
    pub kind: PairKind,
    pub components: (OrthComponent, OrthComponent),
}

/// A pair of orthogonal matrices with prescribed components whose
/// commutator is `+I` or `-I`.
///
/// Commuting pairs use `I` for any `SO(n)` slot and `Y, Y'` when both are in
/// `O(n)⁻`. Anticommuting pairs depend on `n mod 4`:
///
/// | n mod 4 | SO, SO  | SO, O⁻ | O⁻, O⁻  |
/// |---------|---------|--------|---------|
/// | 0       | X, X'   | X, Z   | W, W'   |
/// | 2       | W, W'   | Z, X   | X, X'   |
///
/// An `(O⁻, SO)` request swaps the `(SO, O⁻)` entry; swapping inverts the
/// commutator, which leaves `±I` unchanged.
pub fn pair_for(spec: PairSpec, n: usize) -> Result<(RatMatrix, RatMatrix), ConstructError> {
    use CatalogueName::*;
    use OrthComponent::*;
    let get = |name| catalogue_matrix(name, n);
    if n < 4 || !n.is_multiple_of(2) {
        return Err(ConstructError::BadDimension { name: X, n });
    }
    let (a, b) = spec.components;
    Ok(match spec.kind {
        PairKind::Commuting => match (a, b) {
            (SOn, SOn) => (RatMatrix::identity(n), RatMatrix::identity(n)),
            (SOn, OMinus) => (RatMatrix::identity(n), get(Y)?),
            (OMinus, SOn) => (get(Y)?, RatMatrix::identity(n)),
            (OMinus, OMinus) => (get(Y)?, get(YPrime)?),
        },
        PairKind::Anticommuting => {
            let zero_mod_four = n.is_multiple_of(4);
            let (first, second) = match (a, b, zero_mod_four) {
                (SOn, SOn, true) | (OMinus, OMinus, false) => (X, XPrime),
                (SOn, SOn, false) | (OMinus, OMinus, true) => (W, WPrime),
                (SOn, OMinus, true) | (OMinus, SOn, false) => (X, Z),
                (SOn, OMinus, false) | (OMinus, SOn, true) => (Z, X),
            };
            (get(first)?, get(second)?)
        }
    })
}

/// The diagonal pair `diag(-1,-1,1,...)`, `diag(-1,1,-1,1,...)`. The two
/// matrices commute in `SO(n)` while their Spin lifts `e1e2` and `e1e3`
/// anticommute.
pub fn diagonal_spin_pair(n: usize) -> (RatMatrix, RatMatrix) {
    let mut a = vec![1; n];
    let mut b = vec![1; n];
    a[0] = -1;
    a[1] = -1;
    b[0] = -1;
    b[2] = -1;
    (RatMatrix::diag_i64(&a), RatMatrix::diag_i64(&b))
}

/// Builds a representation with invariants `target` and checks it before
/// returning.
///
/// Handle 1 carries an anticommuting pair when `μ₂ = Omega` and a commuting
/// pair otherwise, with components read off the first two bits of `μ₁`; the
/// remaining handles carry commuting pairs. The class `(0, One)` uses
/// [`diagonal_spin_pair`] on handle 1 and identities elsewhere.
pub fn build_representation(
    genus: usize,
    n: usize,
    target: &InvariantClass,
) -> Result<SurfaceRep, ConstructError> {
    if genus < 2 {
        return Err(SurfRepError::BadGenus(genus).into());
    }
    if n < 4 || !n.is_multiple_of(2) || n > crate::clifford::MAX_DIM {
        return Err(SurfRepError::BadDimension(n).into());
    }
    let bits = target.mu1().bits();
    if bits.len() != 2 * genus {
        return Err(ConstructError::InvalidClass(format!(
            "mu1 has {} bits, expected {}",
            bits.len(),
            2 * genus
        )));
    }
    if target.mu2() == Mu2Value::One && !target.mu1().is_zero() {
        return Err(ConstructError::InvalidClass(
            "mu2 = One requires mu1 = 0".into(),
        ));
    }

    let mut gens = Vec::with_capacity(2 * genus);
    for (i, pair) in bits.chunks(2).enumerate() {
        let comps = (
            OrthComponent::from_bit(pair[0]),
            OrthComponent::from_bit(pair[1]),
        );
        let (a, b) = match (i, target.mu2()) {
            (0, Mu2Value::One) => diagonal_spin_pair(n),
            (0, Mu2Value::Omega) => pair_for(
                PairSpec {
                    kind: PairKind::Anticommuting,
                    components: comps,
                },
                n,
            )?,
            _ => pair_for(
                PairSpec {
                    kind: PairKind::Commuting,
                    components: comps,
                },
                n,
            )?,
        };
        gens.push(a);
        gens.push(b);
    }

    let rep = SurfaceRep::new(genus, n, gens)?;
    let got = rep.invariants()?;
    if &got != target {
        return Err(ConstructError::Mismatch {
            want: target.to_string(),
            got: got.to_string(),
        });
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::OrthComponent::{OMinus, SOn};
    use crate::surfrep::Mu1;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn catalogue_examples() {
        let x2 = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            catalogue_matrix(CatalogueName::X, 4).unwrap(),
            RatMatrix::block_diag(&[&x2, &x2])
        );
        assert_eq!(
            catalogue_matrix(CatalogueName::Z, 4).unwrap(),
            RatMatrix::block_diag(&[&m(&[&[0, -1], &[1, 0]]), &RatMatrix::diag_i64(&[1, -1])])
        );
        assert_eq!(
            catalogue_matrix(CatalogueName::Y, 6).unwrap(),
            RatMatrix::diag_i64(&[1, -1, 1, 1, 1, 1])
        );
        assert_eq!(
            catalogue_matrix(CatalogueName::YPrime, 2).unwrap(),
            RatMatrix::diag_i64(&[-1, 1])
        );
    }

    #[test]
    fn catalogue_bad_dimensions() {
        assert!(catalogue_matrix(CatalogueName::X, 5).is_err());
        assert!(catalogue_matrix(CatalogueName::W, 2).is_err());
        assert!(catalogue_matrix(CatalogueName::X, 0).is_err());
        assert!(catalogue_matrix(CatalogueName::WPrime, 4).is_ok());
    }

    #[test]
    fn pair_examples() {
        let (a, b) = pair_for(
            PairSpec {
                kind: PairKind::Commuting,
                components: (SOn, OMinus),
            },
            8,
        )
        .unwrap();
        assert!(a.is_identity());
        assert_eq!(b, catalogue_matrix(CatalogueName::Y, 8).unwrap());

        let (a, b) = pair_for(
            PairSpec {
                kind: PairKind::Anticommuting,
                components: (SOn, SOn),
            },
            4,
        )
        .unwrap();
        assert_eq!(a, catalogue_matrix(CatalogueName::X, 4).unwrap());
        assert_eq!(b, catalogue_matrix(CatalogueName::XPrime, 4).unwrap());

        let (a, b) = pair_for(
            PairSpec {
                kind: PairKind::Anticommuting,
                components: (OMinus, OMinus),
            },
            6,
        )
        .unwrap();
        assert_eq!(a, catalogue_matrix(CatalogueName::X, 6).unwrap());
        assert_eq!(b, catalogue_matrix(CatalogueName::XPrime, 6).unwrap());
    }

    #[test]
    fn every_pair_has_requested_shape() {
        for n in (4..=12).step_by(2) {
            for kind in [PairKind::Commuting, PairKind::Anticommuting] {
                for a in [SOn, OMinus] {
                    for b in [SOn, OMinus] {
                        let spec = PairSpec {
                            kind,
                            components: (a, b),
                        };
                        let (x, y) = pair_for(spec, n).unwrap();
                        assert_eq!(x.component().unwrap(), a, "{spec:?} n={n}");
                        assert_eq!(y.component().unwrap(), b, "{spec:?} n={n}");
                        let c = x.commutator(&y).unwrap();
                        match kind {
                            PairKind::Commuting => assert!(c.is_identity()),
                            PairKind::Anticommuting => assert!(c.is_neg_identity()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn build_examples() {
        let zero = InvariantClass::new(Mu1::zero(4), Mu2Value::Zero).unwrap();
        let rep = build_representation(2, 4, &zero).unwrap();
        assert!(rep.generators().iter().all(RatMatrix::is_identity));

        let target = InvariantClass::new("1100".parse().unwrap(), Mu2Value::Omega).unwrap();
        let rep = build_representation(2, 4, &target).unwrap();
        assert_eq!(
            rep.handle(1).0,
            &catalogue_matrix(CatalogueName::W, 4).unwrap()
        );
        assert_eq!(
            rep.handle(1).1,
            &catalogue_matrix(CatalogueName::WPrime, 4).unwrap()
        );
        assert!(rep.handle(2).0.is_identity() && rep.handle(2).1.is_identity());

        let one = InvariantClass::new(Mu1::zero(4), Mu2Value::One).unwrap();
        let rep = build_representation(2, 4, &one).unwrap();
        assert_eq!(rep.tilde_delta().unwrap(), Mu2Value::One);
    }

    #[test]
    fn build_rejects_bad_input() {
        let zero = InvariantClass::new(Mu1::zero(4), Mu2Value::Zero).unwrap();
        assert!(build_representation(3, 4, &zero).is_err());
        assert!(build_representation(2, 5, &zero).is_err());
        assert!(build_representation(
            1,
            4,
            &InvariantClass::new(Mu1::zero(2), Mu2Value::Zero).unwrap()
        )
        .is_err());
    }
}
