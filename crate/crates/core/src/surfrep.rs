//! Representations of a genus-`g` surface group into `PO(n)`, given by one
//! orthogonal representative per generator, and their topological invariants.
//!
//! Generators are ordered `A_1, B_1, ..., A_g, B_g` and the surface relation is
//! `prod_i [A_i, B_i] = 1` in `PO(n)`, i.e. `±I` for the chosen
//! representatives.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::clifford::{self, CliffordError, KernelElement};
use crate::linalg::RatMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfRepError {
    #[error("genus must be at least 2, got {0}")]
    BadGenus(usize),
    #[error("dimension must be even and at least 4, got {0}")]
    BadDimension(usize),
    #[error("expected {expected} generators, got {got}")]
    WrongGeneratorCount { expected: usize, got: usize },
    #[error("generator {generator} is {size}x{size}, expected {n}x{n}")]
    WrongSize {
        generator: String,
        size: usize,
        n: usize,
    },
    #[error("generator {generator} is not orthogonal")]
    NotOrthogonal { generator: String },
    #[error("surface relation violated: product of commutators is neither +I nor -I")]
    RelationViolated,
    #[error("delta1 is non-zero (generator {generator} lies in O(n)^-)")]
    Delta1NotZero { generator: String },
    #[error("invalid invariant class: mu2 = One requires mu1 = 0")]
    InvalidClass,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

/// `A1`, `B1`, `A2`, ... for zero-based generator indices.
pub fn generator_name(index: usize) -> String {
    let letter = if index.is_multiple_of(2) { 'A' } else { 'B' };
    format!("{letter}{}", index / 2 + 1)
}

/// A vector in `(Z_2)^{2g}`; bit `k` belongs to generator `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mu1(Vec<bool>);

impl Mu1 {
    pub fn zero(len: usize) -> Self {
        Mu1(vec![false; len])
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Mu1(bits)
    }

    /// The vector whose bit `k` is bit `k` of `value` (`k < len`).
    pub fn from_index(value: u64, len: usize) -> Self {
        Mu1((0..len).map(|k| value >> k & 1 == 1).collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| !b)
    }
}

impl fmt::Display for Mu1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid bit string {0:?}")]
pub struct ParseMu1Error(pub String);

impl FromStr for Mu1 {
    type Err = ParseMu1Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(ParseMu1Error(s.to_owned())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Mu1)
    }
}

/// Second invariant, after identifying `ω_n` with `-ω_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mu2Value {
    Zero,
    One,
    Omega,
}

impl fmt::Display for Mu2Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mu2Value::Zero => "Zero",
            Mu2Value::One => "One",
            Mu2Value::Omega => "Omega",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid mu2 value {0:?} (expected 0, 1 or omega)")]
pub struct ParseMu2Error(pub String);

impl FromStr for Mu2Value {
    type Err = ParseMu2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "0" | "zero" => Ok(Mu2Value::Zero),
            "1" | "one" => Ok(Mu2Value::One),
            "omega" | "w" => Ok(Mu2Value::Omega),
            _ => Err(ParseMu2Error(s.to_owned())),
        }
    }
}

/// A topological class `(μ₁, μ₂)` of `PO(n)`-bundles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantClass {
    mu1: Mu1,
    mu2: Mu2Value,
}

impl InvariantClass {
    pub fn new(mu1: Mu1, mu2: Mu2Value) -> Result<Self, SurfRepError> {
        if mu2 == Mu2Value::One && !mu1.is_zero() {
            return Err(SurfRepError::InvalidClass);
        }
        Ok(InvariantClass { mu1, mu2 })
    }

    pub fn mu1(&self) -> &Mu1 {
        &self.mu1
    }

    pub fn mu2(&self) -> Mu2Value {
        self.mu2
    }

    pub fn genus(&self) -> usize {
        self.mu1.len() / 2
    }
}

impl fmt::Display for InvariantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu1, self.mu2)
    }
}

/// Value of the commutator product of the orthogonal representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Delta2 {
    PlusI,
    MinusI,
}

impl fmt::Display for Delta2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Delta2::PlusI => "+I",
            Delta2::MinusI => "-I",
        })
    }
}

/// Surface-group representation into `PO(n)`. Construction checks shapes,
/// orthogonality and the surface relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceRep {
    genus: usize,
    n: usize,
    gens: Vec<RatMatrix>,
}

impl SurfaceRep {
    pub fn new(genus: usize, n: usize, gens: Vec<RatMatrix>) -> Result<Self, SurfRepError> {
        if genus < 2 {
            return Err(SurfRepError::BadGenus(genus));
        }
        if n < 4 || !n.is_multiple_of(2) || n > clifford::MAX_DIM {
            return Err(SurfRepError::BadDimension(n));
        }
        if gens.len() != 2 * genus {
            return Err(SurfRepError::WrongGeneratorCount {
                expected: 2 * genus,
                got: gens.len(),
            });
        }
        for (k, m) in gens.iter().enumerate() {
            if m.size() != n {
                return Err(SurfRepError::WrongSize {
                    generator: generator_name(k),
                    size: m.size(),
                    n,
                });
            }
            if !m.is_orthogonal() {
                return Err(SurfRepError::NotOrthogonal {
                    generator: generator_name(k),
                });
            }
        }
        let rep = SurfaceRep { genus, n, gens };
        rep.check_relation()?;
        Ok(rep)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[RatMatrix] {
        &self.gens
    }

    /// `(A_i, B_i)` for `i` in `1..=genus`.
    pub fn handle(&self, i: usize) -> (&RatMatrix, &RatMatrix) {
        (&self.gens[2 * (i - 1)], &self.gens[2 * (i - 1) + 1])
    }

    /// Evaluates `prod_i [A_i, B_i]`, which must be `±I`.
    pub fn check_relation(&self) -> Result<Delta2, SurfRepError> {
        let mut acc = RatMatrix::identity(self.n);
        for pair in self.gens.chunks(2) {
            let c = pair[0]
                .commutator(&pair[1])
                .map_err(|_| SurfRepError::RelationViolated)?;
            acc = acc.mul(&c).expect("same size");
        }
        if acc.is_identity() {
            Ok(Delta2::PlusI)
        } else if acc.is_neg_identity() {
            Ok(Delta2::MinusI)
        } else {
            Err(SurfRepError::RelationViolated)
        }
    }

    /// Component vector: bit `k` is set iff generator `k` lies in `O(n)⁻`.
    pub fn delta1(&self) -> Mu1 {
        Mu1(self
            .gens
            .iter()
            .map(|m| m.component().expect("validated orthogonal").bit())
            .collect())
    }

    pub fn delta2(&self) -> Result<Delta2, SurfRepError> {
        self.check_relation()
    }

    /// Spin-lift obstruction for representations into `PSO(n)`: lifts every
    /// generator to the Clifford group and evaluates the commutator product,
    /// identifying `ω_n` with `-ω_n`.
    pub fn tilde_delta(&self) -> Result<Mu2Value, SurfRepError> {
        if let Some(k) = self.delta1().bits().iter().position(|&b| b) {
            return Err(SurfRepError::Delta1NotZero {
                generator: generator_name(k),
            });
        }
        Ok(match self.kernel_element()? {
            KernelElement::One => Mu2Value::Zero,
            KernelElement::MinusOne => Mu2Value::One,
            KernelElement::Omega | KernelElement::MinusOmega => Mu2Value::Omega,
        })
    }

    /// Raw commutator product of the Clifford lifts, before `±ω_n` are
    /// identified.
    pub fn kernel_element(&self) -> Result<KernelElement, SurfRepError> {
        let lifts = self
            .gens
            .iter()
            .map(clifford::lift_orthogonal)
            .collect::<Result<Vec<_>, _>>()?;
        clifford::commutator_product(&lifts).map_err(|e| match e {
            CliffordError::NotInKernel => SurfRepError::RelationViolated,
            other => other.into(),
        })
    }

    pub fn invariants(&self) -> Result<InvariantClass, SurfRepError> {
        let mu1 = self.delta1();
        let mu2 = if mu1.is_zero() {
            self.tilde_delta()?
        } else {
            match self.delta2()? {
                Delta2::MinusI => Mu2Value::Omega,
                Delta2::PlusI => Mu2Value::Zero,
            }
        };
        InvariantClass::new(mu1, mu2)
    }
}
