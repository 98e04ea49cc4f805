//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use pglrep::construct::{diagonal_spin_pair, pair_for, PairKind, PairSpec};
use pglrep::linalg::{OrthComponent, RatMatrix};
use pglrep::surfrep::SurfaceRep;
use pglrep::Rational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Random signed permutation matrix.
pub fn signed_permutation(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut m = RatMatrix::zeros(n);
    for (i, &j) in perm.iter().enumerate() {
        m.set(i, j, q(if rng.gen() { 1 } else { -1 }, 1));
    }
    m
}

/// Rotation by the angle of the Pythagorean triple generated by `(p, r)` in
/// the coordinate plane `(i, j)`.
pub fn pythagorean_rotation(n: usize, i: usize, j: usize, p: i64, r: i64) -> RatMatrix {
    let (a, b, c) = (p * p - r * r, 2 * p * r, p * p + r * r);
    let mut m = RatMatrix::identity(n);
    m.set(i, i, q(a, c));
    m.set(i, j, q(-b, c));
    m.set(j, i, q(b, c));
    m.set(j, j, q(a, c));
    m
}

/// Exactly orthogonal rational matrix: a signed permutation composed with a
/// few Pythagorean rotations.
pub fn random_orthogonal(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let mut m = signed_permutation(rng, n);
    if n < 2 {
        return m;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let p = rng.gen_range(2..7);
        let r = rng.gen_range(1..p);
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        m = m.mul(&pythagorean_rotation(n, i, j, p, r)).unwrap();
    }
    m
}

pub fn conjugate(p: &RatMatrix, a: &RatMatrix) -> RatMatrix {
    p.mul(a).unwrap().mul(&p.transpose()).unwrap()
}

/// A representation with every generator in `SO(n)`, built handle by handle
/// from catalogue pairs, the diagonal pair, or identities, then conjugated
/// by a random orthogonal matrix. Also returns how many handles have
/// commutator `-I`.
pub fn random_delta1_zero_rep(rng: &mut impl Rng, g: usize, n: usize) -> (SurfaceRep, usize) {
    let so = (OrthComponent::SOn, OrthComponent::SOn);
    let mut gens = Vec::with_capacity(2 * g);
    let mut anticommuting = 0;
    for _ in 0..g {
        let (a, b) = match rng.gen_range(0..4) {
            0 => {
                anticommuting += 1;
                pair_for(
                    PairSpec {
                        kind: PairKind::Anticommuting,
                        components: so,
                    },
                    n,
                )
                .unwrap()
            }
            1 => pair_for(
                PairSpec {
                    kind: PairKind::Commuting,
                    components: so,
                },
                n,
            )
            .unwrap(),
            2 => diagonal_spin_pair(n),
            _ => (RatMatrix::identity(n), RatMatrix::identity(n)),
        };
        gens.push(a);
        gens.push(b);
    }
    let p = random_orthogonal(rng, n);
    let gens = gens.iter().map(|m| conjugate(&p, m)).collect();
    (SurfaceRep::new(g, n, gens).unwrap(), anticommuting)
}
