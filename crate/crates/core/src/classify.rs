//! Topological classification of bundles and the resulting component counts.
//!
//! The general classifier works with a finite abelian `π₁G`, a finite abelian
//! `π₀G` acting on it, and the image of `μ₁` in `π₀G`. For a fixed `μ₁` the
//! bundle classes are `(π₁G / Γ_{μ₁}) / π₀G`, where `Γ_{μ₁}` is generated by
//! `γ - h·γ` for `γ ∈ π₁G` and `h` in the image of `μ₁`. Specialized to
//! `G = PO(n)` this yields the `(μ₁, μ₂)` classes enumerated by
//! [`invariant_classes`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::clifford::KernelElement;
use crate::surfrep::{InvariantClass, Mu1, Mu2Value};

/// Default bound on `|π₁G|` for brute-force closures.
pub const DEFAULT_GROUP_CAP: u64 = 1 << 16;

/// Largest genus for which classes are enumerated one by one.
pub const MAX_ENUM_GENUS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("group of order {order} exceeds the cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("the action does not preserve the subgroup Gamma")]
    ActionNotDescending,
    #[error("lift to {target} is not defined for classes with mu1 {mu1}")]
    TargetInvalidForClass { target: LiftTarget, mu1: String },
    #[error("arithmetic overflow")]
    Overflow,
}

/// Element of a [`FinAbGroup`]: one coordinate per cyclic factor.
pub type Element = Vec<u64>;

/// `Z_{m_1} x ... x Z_{m_k}`, written additively.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

impl FinAbGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self, ClassifyError> {
        Self::with_cap(orders, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(orders: Vec<u64>, cap: u64) -> Result<Self, ClassifyError> {
        if let Some(&m) = orders.iter().find(|&&m| m < 2) {
            return Err(ClassifyError::BadInput(format!(
                "cyclic factor of order {m}"
            )));
        }
        let mut order: u64 = 1;
        for &m in &orders {
            order =
                order
                    .checked_mul(m)
                    .filter(|&o| o <= cap)
                    .ok_or(ClassifyError::GroupTooLarge {
                        order: order.saturating_mul(m),
                        cap,
                    })?;
        }
        Ok(FinAbGroup { orders })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> Element {
        vec![0; self.orders.len()]
    }

    pub fn generator(&self, k: usize) -> Element {
        let mut e = self.zero();
        e[k] = 1;
        e
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        x.len() == self.orders.len() && x.iter().zip(&self.orders).all(|(a, m)| a < m)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Element {
        x.iter()
            .zip(y)
            .zip(&self.orders)
            .map(|((a, b), m)| (a + b) % m)
            .collect()
    }

    pub fn neg(&self, x: &[u64]) -> Element {
        x.iter()
            .zip(&self.orders)
            .map(|(a, m)| (m - a) % m)
            .collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Element {
        self.add(x, &self.neg(y))
    }

    /// `k * x`.
    pub fn scale(&self, x: &[u64], k: u64) -> Element {
        x.iter()
            .zip(&self.orders)
            .map(|(a, m)| ((*a as u128 * k as u128) % *m as u128) as u64)
            .collect()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = vec![Vec::new()];
        for &m in &self.orders {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..m).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

/// Action of `π₀` on `π₁` by automorphisms, given on generators: entry
/// `images[k][j]` is the image of the `j`-th generator of `π₁` under the
/// `k`-th generator of `π₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pi0: FinAbGroup,
    pi1: FinAbGroup,
    images: Vec<Vec<Element>>,
}

impl GroupAction {
    pub fn new(
        pi0: &FinAbGroup,
        pi1: &FinAbGroup,
        images: Vec<Vec<Element>>,
    ) -> Result<Self, ClassifyError> {
        let bad = |msg: String| Err(ClassifyError::InvalidAction(msg));
        if images.len() != pi0.rank() {
            return bad(format!(
                "{} generator maps for a pi0 of rank {}",
                images.len(),
                pi0.rank()
            ));
        }
        for (k, map) in images.iter().enumerate() {
            if map.len() != pi1.rank() {
                return bad(format!(
                    "map {k} has {} images, expected {}",
                    map.len(),
                    pi1.rank()
                ));
            }
            for (j, img) in map.iter().enumerate() {
                if !pi1.contains(img) {
                    return bad(format!("map {k}: image of generator {j} is not in pi1"));
                }
                if pi1.scale(img, pi1.orders()[j]) != pi1.zero() {
                    return bad(format!(
                        "map {k}: image of generator {j} has the wrong order"
                    ));
                }
            }
        }
        let action = GroupAction {
            pi0: pi0.clone(),
            pi1: pi1.clone(),
            images,
        };
        let elements = pi1.elements();
        for k in 0..pi0.rank() {
            let image: BTreeSet<Element> = elements
                .iter()
                .map(|x| action.apply_generator(k, x))
                .collect();
            if image.len() as u64 != pi1.order() {
                return bad(format!("map {k} is not bijective"));
            }
            let power = elements
                .iter()
                .all(|x| action.apply_generator_times(k, x, pi0.orders()[k]) == *x);
            if !power {
                return bad(format!(
                    "map {k} does not have order dividing {}",
                    pi0.orders()[k]
                ));
            }
            for l in 0..k {
                let commute = elements.iter().all(|x| {
                    action.apply_generator(k, &action.apply_generator(l, x))
                        == action.apply_generator(l, &action.apply_generator(k, x))
                });
                if !commute {
                    return bad(format!("maps {l} and {k} do not commute"));
                }
            }
        }
        Ok(action)
    }

    pub fn trivial(pi0: &FinAbGroup, pi1: &FinAbGroup) -> Self {
        let identity: Vec<Element> = (0..pi1.rank()).map(|j| pi1.generator(j)).collect();
        GroupAction {
            pi0: pi0.clone(),
            pi1: pi1.clone(),
            images: vec![identity; pi0.rank()],
        }
    }

    pub fn pi0(&self) -> &FinAbGroup {
        &self.pi0
    }

    pub fn pi1(&self) -> &FinAbGroup {
        &self.pi1
    }

    fn apply_generator(&self, k: usize, x: &[u64]) -> Element {
        let mut out = self.pi1.zero();
        for (j, &c) in x.iter().enumerate() {
            out = self.pi1.add(&out, &self.pi1.scale(&self.images[k][j], c));
        }
        out
    }

    fn apply_generator_times(&self, k: usize, x: &[u64], times: u64) -> Element {
        let mut y = x.to_vec();
        for _ in 0..times {
            y = self.apply_generator(k, &y);
        }
        y
    }

    /// `h · x` for `h ∈ π₀`.
    pub fn act(&self, h: &[u64], x: &[u64]) -> Element {
        h.iter().enumerate().fold(x.to_vec(), |y, (k, &c)| {
            self.apply_generator_times(k, &y, c)
        })
    }
}

fn check_image(action: &GroupAction, mu1_image: &[Element]) -> Result<(), ClassifyError> {
    match mu1_image.iter().find(|h| !action.pi0().contains(h)) {
        Some(h) => Err(ClassifyError::BadInput(format!(
            "{h:?} is not an element of pi0"
        ))),
        None => Ok(()),
    }
}

/// The subgroup `Γ_{μ₁}` of `π₁`, listed in lexicographic order.
pub fn gamma_subgroup(
    action: &GroupAction,
    mu1_image: &[Element],
) -> Result<Vec<Element>, ClassifyError> {
    check_image(action, mu1_image)?;
    let pi1 = action.pi1();
    let generators: BTreeSet<Element> = pi1
        .elements()
        .iter()
        .flat_map(|x| mu1_image.iter().map(move |h| pi1.sub(x, &action.act(h, x))))
        .filter(|g| *g != pi1.zero())
        .collect();
    let mut seen: BTreeSet<Element> = BTreeSet::from([pi1.zero()]);
    let mut queue = VecDeque::from([pi1.zero()]);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let y = pi1.add(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Representatives of `(π₁ / Γ_{μ₁}) / π₀`, each the lexicographically least
/// element of its class, in increasing order.
pub fn classify_bundles(
    action: &GroupAction,
    mu1_image: &[Element],
) -> Result<Vec<Element>, ClassifyError> {
    let gamma = gamma_subgroup(action, mu1_image)?;
    let gamma_set: BTreeSet<&Element> = gamma.iter().collect();
    let pi0 = action.pi0();
    let pi1 = action.pi1();
    // Always holds for commuting automorphisms; kept as an input check.
    for k in 0..pi0.rank() {
        let h = pi0.generator(k);
        if gamma
            .iter()
            .any(|x| !gamma_set.contains(&action.act(&h, x)))
        {
            return Err(ClassifyError::ActionNotDescending);
        }
    }
    let mut visited: BTreeSet<Element> = BTreeSet::new();
    let mut reps = Vec::new();
    // Elements come in increasing order, so the first unvisited element of
    // each class is its least member.
    for x in pi1.elements() {
        if visited.contains(&x) {
            continue;
        }
        reps.push(x.clone());
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            if !visited.insert(y.clone()) {
                continue;
            }
            for g in &gamma {
                queue.push_back(pi1.add(&y, g));
            }
            for k in 0..pi0.rank() {
                queue.push_back(action.act(&pi0.generator(k), &y));
            }
        }
    }
    Ok(reps)
}

fn check_even_dim(n: usize) -> Result<(), ClassifyError> {
    if n < 4 || !n.is_multiple_of(2) {
        Err(ClassifyError::BadInput(format!(
            "n must be even and at least 4, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn check_genus(g: usize) -> Result<(), ClassifyError> {
    if g < 2 {
        Err(ClassifyError::BadInput(format!(
            "genus must be at least 2, got {g}"
        )))
    } else {
        Ok(())
    }
}

fn check_enum_genus(g: usize) -> Result<(), ClassifyError> {
    check_genus(g)?;
    if g > MAX_ENUM_GENUS {
        return Err(ClassifyError::BadInput(format!(
            "genus {g} too large to enumerate (max {MAX_ENUM_GENUS})"
        )));
    }
    Ok(())
}

/// `π₀PO(n) = Z_2` acting on `π₁PO(n) = ker(Pin(n) -> PO(n))` for even
/// `n ≥ 4`. The non-trivial element sends `ω_n` to `-ω_n`.
///
/// For `n ≡ 0 (mod 4)`, `π₁ = Z_2 x Z_2` with generators `-1` and `ω_n`; for
/// `n ≡ 2 (mod 4)`, `ω_n² = -1` and `π₁ = Z_4` generated by `ω_n`.
pub fn po_action(n: usize) -> Result<GroupAction, ClassifyError> {
    check_even_dim(n)?;
    let pi0 = FinAbGroup::new(vec![2])?;
    if n.is_multiple_of(4) {
        let pi1 = FinAbGroup::new(vec![2, 2])?;
        GroupAction::new(&pi0, &pi1, vec![vec![vec![1, 0], vec![1, 1]]])
    } else {
        let pi1 = FinAbGroup::new(vec![4])?;
        GroupAction::new(&pi0, &pi1, vec![vec![vec![3]]])
    }
}

/// Names an element of `π₁PO(n)` as a kernel element of the Pin cover.
pub fn po_kernel_label(n: usize, x: &[u64]) -> KernelElement {
    if n.is_multiple_of(4) {
        match x {
            [0, 0] => KernelElement::One,
            [1, 0] => KernelElement::MinusOne,
            [0, 1] => KernelElement::Omega,
            _ => KernelElement::MinusOmega,
        }
    } else {
        match x {
            [0] => KernelElement::One,
            [1] => KernelElement::Omega,
            [2] => KernelElement::MinusOne,
            _ => KernelElement::MinusOmega,
        }
    }
}

fn mu2_of_kernel(k: KernelElement) -> Mu2Value {
    match k {
        KernelElement::One => Mu2Value::Zero,
        KernelElement::MinusOne => Mu2Value::One,
        KernelElement::Omega | KernelElement::MinusOmega => Mu2Value::Omega,
    }
}

/// Possible `μ₂` values of `PO(n)`-bundles with `μ₁` zero or non-zero,
/// computed through [`classify_bundles`].
pub fn po_mu2_range(n: usize, mu1_nonzero: bool) -> Result<Vec<Mu2Value>, ClassifyError> {
    let action = po_action(n)?;
    let image = if mu1_nonzero {
        vec![vec![1]]
    } else {
        vec![vec![0]]
    };
    let mut range: Vec<Mu2Value> = classify_bundles(&action, &image)?
        .iter()
        .map(|x| mu2_of_kernel(po_kernel_label(n, x)))
        .collect();
    range.sort();
    Ok(range)
}

/// All `(μ₁, μ₂)` classes for genus `g` and even `n ≥ 4`: the zero `μ₁`
/// first, then non-zero `μ₁` ordered by their integer encoding.
pub fn invariant_classes(g: usize, n: usize) -> Result<Vec<InvariantClass>, ClassifyError> {
    check_enum_genus(g)?;
    let zero_range = po_mu2_range(n, false)?;
    let nonzero_range = po_mu2_range(n, true)?;
    let len = 2 * g;
    let mut out = Vec::with_capacity((1usize << (len + 1)) + 1);
    for v in 0..1u64 << len {
        let mu1 = Mu1::from_index(v, len);
        let range = if v == 0 { &zero_range } else { &nonzero_range };
        for &mu2 in range {
            out.push(InvariantClass::new(mu1.clone(), mu2).expect("range respects mu1"));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiftTarget {
    SOn,
    Spinn,
    Pinn,
    On,
}

impl LiftTarget {
    pub const ALL: [LiftTarget; 4] = [
        LiftTarget::SOn,
        LiftTarget::Spinn,
        LiftTarget::Pinn,
        LiftTarget::On,
    ];
}

impl fmt::Display for LiftTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftTarget::SOn => "SO(n)",
            LiftTarget::Spinn => "Spin(n)",
            LiftTarget::Pinn => "Pin(n)",
            LiftTarget::On => "O(n)",
        })
    }
}

/// Whether a `PO(n)`-bundle of the given class lifts to the target group.
///
/// With `μ₁ = 0` the bundle reduces to `PSO(n)`; it lifts to `SO(n)` iff
/// `μ₂ ∈ {0, 1}` and to `Spin(n)` iff `μ₂ = 0`. The `O(n)` and `Pin(n)`
/// answers coincide with `SO(n)` and `Spin(n)` there, since a lift with
/// trivial component class reduces to the identity component. With
/// `μ₁ ≠ 0` only `O(n)` and `Pin(n)` make sense and both hold iff `μ₂ = 0`.
pub fn lifts_to(class: &InvariantClass, target: LiftTarget) -> Result<bool, ClassifyError> {
    let mu2 = class.mu2();
    if class.mu1().is_zero() {
        Ok(match target {
            LiftTarget::SOn | LiftTarget::On => matches!(mu2, Mu2Value::Zero | Mu2Value::One),
            LiftTarget::Spinn | LiftTarget::Pinn => mu2 == Mu2Value::Zero,
        })
    } else {
        match target {
            LiftTarget::SOn | LiftTarget::Spinn => Err(ClassifyError::TargetInvalidForClass {
                target,
                mu1: class.mu1().to_string(),
            }),
            LiftTarget::Pinn | LiftTarget::On => Ok(mu2 == Mu2Value::Zero),
        }
    }
}

/// `z₀ = (g - 1) n² / 4 mod 2`, the `w₂` value of the minima with non-zero
/// Higgs field.
pub fn z0(n: usize, g: usize) -> Result<bool, ClassifyError> {
    if !n.is_multiple_of(2) {
        return Err(ClassifyError::BadInput(format!("n must be even, got {n}")));
    }
    let half = (n / 2) as u128;
    let g1 = (g as u128)
        .checked_sub(1)
        .ok_or_else(|| ClassifyError::BadInput("genus must be at least 1".into()))?;
    Ok((g1 % 2) * ((half * half) % 2) % 2 == 1)
}

fn pow2(e: usize) -> Result<u128, ClassifyError> {
    1u128
        .checked_shl(e as u32)
        .filter(|_| e < 128)
        .ok_or(ClassifyError::Overflow)
}

/// Number of connected components of the moduli space of reductive
/// `PGL(n, R)` representations of a genus-`g` surface group.
pub fn component_count(n: usize, g: usize) -> Result<u128, ClassifyError> {
    check_genus(g)?;
    let top = pow2(2 * g + 1)?;
    match n {
        0 | 1 => Err(ClassifyError::BadInput(format!(
            "n must be at least 2, got {n}"
        ))),
        2 => Ok(top + 4 * g as u128 - 5),
        n if n % 2 == 1 => Ok(3),
        _ => Ok(top + 2),
    }
}

/// `w₂` value read as a `μ₂` value for `μ₁ = 0` and even degree.
fn mu2_of_w2(w2: bool) -> Mu2Value {
    if w2 {
        Mu2Value::One
    } else {
        Mu2Value::Zero
    }
}

/// Components of the representation space with invariants `class`: two for
/// `(0, z₀)` and one otherwise.
pub fn components_per_class(
    class: &InvariantClass,
    n: usize,
    g: usize,
) -> Result<u64, ClassifyError> {
    check_even_dim(n)?;
    check_genus(g)?;
    if class.mu1().len() != 2 * g {
        return Err(ClassifyError::BadInput(format!(
            "class has {} bits, expected {}",
            class.mu1().len(),
            2 * g
        )));
    }
    let special = class.mu1().is_zero() && class.mu2() == mu2_of_w2(z0(n, g)?);
    Ok(if special { 2 } else { 1 })
}

/// Per-class component multiplicities with their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport<C> {
    pub rows: Vec<(C, u64)>,
    pub total: u64,
}

pub fn pgl_component_report(
    n: usize,
    g: usize,
) -> Result<ComponentReport<InvariantClass>, ClassifyError> {
    let rows = invariant_classes(g, n)?
        .into_iter()
        .map(|c| {
            let m = components_per_class(&c, n, g)?;
            Ok((c, m))
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let total = rows.iter().map(|(_, m)| m).sum();
    Ok(ComponentReport { rows, total })
}

/// Second invariant of a twisted orthogonal bundle `(V, L, Q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistedPayload {
    /// `μ̄₁ = 0`, `deg L` even: `(w₂(V ⊗ L^{-1/2}), deg L)`.
    EvenDegree { w2: bool, deg: i64 },
    /// `μ̄₁ = 0`, `deg L` odd.
    OddDegree { deg: i64 },
    /// `μ̄₁ ≠ 0`: just `deg L`.
    Degree { deg: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistedClass {
    mu1bar: Mu1,
    payload: TwistedPayload,
}

impl TwistedClass {
    pub fn new(mu1bar: Mu1, payload: TwistedPayload) -> Result<Self, ClassifyError> {
        let ok = match payload {
            TwistedPayload::EvenDegree { deg, .. } => mu1bar.is_zero() && deg % 2 == 0,
            TwistedPayload::OddDegree { deg } => mu1bar.is_zero() && deg % 2 != 0,
            TwistedPayload::Degree { .. } => !mu1bar.is_zero(),
        };
        if !ok {
            return Err(ClassifyError::BadInput(format!(
                "payload {payload:?} does not fit mu1bar {mu1bar}"
            )));
        }
        Ok(TwistedClass { mu1bar, payload })
    }

    /// Picks the payload shape from `μ̄₁` and the parity of `deg`; `w2` is
    /// required exactly when `μ̄₁ = 0` and `deg` is even.
    pub fn from_parts(mu1bar: Mu1, w2: Option<bool>, deg: i64) -> Result<Self, ClassifyError> {
        let payload = match (mu1bar.is_zero(), deg % 2 == 0, w2) {
            (true, true, Some(w2)) => TwistedPayload::EvenDegree { w2, deg },
            (true, true, None) => {
                return Err(ClassifyError::BadInput(
                    "w2 is required when mu1bar = 0 and deg is even".into(),
                ))
            }
            (_, _, Some(_)) => {
                return Err(ClassifyError::BadInput(
                    "w2 is only part of the invariant when mu1bar = 0 and deg is even".into(),
                ))
            }
            (true, false, None) => TwistedPayload::OddDegree { deg },
            (false, _, None) => TwistedPayload::Degree { deg },
        };
        Self::new(mu1bar, payload)
    }

    pub fn mu1bar(&self) -> &Mu1 {
        &self.mu1bar
    }

    pub fn payload(&self) -> TwistedPayload {
        self.payload
    }

    pub fn deg(&self) -> i64 {
        match self.payload {
            TwistedPayload::EvenDegree { deg, .. }
            | TwistedPayload::OddDegree { deg }
            | TwistedPayload::Degree { deg } => deg,
        }
    }
}

impl fmt::Display for TwistedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.payload {
            TwistedPayload::EvenDegree { w2, deg } => {
                write!(f, "({}, ({}, {}))", self.mu1bar, w2 as u8, deg)
            }
            TwistedPayload::OddDegree { deg } | TwistedPayload::Degree { deg } => {
                write!(f, "({}, {})", self.mu1bar, deg)
            }
        }
    }
}

/// Invariants of the `PO(n)`-bundle underlying a twisted orthogonal bundle.
pub fn project_twisted(class: &TwistedClass) -> InvariantClass {
    let mu2 = match class.payload {
        TwistedPayload::EvenDegree { w2, .. } => mu2_of_w2(w2),
        TwistedPayload::OddDegree { .. } => Mu2Value::Omega,
        TwistedPayload::Degree { deg } if deg % 2 == 0 => Mu2Value::Zero,
        TwistedPayload::Degree { .. } => Mu2Value::Omega,
    };
    InvariantClass::new(class.mu1bar.clone(), mu2).expect("One only arises with mu1bar = 0")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EglRow {
    pub class: TwistedClass,
    /// Components of the full moduli space with this invariant.
    pub components: u64,
    /// Components of the fibre over a fixed line bundle `L`.
    pub fibre_components: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EglComponentReport {
    pub deg: i64,
    pub rows: Vec<EglRow>,
    pub total: u64,
    pub fibre_total: u64,
}

/// Component counts of the `EGL(n, R)`-Higgs moduli space with `deg L = 0`
/// or `1`, per twisted class, for the whole space and for a fixed-`L` fibre.
///
/// Degree 0: every class is connected except `(0, (z₀, 0))`, which has two
/// components, and `2^{2g} + 1` in a fixed fibre. Degree 1: every `μ̄₁` class
/// is connected, in the total space and in the fibre.
pub fn egl_component_counts(
    deg: i64,
    g: usize,
    n: usize,
) -> Result<EglComponentReport, ClassifyError> {
    check_enum_genus(g)?;
    check_even_dim(n)?;
    let len = 2 * g;
    let z = z0(n, g)?;
    let mut rows = Vec::new();
    match deg {
        0 => {
            for w2 in [false, true] {
                let special = w2 == z;
                rows.push(EglRow {
                    class: TwistedClass::new(
                        Mu1::zero(len),
                        TwistedPayload::EvenDegree { w2, deg: 0 },
                    )?,
                    components: if special { 2 } else { 1 },
                    fibre_components: if special { (1u64 << len) + 1 } else { 1 },
                });
            }
        }
        1 => rows.push(EglRow {
            class: TwistedClass::new(Mu1::zero(len), TwistedPayload::OddDegree { deg: 1 })?,
            components: 1,
            fibre_components: 1,
        }),
        _ => {
            return Err(ClassifyError::BadInput(format!(
                "deg must be 0 or 1, got {deg}"
            )))
        }
    }
    for v in 1..1u64 << len {
        rows.push(EglRow {
            class: TwistedClass::new(Mu1::from_index(v, len), TwistedPayload::Degree { deg })?,
            components: 1,
            fibre_components: 1,
        });
    }
    let total = rows.iter().map(|r| r.components).sum();
    let fibre_total = rows.iter().map(|r| r.fibre_components).sum();
    Ok(EglComponentReport {
        deg,
        rows,
        total,
        fibre_total,
    })
}

/// Cup product pairing on `H¹(X; Z_2)` in a symplectic basis
/// `a_1, b_1, ..., a_g, b_g`.
pub fn symplectic_pairing(a: &Mu1, b: &Mu1) -> Result<bool, ClassifyError> {
    if a.len() != b.len() || !a.len().is_multiple_of(2) {
        return Err(ClassifyError::BadInput(format!(
            "cannot pair classes of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let (a, b) = (a.bits(), b.bits());
    Ok((0..a.len() / 2).fold(false, |acc, i| {
        acc ^ (a[2 * i] & b[2 * i + 1]) ^ (a[2 * i + 1] & b[2 * i])
    }))
}

/// Stiefel-Whitney classes `(w₁, w₂)` of `W ⊗ F` for a rank-`n` bundle `W`
/// and a real line bundle `F` with `w₁(F) = f1`.
pub fn tensor_by_line_bundle(
    w1: &Mu1,
    w2: bool,
    f1: &Mu1,
    n: usize,
) -> Result<(Mu1, bool), ClassifyError> {
    if !n.is_multiple_of(2) {
        return Err(ClassifyError::BadInput(format!("n must be even, got {n}")));
    }
    Ok((w1.clone(), w2 ^ symplectic_pairing(w1, f1)?))
}

/// Complex dimension `2 n² (g - 1) + 2` of the moduli space of
/// `GL(n, C)`-Higgs bundles.
pub fn moduli_dimension(n: usize, g: usize) -> Result<u128, ClassifyError> {
    if n < 1 {
        return Err(ClassifyError::BadInput("n must be at least 1".into()));
    }
    check_genus(g)?;
    let n = n as u128;
    2u128
        .checked_mul(n)
        .and_then(|x| x.checked_mul(n))
        .and_then(|x| x.checked_mul(g as u128 - 1))
        .and_then(|x| x.checked_add(2))
        .ok_or(ClassifyError::Overflow)
}
