//! Certificates that `γ^{(n,j)}` and `γ'^{(n,j)}` are `d`-good or `(d+1)`-good
//! for `γ^{(n,1)}`, where `d = ⌊n/2⌋ - 1`, built by the induction on `d` and
//! re-checked independently by [`verify_certificate`].
//!
//! A certificate flattens its decomposition `(0, g)` into leaves: vectors with
//! multiplicities whose sum is `g`. Each leaf is either some `γ^{(m,1)}` or a
//! composite `γ^{(m,1)} + Σ (0, g_k)` backed by child certificates.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::eulerian::{gamma, gamma_nj};
use crate::ffk::{dominates, is_ffk_vector};
use crate::transforms::{CountVector, Role};

/// `D`: summands are `(d-1)`-FFK with `(i+1) s_i <= f_i`, composite is `d`-FFK.
/// `DPlusOne`: summands are `d`-FFK and dominated, composite is `(d+1)`-FFK.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GoodKind {
    D,
    DPlusOne,
}

impl GoodKind {
    pub fn modulus(self, d: usize) -> usize {
        match self {
            GoodKind::D => d,
            GoodKind::DPlusOne => d + 1,
        }
    }
}

impl fmt::Display for GoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GoodKind::D => "d-good",
            GoodKind::DPlusOne => "(d+1)-good",
        })
    }
}

/// The coning lemma that absorbs a leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeafRule {
    /// `(d-1)`-FFK with `(i+1) s_i <= f_i`; coned over a `φ`-embedded copy.
    ScaledDomination,
    /// `d`-FFK and dominated by `f`; coned with a new color.
    Domination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProofCase {
    /// `γ'^{(n,1)} = (0, 2γ^{(n,1)})`.
    DegeneratePrimed,
    /// `n` even, unprimed, `1 < j <= n/2`.
    EvenUnprimed,
    /// `n` even, primed, `1 < j <= n/2`.
    EvenPrimed,
    /// `n` odd, `j = (n+1)/2`.
    OddMiddle,
    /// `n` odd, unprimed, `1 < j < (n+1)/2`.
    OddUnprimed,
    /// `n` odd, primed, `1 < j < (n+1)/2`.
    OddPrimed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafOrigin {
    /// The leaf is `γ^{(m,1)}`.
    Reference { m: usize },
    /// The leaf is `γ^{(m,1)} + Σ parts[k].target`.
    Composite { m: usize, parts: Vec<Arc<GoodnessCertificate>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leaf {
    pub vector: CountVector,
    pub multiplicity: BigInt,
    pub origin: LeafOrigin,
    pub rule: LeafRule,
}

/// Which closed form matched `γ'^{(n,1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegenerateIdentity {
    /// `γ'^{(n,1)} = (0, 2γ^{(n,1)})`.
    pub current: bool,
    /// `γ'^{(n,1)} = (0, 2γ^{(n-1,1)})`; `None` for `n = 2`.
    pub previous: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessCertificate {
    pub n: usize,
    pub j: usize,
    pub primed: bool,
    /// `⌊n/2⌋ - 1`, the degree of the reference.
    pub d: usize,
    /// `γ^{(n,1)}`.
    pub reference: CountVector,
    pub kind: GoodKind,
    pub case: ProofCase,
    /// `(0, g)`.
    pub target: CountVector,
    pub leaves: Vec<Leaf>,
    /// Sub-certificates used by the recursion, in the order the case lists them.
    pub children: Vec<Arc<GoodnessCertificate>>,
    pub degenerate: Option<DegenerateIdentity>,
}

impl GoodnessCertificate {
    pub fn key(&self) -> (usize, usize, bool) {
        (self.n, self.j, self.primed)
    }

    /// Modulus at which `reference + target` is claimed FFK.
    pub fn composite_modulus(&self) -> usize {
        self.kind.modulus(self.d)
    }

    pub fn composite(&self) -> CountVector {
        (&self.reference + &self.target).with_role(Role::F)
    }
}

/// The `j` for which the induction makes a claim: `1 < j <= n/2` (even,
/// unprimed), `1 <= j <= n/2` (even, primed), `1 < j <= (n+1)/2` (odd,
/// unprimed), `1 <= j < (n+1)/2` (odd, primed).
pub fn admissible_range(n: usize, primed: bool) -> std::ops::RangeInclusive<usize> {
    match (n % 2 == 0, primed) {
        (true, false) => 2..=n / 2,
        (true, true) => 1..=n / 2,
        (false, false) => 2..=(n + 1) / 2,
        (false, true) => 1..=(n - 1) / 2,
    }
}

pub fn is_admissible(n: usize, j: usize, primed: bool) -> bool {
    n >= 2 && admissible_range(n, primed).contains(&j)
}

fn expected_kind(n: usize, primed: bool) -> GoodKind {
    if n % 2 == 0 && !primed {
        GoodKind::D
    } else {
        GoodKind::DPlusOne
    }
}

type Key = (usize, usize, bool);

fn memo() -> &'static RwLock<HashMap<Key, Arc<GoodnessCertificate>>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, Arc<GoodnessCertificate>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Builds (or fetches) the certificate for `γ^{(n,j)}` or `γ'^{(n,j)}`.
pub fn goodness_certificate(n: usize, j: usize, primed: bool) -> Result<Arc<GoodnessCertificate>> {
    if !is_admissible(n, j, primed) {
        return Err(Error::IndexOutOfRange { n, j });
    }
    if let Some(c) = memo().read().expect("memo lock").get(&(n, j, primed)) {
        return Ok(Arc::clone(c));
    }
    let built = Arc::new(build(n, j, primed)?);
    let mut guard = memo().write().expect("memo lock");
    Ok(Arc::clone(guard.entry((n, j, primed)).or_insert(built)))
}

/// Every admissible certificate with `2 <= n <= n_max`.
pub fn all_certificates(n_max: usize) -> Result<Vec<Arc<GoodnessCertificate>>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for primed in [false, true] {
            for j in admissible_range(n, primed) {
                out.push(goodness_certificate(n, j, primed)?);
            }
        }
    }
    Ok(out)
}

#[derive(Default)]
struct LeafSet {
    leaves: Vec<Leaf>,
}

impl LeafSet {
    fn push(&mut self, leaf: Leaf) {
        if let Some(existing) = self
            .leaves
            .iter_mut()
            .find(|l| l.vector == leaf.vector && l.rule == leaf.rule && l.origin == leaf.origin)
        {
            existing.multiplicity += leaf.multiplicity;
        } else {
            self.leaves.push(leaf);
        }
    }

    /// Adds the leaves of `child`, scaled by `mult`, under `rule`.
    fn lift(&mut self, child: &GoodnessCertificate, mult: u32, rule: LeafRule) {
        for leaf in &child.leaves {
            self.push(Leaf {
                vector: leaf.vector.clone(),
                multiplicity: &leaf.multiplicity * mult,
                origin: leaf.origin.clone(),
                rule,
            });
        }
    }
}

fn build(n: usize, j: usize, primed: bool) -> Result<GoodnessCertificate> {
    let d = n / 2 - 1;
    let reference = gamma(n, 1)?;
    let target = gamma_nj(n, j, primed)?.vector;
    let kind = expected_kind(n, primed);
    let even = n % 2 == 0;
    let mut leaves = LeafSet::default();
    let mut children = Vec::new();
    let mut degenerate = None;

    let case = if primed && j == 1 {
        let current = target == reference.shifted().scale(&BigInt::from(2));
        let previous = (n >= 3)
            .then(|| gamma(n - 1, 1).map(|g| target == g.shifted().scale(&BigInt::from(2))))
            .transpose()?;
        if !current {
            return Err(Error::HypothesisViolation(format!(
                "γ'^({n},1) = {target} is not (0, 2γ^({n},1))"
            )));
        }
        degenerate = Some(DegenerateIdentity { current, previous });
        leaves.push(Leaf {
            vector: reference.clone(),
            multiplicity: BigInt::from(2),
            origin: LeafOrigin::Reference { m: n },
            rule: LeafRule::Domination,
        });
        ProofCase::DegeneratePrimed
    } else if even && !primed {
        // 2 Σ_{k<j} γ'^{(n-1,k)} + Σ_{k=j}^{n/2} γ^{(n-1,k)}, moved over by scaled domination
        for k in 1..j {
            let c = goodness_certificate(n - 1, k, true)?;
            leaves.lift(&c, 2, LeafRule::ScaledDomination);
            children.push(c);
        }
        for k in j..=n / 2 {
            let c = goodness_certificate(n - 1, k, false)?;
            leaves.lift(&c, 1, LeafRule::ScaledDomination);
            children.push(c);
        }
        ProofCase::EvenUnprimed
    } else if !even && !primed && j == (n + 1) / 2 {
        for k in 1..=(n - 1) / 2 {
            let c = goodness_certificate(n - 1, k, true)?;
            leaves.lift(&c, 1, LeafRule::Domination);
            children.push(c);
        }
        ProofCase::OddMiddle
    } else if !even && !primed {
        for k in 1..j {
            let c = goodness_certificate(n - 1, k, true)?;
            leaves.lift(&c, 2, LeafRule::Domination);
            children.push(c);
        }
        for k in j..=(n - 1) / 2 {
            let c = goodness_certificate(n - 1, k, false)?;
            leaves.lift(&c, 1, LeafRule::Domination);
            children.push(c);
        }
        ProofCase::OddUnprimed
    } else {
        // Σ_{k=2}^{j-1} γ'^{(n-1,k)} + (0, 2f), f = γ^{(n-1,1)} + Σ_{k=j}^{⌊n/2⌋} γ^{(n-1,k)}
        let primed_rule = if even { LeafRule::ScaledDomination } else { LeafRule::Domination };
        for k in 2..j {
            let c = goodness_certificate(n - 1, k, true)?;
            leaves.lift(&c, 1, primed_rule);
            children.push(c);
        }
        let parts: Vec<Arc<GoodnessCertificate>> =
            (j..=n / 2).map(|k| goodness_certificate(n - 1, k, false)).collect::<Result<_>>()?;
        let mut f = gamma(n - 1, 1)?;
        for p in &parts {
            f += &p.target;
        }
        children.extend(parts.iter().cloned());
        leaves.push(Leaf {
            vector: f,
            multiplicity: BigInt::from(2),
            origin: LeafOrigin::Composite { m: n - 1, parts },
            rule: LeafRule::Domination,
        });
        if even {
            ProofCase::EvenPrimed
        } else {
            ProofCase::OddPrimed
        }
    };

    Ok(GoodnessCertificate {
        n,
        j,
        primed,
        d,
        reference,
        kind,
        case,
        target,
        leaves: leaves.leaves,
        children,
        degenerate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    OutOfRange,
    ReferenceMismatch,
    TargetMismatch { expected: CountVector, found: CountVector },
    KindMismatch { expected: GoodKind, found: GoodKind },
    NonzeroConstantTerm,
    SumMismatch { expected: CountVector, found: CountVector },
    OriginMismatch { leaf: usize },
    RuleNotAllowed { leaf: usize },
    SummandTooLong { leaf: usize },
    SummandNotFfk { leaf: usize, modulus: usize },
    DominationViolated { leaf: usize, index: usize },
    ScaledBoundViolated { leaf: usize, index: usize },
    CompositeNotFfk { modulus: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// `(n, j, primed)` of the certificate where the check failed.
    pub at: (usize, usize, bool),
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateReport {
    pub violations: Vec<Violation>,
    /// Observations that do not invalidate the certificate.
    pub notes: Vec<String>,
    pub certificates_checked: usize,
}

impl CertificateReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_domination_violation(&self) -> bool {
        self.violations.iter().any(|v| {
            matches!(v.kind, ViolationKind::DominationViolated { .. } | ViolationKind::ScaledBoundViolated { .. })
        })
    }
}

#[derive(Default)]
struct Verifier {
    report: CertificateReport,
    visited: HashMap<*const GoodnessCertificate, ()>,
    ffk: HashMap<(Vec<BigInt>, usize), bool>,
}

impl Verifier {
    fn ffk(&mut self, v: &CountVector, modulus: usize) -> bool {
        let key = (v.trimmed().into_entries(), modulus);
        if let Some(&b) = self.ffk.get(&key) {
            return b;
        }
        let b = is_ffk_vector(v, modulus).unwrap_or(false);
        self.ffk.insert(key, b);
        b
    }

    fn child(&mut self, c: &Arc<GoodnessCertificate>) {
        if self.visited.insert(Arc::as_ptr(c), ()).is_none() {
            self.node(c);
        }
    }

    fn node(&mut self, cert: &GoodnessCertificate) {
        self.report.certificates_checked += 1;
        let at = cert.key();
        let fail = |r: &mut CertificateReport, kind| r.violations.push(Violation { at, kind });
        let (n, j, primed) = at;
        if !is_admissible(n, j, primed) {
            fail(&mut self.report, ViolationKind::OutOfRange);
            return;
        }
        let d = n / 2 - 1;
        let reference = gamma(n, 1).expect("n >= 2");
        if cert.d != d || cert.reference != reference {
            fail(&mut self.report, ViolationKind::ReferenceMismatch);
        }
        let expected = gamma_nj(n, j, primed).expect("admissible index").vector;
        if cert.target != expected {
            fail(&mut self.report, ViolationKind::TargetMismatch { expected: expected.clone(), found: cert.target.clone() });
        }
        if !cert.target.get(0).is_zero() {
            fail(&mut self.report, ViolationKind::NonzeroConstantTerm);
        }
        let kind = expected_kind(n, primed);
        if cert.kind != kind {
            fail(&mut self.report, ViolationKind::KindMismatch { expected: kind, found: cert.kind });
        }

        let mut sum = CountVector::zeros(Role::Gamma, 0);
        for leaf in &cert.leaves {
            sum += &leaf.vector.scale(&leaf.multiplicity);
        }
        let sum = sum.shifted();
        if sum != expected {
            fail(&mut self.report, ViolationKind::SumMismatch { expected: expected.clone(), found: sum });
        }

        for (i, leaf) in cert.leaves.iter().enumerate() {
            let recomputed = match &leaf.origin {
                LeafOrigin::Reference { m } => gamma(*m, 1).ok(),
                LeafOrigin::Composite { m, parts } => {
                    for p in parts {
                        self.child(p);
                    }
                    let mut f = gamma(*m, 1).ok();
                    for p in parts {
                        if p.n != *m {
                            f = None;
                        }
                        if let Some(f) = f.as_mut() {
                            *f += &p.target;
                        }
                    }
                    f
                }
            };
            if recomputed.as_ref() != Some(&leaf.vector) {
                fail(&mut self.report, ViolationKind::OriginMismatch { leaf: i });
            }
            match leaf.rule {
                LeafRule::ScaledDomination => {
                    if d == 0 || leaf.vector.support_len() > d {
                        fail(&mut self.report, ViolationKind::SummandTooLong { leaf: i });
                    } else if !self.ffk(&leaf.vector, d - 1) {
                        fail(&mut self.report, ViolationKind::SummandNotFfk { leaf: i, modulus: d - 1 });
                    }
                    let len = leaf.vector.len().max(reference.len());
                    if let Some(index) =
                        (0..len).find(|&k| BigInt::from(k + 1) * leaf.vector.get(k) > reference.get(k))
                    {
                        fail(&mut self.report, ViolationKind::ScaledBoundViolated { leaf: i, index });
                    }
                }
                LeafRule::Domination => {
                    if kind == GoodKind::D {
                        fail(&mut self.report, ViolationKind::RuleNotAllowed { leaf: i });
                    }
                    if leaf.vector.support_len() > d + 1 {
                        fail(&mut self.report, ViolationKind::SummandTooLong { leaf: i });
                    } else if !self.ffk(&leaf.vector, d) {
                        fail(&mut self.report, ViolationKind::SummandNotFfk { leaf: i, modulus: d });
                    }
                    if !dominates(&reference, &leaf.vector) {
                        let len = leaf.vector.len().max(reference.len());
                        let index = (0..len).find(|&k| leaf.vector.get(k) > reference.get(k)).unwrap_or(0);
                        fail(&mut self.report, ViolationKind::DominationViolated { leaf: i, index });
                    }
                }
            }
        }

        let modulus = kind.modulus(d);
        let composite = (&reference + &expected).with_role(Role::F);
        if !self.ffk(&composite, modulus) {
            fail(&mut self.report, ViolationKind::CompositeNotFfk { modulus });
        }

        let top = modulus;
        if expected.get(top).is_zero() {
            self.report.notes.push(format!(
                "({n},{j}{}): g_{top} = 0, so every summand is shorter than the reference",
                if primed { ",primed" } else { "" }
            ));
        }

        for c in &cert.children {
            self.child(c);
        }
    }
}

/// Re-checks a certificate and all certificates it references.
pub fn verify_certificate(cert: &GoodnessCertificate) -> CertificateReport {
    let mut v = Verifier::default();
    v.node(cert);
    v.report
}
