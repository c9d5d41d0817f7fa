//! The full claim suite run by `ringcomm verify`.
//!
//! Every run reports each id in [`CLAIM_IDS`], as pass, fail, or skipped with a reason.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bounds::{BoundCheck, BoundContext, BoundStatus};
use crate::catalog;
use crate::commutators::{
    center, centralizer, commutator_image, pr_spectrum, pr_spectrum_bruteforce, Coset,
};
use crate::error::{Error, Result};
use crate::graph::{edge_counts, identity_report, EdgeCase, MAX_GRAPH_ORDER};
use crate::isoclinism::{find_isoclinism, verify_invariance, verify_witness, IsoclinismOutcome};
use crate::probability::{format_fraction, Fraction};
use crate::ring::{FiniteRing, RingElement};

pub const CLAIM_IDS: [&str; 13] = [
    "L2.1",
    "L2.2",
    "T2.3",
    "C2.4",
    "P2.5",
    "P2.6",
    "P2.7a",
    "P2.7b-even",
    "P2.7b-odd",
    "P2.8",
    "P2.9",
    "P2.10",
    "T3.1",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Skipped => "skipped",
        }
    }
}

/// Outcome of one claim. For a pass, `lhs`/`rhs` are the sides of the first instance
/// checked; for a failure, those of the first failing instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub status: ClaimStatus,
    pub lhs: Option<Fraction>,
    pub rhs: Option<Fraction>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub ring_id: String,
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn render(&self) -> String {
        let mut out = format!("ring: {}\n", self.ring_id);
        for c in &self.claims {
            let side = |f: &Option<Fraction>| f.as_ref().map_or("-".to_string(), format_fraction);
            let _ = writeln!(
                out,
                "{:<11} {:<8} lhs={} rhs={} {}",
                c.id,
                c.status.as_str(),
                side(&c.lhs),
                side(&c.rhs),
                c.detail
            );
        }
        let count = |s| self.claims.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "result: {} ({} pass, {} fail, {} skipped)",
            if self.passed() { "pass" } else { "fail" },
            count(ClaimStatus::Pass),
            count(ClaimStatus::Fail),
            count(ClaimStatus::Skipped)
        );
        out
    }
}

/// Accumulates instances of one claim.
struct Tally {
    id: &'static str,
    checked: usize,
    first: Option<(Fraction, Fraction)>,
    failure: Option<(Fraction, Fraction, String)>,
    note: String,
}

impl Tally {
    fn new(id: &'static str) -> Self {
        Tally {
            id,
            checked: 0,
            first: None,
            failure: None,
            note: String::new(),
        }
    }

    fn record(&mut self, lhs: Fraction, rhs: Fraction, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        self.first.get_or_insert((lhs, rhs));
        if !ok && self.failure.is_none() {
            self.failure = Some((lhs, rhs, what()));
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    fn finish(self, empty_reason: &str) -> ClaimResult {
        let suffix = if self.note.is_empty() {
            String::new()
        } else {
            format!("; {}", self.note)
        };
        match (self.failure, self.first) {
            (Some((lhs, rhs, what)), _) => ClaimResult {
                id: self.id,
                status: ClaimStatus::Fail,
                lhs: Some(lhs),
                rhs: Some(rhs),
                detail: format!("fails at {what}{suffix}"),
            },
            (None, Some((lhs, rhs))) => ClaimResult {
                id: self.id,
                status: ClaimStatus::Pass,
                lhs: Some(lhs),
                rhs: Some(rhs),
                detail: format!("{} instance(s){suffix}", self.checked),
            },
            (None, None) => skipped(self.id, empty_reason),
        }
    }
}

fn skipped(id: &'static str, reason: impl Into<String>) -> ClaimResult {
    ClaimResult {
        id,
        status: ClaimStatus::Skipped,
        lhs: None,
        rhs: None,
        detail: reason.into(),
    }
}

fn int(n: usize) -> Fraction {
    Fraction::from_integer(n as i64)
}

fn centralizer_claims(ring: &FiniteRing) -> Result<(ClaimResult, ClaimResult)> {
    let mut sizes = Tally::new("L2.1");
    let mut cosets = Tally::new("L2.2");
    for x in ring.elements() {
        let cent = centralizer(ring, x)?;
        let image = commutator_image(ring, x)?;
        sizes.record(int(image.len() * cent.len()), int(ring.order()), image.len() * cent.len() == ring.order(), || {
            format!("x={x}")
        });

        let mut solutions: BTreeMap<RingElement, Vec<RingElement>> = BTreeMap::new();
        for y in ring.elements() {
            solutions.entry(ring.comm(x, y)).or_default().push(y.clone());
        }
        for r in ring.elements() {
            match solutions.get(r) {
                None => cosets.record(int(0), int(0), !image.contains(r), || {
                    format!("x={x} r={r}: no solutions but r is in [x,R]")
                }),
                Some(t) => {
                    let coset = Coset::new(t[0].clone(), cent.clone());
                    let ok = image.contains(r) && t.len() == cent.len() && coset.members() == *t;
                    cosets.record(int(t.len()), int(cent.len()), ok, || format!("x={x} r={r}"));
                }
            }
        }
    }
    Ok((sizes.finish("empty ring"), cosets.finish("empty ring")))
}

pub fn verify_ring(ring: &FiniteRing, ring_id: &str) -> Result<VerificationReport> {
    let mut claims = Vec::with_capacity(CLAIM_IDS.len());
    let n = ring.order();
    let commutative = ring.is_commutative();
    let brute = pr_spectrum_bruteforce(ring)?;
    let formula = pr_spectrum(ring)?;

    let (l21, l22) = centralizer_claims(ring)?;
    claims.push(l21);
    claims.push(l22);

    // image form: (1/|R|) sum over x with r in [x,R] of 1/|[x,R]|
    let mut inverse_form = vec![Fraction::from_integer(0); n];
    let mut centralizer_total = 0usize;
    let mut inverse_total = Fraction::from_integer(0);
    for x in ring.elements() {
        let image = commutator_image(ring, x)?;
        let term = Fraction::new(1, image.len() as i64);
        for r in image.members() {
            inverse_form[ring.index_of(r)] += term;
        }
        inverse_total += term;
        centralizer_total += centralizer(ring, x)?.len();
    }
    let mut t23 = Tally::new("T2.3");
    for (i, (r, p)) in brute.entries().iter().enumerate() {
        let via_centralizers = formula.entries()[i].1.value();
        let via_images = inverse_form[i] / int(n);
        t23.record(
            p.value(),
            via_centralizers,
            p.value() == via_centralizers && via_centralizers == via_images,
            || format!("r={r}"),
        );
    }
    claims.push(t23.finish("empty ring"));

    let mut c24 = Tally::new("C2.4");
    let pr = brute.entries()[0].1.value();
    let via_centralizers = Fraction::new(centralizer_total as i64, (n * n) as i64);
    c24.record(pr, via_centralizers, pr == via_centralizers && pr == inverse_total / int(n), || {
        "r=0".to_string()
    });
    claims.push(c24.finish("empty ring"));

    claims.push(product_claim(ring, &brute)?);

    let mut p26 = Tally::new("P2.6");
    for (r, p) in brute.entries() {
        let q = brute.get(&ring.shape().neg(r)).expect("negation stays in R");
        p26.record(p.value(), q.value(), *p == q, || format!("r={r}"));
    }
    claims.push(p26.finish("empty ring"));

    claims.extend(edge_claims(ring, &brute)?);
    claims.extend(bound_claims(ring, commutative)?);
    claims.push(isoclinism_claim(ring, commutative)?);

    debug_assert!(claims.iter().map(|c| c.id).eq(CLAIM_IDS));
    Ok(VerificationReport {
        ring_id: ring_id.to_string(),
        claims,
    })
}

fn product_claim(ring: &FiniteRing, brute: &crate::commutators::Spectrum) -> Result<ClaimResult> {
    let companion = catalog::e4();
    let product = match ring.direct_product(&companion) {
        Ok(p) => p,
        Err(Error::OrderOverflow { order, limit }) => {
            return Ok(skipped(
                "P2.5",
                format!("R x E4 has order {order} > {limit}"),
            ))
        }
        Err(e) => return Err(e),
    };
    let companion_spectrum = pr_spectrum_bruteforce(&companion)?;
    let product_spectrum = pr_spectrum_bruteforce(&product)?;
    let mut tally = Tally::new("P2.5").note("companion E4");
    for (r1, p1) in brute.entries() {
        for (r2, p2) in companion_spectrum.entries() {
            let whole = product_spectrum
                .get(&FiniteRing::pair(r1, r2))
                .expect("pair lies in product");
            let split = *p1 * *p2;
            tally.record(whole.value(), split.value(), whole == split, || {
                format!("r=({r1}),({r2})")
            });
        }
    }
    Ok(tally.finish("empty ring"))
}

fn edge_claims(
    ring: &FiniteRing,
    brute: &crate::commutators::Spectrum,
) -> Result<Vec<ClaimResult>> {
    let ids = ["P2.7a", "P2.7b-even", "P2.7b-odd"];
    if ring.order() > MAX_GRAPH_ORDER {
        let reason = format!("order {} > graph limit {MAX_GRAPH_ORDER}", ring.order());
        return Ok(ids.iter().map(|id| skipped(id, reason.clone())).collect());
    }
    let counts = edge_counts(ring)?;
    let mut tallies = ids.map(Tally::new);
    for (i, (r, p)) in brute.entries().iter().enumerate() {
        let report = identity_report(ring, r, counts[i], *p);
        let slot = match report.case {
            EdgeCase::Zero => 0,
            EdgeCase::Involutive => 1,
            EdgeCase::Generic => 2,
        };
        let edges = report.edge_count;
        tallies[slot].record(p.value(), report.from_edges, report.holds, || {
            format!("r={r} |E|={edges}")
        });
    }
    let [a, even, odd] = tallies;
    Ok(vec![
        a.finish("no zero element"),
        even.finish("no r != 0 with 2r = 0"),
        odd.finish("no r with 2r != 0"),
    ])
}

fn bound_claims(ring: &FiniteRing, commutative: bool) -> Result<Vec<ClaimResult>> {
    let ctx = BoundContext::new(ring)?;
    let mut lower = Tally::new("P2.8");
    let mut gated = 0usize;
    let mut below = Tally::new("P2.9");
    let mut upper = Tally::new("P2.10");
    for r in ring.elements() {
        let report = ctx.check(r)?;
        let b: &BoundCheck = &report.below_commuting;
        below.record(b.lhs, b.rhs, b.status == BoundStatus::Pass, || format!("r={r}"));
        if let Ok(check) = &report.central_index_lower {
            if check.status == BoundStatus::Gated {
                gated += 1;
            } else {
                lower.record(check.lhs, check.rhs, check.status == BoundStatus::Pass, || {
                    format!("r={r}")
                });
            }
        }
        if let (Ok(u), Ok(cap)) = (&report.smallest_prime_upper, &report.smallest_prime_cap) {
            let ok = u.status == BoundStatus::Pass && cap.status == BoundStatus::Pass;
            upper.record(u.lhs, u.rhs, ok, || format!("r={r}"));
        }
    }
    let p = ctx.smallest_prime();
    let z = center(ring).len();
    if commutative {
        return Ok(vec![
            skipped("P2.8", "ring is commutative"),
            below.finish("empty ring"),
            skipped("P2.10", "ring is commutative"),
        ]);
    }
    Ok(vec![
        lower
            .note(format!("|R:Z|={}; {gated} unrealized r gated", ring.order() / z))
            .finish("no realized non-zero commutator"),
        below.finish("empty ring"),
        upper.note(format!("p={p}")).finish("no r != 0"),
    ])
}

fn isoclinism_claim(ring: &FiniteRing, commutative: bool) -> Result<ClaimResult> {
    const ID: &str = "T3.1";
    if commutative {
        return Ok(skipped(ID, "ring is commutative"));
    }
    let partner = match ring.direct_product(&catalog::zero_ring(2)?) {
        Ok(p) => p,
        Err(Error::OrderOverflow { order, limit }) => {
            return Ok(skipped(ID, format!("R x Z2 has order {order} > {limit}")))
        }
        Err(e) => return Err(e),
    };
    let witness = match find_isoclinism(ring, &partner) {
        Ok(IsoclinismOutcome::Isoclinic(w)) => w,
        Ok(IsoclinismOutcome::NotIsoclinic(reason)) => {
            return Ok(ClaimResult {
                id: ID,
                status: ClaimStatus::Fail,
                lhs: None,
                rhs: None,
                detail: format!("R and R x Z2 reported not isoclinic ({reason:?})"),
            })
        }
        Err(e @ (Error::SearchGate { .. } | Error::SearchBudgetExceeded { .. })) => {
            return Ok(skipped(ID, e.to_string()))
        }
        Err(e) => return Err(e),
    };
    if !verify_witness(ring, &partner, &witness)? {
        return Ok(ClaimResult {
            id: ID,
            status: ClaimStatus::Fail,
            lhs: None,
            rhs: None,
            detail: "search returned an invalid witness".to_string(),
        });
    }
    let report = verify_invariance(ring, &partner, &witness)?;
    let mut tally = Tally::new(ID).note(format!(
        "partner R x Z2; |R:Z| {} vs {}",
        report.central_indices.0, report.central_indices.1
    ));
    let structural = report.holds();
    for e in &report.entries {
        tally.record(e.left.value(), e.right.value(), e.left == e.right && structural, || {
            format!("r={} beta(r)={}", e.r, e.beta_r)
        });
    }
    Ok(tally.finish("empty commutator subgroup"))
}
