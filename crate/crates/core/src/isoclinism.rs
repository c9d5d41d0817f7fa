//! Z-isoclinism of finite rings.
//!
//! A Z-isoclinism between `R1` and `R2` is a pair of additive isomorphisms
//! `alpha: R1/Z(R1) -> R2/Z(R2)` and `beta: [R1,R1] -> [R2,R2]` such that
//! `beta([x1, y1]) = [x2, y2]` whenever `alpha` sends the classes of `x1`, `y1` to
//! those of `x2`, `y2`.
//!
//! The search assigns images to a generating set of `R1/Z(R1)` one generator at a
//! time, in lexicographic order of candidates. Every assignment extends `alpha` to the
//! span reached so far and records the `beta` values it forces; a conflict prunes the
//! branch. Once `alpha` is total, `beta` is extended additively from the commutator
//! values to all of `[R1, R1]`.

use std::fmt::Write as _;

use crate::abelian::FiniteAbelianGroup;
use crate::commutators::{
    center, commutator_image, commutator_subgroup, pr_spectrum_bruteforce, AdditiveSubgroup,
};
use crate::error::{Error, Result};
use crate::probability::ExactProbability;
use crate::ring::{FiniteRing, RingElement};

/// Upper limit on `|R1/Z(R1)|` and `|[R1, R1]|` for the search.
pub const MAX_SEARCH_ORDER: usize = 64;
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// `R / Z(R)` with canonical (lexicographically minimal) coset representatives.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    center: AdditiveSubgroup,
    group: FiniteAbelianGroup,
}

impl QuotientGroup {
    pub fn center(&self) -> &AdditiveSubgroup {
        &self.center
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn representatives(&self) -> &[RingElement] {
        self.group.representatives()
    }

    /// Canonical representative of the class of `x`.
    pub fn canonical(&self, x: &RingElement) -> Option<&RingElement> {
        self.group.locate(x).map(|i| self.group.representative(i))
    }

    /// `[x + z, y + w] = [x, y]` for every central `z`, `w` and all representatives.
    pub fn commutator_well_defined(&self, ring: &FiniteRing) -> bool {
        let shape = ring.shape();
        self.representatives().iter().all(|x| {
            self.representatives().iter().all(|y| {
                let c = ring.comm(x, y);
                self.center.members().iter().all(|z| {
                    self.center
                        .members()
                        .iter()
                        .all(|w| ring.comm(&shape.add(x, z), &shape.add(y, w)) == c)
                })
            })
        })
    }
}

pub fn quotient_by_center(ring: &FiniteRing) -> QuotientGroup {
    let center = center(ring);
    let group = FiniteAbelianGroup::subquotient(&AdditiveSubgroup::whole(ring.shape()), &center);
    QuotientGroup { center, group }
}

/// The pair `(alpha, beta)`, each as `(argument, image)` lines sorted by argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoclinismWitness {
    pub alpha: Vec<(RingElement, RingElement)>,
    pub beta: Vec<(RingElement, RingElement)>,
}

impl IsoclinismWitness {
    pub fn alpha_image(&self, rep: &RingElement) -> Option<&RingElement> {
        lookup(&self.alpha, rep)
    }

    pub fn beta_image(&self, c: &RingElement) -> Option<&RingElement> {
        lookup(&self.beta, c)
    }

    /// `alpha:` block of `rep -> rep` lines, then `beta:` block of `elem -> elem` lines.
    pub fn serialize(&self) -> String {
        let mut out = String::from("alpha:\n");
        for (a, b) in &self.alpha {
            let _ = writeln!(out, "  {a} -> {b}");
        }
        out.push_str("beta:\n");
        for (a, b) in &self.beta {
            let _ = writeln!(out, "  {a} -> {b}");
        }
        out
    }
}

fn lookup<'a>(pairs: &'a [(RingElement, RingElement)], key: &RingElement) -> Option<&'a RingElement> {
    pairs
        .binary_search_by(|(a, _)| a.cmp(key))
        .ok()
        .map(|i| &pairs[i].1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotIsoclinicReason {
    /// `R1/Z(R1)` and `R2/Z(R2)` have different invariant factors.
    QuotientMismatch,
    /// `[R1,R1]` and `[R2,R2]` have different invariant factors.
    CommutatorSubgroupMismatch,
    /// Every candidate `alpha` was tried.
    Exhausted,
}

impl std::fmt::Display for NotIsoclinicReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NotIsoclinicReason::QuotientMismatch => "central quotients are not isomorphic",
            NotIsoclinicReason::CommutatorSubgroupMismatch => {
                "commutator subgroups are not isomorphic"
            }
            NotIsoclinicReason::Exhausted => "no compatible pair of isomorphisms exists",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoclinismOutcome {
    Isoclinic(IsoclinismWitness),
    NotIsoclinic(NotIsoclinicReason),
}

/// Everything the search needs about one ring.
struct Side {
    quotient: QuotientGroup,
    derived: FiniteAbelianGroup,
    /// `comm[i][j]` = position in `derived` of the commutator of representatives `i`, `j`.
    comm: Vec<Vec<usize>>,
}

impl Side {
    fn new(ring: &FiniteRing) -> Self {
        let quotient = quotient_by_center(ring);
        let derived = FiniteAbelianGroup::from_subgroup(&commutator_subgroup(ring));
        let reps = quotient.representatives();
        let comm = reps
            .iter()
            .map(|x| {
                reps.iter()
                    .map(|y| derived.locate(&ring.comm(x, y)).expect("commutator in [R,R]"))
                    .collect()
            })
            .collect();
        Side {
            quotient,
            derived,
            comm,
        }
    }

    fn q(&self) -> &FiniteAbelianGroup {
        self.quotient.group()
    }
}

#[derive(Clone)]
struct SearchState {
    alpha: Vec<Option<usize>>,
    alpha_used: Vec<bool>,
    span: Vec<usize>,
    beta: Vec<Option<usize>>,
    beta_used: Vec<bool>,
}

struct Search<'s> {
    left: &'s Side,
    right: &'s Side,
    generators: Vec<usize>,
    generator_orders: Vec<u64>,
    right_orders: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Records `beta(c1) = c2`; false on conflict with an earlier value or injectivity.
    fn force_beta(state: &mut SearchState, c1: usize, c2: usize) -> bool {
        match state.beta[c1] {
            Some(b) => b == c2,
            None => {
                if state.beta_used[c2] {
                    return false;
                }
                state.beta[c1] = Some(c2);
                state.beta_used[c2] = true;
                true
            }
        }
    }

    /// Extends `alpha` by `g -> h` over the span; false if that is inconsistent.
    fn extend(&self, state: &mut SearchState, g: usize, h: usize, order: u64) -> bool {
        let (q1, q2) = (self.left.q(), self.right.q());
        let old_span = state.span.clone();
        let mut fresh = Vec::new();
        for k in 1..order {
            let kg = q1.scale(k, g);
            let kh = q2.scale(k, h);
            for &u in &old_span {
                let v = q1.add(u, kg);
                let image = q2.add(state.alpha[u].expect("span is mapped"), kh);
                match state.alpha[v] {
                    Some(existing) if existing != image => return false,
                    Some(_) => {}
                    None => {
                        if state.alpha_used[image] {
                            return false;
                        }
                        state.alpha[v] = Some(image);
                        state.alpha_used[image] = true;
                        fresh.push(v);
                    }
                }
            }
        }
        state.span.extend_from_slice(&fresh);
        for &v in &fresh {
            let av = state.alpha[v].expect("just mapped");
            for &w in &state.span.clone() {
                let aw = state.alpha[w].expect("span is mapped");
                if !Self::force_beta(state, self.left.comm[v][w], self.right.comm[av][aw])
                    || !Self::force_beta(state, self.left.comm[w][v], self.right.comm[aw][av])
                {
                    return false;
                }
            }
        }
        true
    }

    /// Additive closure of the forced `beta`; `None` unless it is an isomorphism.
    fn complete_beta(&self, state: &SearchState) -> Option<Vec<usize>> {
        let (d1, d2) = (&self.left.derived, &self.right.derived);
        let mut beta = state.beta.clone();
        let mut changed = true;
        while changed {
            changed = false;
            let known: Vec<usize> = (0..beta.len()).filter(|&i| beta[i].is_some()).collect();
            for &a in &known {
                for &b in &known {
                    let s = d1.add(a, b);
                    let image = d2.add(beta[a]?, beta[b]?);
                    match beta[s] {
                        Some(existing) if existing != image => return None,
                        Some(_) => {}
                        None => {
                            beta[s] = Some(image);
                            changed = true;
                        }
                    }
                }
            }
        }
        let beta: Vec<usize> = beta.into_iter().collect::<Option<_>>()?;
        let mut seen = vec![false; d2.order()];
        for &b in &beta {
            if std::mem::replace(&mut seen[b], true) {
                return None;
            }
        }
        for a in 0..beta.len() {
            for b in 0..beta.len() {
                if beta[d1.add(a, b)] != d2.add(beta[a], beta[b]) {
                    return None;
                }
            }
        }
        Some(beta)
    }

    fn run(&mut self, state: &mut SearchState, depth: usize) -> Result<Option<Vec<usize>>> {
        if depth == self.generators.len() {
            return Ok(self.complete_beta(state));
        }
        let g = self.generators[depth];
        let order = self.generator_orders[depth];
        for h in 0..self.right.q().order() {
            if self.right_orders[h] != order || state.alpha_used[h] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded { nodes: self.budget });
            }
            let mut next = state.clone();
            if !self.extend(&mut next, g, h, order) {
                continue;
            }
            if let Some(beta) = self.run(&mut next, depth + 1)? {
                *state = next;
                return Ok(Some(beta));
            }
        }
        Ok(None)
    }
}

/// Generators of an abelian group chosen greedily in representative order.
fn greedy_generators(q: &FiniteAbelianGroup) -> Vec<usize> {
    let mut in_span = vec![false; q.order()];
    in_span[0] = true;
    let mut span = vec![0];
    let mut gens = Vec::new();
    for g in 0..q.order() {
        if in_span[g] {
            continue;
        }
        gens.push(g);
        let mut k = g;
        let old = span.clone();
        while k != 0 {
            for &u in &old {
                let v = q.add(u, k);
                if !in_span[v] {
                    in_span[v] = true;
                    span.push(v);
                }
            }
            k = q.add(k, g);
        }
    }
    gens
}

pub fn find_isoclinism(r1: &FiniteRing, r2: &FiniteRing) -> Result<IsoclinismOutcome> {
    find_isoclinism_with_budget(r1, r2, DEFAULT_NODE_BUDGET)
}

pub fn find_isoclinism_with_budget(
    r1: &FiniteRing,
    r2: &FiniteRing,
    budget: u64,
) -> Result<IsoclinismOutcome> {
    let left = Side::new(r1);
    let right = Side::new(r2);

    if left.derived.invariant_factors() != right.derived.invariant_factors() {
        return Ok(IsoclinismOutcome::NotIsoclinic(
            NotIsoclinicReason::CommutatorSubgroupMismatch,
        ));
    }
    if left.q().invariant_factors() != right.q().invariant_factors() {
        return Ok(IsoclinismOutcome::NotIsoclinic(NotIsoclinicReason::QuotientMismatch));
    }
    for (what, order) in [
        ("R1/Z(R1)", left.q().order()),
        ("[R1,R1]", left.derived.order()),
    ] {
        if order > MAX_SEARCH_ORDER {
            return Err(Error::SearchGate {
                what,
                order,
                limit: MAX_SEARCH_ORDER,
            });
        }
    }

    let generators = greedy_generators(left.q());
    let generator_orders = generators.iter().map(|&g| left.q().element_order(g)).collect();
    let right_orders = (0..right.q().order())
        .map(|h| right.q().element_order(h))
        .collect();
    let mut search = Search {
        left: &left,
        right: &right,
        generators,
        generator_orders,
        right_orders,
        nodes: 0,
        budget,
    };
    let (nq, nd) = (left.q().order(), left.derived.order());
    let mut state = SearchState {
        alpha: vec![None; nq],
        alpha_used: vec![false; nq],
        span: vec![0],
        beta: vec![None; nd],
        beta_used: vec![false; nd],
    };
    state.alpha[0] = Some(0);
    state.alpha_used[0] = true;
    if !Search::force_beta(&mut state, left.comm[0][0], right.comm[0][0]) {
        return Ok(IsoclinismOutcome::NotIsoclinic(NotIsoclinicReason::Exhausted));
    }

    match search.run(&mut state, 0)? {
        None => Ok(IsoclinismOutcome::NotIsoclinic(NotIsoclinicReason::Exhausted)),
        Some(beta) => {
            let (q1, q2) = (left.q(), right.q());
            let alpha = (0..nq)
                .map(|i| {
                    let j = state.alpha[i].expect("alpha is total");
                    (q1.representative(i).clone(), q2.representative(j).clone())
                })
                .collect();
            let (d1, d2) = (&left.derived, &right.derived);
            let beta = beta
                .iter()
                .enumerate()
                .map(|(i, &j)| (d1.representative(i).clone(), d2.representative(j).clone()))
                .collect();
            Ok(IsoclinismOutcome::Isoclinic(IsoclinismWitness { alpha, beta }))
        }
    }
}

fn check_shapes(r1: &FiniteRing, r2: &FiniteRing, w: &IsoclinismWitness) -> Result<()> {
    for (a, b) in w.alpha.iter().chain(&w.beta) {
        r1.shape().check(a)?;
        r2.shape().check(b)?;
    }
    Ok(())
}

/// Maps a table of pairs into positions, requiring the domain to be exactly `from` and
/// the map to be a bijection onto `to`.
fn as_bijection(
    pairs: &[(RingElement, RingElement)],
    from: &FiniteAbelianGroup,
    to: &FiniteAbelianGroup,
) -> Option<Vec<usize>> {
    if pairs.len() != from.order() || from.order() != to.order() {
        return None;
    }
    let mut map = vec![None; from.order()];
    let mut used = vec![false; to.order()];
    for (a, b) in pairs {
        let i = from.locate(a)?;
        let j = to.locate(b)?;
        if from.representative(i) != a || to.representative(j) != b {
            return None;
        }
        if map[i].is_some() || std::mem::replace(&mut used[j], true) {
            return None;
        }
        map[i] = Some(j);
    }
    map.into_iter().collect()
}

fn is_homomorphism(map: &[usize], from: &FiniteAbelianGroup, to: &FiniteAbelianGroup) -> bool {
    (0..map.len()).all(|a| (0..map.len()).all(|b| map[from.add(a, b)] == to.add(map[a], map[b])))
}

/// Checks that `alpha` and `beta` are additive bijections and compatible on every pair
/// of classes of `R1/Z(R1)`.
pub fn verify_witness(r1: &FiniteRing, r2: &FiniteRing, w: &IsoclinismWitness) -> Result<bool> {
    check_shapes(r1, r2, w)?;
    let (left, right) = (Side::new(r1), Side::new(r2));
    let Some(alpha) = as_bijection(&w.alpha, left.q(), right.q()) else {
        return Ok(false);
    };
    let Some(beta) = as_bijection(&w.beta, &left.derived, &right.derived) else {
        return Ok(false);
    };
    if !is_homomorphism(&alpha, left.q(), right.q())
        || !is_homomorphism(&beta, &left.derived, &right.derived)
    {
        return Ok(false);
    }
    let n = alpha.len();
    Ok((0..n).all(|i| (0..n).all(|j| beta[left.comm[i][j]] == right.comm[alpha[i]][alpha[j]])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceEntry {
    pub r: RingElement,
    pub beta_r: RingElement,
    pub left: ExactProbability,
    pub right: ExactProbability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub entries: Vec<InvarianceEntry>,
    /// `(|R1|/|Z(R1)|, |R2|/|Z(R2)|)`
    pub central_indices: (usize, usize),
    /// `|[s, R1]| = |[alpha(s), R2]|` for every representative `s`.
    pub image_orders_match: bool,
    /// `r in [s, R1]` iff `beta(r) in [alpha(s), R2]` for all `s` and `r`.
    pub image_membership_matches: bool,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.central_indices.0 == self.central_indices.1
            && self.image_orders_match
            && self.image_membership_matches
            && self.entries.iter().all(|e| e.left == e.right)
    }
}

/// Compares `Pr_r(R1)` with `Pr_{beta(r)}(R2)` for every `r` in `[R1, R1]`, both by
/// brute force.
pub fn verify_invariance(
    r1: &FiniteRing,
    r2: &FiniteRing,
    w: &IsoclinismWitness,
) -> Result<InvarianceReport> {
    if !verify_witness(r1, r2, w)? {
        return Err(Error::WitnessInvalid);
    }
    let (s1, s2) = (pr_spectrum_bruteforce(r1)?, pr_spectrum_bruteforce(r2)?);
    let entries = w
        .beta
        .iter()
        .map(|(r, br)| InvarianceEntry {
            r: r.clone(),
            beta_r: br.clone(),
            left: s1.get(r).expect("element of R1"),
            right: s2.get(br).expect("element of R2"),
        })
        .collect();

    let (q1, q2) = (quotient_by_center(r1), quotient_by_center(r2));
    let mut image_orders_match = true;
    let mut image_membership_matches = true;
    for (s, t) in &w.alpha {
        let (i1, i2) = (commutator_image(r1, s)?, commutator_image(r2, t)?);
        image_orders_match &= i1.len() == i2.len();
        image_membership_matches &= w
            .beta
            .iter()
            .all(|(r, br)| i1.contains(r) == i2.contains(br));
    }
    Ok(InvarianceReport {
        entries,
        central_indices: (q1.order(), q2.order()),
        image_orders_match,
        image_membership_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn el(c: &[u32]) -> RingElement {
        RingElement::from_canonical(c.to_vec())
    }

    fn identity_witness(ring: &FiniteRing) -> IsoclinismWitness {
        let q = quotient_by_center(ring);
        IsoclinismWitness {
            alpha: q.representatives().iter().map(|x| (x.clone(), x.clone())).collect(),
            beta: commutator_subgroup(ring)
                .members()
                .iter()
                .map(|x| (x.clone(), x.clone()))
                .collect(),
        }
    }

    #[test]
    fn quotients() {
        let e4 = catalog::e4();
        let q = quotient_by_center(&e4);
        assert_eq!(q.order(), 4);
        assert_eq!(q.group().invariant_factors(), vec![2, 2]);
        assert!(q.commutator_well_defined(&e4));
        assert_eq!(quotient_by_center(&catalog::cyclic_ring(5).unwrap()).order(), 1);

        let p = e4.direct_product(&catalog::zero_ring(2).unwrap()).unwrap();
        let qp = quotient_by_center(&p);
        assert_eq!(qp.order(), 4);
        assert_eq!(qp.group().invariant_factors(), vec![2, 2]);
        assert_eq!(qp.canonical(&el(&[1, 1, 1])), Some(&el(&[1, 1, 0])));
    }

    #[test]
    fn e4_with_itself() {
        let e4 = catalog::e4();
        let id = identity_witness(&e4);
        assert!(verify_witness(&e4, &e4, &id).unwrap());
        match find_isoclinism(&e4, &e4).unwrap() {
            IsoclinismOutcome::Isoclinic(w) => {
                assert_eq!(w, id);
                assert!(verify_invariance(&e4, &e4, &w).unwrap().holds());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn broken_witnesses_rejected() {
        let e4 = catalog::e4();
        let mut w = identity_witness(&e4);
        for (_, b) in &mut w.beta {
            *b = e4.zero();
        }
        assert!(!verify_witness(&e4, &e4, &w).unwrap());
        assert_eq!(verify_invariance(&e4, &e4, &w), Err(Error::WitnessInvalid));

        let mut w = identity_witness(&e4);
        w.alpha.pop();
        assert!(!verify_witness(&e4, &e4, &w).unwrap());

        let mut w = identity_witness(&e4);
        w.alpha[1].1 = el(&[1, 1, 0]);
        assert!(matches!(
            verify_witness(&e4, &e4, &w),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn commutative_factor_is_isoclinic() {
        let e4 = catalog::e4();
        let p = e4.direct_product(&catalog::zero_ring(2).unwrap()).unwrap();
        let IsoclinismOutcome::Isoclinic(w) = find_isoclinism(&e4, &p).unwrap() else {
            panic!("expected a witness");
        };
        assert!(verify_witness(&e4, &p, &w).unwrap());
        let report = verify_invariance(&e4, &p, &w).unwrap();
        assert!(report.holds());
        assert_eq!(report.entries.len(), 2);
        assert_eq!(report.entries[1].left, ExactProbability::new(3, 8));
    }

    #[test]
    fn prefilter_rejects() {
        let e4 = catalog::e4();
        let z8 = catalog::zero_ring(8).unwrap();
        assert_eq!(
            find_isoclinism(&e4, &z8).unwrap(),
            IsoclinismOutcome::NotIsoclinic(NotIsoclinicReason::CommutatorSubgroupMismatch)
        );
    }

    #[test]
    fn budget_is_distinct_from_exhaustion() {
        let e4 = catalog::e4();
        assert_eq!(
            find_isoclinism_with_budget(&e4, &e4, 1),
            Err(Error::SearchBudgetExceeded { nodes: 1 })
        );
    }

    #[test]
    fn serialization() {
        let e4 = catalog::e4();
        let text = identity_witness(&e4).serialize();
        assert_eq!(
            text,
            "alpha:\n  0,0 -> 0,0\n  0,1 -> 0,1\n  1,0 -> 1,0\n  1,1 -> 1,1\nbeta:\n  0,0 -> 0,0\n  1,1 -> 1,1\n"
        );
    }
}
