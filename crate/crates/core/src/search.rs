//! Bounded enumeration of cover types up to symmetry and grouping by
//! homeomorphism signature.
//!
//! The search space for bounds `(max_n, max_m)` is the set of symmetry orbits
//! of valid types having some representative with every `n_j ≤ max_n` and
//! every `m_j ≤ max_m`. Each orbit is reported through its canonical form.
//!
//! Work is split by the first (smallest) branch of the canonical form. Each
//! partition feeds a [`SignatureTable`]; tables merge associatively and
//! commutatively, and [`SignatureTable::finish`] sorts everything so the
//! report does not depend on how the work was split.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::covers::{BiDegree, CoverType};
use crate::deformations::{pair_verdict, ManettiCertificate, NondefStatus};
use crate::invariants::{
    homeo_signature, numeric_signature, InvariantError, Pi1, Signature, Undetermined,
};

/// Search bounds and filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchConfig {
    /// Bound on each `n_j`.
    pub max_n: i64,
    /// Bound on each `m_j`.
    pub max_m: i64,
    /// Only keep general type covers.
    pub require_general_type: bool,
    /// Only keep simply connected covers; otherwise `Z/2` covers are bucketed
    /// separately (without any homeomorphism claim).
    pub require_simply_connected: bool,
    /// Run the non-deformation-equivalence check on every pair in a group.
    pub certify_nondef: bool,
}

impl SearchConfig {
    /// Config with the default filters.
    pub fn new(max_n: i64, max_m: i64) -> Self {
        SearchConfig {
            max_n,
            max_m,
            require_general_type: true,
            require_simply_connected: true,
            certify_nondef: true,
        }
    }

    fn in_box(&self, b: BiDegree) -> bool {
        b.first <= self.max_n && b.second <= self.max_m
    }

    fn in_swapped_box(&self, b: BiDegree) -> bool {
        b.first <= self.max_m && b.second <= self.max_n
    }

    fn in_region(&self, b: BiDegree) -> bool {
        b.first >= 0 && b.second >= 0 && (self.in_box(b) || self.in_swapped_box(b))
    }

    fn span(&self) -> i64 {
        self.max_n.max(self.max_m)
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig::new(8, 8)
    }
}

/// Possible first branches of canonical forms, ascending.
///
/// The first branch `p` of a canonical form satisfies `p ≤ swap(p)`, i.e.
/// `p.first ≤ p.second`.
pub fn partition_keys(cfg: &SearchConfig) -> Vec<BiDegree> {
    let span = cfg.span();
    let mut keys = Vec::new();
    if span < 1 {
        return keys;
    }
    for x in 0..=span {
        for y in x..=span {
            let p = BiDegree::new(x, y);
            if cfg.in_region(p) && (p.is_trivial() || x >= 1) {
                keys.push(p);
            }
        }
    }
    keys
}

/// All canonical types whose smallest branch is `first`, ascending.
pub fn enumerate_partition(cfg: &SearchConfig, first: BiDegree) -> Vec<CoverType> {
    let mut out = Vec::new();
    if !cfg.in_region(first) || first.swapped() < first {
        return out;
    }
    let span = cfg.span();
    let (px, py) = (first.first.rem_euclid(2), first.second.rem_euclid(2));
    let start_x = first.first.max(1);
    // nontrivial candidates for the second and third branch, lexicographic
    let mut candidates = Vec::new();
    let mut x = start_x + (start_x - px).rem_euclid(2);
    while x <= span {
        let mut y = 1 + (1 - py).rem_euclid(2);
        while y <= span {
            let b = BiDegree::new(x, y);
            // the swapped branch would become the smaller first element
            if b >= first && b.swapped() >= first && cfg.in_region(b) {
                candidates.push(b);
            }
            y += 2;
        }
        x += 2;
    }
    let first_in_box = cfg.in_box(first);
    let first_in_swapped = cfg.in_swapped_box(first);
    for (i, &q) in candidates.iter().enumerate() {
        let q_box = first_in_box && cfg.in_box(q);
        let q_swapped = first_in_swapped && cfg.in_swapped_box(q);
        if !q_box && !q_swapped {
            continue;
        }
        for &r in &candidates[i..] {
            if !(q_box && cfg.in_box(r) || q_swapped && cfg.in_swapped_box(r)) {
                continue;
            }
            let Ok(t) = CoverType::validate([first, q, r]) else {
                continue;
            };
            if t.is_canonical() {
                out.push(t);
            }
        }
    }
    out
}

/// Every canonical type in the search space, in lexicographic order.
pub fn enumerate_types(cfg: &SearchConfig) -> Vec<CoverType> {
    partition_keys(cfg)
        .into_iter()
        .flat_map(|p| enumerate_partition(cfg, p))
        .collect()
}

/// Counts of types that were enumerated but not grouped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkipSummary {
    /// Types seen.
    pub enumerated: u64,
    /// Types placed in the signature table.
    pub grouped: u64,
    /// Not of general type (filtered, or signature undefined).
    pub not_general_type: u64,
    /// `π₁ = Z/2` while simple connectivity was required.
    pub not_simply_connected: u64,
    /// Divisibility only known as a candidate set.
    pub ambiguous_divisibility: u64,
    /// `p_g` refused or zero.
    pub genus_undetermined: u64,
    /// Internal inconsistencies (non-integral `χ`); always zero for
    /// validated input.
    pub inconsistent: u64,
}

impl SkipSummary {
    /// Componentwise sum.
    pub fn merge(&mut self, other: &SkipSummary) {
        self.enumerated += other.enumerated;
        self.grouped += other.grouped;
        self.not_general_type += other.not_general_type;
        self.not_simply_connected += other.not_simply_connected;
        self.ambiguous_divisibility += other.ambiguous_divisibility;
        self.genus_undetermined += other.genus_undetermined;
        self.inconsistent += other.inconsistent;
    }

    /// Types skipped for any reason.
    pub fn skipped(&self) -> u64 {
        self.enumerated - self.grouped
    }
}

/// Mergeable accumulator `signature → members`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignatureTable {
    groups: BTreeMap<Signature, Vec<CoverType>>,
    summary: SkipSummary,
}

impl SignatureTable {
    /// Empty table.
    pub fn new() -> Self {
        Self::default()
    }

    /// Classifies one type (stored canonicalized) and files it.
    pub fn insert(&mut self, cfg: &SearchConfig, t: CoverType) {
        let t = t.canonicalize();
        self.summary.enumerated += 1;
        let key = if cfg.require_simply_connected {
            homeo_signature(&t)
        } else {
            numeric_signature(&t)
        };
        match key {
            Ok(sig) => {
                self.summary.grouped += 1;
                self.groups.entry(sig).or_default().push(t);
            }
            Err(InvariantError::SignatureUndetermined(why)) => {
                let counter = match why {
                    Undetermined::NotGeneralType => &mut self.summary.not_general_type,
                    Undetermined::NotSimplyConnected => &mut self.summary.not_simply_connected,
                    Undetermined::DivisibilityAmbiguous => &mut self.summary.ambiguous_divisibility,
                    Undetermined::PgRefused | Undetermined::PgZero => {
                        &mut self.summary.genus_undetermined
                    }
                };
                *counter += 1;
            }
            Err(_) => self.summary.inconsistent += 1,
        }
    }

    /// Files every type of an iterator.
    pub fn extend<I: IntoIterator<Item = CoverType>>(&mut self, cfg: &SearchConfig, types: I) {
        for t in types {
            self.insert(cfg, t);
        }
    }

    /// Absorbs another table. Associative and commutative up to the final
    /// sort in [`finish`](Self::finish).
    pub fn merge(&mut self, other: SignatureTable) {
        for (sig, members) in other.groups {
            self.groups.entry(sig).or_default().extend(members);
        }
        self.summary.merge(&other.summary);
    }

    /// Counts so far.
    pub fn summary(&self) -> &SkipSummary {
        &self.summary
    }

    /// Sorts members, drops singleton groups and optionally certifies pairs.
    pub fn finish(self, cfg: &SearchConfig) -> SearchReport {
        let mut groups = Vec::new();
        for (signature, mut members) in self.groups {
            members.sort_unstable();
            members.dedup();
            if members.len() < 2 {
                continue;
            }
            let certified_pairs = if cfg.certify_nondef {
                certify(&members)
            } else {
                Vec::new()
            };
            groups.push(SignatureGroup {
                signature,
                members,
                certified_pairs,
            });
        }
        SearchReport {
            groups,
            summary: self.summary,
        }
    }
}

fn certify(members: &[CoverType]) -> Vec<(usize, usize, ManettiCertificate)> {
    let mut out = Vec::new();
    // only simple types can match the certificate pattern
    let simple: Vec<usize> = (0..members.len())
        .filter(|&i| members[i].nontrivial_pair().is_some())
        .collect();
    for (x, &i) in simple.iter().enumerate() {
        for &j in &simple[x + 1..] {
            if let Ok(v) = pair_verdict(&members[i], &members[j]) {
                if v.nondef == NondefStatus::Certified {
                    out.push((
                        i,
                        j,
                        v.certificate
                            .expect("certified verdict carries certificate"),
                    ));
                }
            }
        }
    }
    out
}

/// Types sharing one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureGroup {
    /// The common signature.
    pub signature: Signature,
    /// Distinct canonical types, ascending.
    pub members: Vec<CoverType>,
    /// Pairs `(i, j)` of member indices (`i < j`) certified not deformation
    /// equivalent.
    pub certified_pairs: Vec<(usize, usize, ManettiCertificate)>,
}

impl SignatureGroup {
    /// `true` when membership implies homeomorphism (simply connected).
    pub fn homeomorphism_claim(&self) -> bool {
        self.signature.pi1 == Pi1::SimplyConnected
    }
}

/// Result of a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    /// Groups with at least two members, ordered by signature.
    pub groups: Vec<SignatureGroup>,
    /// Counts.
    pub summary: SkipSummary,
}

impl SearchReport {
    /// Total number of certified pairs.
    pub fn certified_pair_count(&self) -> usize {
        self.groups.iter().map(|g| g.certified_pairs.len()).sum()
    }
}

/// Sequential search over the whole space.
pub fn run_search(cfg: &SearchConfig) -> SearchReport {
    let mut table = SignatureTable::new();
    for p in partition_keys(cfg) {
        table.extend(cfg, enumerate_partition(cfg, p));
    }
    table.finish(cfg)
}
