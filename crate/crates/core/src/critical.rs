//! The difference function d(X) = |X| − |N(X)|, critical sets, and the
//! derived invariants ker, MaxCritIndep, diadem and nucleus.
//!
//! The critical difference is computed by scanning independent sets only;
//! the all-subsets maximum agrees with it on every graph (the two scans are
//! compared directly where the 2^n cost is affordable). Everything here is
//! exact brute force behind explicit size guards.

use crate::graph::Graph;
use crate::independence::{for_each_independent_set, omega_with_cap};
use crate::limits::{LimitError, ALL_SUBSETS_MAX_N, CRITICAL_MAX_N, DEFAULT_OMEGA_CAP};
use crate::report::{TheoremReport, Verdict};
use crate::set::VertexSet;

/// d(X) = |X| − |N(X)|. May be negative; d(∅) = 0.
pub fn difference(g: &Graph, x: VertexSet) -> i64 {
    x.len() as i64 - g.neighborhood(x).len() as i64
}

/// The critical difference d(G) = max{d(X) : X ⊆ V(G)} together with an
/// independent witness attaining it.
///
/// The scan runs over independent sets only, which reaches the same
/// maximum as scanning all subsets; the witness is the first attaining set
/// in ascending-insertion enumeration order, so it is deterministic.
pub fn critical_difference(g: &Graph) -> Result<(i64, VertexSet), LimitError> {
    let n = g.vertex_count();
    if n > CRITICAL_MAX_N {
        return Err(LimitError::TooLarge {
            op: "critical difference",
            n,
            max: CRITICAL_MAX_N,
        });
    }
    let mut best = i64::MIN;
    let mut witness = VertexSet::EMPTY;
    for_each_independent_set(g, |s| {
        let d = difference(g, s);
        if d > best {
            best = d;
            witness = s;
        }
    });
    Ok((best, witness))
}

/// Maximum of d over all 2^n subsets. Exponential; used to cross-check the
/// independent-sets-only scan.
pub fn difference_max_all_subsets(g: &Graph) -> Result<i64, LimitError> {
    let n = g.vertex_count();
    if n > ALL_SUBSETS_MAX_N {
        return Err(LimitError::TooLarge {
            op: "all-subsets difference scan",
            n,
            max: ALL_SUBSETS_MAX_N,
        });
    }
    let mut best = i64::MIN;
    for bits in 0..(1u64 << n) {
        best = best.max(difference(g, VertexSet::from_bits(bits)));
    }
    Ok(best)
}

/// True iff d(X) = d(G). X need not be independent.
pub fn is_critical_set(g: &Graph, x: VertexSet) -> Result<bool, LimitError> {
    let (d, _) = critical_difference(g)?;
    Ok(difference(g, x) == d)
}

/// The critical structure of a graph: the critical (independence)
/// difference, ker, the maximum critical independent sets, and their union
/// and intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalProfile {
    /// Critical difference d(G), scanned over independent sets.
    pub d: i64,
    /// Critical independence difference id(G); always equals `d`.
    pub id: i64,
    /// Intersection of all critical independent sets.
    pub ker: VertexSet,
    /// All maximum-cardinality critical independent sets, ascending.
    pub max_crit: Vec<VertexSet>,
    /// Union of `max_crit`.
    pub diadem: VertexSet,
    /// Intersection of `max_crit`.
    pub nucleus: VertexSet,
}

/// Computes the critical profile by enumerating all independent sets.
pub fn critical_profile(g: &Graph) -> Result<CriticalProfile, LimitError> {
    critical_profile_with_cap(g, DEFAULT_OMEGA_CAP)
}

pub fn critical_profile_with_cap(g: &Graph, cap: usize) -> Result<CriticalProfile, LimitError> {
    let n = g.vertex_count();
    if n > CRITICAL_MAX_N {
        return Err(LimitError::TooLarge {
            op: "critical profile",
            n,
            max: CRITICAL_MAX_N,
        });
    }
    let id = {
        let mut best = 0i64; // d(∅) = 0 is always available
        for_each_independent_set(g, |s| best = best.max(difference(g, s)));
        best
    };

    let mut ker = g.vertices();
    let mut max_size = 0usize;
    let mut max_crit: Vec<VertexSet> = Vec::new();
    let mut overflow = false;
    for_each_independent_set(g, |s| {
        if difference(g, s) != id {
            return;
        }
        ker &= s;
        match s.len().cmp(&max_size) {
            std::cmp::Ordering::Greater => {
                max_size = s.len();
                max_crit.clear();
                overflow = false;
                max_crit.push(s);
            }
            std::cmp::Ordering::Equal => {
                if max_crit.len() == cap {
                    overflow = true;
                } else {
                    max_crit.push(s);
                }
            }
            std::cmp::Ordering::Less => {}
        }
    });
    if overflow {
        return Err(LimitError::CapExceeded {
            what: "family of maximum critical independent sets",
            cap,
        });
    }
    max_crit.sort_unstable();
    let diadem = max_crit.iter().copied().fold(VertexSet::EMPTY, |a, b| a | b);
    let nucleus = max_crit
        .iter()
        .copied()
        .reduce(|a, b| a & b)
        .unwrap_or(VertexSet::EMPTY);
    Ok(CriticalProfile {
        d: id,
        id,
        ker,
        max_crit,
        diadem,
        nucleus,
    })
}

/// Checks that every critical independent set extends to a maximum
/// independent set.
pub fn check_enlargement(g: &Graph) -> TheoremReport {
    const ID: &str = "enlargement";
    const MAX_N: usize = 16;
    let n = g.vertex_count();
    if n > MAX_N {
        return TheoremReport::skipped(ID, format!("n={n} exceeds the {MAX_N}-vertex budget"));
    }
    let profile = match critical_profile(g) {
        Ok(p) => p,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0u64;
    for_each_independent_set(g, |s| {
        if difference(g, s) != profile.id {
            return;
        }
        checked += 1;
        if !om.sets().iter().any(|&m| s.is_subset_of(m)) && report.verdict == Verdict::Holds {
            report.fail(format!(
                "critical independent set {} extends to no maximum independent set",
                g.set_to_string(s)
            ));
        }
    });
    report.push(format!("critical-sets-checked={checked}"));
    report
}

/// Checks closure of critical independent sets under union and
/// intersection, and that ker is the unique minimal one.
pub fn check_critical_closure(g: &Graph) -> TheoremReport {
    const ID: &str = "critical-closure";
    const MAX_N: usize = 14;
    const PAIR_CAP: usize = 200_000;
    let n = g.vertex_count();
    if n > MAX_N {
        return TheoremReport::skipped(ID, format!("n={n} exceeds the {MAX_N}-vertex budget"));
    }
    let profile = match critical_profile(g) {
        Ok(p) => p,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let mut critical: Vec<VertexSet> = Vec::new();
    for_each_independent_set(g, |s| {
        if difference(g, s) == profile.id {
            critical.push(s);
        }
    });
    critical.sort_unstable();

    let mut report = TheoremReport::holds(ID);
    let mut pairs = 0usize;
    'outer: for (i, &a) in critical.iter().enumerate() {
        for &b in critical.iter().skip(i) {
            if pairs >= PAIR_CAP {
                report.push(format!("pair-cap-reached={PAIR_CAP}"));
                break 'outer;
            }
            pairs += 1;
            for (what, s) in [("union", a | b), ("intersection", a & b)] {
                if difference(g, s) != profile.id {
                    report.fail(format!(
                        "{what} of {} and {} has d={} != id={}",
                        g.set_to_string(a),
                        g.set_to_string(b),
                        difference(g, s),
                        profile.id
                    ));
                    break 'outer;
                }
            }
        }
    }

    // ker is critical and contained in every critical independent set,
    // which makes it the unique minimal one
    if difference(g, profile.ker) != profile.id {
        report.fail(format!(
            "ker {} is not critical: d={} != id={}",
            g.set_to_string(profile.ker),
            difference(g, profile.ker),
            profile.id
        ));
    }
    if let Some(bad) = critical.iter().find(|&&c| !profile.ker.is_subset_of(c)) {
        report.fail(format!(
            "critical independent set {} does not contain ker {}",
            g.set_to_string(*bad),
            g.set_to_string(profile.ker)
        ));
    }
    report.push(format!("critical-sets={} pairs-checked={pairs}", critical.len()));
    report
}

/// Machine check that the all-subsets maximum of d equals the maximum over
/// independent sets only.
pub fn check_difference_equality(g: &Graph) -> TheoremReport {
    const ID: &str = "difference-equality";
    let all = match difference_max_all_subsets(g) {
        Ok(v) => v,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let (ind, witness) = match critical_difference(g) {
        Ok(v) => v,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    if all == ind {
        TheoremReport::holds(ID).with_detail(format!(
            "d={all} attained by independent {}",
            g.set_to_string(witness)
        ))
    } else {
        TheoremReport::fails(ID, format!("all-subsets max {all} != independent max {ind}"))
    }
}
