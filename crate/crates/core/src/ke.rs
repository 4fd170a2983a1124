//! König-Egerváry structure: recognition, the critical-maximum-set
//! equivalence, the corona/core sandwich bounds, both matching-based
//! characterizations, and the complete-join embedding that destroys the
//! property while preserving Ω(G).

use crate::critical::{critical_profile, difference};
use crate::graph::{Graph, GraphError};
use crate::independence::{alpha, omega_with_cap};
use crate::limits::{LimitError, DEFAULT_OMEGA_CAP};
use crate::matching::{matching_from_into, mu, Matching};
use crate::report::TheoremReport;
use crate::set::VertexSet;
use thiserror::Error;

/// α(G) + μ(G) = |V(G)|.
pub fn is_ke(g: &Graph) -> bool {
    alpha(g) + mu(g) == g.vertex_count()
}

/// Everything the recognition pipeline knows about one graph.
#[derive(Clone, Debug)]
pub struct KeDiagnosis {
    pub is_ke: bool,
    pub n: usize,
    pub alpha: usize,
    pub mu: usize,
    /// (2α, |corona| + |core|, 2(|V| − μ)); weakly increasing.
    pub bounds: (usize, usize, usize),
    /// Every maximum independent set with its criticality flag.
    pub critical_omega: Vec<(VertexSet, bool)>,
    /// A matching from V − S₁∪S₂ into S₁∩S₂ for the first admitting pair,
    /// when one exists.
    pub char_pairs_witness: Option<Matching>,
    /// A matching from V − corona into core, when one exists.
    pub char_core_witness: Option<Matching>,
}

/// Computes the full diagnosis. Costs one Ω enumeration plus one critical
/// profile.
pub fn diagnose(g: &Graph) -> Result<KeDiagnosis, LimitError> {
    diagnose_with_cap(g, DEFAULT_OMEGA_CAP)
}

pub fn diagnose_with_cap(g: &Graph, cap: usize) -> Result<KeDiagnosis, LimitError> {
    let om = omega_with_cap(g, cap)?;
    let profile = critical_profile(g)?;
    let m = mu(g);
    let n = g.vertex_count();
    let a = om.alpha();
    let core = om.core();
    let corona = om.corona();

    let critical_omega: Vec<(VertexSet, bool)> = om
        .sets()
        .iter()
        .map(|&s| (s, difference(g, s) == profile.id))
        .collect();

    // witness scan stays quadratic in at most the first 64 maximum sets
    let scan = &om.sets()[..om.len().min(64)];
    let char_pairs_witness = scan.iter().enumerate().find_map(|(i, &s1)| {
        scan.iter().skip(i).find_map(|&s2| {
            matching_from_into(g, g.vertices() - (s1 | s2), s1 & s2)
                .expect("sides are disjoint by construction")
        })
    });
    let char_core_witness = matching_from_into(g, g.vertices() - corona, core)
        .expect("core and its complement in corona are disjoint");

    Ok(KeDiagnosis {
        is_ke: a + m == n,
        n,
        alpha: a,
        mu: m,
        bounds: (2 * a, corona.len() + core.len(), 2 * (n - m)),
        critical_omega,
        char_pairs_witness,
        char_core_witness,
    })
}

/// Checks the three-way equivalence between being König-Egerváry, having
/// some critical maximum independent set, and having all of them critical.
pub fn check_critical_maximum_equivalence(g: &Graph) -> TheoremReport {
    const ID: &str = "ke-critical";
    const MAX_N: usize = 16;
    let n = g.vertex_count();
    if n > MAX_N {
        return TheoremReport::skipped(ID, format!("n={n} exceeds the {MAX_N}-vertex budget"));
    }
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let profile = match critical_profile(g) {
        Ok(p) => p,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let ke = is_ke(g);
    let critical_count = om
        .sets()
        .iter()
        .filter(|&&s| difference(g, s) == profile.id)
        .count();
    let any = critical_count > 0;
    let all = critical_count == om.len();
    if (ke == any) && (ke == all) {
        TheoremReport::holds(ID).with_detail(format!(
            "ke={ke} critical-maximum-sets={critical_count}/{}",
            om.len()
        ))
    } else {
        TheoremReport::fails(
            ID,
            format!(
                "ke={ke} but {critical_count} of {} maximum sets are critical",
                om.len()
            ),
        )
    }
}

/// Checks 2α ≤ |corona| + |core| ≤ 2(|V| − μ), records which bounds are
/// tight, and that both are tight exactly on König-Egerváry graphs.
pub fn check_corona_core_sandwich(g: &Graph) -> TheoremReport {
    const ID: &str = "corona-core-sandwich";
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let a = om.alpha();
    let mid = om.corona().len() + om.core().len();
    let upper = 2 * (g.vertex_count() - mu(g));
    let mut report = TheoremReport::holds(ID);
    if !(2 * a <= mid && mid <= upper) {
        report.fail(format!("sandwich violated: ({}, {mid}, {upper})", 2 * a));
        return report;
    }
    let ke = is_ke(g);
    let both_tight = 2 * a == mid && mid == upper;
    if both_tight != ke {
        report.fail(format!(
            "tightness biconditional violated: bounds ({}, {mid}, {upper}), ke={ke}",
            2 * a
        ));
    }
    report.push(format!(
        "bounds=({},{mid},{upper}) lower-tight={} upper-tight={}",
        2 * a,
        2 * a == mid,
        mid == upper
    ));
    report
}

/// On unicyclic graphs: 2α ≤ |corona| + |core| ≤ 2α + 1, with the upper
/// value attained exactly by the non-König-Egerváry ones, which also
/// satisfy α + μ = |V| − 1.
pub fn check_unicyclic_sandwich(g: &Graph) -> TheoremReport {
    const ID: &str = "unicyclic-sandwich";
    if !g.is_unicyclic() {
        return TheoremReport::hypothesis_not_met(ID, "graph is not unicyclic");
    }
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let a = om.alpha();
    let mid = om.corona().len() + om.core().len();
    let m = mu(g);
    let n = g.vertex_count();
    let mut report = TheoremReport::holds(ID);
    if !(2 * a <= mid && mid <= 2 * a + 1) {
        report.fail(format!("unicyclic bound violated: |corona|+|core|={mid}, 2α={}", 2 * a));
    }
    if !(n - 1 <= a + m && a + m <= n) {
        report.fail(format!("unicyclic α+μ range violated: α+μ={}", a + m));
    }
    if a + m == n {
        report.push(format!("ke: |corona|+|core|={mid}=2α"));
        if mid != 2 * a {
            report.fail(format!("ke unicyclic graph with |corona|+|core|={mid} != 2α={}", 2 * a));
        }
    } else {
        report.push(format!("non-ke: |corona|+|core|={mid}=2α+1, α+μ={}", a + m));
        if mid != 2 * a + 1 {
            report.fail(format!(
                "non-ke unicyclic graph with |corona|+|core|={mid} != 2α+1={}",
                2 * a + 1
            ));
        }
        if a + m != n - 1 {
            report.fail(format!("non-ke unicyclic graph with α+μ={} != |V|−1={}", a + m, n - 1));
        }
    }
    report
}

/// Checks the pairwise characterization: a graph is König-Egerváry iff for
/// every (equivalently, some) pair S₁, S₂ of maximum independent sets
/// there is a matching from V − S₁∪S₂ into S₁∩S₂.
pub fn check_characterization_pairs(g: &Graph, pair_cap: usize, seed: u64) -> TheoremReport {
    const ID: &str = "char-pairs";
    const MAX_N: usize = 14;
    let n = g.vertex_count();
    if n > MAX_N {
        return TheoremReport::skipped(ID, format!("n={n} exceeds the {MAX_N}-vertex budget"));
    }
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let ke = is_ke(g);
    let k = om.len();
    let total_pairs = k * (k + 1) / 2;
    let mut report = TheoremReport::holds(ID);

    let pairs: Vec<(usize, usize)> = if total_pairs <= pair_cap {
        (0..k)
            .flat_map(|i| (i..k).map(move |j| (i, j)))
            .collect()
    } else {
        // deterministic seeded sample once the quadratic sweep is too big
        use rand_chacha::rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        report.push(format!("sampled-pairs={pair_cap} of {total_pairs}"));
        (0..pair_cap)
            .map(|_| {
                let i = (rng.next_u64() % k as u64) as usize;
                let j = (rng.next_u64() % k as u64) as usize;
                (i.min(j), i.max(j))
            })
            .collect()
    };

    let mut admitting = 0usize;
    for &(i, j) in &pairs {
        let s1 = om.sets()[i];
        let s2 = om.sets()[j];
        let found = matching_from_into(g, g.vertices() - (s1 | s2), s1 & s2)
            .expect("disjoint sides")
            .is_some();
        if found {
            admitting += 1;
        }
        if ke && !found {
            report.fail(format!(
                "ke graph: pair ({}, {}) admits no matching from V−S₁∪S₂ into S₁∩S₂",
                g.set_to_string(s1),
                g.set_to_string(s2)
            ));
            break;
        }
        if !ke && found {
            report.fail(format!(
                "non-ke graph: pair ({}, {}) admits a matching from V−S₁∪S₂ into S₁∩S₂",
                g.set_to_string(s1),
                g.set_to_string(s2)
            ));
            break;
        }
    }
    report.push(format!("ke={ke} admitting-pairs={admitting}/{}", pairs.len()));

    // the pair criterion is not an equivalence for three or more sets:
    // record how the triples behave, without asserting anything
    if k >= 3 {
        let mut triple_admitting = 0usize;
        let mut triples = 0usize;
        'triples: for i in 0..k {
            for j in (i + 1)..k {
                for l in (j + 1)..k {
                    if triples >= pair_cap {
                        break 'triples;
                    }
                    triples += 1;
                    let union = om.sets()[i] | om.sets()[j] | om.sets()[l];
                    let inter = om.sets()[i] & om.sets()[j] & om.sets()[l];
                    if matching_from_into(g, g.vertices() - union, inter)
                        .expect("disjoint sides")
                        .is_some()
                    {
                        triple_admitting += 1;
                    }
                }
            }
        }
        report.push(format!("admitting-triples={triple_admitting}/{triples}"));
    }
    report
}

/// Checks the corona/core characterization: König-Egerváry iff
/// |corona| + |core| = 2α and a matching from V − corona into core exists;
/// also the consequence |V − corona| ≤ |core| on KE graphs.
pub fn check_characterization_core(g: &Graph) -> TheoremReport {
    const ID: &str = "char-core";
    const MAX_N: usize = 16;
    let n = g.vertex_count();
    if n > MAX_N {
        return TheoremReport::skipped(ID, format!("n={n} exceeds the {MAX_N}-vertex budget"));
    }
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let core = om.core();
    let corona = om.corona();
    let ke = is_ke(g);
    let cond_sum = corona.len() + core.len() == 2 * om.alpha();
    let cond_matching = matching_from_into(g, g.vertices() - corona, core)
        .expect("disjoint sides")
        .is_some();
    let mut report = TheoremReport::holds(ID);
    if ke != (cond_sum && cond_matching) {
        report.fail(format!(
            "ke={ke} but sum-condition={cond_sum} and matching-condition={cond_matching}"
        ));
    }
    if ke && n - corona.len() > core.len() {
        report.fail(format!(
            "ke graph with |V−corona|={} > |core|={}",
            n - corona.len(),
            core.len()
        ));
    }
    report.push(format!(
        "ke={ke} sum-condition={cond_sum} matching-condition={cond_matching}"
    ));
    report
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("the input graph is not a König-Egerváry graph")]
    NotKoenigEgervary,
    #[error("excluded by the hypothesis: the graph must be a König-Egerváry graph other than K1 and K2 (and nonempty)")]
    ExcludedSmallGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Joins a fresh complete graph on n+1 vertices to every vertex of `g`
/// (indices preserved, new vertices appended). For König-Egerváry `g`
/// other than K1 and K2 the result has the same family of maximum
/// independent sets but is not König-Egerváry. The postconditions are
/// verified on the constructed graph.
pub fn embed_non_ke(g: &Graph) -> Result<Graph, EmbedError> {
    let n = g.vertex_count();
    if !is_ke(g) {
        return Err(EmbedError::NotKoenigEgervary);
    }
    // K1 and K2 are exactly the complete KE graphs (and the empty graph is
    // degenerate); for alpha <= 1 a fresh clique vertex forms a maximum
    // independent set of its own and Ω grows
    if alpha(g) <= 1 {
        return Err(EmbedError::ExcludedSmallGraph);
    }

    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    for x in n..(2 * n + 1) {
        for y in 0..x {
            edges.push((y, x));
        }
    }
    let g_prime = Graph::from_edge_list(2 * n + 1, &edges)?;

    debug_assert_eq!(alpha(&g_prime), alpha(g));
    debug_assert_eq!(mu(&g_prime), n);
    debug_assert!(!is_ke(&g_prime));
    Ok(g_prime)
}

/// Runs the embedding and re-verifies its postconditions as a report:
/// Ω preserved under the identity map, α preserved, μ(G′) = |V(G)|,
/// |V(G′)| = 2|V(G)| + 1, and G′ not König-Egerváry.
pub fn check_embedding(g: &Graph) -> TheoremReport {
    const ID: &str = "embed";
    const MAX_N: usize = 16;
    let n = g.vertex_count();
    if n > MAX_N {
        return TheoremReport::skipped(ID, format!("n={n} exceeds the {MAX_N}-vertex budget"));
    }
    let g_prime = match embed_non_ke(g) {
        Ok(gp) => gp,
        Err(EmbedError::NotKoenigEgervary) => {
            return TheoremReport::hypothesis_not_met(ID, "graph is not König-Egerváry")
        }
        Err(EmbedError::ExcludedSmallGraph) => {
            return TheoremReport::hypothesis_not_met(ID, "K1 and K2 are excluded")
        }
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let mut report = TheoremReport::holds(ID);
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let om_prime = match omega_with_cap(&g_prime, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    if g_prime.vertex_count() != 2 * n + 1 {
        report.fail(format!("|V(G′)|={} != 2n+1={}", g_prime.vertex_count(), 2 * n + 1));
    }
    if om_prime.alpha() != om.alpha() {
        report.fail(format!("α(G′)={} != α(G)={}", om_prime.alpha(), om.alpha()));
    }
    if om_prime.sets() != om.sets() {
        report.fail("Ω(G′) differs from Ω(G) under the identity embedding".to_string());
    }
    let mu_prime = mu(&g_prime);
    if mu_prime != n {
        report.fail(format!("μ(G′)={mu_prime} != n={n}"));
    }
    if is_ke(&g_prime) {
        report.fail("G′ is König-Egerváry".to_string());
    }
    report.push(format!(
        "|V(G′)|={} α={} μ={mu_prime}",
        g_prime.vertex_count(),
        om_prime.alpha()
    ));
    report
}

/// KE consequences bundled over Ω: every nonempty subfamily reaches
/// f = 2α on KE graphs, and the biconditional with |corona|+|core| = 2α.
pub fn check_ke_collection_equality(g: &Graph, cap: usize) -> TheoremReport {
    const ID: &str = "ke-collection-equality";
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let k = om.len();
    if k > cap {
        return TheoremReport::skipped(ID, format!("|Ω|={k} exceeds the cap of {cap}"));
    }
    let two_alpha = 2 * om.alpha();
    let sum_full = om.corona().len() + om.core().len();
    let mut all_ke = true;
    let mut first_bad = None;
    for mask in 1usize..(1 << k) {
        let mut union = VertexSet::EMPTY;
        let mut inter = g.vertices();
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            union |= om.sets()[i];
            inter &= om.sets()[i];
        }
        let f = union.len() + inter.len();
        if f < two_alpha {
            return TheoremReport::fails(
                ID,
                format!("f(Γ)={f} < 2α={two_alpha} for mask {mask:#b}"),
            );
        }
        if f != two_alpha {
            all_ke = false;
            first_bad.get_or_insert(mask);
        }
    }
    let mut report = TheoremReport::holds(ID);
    // |corona|+|core| = 2α iff every nonempty subfamily is KE
    if (sum_full == two_alpha) != all_ke {
        report.fail(format!(
            "biconditional violated: |corona|+|core|={sum_full}, 2α={two_alpha}, all-ke={all_ke}"
        ));
    }
    // KE graphs satisfy the full-family equality, hence every Γ is KE
    if is_ke(g) && !all_ke {
        report.fail(format!(
            "ke graph with a non-ke collection: mask {:#b}",
            first_bad.unwrap_or(0)
        ));
    }
    report.push(format!("all-subfamilies-ke={all_ke}"));
    report
}

/// KE graphs satisfy |diadem| + |nucleus| = 2α.
pub fn check_diadem_nucleus(g: &Graph) -> TheoremReport {
    const ID: &str = "diadem-nucleus";
    if !is_ke(g) {
        return TheoremReport::hypothesis_not_met(ID, "graph is not König-Egerváry");
    }
    let profile = match critical_profile(g) {
        Ok(p) => p,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let sum = profile.diadem.len() + profile.nucleus.len();
    let two_alpha = 2 * alpha(g);
    if sum == two_alpha {
        TheoremReport::holds(ID).with_detail(format!("|diadem|+|nucleus|={sum}"))
    } else {
        TheoremReport::fails(ID, format!("|diadem|+|nucleus|={sum} != 2α={two_alpha}"))
    }
}

/// On KE graphs, for every nonempty Γ ⊆ Ω(G): α(G[∪Γ]) = α(G),
/// Γ ⊆ Ω(G[∪Γ]), corona(G[∪Γ]) = ∪Γ and core(G[∪Γ]) = ∩Γ.
pub fn check_induced_core_corona(g: &Graph, cap: usize) -> TheoremReport {
    const ID: &str = "induced-core-corona";
    if !is_ke(g) {
        return TheoremReport::hypothesis_not_met(ID, "graph is not König-Egerváry");
    }
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let k = om.len();
    if k > cap {
        return TheoremReport::skipped(ID, format!("|Ω|={k} exceeds the cap of {cap}"));
    }
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0usize;
    'masks: for mask in 1usize..(1 << k) {
        let members: Vec<VertexSet> = (0..k)
            .filter(|i| mask & (1usize << i) != 0)
            .map(|i| om.sets()[i])
            .collect();
        let union = members.iter().copied().fold(VertexSet::EMPTY, |a, b| a | b);
        let inter = members.iter().copied().reduce(|a, b| a & b).unwrap();
        let (h, map) = g.induced_subgraph(union);
        let om_h = match omega_with_cap(&h, DEFAULT_OMEGA_CAP) {
            Ok(o) => o,
            Err(e) => return TheoremReport::skipped(ID, e.to_string()),
        };
        checked += 1;
        if om_h.alpha() != om.alpha() {
            report.fail(format!("α(G[∪Γ])={} != α(G)={}", om_h.alpha(), om.alpha()));
            break 'masks;
        }
        // translate H's families back to original vertex indices
        let lift = |s: VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
        let corona_h = lift(om_h.corona());
        let core_h = lift(om_h.core());
        for member in &members {
            let in_h: VertexSet = member
                .iter()
                .map(|v| map.iter().position(|&o| o == v).expect("member inside union"))
                .collect();
            if !om_h.contains(in_h) {
                report.fail(format!(
                    "member {} of Γ is not a maximum independent set of G[∪Γ]",
                    g.set_to_string(*member)
                ));
                break 'masks;
            }
        }
        if corona_h != union {
            report.fail(format!(
                "corona(G[∪Γ])={} != ∪Γ={}",
                g.set_to_string(corona_h),
                g.set_to_string(union)
            ));
            break 'masks;
        }
        if core_h != inter {
            report.fail(format!(
                "core(G[∪Γ])={} != ∩Γ={}",
                g.set_to_string(core_h),
                g.set_to_string(inter)
            ));
            break 'masks;
        }
    }
    report.push(format!("subfamilies-checked={checked}"));
    report
}

/// |Ω(G)| ≤ 2 together with diadem = corona forces König-Egerváry.
pub fn check_two_omega_diadem(g: &Graph) -> TheoremReport {
    const ID: &str = "two-omega-diadem";
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    if om.len() > 2 {
        return TheoremReport::hypothesis_not_met(ID, format!("|Ω|={}", om.len()));
    }
    let profile = match critical_profile(g) {
        Ok(p) => p,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    if profile.diadem != om.corona() {
        return TheoremReport::hypothesis_not_met(ID, "diadem != corona");
    }
    if is_ke(g) {
        TheoremReport::holds(ID)
    } else {
        TheoremReport::fails(
            ID,
            format!("|Ω|={} and diadem=corona but the graph is not König-Egerváry", om.len()),
        )
    }
}

/// Bipartite graphs satisfy ker = core = nucleus, and their family of
/// maximum critical independent sets sits below Ω in the preorder.
pub fn check_bipartite_ker(g: &Graph) -> TheoremReport {
    const ID: &str = "bipartite-ker";
    if !g.is_bipartite() {
        return TheoremReport::hypothesis_not_met(ID, "graph is not bipartite");
    }
    let profile = match critical_profile(g) {
        Ok(p) => p,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let core = om.core();
    let mut report = TheoremReport::holds(ID);
    if profile.ker != core || core != profile.nucleus {
        report.fail(format!(
            "ker={} core={} nucleus={}",
            g.set_to_string(profile.ker),
            g.set_to_string(core),
            g.set_to_string(profile.nucleus)
        ));
    }
    // MaxCritIndep ⊲ Ω: diadem ⊆ corona and core ⊆ nucleus
    if !(profile.diadem.is_subset_of(om.corona()) && core.is_subset_of(profile.nucleus)) {
        report.fail("maximum critical independent sets are not below Ω in the preorder");
    }
    report
}

/// Internal consistency of a diagnosis: the bounds are weakly increasing
/// and the KE flag agrees with both its definition and the tightness of
/// the sandwich.
pub fn diagnosis_is_consistent(d: &KeDiagnosis) -> bool {
    let (lo, mid, hi) = d.bounds;
    lo <= mid && mid <= hi && (d.is_ke == (lo == hi)) && d.is_ke == (d.alpha + d.mu == d.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn ke_recognition_examples() {
        assert!(is_ke(&Graph::cycle(4).unwrap()));
        assert!(is_ke(&Graph::path(4).unwrap()));
        assert!(is_ke(&Graph::edgeless(1).unwrap()));
        assert!(is_ke(&Graph::complete(2).unwrap()));
        assert!(!is_ke(&Graph::cycle(5).unwrap()));
        assert!(!is_ke(&Graph::complete(3).unwrap()));
    }

    #[test]
    fn critical_equivalence_on_small_graphs() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::edgeless(1).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::path(6).unwrap(),
        ] {
            let r = check_critical_maximum_equivalence(&g);
            assert_eq!(r.verdict, Verdict::Holds, "{r}");
        }
    }

    #[test]
    fn sandwich_examples() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::path(7).unwrap(),
        ] {
            let r = check_corona_core_sandwich(&g);
            assert_eq!(r.verdict, Verdict::Holds, "{r}");
        }
    }

    #[test]
    fn unicyclic_bound_on_cycles() {
        // C4 is KE: sum = 2α; C5 and C7 are not: sum = 2α + 1
        assert_eq!(check_unicyclic_sandwich(&Graph::cycle(4).unwrap()).verdict, Verdict::Holds);
        assert_eq!(check_unicyclic_sandwich(&Graph::cycle(5).unwrap()).verdict, Verdict::Holds);
        assert_eq!(check_unicyclic_sandwich(&Graph::cycle(7).unwrap()).verdict, Verdict::Holds);
        assert_eq!(
            check_unicyclic_sandwich(&Graph::path(4).unwrap()).verdict,
            Verdict::HypothesisNotMet
        );
    }

    #[test]
    fn characterizations_on_simple_graphs() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::path(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::edgeless(1).unwrap(),
        ] {
            let r = check_characterization_pairs(&g, 10_000, 7);
            assert_eq!(r.verdict, Verdict::Holds, "{r}");
            let r = check_characterization_core(&g);
            assert_eq!(r.verdict, Verdict::Holds, "{r}");
        }
    }

    #[test]
    fn embedding_examples() {
        // P3 embeds into a 7-vertex non-KE graph
        let p3 = Graph::path(3).unwrap();
        let gp = embed_non_ke(&p3).unwrap();
        assert_eq!(gp.vertex_count(), 7);
        assert_eq!(mu(&gp), 3);
        assert_eq!(alpha(&gp), 2);
        assert!(!is_ke(&gp));

        // C4 embeds into a 9-vertex non-KE graph
        let c4 = Graph::cycle(4).unwrap();
        let gp = embed_non_ke(&c4).unwrap();
        assert_eq!(gp.vertex_count(), 9);
        assert_eq!(alpha(&gp), 2);
        assert_eq!(mu(&gp), 4);
        assert!(!is_ke(&gp));

        // excluded and invalid inputs
        assert_eq!(
            embed_non_ke(&Graph::complete(2).unwrap()),
            Err(EmbedError::ExcludedSmallGraph)
        );
        assert_eq!(
            embed_non_ke(&Graph::edgeless(1).unwrap()),
            Err(EmbedError::ExcludedSmallGraph)
        );
        assert_eq!(
            embed_non_ke(&Graph::cycle(5).unwrap()),
            Err(EmbedError::NotKoenigEgervary)
        );
    }

    #[test]
    fn embedding_check_verifies_omega_preservation() {
        for g in [Graph::path(3).unwrap(), Graph::cycle(4).unwrap(), Graph::cycle(6).unwrap()] {
            let r = check_embedding(&g);
            assert_eq!(r.verdict, Verdict::Holds, "{r}");
        }
        assert_eq!(
            check_embedding(&Graph::cycle(5).unwrap()).verdict,
            Verdict::HypothesisNotMet
        );
    }

    #[test]
    fn ke_corollary_checks_hold_on_samples() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::path(5).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(4).unwrap(),
        ] {
            for r in [
                check_ke_collection_equality(&g, 12),
                check_induced_core_corona(&g, 12),
                check_two_omega_diadem(&g),
                check_diadem_nucleus(&g),
                check_bipartite_ker(&g),
            ] {
                assert_ne!(r.verdict, Verdict::Fails, "{r}");
            }
        }
    }

    #[test]
    fn diagnosis_invariants() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(5).unwrap(),
        ] {
            let d = diagnose(&g).unwrap();
            assert!(diagnosis_is_consistent(&d));
            // every maximum set is critical exactly on KE graphs
            let all_critical = d.critical_omega.iter().all(|&(_, c)| c);
            assert_eq!(all_critical, d.is_ke);
        }
    }
}
