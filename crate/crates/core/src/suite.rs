//! The registered checker suite: every verification this crate knows how
//! to run on a single graph, addressable by a stable identifier. Checkers
//! that quantify over families sample them with a seeded generator, so a
//! run is reproducible from (graph, seed, budgets).

use crate::collections::{
    check_main_monotonicity, check_perfect_matching_theorem, check_simplicial_complex, f_value,
    intersection_of, theorem_matching_witness, union_of, Collection,
};
use crate::critical::{check_critical_closure, check_enlargement, check_difference_equality};
use crate::graph::Graph;
use crate::independence::{omega_with_cap, EnumMode, OmegaFamily};
use crate::ke::{
    check_bipartite_ker, check_characterization_core, check_characterization_pairs,
    check_diadem_nucleus, check_embedding, check_induced_core_corona,
    check_ke_collection_equality, check_unicyclic_sandwich, check_critical_maximum_equivalence, check_corona_core_sandwich,
    check_two_omega_diadem,
};
use crate::limits::DEFAULT_OMEGA_CAP;
use crate::matching::matching_from_into;
use crate::report::{TheoremReport, Verdict};
use crate::set::VertexSet;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Budgets and seeds shared by every checker in one run.
#[derive(Clone, Debug)]
pub struct CheckContext {
    /// Seed for all sampled families.
    pub seed: u64,
    /// Number of sampled family pairs per graph in quantified checks.
    pub samples: usize,
    /// Materialization cap for Ω(G).
    pub omega_cap: usize,
    /// |Ω| threshold for full subcollection enumeration.
    pub collection_cap: usize,
    /// Cap on enumerated pairs in the pairwise characterization.
    pub pair_cap: usize,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext {
            seed: 0x4b45,
            samples: 16,
            omega_cap: DEFAULT_OMEGA_CAP,
            collection_cap: 12,
            pair_cap: 4096,
        }
    }
}

/// One entry of the registry.
pub struct RegisteredCheck {
    pub id: &'static str,
    pub describes: &'static str,
    pub run: fn(&Graph, &CheckContext) -> TheoremReport,
}

/// All checkers in the order they are reported.
pub fn registry() -> &'static [RegisteredCheck] {
    &[
        RegisteredCheck {
            id: "enlargement",
            describes: "every critical independent set extends to a maximum independent set",
            run: |g, _| check_enlargement(g),
        },
        RegisteredCheck {
            id: "critical-closure",
            describes: "critical independent sets are closed under union and intersection; ker is the unique minimal one",
            run: |g, _| check_critical_closure(g),
        },
        RegisteredCheck {
            id: "difference-equality",
            describes: "the difference maximum over all subsets equals the maximum over independent sets",
            run: |g, _| check_difference_equality(g),
        },
        RegisteredCheck {
            id: "matching-lemma",
            describes: "a matching from A − ∩Λ into ∪Λ − A exists for independent A and nonempty Λ ⊆ Ω",
            run: check_matching_lemma,
        },
        RegisteredCheck {
            id: "collection-matching",
            describes: "a matching from ∩Γ′ − ∩Γ into ∪Γ − ∪Γ′ exists for nonempty Γ ⊆ Ω, Γ′ ⊆ Ind",
            run: check_collection_matching,
        },
        RegisteredCheck {
            id: "core-corona-matching",
            describes: "a matching from ∩Γ′ − core into corona − ∪Γ′ exists; per maximum set S, from S − core into corona − S",
            run: check_core_corona_matching,
        },
        RegisteredCheck {
            id: "monotonicity",
            describes: "f(Γ) = |∪Γ| + |∩Γ| is increasing along the collection preorder",
            run: check_monotonicity_sampled,
        },
        RegisteredCheck {
            id: "subset-monotone",
            describes: "f is monotone under subfamily inclusion inside Ω",
            run: check_subset_monotone,
        },
        RegisteredCheck {
            id: "union-intersection-lower",
            describes: "2α ≤ |∪Γ| + |∩Γ| for every nonempty Γ ⊆ Ω",
            run: check_union_intersection_lower,
        },
        RegisteredCheck {
            id: "ke-critical",
            describes: "König-Egerváry iff some iff every maximum independent set is critical",
            run: |g, _| check_critical_maximum_equivalence(g),
        },
        RegisteredCheck {
            id: "core-critical-chain",
            describes: "graphs with critical core: core ⊆ nucleus, MaxCritIndep below Ω, size chain, and the diadem=corona collapse",
            run: |g, _| check_core_critical_chain(g),
        },
        RegisteredCheck {
            id: "corona-core-sandwich",
            describes: "2α ≤ |corona| + |core| ≤ 2(|V| − μ), tight on both sides exactly for König-Egerváry graphs",
            run: |g, _| check_corona_core_sandwich(g),
        },
        RegisteredCheck {
            id: "unicyclic-sandwich",
            describes: "unicyclic graphs: |corona| + |core| ≤ 2α + 1 with equality exactly off the König-Egerváry case",
            run: |g, _| check_unicyclic_sandwich(g),
        },
        RegisteredCheck {
            id: "perfect-matching",
            describes: "collections with f(Γ) = 2α: perfect matching on ∪Γ − ∩Γ and the three induced-subgraph identities",
            run: check_perfect_matching_all_collections,
        },
        RegisteredCheck {
            id: "char-pairs",
            describes: "König-Egerváry iff every (iff some) pair of maximum sets admits a matching from V − S₁∪S₂ into S₁∩S₂",
            run: |g, ctx| check_characterization_pairs(g, ctx.pair_cap, ctx.seed),
        },
        RegisteredCheck {
            id: "char-core",
            describes: "König-Egerváry iff |corona| + |core| = 2α and a matching from V − corona into core exists",
            run: |g, _| check_characterization_core(g),
        },
        RegisteredCheck {
            id: "simplicial",
            describes: "every nonempty subcollection of a König-Egerváry collection is König-Egerváry",
            run: |g, ctx| check_simplicial_complex(g, ctx.collection_cap),
        },
        RegisteredCheck {
            id: "embed",
            describes: "the complete-join embedding preserves Ω and α, forces μ = n, and destroys the König-Egerváry property",
            run: |g, _| check_embedding(g),
        },
        RegisteredCheck {
            id: "ke-collection-equality",
            describes: "on König-Egerváry graphs every nonempty Γ ⊆ Ω has f(Γ) = 2α; biconditional with |corona|+|core| = 2α",
            run: |g, ctx| check_ke_collection_equality(g, ctx.collection_cap),
        },
        RegisteredCheck {
            id: "diadem-nucleus",
            describes: "König-Egerváry graphs satisfy |diadem| + |nucleus| = 2α",
            run: |g, _| check_diadem_nucleus(g),
        },
        RegisteredCheck {
            id: "induced-core-corona",
            describes: "on König-Egerváry graphs G[∪Γ] has corona ∪Γ and core ∩Γ for every nonempty Γ ⊆ Ω",
            run: |g, ctx| check_induced_core_corona(g, ctx.collection_cap),
        },
        RegisteredCheck {
            id: "two-omega-diadem",
            describes: "|Ω| ≤ 2 and diadem = corona force the König-Egerváry property",
            run: |g, _| check_two_omega_diadem(g),
        },
        RegisteredCheck {
            id: "bipartite-ker",
            describes: "bipartite graphs satisfy ker = core = nucleus",
            run: |g, _| check_bipartite_ker(g),
        },
    ]
}

/// Looks a checker up by id.
pub fn find_check(id: &str) -> Option<&'static RegisteredCheck> {
    registry().iter().find(|c| c.id == id)
}

/// Runs every registered checker on one graph.
pub fn run_all(g: &Graph, ctx: &CheckContext) -> Vec<TheoremReport> {
    registry().iter().map(|c| (c.run)(g, ctx)).collect()
}

/// True when no report in the slice failed.
pub fn no_failures(reports: &[TheoremReport]) -> bool {
    reports.iter().all(|r| r.verdict != Verdict::Fails)
}

// ---------------------------------------------------------------------------
// sampled-family checkers
// ---------------------------------------------------------------------------

struct FamilySampler<'a> {
    g: &'a Graph,
    omega: &'a OmegaFamily,
    rng: ChaCha8Rng,
    /// pool of independent sets to draw Γ′ members from
    ind_pool: Vec<VertexSet>,
}

impl<'a> FamilySampler<'a> {
    fn new(g: &'a Graph, omega: &'a OmegaFamily, seed: u64) -> Self {
        // maximal independent sets (capped) plus seeded greedy fills give a
        // varied pool without enumerating Ind(G)
        let mut ind_pool = crate::independence::enumerate_independent_sets(
            g,
            EnumMode::Sample { k: 24, seed },
        )
        .expect("sampling has no size guard");
        if let Ok(maximal) =
            crate::independence::enumerate_independent_sets(g, EnumMode::Maximal)
        {
            ind_pool.extend(maximal.into_iter().take(64));
        }
        ind_pool.push(VertexSet::EMPTY);
        ind_pool.extend(omega.sets().iter().copied().take(16));
        ind_pool.sort_unstable();
        ind_pool.dedup();
        FamilySampler {
            g,
            omega,
            rng: ChaCha8Rng::seed_from_u64(seed),
            ind_pool,
        }
    }

    fn next_index(&mut self, bound: usize) -> usize {
        (self.rng.next_u64() % bound.max(1) as u64) as usize
    }

    /// Random nonempty subfamily of Ω.
    fn omega_subfamily(&mut self) -> Collection {
        let k = self.omega.len();
        let size = 1 + self.next_index(k.min(6));
        let sets: Vec<VertexSet> = (0..size)
            .map(|_| self.omega.sets()[self.next_index(k)])
            .collect();
        Collection::of_omega(self.omega, sets).expect("members drawn from Ω")
    }

    /// Random nonempty family of independent sets.
    fn ind_family(&mut self) -> Collection {
        let size = 1 + self.next_index(4);
        let sets: Vec<VertexSet> = (0..size).map(|_| self.ind_set()).collect();
        Collection::of_independent(self.g, sets).expect("pool members are independent")
    }

    /// Random single independent set.
    fn ind_set(&mut self) -> VertexSet {
        let i = self.next_index(self.ind_pool.len());
        self.ind_pool[i]
    }
}

fn omega_or_skip(g: &Graph, ctx: &CheckContext, id: &'static str) -> Result<OmegaFamily, TheoremReport> {
    omega_with_cap(g, ctx.omega_cap).map_err(|e| TheoremReport::skipped(id, e.to_string()))
}

fn check_matching_lemma(g: &Graph, ctx: &CheckContext) -> TheoremReport {
    const ID: &str = "matching-lemma";
    let om = match omega_or_skip(g, ctx, ID) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let mut sampler = FamilySampler::new(g, &om, ctx.seed);
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0usize;
    for _ in 0..ctx.samples {
        let lambda = sampler.omega_subfamily();
        let a = sampler.ind_set();
        let inter = intersection_of(&lambda).expect("nonempty by construction");
        let union = union_of(&lambda);
        let from = a - inter;
        let into = union - a;
        checked += 1;
        match matching_from_into(g, from, into).expect("disjoint sides") {
            Some(_) => {}
            None => {
                report.fail(format!(
                    "no matching from {} into {} for A={}, |Λ|={}",
                    g.set_to_string(from),
                    g.set_to_string(into),
                    g.set_to_string(a),
                    lambda.len()
                ));
                break;
            }
        }
    }
    report.push(format!("checked={checked}"));
    report
}

fn check_collection_matching(g: &Graph, ctx: &CheckContext) -> TheoremReport {
    const ID: &str = "collection-matching";
    let om = match omega_or_skip(g, ctx, ID) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let mut sampler = FamilySampler::new(g, &om, ctx.seed ^ 0x636d);
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0usize;
    for _ in 0..ctx.samples {
        let gamma = sampler.omega_subfamily();
        let gamma_prime = sampler.ind_family();
        checked += 1;
        if let Err(e) = theorem_matching_witness(g, &gamma, &gamma_prime) {
            report.fail(e.to_string());
            break;
        }
    }
    report.push(format!("checked={checked}"));
    report
}

fn check_core_corona_matching(g: &Graph, ctx: &CheckContext) -> TheoremReport {
    const ID: &str = "core-corona-matching";
    let om = match omega_or_skip(g, ctx, ID) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let core = om.core();
    let corona = om.corona();
    let mut sampler = FamilySampler::new(g, &om, ctx.seed ^ 0x6363);
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0usize;

    // sampled Γ′ ⊆ Ind
    for _ in 0..ctx.samples {
        let gamma_prime = sampler.ind_family();
        let from = intersection_of(&gamma_prime).expect("nonempty") - core;
        let into = corona - union_of(&gamma_prime);
        checked += 1;
        if matching_from_into(g, from, into).expect("disjoint sides").is_none() {
            report.fail(format!(
                "no matching from ∩Γ′−core={} into corona−∪Γ′={}",
                g.set_to_string(from),
                g.set_to_string(into)
            ));
            break;
        }
    }

    // every maximum independent set individually (capped)
    for &s in om.sets().iter().take(256) {
        checked += 1;
        if matching_from_into(g, s - core, corona - s)
            .expect("disjoint sides")
            .is_none()
        {
            report.fail(format!(
                "no matching from S−core into corona−S for S={}",
                g.set_to_string(s)
            ));
            break;
        }
    }
    report.push(format!("checked={checked}"));
    report
}

fn check_monotonicity_sampled(g: &Graph, ctx: &CheckContext) -> TheoremReport {
    const ID: &str = "monotonicity";
    let om = match omega_or_skip(g, ctx, ID) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let mut sampler = FamilySampler::new(g, &om, ctx.seed ^ 0x6d6f);
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0usize;
    let mut attempted = 0usize;
    for i in 0..ctx.samples {
        let gamma = sampler.omega_subfamily();
        // alternate between guaranteed-nested subfamilies and free draws
        // tested against the preorder
        let gamma_prime = if i % 2 == 0 {
            let size = 1 + sampler.next_index(gamma.len());
            let sets: Vec<VertexSet> = (0..size)
                .map(|_| gamma.sets()[sampler.next_index(gamma.len())])
                .collect();
            Collection::of_independent(g, sets).expect("Ω members are independent")
        } else {
            sampler.ind_family()
        };
        attempted += 1;
        let r = check_main_monotonicity(g, &gamma, &gamma_prime);
        match r.verdict {
            Verdict::Holds => checked += 1,
            Verdict::Fails => {
                report.verdict = Verdict::Fails;
                report.details.extend(r.details);
                break;
            }
            _ => {}
        }
    }
    report.push(format!("checked={checked} attempted={attempted}"));
    report
}

fn check_subset_monotone(g: &Graph, ctx: &CheckContext) -> TheoremReport {
    const ID: &str = "subset-monotone";
    let om = match omega_or_skip(g, ctx, ID) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let mut sampler = FamilySampler::new(g, &om, ctx.seed ^ 0x7375);
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0usize;
    for _ in 0..ctx.samples {
        let gamma = sampler.omega_subfamily();
        let size = 1 + sampler.next_index(gamma.len());
        let subsets: Vec<VertexSet> = (0..size)
            .map(|_| gamma.sets()[sampler.next_index(gamma.len())])
            .collect();
        let gamma_prime = Collection::of_omega(&om, subsets).expect("members stay in Ω");
        let f_sub = f_value(&gamma_prime).expect("nonempty");
        let f_sup = f_value(&gamma).expect("nonempty");
        checked += 1;
        if f_sub > f_sup {
            report.fail(format!("f(Γ′)={f_sub} > f(Γ)={f_sup} for Γ′ ⊆ Γ"));
            break;
        }
    }
    report.push(format!("checked={checked}"));
    report
}

fn check_union_intersection_lower(g: &Graph, ctx: &CheckContext) -> TheoremReport {
    const ID: &str = "union-intersection-lower";
    let om = match omega_or_skip(g, ctx, ID) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let two_alpha = 2 * om.alpha();
    let mut report = TheoremReport::holds(ID);
    let mut checked = 0usize;
    if om.len() <= ctx.collection_cap {
        // full enumeration of nonempty subfamilies
        let k = om.len();
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
            checked += 1;
            if union.len() + inter.len() < two_alpha {
                report.fail(format!(
                    "f(Γ)={} < 2α={two_alpha} for mask {mask:#b}",
                    union.len() + inter.len()
                ));
                break;
            }
        }
    } else {
        let mut sampler = FamilySampler::new(g, &om, ctx.seed ^ 0x6c6f);
        for _ in 0..ctx.samples {
            let gamma = sampler.omega_subfamily();
            checked += 1;
            let f = f_value(&gamma).expect("nonempty");
            if f < two_alpha {
                report.fail(format!("f(Γ)={f} < 2α={two_alpha}"));
                break;
            }
        }
        report.push("sampled".to_string());
    }
    report.push(format!("checked={checked}"));
    report
}

fn check_core_critical_chain(g: &Graph) -> TheoremReport {
    const ID: &str = "core-critical-chain";
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let profile = match crate::critical::critical_profile(g) {
        Ok(p) => p,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let core = om.core();
    if crate::critical::difference(g, core) != profile.id {
        return TheoremReport::hypothesis_not_met(ID, "core is not a critical set");
    }
    let corona = om.corona();
    let mut report = TheoremReport::holds(ID);
    if !core.is_subset_of(profile.nucleus) {
        report.fail(format!(
            "core={} is not contained in nucleus={}",
            g.set_to_string(core),
            g.set_to_string(profile.nucleus)
        ));
    }
    // MaxCritIndep ⊲ Ω
    if !(profile.diadem.is_subset_of(corona) && core.is_subset_of(profile.nucleus)) {
        report.fail("MaxCritIndep is not below Ω in the preorder".to_string());
    }
    let lhs = profile.diadem.len() + profile.nucleus.len();
    let rhs = corona.len() + core.len();
    if lhs > rhs {
        report.fail(format!("|diadem|+|nucleus|={lhs} > |corona|+|core|={rhs}"));
    }
    if profile.diadem == corona && core != profile.nucleus {
        report.fail("diadem = corona but core != nucleus".to_string());
    }
    report.push(format!("|diadem|+|nucleus|={lhs} |corona|+|core|={rhs}"));
    report
}

fn check_perfect_matching_all_collections(g: &Graph, ctx: &CheckContext) -> TheoremReport {
    const ID: &str = "perfect-matching";
    let om = match omega_or_skip(g, ctx, ID) {
        Ok(o) => o,
        Err(r) => return r,
    };
    let k = om.len();
    if k > ctx.collection_cap {
        return TheoremReport::skipped(
            ID,
            format!("|Ω|={k} exceeds the cap of {}", ctx.collection_cap),
        );
    }
    let mut report = TheoremReport::holds(ID);
    let mut ke_collections = 0usize;
    for mask in 1usize..(1 << k) {
        let indices = (0..k).filter(|i| mask & (1usize << i) != 0);
        let gamma = Collection::of_omega_indices(&om, indices).expect("indices in range");
        let inner = check_perfect_matching_theorem(g, &gamma);
        match inner.verdict {
            Verdict::Holds => ke_collections += 1,
            Verdict::Fails => {
                report.verdict = Verdict::Fails;
                report.details.extend(inner.details);
                report.push(format!("collection-mask={mask:#b}"));
                return report;
            }
            _ => {}
        }
    }
    report.push(format!("ke-collections-verified={ke_collections}"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let before = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), before);
    }

    #[test]
    fn full_suite_has_no_failures_on_easy_graphs() {
        let ctx = CheckContext::default();
        for g in [
            Graph::edgeless(1).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::path(6).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::complete(5).unwrap(),
        ] {
            let reports = run_all(&g, &ctx);
            assert_eq!(reports.len(), registry().len());
            for r in &reports {
                assert_ne!(r.verdict, Verdict::Fails, "{r} on {g:?}");
            }
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let ctx = CheckContext::default();
        let g = Graph::cycle(7).unwrap();
        let a = run_all(&g, &ctx);
        let b = run_all(&g, &ctx);
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_check_id_is_absent() {
        assert!(find_check("char-pairs").is_some());
        assert!(find_check("no-such-theorem").is_none());
    }
}
