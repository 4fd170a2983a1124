//! Families Γ of vertex sets: the containment preorder on collections, the
//! functional f(Γ) = |∪Γ| + |∩Γ|, König-Egerváry collections, and the
//! structure results attached to them.

use crate::graph::Graph;
use crate::independence::{alpha, is_independent, omega_with_cap, OmegaFamily};
use crate::limits::DEFAULT_OMEGA_CAP;
use crate::matching::{matching_from_into, maximum_matching, Matching};
use crate::report::TheoremReport;
use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CollectionError {
    #[error("operation requires a nonempty collection")]
    Empty,
    #[error("set {set:?} is not a maximum independent set of the graph")]
    NotInOmega { set: VertexSet },
    #[error("set {set:?} is not independent in the graph")]
    NotIndependent { set: VertexSet },
    #[error("collection is tagged {found} where {required} is required")]
    WrongProvenance {
        required: &'static str,
        found: &'static str,
    },
    #[error(
        "no matching from {from:?} into {into:?}: this contradicts a proved statement and \
         indicates an implementation bug"
    )]
    TheoremViolation { from: VertexSet, into: VertexSet },
}

/// Where the members of a collection are known to live.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Subfamily of Ω(G).
    OfOmega,
    /// Subfamily of Ind(G).
    OfInd,
}

impl Provenance {
    fn as_str(self) -> &'static str {
        match self {
            Provenance::OfOmega => "subfamily-of-Omega",
            Provenance::OfInd => "subfamily-of-Ind",
        }
    }
}

/// A duplicate-free family of vertex sets in canonical (ascending bitset)
/// order, tagged with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collection {
    sets: Vec<VertexSet>,
    provenance: Provenance,
}

impl Collection {
    /// A subfamily of Ω(G); every member must belong to `omega`.
    pub fn of_omega(
        omega: &OmegaFamily,
        sets: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Collection, CollectionError> {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        for &s in &sets {
            if !omega.contains(s) {
                return Err(CollectionError::NotInOmega { set: s });
            }
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(Collection {
            sets,
            provenance: Provenance::OfOmega,
        })
    }

    /// The subfamily of `omega` selected by member indices.
    pub fn of_omega_indices(
        omega: &OmegaFamily,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Collection, CollectionError> {
        Collection::of_omega(omega, indices.into_iter().map(|i| omega.sets()[i]))
    }

    /// A subfamily of Ind(G); every member must be independent in `g`.
    pub fn of_independent(
        g: &Graph,
        sets: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Collection, CollectionError> {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        for &s in &sets {
            if !is_independent(g, s) {
                return Err(CollectionError::NotIndependent { set: s });
            }
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(Collection {
            sets,
            provenance: Provenance::OfInd,
        })
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// ∪Γ. The union of the empty collection is empty.
pub fn union_of(gamma: &Collection) -> VertexSet {
    gamma
        .sets
        .iter()
        .copied()
        .fold(VertexSet::EMPTY, |a, b| a | b)
}

/// ∩Γ. Undefined for the empty collection.
pub fn intersection_of(gamma: &Collection) -> Result<VertexSet, CollectionError> {
    gamma
        .sets
        .iter()
        .copied()
        .reduce(|a, b| a & b)
        .ok_or(CollectionError::Empty)
}

/// f(Γ) = |∪Γ| + |∩Γ|.
pub fn f_value(gamma: &Collection) -> Result<usize, CollectionError> {
    Ok(union_of(gamma).len() + intersection_of(gamma)?.len())
}

/// The preorder Γ′ ⊲ Γ: ∪Γ′ ⊆ ∪Γ and ∩Γ ⊆ ∩Γ′. Both collections must be
/// nonempty.
pub fn preorder_lt(gamma_prime: &Collection, gamma: &Collection) -> Result<bool, CollectionError> {
    let up = intersection_of(gamma_prime)?;
    let ip = intersection_of(gamma)?;
    Ok(union_of(gamma_prime).is_subset_of(union_of(gamma)) && ip.is_subset_of(up))
}

/// Verifies that f is increasing along ⊲ for one pair: Γ ⊆ Ω(G),
/// Γ′ ⊆ Ind(G), Γ′ ⊲ Γ implies f(Γ′) ≤ f(Γ).
pub fn check_main_monotonicity(
    g: &Graph,
    gamma: &Collection,
    gamma_prime: &Collection,
) -> TheoremReport {
    const ID: &str = "monotonicity";
    let _ = g;
    if gamma.provenance != Provenance::OfOmega {
        return TheoremReport::hypothesis_not_met(ID, "Γ is not tagged as a subfamily of Ω");
    }
    if gamma.is_empty() || gamma_prime.is_empty() {
        return TheoremReport::hypothesis_not_met(ID, "empty collection");
    }
    match preorder_lt(gamma_prime, gamma) {
        Ok(true) => {}
        Ok(false) => {
            return TheoremReport::hypothesis_not_met(ID, "Γ′ is not below Γ in the preorder")
        }
        Err(e) => return TheoremReport::hypothesis_not_met(ID, e.to_string()),
    }
    let f_prime = f_value(gamma_prime).expect("nonempty");
    let f_gamma = f_value(gamma).expect("nonempty");
    if f_prime <= f_gamma {
        TheoremReport::holds(ID).with_detail(format!("f(Γ′)={f_prime} <= f(Γ)={f_gamma}"))
    } else {
        TheoremReport::fails(ID, format!("f(Γ′)={f_prime} > f(Γ)={f_gamma}"))
    }
}

/// Produces the matching from ∩Γ′ − ∩Γ into ∪Γ − ∪Γ′ whose existence is
/// guaranteed for nonempty Γ ⊆ Ω(G) and Γ′ ⊆ Ind(G). A missing witness on
/// valid input is an implementation bug and is reported as a violation.
pub fn theorem_matching_witness(
    g: &Graph,
    gamma: &Collection,
    gamma_prime: &Collection,
) -> Result<Matching, CollectionError> {
    if gamma.is_empty() || gamma_prime.is_empty() {
        return Err(CollectionError::Empty);
    }
    if gamma.provenance != Provenance::OfOmega {
        return Err(CollectionError::WrongProvenance {
            required: Provenance::OfOmega.as_str(),
            found: gamma.provenance.as_str(),
        });
    }
    let from = intersection_of(gamma_prime)? - intersection_of(gamma)?;
    let into = union_of(gamma) - union_of(gamma_prime);
    match matching_from_into(g, from, into) {
        Ok(Some(m)) => Ok(m),
        Ok(None) => Err(CollectionError::TheoremViolation { from, into }),
        Err(_) => {
            // overlap is impossible: `from` avoids ∪Γ′ ⊇ nothing? both sides
            // are disjoint by construction since `into` excludes ∪Γ′ ⊇ ∩Γ′
            unreachable!("from/into sides are disjoint by construction")
        }
    }
}

/// True iff Γ is a König-Egerváry collection: f(Γ) = 2α(G). Γ must be a
/// nonempty subfamily of Ω(G).
pub fn is_ke_collection(g: &Graph, gamma: &Collection) -> Result<bool, CollectionError> {
    if gamma.provenance != Provenance::OfOmega {
        return Err(CollectionError::WrongProvenance {
            required: Provenance::OfOmega.as_str(),
            found: gamma.provenance.as_str(),
        });
    }
    Ok(f_value(gamma)? == 2 * alpha(g))
}

/// Enumerates every nonempty Γ ⊆ Ω(G) and checks that the König-Egerváry
/// collections are closed under taking nonempty subcollections. The report
/// lists the facets (maximal KE collections) as index sets into the
/// canonical order of Ω(G).
pub fn check_simplicial_complex(g: &Graph, cap: usize) -> TheoremReport {
    const ID: &str = "simplicial";
    let om = match omega_with_cap(g, DEFAULT_OMEGA_CAP) {
        Ok(o) => o,
        Err(e) => return TheoremReport::skipped(ID, e.to_string()),
    };
    let k = om.len();
    if k > cap {
        return TheoremReport::skipped(ID, format!("|Ω|={k} exceeds the cap of {cap}"));
    }
    let two_alpha = 2 * om.alpha();

    // f for every nonempty subfamily, indexed by membership mask
    let total = 1usize << k;
    let ke: Vec<bool> = (0..total)
        .map(|mask| {
            if mask == 0 {
                return false;
            }
            let mut union = VertexSet::EMPTY;
            let mut inter = g.vertices();
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                union |= om.sets()[i];
                inter &= om.sets()[i];
            }
            union.len() + inter.len() == two_alpha
        })
        .collect();

    let mut report = TheoremReport::holds(ID);
    // heredity via single-element removals is enough by induction
    'scan: for mask in 1..total {
        if !ke[mask] || mask.count_ones() < 2 {
            continue;
        }
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = mask & !(1usize << i);
            if !ke[sub] {
                report.fail(format!(
                    "KE collection mask {mask:#b} has a non-KE subcollection {sub:#b}"
                ));
                break 'scan;
            }
        }
    }

    // facets: KE masks with no KE superset obtained by adding one member
    let mut facets = Vec::new();
    for mask in 1..total {
        if !ke[mask] {
            continue;
        }
        let maximal = (0..k)
            .filter(|i| mask & (1usize << i) == 0)
            .all(|i| !ke[mask | (1usize << i)]);
        if maximal {
            facets.push(mask);
        }
    }
    let facet_strings: Vec<String> = facets
        .iter()
        .map(|mask| {
            let members: Vec<String> = (0..k)
                .filter(|i| mask & (1usize << i) != 0)
                .map(|i| i.to_string())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    report.push(format!("ke-collections={}", ke.iter().filter(|&&b| b).count()));
    report.push(format!("facets=[{}]", facet_strings.join(" ")));
    report
}

/// Verifies the four structural consequences of f(Γ) = 2α(G) for
/// Γ ⊆ Ω(G): a perfect matching on ∪Γ − ∩Γ, the size identity
/// |∪Γ| − |∩Γ| = 2μ(G[∪Γ]), preservation of α on G[∪Γ], and G[∪Γ] being a
/// König-Egerváry graph.
pub fn check_perfect_matching_theorem(g: &Graph, gamma: &Collection) -> TheoremReport {
    const ID: &str = "perfect-matching";
    if gamma.provenance != Provenance::OfOmega {
        return TheoremReport::hypothesis_not_met(ID, "Γ is not tagged as a subfamily of Ω");
    }
    if gamma.is_empty() {
        return TheoremReport::hypothesis_not_met(ID, "empty collection");
    }
    let a = alpha(g);
    let f = f_value(gamma).expect("nonempty");
    if f != 2 * a {
        return TheoremReport::hypothesis_not_met(ID, format!("f(Γ)={f} != 2α={}", 2 * a));
    }
    let union = union_of(gamma);
    let inter = intersection_of(gamma).expect("nonempty");
    let mut report = TheoremReport::holds(ID);

    // (i) perfect matching in G[∪Γ − ∩Γ]
    let sym = union - inter;
    let (h_sym, _) = g.induced_subgraph(sym);
    let m_sym = maximum_matching(&h_sym);
    if 2 * m_sym.size() == sym.len() {
        report.push(format!("perfect-matching-size={}", m_sym.size()));
    } else {
        report.fail(format!(
            "G[∪Γ−∩Γ] on {} vertices has maximum matching {}",
            sym.len(),
            m_sym.size()
        ));
    }

    // (ii) |∪Γ| − |∩Γ| = 2μ(G[∪Γ])
    let (h_union, _) = g.induced_subgraph(union);
    let mu_union = maximum_matching(&h_union).size();
    if union.len() - inter.len() != 2 * mu_union {
        report.fail(format!(
            "|∪Γ|−|∩Γ|={} != 2μ(G[∪Γ])={}",
            union.len() - inter.len(),
            2 * mu_union
        ));
    }

    // (iii) α(G[∪Γ]) = α(G)
    let alpha_union = alpha(&h_union);
    if alpha_union != a {
        report.fail(format!("α(G[∪Γ])={alpha_union} != α(G)={a}"));
    }

    // (iv) G[∪Γ] is a König-Egerváry graph
    if alpha_union + mu_union != union.len() {
        report.fail(format!(
            "G[∪Γ] is not König-Egerváry: α+μ={} != |∪Γ|={}",
            alpha_union + mu_union,
            union.len()
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::omega;
    use crate::report::Verdict;

    fn sets(items: &[&[usize]]) -> Vec<VertexSet> {
        items
            .iter()
            .map(|xs| xs.iter().copied().collect())
            .collect()
    }

    /// Collections over an edgeless carrier so arbitrary families are
    /// independent; mirrors the worked preorder examples.
    fn free_collection(items: &[&[usize]]) -> Collection {
        let g = Graph::edgeless(8).unwrap();
        Collection::of_independent(&g, sets(items)).unwrap()
    }

    #[test]
    fn preorder_worked_examples() {
        // {{1}} not below {{1,2}}: intersection shrinks the wrong way
        let a = free_collection(&[&[1]]);
        let b = free_collection(&[&[1, 2]]);
        assert!(!preorder_lt(&a, &b).unwrap());

        // {{1,2},{2,3}} not below {{1,2},{1,3}}
        let a = free_collection(&[&[1, 2], &[2, 3]]);
        let b = free_collection(&[&[1, 2], &[1, 3]]);
        assert!(!preorder_lt(&a, &b).unwrap());

        // {{1,2},{2,3}} below {{1,2},{1,3},{2,3}}
        let a = free_collection(&[&[1, 2], &[2, 3]]);
        let b = free_collection(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(preorder_lt(&a, &b).unwrap());

        // {{1,2},{2,3}} below {{1,2},{1,3},{2}}
        let b = free_collection(&[&[1, 2], &[1, 3], &[2]]);
        assert!(preorder_lt(&a, &b).unwrap());
    }

    #[test]
    fn preorder_is_reflexive_and_transitive() {
        let families: Vec<Collection> = vec![
            free_collection(&[&[0, 1]]),
            free_collection(&[&[0, 1], &[1, 2]]),
            free_collection(&[&[0, 1], &[1, 2], &[0, 2]]),
            free_collection(&[&[3]]),
            free_collection(&[&[0, 1, 2], &[3]]),
        ];
        for f in &families {
            assert!(preorder_lt(f, f).unwrap());
        }
        for a in &families {
            for b in &families {
                for c in &families {
                    if preorder_lt(a, b).unwrap() && preorder_lt(b, c).unwrap() {
                        assert!(preorder_lt(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn f_value_and_singletons() {
        let g = Graph::cycle(4).unwrap();
        let om = omega(&g).unwrap();
        for &s in om.sets() {
            let gamma = Collection::of_omega(&om, [s]).unwrap();
            assert_eq!(f_value(&gamma).unwrap(), 2 * s.len());
            assert!(is_ke_collection(&g, &gamma).unwrap());
        }
        assert!(matches!(
            f_value(&Collection::of_omega(&om, []).unwrap()),
            Err(CollectionError::Empty)
        ));
    }

    #[test]
    fn provenance_is_validated() {
        let g = Graph::cycle(4).unwrap();
        let om = omega(&g).unwrap();
        assert!(matches!(
            Collection::of_omega(&om, [VertexSet::singleton(0)]),
            Err(CollectionError::NotInOmega { .. })
        ));
        assert!(matches!(
            Collection::of_independent(&g, sets(&[&[0, 1]])),
            Err(CollectionError::NotIndependent { .. })
        ));
        let ind = Collection::of_independent(&g, sets(&[&[0]])).unwrap();
        assert!(matches!(
            is_ke_collection(&g, &ind),
            Err(CollectionError::WrongProvenance { .. })
        ));
    }

    #[test]
    fn monotonicity_on_nested_subfamilies() {
        let g = Graph::cycle(6).unwrap();
        let om = omega(&g).unwrap();
        let full = Collection::of_omega(&om, om.sets().to_vec()).unwrap();
        let part = Collection::of_omega(&om, [om.sets()[0]]).unwrap();
        let r = check_main_monotonicity(&g, &full, &part);
        assert_eq!(r.verdict, Verdict::Holds, "{r}");

        // equal collections give equality
        let r = check_main_monotonicity(&g, &full, &full);
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn matching_witness_from_singleton_to_omega() {
        // matching from S − core into corona − S for every maximum set S
        let g = Graph::cycle(7).unwrap();
        let om = omega(&g).unwrap();
        let full = Collection::of_omega(&om, om.sets().to_vec()).unwrap();
        for &s in om.sets() {
            let single = Collection::of_independent(&g, [s]).unwrap();
            let m = theorem_matching_witness(&g, &full, &single).unwrap();
            let from = s - om.core();
            assert!(from.is_subset_of(m.saturated_set()));
            for e in m.edges() {
                let target = if from.contains(e.u) { e.v } else { e.u };
                assert!((om.corona() - s).contains(target));
            }
        }
    }

    #[test]
    fn matching_witness_trivial_when_source_empty() {
        let g = Graph::cycle(4).unwrap();
        let om = omega(&g).unwrap();
        let full = Collection::of_omega(&om, om.sets().to_vec()).unwrap();
        let m = theorem_matching_witness(&g, &full, &full.clone()).unwrap_or_else(|_| {
            panic!("witness must exist");
        });
        // ∩Γ′ − ∩Γ = ∅ for identical collections
        assert_eq!(m.size(), 0);
    }

    #[test]
    fn simplicial_complex_on_ke_graph_is_full_power_set() {
        let g = Graph::path(4).unwrap();
        let om = omega(&g).unwrap();
        let r = check_simplicial_complex(&g, 12);
        assert_eq!(r.verdict, Verdict::Holds, "{r}");
        let expected = (1usize << om.len()) - 1;
        assert!(r
            .details
            .iter()
            .any(|d| d == &format!("ke-collections={expected}")));
    }

    #[test]
    fn perfect_matching_theorem_cases() {
        let g = Graph::cycle(6).unwrap();
        let om = omega(&g).unwrap();

        // singleton: symmetric difference empty, trivially perfect
        let single = Collection::of_omega(&om, [om.sets()[0]]).unwrap();
        assert_eq!(check_perfect_matching_theorem(&g, &single).verdict, Verdict::Holds);

        // full Ω on an even cycle: f(Ω) = 2α and all four parts hold
        let full = Collection::of_omega(&om, om.sets().to_vec()).unwrap();
        let r = check_perfect_matching_theorem(&g, &full);
        assert_eq!(r.verdict, Verdict::Holds, "{r}");

        // C5: f(Ω) = 5 + 0 = 5 != 4 = 2α, hypothesis not met
        let g5 = Graph::cycle(5).unwrap();
        let om5 = omega(&g5).unwrap();
        let full5 = Collection::of_omega(&om5, om5.sets().to_vec()).unwrap();
        assert_eq!(
            check_perfect_matching_theorem(&g5, &full5).verdict,
            Verdict::HypothesisNotMet
        );
    }
}
