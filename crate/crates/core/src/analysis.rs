//! Structural analysis of cube disjunctions: the alternative relation,
//! its connected components, and the predicted counting workload.

use num_bigint::BigUint;
use num_traits::One;

use crate::cube::Cube;
use crate::dnf::DnfCubes;

/// True iff some variable occurs in both cubes with opposite polarity.
///
/// Alternative cubes cover disjoint tuple sets, so their contributions
/// simply add. Non-alternative pairs overlap (or may overlap) and force
/// inclusion–exclusion. The relation is symmetric and irreflexive.
pub fn are_alternative(a: &Cube, b: &Cube) -> bool {
    let mut left = a.literals().iter().peekable();
    let mut right = b.literals().iter().peekable();
    while let (Some(&&la), Some(&&lb)) = (left.peek(), right.peek()) {
        match la.var().cmp(&lb.var()) {
            std::cmp::Ordering::Less => {
                left.next();
            }
            std::cmp::Ordering::Greater => {
                right.next();
            }
            std::cmp::Ordering::Equal => {
                if la.is_contrary(lb) {
                    return true;
                }
                left.next();
                right.next();
            }
        }
    }
    false
}

/// Connected components of the graph on cube indices whose edges join
/// NON-alternative pairs. Singleton components are included. Components
/// are ordered by smallest member, members ascending.
pub fn nonalternative_components(d: &DnfCubes) -> Vec<Vec<usize>> {
    let cubes = d.cubes();
    let mut uf = UnionFind::new(cubes.len());
    for i in 0..cubes.len() {
        for j in (i + 1)..cubes.len() {
            if !are_alternative(&cubes[i], &cubes[j]) {
                uf.union(i, j);
            }
        }
    }
    uf.components()
}

/// Structural regime of an instance: either every cube pair is
/// alternative (closed-form counting) or some component of mutually
/// reachable non-alternative cubes forces subset enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Cube count.
    pub m: usize,
    /// True iff no non-alternative pair exists.
    pub all_pairwise_alternative: bool,
    /// Sizes of non-alternative components of size ≥ 2, descending.
    pub nonalternative_components: Vec<usize>,
    /// Largest component size (1 for any nonempty all-alternative
    /// instance, 0 when there are no cubes).
    pub p_max: usize,
    /// Exact number of inclusion–exclusion terms if no subset clashes:
    /// 2^size − 1 per component plus one per isolated cube. Pruning can
    /// only reduce the evaluated count below this.
    pub predicted_terms_upper_bound: BigUint,
}

impl StructureReport {
    /// JSON rendering; the term bound is a decimal string since it can
    /// exceed any fixed-width integer.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "all_pairwise_alternative": self.all_pairwise_alternative,
            "nonalternative_components": self.nonalternative_components,
            "p_max": self.p_max,
            "predicted_terms_upper_bound": self.predicted_terms_upper_bound.to_string(),
        })
    }
}

/// Computes the structural report for a cube disjunction.
pub fn analyze_structure(d: &DnfCubes) -> StructureReport {
    let components = nonalternative_components(d);
    let mut sizes: Vec<usize> = components
        .iter()
        .map(Vec::len)
        .filter(|&s| s >= 2)
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let isolated = components.iter().filter(|c| c.len() == 1).count();
    let p_max = components.iter().map(Vec::len).max().unwrap_or(0);
    let mut bound = BigUint::from(isolated);
    for &size in &sizes {
        bound += (BigUint::one() << size) - BigUint::one();
    }
    StructureReport {
        m: d.cubes().len(),
        all_pairwise_alternative: p_max <= 1,
        nonalternative_components: sizes,
        p_max,
        predicted_terms_upper_bound: bound,
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            // Smaller root wins so component identity is deterministic.
            let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
            self.parent[hi] = lo;
        }
    }

    fn components(&mut self) -> Vec<Vec<usize>> {
        let len = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); len];
        for i in 0..len {
            let root = self.find(i);
            by_root[root].push(i);
        }
        by_root.retain(|c| !c.is_empty());
        by_root
    }
}
