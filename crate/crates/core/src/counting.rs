//! The counting engine: exact falsifying-tuple counts and the
//! satisfiability decision derived from them.
//!
//! The negated formula is a disjunction of cubes; the falsifying count R
//! is the size of their union. Cubes split into connected components of
//! the non-alternative graph. Cross-component cube subsets always
//! contain a contrary pair and cover nothing, so the union factorizes:
//! isolated cubes contribute 2^(n−r) directly, and each larger component
//! is summed by inclusion–exclusion over its cube subsets with the whole
//! subtree pruned as soon as a subset clashes.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::nonalternative_components;
use crate::cnf::CnfFormula;
use crate::cube::Cube;
use crate::lit::Literal;

/// Default number of evaluated terms after which counting aborts instead
/// of running an unbounded exponential enumeration.
pub const DEFAULT_TERM_BUDGET: u64 = 1 << 26;

/// Tuning knobs for [`count_falsifying_with`]. The defaults match
/// [`count_falsifying`].
#[derive(Debug, Clone)]
pub struct CountOptions {
    /// Abort once this many terms have been evaluated. With pruning
    /// disabled, visited zero-contribution subsets count against the
    /// budget as well.
    pub term_budget: u64,
    /// Skip every superset of a clashing subset. Disabling this visits
    /// all subsets and adds an explicit zero for clashing ones; the
    /// result must be identical, which the tests exploit.
    pub prune: bool,
    /// Worker threads for the subset enumeration. Any value yields the
    /// same report; 1 runs fully sequentially.
    pub threads: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            term_budget: DEFAULT_TERM_BUDGET,
            prune: true,
            threads: 1,
        }
    }
}

/// Which route produced the count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountPath {
    /// Every cube pair is alternative: R is the plain sum of per-cube
    /// tuple counts.
    ClosedForm,
    /// Some non-alternative component required subset enumeration.
    InclusionExclusion,
}

impl CountPath {
    pub fn as_str(self) -> &'static str {
        match self {
            CountPath::ClosedForm => "closed_form",
            CountPath::InclusionExclusion => "inclusion_exclusion",
        }
    }
}

/// Result of an exact count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    /// Declared variable count.
    pub n: u32,
    /// Clause count after normalization.
    pub m: usize,
    /// Number of tuples falsifying at least one clause (R).
    pub falsifying: BigUint,
    /// Number of satisfying tuples, 2^n − R.
    pub models: BigUint,
    /// R < 2^n.
    pub satisfiable: bool,
    /// Non-clashing subsets evaluated.
    pub terms_evaluated: u64,
    /// Subset subtrees skipped at a clash.
    pub subtrees_pruned: u64,
    pub path: CountPath,
}

impl CountReport {
    /// JSON rendering. `m_declared` is the clause count the input
    /// declared (e.g. in its DIMACS header) before normalization.
    /// `falsifying` and `models` are decimal strings: they reach 2^n,
    /// past what JSON numbers hold exactly.
    pub fn to_json(&self, m_declared: usize) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "m_declared": m_declared,
            "m_effective": self.m,
            "falsifying": self.falsifying.to_string(),
            "models": self.models.to_string(),
            "satisfiable": self.satisfiable,
            "path": self.path.as_str(),
            "terms_evaluated": self.terms_evaluated,
            "subtrees_pruned": self.subtrees_pruned,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    /// The enumeration hit the configured term budget: the instance sits
    /// in the exponential regime and the caller asked not to wait.
    #[error("term budget {budget} exhausted: inclusion–exclusion term count is exponential here")]
    TermBudgetExceeded { budget: u64 },
}

/// Number of tuples on which a cube of width r is true: 2^(n−r).
pub fn cube_tuple_count(cube: &Cube, n: u32) -> BigUint {
    BigUint::one() << cube.free_count(n) as usize
}

/// Outcome of intersecting a subset of cubes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergeResult {
    /// Some variable appears with both polarities across the subset: the
    /// cubes cover disjoint tuples and the intersection is empty.
    Clash,
    /// The literal union, a cube again, with its free-variable count
    /// t = n − |vars|. The intersection covers 2^t tuples.
    Merged { cube: Cube, free_count: u32 },
}

/// Intersects a nonempty subset of cubes over the same n variables.
///
/// Panics if `cubes` is empty: the empty subset has no meaning in the
/// alternating sum.
pub fn merge_cubes(cubes: &[Cube], n: u32) -> MergeResult {
    assert!(!cubes.is_empty(), "merge_cubes requires a nonempty subset");
    let all: Vec<Literal> = cubes
        .iter()
        .flat_map(|c| c.literals().iter().copied())
        .collect();
    match Cube::new(&all, n) {
        Ok(cube) => {
            let free_count = cube.free_count(n);
            MergeResult::Merged { cube, free_count }
        }
        Err(crate::error::FormulaError::ContraryInCube { .. }) => MergeResult::Clash,
        Err(e) => panic!("merge over mismatched variable counts: {e}"),
    }
}

/// Counts the falsifying tuples of a normalized formula exactly and
/// decides satisfiability, with default options.
pub fn count_falsifying(f: &CnfFormula) -> Result<CountReport, CountError> {
    count_falsifying_with(f, &CountOptions::default())
}

/// Decides satisfiability: YES iff fewer than 2^n tuples falsify some
/// clause. No satisfying assignment is ever produced.
pub fn decide(f: &CnfFormula) -> Result<bool, CountError> {
    Ok(count_falsifying(f)?.satisfiable)
}

/// [`count_falsifying`] with explicit options.
pub fn count_falsifying_with(
    f: &CnfFormula,
    options: &CountOptions,
) -> Result<CountReport, CountError> {
    let n = f.num_vars();
    let dnf = f.negate();
    let components = nonalternative_components(&dnf);
    let closed_form = components.iter().all(|c| c.len() == 1);

    let engine = Engine {
        n,
        budget: options.term_budget,
        prune: options.prune,
        visits: AtomicU64::new(0),
    };

    let mut total = Tally::new(n);
    if options.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .expect("failed to build worker pool");
        pool.install(|| engine.run_components(dnf.cubes(), &components, &mut total, true))?;
    } else {
        engine.run_components(dnf.cubes(), &components, &mut total, false)?;
    }

    let falsifying = total.signed_sum();
    let universe = BigUint::one() << n as usize;
    assert!(
        falsifying <= universe,
        "alternating sum exceeded the tuple universe"
    );
    let models = &universe - &falsifying;
    Ok(CountReport {
        n,
        m: f.num_clauses(),
        satisfiable: !models.is_zero(),
        falsifying,
        models,
        terms_evaluated: total.terms,
        subtrees_pruned: total.pruned,
        path: if closed_form {
            CountPath::ClosedForm
        } else {
            CountPath::InclusionExclusion
        },
    })
}

/// Per-worker accumulator. Every evaluated term is ±2^t, so terms are
/// bucketed by t and the big-integer arithmetic happens once at the end.
struct Tally {
    positive: Vec<u64>,
    negative: Vec<u64>,
    terms: u64,
    pruned: u64,
}

impl Tally {
    fn new(n: u32) -> Self {
        Tally {
            positive: vec![0; n as usize + 1],
            negative: vec![0; n as usize + 1],
            terms: 0,
            pruned: 0,
        }
    }

    fn absorb(&mut self, other: &Tally) {
        for (a, b) in self.positive.iter_mut().zip(&other.positive) {
            *a += b;
        }
        for (a, b) in self.negative.iter_mut().zip(&other.negative) {
            *a += b;
        }
        self.terms += other.terms;
        self.pruned += other.pruned;
    }

    fn signed_sum(&self) -> BigUint {
        let side = |buckets: &[u64]| {
            let mut sum = BigUint::zero();
            for (t, &count) in buckets.iter().enumerate() {
                if count > 0 {
                    sum += BigUint::from(count) << t;
                }
            }
            sum
        };
        let positive = side(&self.positive);
        let negative = side(&self.negative);
        positive
            .checked_sub(&negative)
            .expect("alternating sum went negative")
    }
}

/// A cube as sparse per-word polarity masks, the DFS working form.
#[derive(Debug, Clone)]
struct SparseCube {
    /// (word index, positive bits, negative bits); words are 64
    /// variables wide, variable v lives at word (v−1)/64.
    words: Vec<(usize, u64, u64)>,
}

impl SparseCube {
    fn from_cube(cube: &Cube) -> Self {
        let mut words: Vec<(usize, u64, u64)> = Vec::new();
        for lit in cube.literals() {
            let idx = (lit.var() as usize - 1) / 64;
            let bit = 1u64 << ((lit.var() as usize - 1) % 64);
            match words.last_mut() {
                Some(w) if w.0 == idx => {
                    if lit.is_positive() {
                        w.1 |= bit;
                    } else {
                        w.2 |= bit;
                    }
                }
                _ => {
                    if lit.is_positive() {
                        words.push((idx, bit, 0));
                    } else {
                        words.push((idx, 0, bit));
                    }
                }
            }
        }
        SparseCube { words }
    }
}

/// Mutable merge state: dense polarity masks plus the fixed-var count.
#[derive(Clone)]
struct MergeState {
    pos: Vec<u64>,
    neg: Vec<u64>,
    fixed: u32,
}

impl MergeState {
    fn new(n: u32) -> Self {
        let words = (n as usize).div_ceil(64).max(1);
        MergeState {
            pos: vec![0; words],
            neg: vec![0; words],
            fixed: 0,
        }
    }

    fn clashes_with(&self, cube: &SparseCube) -> bool {
        cube.words
            .iter()
            .any(|&(w, p, q)| p & self.neg[w] != 0 || q & self.pos[w] != 0)
    }

    /// Applies the cube, recording overwritten words in `undo`.
    fn apply(&mut self, cube: &SparseCube, undo: &mut Vec<(usize, u64, u64)>) {
        for &(w, p, q) in &cube.words {
            let (old_pos, old_neg) = (self.pos[w], self.neg[w]);
            undo.push((w, old_pos, old_neg));
            self.pos[w] |= p;
            self.neg[w] |= q;
            let added = ((p | q) & !(old_pos | old_neg)).count_ones();
            self.fixed += added;
        }
    }

    fn undo_to(&mut self, undo: &mut Vec<(usize, u64, u64)>, checkpoint: usize) {
        while undo.len() > checkpoint {
            let (w, old_pos, old_neg) = undo.pop().expect("undo checkpoint underflow");
            let removed = ((self.pos[w] | self.neg[w]) & !(old_pos | old_neg)).count_ones();
            self.pos[w] = old_pos;
            self.neg[w] = old_neg;
            self.fixed -= removed;
        }
    }
}

struct Engine {
    n: u32,
    budget: u64,
    prune: bool,
    /// Global work counter for budget enforcement; the reported
    /// instrumentation comes from the deterministic tallies instead.
    visits: AtomicU64,
}

impl Engine {
    fn bump(&self) -> Result<(), CountError> {
        let done = self.visits.fetch_add(1, Ordering::Relaxed) + 1;
        if done > self.budget {
            return Err(CountError::TermBudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn run_components(
        &self,
        cubes: &[Cube],
        components: &[Vec<usize>],
        total: &mut Tally,
        parallel: bool,
    ) -> Result<(), CountError> {
        for component in components {
            if let [lone] = component.as_slice() {
                self.bump()?;
                total.terms += 1;
                total.positive[cubes[*lone].free_count(self.n) as usize] += 1;
                continue;
            }
            // Widest cubes first so clashes surface as early as possible.
            let mut ordered: Vec<usize> = component.clone();
            ordered.sort_by_key(|&i| (std::cmp::Reverse(cubes[i].width()), i));
            let sparse: Vec<SparseCube> = ordered
                .iter()
                .map(|&i| SparseCube::from_cube(&cubes[i]))
                .collect();

            if parallel {
                let partial = (0..sparse.len())
                    .into_par_iter()
                    .map(|top| {
                        let mut tally = Tally::new(self.n);
                        self.explore_branch(&sparse, top, &mut tally)?;
                        Ok(tally)
                    })
                    .try_reduce(
                        || Tally::new(self.n),
                        |mut a, b| {
                            a.absorb(&b);
                            Ok(a)
                        },
                    )?;
                total.absorb(&partial);
            } else {
                for top in 0..sparse.len() {
                    self.explore_branch(&sparse, top, total)?;
                }
            }
        }
        Ok(())
    }

    /// Explores every subset whose smallest element (in enumeration
    /// order) is `top`.
    fn explore_branch(
        &self,
        cubes: &[SparseCube],
        top: usize,
        tally: &mut Tally,
    ) -> Result<(), CountError> {
        let mut state = MergeState::new(self.n);
        let mut undo = Vec::new();
        // A single cube has no contrary pair, so the branch root never
        // clashes.
        state.apply(&cubes[top], &mut undo);
        self.bump()?;
        tally.terms += 1;
        tally.positive[(self.n - state.fixed) as usize] += 1;
        self.extend(cubes, top + 1, 1, &mut state, &mut undo, tally)
    }

    fn extend(
        &self,
        cubes: &[SparseCube],
        start: usize,
        subset_size: u32,
        state: &mut MergeState,
        undo: &mut Vec<(usize, u64, u64)>,
        tally: &mut Tally,
    ) -> Result<(), CountError> {
        for i in start..cubes.len() {
            if state.clashes_with(&cubes[i]) {
                if self.prune {
                    // Every superset keeps the contrary pair and covers
                    // zero tuples: drop the whole subtree.
                    tally.pruned += 1;
                } else {
                    self.visit_clashed(cubes, i + 1)?;
                }
                continue;
            }
            let checkpoint = undo.len();
            state.apply(&cubes[i], undo);
            self.bump()?;
            tally.terms += 1;
            let t = (self.n - state.fixed) as usize;
            if subset_size.is_multiple_of(2) {
                tally.positive[t] += 1;
            } else {
                tally.negative[t] += 1;
            }
            self.extend(cubes, i + 1, subset_size + 1, state, undo, tally)?;
            state.undo_to(undo, checkpoint);
        }
        Ok(())
    }

    /// Pruning disabled: walk the subtree of an already-clashing subset,
    /// adding an explicit zero per subset. Only the budget is touched.
    fn visit_clashed(&self, cubes: &[SparseCube], start: usize) -> Result<(), CountError> {
        self.bump()?;
        for i in start..cubes.len() {
            self.visit_clashed(cubes, i + 1)?;
        }
        Ok(())
    }
}
