//! Exact-cover completion search.
//!
//! [`complete_cover`] places blocks whose positive differences consume a
//! prescribed multiset exactly. Branching always takes the largest
//! remaining difference `D`: the block realizing it must be `{0, .., D}`, so
//! only its interior is enumerated. Consecutive blocks with equal `D` have
//! lexicographically nondecreasing interiors. Those are the only symmetry
//! cuts; an `Exhausted` verdict means the whole canonical tree was walked.
//!
//! The same scheme drives the cyclic search ([`search_small_cdf`]), where the
//! smallest residue with remaining demand is pinned as the pair `(0, d)`, and
//! a column-by-column search for additive sequences of permutations
//! ([`search_asp`]).

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::diff::{Block, DiffMultiset, Family, Kind, Payload, Provenance};
use crate::error::{Error, Result};

/// Node and wall-clock limits for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
    /// Sequential search: identical inputs give identical solutions and node counts.
    pub deterministic: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 100_000_000, max_time: Duration::from_secs(60), deterministic: true }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Result<Self> {
        if max_nodes == 0 || max_time.is_zero() {
            return Err(Error::Precondition("search limits must be positive".into()));
        }
        Ok(SearchBudget { max_nodes, max_time, deterministic: true })
    }

    /// The default budget, with the wall-clock limit taken from
    /// `DIFFKIT_BUDGET_MS` when set.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(ms) = std::env::var("DIFFKIT_BUDGET_MS").ok().and_then(|s| s.trim().parse::<u64>().ok()) {
            if ms > 0 {
                b.max_time = Duration::from_millis(ms);
            }
        }
        b
    }

    /// Explores first-level branches on the rayon pool.
    pub fn parallel(mut self) -> Self {
        self.deterministic = false;
        self
    }
}

/// Result of a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The full canonical tree was enumerated without a solution.
    Exhausted,
    /// A limit was hit first; nothing is claimed.
    BudgetExceeded,
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(x) => Some(x),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::Exhausted => "exhausted",
            SearchOutcome::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport<T> {
    pub outcome: SearchOutcome<T>,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Blocks to place so that their positive differences consume `remaining`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProblem {
    pub remaining: DiffMultiset,
    pub num_blocks: usize,
    pub block_size: usize,
    pub element_cap: i64,
    /// Already placed; returned ahead of the found blocks.
    pub fixed_blocks: Vec<Block>,
}

impl CoverProblem {
    pub fn new(
        remaining: DiffMultiset,
        num_blocks: usize,
        block_size: usize,
        element_cap: i64,
        fixed_blocks: Vec<Block>,
    ) -> Result<Self> {
        let p = CoverProblem { remaining, num_blocks, block_size, element_cap, fixed_blocks };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<()> {
        let k = self.block_size as u64;
        if k < 2 {
            return Err(Error::Precondition("blocks need at least two elements".into()));
        }
        let need = self.num_blocks as u64 * k * (k - 1) / 2;
        if self.remaining.total() != need {
            return Err(Error::Precondition(format!(
                "remaining differences total {} but {} blocks of size {k} consume {need}",
                self.remaining.total(),
                self.num_blocks
            )));
        }
        if self.remaining.count(0) > 0 {
            return Err(Error::Precondition("difference 0 cannot be covered".into()));
        }
        Ok(())
    }
}

/// Shared limits and counters for one search.
struct Limits<'a> {
    budget: &'a SearchBudget,
    start: Instant,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
}

impl Limits<'_> {
    /// Counts a node; false once any limit has been hit.
    fn tick(&self, local: &mut u64) -> bool {
        *local += 1;
        if *local & 0x3ff == 0 {
            let total = self.nodes.fetch_add(0x400, Ordering::Relaxed) + 0x400;
            if total > self.budget.max_nodes || self.start.elapsed() > self.budget.max_time {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.abort.load(Ordering::Relaxed)
    }

    fn flush(&self, local: u64) {
        self.nodes.fetch_add(local & 0x3ff, Ordering::Relaxed);
        if self.nodes.load(Ordering::Relaxed) > self.budget.max_nodes {
            self.abort.store(true, Ordering::Relaxed);
        }
    }
}

/// How a search ended inside one subtree.
enum Walk {
    Found,
    Exhausted,
    Aborted,
}

struct LinearState<'a> {
    counts: Vec<u32>,
    k: usize,
    cap: i64,
    blocks: Vec<Vec<i64>>,
    local: u64,
    /// Set when a sibling branch with a smaller index already succeeded.
    cancel: Option<(usize, &'a AtomicUsize)>,
}

impl LinearState<'_> {
    fn take(&mut self, d: i64) -> bool {
        match self.counts.get_mut(d as usize) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        }
    }

    fn give(&mut self, d: i64) {
        self.counts[d as usize] += 1;
    }

    /// Adds `x` to `block`, consuming its differences; undoes on failure.
    fn place(&mut self, block: &[i64], x: i64) -> bool {
        for (n, &y) in block.iter().enumerate() {
            if !self.take((x - y).abs()) {
                for &z in &block[..n] {
                    self.give((x - z).abs());
                }
                return false;
            }
        }
        true
    }

    fn unplace(&mut self, block: &[i64], x: i64) {
        for &y in block {
            self.give((x - y).abs());
        }
    }

    fn largest(&self) -> Option<i64> {
        self.counts.iter().rposition(|&c| c > 0).map(|i| i as i64)
    }

    fn cancelled(&self) -> bool {
        matches!(self.cancel, Some((me, best)) if best.load(Ordering::Relaxed) < me)
    }
}

fn linear_blocks(st: &mut LinearState, lim: &Limits, left: usize) -> Walk {
    if left == 0 {
        return Walk::Found;
    }
    let d = match st.largest() {
        Some(d) => d,
        None => return Walk::Exhausted,
    };
    if d > st.cap || !st.take(d) {
        return Walk::Exhausted;
    }
    let prev = st.blocks.last().filter(|b| *b.last().unwrap() == d).map(|b| b[1..b.len() - 1].to_vec());
    let mut block = vec![0, d];
    let r = linear_interior(st, lim, left, &mut block, 1, prev.as_deref(), true);
    st.give(d);
    r
}

/// Chooses interior element number `pos` (1-based) of the block `{0, .., D}`.
fn linear_interior(
    st: &mut LinearState,
    lim: &Limits,
    left: usize,
    block: &mut Vec<i64>,
    pos: usize,
    prev: Option<&[i64]>,
    tight: bool,
) -> Walk {
    let d = block[1];
    if block.len() == st.k {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        st.blocks.push(sorted);
        let r = linear_blocks(st, lim, left - 1);
        if !matches!(r, Walk::Found) {
            st.blocks.pop();
        }
        return r;
    }
    let last = if block.len() > 2 { block[block.len() - 1] } else { 0 };
    let mut lo = last + 1;
    if let (Some(p), true) = (prev, tight) {
        lo = lo.max(p[pos - 1]);
    }
    let slots_after = (st.k - block.len() - 1) as i64;
    let mut aborted = false;
    for x in lo..d - slots_after {
        if !lim.tick(&mut st.local) || st.cancelled() {
            aborted = true;
            break;
        }
        if !st.place(block, x) {
            continue;
        }
        block.push(x);
        let still_tight = tight && prev.is_some_and(|p| p[pos - 1] == x);
        let r = linear_interior(st, lim, left, block, pos + 1, prev, still_tight);
        block.pop();
        match r {
            Walk::Found => return Walk::Found,
            Walk::Aborted => {
                st.unplace(block, x);
                aborted = true;
                break;
            }
            Walk::Exhausted => st.unplace(block, x),
        }
    }
    if aborted {
        Walk::Aborted
    } else {
        Walk::Exhausted
    }
}

/// Every interior tuple the first block can take, in branch order.
fn first_level(p: &CoverProblem, counts: &[u32]) -> Option<(i64, Vec<Vec<i64>>)> {
    let d = counts.iter().rposition(|&c| c > 0)? as i64;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(p: &CoverProblem, counts: &mut Vec<u32>, d: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 2 == p.block_size {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(1, |x| x + 1);
        for x in lo..d {
            let mut block = vec![0, d];
            block.extend_from_slice(cur);
            let mut ok = true;
            let mut taken = Vec::new();
            for &y in &block {
                let e = (x - y).unsigned_abs() as usize;
                if counts[e] == 0 {
                    ok = false;
                    break;
                }
                counts[e] -= 1;
                taken.push(e);
            }
            if ok {
                cur.push(x);
                rec(p, counts, d, cur, out);
                cur.pop();
            }
            for e in taken {
                counts[e] += 1;
            }
        }
    }
    let mut c = counts.to_vec();
    if d as usize >= c.len() || d > p.element_cap {
        return Some((d, out));
    }
    c[d as usize] -= 1;
    rec(p, &mut c, d, &mut cur, &mut out);
    Some((d, out))
}

fn dense_counts(m: &DiffMultiset) -> Vec<u32> {
    let hi = m.max_value().unwrap_or(0) as usize;
    (0..=hi as i64).map(|d| m.count(d)).collect()
}

fn finish_blocks(p: &CoverProblem, found: Vec<Vec<i64>>) -> Result<Vec<Block>> {
    let mut out = p.fixed_blocks.clone();
    for b in found {
        out.push(Block::new(b)?);
    }
    Ok(out)
}

/// Completes `problem` within `budget`; returned blocks include the fixed ones.
pub fn complete_cover(problem: &CoverProblem, budget: &SearchBudget) -> Result<SearchReport<Vec<Block>>> {
    problem.check()?;
    let start = Instant::now();
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let lim = Limits { budget, start, nodes: &nodes, abort: &abort };
    let counts = dense_counts(&problem.remaining);
    let report = |outcome, nodes: &AtomicU64| SearchReport { outcome, nodes: nodes.load(Ordering::Relaxed), elapsed: start.elapsed() };

    if problem.num_blocks == 0 {
        return Ok(report(SearchOutcome::Found(problem.fixed_blocks.clone()), &nodes));
    }

    if budget.deterministic {
        let mut st = LinearState { counts, k: problem.block_size, cap: problem.element_cap, blocks: vec![], local: 0, cancel: None };
        let r = linear_blocks(&mut st, &lim, problem.num_blocks);
        lim.flush(st.local);
        let outcome = match r {
            Walk::Found => SearchOutcome::Found(finish_blocks(problem, st.blocks)?),
            Walk::Exhausted => SearchOutcome::Exhausted,
            Walk::Aborted => SearchOutcome::BudgetExceeded,
        };
        return Ok(report(outcome, &nodes));
    }

    let (d, branches) = first_level(problem, &counts).expect("nonempty remaining multiset");
    let best_cell = AtomicUsize::new(usize::MAX);
    let best = &best_cell;
    let results: Vec<(Walk, Vec<Vec<i64>>)> = branches
        .par_iter()
        .enumerate()
        .map(|(idx, interior)| {
            let mut st = LinearState {
                counts: counts.clone(),
                k: problem.block_size,
                cap: problem.element_cap,
                blocks: vec![],
                local: 0,
                cancel: Some((idx, best)),
            };
            let mut block = vec![0, d];
            st.take(d);
            for &x in interior {
                let ok = st.place(&block, x);
                debug_assert!(ok);
                block.push(x);
            }
            block.sort_unstable();
            st.blocks.push(block);
            let r = linear_blocks(&mut st, &lim, problem.num_blocks - 1);
            lim.flush(st.local);
            if matches!(r, Walk::Found) {
                best.fetch_min(idx, Ordering::Relaxed);
            }
            (r, st.blocks)
        })
        .collect();
    let mut outcome = SearchOutcome::Exhausted;
    for (r, blocks) in results {
        match r {
            Walk::Found => {
                outcome = SearchOutcome::Found(finish_blocks(problem, blocks)?);
                break;
            }
            Walk::Aborted => {
                if matches!(outcome, SearchOutcome::Exhausted) {
                    outcome = SearchOutcome::BudgetExceeded;
                }
            }
            Walk::Exhausted => {}
        }
    }
    Ok(report(outcome, &nodes))
}

/// The cover problem of a (v,k,λ)-PDF: `[1, (v-1)/2]` each `λ` times.
pub fn pdf_problem(v: i64, k: usize, lambda: u32) -> Result<CoverProblem> {
    let pairs = (k * (k - 1)) as i64;
    if v < 3 || v % 2 == 0 || k < 2 || lambda == 0 || (lambda as i64 * (v - 1)) % pairs != 0 {
        return Err(Error::Inadmissible(format!(
            "a ({v},{k},{lambda})-PDF needs odd v and λ(v-1) ≡ 0 (mod {pairs})"
        )));
    }
    let half = (v - 1) / 2;
    let mut remaining = DiffMultiset::with_bound(half as usize + 1);
    for d in 1..=half {
        remaining.add(d, lambda);
    }
    let blocks = (lambda as i64 * (v - 1) / pairs) as usize;
    CoverProblem::new(remaining, blocks, k, half, vec![])
}

/// Searches a (v,k,λ)-PDF from scratch.
pub fn search_small_pdf(v: i64, k: usize, lambda: u32, budget: &SearchBudget) -> Result<SearchReport<Family>> {
    let p = pdf_problem(v, k, lambda)?;
    let r = complete_cover(&p, budget)?;
    let outcome = match r.outcome {
        SearchOutcome::Found(blocks) => SearchOutcome::Found(Family::from_blocks(
            Kind::Pdf,
            &[("v", v), ("k", k as i64), ("lambda", lambda as i64)],
            blocks,
            Provenance::Searched,
        )?),
        SearchOutcome::Exhausted => SearchOutcome::Exhausted,
        SearchOutcome::BudgetExceeded => SearchOutcome::BudgetExceeded,
    };
    Ok(SearchReport { outcome, nodes: r.nodes, elapsed: r.elapsed })
}

struct CyclicState {
    v: i64,
    k: usize,
    counts: Vec<u32>,
    blocks: Vec<Vec<i64>>,
    local: u64,
}

impl CyclicState {
    fn r(&self, x: i64) -> usize {
        x.rem_euclid(self.v) as usize
    }

    /// Consumes `±(x - y)` for every `y` in `block`; undoes on failure.
    fn place(&mut self, block: &[i64], x: i64) -> bool {
        let mut taken = Vec::with_capacity(2 * block.len());
        for &y in block {
            for e in [self.r(x - y), self.r(y - x)] {
                if self.counts[e] == 0 {
                    for t in taken {
                        self.counts[t] += 1;
                    }
                    return false;
                }
                self.counts[e] -= 1;
                taken.push(e);
            }
        }
        true
    }

    fn unplace(&mut self, block: &[i64], x: i64) {
        for &y in block {
            let (a, b) = (self.r(x - y), self.r(y - x));
            self.counts[a] += 1;
            self.counts[b] += 1;
        }
    }
}

fn cyclic_blocks(st: &mut CyclicState, lim: &Limits, left: usize) -> Walk {
    if left == 0 {
        return Walk::Found;
    }
    let d = match (1..st.v).find(|&r| st.counts[r as usize] > 0) {
        Some(d) => d,
        None => return Walk::Exhausted,
    };
    let mut block = vec![0];
    if !st.place(&block, d) {
        return Walk::Exhausted;
    }
    block.push(d);
    let prev = st.blocks.last().filter(|b| b[1] == d).map(|b| b[2..].to_vec());
    let r = cyclic_rest(st, lim, left, &mut block, prev.as_deref(), true);
    block.pop();
    st.unplace(&block, d);
    r
}

fn cyclic_rest(
    st: &mut CyclicState,
    lim: &Limits,
    left: usize,
    block: &mut Vec<i64>,
    prev: Option<&[i64]>,
    tight: bool,
) -> Walk {
    if block.len() == st.k {
        st.blocks.push(block.clone());
        let r = cyclic_blocks(st, lim, left - 1);
        if !matches!(r, Walk::Found) {
            st.blocks.pop();
        }
        return r;
    }
    let pos = block.len() - 2;
    let d = block[1];
    let mut lo = if block.len() > 2 { block[block.len() - 1] + 1 } else { 1 };
    if let (Some(p), true) = (prev, tight) {
        lo = lo.max(p[pos]);
    }
    for x in lo..st.v {
        if x == d {
            continue;
        }
        if !lim.tick(&mut st.local) {
            return Walk::Aborted;
        }
        if !st.place(block, x) {
            continue;
        }
        block.push(x);
        let still_tight = tight && prev.is_some_and(|p| p[pos] == x);
        let r = cyclic_rest(st, lim, left, block, prev, still_tight);
        block.pop();
        match r {
            Walk::Found => return Walk::Found,
            Walk::Aborted => {
                st.unplace(block, x);
                return Walk::Aborted;
            }
            Walk::Exhausted => st.unplace(block, x),
        }
    }
    Walk::Exhausted
}

/// Searches a (v,k,λ)-CDF over `Z_v`, sequentially. Each block is stored as
/// `{0, d, ..}` translated so that its pinned pair sits at `(0, d)`.
pub fn search_small_cdf(v: i64, k: usize, lambda: u32, budget: &SearchBudget) -> Result<SearchReport<Family>> {
    let pairs = (k * (k - 1)) as i64;
    if v < 2 || k < 2 || k as i64 > v || lambda == 0 || (lambda as i64 * (v - 1)) % pairs != 0 {
        return Err(Error::Inadmissible(format!("a ({v},{k},{lambda})-CDF needs λ(v-1) ≡ 0 (mod {pairs})")));
    }
    let start = Instant::now();
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let lim = Limits { budget, start, nodes: &nodes, abort: &abort };
    let mut counts = vec![lambda; v as usize];
    counts[0] = 0;
    let mut st = CyclicState { v, k, counts, blocks: vec![], local: 0 };
    let n = (lambda as i64 * (v - 1) / pairs) as usize;
    let r = cyclic_blocks(&mut st, &lim, n);
    lim.flush(st.local);
    let outcome = match r {
        Walk::Found => {
            let blocks = st.blocks.into_iter().map(Block::new).collect::<Result<Vec<_>>>()?;
            SearchOutcome::Found(Family::from_blocks(
                Kind::Cdf,
                &[("v", v), ("k", k as i64), ("lambda", lambda as i64)],
                blocks,
                Provenance::Searched,
            )?)
        }
        Walk::Exhausted => SearchOutcome::Exhausted,
        Walk::Aborted => SearchOutcome::BudgetExceeded,
    };
    Ok(SearchReport { outcome, nodes: nodes.load(Ordering::Relaxed), elapsed: start.elapsed() })
}

struct AspState {
    m: usize,
    n: usize,
    h: i64,
    rows: Vec<Vec<i64>>,
    /// `sums[j1][j2][c]`: column `c` of `X_{j1} + .. + X_{j2}`.
    sums: Vec<Vec<Vec<i64>>>,
    /// `used[j1][j2]`: values (offset by `h`) already taken by that run sum.
    used: Vec<Vec<u128>>,
    local: u64,
}

fn asp_cell(st: &mut AspState, lim: &Limits, c: usize, j: usize) -> Walk {
    if c == st.n {
        return Walk::Found;
    }
    if j == st.m {
        return asp_cell(st, lim, c + 1, 1);
    }
    let mut aborted = false;
    'values: for val in -st.h..=st.h {
        if !lim.tick(&mut st.local) {
            aborted = true;
            break;
        }
        let mut bits = Vec::with_capacity(j + 1);
        for j1 in (0..=j).rev() {
            let s = if j1 == j { val } else { st.sums[j1][j - 1][c] + val };
            if s.abs() > st.h {
                continue 'values;
            }
            let bit = 1u128 << (s + st.h);
            if st.used[j1][j] & bit != 0 {
                continue 'values;
            }
            bits.push((j1, s, bit));
        }
        for &(j1, s, bit) in &bits {
            st.used[j1][j] |= bit;
            st.sums[j1][j][c] = s;
        }
        st.rows[j][c] = val;
        let r = asp_cell(st, lim, c, j + 1);
        if matches!(r, Walk::Found) {
            return r;
        }
        for &(j1, _, bit) in &bits {
            st.used[j1][j] &= !bit;
        }
        if matches!(r, Walk::Aborted) {
            aborted = true;
            break;
        }
    }
    if aborted {
        Walk::Aborted
    } else {
        Walk::Exhausted
    }
}

/// Searches an ASP(m,n) over the basis `[-(n-1)/2, (n-1)/2]` with the first
/// permutation fixed to the sorted basis (uniform column permutations
/// preserve the property).
pub fn search_asp(m: usize, n: i64, budget: &SearchBudget) -> Result<SearchReport<Family>> {
    if n < 1 || n % 2 == 0 || n > 127 {
        return Err(Error::UnsupportedModulus { v: n, reason: "ASP search needs odd n <= 127".into() });
    }
    if m == 0 {
        return Err(Error::Precondition("ASP needs at least one permutation".into()));
    }
    let (nu, h) = (n as usize, (n - 1) / 2);
    let start = Instant::now();
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let lim = Limits { budget, start, nodes: &nodes, abort: &abort };
    let basis: Vec<i64> = (-h..=h).collect();
    let mut st = AspState {
        m,
        n: nu,
        h,
        rows: vec![vec![0; nu]; m],
        sums: vec![vec![vec![0; nu]; m]; m],
        used: vec![vec![0; m]; m],
        local: 0,
    };
    st.rows[0] = basis.clone();
    st.sums[0][0] = basis;
    st.used[0][0] = (1u128 << n) - 1;
    let r = asp_cell(&mut st, &lim, 0, 1);
    lim.flush(st.local);
    let outcome = match r {
        Walk::Found => SearchOutcome::Found(Family::new(
            Kind::Asp,
            &[("m", m as i64), ("n", n)],
            Payload::Rows(st.rows),
            Provenance::Searched,
        )?),
        Walk::Exhausted => SearchOutcome::Exhausted,
        Walk::Aborted => SearchOutcome::BudgetExceeded,
    };
    Ok(SearchReport { outcome, nodes: nodes.load(Ordering::Relaxed), elapsed: start.elapsed() })
}

/// [`search_asp`] with three permutations.
pub fn search_asp3(n: i64, budget: &SearchBudget) -> Result<SearchReport<Family>> {
    search_asp(3, n, budget)
}

/// Verdict of one [`nonexistence_sweep`] instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Exists,
    Nonexistent,
    Inconclusive,
}

/// Machine-readable outcome of an exhaustive PDF search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustionReport {
    pub instance: String,
    pub v: i64,
    pub k: usize,
    pub lambda: u32,
    pub verdict: Verdict,
    pub nodes: u64,
    pub canonicalization: Vec<&'static str>,
    /// A family when one was found.
    pub witness: Option<Vec<Vec<i64>>>,
}

pub const CANONICALIZATION: [&str; 3] = [
    "blocks translated to contain 0",
    "the block realizing the largest remaining difference D is {0, .., D}",
    "consecutive blocks with equal D have lexicographically nondecreasing interiors",
];

/// Exhaustive search on each `(v, k, λ)`; a budget cut is `Inconclusive`,
/// never `Nonexistent`.
pub fn nonexistence_sweep(instances: &[(i64, usize, u32)], budget: &SearchBudget) -> Result<Vec<ExhaustionReport>> {
    instances
        .iter()
        .map(|&(v, k, lambda)| {
            let r = search_small_pdf(v, k, lambda, budget)?;
            let (verdict, witness) = match &r.outcome {
                SearchOutcome::Found(f) => (
                    Verdict::Exists,
                    Some(f.blocks().unwrap().iter().map(|b| b.elements().to_vec()).collect()),
                ),
                SearchOutcome::Exhausted => (Verdict::Nonexistent, None),
                SearchOutcome::BudgetExceeded => (Verdict::Inconclusive, None),
            };
            Ok(ExhaustionReport {
                instance: format!("({v},{k},{lambda})-PDF"),
                v,
                k,
                lambda,
                verdict,
                nodes: r.nodes,
                canonicalization: CANONICALIZATION.to_vec(),
                witness,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify;

    fn quick() -> SearchBudget {
        SearchBudget::new(50_000_000, Duration::from_secs(30)).unwrap()
    }

    fn blocks(f: &Family) -> Vec<Vec<i64>> {
        f.blocks().unwrap().iter().map(|b| b.elements().to_vec()).collect()
    }

    #[test]
    fn single_block_cover() {
        let p = pdf_problem(13, 4, 1).unwrap();
        let r = complete_cover(&p, &quick()).unwrap();
        let found = r.outcome.found().unwrap();
        let e = found[0].elements().to_vec();
        assert!(e == vec![0, 2, 5, 6] || e == vec![0, 1, 4, 6], "{e:?}");
    }

    #[test]
    fn nonexistence() {
        for v in [25, 37] {
            let r = search_small_pdf(v, 4, 1, &quick()).unwrap();
            assert_eq!(r.outcome, SearchOutcome::Exhausted, "v={v}");
        }
        let reports = nonexistence_sweep(&[(13, 4, 1)], &quick()).unwrap();
        assert_eq!(reports[0].verdict, Verdict::Exists);
    }

    #[test]
    fn searched_pdfs_verify_and_repeat() {
        for (v, k) in [(49, 4), (61, 4), (7, 3), (31, 3)] {
            let a = search_small_pdf(v, k, 1, &quick()).unwrap();
            let b = search_small_pdf(v, k, 1, &quick()).unwrap();
            assert_eq!((&a.outcome, a.nodes), (&b.outcome, b.nodes));
            let f = a.outcome.found().unwrap();
            assert!(verify::verify_family(f).unwrap().pass);
            let embedded = if k == 3 { crate::constructions::pdf_3_1(v) } else { crate::constructions::pdf_4_1(v) };
            assert_eq!(blocks(f), blocks(&embedded.unwrap()), "embedded ({v},{k},1)-PDF drifted from the search");
        }
        for (v, lambda) in [(37, 1), (6, 12)] {
            let r = search_small_cdf(v, 4, lambda, &quick()).unwrap();
            let embedded = crate::constructions::cdf_4_lambda(v, lambda.into()).unwrap();
            assert_eq!(blocks(r.outcome.found().unwrap()), blocks(&embedded));
        }
    }

    #[test]
    fn parallel_agrees_on_verdicts() {
        for (v, want_found) in [(25, false), (37, false), (49, true)] {
            let r = search_small_pdf(v, 4, 1, &quick().parallel()).unwrap();
            assert_eq!(r.outcome.found().is_some(), want_found, "v={v}");
            if let Some(f) = r.outcome.found() {
                assert!(verify::verify_family(f).unwrap().pass);
                let seq = search_small_pdf(v, 4, 1, &quick()).unwrap();
                assert_eq!(blocks(f), blocks(seq.outcome.found().unwrap()));
            }
        }
    }

    #[test]
    fn budget_cut_is_not_exhaustion() {
        let tiny = SearchBudget::new(1, Duration::from_secs(5)).unwrap();
        let r = search_small_pdf(37, 4, 1, &tiny).unwrap();
        assert_eq!(r.outcome, SearchOutcome::BudgetExceeded);
        let reports = nonexistence_sweep(&[(37, 4, 1)], &tiny).unwrap();
        assert_eq!(reports[0].verdict, Verdict::Inconclusive);
    }

    #[test]
    fn rejects_bad_problems() {
        let mut m = DiffMultiset::new();
        m.add(1, 1);
        assert!(CoverProblem::new(m, 1, 4, 6, vec![]).is_err());
        assert!(pdf_problem(15, 4, 1).is_err());
    }

    #[test]
    fn cyclic_search() {
        for (v, lambda) in [(13, 1), (37, 1), (6, 12), (7, 2)] {
            let r = search_small_cdf(v, 4, lambda, &quick()).unwrap();
            let f = r.outcome.found().unwrap_or_else(|| panic!("({v},4,{lambda}) not found"));
            assert!(verify::verify_family(f).unwrap().pass);
        }
        let r = search_small_cdf(25, 4, 1, &quick()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::Exhausted);
    }

    #[test]
    fn asp_search() {
        let r = search_asp3(5, &quick()).unwrap();
        let f = r.outcome.found().unwrap();
        assert!(verify::verify_family(f).unwrap().pass);
        assert_eq!(search_asp3(9, &quick()).unwrap().outcome, SearchOutcome::Exhausted);
        assert!(search_asp(2, 4, &quick()).is_err());
    }
}
