//! Automorphism group search and code-orbit enumeration.
//!
//! The automorphism group `Gamma(C)` of a stabiliser code is the set of
//! monomial operators that preserve the additive span of its generator
//! matrix; it is found by a backtracking search over per-qubit
//! (destination, local Clifford) assignments with projected-span pruning.

use crate::codes::StabCode;
use crate::gf4::BinMat;
use crate::logical::transform_code;
use crate::monomial::{LocalClifford, MonomialOp, LOCALS};
use crate::{Error, Result};
use std::collections::HashMap;

/// Node / size limits for the searches in this module.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    /// Maximum backtracking nodes for the automorphism search.
    pub max_nodes: u64,
    /// Maximum number of distinct codes for orbit enumeration.
    pub max_orbit: usize,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            max_nodes: 1_000_000_000,
            max_orbit: 10_000_000,
        }
    }
}

/// Order of the full monomial group on `n` qubits: `6^n * n!`.
pub fn hamming_order(n: usize) -> u64 {
    let mut o = 1u64;
    for i in 1..=n as u64 {
        o *= 6 * i;
    }
    o
}

/// A small generating set of the full monomial group `S_3 wr S_n`:
/// an adjacent transposition and an n-cycle for the permutation part, plus
/// one scaling (SH) and one conjugation (HSH) local per qubit.
pub fn hamming_generators(n: usize) -> Vec<MonomialOp> {
    let mut gens = Vec::with_capacity(2 + 2 * n);
    let mut swap01: Vec<u8> = (0..n as u8).collect();
    if n > 1 {
        swap01.swap(0, 1);
    }
    gens.push(MonomialOp::new(swap01, vec![LocalClifford::I; n]).unwrap());
    let cycle: Vec<u8> = (0..n as u8).map(|i| (i + 1) % n as u8).collect();
    gens.push(MonomialOp::new(cycle, vec![LocalClifford::I; n]).unwrap());
    for q in 0..n {
        for local in [LocalClifford::Sh, LocalClifford::Hsh] {
            let mut rho = vec![LocalClifford::I; n];
            rho[q] = local;
            gens.push(MonomialOp::new((0..n as u8).collect(), rho).unwrap());
        }
    }
    gens
}

/// Whether `op` maps the stabiliser span of `code` to itself.
pub fn is_automorphism(op: &MonomialOp, code: &StabCode) -> Result<bool> {
    if op.n() != code.n() {
        return Err(Error::Shape(format!(
            "operator on {} qubits vs code on {} qubits",
            op.n(),
            code.n()
        )));
    }
    let image = op.apply(code.generators())?;
    Ok(image.phi().row_basis() == code.generators().phi().row_basis())
}

/// The automorphism group of a code, fully materialised.
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<MonomialOp>,
}

impl AutGroup {
    /// Elements in increasing serialization order; the first is the identity.
    pub fn elements(&self) -> &[MonomialOp] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// A reduced generating set, found greedily over the sorted elements.
    pub fn generators(&self) -> Vec<MonomialOp> {
        let n = match self.elements.first() {
            Some(e) => e.n(),
            None => return Vec::new(),
        };
        let mut gens: Vec<MonomialOp> = Vec::new();
        let mut closure: HashMap<MonomialOp, ()> = HashMap::new();
        closure.insert(MonomialOp::identity(n), ());
        for e in &self.elements {
            if closure.contains_key(e) {
                continue;
            }
            gens.push(e.clone());
            // Re-close under the enlarged generating set.
            let mut frontier: Vec<MonomialOp> = closure.keys().cloned().collect();
            while let Some(cur) = frontier.pop() {
                for g in &gens {
                    let next = g.compose(&cur).unwrap();
                    if !closure.contains_key(&next) {
                        closure.insert(next.clone(), ());
                        frontier.push(next);
                    }
                }
            }
            if closure.len() == self.elements.len() {
                break;
            }
        }
        gens
    }
}

/// Backtracking search for `Gamma(C)`.
///
/// Qubits are assigned a (destination, local) pair one at a time, most
/// constrained first (columns with more distinct generator entries first).
/// A partial assignment survives only if, for every generator row, the
/// transformed entries restricted to the assigned destination columns lie in
/// the correspondingly projected stabiliser span.
pub fn automorphism_group(code: &StabCode, budget: &SearchBudget) -> Result<AutGroup> {
    let mut elements = monomial_equivalences(code, code, budget, false)?;
    elements.sort_unstable();
    Ok(AutGroup { elements })
}

/// All monomial operators mapping the stabiliser span of `src` onto the
/// stabiliser span of `dst` (the automorphism search is the `src == dst`
/// case).  With `first_only` the search stops at the first hit.
pub fn monomial_equivalences(
    src: &StabCode,
    dst: &StabCode,
    budget: &SearchBudget,
    first_only: bool,
) -> Result<Vec<MonomialOp>> {
    if src.n() != dst.n() || src.k() != dst.k() {
        return Err(Error::Shape(
            "equivalence search needs codes of equal n and k".into(),
        ));
    }
    let n = src.n();
    let g = src.generators();
    let rows = g.nrows();
    if rows > 8 {
        return Err(Error::BudgetExceeded(
            "equivalence search supports at most 8 generator rows".into(),
        ));
    }
    let span = dst.generators().phi().row_basis();

    // Assignment order: most distinct entries in the generator column first.
    let mut order: Vec<usize> = (0..n).collect();
    let distinct: Vec<usize> = (0..n)
        .map(|j| {
            let mut seen = [false; 4];
            for i in 0..rows {
                seen[g.get(i, j).code() as usize] = true;
            }
            seen.iter().filter(|&&s| s).count()
        })
        .collect();
    order.sort_by_key(|&j| std::cmp::Reverse(distinct[j]));

    struct Dfs<'a> {
        n: usize,
        rows: usize,
        order: &'a [usize],
        col_entries: Vec<[crate::gf4::Gf4; 8]>, // per source column, per row
        span: &'a BinMat,
        sigma: Vec<u8>,
        rho: Vec<LocalClifford>,
        used: u64,
        // Per generator row, packed partial image over assigned destinations.
        partial: Vec<u64>,
        dest_mask: u64, // assigned destination columns, both x and z parts
        nodes: u64,
        max_nodes: u64,
        first_only: bool,
        found: Vec<MonomialOp>,
    }

    impl Dfs<'_> {
        fn run(&mut self, depth: usize) -> Result<()> {
            if self.first_only && !self.found.is_empty() {
                return Ok(());
            }
            if depth == self.n {
                self.found
                    .push(MonomialOp::new(self.sigma.clone(), self.rho.clone()).unwrap());
                return Ok(());
            }
            let j = self.order[depth];
            for dest in 0..self.n {
                if self.used >> dest & 1 == 1 {
                    continue;
                }
                for &local in &LOCALS {
                    self.nodes += 1;
                    if self.nodes > self.max_nodes {
                        return Err(Error::BudgetExceeded(format!(
                            "automorphism search exceeded {} nodes",
                            self.max_nodes
                        )));
                    }
                    // Tentatively place qubit j at `dest` with `local`.
                    let mut partial = self.partial.clone();
                    for r in 0..self.rows {
                        let e = local.act(self.col_entries[j][r]);
                        partial[r] |= ((e.x_bit() as u64) << dest)
                            | ((e.z_bit() as u64) << (self.n + dest));
                    }
                    let mask =
                        self.dest_mask | (1u64 << dest) | (1u64 << (self.n + dest));
                    if !(0..self.rows).all(|r| span_contains_masked(self.span, partial[r], mask))
                    {
                        continue;
                    }
                    let saved_partial = std::mem::replace(&mut self.partial, partial);
                    let saved_mask = self.dest_mask;
                    self.dest_mask = mask;
                    self.used |= 1 << dest;
                    self.sigma[j] = dest as u8;
                    self.rho[j] = local;
                    self.run(depth + 1)?;
                    self.used &= !(1 << dest);
                    self.dest_mask = saved_mask;
                    self.partial = saved_partial;
                }
            }
            Ok(())
        }
    }

    let mut col_entries = vec![[crate::gf4::Gf4::ZERO; 8]; n];
    for j in 0..n {
        for i in 0..rows {
            col_entries[j][i] = g.get(i, j);
        }
    }

    let mut dfs = Dfs {
        n,
        rows,
        order: &order,
        col_entries,
        span: &span,
        sigma: vec![0; n],
        rho: vec![LocalClifford::I; n],
        used: 0,
        partial: vec![0; rows],
        dest_mask: 0,
        nodes: 0,
        max_nodes: budget.max_nodes,
        first_only,
        found: Vec::new(),
    };
    dfs.run(0)?;

    // The projected-span test at full depth accepts exactly the operators
    // mapping span(src) into span(dst): every generator image lies in the
    // destination span and the spans have equal dimension, so they coincide.
    Ok(dfs.found)
}

/// Whether the restriction of `v` to the columns in `mask` extends to an
/// element of the row span of `basis` (which must be in RREF).
fn span_contains_masked(basis: &BinMat, v: u64, mask: u64) -> bool {
    // Project the basis rows onto the masked columns and reduce v against
    // the projection, Gaussian style.
    let mut rows: Vec<u64> = (0..basis.nrows()).map(|i| basis.row(i) & mask).collect();
    let mut v = v & mask;
    let mut r0 = 0;
    let mut bit = 0;
    while bit < 64 && (mask >> bit) != 0 {
        if mask >> bit & 1 == 0 {
            bit += 1;
            continue;
        }
        let b = 1u64 << bit;
        if let Some(p) = (r0..rows.len()).find(|&r| rows[r] & b != 0) {
            rows.swap(r0, p);
            let pivot = rows[r0];
            for row in rows.iter_mut().skip(r0 + 1) {
                if *row & b != 0 {
                    *row ^= pivot;
                }
            }
            if v & b != 0 {
                v ^= pivot;
            }
            r0 += 1;
        }
        bit += 1;
    }
    v == 0
}

/// Reference implementation of the automorphism search: filter every
/// element of `S_3 wr S_n`.  Only sensible for n <= 4.
pub fn automorphism_group_brute(code: &StabCode) -> Result<AutGroup> {
    let mut elements = Vec::new();
    for op in monomial_ops_iter(code.n()) {
        if is_automorphism(&op, code)? {
            elements.push(op);
        }
    }
    elements.sort_unstable();
    Ok(AutGroup { elements })
}

/// Iterate every monomial operator on `n` qubits.
pub fn monomial_ops_iter(n: usize) -> impl Iterator<Item = MonomialOp> {
    use itertools::Itertools;
    (0..n as u8)
        .permutations(n)
        .cartesian_product(0..6u64.pow(n as u32))
        .map(move |(sigma, li)| {
            let mut rho = Vec::with_capacity(n);
            let mut rest = li;
            for _ in 0..n {
                rho.push(LocalClifford::from_index((rest % 6) as usize));
                rest /= 6;
            }
            MonomialOp::new(sigma, rho).unwrap()
        })
}

/// The orbit of a code under the full monomial group, with one
/// transversal witness per distinct stabiliser span.
pub struct Orbit {
    /// `(canonical key, witness)` pairs; entry 0 is the code itself with the
    /// identity witness.  Witnesses are minimal within their BFS layer.
    pub entries: Vec<(Vec<u8>, MonomialOp)>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// Breadth-first enumeration of the code orbit under the monomial group.
pub fn code_orbit(code: &StabCode, budget: &SearchBudget) -> Result<Orbit> {
    let gens = hamming_generators(code.n());
    let mut seen: HashMap<Vec<u8>, MonomialOp> = HashMap::new();
    let key0 = code.canonical_key();
    let id = MonomialOp::identity(code.n());
    seen.insert(key0.clone(), id.clone());
    let mut entries = vec![(key0, id.clone())];
    let mut layer: Vec<(StabCode, MonomialOp)> = vec![(code.clone(), id)];

    while !layer.is_empty() {
        // Collect all candidates discovered from this layer, then keep the
        // minimal witness per new key so the result is deterministic.
        let mut discovered: HashMap<Vec<u8>, (StabCode, MonomialOp)> = HashMap::new();
        for (c, tau) in &layer {
            for g in &gens {
                let next = transform_code(c, g)?;
                let key = next.canonical_key();
                if seen.contains_key(&key) {
                    continue;
                }
                let witness = g.compose(tau)?;
                match discovered.get_mut(&key) {
                    Some(best) if best.1 <= witness => {}
                    Some(best) => *best = (next, witness),
                    None => {
                        discovered.insert(key, (next, witness));
                    }
                }
            }
        }
        let mut batch: Vec<(Vec<u8>, (StabCode, MonomialOp))> = discovered.into_iter().collect();
        batch.sort_by(|a, b| a.0.cmp(&b.0));
        layer = Vec::with_capacity(batch.len());
        for (key, (c, w)) in batch {
            if entries.len() >= budget.max_orbit {
                return Err(Error::BudgetExceeded(format!(
                    "code orbit exceeded {} entries",
                    budget.max_orbit
                )));
            }
            seen.insert(key.clone(), w.clone());
            entries.push((key, w.clone()));
            layer.push((c, w));
        }
    }
    Ok(Orbit { entries })
}

/// Check the coset identity `|orbit| * |Gamma| = 6^n n!`.
/// Returns `(|Gamma|, |orbit|, 6^n n!, holds)`.
pub fn check_coset_identity(
    code: &StabCode,
    budget: &SearchBudget,
) -> Result<(u64, u64, u64, bool)> {
    let gamma = automorphism_group(code, budget)?.order();
    let orbit = code_orbit(code, budget)?.size() as u64;
    let ham = hamming_order(code.n());
    Ok((gamma, orbit, ham, gamma * orbit == ham))
}
