//! Monomial operators: qubit permutations combined with the six single-qubit
//! Cliffords that permute the Pauli axes (the wreath product `S_3 wr S_n`).
//!
//! Permutations use destination semantics: `sigma[i] = j` means qubit `i` is
//! moved to position `j`.  Applying `(sigma; rho_1..rho_n)` to a GF(4) matrix
//! first maps every entry of column `j` through `rho_j`, then moves the result
//! to column `sigma[j]`.

use crate::gf4::{BinMat, Gf4, Gf4Mat};
use crate::{Error, Result};

/// The six single-qubit Cliffords modulo Paulis, i.e. the permutations of the
/// axes {X, Z, Y}, named by a representative circuit.  The declaration order
/// is the fixed total order used for tie-breaking and serialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum LocalClifford {
    I,
    H,
    S,
    Hs,
    Sh,
    Hsh,
}

use LocalClifford::*;

/// All six locals in the canonical order.
pub const LOCALS: [LocalClifford; 6] = [I, H, S, Hs, Sh, Hsh];

/// Per-local data, indexed by `LocalClifford as usize`:
/// action on GF(4) codes 0..=3, S_3n block pattern (residues mod 3),
/// and 2x2 symplectic matrix rows [[a, b], [c, d]].
const ACTION: [[u8; 4]; 6] = [
    [0, 1, 2, 3], // I
    [0, 2, 1, 3], // H:   conj(w^2 * e)  swaps X,Z fixes Y
    [0, 3, 2, 1], // S:   conj(w * e)    swaps X,Y fixes Z
    [0, 3, 1, 2], // HS:  w^2 * e        X->Y->Z->X
    [0, 2, 3, 1], // SH:  w * e          X->Z->Y->X
    [0, 1, 3, 2], // HSH: conj(e)        swaps Z,Y fixes X
];
const PATTERN: [[u8; 3]; 6] = [
    [1, 2, 0], // I
    [2, 1, 0], // H
    [0, 2, 1], // S
    [0, 1, 2], // HS
    [2, 0, 1], // SH
    [1, 0, 2], // HSH
];
const SYMP2: [[[u8; 2]; 2]; 6] = [
    [[1, 0], [0, 1]], // I
    [[0, 1], [1, 0]], // H
    [[1, 0], [1, 1]], // S
    [[1, 1], [1, 0]], // HS
    [[0, 1], [1, 1]], // SH
    [[1, 1], [0, 1]], // HSH
];
const NAMES: [&str; 6] = ["I", "H", "S", "HS", "SH", "HSH"];

/// Composition table: `COMPOSE[a][b] = a after b`, precomputed from `ACTION`.
const COMPOSE: [[u8; 6]; 6] = build_compose();
/// Inverse table.
const INVERSE: [u8; 6] = build_inverse();

const fn find_by_action(act: [u8; 4]) -> u8 {
    let mut i = 0;
    while i < 6 {
        if ACTION[i][0] == act[0]
            && ACTION[i][1] == act[1]
            && ACTION[i][2] == act[2]
            && ACTION[i][3] == act[3]
        {
            return i as u8;
        }
        i += 1;
    }
    panic!("action table is not closed under composition");
}

const fn build_compose() -> [[u8; 6]; 6] {
    let mut t = [[0u8; 6]; 6];
    let mut a = 0;
    while a < 6 {
        let mut b = 0;
        while b < 6 {
            let act = [
                ACTION[a][ACTION[b][0] as usize],
                ACTION[a][ACTION[b][1] as usize],
                ACTION[a][ACTION[b][2] as usize],
                ACTION[a][ACTION[b][3] as usize],
            ];
            t[a][b] = find_by_action(act);
            b += 1;
        }
        a += 1;
    }
    t
}

const fn build_inverse() -> [u8; 6] {
    let mut t = [0u8; 6];
    let mut a = 0;
    while a < 6 {
        let act = ACTION[a];
        let mut inv = [0u8; 4];
        let mut v = 0;
        while v < 4 {
            inv[act[v] as usize] = v as u8;
            v += 1;
        }
        t[a] = find_by_action(inv);
        a += 1;
    }
    t
}

impl LocalClifford {
    /// All-locals index (0..=5) in the canonical order.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> LocalClifford {
        LOCALS[i]
    }

    /// Action on a GF(4) element.
    pub fn act(self, e: Gf4) -> Gf4 {
        Gf4::from_code(ACTION[self as usize][e.code() as usize])
    }

    /// `self` after `other`.
    pub fn compose(self, other: LocalClifford) -> LocalClifford {
        LOCALS[COMPOSE[self as usize][other as usize] as usize]
    }

    pub fn inverse(self) -> LocalClifford {
        LOCALS[INVERSE[self as usize] as usize]
    }

    /// The 2x2 symplectic matrix `F` with `phi(act(e)) = phi(e) . F^T`.
    pub fn symplectic2(self) -> [[u8; 2]; 2] {
        SYMP2[self as usize]
    }

    /// The residue pattern of this local's block in `S_3n` one-line notation.
    pub fn pattern(self) -> [u8; 3] {
        PATTERN[self as usize]
    }

    pub fn name(self) -> &'static str {
        NAMES[self as usize]
    }

    pub fn from_name(s: &str) -> Option<LocalClifford> {
        NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| LOCALS[i])
    }

    fn from_pattern(p: [u8; 3]) -> Option<LocalClifford> {
        PATTERN
            .iter()
            .position(|&q| q == p)
            .map(|i| LOCALS[i])
    }
}

impl std::fmt::Display for LocalClifford {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A monomial operator `(sigma; rho_1..rho_n)`.
///
/// `sigma` is stored 0-based with destination semantics; the `Ord` instance
/// (permutation first, then locals in their canonical order) is the
/// "serialization-minimal" tie-break order used throughout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialOp {
    sigma: Vec<u8>,
    rho: Vec<LocalClifford>,
}

impl MonomialOp {
    /// Build from a 0-based destination permutation and locals.
    pub fn new(sigma: Vec<u8>, rho: Vec<LocalClifford>) -> Result<MonomialOp> {
        if sigma.len() != rho.len() {
            return Err(Error::InvalidMonomial(
                "permutation and locals have different lengths".into(),
            ));
        }
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &d in &sigma {
            let d = d as usize;
            if d >= n || seen[d] {
                return Err(Error::InvalidMonomial("not a permutation".into()));
            }
            seen[d] = true;
        }
        Ok(MonomialOp { sigma, rho })
    }

    pub fn identity(n: usize) -> MonomialOp {
        MonomialOp {
            sigma: (0..n as u8).collect(),
            rho: vec![I; n],
        }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// 0-based destination permutation.
    pub fn sigma(&self) -> &[u8] {
        &self.sigma
    }

    pub fn rho(&self) -> &[LocalClifford] {
        &self.rho
    }

    /// Apply to a GF(4) matrix with `n` columns.
    pub fn apply(&self, m: &Gf4Mat) -> Result<Gf4Mat> {
        let n = self.n();
        if m.ncols() != n {
            return Err(Error::Shape(format!(
                "operator on {n} qubits applied to {}-column matrix",
                m.ncols()
            )));
        }
        let mut out = Gf4Mat::zero(m.nrows(), n);
        for i in 0..m.nrows() {
            for j in 0..n {
                out.set(i, self.sigma[j] as usize, self.rho[j].act(m.get(i, j)));
            }
        }
        Ok(out)
    }

    /// `self` after `other` (so `apply(compose(a, b), m) = apply(a, apply(b, m))`).
    pub fn compose(&self, other: &MonomialOp) -> Result<MonomialOp> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::Shape("composing operators of different sizes".into()));
        }
        let mut sigma = vec![0u8; n];
        let mut rho = vec![I; n];
        for j in 0..n {
            let mid = other.sigma[j] as usize;
            sigma[j] = self.sigma[mid];
            rho[j] = self.rho[mid].compose(other.rho[j]);
        }
        Ok(MonomialOp { sigma, rho })
    }

    pub fn inverse(&self) -> MonomialOp {
        let n = self.n();
        let mut sigma = vec![0u8; n];
        let mut rho = vec![I; n];
        for j in 0..n {
            let d = self.sigma[j] as usize;
            sigma[d] = j as u8;
            rho[d] = self.rho[j].inverse();
        }
        MonomialOp { sigma, rho }
    }

    /// Number of transpositions needed to realise the permutation:
    /// `n` minus the number of cycles.
    pub fn swap_count(&self) -> usize {
        self.n() - self.cycles().len()
    }

    /// Number of non-identity single-qubit Cliffords.
    pub fn clifford_count(&self) -> usize {
        self.rho.iter().filter(|&&r| r != I).count()
    }

    /// Cycles of the permutation, each starting from its smallest element,
    /// listed in increasing order of that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cyc.push(j);
                j = self.sigma[j] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// The `2n x 2n` binary symplectic lift `F` with
    /// `phi(apply(self, v)) = phi(v) . F^T`: a block-diagonal local part
    /// followed by the permutation part.
    pub fn lift_symplectic(&self) -> BinMat {
        let n = self.n();
        let mut f = BinMat::zero(2 * n, 2 * n);
        // Row i of the permutation part selects row sigma^{-1}(i) of the
        // local part, whose only nonzero entries are at columns j, n + j.
        let mut inv = vec![0usize; n];
        for j in 0..n {
            inv[self.sigma[j] as usize] = j;
        }
        for i in 0..n {
            let j = inv[i];
            let [[a, b], [c, d]] = self.rho[j].symplectic2();
            f.set(i, j, a);
            f.set(i, n + j, b);
            f.set(n + i, j, c);
            f.set(n + i, n + j, d);
        }
        f
    }

    /// Convert to one-line `S_3n` notation (1-based images).
    pub fn to_s3n(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(3 * self.n());
        for i in 0..self.n() {
            let base = 3 * self.sigma[i] as usize;
            for t in self.rho[i].pattern() {
                out.push(base + if t == 0 { 3 } else { t as usize });
            }
        }
        out
    }

    /// Parse one-line `S_3n` notation (1-based images, length `3n`).
    pub fn from_s3n(perm: &[usize]) -> Result<MonomialOp> {
        let len = perm.len();
        if len == 0 || len % 3 != 0 {
            return Err(Error::InvalidMonomial(format!(
                "S_3n one-line length {len} is not a positive multiple of 3"
            )));
        }
        let mut seen = vec![false; len];
        for &v in perm {
            if v == 0 || v > len || seen[v - 1] {
                return Err(Error::InvalidMonomial(
                    "not a permutation of 1..=3n".into(),
                ));
            }
            seen[v - 1] = true;
        }
        let n = len / 3;
        let mut sigma = Vec::with_capacity(n);
        let mut rho = Vec::with_capacity(n);
        for i in 0..n {
            let block = &perm[3 * i..3 * i + 3];
            let dest = (block[0] - 1) / 3;
            if block.iter().any(|&v| (v - 1) / 3 != dest) {
                return Err(Error::InvalidMonomial(format!(
                    "block {} maps across destination blocks",
                    i + 1
                )));
            }
            let pat = [
                (block[0] % 3) as u8,
                (block[1] % 3) as u8,
                (block[2] % 3) as u8,
            ];
            let local = LocalClifford::from_pattern(pat).ok_or_else(|| {
                Error::InvalidMonomial(format!("block {} has an invalid residue pattern", i + 1))
            })?;
            sigma.push(dest as u8);
            rho.push(local);
        }
        MonomialOp::new(sigma, rho)
    }

    /// Parse disjoint-cycle notation like `(1,5,3)(7,8,9)` over `1..=3n`
    /// (with `n` given explicitly so fixed points need not appear).
    pub fn from_s3n_cycles(text: &str, n: usize) -> Result<MonomialOp> {
        let len = 3 * n;
        let mut oneline: Vec<usize> = (1..=len).collect();
        let body = text.trim();
        let mut rest = body;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| Error::InvalidMonomial(
                format!("expected `(` in cycle notation `{body}`"),
            ))?;
            let close = rest[open..].find(')').ok_or_else(|| Error::InvalidMonomial(
                format!("unbalanced parentheses in `{body}`"),
            ))? + open;
            let cycle: Vec<usize> = rest[open + 1..close]
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::InvalidMonomial(format!("bad cycle entry: {e}")))?;
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from == 0 || from > len || to == 0 || to > len {
                    return Err(Error::InvalidMonomial(format!(
                        "cycle entry out of range 1..={len}"
                    )));
                }
                oneline[from - 1] = to;
            }
            rest = rest[close + 1..].trim_start();
        }
        MonomialOp::from_s3n(&oneline)
    }

    /// Canonical text form: `perm=[2,1,3,4] locals=[I,I,HSH,HSH]` (1-based).
    pub fn to_text(&self) -> String {
        let perm: Vec<String> = self.sigma.iter().map(|&d| (d + 1).to_string()).collect();
        let locals: Vec<&str> = self.rho.iter().map(|r| r.name()).collect();
        format!("perm=[{}] locals=[{}]", perm.join(","), locals.join(","))
    }

    /// Parse the `to_text` form.
    pub fn from_text(s: &str) -> Result<MonomialOp> {
        let err = |msg: &str| Error::InvalidMonomial(format!("{msg} in `{s}`"));
        let s = s.trim();
        let perm_part = s
            .strip_prefix("perm=[")
            .ok_or_else(|| err("missing `perm=[`"))?;
        let (perm_body, rest) = perm_part
            .split_once(']')
            .ok_or_else(|| err("unterminated perm list"))?;
        let locals_part = rest
            .trim_start()
            .strip_prefix("locals=[")
            .ok_or_else(|| err("missing `locals=[`"))?;
        let locals_body = locals_part
            .strip_suffix(']')
            .ok_or_else(|| err("unterminated locals list"))?;
        let sigma: Vec<u8> = perm_body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| err("bad permutation entry"))
            })
            .collect::<Result<_>>()?;
        let rho: Vec<LocalClifford> = locals_body
            .split(',')
            .map(|t| LocalClifford::from_name(t.trim()).ok_or_else(|| err("bad local name")))
            .collect::<Result<_>>()?;
        MonomialOp::new(sigma, rho)
    }
}

impl std::fmt::Display for MonomialOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}
