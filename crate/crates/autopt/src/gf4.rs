//! GF(4) scalars and matrices in the bit-pair encoding, plus the GF(2)
//! bit-matrix kernel used everywhere else.
//!
//! An element `x + omega*z` (x, z in GF(2)) is stored as the bit pair
//! `(x, z)`: `0 -> (0,0)`, `1 -> (1,0)`, `omega -> (0,1)`, `omega^2 -> (1,1)`.
//! With this encoding the Pauli-to-GF(4) map `phi` is a pure bit
//! reinterpretation: a length-`n` GF(4) vector becomes the length-`2n` binary
//! vector `(x_1..x_n | z_1..z_n)`.

use crate::{Error, Result};

/// A GF(4) element; the payload is `x | z << 1` in the bit-pair encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gf4(u8);

/// Multiplication table indexed by the bit-pair encodings.
/// Row/col order: 0, 1, omega, omega^2.
const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1], // omega * omega = omega^2, omega * omega^2 = 1
    [0, 3, 1, 2],
];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);

    /// Build from the bit pair (x, z).
    pub fn from_bits(x: u8, z: u8) -> Gf4 {
        Gf4((x & 1) | ((z & 1) << 1))
    }

    /// The X bit of the pair.
    pub fn x_bit(self) -> u8 {
        self.0 & 1
    }

    /// The Z bit of the pair.
    pub fn z_bit(self) -> u8 {
        (self.0 >> 1) & 1
    }

    /// Raw 2-bit encoding (0..=3).
    pub fn code(self) -> u8 {
        self.0
    }

    /// Build from the raw 2-bit encoding.
    pub fn from_code(c: u8) -> Gf4 {
        debug_assert!(c < 4);
        Gf4(c & 3)
    }

    /// Addition = characteristic-2 XOR of the bit pairs.
    pub fn add(self, other: Gf4) -> Gf4 {
        Gf4(self.0 ^ other.0)
    }

    /// Field multiplication.
    pub fn mul(self, other: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][other.0 as usize])
    }

    /// Conjugation `a -> a^2`: swaps omega and omega^2, fixes 0 and 1.
    /// In bit pairs: `(x, z) -> (x ^ z, z)`.
    pub fn conj(self) -> Gf4 {
        Gf4(self.0 ^ ((self.0 >> 1) & 1))
    }

    /// Trace `Tr(a) = a + a^2`: 0 on {0, 1}, 1 on {omega, omega^2};
    /// equals the Z bit of the pair.
    pub fn trace(self) -> u8 {
        self.z_bit()
    }

    /// One-character token used by the code file format.
    pub fn token(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    /// Parse a file-format token (`0`, `1`, `w`, `W`).
    pub fn from_token(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA2),
            _ => None,
        }
    }
}

impl std::fmt::Display for Gf4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Binary matrix with each row packed into one `u64` (so `cols <= 64`,
/// far above the `2n <= 14` this crate ever needs).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinMat {
    rows: Vec<u64>,
    cols: usize,
}

impl BinMat {
    /// All-zero matrix.
    pub fn zero(rows: usize, cols: usize) -> BinMat {
        assert!(cols <= 64);
        BinMat {
            rows: vec![0; rows],
            cols,
        }
    }

    /// Identity matrix.
    pub fn identity(m: usize) -> BinMat {
        let mut a = BinMat::zero(m, m);
        for i in 0..m {
            a.rows[i] = 1 << i;
        }
        a
    }

    /// The symplectic form `Omega_{2m} = [[0, I], [I, 0]]` (block swap).
    pub fn omega(two_m: usize) -> BinMat {
        assert!(two_m % 2 == 0);
        let m = two_m / 2;
        let mut a = BinMat::zero(two_m, two_m);
        for i in 0..m {
            a.rows[i] = 1 << (m + i);
            a.rows[m + i] = 1 << i;
        }
        a
    }

    /// Build from explicit 0/1 entries (row-major).
    pub fn from_entries(entries: &[Vec<u8>]) -> BinMat {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut a = BinMat::zero(rows, cols);
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, &e) in row.iter().enumerate() {
                a.set(i, j, e & 1);
            }
        }
        a
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        ((self.rows[i] >> j) & 1) as u8
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        if v & 1 == 1 {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Packed row bits.
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn set_row(&mut self, i: usize, bits: u64) {
        self.rows[i] = bits & mask(self.cols);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BinMat) -> Result<BinMat> {
        if self.cols != other.nrows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.cols,
                other.nrows(),
                other.cols
            )));
        }
        let mut out = BinMat::zero(self.nrows(), other.cols);
        for i in 0..self.nrows() {
            let mut acc = 0u64;
            let mut r = self.rows[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                acc ^= other.rows[j];
                r &= r - 1;
            }
            out.rows[i] = acc;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BinMat {
        let mut out = BinMat::zero(self.cols, self.nrows());
        for i in 0..self.nrows() {
            let mut r = self.rows[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                out.rows[j] |= 1 << i;
                r &= r - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &BinMat) -> Result<BinMat> {
        if self.nrows() != other.nrows() || self.cols != other.cols {
            return Err(Error::Shape("matrix addition shape mismatch".into()));
        }
        let mut out = self.clone();
        for i in 0..out.nrows() {
            out.rows[i] ^= other.rows[i];
        }
        Ok(out)
    }

    /// In-place reduced row echelon form with deterministic pivoting
    /// (leftmost pivot column, topmost pivot row).  Returns the rank;
    /// zero rows end up at the bottom.
    pub fn rref(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = (rank..self.rows.len()).find(|&r| self.rows[r] & bit != 0) else {
                continue;
            };
            self.rows.swap(rank, p);
            let pivot = self.rows[rank];
            for (r, row) in self.rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    /// RREF of a copy, with zero rows dropped.
    pub fn row_basis(&self) -> BinMat {
        let mut a = self.clone();
        let rank = a.rref();
        a.rows.truncate(rank);
        a
    }

    /// Whether the packed vector `v` lies in the row span.
    /// `self` must already be in RREF.
    pub fn span_contains(&self, v: u64) -> bool {
        let mut v = v;
        for &row in &self.rows {
            if row == 0 {
                break;
            }
            let lead = row.trailing_zeros();
            if v >> lead & 1 == 1 {
                v ^= row;
            }
        }
        v == 0
    }

    /// Inverse over GF(2); `None` if singular.
    pub fn inverse(&self) -> Option<BinMat> {
        if self.nrows() != self.cols {
            return None;
        }
        let m = self.cols;
        let mut a = self.rows.clone();
        let mut inv: Vec<u64> = (0..m).map(|i| 1u64 << i).collect();
        for col in 0..m {
            let bit = 1u64 << col;
            let p = (col..m).find(|&r| a[r] & bit != 0)?;
            a.swap(col, p);
            inv.swap(col, p);
            let (pa, pi) = (a[col], inv[col]);
            for r in 0..m {
                if r != col && a[r] & bit != 0 {
                    a[r] ^= pa;
                    inv[r] ^= pi;
                }
            }
        }
        Some(BinMat { rows: inv, cols: m })
    }

    /// Compact byte encoding of shape and contents, usable as a hash/ord key.
    pub fn key_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + 8 * self.rows.len());
        out.extend_from_slice(&(self.rows.len() as u16).to_be_bytes());
        out.extend_from_slice(&(self.cols as u16).to_be_bytes());
        for &r in &self.rows {
            out.extend_from_slice(&r.to_be_bytes());
        }
        out
    }

    /// Rows as 0/1 token strings ("0 1 1 0"), the JSON wire format.
    pub fn token_rows(&self) -> Vec<String> {
        (0..self.nrows())
            .map(|i| {
                (0..self.cols)
                    .map(|j| if self.get(i, j) == 1 { "1" } else { "0" })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }

    /// Parse the `token_rows` format back into a matrix.
    pub fn from_token_rows(rows: &[String], cols: usize) -> Result<BinMat> {
        let mut a = BinMat::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let toks: Vec<&str> = row.split_whitespace().collect();
            if toks.len() != cols {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected {} binary tokens, found {}", cols, toks.len()),
                });
            }
            for (j, t) in toks.iter().enumerate() {
                match *t {
                    "0" => {}
                    "1" => a.set(i, j, 1),
                    other => {
                        return Err(Error::Parse {
                            line: i + 1,
                            msg: format!("expected 0 or 1, found `{other}`"),
                        })
                    }
                }
            }
        }
        Ok(a)
    }
}

fn mask(bits: usize) -> u64 {
    if bits == 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Symplectic product of two packed `2n`-bit vectors laid out `(x | z)`:
/// `x . z' + z . x'` mod 2.
pub fn symp_product(u: u64, v: u64, n: usize) -> u8 {
    let m = mask(n);
    let (ux, uz) = (u & m, (u >> n) & m);
    let (vx, vz) = (v & m, (v >> n) & m);
    (((ux & vz) ^ (uz & vx)).count_ones() & 1) as u8
}

/// GF(4) matrix stored as per-row X and Z bitmasks (`cols <= 32`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf4Mat {
    x: Vec<u64>,
    z: Vec<u64>,
    cols: usize,
}

impl Gf4Mat {
    pub fn zero(rows: usize, cols: usize) -> Gf4Mat {
        assert!(cols <= 32);
        Gf4Mat {
            x: vec![0; rows],
            z: vec![0; rows],
            cols,
        }
    }

    /// Build from explicit entries (row-major).
    pub fn from_entries(entries: &[Vec<Gf4>]) -> Gf4Mat {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut a = Gf4Mat::zero(rows, cols);
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, &e) in row.iter().enumerate() {
                a.set(i, j, e);
            }
        }
        a
    }

    pub fn nrows(&self) -> usize {
        self.x.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        Gf4::from_bits(((self.x[i] >> j) & 1) as u8, ((self.z[i] >> j) & 1) as u8)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gf4) {
        let bit = 1u64 << j;
        if v.x_bit() == 1 {
            self.x[i] |= bit;
        } else {
            self.x[i] &= !bit;
        }
        if v.z_bit() == 1 {
            self.z[i] |= bit;
        } else {
            self.z[i] &= !bit;
        }
    }

    /// Row `i` as a GF(4) vector.
    pub fn row_vec(&self, i: usize) -> Vec<Gf4> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// XOR (GF(4) add) `other`'s row `src` into our row `dst`.
    pub fn add_row_from(&mut self, dst: usize, other: &Gf4Mat, src: usize) {
        self.x[dst] ^= other.x[src];
        self.z[dst] ^= other.z[src];
    }

    /// Stack two matrices with equal column counts.
    pub fn vstack(top: &Gf4Mat, bottom: &Gf4Mat) -> Result<Gf4Mat> {
        if top.cols != bottom.cols {
            return Err(Error::Shape("vstack column mismatch".into()));
        }
        let mut out = top.clone();
        out.x.extend_from_slice(&bottom.x);
        out.z.extend_from_slice(&bottom.z);
        Ok(out)
    }

    /// Take a contiguous row slice.
    pub fn row_range(&self, lo: usize, hi: usize) -> Gf4Mat {
        Gf4Mat {
            x: self.x[lo..hi].to_vec(),
            z: self.z[lo..hi].to_vec(),
            cols: self.cols,
        }
    }

    /// The binary expansion `phi`: row `i` becomes `(x_1..x_n | z_1..z_n)`.
    pub fn phi(&self) -> BinMat {
        let mut out = BinMat::zero(self.nrows(), 2 * self.cols);
        for i in 0..self.nrows() {
            out.set_row(i, self.x[i] | (self.z[i] << self.cols));
        }
        out
    }

    /// Inverse of `phi` for a `2n`-column binary matrix.
    pub fn phi_inv(b: &BinMat) -> Result<Gf4Mat> {
        if b.ncols() % 2 != 0 {
            return Err(Error::Shape("phi_inv needs an even column count".into()));
        }
        let n = b.ncols() / 2;
        let m = mask(n);
        let mut out = Gf4Mat::zero(b.nrows(), n);
        for i in 0..b.nrows() {
            let r = b.row(i);
            out.x[i] = r & m;
            out.z[i] = (r >> n) & m;
        }
        Ok(out)
    }

    /// Packed `phi` image of one row.
    pub fn phi_row(&self, i: usize) -> u64 {
        self.x[i] | (self.z[i] << self.cols)
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> Gf4Mat {
        let mut out = self.clone();
        for i in 0..out.nrows() {
            out.x[i] ^= out.z[i];
        }
        out
    }

    /// Trace inner product matrix: entry `(i, j) = Tr(u_i . conj(v_j))`
    /// where `u_i` runs over rows of `self` and `v_j` over rows of `other`.
    /// Equals `phi(self) . Omega_2n . phi(other)^T`.
    pub fn trace_product(&self, other: &Gf4Mat) -> Result<BinMat> {
        if self.cols != other.cols {
            return Err(Error::Shape("trace_product column mismatch".into()));
        }
        let mut out = BinMat::zero(self.nrows(), other.nrows());
        for i in 0..self.nrows() {
            for j in 0..other.nrows() {
                let p = ((self.x[i] & other.z[j]) ^ (self.z[i] & other.x[j])).count_ones() & 1;
                if p == 1 {
                    out.set(i, j, 1);
                }
            }
        }
        Ok(out)
    }

    /// GF(2) rank of the additive span (rank of `phi`).
    pub fn gf2_rank(&self) -> usize {
        self.phi().rref()
    }

    /// Rows as file-format token strings ("1 w W 0").
    pub fn token_rows(&self) -> Vec<String> {
        (0..self.nrows())
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).token().to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}
