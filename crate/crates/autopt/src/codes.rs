//! Stabiliser codes as GF(4) additive codes, with generator and logical
//! basis matrices, validation, the text file format, and built-in codes.

use crate::gf4::{BinMat, Gf4, Gf4Mat};
use crate::{Error, Result};

/// An `[[n, k]]` stabiliser code.
///
/// `g` is the `(n-k) x n` stabiliser generator matrix; `b` is the `2k x n`
/// logical basis whose rows are `X_L^(1), ..., X_L^(k), Z_L^(1), ..., Z_L^(k)`.
/// Construction validates the defining constraints:
/// `G (.) G^T = 0`, `G (.) B^T = 0`, `B (.) B^T = Omega_2k`,
/// where `(.)` is the trace inner product, plus GF(2) independence of the
/// rows of `G`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabCode {
    n: usize,
    k: usize,
    g: Gf4Mat,
    b: Gf4Mat,
}

impl StabCode {
    pub fn new(n: usize, k: usize, g: Gf4Mat, b: Gf4Mat) -> Result<StabCode> {
        if k > n {
            return Err(Error::InvalidCode(format!("k = {k} exceeds n = {n}")));
        }
        if g.nrows() != n - k || g.ncols() != n {
            return Err(Error::InvalidCode(format!(
                "generator matrix must be {}x{}, got {}x{}",
                n - k,
                n,
                g.nrows(),
                g.ncols()
            )));
        }
        if b.nrows() != 2 * k || b.ncols() != n {
            return Err(Error::InvalidCode(format!(
                "logical basis must be {}x{}, got {}x{}",
                2 * k,
                n,
                b.nrows(),
                b.ncols()
            )));
        }
        if g.gf2_rank() != n - k {
            return Err(Error::InvalidCode(
                "generator rows are GF(2)-dependent".into(),
            ));
        }
        let gg = g.trace_product(&g)?;
        if !gg.is_zero() {
            return Err(Error::InvalidCode(first_bad(
                &gg,
                &BinMat::zero(n - k, n - k),
                "stabiliser generators do not commute",
            )));
        }
        let gb = g.trace_product(&b)?;
        if !gb.is_zero() {
            return Err(Error::InvalidCode(first_bad(
                &gb,
                &BinMat::zero(n - k, 2 * k),
                "logical operators do not commute with the stabiliser",
            )));
        }
        let bb = b.trace_product(&b)?;
        let omega = BinMat::omega(2 * k);
        if bb != omega {
            return Err(Error::InvalidCode(first_bad(
                &bb,
                &omega,
                "logical basis does not satisfy the symplectic pairing",
            )));
        }
        Ok(StabCode { n, k, g, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Stabiliser generator matrix.
    pub fn generators(&self) -> &Gf4Mat {
        &self.g
    }

    /// Logical basis matrix (X rows first, then Z rows).
    pub fn basis(&self) -> &Gf4Mat {
        &self.b
    }

    /// Dual logical basis `D_B = Omega_2k . B` (swap X and Z row blocks),
    /// which satisfies `D_B (.) B^T = I`.
    pub fn dual_basis(&self) -> Gf4Mat {
        let k = self.k;
        let mut d = Gf4Mat::zero(2 * k, self.n);
        for i in 0..k {
            d.add_row_from(i, &self.b, k + i);
            d.add_row_from(k + i, &self.b, i);
        }
        d
    }

    /// Canonical key of the stabiliser group: the RREF of `phi(G)`, serialised.
    /// Two codes have equal keys iff they have the same stabiliser span.
    pub fn canonical_key(&self) -> Vec<u8> {
        self.g.phi().row_basis().key_bytes()
    }

    /// Serialise to the text file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        for row in self.g.token_rows() {
            out.push_str(&row);
            out.push('\n');
        }
        out.push('\n');
        for row in self.b.token_rows() {
            out.push_str(&row);
            out.push('\n');
        }
        out
    }

    /// Parse the text file format:
    /// a header line `n k`, then `n - k` generator rows, a blank separator,
    /// and `2k` logical basis rows; tokens are `0 1 w W`; `#` starts a comment.
    pub fn from_file_string(text: &str) -> Result<StabCode> {
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if !line.is_empty() {
                lines.push((idx + 1, line));
            }
        }
        let Some(&(hline, header)) = lines.first() else {
            return Err(Error::Parse {
                line: 1,
                msg: "empty code file".into(),
            });
        };
        let dims: Vec<&str> = header.split_whitespace().collect();
        let (n, k) = match dims.as_slice() {
            [a, b] => (
                a.parse::<usize>().map_err(|_| Error::Parse {
                    line: hline,
                    msg: "bad n".into(),
                })?,
                b.parse::<usize>().map_err(|_| Error::Parse {
                    line: hline,
                    msg: "bad k".into(),
                })?,
            ),
            _ => {
                return Err(Error::Parse {
                    line: hline,
                    msg: "header must be `n k`".into(),
                })
            }
        };
        if k > n || n == 0 || n > 32 {
            return Err(Error::Parse {
                line: hline,
                msg: format!("unsupported dimensions n = {n}, k = {k}"),
            });
        }
        let want = (n - k) + 2 * k;
        let body = &lines[1..];
        if body.len() != want {
            return Err(Error::Parse {
                line: body.last().map_or(hline, |&(l, _)| l),
                msg: format!("expected {} matrix rows, found {}", want, body.len()),
            });
        }
        let parse_row = |&(lno, line): &(usize, &str)| -> Result<Vec<Gf4>> {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != n {
                return Err(Error::Parse {
                    line: lno,
                    msg: format!("expected {} entries, found {}", n, toks.len()),
                });
            }
            toks.iter()
                .map(|t| {
                    let mut chars = t.chars();
                    match (chars.next().and_then(Gf4::from_token), chars.next()) {
                        (Some(v), None) => Ok(v),
                        _ => Err(Error::Parse {
                            line: lno,
                            msg: format!("bad entry `{t}` (expected 0, 1, w or W)"),
                        }),
                    }
                })
                .collect()
        };
        let g_rows: Vec<Vec<Gf4>> = body[..n - k].iter().map(parse_row).collect::<Result<_>>()?;
        let b_rows: Vec<Vec<Gf4>> = body[n - k..].iter().map(parse_row).collect::<Result<_>>()?;
        let g = if g_rows.is_empty() {
            Gf4Mat::zero(0, n)
        } else {
            Gf4Mat::from_entries(&g_rows)
        };
        let b = if b_rows.is_empty() {
            Gf4Mat::zero(0, n)
        } else {
            Gf4Mat::from_entries(&b_rows)
        };
        StabCode::new(n, k, g, b)
    }

    /// Look up a built-in code by name (e.g. `4_2_2` or `5_1_3.m2c2`).
    pub fn builtin(name: &str) -> Result<StabCode> {
        for &(canonical, aliases, text) in FIXTURES {
            if canonical == name || aliases.contains(&name) {
                return StabCode::from_file_string(text);
            }
        }
        Err(Error::UnknownBuiltin(name.to_string()))
    }

    /// Canonical names of all built-in codes.
    pub fn builtin_names() -> Vec<&'static str> {
        FIXTURES.iter().map(|&(n, _, _)| n).collect()
    }
}

fn first_bad(got: &BinMat, want: &BinMat, what: &str) -> String {
    for i in 0..got.nrows() {
        for j in 0..got.ncols() {
            if got.get(i, j) != want.get(i, j) {
                return format!("{what} (first mismatch at entry ({}, {}))", i + 1, j + 1);
            }
        }
    }
    what.to_string()
}

/// Built-in generator/basis matrices: `(canonical name, aliases, file text)`.
/// Variant names record the results table (metric and class column) whose
/// reported basis they reproduce; codes listed as aliases share one matrix.
const FIXTURES: &[(&str, &[&str], &str)] = &[
    (
        "4_1_2",
        &["4_1_2.m1c2", "4_1_2.m2c2"],
        "4 1\n1 W W 0\n0 1 1 W\nw 0 w w\n\nw 1 0 0\n0 w w 0\n",
    ),
    (
        "4_1_2.m1c3",
        &[],
        "4 1\n1 W w 0\n0 1 W 1\nw 0 1 W\n\nw 1 0 0\n0 w 1 0\n",
    ),
    (
        "4_1_2.m2c3",
        &[],
        "4 1\n1 W w 0\n0 1 W w\nw 0 1 W\n\nw 1 0 0\n0 w 1 0\n",
    ),
    (
        "4_2_2",
        &[],
        "4 2\n1 1 1 1\nw w w w\n\n1 1 0 0\nw w 0 0\nw 0 w 0\n1 0 1 0\n",
    ),
    (
        "4_2_2.m1c5",
        &[],
        "4 2\nW w 1 1\n1 W w w\n\nW w 0 0\n1 W 0 0\n1 0 w 0\nW 0 1 0\n",
    ),
    (
        "4_2_2.m1c6",
        &[],
        "4 2\n1 1 1 1\nW w w w\n\n1 1 0 0\nW w 0 0\nW 0 w 0\n1 0 1 0\n",
    ),
    (
        "4_2_2.m1c9",
        &[],
        "4 2\nw 1 1 1\nW w w w\n\nw 1 0 0\nW w 0 0\nW 0 w 0\nw 0 1 0\n",
    ),
    (
        "4_2_2.m2c6",
        &[],
        "4 2\n1 1 1 1\nW W w w\n\n1 1 0 0\nW W 0 0\nW 0 w 0\n1 0 1 0\n",
    ),
    (
        "5_1_2",
        &["5_1_2.m1c3"],
        "5 1\nw w 0 w 0\n0 0 w w 1\n0 1 1 1 0\n1 0 0 1 w\n\n0 w 0 w 1\n0 0 1 0 w\n",
    ),
    (
        "5_1_2.m2c3",
        &[],
        "5 1\nw 1 0 w 0\n0 0 w w 1\n0 w 1 1 0\n1 0 0 1 w\n\n0 1 0 w 1\n0 0 1 0 w\n",
    ),
    (
        "5_1_3",
        &["5_1_3.m1c2", "5_1_3.m1c3", "5_1_3.m2c3"],
        "5 1\nW 1 w 1 0\n1 0 w W 1\n0 1 1 W w\n1 W 0 1 w\n\nw 1 1 0 0\n1 W w 0 0\n",
    ),
    (
        "5_1_3.m2c2",
        &[],
        "5 1\nW w w 1 0\nw 0 w w 1\n0 w 1 w W\nw W 0 1 W\n\n1 w 1 0 0\nw W w 0 0\n",
    ),
    (
        "5_2_1",
        &[],
        "5 2\n0 0 w w w\n0 1 1 1 0\n1 0 0 1 1\n\n0 w 0 w w\nw w 0 w 0\n0 0 1 0 1\n0 0 0 1 1\n",
    ),
    (
        "5_2_2",
        &[],
        "5 2\n0 w 0 0 w\nw 0 w w w\n1 1 1 1 1\n\n0 1 0 1 1\n0 1 1 0 1\n0 0 w 0 w\n0 0 0 w w\n",
    ),
    (
        "5_2_2.m1c6",
        &["5_2_2.m1c9", "5_2_2.m2c6", "5_2_2.m2c9"],
        "5 2\n0 w 0 0 w\nw 0 w w w\n1 1 1 W 1\n\n0 1 0 W 1\n0 1 1 0 1\n0 0 w 0 w\n0 0 0 w w\n",
    ),
    (
        "6_1_3",
        &["6_1_3.m1c2", "6_1_3.m2c2"],
        "6 1\n1 0 0 0 0 w\n0 1 1 w W 0\n0 W 0 W W w\n0 1 w 0 w w\nw W w w 0 W\n\n0 0 w w w 0\n0 0 0 1 w w\n",
    ),
    (
        "6_1_3.m1c3",
        &[],
        "6 1\n1 0 0 0 0 w\n0 1 1 w W 0\n0 W 0 W W w\n0 1 w 0 1 w\nw W w w 0 W\n\n0 0 w w 1 0\n0 0 0 1 1 w\n",
    ),
    (
        "6_1_3.m2c3",
        &[],
        "6 1\n1 0 0 0 0 w\n0 1 1 w w 0\n0 W 0 1 w w\n0 1 w 0 W w\nw W w w 0 W\n\n0 0 w w W 0\n0 0 0 W W w\n",
    ),
    (
        "7_1_3",
        &["7_1_3.m1c2", "7_1_3.m1c3"],
        "7 1\n1 0 w 0 w W 0\n1 w w w 0 0 0\n1 0 0 w w 0 W\nw 0 W 0 W w 0\nw 1 W 1 0 0 0\nw 0 0 1 W 0 1\n\n0 w 0 w 0 0 W\n0 1 0 1 0 0 1\n",
    ),
    (
        "7_1_3.m2c2",
        &[],
        "7 1\n1 0 w 0 w W 0\n1 W w 0 0 0 W\n1 W 0 w w 0 0\nw 0 W 0 1 w 0\nw 1 W 0 0 0 1\nw 1 0 W 1 0 0\n\n0 W 0 w 0 0 W\n0 1 0 W 0 0 1\n",
    ),
    (
        "7_1_3.m2c3",
        &[],
        "7 1\n1 0 w 0 w W 0\n1 w w w 0 0 0\n1 0 0 w w 0 W\nw 0 W 0 W w 0\nw 1 W W 0 0 0\nw 0 0 W W 0 w\n\n0 w 0 w 0 0 W\n0 1 0 W 0 0 w\n",
    ),
];
