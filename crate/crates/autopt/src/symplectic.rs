//! The binary symplectic group `Sp(2k, 2)`: enumeration, conjugacy classes
//! with the fixed representative tables for k = 1 and k = 2, and conjugator
//! search for the basis-change action.

use crate::gf4::{symp_product, BinMat};
use crate::{Error, Result};
use std::collections::HashMap;

/// Whether `f` is square of even dimension and preserves the symplectic form:
/// `F . Omega . F^T = Omega`.
pub fn is_symplectic(f: &BinMat) -> bool {
    let m = f.nrows();
    if m == 0 || m % 2 != 0 || f.ncols() != m {
        return false;
    }
    let omega = BinMat::omega(m);
    f.mul(&omega)
        .and_then(|fo| fo.mul(&f.transpose()))
        .map(|foft| foft == omega)
        .unwrap_or(false)
}

/// Inverse of a symplectic matrix: `F^{-1} = Omega . F^T . Omega`.
pub fn symplectic_inverse(f: &BinMat) -> Result<BinMat> {
    if !is_symplectic(f) {
        return Err(Error::NotSymplectic);
    }
    let omega = BinMat::omega(f.nrows());
    omega.mul(&f.transpose())?.mul(&omega)
}

/// `|Sp(2k, 2)| = 2^(k^2) * prod_{i=1..k} (4^i - 1)`.
pub fn sp_order(k: usize) -> u64 {
    let mut order = 1u64 << (k * k);
    for i in 1..=k {
        order *= (1u64 << (2 * i)) - 1;
    }
    order
}

/// Class representatives for `Sp(2, 2)`, in class-label order.
const REPS_K1: &[&[[u8; 2]]] = &[
    &[[1, 0], [0, 1]],
    &[[0, 1], [1, 1]],
    &[[0, 1], [1, 0]],
];

/// Class representatives for `Sp(4, 2)`, in class-label order.
///
/// Classes are identified by their sizes
/// (1, 15, 15, 40, 40, 45, 90, 90, 120, 120, 144): the two size-15 classes
/// are 2 and 3, the two size-40 classes are 4 and 5, and so on.  The
/// representatives of classes 3 and 4 are the key-minimal members of the
/// size-15 class other than class 2 and the size-40 class other than
/// class 5; the rest are fixed matrices.  Construction cross-checks that
/// the eleven representatives land in eleven distinct classes with the
/// sizes above.
const REPS_K2: &[&[[u8; 4]]] = &[
    &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    &[[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
    &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]],
    &[[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 0]],
    &[[0, 0, 1, 0], [0, 0, 1, 1], [1, 1, 1, 1], [0, 1, 1, 0]],
    &[[0, 0, 0, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 0, 0, 0]],
    &[[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 1, 0]],
    &[[0, 0, 0, 1], [0, 0, 1, 1], [1, 1, 0, 1], [1, 0, 0, 0]],
    &[[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]],
    &[[0, 0, 0, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 0, 1, 1]],
    &[[0, 0, 0, 1], [0, 0, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1]],
];

fn rep_matrix<const M: usize>(rows: &[[u8; M]]) -> BinMat {
    let entries: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
    BinMat::from_entries(&entries)
}

/// The fully enumerated group `Sp(2k, 2)` with its conjugacy classes.
///
/// Elements are sorted by their byte key, which fixes the enumeration order
/// used by [`SpGroup::find_conjugator`].  Class labels are 1-based; for
/// k <= 2 they follow the fixed representative tables, for k = 3 classes are
/// ordered by (size, smallest element key).
pub struct SpGroup {
    k: usize,
    elements: Vec<BinMat>,
    index: HashMap<Vec<u8>, usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    reps: Vec<BinMat>,
}

impl SpGroup {
    /// Enumerate `Sp(2k, 2)` for k <= 2.
    pub fn new(k: usize) -> Result<SpGroup> {
        if k == 0 || k > 2 {
            return Err(Error::BudgetExceeded(format!(
                "Sp(2k,2) enumeration for k = {k} requires an explicit budget \
                 (use new_with_budget; only k <= 3 is supported)"
            )));
        }
        SpGroup::build(k)
    }

    /// Enumerate with an explicit element budget; permits k = 3
    /// (1 451 520 elements) when the budget allows.
    pub fn new_with_budget(k: usize, max_elements: u64) -> Result<SpGroup> {
        if k == 0 || k > 3 {
            return Err(Error::BudgetExceeded(format!(
                "Sp(2k,2) enumeration supports 1 <= k <= 3, got k = {k}"
            )));
        }
        if sp_order(k) > max_elements {
            return Err(Error::BudgetExceeded(format!(
                "|Sp({},2)| = {} exceeds budget {}",
                2 * k,
                sp_order(k),
                max_elements
            )));
        }
        SpGroup::build(k)
    }

    fn build(k: usize) -> Result<SpGroup> {
        let elements = enumerate_sp(k)?;
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.key_bytes(), i);
        }

        // Partition into conjugacy classes by orbiting under conjugation.
        let omega = BinMat::omega(2 * k);
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let label = raw_classes.len();
            let mut members = vec![start];
            class_of[start] = label;
            let a = &elements[start];
            for g in &elements {
                let g_inv = omega.mul(&g.transpose())?.mul(&omega)?;
                let b = g.mul(a)?.mul(&g_inv)?;
                let bi = index[&b.key_bytes()];
                if class_of[bi] == usize::MAX {
                    class_of[bi] = label;
                    members.push(bi);
                }
            }
            members.sort_unstable();
            raw_classes.push(members);
        }

        // Relabel classes: k <= 2 by locating the fixed representatives,
        // k = 3 by (class size, smallest element key).
        let order: Vec<usize> = if k <= 2 {
            let reps: Vec<BinMat> = match k {
                1 => REPS_K1.iter().map(|r| rep_matrix(r)).collect(),
                _ => REPS_K2.iter().map(|r| rep_matrix(r)).collect(),
            };
            if reps.len() != raw_classes.len() {
                return Err(Error::Verification(format!(
                    "Sp({},2) has {} classes but {} representatives are tabled",
                    2 * k,
                    raw_classes.len(),
                    reps.len()
                )));
            }
            let order: Vec<usize> = reps
                .iter()
                .map(|r| {
                    index
                        .get(&r.key_bytes())
                        .map(|&i| class_of[i])
                        .ok_or(Error::NotSymplectic)
                })
                .collect::<Result<_>>()?;
            let expected_sizes: &[usize] = if k == 1 {
                &[1, 2, 3]
            } else {
                &[1, 15, 15, 40, 40, 45, 90, 90, 120, 120, 144]
            };
            let mut distinct = order.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != order.len()
                || order
                    .iter()
                    .zip(expected_sizes)
                    .any(|(&c, &s)| raw_classes[c].len() != s)
            {
                return Err(Error::Verification(
                    "class representatives do not identify distinct classes of the expected sizes"
                        .into(),
                ));
            }
            order
        } else {
            let mut labels: Vec<usize> = (0..raw_classes.len()).collect();
            labels.sort_by_key(|&c| (raw_classes[c].len(), raw_classes[c][0]));
            labels
        };

        let classes: Vec<Vec<usize>> = order.iter().map(|&c| raw_classes[c].clone()).collect();
        let mut relabel = vec![0usize; raw_classes.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c];
        }
        let reps: Vec<BinMat> = if k <= 2 {
            match k {
                1 => REPS_K1.iter().map(|r| rep_matrix(r)).collect(),
                _ => REPS_K2.iter().map(|r| rep_matrix(r)).collect(),
            }
        } else {
            classes
                .iter()
                .map(|members| elements[members[0]].clone())
                .collect()
        };

        Ok(SpGroup {
            k,
            elements,
            index,
            class_of,
            classes,
            reps,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Elements in the fixed enumeration order.
    pub fn elements(&self) -> &[BinMat] {
        &self.elements
    }

    /// Representative of a 1-based class label.
    pub fn class_rep(&self, label: usize) -> Result<&BinMat> {
        self.reps
            .get(label.wrapping_sub(1))
            .ok_or_else(|| Error::BadClass(label, "no such class".into()))
    }

    pub fn class_size(&self, label: usize) -> Result<usize> {
        self.classes
            .get(label.wrapping_sub(1))
            .map(|c| c.len())
            .ok_or_else(|| Error::BadClass(label, "no such class".into()))
    }

    /// 1-based class label of a group element.
    pub fn class_of(&self, m: &BinMat) -> Result<usize> {
        let i = self
            .index
            .get(&m.key_bytes())
            .ok_or(Error::NotSymplectic)?;
        Ok(self.class_of[*i] + 1)
    }

    /// First `A` (in enumeration order) with `(A^-1)^T . l1 . A^T = l2`,
    /// i.e. a logical-basis change mapping the action `l1` to `l2`.
    pub fn find_conjugator(&self, l1: &BinMat, l2: &BinMat) -> Result<BinMat> {
        let omega = BinMat::omega(2 * self.k);
        for a in &self.elements {
            // (A^-1)^T = (Omega A^T Omega)^T = Omega . A . Omega.
            let lhs = omega.mul(a)?.mul(&omega)?.mul(l1)?.mul(&a.transpose())?;
            if &lhs == l2 {
                return Ok(a.clone());
            }
        }
        Err(Error::NotConjugate)
    }
}

/// Enumerate all of `Sp(2k, 2)` as the closure of the symplectic
/// transvections, sorted by byte key.
pub fn enumerate_sp(k: usize) -> Result<Vec<BinMat>> {
    let m = 2 * k;
    // Transvection T_v: e_i -> e_i + <e_i, v> v for each nonzero v.
    let mut gens = Vec::new();
    for v in 1u64..(1 << m) {
        let mut t = BinMat::zero(m, m);
        for i in 0..m {
            let e = 1u64 << i;
            let mut row = e;
            if symp_product(e, v, k) == 1 {
                row ^= v;
            }
            t.set_row(i, row);
        }
        gens.push(t);
    }

    let expected = sp_order(k) as usize;
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::with_capacity(expected);
    let identity = BinMat::identity(m);
    seen.insert(identity.key_bytes(), 0);
    let mut elements = vec![identity];
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        let cur = elements[i].clone();
        for g in &gens {
            let next = cur.mul(g)?;
            let key = next.key_bytes();
            if !seen.contains_key(&key) {
                seen.insert(key, elements.len());
                frontier.push(elements.len());
                elements.push(next);
            }
        }
    }
    if elements.len() != expected {
        return Err(Error::Verification(format!(
            "Sp({m},2) closure produced {} elements, expected {expected}",
            elements.len()
        )));
    }
    elements.sort_by(|a, b| a.key_bytes().cmp(&b.key_bytes()));
    Ok(elements)
}
