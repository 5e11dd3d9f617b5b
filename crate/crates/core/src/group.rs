//! Finite groups stored as dense Cayley tables.

use crate::error::{Error, Result};

/// Index of an element in its parent structure.
pub type Element = usize;

/// A finite group given by its multiplication table over indices `0..n`.
///
/// Instances only come out of [`FiniteGroup::validate`] or out of
/// constructions whose output is a group by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    identity: Element,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Checks closure, identity, the Latin-square property and associativity
    /// (plain triple loop with early exit).
    pub fn validate(n: usize, table: &[Vec<usize>], identity: Element) -> Result<Self> {
        if n == 0 || table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTable { n });
        }
        if n > u32::MAX as usize {
            return Err(Error::OrderOverflow {
                order: n as u128,
                cap: u32::MAX as u128,
            });
        }
        for (row, entries) in table.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::NotClosed { row, col, value, n });
                }
            }
        }
        if identity >= n {
            return Err(Error::NoIdentity { identity });
        }
        for i in 0..n {
            if table[identity][i] != i || table[i][identity] != i {
                return Err(Error::NoIdentity { identity });
            }
        }
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = table[i][j];
                if seen[v] == 2 * i {
                    return Err(Error::NotLatin { index: i, value: v });
                }
                seen[v] = 2 * i;
            }
            for j in 0..n {
                let v = table[j][i];
                if seen[v] == 2 * i + 1 {
                    return Err(Error::NotLatin { index: i, value: v });
                }
                seen[v] = 2 * i + 1;
            }
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        let group = FiniteGroup::from_flat_table(n, flat, identity);
        if let Some((a, b, c)) = group.associativity_witness() {
            return Err(Error::NotAssociative { a, b, c });
        }
        Ok(group)
    }

    /// Builds a group from a flat row-major table without checking the axioms.
    ///
    /// The table must be a Latin square with `identity` as two-sided identity;
    /// associativity is the caller's responsibility.
    pub(crate) fn from_flat_table(n: usize, table: Vec<u32>, identity: Element) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row
                .iter()
                .position(|&v| v as usize == identity)
                .expect("every row of a Latin square contains the identity");
            inverses[a] = b as u32;
        }
        FiniteGroup {
            n,
            identity,
            table,
            inverses,
        }
    }

    /// Tabulates `op` over all pairs, spreading rows across the rayon pool.
    pub(crate) fn from_fn<F>(n: usize, identity: Element, op: F) -> Self
    where
        F: Fn(Element, Element) -> Element + Sync,
    {
        use rayon::prelude::*;
        let mut table = vec![0u32; n * n];
        table.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = op(a, b) as u32;
            }
        });
        FiniteGroup::from_flat_table(n, table, identity)
    }

    pub fn associativity_witness(&self) -> Option<(Element, Element, Element)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverses[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    pub fn row(&self, a: Element) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    /// The table as nested rows, the shape used by the JSON documents.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Smallest `m >= 1` with `a^m = e`.
    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut m = 1;
        while x != self.identity {
            x = self.op(x, a);
            m += 1;
        }
        m
    }

    pub fn pow(&self, a: Element, mut exp: usize) -> Element {
        let mut base = a;
        let mut acc = self.identity;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            exp >>= 1;
        }
        acc
    }
}
