//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};

/// Multiplication table with the identity at index 0;
/// `table[a][b]` is the index of `a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::GroupTable("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupTable(format!("row {a} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::GroupTable(format!("row {a} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if seen[row[b]] {
                    return Err(Error::GroupTable(format!("column {b} is not a permutation")));
                }
                seen[row[b]] = true;
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::GroupTable("index 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::GroupTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => return Err(Error::GroupTable(format!("{} labels for order {n}", l.len()))),
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        let inverse = (0..n).map(|a| (0..n).find(|&b| table[a][b] == 0).expect("latin square")).collect();
        Ok(GroupTable { name: name.into(), labels, table, inverse })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        !h.is_empty()
            && h.contains(&0)
            && h.iter().all(|&a| a < self.order())
            && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, b))))
    }

    /// Left cosets `xH`, in order of their smallest element.
    pub fn left_cosets(&self, h: &[usize]) -> Vec<Vec<usize>> {
        self.cosets(|x| h.iter().map(|&k| self.mul(x, k)).collect())
    }

    /// Right cosets `Hx`.
    pub fn right_cosets(&self, h: &[usize]) -> Vec<Vec<usize>> {
        self.cosets(|x| h.iter().map(|&k| self.mul(k, x)).collect())
    }

    fn cosets(&self, f: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if done[x] {
                continue;
            }
            let mut c = f(x);
            c.sort_unstable();
            c.dedup();
            for &y in &c {
                done[y] = true;
            }
            out.push(c);
        }
        out
    }
}
