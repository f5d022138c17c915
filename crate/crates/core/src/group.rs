//! Finite groups stored extensionally as validated Cayley tables.
//!
//! Elements are identified by index; labels are for display only.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cayley table is empty")]
    Empty,
    #[error("cayley table is not square or has an entry out of range at row {0}")]
    Malformed(usize),
    #[error("label count {labels} does not match group order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("not associative: ({0}{1}){2} != {0}({1}{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table: `table[g][h]` is the index of `gh`.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GroupError::Malformed(i));
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => return Err(GroupError::LabelCount { labels: l.len(), order: n }),
            Some(l) => l,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or(GroupError::NoInverse(g))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup { labels, table, identity, inverses })
    }

    /// The cyclic group of order `n`; element `i` is `g^i`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Self::from_table(table, Some(labels)).expect("cyclic table is a group")
    }

    /// The symmetric group on `m` points, elements in lexicographic order of
    /// their one-line notation (so index 0 is the identity). The product `στ`
    /// applies `τ` first.
    pub fn symmetric(m: usize) -> Self {
        assert!(m >= 1, "symmetric group needs m >= 1");
        let perms = permutations(m);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..m).map(|i| s[t[i]]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == 0 {
                    "e".to_string()
                } else {
                    p.iter().map(|x| x.to_string()).collect::<String>()
                }
            })
            .collect();
        Self::from_table(table, Some(labels)).expect("permutation table is a group")
    }

    /// `G × H` with index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (n, m) = (g.order(), h.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let labels = (0..n * m)
            .map(|x| format!("({},{})", g.label(x / m), h.label(x % m)))
            .collect();
        Self::from_table(table, Some(labels)).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }
    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }
    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    /// Some `(g, h)` with `gh != hg`.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|g| (0..n).map(move |h| (g, h)))
            .find(|&(g, h)| self.mul(g, h) != self.mul(h, g))
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}
