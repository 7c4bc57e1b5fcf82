//! Finite groups given by Cayley tables or permutation generators.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default bound on the number of elements produced from generators.
pub const DEFAULT_ELEMENT_CAP: usize = 5000;

/// A finite group with elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    /// `table[a][b]` is the product `ab`.
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table: closure, associativity, a two-sided
    /// identity and inverses.
    pub fn from_cayley(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {a} has length {}", row.len())));
            }
            if let Some(&b) = row.iter().find(|&&b| b >= n) {
                return Err(Error::NotAGroup(format!("entry {b} in row {a} out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::DimensionMismatch { context: "group labels", expected: n, found: l.len() })
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup { table, identity, inverses, labels })
    }

    /// Closure of a set of permutations of `0..degree` under composition,
    /// `(s t)(i) = s(t(i))`. Elements are numbered in breadth-first order
    /// starting from the identity.
    pub fn from_permutations(generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        let degree = generators.first().map_or(0, Vec::len);
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || core::mem::replace(&mut seen[i], true)) {
                return Err(Error::NotAGroup(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id.clone()];
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let p = compose(&elements[e], g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Self::from_cayley(table, Some(labels))
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|i| format!("u^{i}")).collect();
        Self::from_cayley(table, Some(labels)).expect("cyclic group")
    }

    /// The symmetric group on three letters with the element order
    /// `e, (12), (13), (23), (123), (132)`.
    pub fn symmetric3() -> Self {
        let perms: Vec<Vec<usize>> =
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 0], vec![0, 2, 1], vec![1, 2, 0], vec![2, 0, 1]];
        Self::from_permutation_list(&perms)
    }

    /// Group whose elements are exactly the given permutations, in order.
    fn from_permutation_list(perms: &[Vec<usize>]) -> Self {
        let find = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms.iter().map(|a| perms.iter().map(|b| find(&compose(a, b))).collect()).collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_cayley(table, Some(labels)).expect("permutation group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup formed by `elements` (in the given order), together with
    /// that list as the embedding into `self`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let pos = |g: usize| elements.iter().position(|&e| e == g);
        let mut table = Vec::with_capacity(elements.len());
        for &a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in elements {
                let p = pos(self.mul(a, b))
                    .ok_or_else(|| Error::NotAGroup(format!("subset not closed: {a} * {b}")))?;
                row.push(p);
            }
            table.push(row);
        }
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        Ok((FiniteGroup::from_cayley(table, Some(labels))?, elements.to_vec()))
    }
}

fn compose(s: &[usize], t: &[usize]) -> Vec<usize> {
    t.iter().map(|&i| s[i]).collect()
}

/// Cycle notation with 1-based points, `e` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&format!("{}", i + 1));
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_from_generators_matches_explicit() {
        let g = FiniteGroup::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.labels(), &["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        assert_eq!(s3.identity(), 0);
        for a in 0..6 {
            assert_eq!(s3.mul(a, s3.inverse(a)), 0);
        }
    }

    #[test]
    fn rejects_non_groups() {
        // Not associative: a "group" table where 1*1 = 1 but 1 has no inverse.
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_cayley(bad, None), Err(Error::NotAGroup(_))));
        let ragged = vec![vec![0, 1], vec![1]];
        assert!(FiniteGroup::from_cayley(ragged, None).is_err());
        // Latin square that is not associative.
        let latin = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_cayley(latin, None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("associativity")));
    }

    #[test]
    fn generator_cap() {
        let gens = [vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]];
        assert!(matches!(FiniteGroup::from_permutations(&gens, 50), Err(Error::GroupTooLarge(50))));
        assert_eq!(FiniteGroup::from_permutations(&gens, 200).unwrap().order(), 120);
    }

    #[test]
    fn subgroup_of_s3() {
        let s3 = FiniteGroup::symmetric3();
        let (k, emb) = s3.subgroup(&[0, 1]).unwrap();
        assert_eq!(k.order(), 2);
        assert_eq!(emb, vec![0, 1]);
        assert!(s3.subgroup(&[0, 1, 2]).is_err());
    }
}
