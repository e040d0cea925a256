use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Above this order the associativity check is skipped at construction.
pub const EXHAUSTIVE_CHECK_LIMIT: usize = 64;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
    generators: Vec<(String, usize)>,
}

impl FiniteGroup {
    /// Validates `table` (row-major, `table[a*n + b] = a·b`) as a group law.
    /// `names[k]` is the normal-form rendering of element `k`, and
    /// `generators` lists named elements the parser may refer to.
    pub fn from_table(
        label: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
        generators: Vec<(String, usize)>,
    ) -> Result<Self> {
        let bad = |msg: String| Error::InvalidGroupData(msg);
        if order == 0 {
            return Err(bad("empty group".into()));
        }
        if table.len() != order * order || names.len() != order {
            return Err(bad("table size does not match order".into()));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(bad("table entry out of range".into()));
        }
        let at = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| bad(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        if order <= EXHAUSTIVE_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(bad(format!("associativity fails on ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        }
        if generators.iter().any(|(_, g)| *g >= order) {
            return Err(bad("generator out of range".into()));
        }
        Ok(Self { label: label.into(), order, table, identity, inverse, names, generators })
    }

    /// Table-only construction; element `k` is named `a{k}` and every
    /// element is exposed as a generator.
    pub fn from_raw_table(order: usize, table: Vec<usize>) -> Result<Self> {
        let names: Vec<String> = (0..order).map(|k| format!("a{k}")).collect();
        let gens = names.iter().cloned().enumerate().map(|(k, n)| (n, k)).collect();
        let mut g = Self::from_table(format!("table {order}"), order, table, names, gens)?;
        let id = g.identity;
        g.names[id] = "e".into();
        Ok(g)
    }

    /// ℤ/n with generator `g`.
    pub fn cyclic(n: usize) -> Self {
        Self::cyclic_named(n, "g")
    }

    /// ℤ/n with a chosen generator name; element `k` is `gen^k`.
    pub fn cyclic_named(n: usize, gen: &str) -> Self {
        assert!(n >= 1);
        let table = (0..n * n).map(|ab| (ab / n + ab % n) % n).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => gen.to_string(),
                _ => format!("{gen}^{k}"),
            })
            .collect();
        let gens = if n > 1 { vec![(gen.to_string(), 1)] } else { vec![] };
        Self::from_table(format!("cyclic {n}"), n, table, names, gens).expect("cyclic table is a group")
    }

    /// Dihedral group of order 2n, elements `r^a s^ε` stored at `a + n·ε`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let ord = 2 * n;
        let mut table = vec![0; ord * ord];
        for x in 0..ord {
            for y in 0..ord {
                let (a, e) = (x % n, x / n);
                let (b, d) = (y % n, y / n);
                let b_twisted = if e == 1 { (n - b) % n } else { b };
                let c = (a + b_twisted) % n;
                table[x * ord + y] = c + n * ((e + d) % 2);
            }
        }
        let names = (0..ord)
            .map(|x| {
                let (a, e) = (x % n, x / n);
                let r = match a {
                    0 => String::new(),
                    1 => "r".into(),
                    _ => format!("r^{a}"),
                };
                match (r.is_empty(), e) {
                    (true, 0) => "e".into(),
                    (true, _) => "s".into(),
                    (false, 0) => r,
                    (false, _) => format!("{r}*s"),
                }
            })
            .collect();
        let mut gens = vec![("s".to_string(), n)];
        if n > 1 {
            gens.insert(0, ("r".to_string(), 1));
        }
        Self::from_table(format!("dihedral {n}"), ord, table, names, gens).expect("dihedral table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// All subgroups, found as iterated joins of cyclic subgroups.
    pub fn subgroups(&self) -> BTreeSet<BTreeSet<usize>> {
        let cyclic: BTreeSet<BTreeSet<usize>> = (0..self.order).map(|x| self.closure(&[x])).collect();
        let mut all = cyclic.clone();
        let mut frontier: Vec<BTreeSet<usize>> = cyclic.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    if c.is_subset(h) {
                        continue;
                    }
                    let gens: Vec<usize> = h.iter().chain(c.iter()).copied().collect();
                    let j = self.closure(&gens);
                    if all.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        all
    }

    pub fn subgroup_orders(&self) -> BTreeSet<u64> {
        self.subgroups().iter().map(|s| s.len() as u64).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two() {
        let g = FiniteGroup::cyclic(2);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.subgroup_orders(), BTreeSet::from([1, 2]));
    }

    #[test]
    fn dihedral_three_is_s3() {
        let d = FiniteGroup::dihedral(3);
        assert_eq!(d.order(), 6);
        // s r s = r^-1
        let (r, s) = (1, 3);
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
        assert_eq!(d.subgroup_orders(), BTreeSet::from([1, 2, 3, 6]));
        // 1 trivial, 3 of order 2, 1 of order 3, whole group
        assert_eq!(d.subgroups().len(), 6);
    }

    #[test]
    fn klein_four_subgroups() {
        let v = FiniteGroup::dihedral(2);
        assert_eq!(v.subgroups().len(), 5);
    }

    #[test]
    fn rejects_non_associative_table() {
        // quasigroup: a·b = (a - b) mod 3, has no two-sided identity
        let t: Vec<usize> = (0..9).map(|ab| (ab / 3 + 3 - ab % 3) % 3).collect();
        assert!(FiniteGroup::from_raw_table(3, t).is_err());
        // a loop of order 5 that is not associative
        let table = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = FiniteGroup::from_raw_table(5, table).unwrap_err();
        assert!(matches!(err, Error::InvalidGroupData(m) if m.contains("associativity")));
    }
}
