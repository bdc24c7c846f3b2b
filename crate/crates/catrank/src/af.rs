//! Abstract argumentation frameworks: named arguments plus a binary attack
//! relation, with the neighbourhood and set operations everything else is
//! built on.
//!
//! Arguments are addressed by dense indices `0..n`; names are carried for
//! input and output only. All numeric code downstream works on indices.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

/// A set of argument indices.
pub type ArgumentSet = BTreeSet<usize>;

/// Errors from framework construction and structural operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AfError {
    #[error("duplicate argument name `{0}`")]
    DuplicateName(String),
    #[error("argument names must be non-empty")]
    EmptyName,
    #[error("attack references unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("argument index {index} out of range (framework has {n} arguments)")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("permutation is not a bijection on 0..{n}")]
    NotABijection { n: usize },
    #[error(
        "restriction splits a weakly connected component: kept argument {kept} \
         is connected to dropped argument {dropped}"
    )]
    SplitsComponent { kept: usize, dropped: usize },
}

/// A finite argumentation framework `⟨X, R⟩`.
///
/// Immutable after construction; all operations are pure. The attack
/// relation is a set: duplicate pairs in the input are de-duplicated.
/// Self-attacks are permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    names: Vec<String>,
    attacks: BTreeSet<(usize, usize)>,
    attackers_of: Vec<Vec<usize>>,
    attacked_by: Vec<Vec<usize>>,
}

impl ArgumentationFramework {
    /// Build a framework from argument names and name-level attack pairs.
    pub fn new<N: Into<String>>(
        names: impl IntoIterator<Item = N>,
        attacks: &[(&str, &str)],
    ) -> Result<Self, AfError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let resolve = |name: &str| -> Result<usize, AfError> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| AfError::UnknownArgument(name.to_string()))
        };
        let pairs = attacks
            .iter()
            .map(|(a, b)| Ok((resolve(a)?, resolve(b)?)))
            .collect::<Result<Vec<_>, AfError>>()?;
        Self::from_index_pairs(names, pairs)
    }

    /// Build a framework from names and index-level attack pairs.
    pub fn from_index_pairs(
        names: Vec<String>,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, AfError> {
        let n = names.len();
        let mut seen = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(AfError::EmptyName);
            }
            if seen.insert(name.clone(), i).is_some() {
                return Err(AfError::DuplicateName(name.clone()));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in attacks {
            for idx in [a, b] {
                if idx >= n {
                    return Err(AfError::IndexOutOfRange { index: idx, n });
                }
            }
            set.insert((a, b));
        }
        let mut attackers_of = vec![Vec::new(); n];
        let mut attacked_by = vec![Vec::new(); n];
        for &(a, b) in &set {
            attackers_of[b].push(a);
            attacked_by[a].push(b);
        }
        for row in attackers_of.iter_mut().chain(attacked_by.iter_mut()) {
            row.sort_unstable();
        }
        Ok(Self {
            names,
            attacks: set,
            attackers_of,
            attacked_by,
        })
    }

    /// Number of arguments.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Name of argument `x`. Panics if out of range.
    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The attack relation as ordered (attacker, target) index pairs.
    pub fn attacks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn has_attack(&self, attacker: usize, target: usize) -> bool {
        self.attacks.contains(&(attacker, target))
    }

    fn check_index(&self, x: usize) -> usize {
        assert!(
            x < self.n(),
            "argument index {x} out of range (framework has {} arguments)",
            self.n()
        );
        x
    }

    /// Direct attackers of `x` (`R⁻(x)`), sorted. Panics if out of range.
    pub fn attackers(&self, x: usize) -> &[usize] {
        &self.attackers_of[self.check_index(x)]
    }

    /// Arguments attacked by `x` (`R⁺(x)`), sorted. Panics if out of range.
    pub fn attacked_by(&self, x: usize) -> &[usize] {
        &self.attacked_by[self.check_index(x)]
    }

    /// Defenders of `x`: the attackers of the attackers of `x`.
    pub fn defenders(&self, x: usize) -> ArgumentSet {
        self.attackers(x)
            .iter()
            .flat_map(|&a| self.attackers_of[a].iter().copied())
            .collect()
    }

    /// Everything attacked by some member of `s` (`R⁺(S)`).
    pub fn attacked_by_set(&self, s: &ArgumentSet) -> ArgumentSet {
        s.iter()
            .flat_map(|&a| self.attacked_by[self.check_index(a)].iter().copied())
            .collect()
    }

    /// Everything attacking some member of `s` (`R⁻(S)`).
    pub fn attackers_of_set(&self, s: &ArgumentSet) -> ArgumentSet {
        s.iter()
            .flat_map(|&a| self.attackers_of[self.check_index(a)].iter().copied())
            .collect()
    }

    /// The attack matrix: row `i` lists the attackers of argument `i`.
    pub fn attack_matrix(&self) -> AttackMatrix {
        AttackMatrix {
            n: self.n(),
            rows: self.attackers_of.clone(),
        }
    }

    /// Maximal subsets mutually reachable when edge direction is ignored.
    /// Components are sorted by smallest member, members ascending.
    pub fn weakly_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            visited[start] = true;
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in self.attackers_of[x].iter().chain(&self.attacked_by[x]) {
                    if !visited[y] {
                        visited[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Induced sub-framework on `keep`, which must be a union of whole
    /// weakly connected components. Name order is preserved.
    pub fn restrict(&self, keep: &ArgumentSet) -> Result<Self, AfError> {
        for &x in keep {
            self.try_index(x)?;
        }
        for comp in self.weakly_connected_components() {
            let kept: Vec<usize> = comp.iter().copied().filter(|x| keep.contains(x)).collect();
            if !kept.is_empty() && kept.len() != comp.len() {
                let dropped = comp.iter().find(|x| !keep.contains(x)).copied().unwrap();
                return Err(AfError::SplitsComponent {
                    kept: kept[0],
                    dropped,
                });
            }
        }
        let old: Vec<usize> = (0..self.n()).filter(|x| keep.contains(x)).collect();
        let mut new_index = HashMap::new();
        for (new, &o) in old.iter().enumerate() {
            new_index.insert(o, new);
        }
        let names = old.iter().map(|&o| self.names[o].clone()).collect();
        let attacks = self
            .attacks
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .map(|(a, b)| (new_index[a], new_index[b]));
        Self::from_index_pairs(names, attacks.collect::<Vec<_>>())
    }

    /// Relabel arguments along a permutation: argument `x` moves to index
    /// `perm[x]`, carrying its name, and attacks move with their endpoints.
    pub fn apply_isomorphism(&self, perm: &[usize]) -> Result<Self, AfError> {
        let n = self.n();
        if perm.len() != n {
            return Err(AfError::NotABijection { n });
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || hit[p] {
                return Err(AfError::NotABijection { n });
            }
            hit[p] = true;
        }
        let mut names = vec![String::new(); n];
        for (x, &p) in perm.iter().enumerate() {
            names[p] = self.names[x].clone();
        }
        let attacks: Vec<(usize, usize)> = self
            .attacks
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        Self::from_index_pairs(names, attacks)
    }

    /// True iff no member of `s` attacks a member of `s`.
    pub fn is_conflict_free(&self, s: &ArgumentSet) -> bool {
        s.iter()
            .all(|&a| self.attacked_by[self.check_index(a)].iter().all(|b| !s.contains(b)))
    }

    /// The characteristic function: arguments whose every attacker is
    /// attacked by `s`.
    pub fn characteristic_function(&self, s: &ArgumentSet) -> ArgumentSet {
        let counter = self.attacked_by_set(s);
        (0..self.n())
            .filter(|&x| self.attackers_of[x].iter().all(|a| counter.contains(a)))
            .collect()
    }

    fn try_index(&self, x: usize) -> Result<usize, AfError> {
        if x < self.n() {
            Ok(x)
        } else {
            Err(AfError::IndexOutOfRange { index: x, n: self.n() })
        }
    }
}

/// Row-oriented attack matrix: row `i` holds the attacker indices of
/// argument `i` (the nonzero columns of the 0/1 matrix row). A dense grid
/// is only materialized on demand for printing and small-n checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackMatrix {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl AttackMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Attacker indices of argument `i`, sorted.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry `d[i][j]`: 1 iff argument `j` attacks argument `i`.
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(self.rows[i].binary_search(&j).is_ok())
    }

    /// Row sum of row `i`, i.e. the number of attackers of argument `i`.
    pub fn attacker_count(&self, i: usize) -> usize {
        self.rows[i].len()
    }

    /// Dense 0/1 grid, for printing and tests.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}
