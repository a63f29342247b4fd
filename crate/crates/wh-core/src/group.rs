//! Permutation groups given by generators, backed by a deterministic
//! Schreier-Sims stabilizer chain: group order, membership, point orbits and
//! point stabilizers, plus orbit partitions of the induced actions on
//! vertices, edges, arcs and 2-arcs of a graph.
//!
//! No randomization anywhere; identical generator lists always produce the
//! identical chain, so runs are reproducible.

use crate::graph::WhGraph;
use crate::perm::Permutation;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("DomainMismatch: group degree {degree} does not match graph order {order}")]
    DomainMismatch { degree: usize, order: usize },
    #[error("DomainMismatch: point {point} is outside degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// Domains the group can act on, all derived from one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Vertices,
    Edges,
    Arcs,
    TwoArcs,
}

/// One level of the stabilizer chain: a base point, indices (into the strong
/// generator list) of the generators stabilizing all earlier base points, and
/// the fundamental orbit with a transversal (`transversal[p]` maps the base
/// point to `p`).
#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gen_indices: Vec<usize>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gen_indices: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }
}

/// A permutation group with its stabilizer chain and cached order.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Strong generators; the entry level records the deepest chain level the
    /// generator belongs to (it fixes all earlier base points).
    strong: Vec<(usize, Permutation)>,
    levels: Vec<Level>,
    order: u128,
}

impl PermGroup {
    /// Builds the chain from a generator list. Deterministic given the
    /// generator order.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Self {
        Self::with_required_base(degree, generators, &[])
    }

    /// Like [`PermGroup::from_generators`] but forces the chain to start with
    /// the given base points, which makes the corresponding stabilizers
    /// directly readable off the chain.
    pub fn with_required_base(
        degree: usize,
        generators: Vec<Permutation>,
        required_base: &[usize],
    ) -> Self {
        for g in &generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let mut group = PermGroup {
            degree,
            generators: generators.clone(),
            strong: Vec::new(),
            levels: Vec::new(),
            order: 1,
        };
        for &b in required_base {
            group.levels.push(Level::new(b, degree));
        }
        for g in generators {
            group.add_generator(g);
        }
        group.order = group
            .levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .try_fold(1u128, u128::checked_mul)
            .expect("group order exceeds u128");
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Group order: the product of the fundamental orbit lengths.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// Membership test by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.strip(p.clone(), 0);
        residue.is_identity()
    }

    /// Orbit of a point under the whole group.
    pub fn point_orbit(&self, point: usize) -> Result<Vec<usize>, GroupError> {
        if point >= self.degree {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// The stabilizer of a point, as a group in its own right (the chain is
    /// rebuilt with that point as the first base; the point stabilizer is the
    /// group generated by the strong generators of entry level one or
    /// deeper).
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup, GroupError> {
        if point >= self.degree {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let rebased = Self::with_required_base(self.degree, self.generators.clone(), &[point]);
        let stab_gens: Vec<Permutation> = rebased
            .strong
            .iter()
            .filter(|(entry, _)| *entry >= 1)
            .map(|(_, g)| g.clone())
            .collect();
        Ok(Self::from_generators(self.degree, stab_gens))
    }

    /// Orbit partition of the induced action on the chosen domain of `g`.
    pub fn orbits(&self, g: &WhGraph, action: Action) -> Result<OrbitPartition, GroupError> {
        if g.order() != self.degree {
            return Err(GroupError::DomainMismatch {
                degree: self.degree,
                order: g.order(),
            });
        }
        let partition = match action {
            Action::Vertices => {
                let elements: Vec<usize> = (0..self.degree).collect();
                orbit_partition(&elements, &self.generators, |p, &v| p.apply(v))
            }
            Action::Edges => {
                let elements: Vec<(usize, usize)> = g.edge_pairs().collect();
                orbit_partition(&elements, &self.generators, |p, &(u, v)| {
                    let (x, y) = (p.apply(u), p.apply(v));
                    (x.min(y), x.max(y))
                })
            }
            Action::Arcs => {
                let elements = g.arcs();
                orbit_partition(&elements, &self.generators, |p, &(u, v)| {
                    (p.apply(u), p.apply(v))
                })
            }
            Action::TwoArcs => {
                let elements = g.two_arcs();
                orbit_partition(&elements, &self.generators, |p, &(u, v, w)| {
                    (p.apply(u), p.apply(v), p.apply(w))
                })
            }
        };
        Ok(partition)
    }

    fn strip(&self, mut p: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let img = p.apply(self.levels[l].base);
            match &self.levels[l].transversal[img] {
                None => return (p, l),
                Some(rep) => p = p.then(&rep.inverse()),
            }
        }
        (p, self.levels.len())
    }

    fn add_generator(&mut self, p: Permutation) {
        // Worklist of (level to sift from, element); LIFO order keeps the
        // whole construction deterministic.
        let mut work = vec![(0usize, p)];
        while let Some((from, g)) = work.pop() {
            let (residue, entry) = self.strip(g, from);
            if residue.is_identity() {
                continue;
            }
            if entry == self.levels.len() {
                let base = (0..self.degree)
                    .find(|&pt| residue.apply(pt) != pt)
                    .expect("non-identity residue moves a point");
                self.levels.push(Level::new(base, self.degree));
            }
            // The residue fixes the first `entry` base points, so it belongs
            // to the generating set of every level up to and including
            // `entry`.
            let idx = self.strong.len();
            self.strong.push((entry, residue));
            for l in 0..=entry {
                let schreier = self.extend_level(l, idx);
                for s in schreier.into_iter().rev() {
                    work.push((l + 1, s));
                }
            }
        }
    }

    /// Registers one strong generator at one level, grows the fundamental
    /// orbit, and returns the Schreier generators of all newly covered
    /// (point, generator) pairs. Existing transversal entries are never
    /// replaced, so Schreier elements already verified stay verified.
    fn extend_level(&mut self, l: usize, strong_idx: usize) -> Vec<Permutation> {
        let old_orbit_len = self.levels[l].orbit.len();
        self.levels[l].gen_indices.push(strong_idx);

        let mut head = 0;
        while head < self.levels[l].orbit.len() {
            let p = self.levels[l].orbit[head];
            head += 1;
            for gi in 0..self.levels[l].gen_indices.len() {
                let s = &self.strong[self.levels[l].gen_indices[gi]].1;
                let q = s.apply(p);
                if self.levels[l].transversal[q].is_none() {
                    let rep = self.levels[l].transversal[p].as_ref().unwrap().then(s);
                    self.levels[l].transversal[q] = Some(rep);
                    self.levels[l].orbit.push(q);
                }
            }
        }

        let level = &self.levels[l];
        let new_gen_pos = level.gen_indices.len() - 1;
        let mut schreier = Vec::new();
        for (pos, &p) in level.orbit.iter().enumerate() {
            for (gi, &si) in level.gen_indices.iter().enumerate() {
                // Old point with old generator: already processed earlier.
                if pos < old_orbit_len && gi < new_gen_pos {
                    continue;
                }
                let s = &self.strong[si].1;
                let q = s.apply(p);
                let u_p = level.transversal[p].as_ref().unwrap();
                let u_q = level.transversal[q].as_ref().unwrap();
                let product = u_p.then(s).then(&u_q.inverse());
                if !product.is_identity() {
                    schreier.push(product);
                }
            }
        }
        schreier
    }
}

impl Serialize for PermGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PermGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let gens = Vec::<Permutation>::deserialize(deserializer)?;
        let degree = gens.first().map(Permutation::degree).unwrap_or(0);
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(D::Error::custom("generators of unequal degree"));
        }
        Ok(PermGroup::from_generators(degree, gens))
    }
}

/// An orbit partition: for each element index its orbit id (orbits numbered
/// by first appearance) and the orbit sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbit_of: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl OrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_transitive(&self) -> bool {
        self.sizes.len() == 1
    }

    /// Element indices grouped by orbit.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.sizes.len()];
        for (i, &o) in self.orbit_of.iter().enumerate() {
            classes[o].push(i);
        }
        classes
    }
}

fn orbit_partition<T: Ord + Copy>(
    elements: &[T],
    gens: &[Permutation],
    apply: impl Fn(&Permutation, &T) -> T,
) -> OrbitPartition {
    debug_assert!(
        elements.windows(2).all(|w| w[0] < w[1]),
        "elements must be sorted and unique"
    );
    let index_of = |x: &T| elements.binary_search(x).expect("closed under the action");
    let mut dsu: Vec<usize> = (0..elements.len()).collect();
    fn find(dsu: &mut [usize], mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for (i, el) in elements.iter().enumerate() {
        for g in gens {
            let j = index_of(&apply(g, el));
            let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
            if ri != rj {
                let (lo, hi) = (ri.min(rj), ri.max(rj));
                dsu[hi] = lo;
            }
        }
    }
    let mut orbit_of = vec![usize::MAX; elements.len()];
    let mut sizes = Vec::new();
    for i in 0..elements.len() {
        let root = find(&mut dsu, i);
        if orbit_of[root] == usize::MAX {
            orbit_of[root] = sizes.len();
            sizes.push(0);
        }
        orbit_of[i] = orbit_of[root];
        sizes[orbit_of[i]] += 1;
    }
    OrbitPartition { orbit_of, sizes }
}
