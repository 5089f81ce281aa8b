use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::amplitude::ladder_amplitude;
use super::operator::trusted_window;
use crate::exec::Exec;
use crate::weyl::{Parity, WeylPoly};
use crate::Error;

/// Reachability of Fock indices under a generator set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub seed: usize,
    pub generator_names: Vec<String>,
    pub dim: usize,
    /// indices `0..window` are analysed
    pub window: usize,
    pub reachable: BTreeSet<usize>,
    /// orbits covering `0..window`, ordered by smallest member
    pub partition: Vec<BTreeSet<usize>>,
}

impl OrbitReport {
    pub fn orbit_count(&self) -> usize {
        self.partition.len()
    }

    /// Whether the partition is exactly the even/odd split of the window.
    pub fn matches_parity_sectors(&self) -> bool {
        let sector = |p: Parity| -> BTreeSet<usize> {
            (0..self.window)
                .filter(|n| Parity::of_degree(*n as u32) == p)
                .collect()
        };
        let mut want = vec![sector(Parity::Even), sector(Parity::Odd)];
        want.retain(|s| !s.is_empty());
        self.partition == want
    }
}

/// Edge lists `n → m` within the window: some generator (or its adjoint)
/// has a nonzero exact amplitude from `|n⟩` to `|m⟩`.
fn adjacency(generators: &[WeylPoly], window: usize, exec: Exec) -> Vec<Vec<usize>> {
    let mut all: Vec<WeylPoly> = generators.to_vec();
    all.extend(generators.iter().map(WeylPoly::adjoint));
    exec.map_range(0..window, |n| {
        let mut targets = BTreeSet::new();
        for g in &all {
            for (m, _) in ladder_amplitude(g, n) {
                if m < window && m != n {
                    targets.insert(m);
                }
            }
        }
        targets.into_iter().collect()
    })
}

fn bfs(adj: &[Vec<usize>], seed: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(n) = queue.pop_front() {
        for &m in &adj[n] {
            if seen.insert(m) {
                queue.push_back(m);
            }
        }
    }
    seen
}

pub fn orbit(
    seed: usize,
    generators: &[(String, WeylPoly)],
    dim: usize,
) -> Result<OrbitReport, Error> {
    orbit_with(seed, generators, dim, Exec::default())
}

/// Breadth-first reachability from `seed`, plus the orbit partition of the
/// trusted window `N − 2·(max generator degree)`.
pub fn orbit_with(
    seed: usize,
    generators: &[(String, WeylPoly)],
    dim: usize,
    exec: Exec,
) -> Result<OrbitReport, Error> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let degree = generators
        .iter()
        .map(|(_, g)| g.degree())
        .max()
        .unwrap_or(0);
    let window = trusted_window(dim, degree);
    if seed >= window {
        return Err(Error::SeedOutsideWindow { seed, window });
    }
    let polys: Vec<WeylPoly> = generators.iter().map(|(_, g)| g.clone()).collect();
    let adj = adjacency(&polys, window, exec);
    let reachable = bfs(&adj, seed);
    let orbits = exec.map_range(0..window, |n| bfs(&adj, n));
    let mut partition: Vec<BTreeSet<usize>> = Vec::new();
    for o in orbits {
        if !partition.contains(&o) {
            partition.push(o);
        }
    }
    partition.sort_by_key(|o| o.first().copied());
    Ok(OrbitReport {
        seed,
        generator_names: generators.iter().map(|(n, _)| n.clone()).collect(),
        dim,
        window,
        reachable,
        partition,
    })
}
