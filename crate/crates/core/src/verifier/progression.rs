//! Bounded search for partitions of `[0, N]` with a periodic overlap.
//!
//! When `0` is prescribed in both sets the forcing argument is unavailable,
//! so this is a plain depth-first search with pruning on the first unequal
//! count. Points are assigned in increasing order; after `v` is placed, every
//! pair summing to `v` is known, so `R_C(v) = R_D(v)` can be checked at once.

use serde::Serialize;

use super::exhaustive::mask_rep;
use crate::error::{invalid, Error, Result};
use crate::sets::{IntSet, IntersectionSpec, PartitionPair};
use crate::VERSION;

/// Default largest `N` accepted by [`progression_search`].
pub const DEFAULT_PROGRESSION_CAP: usize = 1024;

/// Largest `N` for [`progression_exhaustive`].
pub const EXHAUSTIVE_PROGRESSION_CAP: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    C,
    D,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProgressionReport {
    pub version: &'static str,
    pub spec: IntersectionSpec,
    pub n: usize,
    pub cap: usize,
    /// Largest `n*` such that some admissible partition has `R_C = R_D` on `[0, n*]`.
    pub n_star: usize,
    pub complete: bool,
    /// First partition found reaching `n*`, with points past `n*` put in `C`
    /// (or both sets where prescribed).
    pub witness: PartitionPair,
    pub nodes: u64,
    pub pruned: u64,
}

struct Dfs<'a> {
    spec: &'a IntersectionSpec,
    n: usize,
    rc: Vec<u32>,
    rd: Vec<u32>,
    c: Vec<usize>,
    d: Vec<usize>,
    path: Vec<Slot>,
    best: Option<usize>,
    best_path: Vec<Slot>,
    nodes: u64,
    pruned: u64,
}

fn add(counts: &mut [u32], members: &[usize], v: usize) {
    for &x in members {
        match counts.get_mut(x + v) {
            Some(slot) => *slot += 1,
            None => break,
        }
    }
}

fn sub(counts: &mut [u32], members: &[usize], v: usize) {
    for &x in members {
        match counts.get_mut(x + v) {
            Some(slot) => *slot -= 1,
            None => break,
        }
    }
}

impl Dfs<'_> {
    fn options(&self, v: usize) -> &'static [Slot] {
        if self.spec.contains(v) {
            &[Slot::Both]
        } else if v == 0 {
            &[Slot::C]
        } else {
            &[Slot::C, Slot::D]
        }
    }

    fn place(&mut self, v: usize, slot: Slot) {
        if slot != Slot::D {
            add(&mut self.rc, &self.c, v);
            self.c.push(v);
        }
        if slot != Slot::C {
            add(&mut self.rd, &self.d, v);
            self.d.push(v);
        }
        self.path.push(slot);
    }

    fn unplace(&mut self, v: usize, slot: Slot) {
        self.path.pop();
        if slot != Slot::C {
            self.d.pop();
            sub(&mut self.rd, &self.d, v);
        }
        if slot != Slot::D {
            self.c.pop();
            sub(&mut self.rc, &self.c, v);
        }
    }

    /// Returns true once the whole range has been matched.
    fn run(&mut self, v: usize) -> bool {
        if v > self.n {
            return true;
        }
        for &slot in self.options(v) {
            self.nodes += 1;
            self.place(v, slot);
            if self.rc[v] == self.rd[v] {
                if self.best.is_none_or(|b| v > b) {
                    self.best = Some(v);
                    self.best_path = self.path.clone();
                }
                if self.run(v + 1) {
                    self.unplace(v, slot);
                    return true;
                }
            } else {
                self.pruned += 1;
            }
            self.unplace(v, slot);
        }
        false
    }
}

fn require_periodic(spec: &IntersectionSpec) -> Result<()> {
    if !spec.is_periodic() {
        return Err(invalid("progression search needs a periodic overlap"));
    }
    Ok(())
}

fn assemble(spec: &IntersectionSpec, n: usize, path: &[Slot]) -> Result<PartitionPair> {
    let mut c = IntSet::new(n);
    let mut d = IntSet::new(n);
    for v in 0..=n {
        let slot = match path.get(v) {
            Some(&s) => s,
            None if spec.contains(v) => Slot::Both,
            None => Slot::C,
        };
        if slot != Slot::D {
            c.insert(v);
        }
        if slot != Slot::C {
            d.insert(v);
        }
    }
    PartitionPair::new(c, d, n, spec.clone())
}

/// Depth-first search over partitions of `[0, n]` consistent with `spec`,
/// trying `C` before `D` at each point.
pub fn progression_search(spec: &IntersectionSpec, n: usize, cap: usize) -> Result<ProgressionReport> {
    require_periodic(spec)?;
    if n == 0 {
        return Err(invalid("N must be positive"));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "progression N",
            requested: n,
            cap,
        });
    }
    let mut dfs = Dfs {
        spec,
        n,
        rc: vec![0; n + 1],
        rd: vec![0; n + 1],
        c: Vec::new(),
        d: Vec::new(),
        path: Vec::with_capacity(n + 1),
        best: None,
        best_path: Vec::new(),
        nodes: 0,
        pruned: 0,
    };
    let complete = dfs.run(0);
    // R(0) = 0 on both sides, so the point 0 always passes.
    let n_star = dfs.best.expect("placing 0 never fails");
    let witness = assemble(spec, n, &dfs.best_path)?;
    Ok(ProgressionReport {
        version: VERSION,
        spec: spec.clone(),
        n,
        cap,
        n_star,
        complete,
        witness,
        nodes: dfs.nodes,
        pruned: dfs.pruned,
    })
}

/// Brute-force counterpart of [`progression_search`]: the best prefix over
/// every admissible assignment, and how many assignments reach it.
pub fn progression_exhaustive(spec: &IntersectionSpec, n: usize) -> Result<(usize, u64)> {
    require_periodic(spec)?;
    if n == 0 {
        return Err(invalid("N must be positive"));
    }
    if n > EXHAUSTIVE_PROGRESSION_CAP {
        return Err(Error::CapExceeded {
            what: "exhaustive progression N",
            requested: n,
            cap: EXHAUSTIVE_PROGRESSION_CAP,
        });
    }
    let shared = (0..=n).filter(|&v| spec.contains(v)).fold(0u64, |acc, v| acc | 1 << v);
    let free: Vec<usize> = (1..=n).filter(|&v| shared >> v & 1 == 0).collect();
    if free.len() > 30 {
        return Err(Error::CapExceeded {
            what: "free points",
            requested: free.len(),
            cap: 30,
        });
    }
    let base_c = shared | 1;
    let (mut best, mut count) = (0, 0u64);
    for choice in 0u64..1 << free.len() {
        let (mut c, mut d) = (base_c, shared);
        for (j, &v) in free.iter().enumerate() {
            if choice >> j & 1 == 1 {
                c |= 1 << v;
            } else {
                d |= 1 << v;
            }
        }
        let reach = (1..=n)
            .find(|&k| mask_rep(c, n, k) != mask_rep(d, n, k))
            .map_or(n, |k| k - 1);
        if reach > best {
            (best, count) = (reach, 1);
        } else if reach == best {
            count += 1;
        }
    }
    Ok((best, count))
}
