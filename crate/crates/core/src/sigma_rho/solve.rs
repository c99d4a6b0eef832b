use rustc_hash::FxHashMap;

use super::classes::{enumerate_classes, ClassFamily};
use super::{Objective, SigmaRhoSpec};
use crate::cut::check_permutation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest graph accepted by [`brute_force_sigma_rho`].
pub const BRUTE_FORCE_LIMIT: usize = 18;

/// An optimal (σ,ρ)-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaRhoSolution {
    pub size: usize,
    pub witness: VertexSet,
}

/// Checks the definition directly, with uncapped counts.
pub fn is_sigma_rho_set(g: &Graph, spec: &SigmaRhoSpec, x: &VertexSet) -> bool {
    (0..g.n()).all(|v| spec.accepts(x.contains(v), g.neighbors(v).intersection_len(x)))
}

fn improves(objective: Objective, candidate: u32, incumbent: u32) -> bool {
    match objective {
        Objective::Maximize => candidate > incumbent,
        Objective::Minimize => candidate < incumbent,
    }
}

/// Tries all `2^n` subsets. Ties go to the subset with the smallest bitmask.
pub fn brute_force_sigma_rho(g: &Graph, spec: &SigmaRhoSpec) -> Result<Option<SigmaRhoSolution>> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::ScaleGuard {
            what: "brute_force_sigma_rho",
            limit: BRUTE_FORCE_LIMIT,
            actual: n,
        });
    }
    let adj = g.adjacency_masks();
    let mut best: Option<u64> = None;
    for mask in 0u64..1 << n {
        let feasible = (0..n).all(|v| {
            let count = (adj[v] & mask).count_ones() as usize;
            spec.accepts((mask >> v) & 1 == 1, count)
        });
        if feasible && best.is_none_or(|b| improves(spec.objective(), mask.count_ones(), b.count_ones())) {
            best = Some(mask);
        }
    }
    Ok(best.map(|mask| SigmaRhoSolution {
        size: mask.count_ones() as usize,
        witness: VertexSet::from_mask(n, mask),
    }))
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    value: u32,
    prev: (u32, u32),
    chosen: bool,
}

/// Optimal (σ,ρ)-set by dynamic programming over the prefix cuts of `order`.
///
/// At cut `i` a table entry `(c, o)` stands for a partial solution `X ∩ A_i`
/// in class `c` of `≡_{A_i}^d` combined with a future part `X ∩ Ā_i` in class
/// `o` of `≡_{Ā_i}^d`. Each vertex's constraint is checked once, when it moves
/// into `A`, from the capped counts carried by the two classes. Returns `None`
/// when no (σ,ρ)-set exists.
pub fn solve_sigma_rho(g: &Graph, order: &[usize], spec: &SigmaRhoSpec) -> Result<Option<SigmaRhoSolution>> {
    let n = g.n();
    check_permutation(n, order)?;
    let d = spec.d();
    let mut prefix = VertexSet::new(n);
    let mut inner: Vec<ClassFamily> = Vec::with_capacity(n + 1);
    let mut outer: Vec<ClassFamily> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        if i > 0 {
            prefix.insert(order[i - 1]);
        }
        inner.push(enumerate_classes(g, &prefix, d));
        outer.push(enumerate_classes(g, &prefix.complement(), d));
    }

    let mut tables: Vec<FxHashMap<(u32, u32), Entry>> = Vec::with_capacity(n + 1);
    let mut start = FxHashMap::default();
    start.insert(
        (0, 0),
        Entry {
            value: 0,
            prev: (0, 0),
            chosen: false,
        },
    );
    tables.push(start);

    for (i, &v) in order.iter().enumerate() {
        let nv = g.neighbors(v);
        let (inner_now, inner_next) = (&inner[i], &inner[i + 1]);
        let (outer_now, outer_next) = (&outer[i], &outer[i + 1]);

        // Inner class after placing v (or not), and v's capped count from the inner part.
        let inner_step: Vec<([u32; 2], usize)> = inner_now
            .representatives()
            .iter()
            .map(|rep| {
                let mut with_v = rep.clone();
                with_v.insert(v);
                let succ = [inner_next.class_of(g, rep) as u32, inner_next.class_of(g, &with_v) as u32];
                (succ, nv.intersection_len(rep).min(d))
            })
            .collect();

        // Outer classes at cut i+1 grouped by the outer class at cut i they refine.
        let mut preimages: FxHashMap<(u32, bool), Vec<(u32, usize)>> = FxHashMap::default();
        for (o_next, rep) in outer_next.representatives().iter().enumerate() {
            let from_outer = nv.intersection_len(rep).min(d);
            for chosen in [false, true] {
                let mut old = rep.clone();
                if chosen {
                    old.insert(v);
                }
                let o = outer_now.class_of(g, &old) as u32;
                preimages.entry((o, chosen)).or_default().push((o_next as u32, from_outer));
            }
        }

        let mut states: Vec<(&(u32, u32), &Entry)> = tables[i].iter().collect();
        states.sort_unstable_by_key(|(k, _)| **k);
        let mut next: FxHashMap<(u32, u32), Entry> = FxHashMap::default();
        for (&(c, o), entry) in states {
            let (succ, from_inner) = inner_step[c as usize];
            for chosen in [false, true] {
                let Some(targets) = preimages.get(&(o, chosen)) else {
                    continue;
                };
                let value = entry.value + u32::from(chosen);
                let c_next = succ[usize::from(chosen)];
                for &(o_next, from_outer) in targets {
                    if !spec.accepts(chosen, (from_inner + from_outer).min(d)) {
                        continue;
                    }
                    let candidate = Entry {
                        value,
                        prev: (c, o),
                        chosen,
                    };
                    next.entry((c_next, o_next))
                        .and_modify(|e| {
                            if improves(spec.objective(), value, e.value) {
                                *e = candidate;
                            }
                        })
                        .or_insert(candidate);
                }
            }
        }
        tables.push(next);
    }

    let Some(mut entry) = tables[n].get(&(0, 0)).copied() else {
        return Ok(None);
    };
    let size = entry.value as usize;
    let mut witness = VertexSet::new(n);
    for i in (0..n).rev() {
        if entry.chosen {
            witness.insert(order[i]);
        }
        if i > 0 {
            entry = tables[i][&entry.prev];
        }
    }
    Ok(Some(SigmaRhoSolution { size, witness }))
}
