//! All-solutions model enumeration for the constraint sets: chronological
//! DPLL with unit propagation, emitting every total satisfying assignment
//! exactly once in lexicographic order (false before true).

use std::io::{BufRead, Write};

use super::constraints::ConstraintSet;
use super::SignatureAssignment;

struct Search<'a, F: FnMut(u64)> {
    num_vars: usize,
    clauses: &'a [Vec<i32>],
    /// Clause indices watching each literal occurrence.
    occ_pos: Vec<Vec<u32>>,
    occ_neg: Vec<Vec<u32>>,
    assign: Vec<i8>,
    n_true: Vec<u32>,
    n_unassigned: Vec<u32>,
    trail: Vec<u32>,
    emit: F,
}

impl<'a, F: FnMut(u64)> Search<'a, F> {
    /// Assign var to value, updating clause counters; false on conflict.
    fn assign(&mut self, var: usize, value: bool) -> bool {
        debug_assert_eq!(self.assign[var], 0);
        self.assign[var] = if value { 1 } else { -1 };
        self.trail.push(var as u32);
        let (sat, unsat) = if value {
            (&self.occ_pos[var], &self.occ_neg[var])
        } else {
            (&self.occ_neg[var], &self.occ_pos[var])
        };
        for &c in sat {
            self.n_true[c as usize] += 1;
            self.n_unassigned[c as usize] -= 1;
        }
        let mut ok = true;
        for &c in unsat {
            let c = c as usize;
            self.n_unassigned[c] -= 1;
            if self.n_true[c] == 0 && self.n_unassigned[c] == 0 {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, var: usize) {
        let value = self.assign[var] == 1;
        self.assign[var] = 0;
        let (sat, unsat) = if value {
            (&self.occ_pos[var], &self.occ_neg[var])
        } else {
            (&self.occ_neg[var], &self.occ_pos[var])
        };
        for &c in sat {
            self.n_true[c as usize] -= 1;
            self.n_unassigned[c as usize] += 1;
        }
        for &c in unsat {
            self.n_unassigned[c as usize] += 1;
        }
    }

    /// Exhaustive unit propagation of everything on the trail from position
    /// `qhead` on. Returns false on conflict; the trail records all implied
    /// assignments for the caller to undo.
    fn propagate(&mut self, mut qhead: usize) -> bool {
        while qhead < self.trail.len() {
            let var = self.trail[qhead] as usize;
            qhead += 1;
            let positive = self.assign[var] == 1;
            let n_occ = if positive {
                self.occ_neg[var].len()
            } else {
                self.occ_pos[var].len()
            };
            for i in 0..n_occ {
                let c = if positive {
                    self.occ_neg[var][i]
                } else {
                    self.occ_pos[var][i]
                } as usize;
                if self.n_true[c] > 0 {
                    continue;
                }
                match self.n_unassigned[c] {
                    0 => return false,
                    1 => {
                        let l = *self.clauses[c]
                            .iter()
                            .find(|&&l| self.assign[l.unsigned_abs() as usize - 1] == 0)
                            .expect("counter said one literal is unassigned");
                        let v = l.unsigned_abs() as usize - 1;
                        if !self.assign(v, l > 0) {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = *self.trail.last().unwrap() as usize;
            self.trail.pop();
            self.unassign(v);
        }
    }

    fn dfs(&mut self) {
        let Some(var) = (0..self.num_vars).find(|&v| self.assign[v] == 0) else {
            let mut bits = 0u64;
            for v in 0..self.num_vars {
                if self.assign[v] == 1 {
                    bits |= 1 << v;
                }
            }
            (self.emit)(bits);
            return;
        };
        for value in [false, true] {
            let mark = self.trail.len();
            if self.assign(var, value) && self.propagate(mark) {
                self.dfs();
            }
            self.undo_to(mark);
        }
    }
}

/// Calls `emit` once per satisfying total assignment of `cs`, in
/// lexicographic order of the assignment vector (variable 0 varies slowest,
/// false before true).
pub fn visit_models<F: FnMut(u64)>(cs: &ConstraintSet, emit: F) {
    assert!(cs.num_vars <= 64, "model enumeration limited to 64 variables");
    if cs.clauses.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut occ_pos = vec![Vec::new(); cs.num_vars];
    let mut occ_neg = vec![Vec::new(); cs.num_vars];
    for (i, cl) in cs.clauses.iter().enumerate() {
        for &l in cl {
            let v = l.unsigned_abs() as usize - 1;
            if l > 0 {
                occ_pos[v].push(i as u32);
            } else {
                occ_neg[v].push(i as u32);
            }
        }
    }
    let mut search = Search {
        num_vars: cs.num_vars,
        clauses: &cs.clauses,
        occ_pos,
        occ_neg,
        assign: vec![0; cs.num_vars],
        n_true: vec![0; cs.clauses.len()],
        n_unassigned: cs.clauses.iter().map(|c| c.len() as u32).collect(),
        trail: Vec::new(),
        emit,
    };
    // Seed top-level units, then propagate everything before branching.
    let mut roots = true;
    for cl in cs.clauses.iter() {
        if cl.len() == 1 {
            let v = cl[0].unsigned_abs() as usize - 1;
            match (search.assign[v], cl[0] > 0) {
                (0, val) => {
                    if !search.assign(v, val) {
                        roots = false;
                        break;
                    }
                }
                (1, true) | (-1, false) => {}
                _ => {
                    roots = false;
                    break;
                }
            }
        }
    }
    if roots && search.propagate(0) {
        search.dfs();
    }
}

/// Collects the satisfying assignments as `SignatureAssignment`s.
pub fn enumerate_signatures(cs: &ConstraintSet) -> Vec<SignatureAssignment> {
    let mut out = Vec::new();
    visit_models(cs, |bits| {
        out.push(SignatureAssignment {
            bits,
            num_vars: cs.num_vars,
        })
    });
    out
}

/// DIMACS CNF export for cross-checking with external solvers.
pub fn write_dimacs<W: Write>(cs: &ConstraintSet, mut w: W) -> std::io::Result<()> {
    writeln!(w, "p cnf {} {}", cs.num_vars, cs.clauses.len())?;
    for cl in &cs.clauses {
        for l in cl {
            write!(w, "{l} ")?;
        }
        writeln!(w, "0")?;
    }
    Ok(())
}

/// Sidecar map `variable -> zero set of its cocircuit` (1-based on both sides).
pub fn write_var_map<W: Write>(ext: &super::Extender, mut w: W) -> std::io::Result<()> {
    for (v, mask) in ext.facet_zero_masks().iter().enumerate() {
        let elems: Vec<String> = (0..32)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| (b + 1).to_string())
            .collect();
        writeln!(w, "{} {}", v + 1, elems.join(" "))?;
    }
    Ok(())
}

/// Parses externally produced models: one satisfying assignment per line as
/// signed 1-based variable numbers (a trailing 0 is ignored).
pub fn import_models<R: BufRead>(r: R, num_vars: usize) -> std::io::Result<Vec<SignatureAssignment>> {
    let mut out = Vec::new();
    for line in r.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('c') {
            continue;
        }
        let mut bits = 0u64;
        let mut any = false;
        for tok in line.split_whitespace() {
            let Ok(v) = tok.parse::<i64>() else { continue };
            if v == 0 {
                continue;
            }
            any = true;
            if v > 0 {
                bits |= 1 << (v - 1);
            }
        }
        if any {
            out.push(SignatureAssignment { bits, num_vars });
        }
    }
    Ok(out)
}
