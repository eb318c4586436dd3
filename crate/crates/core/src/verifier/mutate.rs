//! Deliberate corruptions of records, used to show the engines can fail.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::catalog::{Engines, IdentityRecord};
use crate::exact::CycloRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Negate one term.
    SignFlip { term: usize },
    /// Multiply one term by `q^delta`.
    ExponentShift { term: usize, delta: i64 },
    /// Double one term.
    ScalarDouble { term: usize },
}

/// Applies `m` to the first equation of `record` and drops the others, so a
/// failure can only come from the corrupted equation.
pub fn mutate(record: &IdentityRecord, m: Mutation) -> IdentityRecord {
    let mut r = record.clone();
    r.expr.truncate(1);
    r.id = format!("{}~mutated", record.id);
    let terms = &mut r.expr[0].expr.terms;
    let (Mutation::SignFlip { term } | Mutation::ExponentShift { term, .. } | Mutation::ScalarDouble { term }) = m;
    let len = terms.len();
    let t = &mut terms[term % len];
    match m {
        Mutation::SignFlip { .. } => t.scalar = -t.scalar.clone(),
        Mutation::ExponentShift { delta, .. } => t.mono.q += delta,
        Mutation::ScalarDouble { .. } => t.scalar = &t.scalar * &CycloRational::from_int(2),
    }
    r
}

/// `count` distinct records checked by both engines, each with a random mutation.
pub fn random_mutations(catalog: &[IdentityRecord], count: usize, seed: u64) -> Vec<(IdentityRecord, Mutation)> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut pool: Vec<&IdentityRecord> = catalog.iter().filter(|r| r.engines == Engines::Both).collect();
    let mut out = Vec::new();
    while out.len() < count && !pool.is_empty() {
        let r = pool.swap_remove(rng.gen_range(0..pool.len()));
        let term = rng.gen_range(0..r.expr[0].expr.terms.len());
        let m = match rng.gen_range(0..3) {
            0 => Mutation::SignFlip { term },
            1 => Mutation::ExponentShift { term, delta: if rng.gen_bool(0.5) { 1 } else { -1 } },
            _ => Mutation::ScalarDouble { term },
        };
        out.push((mutate(r, m), m));
    }
    out
}
