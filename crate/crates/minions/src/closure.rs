//! Exact finite-arity closure computation.
//!
//! Three composition operators drive everything here, each producing an
//! exact arity-`m` slice:
//!
//! * [`right_compose_slice`] — `F·C`, all compositions `f(g₁,…,gₙ)` with the
//!   inner functions drawn from a clone's `m`-ary slice;
//! * [`left_close`] — the least superset of a set of `m`-ary functions
//!   closed under pointwise application of the given generators;
//! * [`sm_closure`] — the class generated by a finite set under minors and
//!   pointwise ternary majority, obtained as the majority closure of the
//!   generators' `m`-ary minors;
//! * [`stable_closure`] — the general form `C₂·(F·C₁)`.
//!
//! Closing under `μ` alone admits a quadratic-time shortcut: a set of
//! functions (viewed as bit tuples indexed by rows) is majority-closed
//! exactly when it contains every table that agrees with some member on
//! every *pair* of rows, so one pass over the candidate space computes the
//! closure without iterating to a fixpoint.  [`left_close`] uses that
//! pairwise pass for `μ` and plain tuple enumeration for other generators.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::clones::{clone_members, CloneId};
use crate::predicates::ENUM_MAX_ARITY;
use crate::truthtable::{default_max_arity, maj3, named, TruthTable};

/// Tuple-enumeration budget for [`right_compose_slice`].
pub const COMPOSITION_BUDGET: u128 = 100_000_000;

/// Errors from closure computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosureError {
    /// Slice computations enumerate all tables and are capped at arity 4.
    #[error("slice arity {arity} outside 1..={max}")]
    ArityOutOfRange { arity: u8, max: u8 },
    /// The tuple space of a right composition is too large to enumerate.
    #[error("right composition would enumerate {candidates} tuples, over the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    /// The clone has no recorded generating set.
    #[error("clone {clone} carries no generating set")]
    MissingGenerators { clone: CloneId },
    /// A generator's arity exceeds the configured maximum.
    #[error("generator arity {arity} exceeds the configured maximum {max}")]
    GeneratorArity { arity: u8, max: u8 },
    /// A table of the wrong arity was supplied to a fixed-arity set.
    #[error("expected arity {expected}, got a table of arity {got}")]
    MixedArities { expected: u8, got: u8 },
}

/// A finite set of functions of one fixed arity.
///
/// Iteration and serialization are in increasing table order, so every
/// closure result prints identically across runs.  Serializes as the sorted
/// list of `"n:bits"` strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FnSet {
    arity: u8,
    members: BTreeSet<TruthTable>,
}

impl FnSet {
    /// The empty set of `arity`-ary functions.
    pub fn new(arity: u8) -> FnSet {
        FnSet {
            arity,
            members: BTreeSet::new(),
        }
    }

    /// Collects tables, rejecting any whose arity differs.
    pub fn from_tables(
        arity: u8,
        tables: impl IntoIterator<Item = TruthTable>,
    ) -> Result<FnSet, ClosureError> {
        let mut out = FnSet::new(arity);
        for t in tables {
            if t.arity() != arity {
                return Err(ClosureError::MixedArities {
                    expected: arity,
                    got: t.arity(),
                });
            }
            out.members.insert(t);
        }
        Ok(out)
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &TruthTable) -> bool {
        self.members.contains(t)
    }

    /// Inserts a table; returns whether it was new.
    ///
    /// # Panics
    ///
    /// Panics if the table's arity differs from the set's.
    pub fn insert(&mut self, t: TruthTable) -> bool {
        assert_eq!(
            t.arity(),
            self.arity,
            "inserted table arity must match the set arity"
        );
        self.members.insert(t)
    }

    /// Members in increasing table order.
    pub fn iter(&self) -> impl Iterator<Item = &TruthTable> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &FnSet) -> bool {
        self.arity == other.arity && self.members.is_subset(&other.members)
    }
}

impl IntoIterator for FnSet {
    type Item = TruthTable;
    type IntoIter = std::collections::btree_set::IntoIter<TruthTable>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

impl<'a> IntoIterator for &'a FnSet {
    type Item = &'a TruthTable;
    type IntoIter = std::collections::btree_set::Iter<'a, TruthTable>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for FnSet {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.members.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            write!(out, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for FnSet {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.members.len()))?;
        for t in &self.members {
            seq.serialize_element(&t.to_string())?;
        }
        seq.end()
    }
}

fn check_slice_arity(m: u8) -> Result<(), ClosureError> {
    if (1..=ENUM_MAX_ARITY).contains(&m) {
        Ok(())
    } else {
        Err(ClosureError::ArityOutOfRange {
            arity: m,
            max: ENUM_MAX_ARITY,
        })
    }
}

/// The exact `m`-ary slice of `F·C`: every composition `f(g₁,…,gₙ)` of a
/// member of `fns` with an `n`-tuple over the clone's `m`-ary slice.
///
/// Because clones contain all projections and are closed under minors, this
/// single layer of composition is the full slice of the right-composition
/// class.  The tuple space is capped by [`COMPOSITION_BUDGET`].
pub fn right_compose_slice(
    fns: &[TruthTable],
    c: CloneId,
    m: u8,
) -> Result<FnSet, ClosureError> {
    check_slice_arity(m)?;
    let slice = clone_members(c, m).expect("arity already validated");
    let words: Vec<u64> = slice
        .iter()
        .map(|t| t.as_word().expect("slice arity is at most 4"))
        .collect();
    let mut candidates: u128 = 0;
    for f in fns {
        candidates = candidates
            .saturating_add((words.len() as u128).saturating_pow(f.arity() as u32));
    }
    if candidates > COMPOSITION_BUDGET {
        return Err(ClosureError::BudgetExceeded {
            candidates,
            budget: COMPOSITION_BUDGET,
        });
    }

    let rows = 1u32 << m;
    let mut out = FnSet::new(m);
    for f in fns {
        let n = f.arity() as usize;
        if words.is_empty() {
            continue;
        }
        let mut idx = vec![0usize; n];
        loop {
            let mut word = 0u64;
            for r in 0..rows {
                let mut g_row = 0u32;
                for &i in &idx {
                    g_row = (g_row << 1) | ((words[i] >> r) & 1) as u32;
                }
                if f.get_row(g_row) {
                    word |= 1u64 << r;
                }
            }
            out.insert(TruthTable::from_word(m, word));
            // Odometer over the tuple space.
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < words.len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Least superset of `start` closed under pointwise application of every
/// generator to tuples of members.
///
/// Majority generators are closed with the pairwise-agreement pass; all
/// other generators are applied by tuple enumeration, so the cost per round
/// is `|S|^k` for a `k`-ary generator.  Terminates because the table space
/// at the fixed arity is finite.
pub fn left_close(start: &FnSet, gens: &[TruthTable]) -> FnSet {
    let m = start.arity();
    let maj = named::maj();
    let has_maj = gens.iter().any(|g| *g == maj);
    let others: Vec<&TruthTable> = gens.iter().filter(|g| **g != maj).collect();

    if m <= ENUM_MAX_ARITY {
        let mut cur: BTreeSet<u64> = start
            .iter()
            .map(|t| t.as_word().expect("arity at most 4"))
            .collect();
        loop {
            let before = cur.len();
            if has_maj {
                cur = majority_close_words(m, &cur);
            }
            apply_generators_words(m, &mut cur, &others);
            if cur.len() == before {
                break;
            }
        }
        let mut out = FnSet::new(m);
        for w in cur {
            out.insert(TruthTable::from_word(m, w));
        }
        out
    } else {
        let mut cur: BTreeSet<TruthTable> = start.iter().cloned().collect();
        loop {
            let mut fresh: Vec<TruthTable> = Vec::new();
            if has_maj {
                let members: Vec<&TruthTable> = cur.iter().collect();
                for a in &members {
                    for b in &members {
                        for c in &members {
                            let t = maj3(a, b, c).expect("uniform arity");
                            if !cur.contains(&t) {
                                fresh.push(t);
                            }
                        }
                    }
                }
            }
            for g in &others {
                let members: Vec<&TruthTable> = cur.iter().collect();
                let k = g.arity() as usize;
                if members.is_empty() {
                    continue;
                }
                let mut idx = vec![0usize; k];
                loop {
                    let args: Vec<TruthTable> =
                        idx.iter().map(|&i| members[i].clone()).collect();
                    let t = g.compose(&args).expect("uniform arity");
                    if !cur.contains(&t) {
                        fresh.push(t);
                    }
                    let mut pos = k;
                    loop {
                        if pos == 0 {
                            break;
                        }
                        pos -= 1;
                        idx[pos] += 1;
                        if idx[pos] < members.len() {
                            break;
                        }
                        idx[pos] = 0;
                    }
                    if idx.iter().all(|&i| i == 0) {
                        break;
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            cur.extend(fresh);
        }
        let mut out = FnSet::new(m);
        for t in cur {
            out.insert(t);
        }
        out
    }
}

/// One pass of the pairwise-agreement closure for pointwise majority: the
/// result holds every table whose restriction to each pair of rows matches
/// some member's.
fn majority_close_words(m: u8, words: &BTreeSet<u64>) -> BTreeSet<u64> {
    if words.is_empty() {
        return BTreeSet::new();
    }
    let rows = 1u32 << m;
    let pair_count = (rows * (rows - 1) / 2) as usize;
    let mut allowed = vec![0u8; pair_count];
    for &t in words {
        let mut p = 0;
        for i in 0..rows {
            for j in i + 1..rows {
                let b = (((t >> i) & 1) << 1) | ((t >> j) & 1);
                allowed[p] |= 1u8 << b;
                p += 1;
            }
        }
    }
    let mut out = BTreeSet::new();
    'candidates: for t in 0..(1u64 << rows) {
        let mut p = 0;
        for i in 0..rows {
            for j in i + 1..rows {
                let b = (((t >> i) & 1) << 1) | ((t >> j) & 1);
                if allowed[p] & (1u8 << b) == 0 {
                    continue 'candidates;
                }
                p += 1;
            }
        }
        out.insert(t);
    }
    out
}

/// Applies each generator to all tuples over the current set, inserting the
/// pointwise results.  Repeats until no generator adds anything.
fn apply_generators_words(m: u8, cur: &mut BTreeSet<u64>, gens: &[&TruthTable]) {
    if gens.is_empty() || cur.is_empty() {
        return;
    }
    let rows = 1u32 << m;
    loop {
        let members: Vec<u64> = cur.iter().copied().collect();
        let mut fresh: Vec<u64> = Vec::new();
        for g in gens {
            let k = g.arity() as usize;
            let mut idx = vec![0usize; k];
            loop {
                let mut word = 0u64;
                for r in 0..rows {
                    let mut g_row = 0u32;
                    for &i in &idx {
                        g_row = (g_row << 1) | ((members[i] >> r) & 1) as u32;
                    }
                    if g.get_row(g_row) {
                        word |= 1u64 << r;
                    }
                }
                if !cur.contains(&word) {
                    fresh.push(word);
                }
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < members.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
                if idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        if fresh.is_empty() {
            return;
        }
        cur.extend(fresh);
    }
}

/// The exact `m`-ary slice of the class generated by `fns` under minors and
/// pointwise majority: the majority closure of all `m`-ary minors of the
/// generators.
pub fn sm_closure(fns: &[TruthTable], m: u8) -> Result<FnSet, ClosureError> {
    check_slice_arity(m)?;
    let max = default_max_arity();
    let mut start = FnSet::new(m);
    for f in fns {
        if f.arity() > max {
            return Err(ClosureError::GeneratorArity {
                arity: f.arity(),
                max,
            });
        }
        for g in f.all_minors(m).expect("arity validated") {
            start.insert(g);
        }
    }
    Ok(left_close(&start, &[named::maj()]))
}

/// The exact `m`-ary slice of `C₂·(F·C₁)`, the least class containing `F`
/// that is closed under right composition with `C₁` and left composition
/// with `C₂`.  Requires a recorded generating set for `C₂`.
pub fn stable_closure(
    fns: &[TruthTable],
    c1: CloneId,
    c2: CloneId,
    m: u8,
) -> Result<FnSet, ClosureError> {
    let gens = c2
        .generators()
        .ok_or(ClosureError::MissingGenerators { clone: c2 })?;
    let right = right_compose_slice(fns, c1, m)?;
    Ok(left_close(&right, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{enumerate_class, ClassId};
    use crate::truthtable::named;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn set(arity: u8, tables: &[&str]) -> FnSet {
        FnSet::from_tables(arity, tables.iter().map(|s| t(s))).unwrap()
    }

    #[test]
    fn fnset_basics() {
        let mut s = FnSet::new(2);
        assert!(s.is_empty());
        assert!(s.insert(named::and()));
        assert!(!s.insert(named::and()));
        assert!(s.contains(&named::and()));
        assert_eq!(s.len(), 1);
        assert!(matches!(
            FnSet::from_tables(2, vec![named::maj()]),
            Err(ClosureError::MixedArities {
                expected: 2,
                got: 3
            })
        ));
    }

    #[test]
    #[should_panic(expected = "arity must match")]
    fn fnset_insert_rejects_other_arities() {
        FnSet::new(2).insert(named::maj());
    }

    #[test]
    fn fnset_prints_sorted_lines() {
        let s = set(2, &["2:0111", "2:0001", "2:0110"]);
        assert_eq!(s.to_string(), "2:0001\n2:0110\n2:0111");
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"["2:0001","2:0110","2:0111"]"#
        );
        assert_eq!(FnSet::new(3).to_string(), "");
    }

    #[test]
    fn right_composition_of_and_with_projections() {
        let got = right_compose_slice(&[named::and()], CloneId::Ic, 2).unwrap();
        let minors = FnSet::from_tables(2, named::and().all_minors(2).unwrap()).unwrap();
        assert_eq!(got, minors);
        assert_eq!(got, set(2, &["2:0001", "2:0011", "2:0101"]));
    }

    #[test]
    fn right_composition_with_identity_reproduces_the_slice() {
        for c in [CloneId::Ic, CloneId::SM, CloneId::McU, CloneId::Omega] {
            for m in 1..=3u8 {
                let got = right_compose_slice(&[named::id()], c, m).unwrap();
                assert_eq!(got, clone_members(c, m).unwrap(), "{c} at arity {m}");
            }
        }
    }

    #[test]
    fn right_composition_diagonal_collapse() {
        // The only unary self-dual 0-preserving function is the identity, so
        // composing + with it yields +(a,a) = const 0.
        let got = right_compose_slice(&[named::xor()], CloneId::Sc, 1).unwrap();
        assert_eq!(got, set(1, &["1:00"]));
    }

    #[test]
    fn right_composition_budget_guard() {
        let err = right_compose_slice(&[named::maj()], CloneId::Omega, 4).unwrap_err();
        assert!(matches!(err, ClosureError::BudgetExceeded { .. }));
        let err = right_compose_slice(&[named::maj()], CloneId::Omega, 5).unwrap_err();
        assert!(matches!(err, ClosureError::ArityOutOfRange { .. }));
    }

    #[test]
    fn left_close_fixed_points() {
        let s = set(2, &["2:0011", "2:0101", "2:0001"]);
        assert_eq!(left_close(&s, &[named::maj()]), s);
        let empty = FnSet::new(2);
        assert_eq!(left_close(&empty, &[named::maj()]), empty);
        let no_gens = set(2, &["2:0110"]);
        assert_eq!(left_close(&no_gens, &[]), no_gens);
    }

    #[test]
    fn left_close_majority_reaches_parity() {
        // μ(a↛b, b↛a, 1) = a+b.
        let s = set(2, &["2:0010", "2:0100", "2:1111"]);
        let closed = left_close(&s, &[named::maj()]);
        assert!(closed.contains(&t("2:0110")));
    }

    #[test]
    fn sm_closure_examples() {
        let mcu2 = sm_closure(&[named::and()], 2).unwrap();
        assert_eq!(mcu2, set(2, &["2:0001", "2:0011", "2:0101"]));
        assert_eq!(sm_closure(&[], 2).unwrap(), FnSet::new(2));
        for m in 1..=3u8 {
            assert_eq!(
                sm_closure(&[named::maj()], m).unwrap(),
                enumerate_class(ClassId::from_name("SM").unwrap(), m).unwrap(),
                "majority generates the self-dual monotone slice at arity {m}"
            );
        }
    }

    #[test]
    fn sm_closure_is_monotone_and_idempotent() {
        let gens = [named::nimp(), named::xor()];
        for m in 1..=3u8 {
            let closed = sm_closure(&gens, m).unwrap();
            for f in &gens {
                for g in f.all_minors(m).unwrap() {
                    assert!(closed.contains(&g));
                }
            }
            let again: Vec<TruthTable> = closed.iter().cloned().collect();
            assert_eq!(sm_closure(&again, m).unwrap(), closed);
        }
    }

    #[test]
    fn sm_closure_is_arity_coherent() {
        let gens = [named::or(), named::nimp()];
        for m in 1..=3u8 {
            let big = sm_closure(&gens, m).unwrap();
            for m2 in 1..=m {
                let small = sm_closure(&gens, m2).unwrap();
                for f in big.iter() {
                    for g in f.all_minors(m2).unwrap() {
                        assert!(small.contains(&g), "minor {g} of {f} missing at {m2}");
                    }
                }
            }
        }
    }

    #[test]
    fn every_class_slice_is_a_closure_fixed_point() {
        for c in ClassId::all() {
            let gens: Vec<TruthTable> = enumerate_class(c, 3).unwrap().into_iter().collect();
            for m in 1..=3u8 {
                assert_eq!(
                    sm_closure(&gens, m).unwrap(),
                    enumerate_class(c, m).unwrap(),
                    "{} regenerated from its ternary slice at arity {m}",
                    c.name()
                );
            }
        }
    }

    #[test]
    fn stable_closure_examples() {
        let got = stable_closure(&[named::not()], CloneId::Ic, CloneId::S, 1).unwrap();
        assert_eq!(got, set(1, &["1:01", "1:10"]));

        let got = stable_closure(&[named::const0()], CloneId::Ic, CloneId::MU, 1).unwrap();
        assert_eq!(got, set(1, &["1:00"]));

        // With J on both sides the closure is the plain minor slice.
        let got = stable_closure(&[named::maj()], CloneId::Ic, CloneId::Ic, 2).unwrap();
        let minors = FnSet::from_tables(2, named::maj().all_minors(2).unwrap()).unwrap();
        assert_eq!(got, minors);

        assert!(matches!(
            stable_closure(&[named::and()], CloneId::Ic, CloneId::W, 2),
            Err(ClosureError::MissingGenerators { clone: CloneId::W })
        ));

        for m in 1..=3u8 {
            assert_eq!(
                stable_closure(&[named::nimp()], CloneId::Ic, CloneId::SM, m).unwrap(),
                sm_closure(&[named::nimp()], m).unwrap()
            );
        }
    }

    #[test]
    fn associativity_on_small_instances() {
        // For clones D ≤ C the slice of C·D collapses to C, so the two
        // bracketings (F·C)·D and F·(C·D) = F·C must produce the same slice.
        let cases = [
            (CloneId::Omega, CloneId::SM),
            (CloneId::S, CloneId::SM),
            (CloneId::Mc, CloneId::McU),
            (CloneId::McU, CloneId::Ic),
        ];
        for f in [named::xor(), named::nimp()] {
            for (c, d) in cases {
                for m in 1..=3u8 {
                    let fc = right_compose_slice(std::slice::from_ref(&f), c, m).unwrap();
                    let fc_list: Vec<TruthTable> = fc.iter().cloned().collect();
                    let fcd = right_compose_slice(&fc_list, d, m).unwrap();
                    assert_eq!(fcd, fc, "({f}·{c})·{d} at arity {m}");
                }
            }
        }
    }
}
