//! Bounded-arity verification of the stability table.
//!
//! Every one of the 93 classes `K` carries two clones: the largest clone
//! `C` with `K ∗ C ⊆ K` (*right* stability — substituting a clone member
//! into the first argument of a class member) and the largest clone `D`
//! with `D · K ⊆ K` (*left* stability — applying a clone member on top of
//! a tuple of class members).  [`table2`] records both columns for every
//! class; [`verify_table2`] re-derives the table by exhaustive composition
//! up to an arity [`Bound`] and reports every disagreement.
//!
//! A bounded check can only miss counterexamples, never invent them: a
//! class stable under a clone is stable at every bound, while an unstable
//! pair needs the bound to be large enough for some counterexample.  At
//! bound `(3,3)` the table is reproduced exactly; at `(2,2)` a fixed set
//! of unstable pairs still looks stable (see the tests).
//!
//! [`verify_roster`] covers the other half of the headline claim: every
//! class slice is closed under minors and pointwise majority, and the 93
//! slice families are pairwise distinct.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::clones::{clone_leq, clone_mask, CloneId};
use crate::predicates::slices::{class_slice, space};
use crate::predicates::{class_member, ClassId};
use crate::truthtable::TruthTable;

/// Largest admissible component of a [`Bound`].
///
/// Slices are enumerable through arity 4, but the left-stability sweep
/// enumerates tuples of slice members and grows too fast past 3; the table
/// is already exact there.
pub const MAX_BOUND: u8 = 3;

/// Errors from the verification interfaces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    /// A bound component lies outside `1..=MAX_BOUND`.
    #[error("bound ({k},{m}) outside 1..={max} per component")]
    BoundOutOfRange { k: u8, m: u8, max: u8 },
    /// A bound string was not of the form `k,m`.
    #[error("bound must be written as `k,m`, got {input:?}")]
    BoundSyntax { input: String },
    /// A roster-verification arity outside the enumerable range.
    #[error("roster verification supports arities 1..={max}, got {arity}")]
    ArityOutOfRange { arity: u8, max: u8 },
    /// Stable-class listings exist only for left clones containing the
    /// majority clone; below it the 93-class roster is not exhaustive.
    #[error("left clone {clone} does not contain the self-dual monotone clone")]
    LeftCloneBelowMajority { clone: CloneId },
}

/// Arity bound for a stability sweep: clone members of arity up to `k`
/// composed with class members of arity up to `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    k: u8,
    m: u8,
}

impl Bound {
    pub fn new(k: u8, m: u8) -> Result<Bound, VerifyError> {
        if !(1..=MAX_BOUND).contains(&k) || !(1..=MAX_BOUND).contains(&m) {
            return Err(VerifyError::BoundOutOfRange {
                k,
                m,
                max: MAX_BOUND,
            });
        }
        Ok(Bound { k, m })
    }

    /// Largest clone-member arity swept.
    pub fn k(self) -> u8 {
        self.k
    }

    /// Largest class-member arity swept.
    pub fn m(self) -> u8 {
        self.m
    }
}

impl Default for Bound {
    /// The exact bound: the full table is reproduced here.
    fn default() -> Bound {
        Bound {
            k: MAX_BOUND,
            m: MAX_BOUND,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.m)
    }
}

impl FromStr for Bound {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Bound, VerifyError> {
        let syntax = || VerifyError::BoundSyntax {
            input: s.to_owned(),
        };
        let (k, m) = s.split_once(',').ok_or_else(syntax)?;
        let k = k.trim().parse().map_err(|_| syntax())?;
        let m = m.trim().parse().map_err(|_| syntax())?;
        Bound::new(k, m)
    }
}

/// Outcome of one stability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityVerdict {
    /// No counterexample exists at the given bound.
    HoldsAtBound(Bound),
    /// An explicit composition leaving the class: `composite` is `outer`
    /// applied to `inner` and is not a class member.  For a right check
    /// `outer` is the class member and `inner` the single clone member
    /// substituted into its first argument; for a left check `outer` is
    /// the clone member and `inner` the tuple of class members.
    Counterexample {
        outer: TruthTable,
        inner: Vec<TruthTable>,
        composite: TruthTable,
    },
}

impl StabilityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, StabilityVerdict::HoldsAtBound(_))
    }
}

impl Serialize for StabilityVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            StabilityVerdict::HoldsAtBound(bound) => {
                let mut s = serializer.serialize_struct("StabilityVerdict", 2)?;
                s.serialize_field("status", "stable-at-bound")?;
                s.serialize_field("bound", bound)?;
                s.end()
            }
            StabilityVerdict::Counterexample {
                outer,
                inner,
                composite,
            } => {
                let mut s = serializer.serialize_struct("StabilityVerdict", 4)?;
                s.serialize_field("status", "counterexample")?;
                s.serialize_field("outer", outer)?;
                s.serialize_field("inner", inner)?;
                s.serialize_field("composite", composite)?;
                s.end()
            }
        }
    }
}

/// Whether a table of `h`'s arity belongs to the class: slice lookup where
/// a slice exists, predicate evaluation above that.
fn in_class(class: ClassId, h: &TruthTable) -> bool {
    match h.as_word() {
        Some(word) if h.arity() <= 4 => class_slice(class, h.arity()).contains(word),
        _ => class_member(class, h),
    }
}

/// Exhaustively checks `K ∗ C ⊆ K` at the bound: every class member of
/// arity `n ≤ bound.m` with every clone member of arity `k ≤ bound.k`
/// substituted into its first argument.
pub fn check_right_stability(class: ClassId, clone: CloneId, bound: Bound) -> StabilityVerdict {
    for n in 1..=bound.m {
        let members = class_slice(class, n);
        for f_word in members.iter() {
            let f = TruthTable::from_word(n, f_word);
            for k in 1..=bound.k {
                for g_word in clone_mask(clone, k).iter() {
                    let g = TruthTable::from_word(k, g_word);
                    let h = f.star(&g).expect("arity within limits");
                    if !in_class(class, &h) {
                        return StabilityVerdict::Counterexample {
                            outer: f,
                            inner: vec![g],
                            composite: h,
                        };
                    }
                }
            }
        }
    }
    StabilityVerdict::HoldsAtBound(bound)
}

/// Exhaustively checks `C · K ⊆ K` at the bound: every clone member `g` of
/// arity `k ≤ bound.k` applied to every `k`-tuple of class members of one
/// arity `m ≤ bound.m`.
///
/// Strata `(k, m)` are swept in increasing order of tuple count so that
/// counterexamples surface in the cheapest stratum holding one.  Within a
/// stratum the last tuple coordinate is split off: a prefix `(g, f₁, …,
/// f_{k−1})` determines the composite's value rows for both values of the
/// last coordinate (masks `A`, `B`), the composite for a final `f` is `(A ∧
/// ¬f) ∨ (B ∧ f)`, and prefixes reaching an already-seen `(A, B)` pair are
/// skipped.
pub fn check_left_stability(class: ClassId, clone: CloneId, bound: Bound) -> StabilityVerdict {
    let mut strata: Vec<(u8, u8, u128)> = Vec::new();
    for k in 1..=bound.k {
        for m in 1..=bound.m {
            let tuples = (clone_mask(clone, k).len() as u128)
                .saturating_mul((class_slice(class, m).len() as u128).saturating_pow(k as u32));
            strata.push((k, m, tuples));
        }
    }
    strata.sort_by_key(|&(k, m, tuples)| (tuples, k, m));

    // One seen-(A,B) bitmap per class arity, shared across strata: the pair
    // (A, B) alone determines every composite the inner loop would test.
    let mut seen: [Vec<u64>; MAX_BOUND as usize] = Default::default();

    for (k, m, _) in strata {
        let members = class_slice(class, m);
        if members.len() == space(m) {
            continue; // every composite of this arity is a member
        }
        let words: Vec<u64> = members.iter().collect();
        if words.is_empty() {
            continue;
        }
        let rows = 1u32 << m;
        let seen = &mut seen[(m - 1) as usize];
        if seen.is_empty() {
            seen.resize((1usize << (2 * rows)).div_ceil(64), 0);
        }
        let prefix_len = (k - 1) as usize;
        for g_word in clone_mask(clone, k).iter() {
            let mut idx = vec![0usize; prefix_len];
            'tuples: loop {
                let mut a = 0u64;
                let mut b = 0u64;
                for r in 0..rows {
                    let mut p = 0u32;
                    for &i in &idx {
                        p = (p << 1) | (words[i] >> r & 1) as u32;
                    }
                    a |= (g_word >> (p << 1) & 1) << r;
                    b |= (g_word >> ((p << 1) | 1) & 1) << r;
                }
                let key = ((a as usize) << rows) | b as usize;
                if seen[key >> 6] >> (key & 63) & 1 == 0 {
                    seen[key >> 6] |= 1 << (key & 63);
                    for &f_word in &words {
                        let h = (a & !f_word) | (b & f_word);
                        if !members.contains(h) {
                            let mut inner: Vec<TruthTable> = idx
                                .iter()
                                .map(|&i| TruthTable::from_word(m, words[i]))
                                .collect();
                            inner.push(TruthTable::from_word(m, f_word));
                            return StabilityVerdict::Counterexample {
                                outer: TruthTable::from_word(k, g_word),
                                inner,
                                composite: TruthTable::from_word(m, h),
                            };
                        }
                    }
                }
                let mut pos = prefix_len;
                loop {
                    if pos == 0 {
                        break 'tuples;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < words.len() {
                        continue 'tuples;
                    }
                    idx[pos] = 0;
                }
            }
        }
    }
    StabilityVerdict::HoldsAtBound(bound)
}

/// Which side of the stability table an entry concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// One row of the stability table: the largest clone acting on the class
/// from each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub class: ClassId,
    pub right_clone: CloneId,
    pub left_clone: CloneId,
}

/// The stability table, one row per class in roster order.
const TABLE2: [(&str, &str, &str); 93] = [
    ("Omega", "Omega", "Omega"),
    ("Omega_le", "Tc", "M"),
    ("Omega_ge", "Tc", "M"),
    ("Omega_meet0", "Tc", "U"),
    ("Omega_join1", "Tc", "W"),
    ("Omega_0x_c", "T0", "M"),
    ("Omega_x0_c", "T1", "M"),
    ("Omega_00_c", "Tc", "M"),
    ("Omega_01_c", "Tc", "M"),
    ("Omega_01_c0", "Tc", "M0"),
    ("Omega_01_c1", "Tc", "M1"),
    ("Omega_1x_c", "T0", "M"),
    ("Omega_x1_c", "T1", "M"),
    ("Omega_11_c", "Tc", "M"),
    ("Omega_10_c", "Tc", "M"),
    ("Omega_10_c1", "Tc", "M1"),
    ("Omega_10_c0", "Tc", "M0"),
    ("Omega_ne", "Tc", "S"),
    ("Omega_eq", "Tc", "Omega"),
    ("Omega_0x", "T0", "T0"),
    ("Omega_1x", "T0", "T1"),
    ("Omega_x0", "T1", "T0"),
    ("Omega_x1", "T1", "T1"),
    ("Omega_00", "Tc", "T0"),
    ("Omega_11", "Tc", "T1"),
    ("Omega_01", "Tc", "Tc"),
    ("Omega_10", "Tc", "Tc"),
    ("M", "M", "M"),
    ("M0", "M0", "M0"),
    ("M1", "M1", "M1"),
    ("Mc", "Mc", "Mc"),
    ("M_neg", "M", "M"),
    ("M0_neg", "M0", "M1"),
    ("M1_neg", "M1", "M0"),
    ("Mc_neg", "Mc", "Mc"),
    ("Smin", "S", "U"),
    ("Smin_ne", "Sc", "SM"),
    ("Smin_0x", "Sc", "U"),
    ("Smin_x0", "Sc", "U"),
    ("Smin_01_c0", "Sc", "MU"),
    ("Smin_10_c0", "Sc", "MU"),
    ("Smin_01", "Sc", "TcU"),
    ("Smin_10", "Sc", "TcU"),
    ("Smin_00", "Sc", "U"),
    ("Smaj", "S", "W"),
    ("Smaj_ne", "Sc", "SM"),
    ("Smaj_1x", "Sc", "W"),
    ("Smaj_x1", "Sc", "W"),
    ("Smaj_10_c1", "Sc", "MW"),
    ("Smaj_01_c1", "Sc", "MW"),
    ("Smaj_10", "Sc", "TcW"),
    ("Smaj_01", "Sc", "TcW"),
    ("Smaj_11", "Sc", "W"),
    ("S", "S", "S"),
    ("Sc", "Sc", "Sc"),
    ("Sc_neg", "Sc", "Sc"),
    ("SM", "SM", "SM"),
    ("SM_neg", "SM", "SM"),
    ("U", "U", "U"),
    ("TcU_c0", "TcU", "MU"),
    ("TcU", "TcU", "TcU"),
    ("MU", "MU", "MU"),
    ("McU", "McU", "McU"),
    ("U_00", "TcU", "U"),
    ("U_neg", "U", "W"),
    ("TcU_neg_c1", "TcU", "MW"),
    ("TcU_neg", "TcU", "TcW"),
    ("MU_neg", "MU", "MW"),
    ("McU_neg", "McU", "McW"),
    ("U_neg_11", "TcU", "W"),
    ("W", "W", "W"),
    ("TcW_c1", "TcW", "MW"),
    ("TcW", "TcW", "TcW"),
    ("MW", "MW", "MW"),
    ("McW", "McW", "McW"),
    ("W_11", "TcW", "W"),
    ("W_neg", "W", "U"),
    ("TcW_neg_c0", "TcW", "MU"),
    ("TcW_neg", "TcW", "TcU"),
    ("MW_neg", "MW", "MU"),
    ("McW_neg", "McW", "McU"),
    ("W_neg_00", "TcW", "U"),
    ("UW_neg", "SM", "U"),
    ("WU_neg", "SM", "W"),
    ("Refl", "S", "Omega"),
    ("Refl_00_c", "Sc", "M"),
    ("Refl_11_c", "Sc", "M"),
    ("Refl_00", "Sc", "T0"),
    ("Refl_11", "Sc", "T1"),
    ("Vak", "Omega", "Omega"),
    ("Vak0", "Omega", "T0"),
    ("Vak1", "Omega", "T1"),
    ("Empty", "Omega", "Omega"),
];

static TABLE: LazyLock<Vec<TableRow>> = LazyLock::new(|| {
    TABLE2
        .iter()
        .map(|&(class, right, left)| TableRow {
            class: ClassId::from_name(class).expect("roster name"),
            right_clone: right.parse().expect("clone name"),
            left_clone: left.parse().expect("clone name"),
        })
        .collect()
});

/// The full stability table in roster order.
pub fn table2() -> &'static [TableRow] {
    &TABLE
}

/// The stability-table row of one class.
pub fn table2_row(class: ClassId) -> TableRow {
    let row = TABLE[class.index()];
    debug_assert_eq!(row.class, class);
    row
}

/// A disagreement between the recorded table and the bounded sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub class: ClassId,
    pub clone: CloneId,
    pub side: Side,
    /// What the table entry predicts for this clone.
    pub expected_stable: bool,
    /// What the sweep found.
    pub verdict: StabilityVerdict,
}

/// Result of re-deriving the stability table at a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Report {
    pub bound: Bound,
    pub mismatches: Vec<Mismatch>,
}

impl Table2Report {
    /// Whether the sweep reproduced the table exactly.
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for Table2Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "stability table at bound {}: {} mismatch(es) over {} entries",
            self.bound,
            self.mismatches.len(),
            2 * TABLE.len() * CloneId::all().count(),
        )?;
        for m in &self.mismatches {
            let found = if m.verdict.holds() {
                "no counterexample below the bound".to_owned()
            } else if let StabilityVerdict::Counterexample {
                outer,
                inner,
                composite,
            } = &m.verdict
            {
                let inner: Vec<String> = inner.iter().map(|t| t.to_string()).collect();
                format!(
                    "counterexample {} on [{}] gives {}",
                    outer,
                    inner.join(", "),
                    composite
                )
            } else {
                unreachable!()
            };
            writeln!(
                f,
                "  {} side of {} under {}: expected {}, found {}",
                m.side,
                m.class,
                m.clone,
                if m.expected_stable {
                    "stable"
                } else {
                    "unstable"
                },
                found,
            )?;
        }
        Ok(())
    }
}

impl Serialize for Table2Report {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Table2Report", 3)?;
        s.serialize_field("bound", &self.bound)?;
        s.serialize_field("clean", &self.is_clean())?;
        s.serialize_field("mismatches", &self.mismatches)?;
        s.end()
    }
}

/// Re-derives the stability table at the bound: for every class and every
/// clone, both sides are swept exhaustively and compared against what the
/// recorded clone entries predict (a clone acts stably exactly when it lies
/// below the recorded clone).
pub fn verify_table2(bound: Bound) -> Table2Report {
    let mut mismatches = Vec::new();
    for row in table2() {
        for clone in CloneId::all() {
            let expected = clone_leq(clone, row.right_clone);
            let verdict = check_right_stability(row.class, clone, bound);
            if verdict.holds() != expected {
                mismatches.push(Mismatch {
                    class: row.class,
                    clone,
                    side: Side::Right,
                    expected_stable: expected,
                    verdict,
                });
            }
            let expected = clone_leq(clone, row.left_clone);
            let verdict = check_left_stability(row.class, clone, bound);
            if verdict.holds() != expected {
                mismatches.push(Mismatch {
                    class: row.class,
                    clone,
                    side: Side::Left,
                    expected_stable: expected,
                    verdict,
                });
            }
        }
    }
    Table2Report { bound, mismatches }
}

/// A defect found by [`verify_roster`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RosterViolation {
    /// A minor of a slice member lies outside the class.
    MinorEscape {
        class: ClassId,
        function: TruthTable,
        minor: TruthTable,
    },
    /// A table in the pointwise-majority closure of a slice lies outside
    /// the slice.
    MajorityEscape { class: ClassId, table: TruthTable },
    /// Two classes agree on every slice up to the checked arity.
    IndistinctClasses { first: ClassId, second: ClassId },
}

impl fmt::Display for RosterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RosterViolation::MinorEscape {
                class,
                function,
                minor,
            } => write!(f, "{class}: member {function} has the minor {minor} outside the class"),
            RosterViolation::MajorityEscape { class, table } => write!(
                f,
                "{class}: {table} lies in the pointwise-majority closure of the slice but not in it"
            ),
            RosterViolation::IndistinctClasses { first, second } => {
                write!(f, "{first} and {second} have identical slices")
            }
        }
    }
}

/// Result of [`verify_roster`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RosterReport {
    pub max_arity: u8,
    pub violations: Vec<RosterViolation>,
}

impl RosterReport {
    /// Whether every class passed every check.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Serialize for RosterReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RosterReport", 3)?;
        s.serialize_field("max_arity", &self.max_arity)?;
        s.serialize_field("clean", &self.is_clean())?;
        s.serialize_field("violations", &self.violations)?;
        s.end()
    }
}

impl fmt::Display for RosterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "roster at arity <= {}: {} class(es), {} violation(s)",
            self.max_arity,
            crate::predicates::CLASS_COUNT,
            self.violations.len(),
        )?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// For each argument map of an `m`-ary function into `mp` arguments, the
/// row-index table of the resulting minor: entry `rp` holds the source row
/// read by row `rp` of the minor.
fn minor_row_maps(m: u8, mp: u8) -> Vec<Vec<u8>> {
    let rows = 1u32 << mp;
    let mut out = Vec::new();
    let mut image = vec![1u8; m as usize];
    loop {
        let mut rm = vec![0u8; rows as usize];
        for rp in 0..rows {
            // Row rp encodes (b₁,…,b_mp) with b₁ most significant; source
            // argument i reads b_{σ(i)}.
            let mut src = 0u32;
            for &s in &image {
                src = src << 1 | (rp >> (mp - s) & 1);
            }
            rm[rp as usize] = src as u8;
        }
        out.push(rm);
        let mut k = m as usize;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if image[k] < mp {
                image[k] += 1;
                break;
            }
            image[k] = 1;
        }
    }
}

/// Checks, for every class, that each slice at arity ≤ `max_arity` is
/// closed under all minors (into any arity ≤ `max_arity`) and under
/// pointwise ternary majority, and that no two classes share every slice.
/// Majority closure is decided through pairwise row projections: with a
/// majority operation acting pointwise, the closure of a set of tables is
/// exactly the set of tables whose every row-pair bit pattern is realized
/// by some member.
pub fn verify_roster(max_arity: u8) -> Result<RosterReport, VerifyError> {
    if !(1..=crate::predicates::ENUM_MAX_ARITY).contains(&max_arity) {
        return Err(VerifyError::ArityOutOfRange {
            arity: max_arity,
            max: crate::predicates::ENUM_MAX_ARITY,
        });
    }
    let mut violations = Vec::new();
    let maps: Vec<Vec<Vec<Vec<u8>>>> = (1..=max_arity)
        .map(|m| (1..=max_arity).map(|mp| minor_row_maps(m, mp)).collect())
        .collect();

    for c in ClassId::all() {
        for m in 1..=max_arity {
            let slice = class_slice(c, m);
            let rows = 1u32 << m;

            for w in slice.iter() {
                for mp in 1..=max_arity {
                    let target = class_slice(c, mp);
                    for rm in &maps[m as usize - 1][mp as usize - 1] {
                        let wp = rm
                            .iter()
                            .enumerate()
                            .fold(0u64, |acc, (rp, &src)| acc | (w >> src & 1) << rp);
                        if !target.contains(wp) {
                            violations.push(RosterViolation::MinorEscape {
                                class: c,
                                function: TruthTable::from_word(m, w),
                                minor: TruthTable::from_word(mp, wp),
                            });
                        }
                    }
                }
            }

            let mut realized = [[0u8; 16]; 16];
            for w in slice.iter() {
                for p in 0..rows {
                    for q in p + 1..rows {
                        let pat = (w >> p & 1) << 1 | (w >> q & 1);
                        realized[p as usize][q as usize] |= 1 << pat;
                    }
                }
            }
            'tables: for w in 0..space(m) as u64 {
                if slice.contains(w) {
                    continue;
                }
                for p in 0..rows {
                    for q in p + 1..rows {
                        let pat = (w >> p & 1) << 1 | (w >> q & 1);
                        if realized[p as usize][q as usize] & (1 << pat) == 0 {
                            continue 'tables;
                        }
                    }
                }
                violations.push(RosterViolation::MajorityEscape {
                    class: c,
                    table: TruthTable::from_word(m, w),
                });
            }
        }
    }

    let ids: Vec<ClassId> = ClassId::all().collect();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if (1..=max_arity).all(|m| class_slice(a, m).iter().eq(class_slice(b, m).iter())) {
                violations.push(RosterViolation::IndistinctClasses { first: a, second: b });
            }
        }
    }

    Ok(RosterReport {
        max_arity,
        violations,
    })
}

/// All classes stable under `c1` from the right and `c2` from the left, in
/// roster order.  Defined for `c2` containing the self-dual monotone clone;
/// below it the roster is not exhaustive and the listing would be
/// misleading.
pub fn stable_classes_for(c1: CloneId, c2: CloneId) -> Result<Vec<ClassId>, VerifyError> {
    if !clone_leq(CloneId::SM, c2) {
        return Err(VerifyError::LeftCloneBelowMajority { clone: c2 });
    }
    Ok(table2()
        .iter()
        .filter(|row| clone_leq(c1, row.right_clone) && clone_leq(c2, row.left_clone))
        .map(|row| row.class)
        .collect())
}

/// Serializes the listing produced by [`stable_classes_for`] together with
/// the acting clones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableListing {
    pub right_clone: CloneId,
    pub left_clone: CloneId,
    pub classes: Vec<ClassId>,
}

impl Serialize for StableListing {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("StableListing", 4)?;
        s.serialize_field("right_clone", &self.right_clone)?;
        s.serialize_field("left_clone", &self.left_clone)?;
        s.serialize_field("count", &self.classes.len())?;
        s.serialize_field("classes", &self.classes)?;
        s.end()
    }
}

impl fmt::Display for StableListing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} classes stable under ({}, {}):",
            self.classes.len(),
            self.right_clone,
            self.left_clone,
        )?;
        for c in &self.classes {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}
