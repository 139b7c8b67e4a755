//! Base properties of Boolean functions and the roster of the 93 classes
//! that are closed under minors and under left composition with self-dual
//! monotone functions.
//!
//! A [`BaseProp`] is a single decidable property of one truth table (endpoint
//! values, monotonicity, self-duality, separation, …).  A [`ClassExpr`]
//! combines base properties with intersection, union, and the three
//! involutive images `f ↦ f̄` (outer negation), `f ↦ fⁿ` (argument
//! negation), and `f ↦ f^d` (dual).  Each of the 93 classes is a named
//! [`ClassId`] whose defining expression is carried in a fixed roster; the
//! roster order is stable and is the order used by every report in this
//! crate.
//!
//! Naming scheme for class identifiers:
//!
//! * `Omega` — all functions; `M` — monotone; `S` — self-dual; `Refl` —
//!   reflexive (`f(ā) = f(a)`); `Smin`/`Smaj` — functions whose true points
//!   avoid (resp. cover) every complementary pair of argument tuples;
//!   `U`/`W` — 1-/0-separating of rank 2.
//! * Endpoint suffixes fix `(f(0⃗), f(1⃗))`: `_01` means `f(0⃗)=0 ∧ f(1⃗)=1`,
//!   `_0x` constrains only `f(0⃗)`, `_le`/`_ge`/`_ne`/`_eq`/`_meet0`/`_join1`
//!   compare the two endpoint values.
//! * `Tc`-prefixed names intersect a separation property with the `_01`
//!   endpoint constraint; `Mc` combines monotone with `_01`.
//! * `_c`, `_c0`, `_c1` adjoin the constant functions (both, only `0`, only
//!   `1`); `Vak`, `Vak0`, `Vak1` are the constants alone.
//! * `_neg` marks the image of a class under outer negation `f ↦ f̄`.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::closure::FnSet;
use crate::truthtable::TruthTable;

/// Number of classes in the roster.
pub const CLASS_COUNT: usize = 93;

/// Largest arity at which classes can be enumerated exhaustively.
pub const ENUM_MAX_ARITY: u8 = 4;

/// Errors from roster lookups and class enumeration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PredicateError {
    /// Exhaustive enumeration walks all `2^(2^m)` tables and is capped.
    #[error("class enumeration supports arities 1..={ENUM_MAX_ARITY}, got {arity}")]
    ArityOutsideEnumerationRange { arity: u8 },
    /// The name does not belong to the roster.
    #[error("unknown class name `{name}`")]
    UnknownClass { name: String },
    /// The name does not belong to the clone listing.
    #[error("unknown clone name `{name}`")]
    UnknownClone { name: String },
}

// ---------------------------------------------------------------------------
// base properties
// ---------------------------------------------------------------------------

/// A single decidable property of one truth table.
///
/// `Sep1(k)` (“1-separating of rank `k`”) requires every `k` true points —
/// repetitions allowed — to share a coordinate where all of them are `1`;
/// `Sep0(k)` dually requires every `k` false points to share a common `0`.
/// Ranks below 2 are not meaningful and are rejected by [`holds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseProp {
    /// `f(0⃗) = a`.
    Val0(bool),
    /// `f(1⃗) = b`.
    Val1(bool),
    /// `f(0⃗) = f(1⃗)`.
    EndpointsEq,
    /// `f(0⃗) ≠ f(1⃗)`.
    EndpointsNeq,
    /// `f(0⃗) ≤ f(1⃗)`.
    EndpointsLeq,
    /// `f(0⃗) ≥ f(1⃗)`.
    EndpointsGeq,
    /// `f(0⃗) ∧ f(1⃗) = 0`.
    EndpointsMeetZero,
    /// `f(0⃗) ∨ f(1⃗) = 1`.
    EndpointsJoinOne,
    /// `f(a) ≤ f(b)` whenever `a ≤ b` componentwise.
    Monotone,
    /// `f(ā) = ¬f(a)` for all `a`.
    SelfDual,
    /// `f(ā) = f(a)` for all `a`.
    Reflexive,
    /// `f(a) ∧ f(ā) = 0` for all `a`: no complementary pair of true points.
    SminProp,
    /// `f(a) ∨ f(ā) = 1` for all `a`: every complementary pair meets a true point.
    SmajProp,
    /// 1-separating of rank `k`.
    Sep1(u8),
    /// 0-separating of rank `k`.
    Sep0(u8),
    /// Constant 0 or constant 1.
    Constant,
    /// Satisfied by no function.
    Empty,
    /// Satisfied by every function.
    All,
}

impl fmt::Display for BaseProp {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseProp::Val0(a) => write!(out, "val0={}", *a as u8),
            BaseProp::Val1(b) => write!(out, "val1={}", *b as u8),
            BaseProp::EndpointsEq => write!(out, "eq"),
            BaseProp::EndpointsNeq => write!(out, "neq"),
            BaseProp::EndpointsLeq => write!(out, "leq"),
            BaseProp::EndpointsGeq => write!(out, "geq"),
            BaseProp::EndpointsMeetZero => write!(out, "meet0"),
            BaseProp::EndpointsJoinOne => write!(out, "join1"),
            BaseProp::Monotone => write!(out, "monotone"),
            BaseProp::SelfDual => write!(out, "selfdual"),
            BaseProp::Reflexive => write!(out, "reflexive"),
            BaseProp::SminProp => write!(out, "smin"),
            BaseProp::SmajProp => write!(out, "smaj"),
            BaseProp::Sep1(k) => write!(out, "sep1({k})"),
            BaseProp::Sep0(k) => write!(out, "sep0({k})"),
            BaseProp::Constant => write!(out, "constant"),
            BaseProp::Empty => write!(out, "empty"),
            BaseProp::All => write!(out, "all"),
        }
    }
}

/// Decides a base property by scanning the table.
///
/// Every decision is exact: endpoint properties read two rows, `Monotone`
/// checks all covering pairs of rows, the duality properties compare `f`
/// with its argument negation, and the separation properties examine
/// subsets of true (false) points — for rank 2 the equivalent pairwise
/// test is used.
///
/// # Panics
///
/// Panics if a separation rank below 2 is supplied.
pub fn holds(p: BaseProp, f: &TruthTable) -> bool {
    let last = f.row_count() - 1;
    match p {
        BaseProp::Val0(a) => f.get_row(0) == a,
        BaseProp::Val1(b) => f.get_row(last) == b,
        BaseProp::EndpointsEq => f.get_row(0) == f.get_row(last),
        BaseProp::EndpointsNeq => f.get_row(0) != f.get_row(last),
        BaseProp::EndpointsLeq => f.get_row(0) <= f.get_row(last),
        BaseProp::EndpointsGeq => f.get_row(0) >= f.get_row(last),
        BaseProp::EndpointsMeetZero => !(f.get_row(0) && f.get_row(last)),
        BaseProp::EndpointsJoinOne => f.get_row(0) || f.get_row(last),
        BaseProp::Monotone => monotone(f),
        BaseProp::SelfDual => f.inner_negate() == f.negate(),
        BaseProp::Reflexive => f.inner_negate() == *f,
        BaseProp::SminProp => {
            let inner = f.inner_negate();
            f.words().iter().zip(inner.words()).all(|(a, b)| a & b == 0)
        }
        BaseProp::SmajProp => {
            let inner = f.inner_negate();
            let ones = TruthTable::constant(f.arity(), true).expect("same arity");
            f.words()
                .iter()
                .zip(inner.words())
                .zip(ones.words())
                .all(|((a, b), full)| a | b == *full)
        }
        BaseProp::Sep1(k) => separating_ones(f, k),
        BaseProp::Sep0(k) => separating_zeros(f, k),
        BaseProp::Constant => {
            let ones = f.count_ones();
            ones == 0 || ones == f.row_count()
        }
        BaseProp::Empty => false,
        BaseProp::All => true,
    }
}

fn monotone(f: &TruthTable) -> bool {
    for j in 0..f.arity() as u32 {
        let step = 1u32 << j;
        for r in 0..f.row_count() {
            if r & step == 0 && f.get_row(r) && !f.get_row(r | step) {
                return false;
            }
        }
    }
    true
}

/// Every nonempty choice of at most `k` elements has a nonzero bitwise AND.
///
/// Because the AND only shrinks as elements are added, the scan prunes any
/// prefix whose AND is already zero; such a prefix is itself a witness.
fn meets_stay_nonzero(rows: &[u32], k: usize) -> bool {
    fn rec(rows: &[u32], start: usize, remaining: usize, meet: u32) -> bool {
        if remaining == 0 {
            return true;
        }
        for i in start..rows.len() {
            let next = meet & rows[i];
            if next == 0 || !rec(rows, i + 1, remaining - 1, next) {
                return false;
            }
        }
        true
    }
    rec(rows, 0, k.min(rows.len()), u32::MAX)
}

fn separating_ones(f: &TruthTable, k: u8) -> bool {
    assert!(k >= 2, "separation rank must be at least 2");
    let ones: Vec<u32> = (0..f.row_count()).filter(|&r| f.get_row(r)).collect();
    if ones.is_empty() {
        return true;
    }
    if ones[0] == 0 {
        // The all-zero tuple is a true point; it has no 1-coordinate at all.
        return false;
    }
    if k == 2 {
        for (i, &a) in ones.iter().enumerate() {
            for &b in &ones[i + 1..] {
                if a & b == 0 {
                    return false;
                }
            }
        }
        true
    } else {
        meets_stay_nonzero(&ones, k as usize)
    }
}

fn separating_zeros(f: &TruthTable, k: u8) -> bool {
    assert!(k >= 2, "separation rank must be at least 2");
    let last = f.row_count() - 1;
    if !f.get_row(last) {
        // The all-one tuple is a false point; it has no 0-coordinate at all.
        return false;
    }
    // Share a common 0 ⇔ the complemented row indices share a common 1.
    let zeros: Vec<u32> = (0..f.row_count())
        .filter(|&r| !f.get_row(r))
        .map(|r| r ^ last)
        .collect();
    if zeros.is_empty() {
        return true;
    }
    if k == 2 {
        for (i, &a) in zeros.iter().enumerate() {
            for &b in &zeros[i + 1..] {
                if a & b == 0 {
                    return false;
                }
            }
        }
        true
    } else {
        meets_stay_nonzero(&zeros, k as usize)
    }
}

// ---------------------------------------------------------------------------
// class expressions
// ---------------------------------------------------------------------------

/// A finite expression tree over [`BaseProp`] describing a class of
/// functions.
///
/// The three image combinators transport a class along the involutions of
/// the function space: `NegImage(E)` holds of `f` iff `E` holds of `f̄`,
/// `InnerNegImage(E)` iff `E` holds of `fⁿ` (arguments negated), and
/// `DualImage(E)` iff `E` holds of `f^d`.  Build expressions with the smart
/// constructors, which collapse a doubly applied image back to the operand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassExpr {
    Base(BaseProp),
    Intersect(Vec<ClassExpr>),
    Union(Vec<ClassExpr>),
    NegImage(Box<ClassExpr>),
    InnerNegImage(Box<ClassExpr>),
    DualImage(Box<ClassExpr>),
}

impl ClassExpr {
    pub fn base(p: BaseProp) -> ClassExpr {
        ClassExpr::Base(p)
    }

    pub fn intersect(parts: Vec<ClassExpr>) -> ClassExpr {
        ClassExpr::Intersect(parts)
    }

    pub fn union(parts: Vec<ClassExpr>) -> ClassExpr {
        ClassExpr::Union(parts)
    }

    /// Image under outer negation; `neg_image(neg_image(e)) = e`.
    pub fn neg_image(e: ClassExpr) -> ClassExpr {
        match e {
            ClassExpr::NegImage(inner) => *inner,
            other => ClassExpr::NegImage(Box::new(other)),
        }
    }

    /// Image under argument negation; collapses its own double application.
    pub fn inner_neg_image(e: ClassExpr) -> ClassExpr {
        match e {
            ClassExpr::InnerNegImage(inner) => *inner,
            other => ClassExpr::InnerNegImage(Box::new(other)),
        }
    }

    /// Image under the dual `f ↦ f^d`; collapses its own double application.
    pub fn dual_image(e: ClassExpr) -> ClassExpr {
        match e {
            ClassExpr::DualImage(inner) => *inner,
            other => ClassExpr::DualImage(Box::new(other)),
        }
    }

    /// Evaluates the expression on one table.
    pub fn holds(&self, f: &TruthTable) -> bool {
        match self {
            ClassExpr::Base(p) => holds(*p, f),
            ClassExpr::Intersect(parts) => parts.iter().all(|e| e.holds(f)),
            ClassExpr::Union(parts) => parts.iter().any(|e| e.holds(f)),
            ClassExpr::NegImage(e) => e.holds(&f.negate()),
            ClassExpr::InnerNegImage(e) => e.holds(&f.inner_negate()),
            ClassExpr::DualImage(e) => e.holds(&f.dual()),
        }
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(
            out: &mut fmt::Formatter<'_>,
            parts: &[ClassExpr],
            sep: &str,
            empty: &str,
        ) -> fmt::Result {
            if parts.is_empty() {
                return write!(out, "{empty}");
            }
            write!(out, "(")?;
            for (i, e) in parts.iter().enumerate() {
                if i > 0 {
                    write!(out, "{sep}")?;
                }
                write!(out, "{e}")?;
            }
            write!(out, ")")
        }
        match self {
            ClassExpr::Base(p) => write!(out, "{p}"),
            ClassExpr::Intersect(parts) => join(out, parts, " & ", "all"),
            ClassExpr::Union(parts) => join(out, parts, " | ", "empty"),
            ClassExpr::NegImage(e) => write!(out, "neg[{e}]"),
            ClassExpr::InnerNegImage(e) => write!(out, "inner[{e}]"),
            ClassExpr::DualImage(e) => write!(out, "dual[{e}]"),
        }
    }
}

/// Membership of `f` in the class named by `c`.
pub fn class_member(c: ClassId, f: &TruthTable) -> bool {
    c.expr().holds(f)
}

/// All `m`-ary members of the class, by exhaustive scan of the `2^(2^m)`
/// tables.  Requires `1 ≤ m ≤ 4`.
pub fn enumerate_class(c: ClassId, m: u8) -> Result<FnSet, PredicateError> {
    if !(1..=ENUM_MAX_ARITY).contains(&m) {
        return Err(PredicateError::ArityOutsideEnumerationRange { arity: m });
    }
    let mut out = FnSet::new(m);
    for t in slices::class_slice(c, m).iter() {
        out.insert(TruthTable::from_word(m, t));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// the roster
// ---------------------------------------------------------------------------

/// One of the 93 classes closed under minors and majority composition,
/// identified by its fixed roster position.
///
/// The roster is closed under the three involutions: each class has a
/// [`negation_partner`](ClassId::negation_partner),
/// [`inner_negation_partner`](ClassId::inner_negation_partner), and
/// [`dual_partner`](ClassId::dual_partner) inside the roster.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(u8);

struct ClassDef {
    name: &'static str,
    expr: ClassExpr,
}

impl ClassId {
    /// All classes in roster order.
    pub fn all() -> impl Iterator<Item = ClassId> + Clone {
        (0..CLASS_COUNT as u8).map(ClassId)
    }

    /// Looks a class up by its canonical name.
    pub fn from_name(name: &str) -> Option<ClassId> {
        ROSTER
            .iter()
            .position(|def| def.name == name)
            .map(|i| ClassId(i as u8))
    }

    /// The class at the given roster position.
    pub fn from_index(index: usize) -> Option<ClassId> {
        (index < CLASS_COUNT).then_some(ClassId(index as u8))
    }

    /// Roster position, `0..93`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Canonical ASCII name.
    pub fn name(self) -> &'static str {
        ROSTER[self.index()].name
    }

    /// The defining expression.
    pub fn expr(self) -> &'static ClassExpr {
        &ROSTER[self.index()].expr
    }

    /// The class `{ f̄ : f ∈ self }`.
    pub fn negation_partner(self) -> ClassId {
        ClassId(PARTNERS.neg[self.index()])
    }

    /// The class `{ fⁿ : f ∈ self }` (arguments negated).
    pub fn inner_negation_partner(self) -> ClassId {
        ClassId(PARTNERS.inner[self.index()])
    }

    /// The class `{ f^d : f ∈ self }`.
    pub fn dual_partner(self) -> ClassId {
        ClassId(PARTNERS.dual[self.index()])
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}", self.name())
    }
}

impl fmt::Debug for ClassId {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "ClassId({})", self.name())
    }
}

impl FromStr for ClassId {
    type Err = PredicateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassId::from_name(s).ok_or_else(|| PredicateError::UnknownClass {
            name: s.to_owned(),
        })
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ClassId {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        ClassId::from_name(&s).ok_or_else(|| D::Error::custom(format!("unknown class name `{s}`")))
    }
}

static ROSTER: LazyLock<Vec<ClassDef>> = LazyLock::new(build_roster);

fn build_roster() -> Vec<ClassDef> {
    use BaseProp::*;

    fn b(p: BaseProp) -> ClassExpr {
        ClassExpr::base(p)
    }
    fn i(parts: Vec<ClassExpr>) -> ClassExpr {
        ClassExpr::intersect(parts)
    }
    fn u(parts: Vec<ClassExpr>) -> ClassExpr {
        ClassExpr::union(parts)
    }
    fn n(e: ClassExpr) -> ClassExpr {
        ClassExpr::neg_image(e)
    }
    // Endpoint constraints: `e_ab` pins (f(0⃗), f(1⃗)).
    fn e_0x() -> ClassExpr {
        b(Val0(false))
    }
    fn e_1x() -> ClassExpr {
        b(Val0(true))
    }
    fn e_x0() -> ClassExpr {
        b(Val1(false))
    }
    fn e_x1() -> ClassExpr {
        b(Val1(true))
    }
    fn e_00() -> ClassExpr {
        i(vec![e_0x(), e_x0()])
    }
    fn e_11() -> ClassExpr {
        i(vec![e_1x(), e_x1()])
    }
    fn e_01() -> ClassExpr {
        i(vec![e_0x(), e_x1()])
    }
    fn e_10() -> ClassExpr {
        i(vec![e_1x(), e_x0()])
    }
    // Constants: both, only the 0 one, only the 1 one.
    fn vak() -> ClassExpr {
        b(Constant)
    }
    fn vak0() -> ClassExpr {
        i(vec![b(Constant), b(Val0(false))])
    }
    fn vak1() -> ClassExpr {
        i(vec![b(Constant), b(Val0(true))])
    }
    // Separating functions with 0–1 endpoints.
    fn tcu() -> ClassExpr {
        i(vec![e_01(), b(Sep1(2))])
    }
    fn tcw() -> ClassExpr {
        i(vec![e_01(), b(Sep0(2))])
    }

    fn def(name: &'static str, expr: ClassExpr) -> ClassDef {
        ClassDef { name, expr }
    }

    vec![
        def("Omega", b(All)),
        def("Omega_le", b(EndpointsLeq)),
        def("Omega_ge", b(EndpointsGeq)),
        def("Omega_meet0", b(EndpointsMeetZero)),
        def("Omega_join1", b(EndpointsJoinOne)),
        def("Omega_0x_c", u(vec![e_0x(), vak()])),
        def("Omega_x0_c", u(vec![e_x0(), vak()])),
        def("Omega_00_c", u(vec![e_00(), vak()])),
        def("Omega_01_c", u(vec![e_01(), vak()])),
        def("Omega_01_c0", u(vec![e_01(), vak0()])),
        def("Omega_01_c1", u(vec![e_01(), vak1()])),
        def("Omega_1x_c", u(vec![e_1x(), vak()])),
        def("Omega_x1_c", u(vec![e_x1(), vak()])),
        def("Omega_11_c", u(vec![e_11(), vak()])),
        def("Omega_10_c", u(vec![e_10(), vak()])),
        def("Omega_10_c1", u(vec![e_10(), vak1()])),
        def("Omega_10_c0", u(vec![e_10(), vak0()])),
        def("Omega_ne", b(EndpointsNeq)),
        def("Omega_eq", b(EndpointsEq)),
        def("Omega_0x", e_0x()),
        def("Omega_1x", e_1x()),
        def("Omega_x0", e_x0()),
        def("Omega_x1", e_x1()),
        def("Omega_00", e_00()),
        def("Omega_11", e_11()),
        def("Omega_01", e_01()),
        def("Omega_10", e_10()),
        def("M", b(Monotone)),
        def("M0", i(vec![b(Monotone), e_0x()])),
        def("M1", i(vec![b(Monotone), e_x1()])),
        def("Mc", i(vec![b(Monotone), e_01()])),
        def("M_neg", n(b(Monotone))),
        def("M0_neg", n(i(vec![b(Monotone), e_0x()]))),
        def("M1_neg", n(i(vec![b(Monotone), e_x1()]))),
        def("Mc_neg", n(i(vec![b(Monotone), e_01()]))),
        def("Smin", b(SminProp)),
        def("Smin_ne", i(vec![b(SminProp), b(EndpointsNeq)])),
        def("Smin_0x", i(vec![b(SminProp), e_0x()])),
        def("Smin_x0", i(vec![b(SminProp), e_x0()])),
        def("Smin_01_c0", i(vec![b(SminProp), u(vec![e_01(), vak0()])])),
        def("Smin_10_c0", i(vec![b(SminProp), u(vec![e_10(), vak0()])])),
        def("Smin_01", i(vec![b(SminProp), e_01()])),
        def("Smin_10", i(vec![b(SminProp), e_10()])),
        def("Smin_00", i(vec![b(SminProp), e_00()])),
        def("Smaj", b(SmajProp)),
        def("Smaj_ne", i(vec![b(SmajProp), b(EndpointsNeq)])),
        def("Smaj_1x", i(vec![b(SmajProp), e_1x()])),
        def("Smaj_x1", i(vec![b(SmajProp), e_x1()])),
        def("Smaj_10_c1", i(vec![b(SmajProp), u(vec![e_10(), vak1()])])),
        def("Smaj_01_c1", i(vec![b(SmajProp), u(vec![e_01(), vak1()])])),
        def("Smaj_10", i(vec![b(SmajProp), e_10()])),
        def("Smaj_01", i(vec![b(SmajProp), e_01()])),
        def("Smaj_11", i(vec![b(SmajProp), e_11()])),
        def("S", b(SelfDual)),
        def("Sc", i(vec![b(SelfDual), e_0x()])),
        def("Sc_neg", n(i(vec![b(SelfDual), e_0x()]))),
        def("SM", i(vec![b(SelfDual), b(Monotone)])),
        def("SM_neg", n(i(vec![b(SelfDual), b(Monotone)]))),
        def("U", b(Sep1(2))),
        def("TcU_c0", u(vec![tcu(), vak0()])),
        def("TcU", tcu()),
        def("MU", i(vec![b(Monotone), b(Sep1(2))])),
        def("McU", i(vec![b(Monotone), tcu()])),
        def("U_00", i(vec![b(Sep1(2)), e_00()])),
        def("U_neg", n(b(Sep1(2)))),
        def("TcU_neg_c1", u(vec![n(tcu()), vak1()])),
        def("TcU_neg", n(tcu())),
        def("MU_neg", n(i(vec![b(Monotone), b(Sep1(2))]))),
        def("McU_neg", n(i(vec![b(Monotone), tcu()]))),
        def("U_neg_11", i(vec![n(b(Sep1(2))), e_11()])),
        def("W", b(Sep0(2))),
        def("TcW_c1", u(vec![tcw(), vak1()])),
        def("TcW", tcw()),
        def("MW", i(vec![b(Monotone), b(Sep0(2))])),
        def("McW", i(vec![b(Monotone), tcw()])),
        def("W_11", i(vec![b(Sep0(2)), e_11()])),
        def("W_neg", n(b(Sep0(2)))),
        def("TcW_neg_c0", u(vec![n(tcw()), vak0()])),
        def("TcW_neg", n(tcw())),
        def("MW_neg", n(i(vec![b(Monotone), b(Sep0(2))]))),
        def("McW_neg", n(i(vec![b(Monotone), tcw()]))),
        def("W_neg_00", i(vec![n(b(Sep0(2))), e_00()])),
        def("UW_neg", i(vec![b(Sep1(2)), n(b(Sep0(2)))])),
        def("WU_neg", i(vec![b(Sep0(2)), n(b(Sep1(2)))])),
        def("Refl", b(Reflexive)),
        def("Refl_00_c", u(vec![i(vec![b(Reflexive), e_00()]), vak()])),
        def("Refl_11_c", u(vec![i(vec![b(Reflexive), e_11()]), vak()])),
        def("Refl_00", i(vec![b(Reflexive), e_00()])),
        def("Refl_11", i(vec![b(Reflexive), e_11()])),
        def("Vak", vak()),
        def("Vak0", vak0()),
        def("Vak1", vak1()),
        def("Empty", b(Empty)),
    ]
}

// ---------------------------------------------------------------------------
// roster involutions
// ---------------------------------------------------------------------------

struct Partners {
    neg: [u8; CLASS_COUNT],
    inner: [u8; CLASS_COUNT],
    dual: [u8; CLASS_COUNT],
}

static PARTNERS: LazyLock<Partners> = LazyLock::new(|| Partners {
    neg: partner_table(slices::Involution::Negate),
    inner: partner_table(slices::Involution::InnerNegate),
    dual: partner_table(slices::Involution::Dual),
});

/// For each class, the unique roster class whose members are exactly the
/// images of this class's members.  Identified by matching the full
/// enumerations at arities 1–3, where the indexed families are pairwise
/// distinct.
fn partner_table(kind: slices::Involution) -> [u8; CLASS_COUNT] {
    let mut out = [0u8; CLASS_COUNT];
    for c in ClassId::all() {
        let images: Vec<_> = (1..=3)
            .map(|m| slices::class_slice(c, m).preimage_under(|t| slices::apply(kind, m, t)))
            .collect();
        let partner = ClassId::all()
            .find(|&d| {
                (1..=3)
                    .zip(&images)
                    .all(|(m, img)| slices::class_slice(d, m) == img)
            })
            .unwrap_or_else(|| panic!("no image partner for {} under {kind:?}", c.name()));
        out[c.index()] = partner.index() as u8;
    }
    out
}

// ---------------------------------------------------------------------------
// exhaustive per-arity slices
// ---------------------------------------------------------------------------

pub(crate) mod slices {
    //! Exhaustive membership masks over all `2^(2^m)` tables of arity
    //! `m ≤ 4`, one bit per table word.  These back class enumeration, the
    //! inclusion order, and the sweep drivers elsewhere in the crate.

    use std::collections::HashMap;
    use std::sync::OnceLock;

    use super::{holds, BaseProp, ClassExpr, ClassId, ENUM_MAX_ARITY, ROSTER};
    use crate::truthtable::TruthTable;

    /// A set of `m`-ary tables, one bit per table word.
    #[derive(Clone, Debug, PartialEq, Eq)]
    pub(crate) struct TableMask {
        arity: u8,
        bits: Vec<u64>,
    }

    /// Number of `m`-ary tables.
    pub(crate) fn space(m: u8) -> usize {
        1usize << (1usize << m)
    }

    /// All-ones table word of arity `m`.
    pub(crate) fn full_word(m: u8) -> u64 {
        if m >= 6 {
            u64::MAX
        } else {
            (1u64 << (1u32 << m)) - 1
        }
    }

    impl TableMask {
        pub fn empty(arity: u8) -> TableMask {
            TableMask {
                arity,
                bits: vec![0; space(arity).div_ceil(64)],
            }
        }

        pub fn build(arity: u8, mut member: impl FnMut(u64) -> bool) -> TableMask {
            let mut out = TableMask::empty(arity);
            for t in 0..space(arity) as u64 {
                if member(t) {
                    out.insert(t);
                }
            }
            out
        }

        pub fn insert(&mut self, t: u64) {
            self.bits[(t >> 6) as usize] |= 1u64 << (t & 63);
        }

        pub fn contains(&self, t: u64) -> bool {
            (self.bits[(t >> 6) as usize] >> (t & 63)) & 1 == 1
        }

        pub fn len(&self) -> usize {
            self.bits.iter().map(|w| w.count_ones() as usize).sum()
        }

        pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
            self.bits.iter().enumerate().flat_map(|(i, &w)| {
                let base = (i as u64) << 6;
                BitIter(w).map(move |b| base | b)
            })
        }

        pub fn and(&self, other: &TableMask) -> TableMask {
            debug_assert_eq!(self.arity, other.arity);
            TableMask {
                arity: self.arity,
                bits: self
                    .bits
                    .iter()
                    .zip(&other.bits)
                    .map(|(a, b)| a & b)
                    .collect(),
            }
        }

        pub fn or(&self, other: &TableMask) -> TableMask {
            debug_assert_eq!(self.arity, other.arity);
            TableMask {
                arity: self.arity,
                bits: self
                    .bits
                    .iter()
                    .zip(&other.bits)
                    .map(|(a, b)| a | b)
                    .collect(),
            }
        }

        pub fn is_subset(&self, other: &TableMask) -> bool {
            debug_assert_eq!(self.arity, other.arity);
            self.bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a & !b == 0)
        }

        /// The mask holding `t` iff `self` holds `map(t)`.
        pub fn preimage_under(&self, map: impl Fn(u64) -> u64) -> TableMask {
            let mut out = TableMask::empty(self.arity);
            for t in 0..space(self.arity) as u64 {
                if self.contains(map(t)) {
                    out.insert(t);
                }
            }
            out
        }
    }

    struct BitIter(u64);

    impl Iterator for BitIter {
        type Item = u64;

        fn next(&mut self) -> Option<u64> {
            if self.0 == 0 {
                None
            } else {
                let b = self.0.trailing_zeros() as u64;
                self.0 &= self.0 - 1;
                Some(b)
            }
        }
    }

    /// The three involutive transforms at the table-word level.
    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    pub(crate) enum Involution {
        Negate,
        InnerNegate,
        Dual,
    }

    /// Applies an involution to an `m`-ary table word.
    pub(crate) fn apply(kind: Involution, m: u8, t: u64) -> u64 {
        match kind {
            Involution::Negate => t ^ full_word(m),
            Involution::InnerNegate => inner_word(m, t),
            Involution::Dual => inner_word(m, t) ^ full_word(m),
        }
    }

    /// Argument-negation permutation of table words (row `r` ↦ row `¬r`).
    pub(crate) fn inner_word(m: u8, t: u64) -> u64 {
        let rows = 1u32 << m;
        let last = rows - 1;
        let mut out = 0u64;
        let mut rest = t;
        while rest != 0 {
            let r = rest.trailing_zeros();
            out |= 1u64 << (r ^ last);
            rest &= rest - 1;
        }
        out
    }

    static SLICES: [OnceLock<Vec<TableMask>>; ENUM_MAX_ARITY as usize] =
        [const { OnceLock::new() }; ENUM_MAX_ARITY as usize];

    /// The exact `m`-ary slice of a class, `1 ≤ m ≤ 4`.
    pub(crate) fn class_slice(c: ClassId, m: u8) -> &'static TableMask {
        assert!(
            (1..=ENUM_MAX_ARITY).contains(&m),
            "slice arity {m} outside 1..={ENUM_MAX_ARITY}"
        );
        let per_class = SLICES[(m - 1) as usize].get_or_init(|| build_arity(m));
        &per_class[c.index()]
    }

    /// Base properties appearing in the roster, precomputed in one pass.
    fn roster_props() -> Vec<BaseProp> {
        use BaseProp::*;
        vec![
            Val0(false),
            Val0(true),
            Val1(false),
            Val1(true),
            EndpointsEq,
            EndpointsNeq,
            EndpointsLeq,
            EndpointsGeq,
            EndpointsMeetZero,
            EndpointsJoinOne,
            Monotone,
            SelfDual,
            Reflexive,
            SminProp,
            SmajProp,
            Sep1(2),
            Sep0(2),
            Constant,
            Empty,
            All,
        ]
    }

    fn build_arity(m: u8) -> Vec<TableMask> {
        let mut base: HashMap<BaseProp, TableMask> = roster_props()
            .into_iter()
            .map(|p| (p, TableMask::empty(m)))
            .collect();
        let props = roster_props();
        for t in 0..space(m) as u64 {
            let table = TruthTable::from_word(m, t);
            for p in &props {
                if holds(*p, &table) {
                    base.get_mut(p).expect("preinserted").insert(t);
                }
            }
        }
        ROSTER
            .iter()
            .map(|def| eval_mask(&def.expr, m, &base))
            .collect()
    }

    fn eval_mask(e: &ClassExpr, m: u8, base: &HashMap<BaseProp, TableMask>) -> TableMask {
        match e {
            ClassExpr::Base(p) => base.get(p).cloned().unwrap_or_else(|| {
                TableMask::build(m, |t| holds(*p, &TruthTable::from_word(m, t)))
            }),
            ClassExpr::Intersect(parts) => parts
                .iter()
                .map(|p| eval_mask(p, m, base))
                .reduce(|a, b| a.and(&b))
                .unwrap_or_else(|| TableMask::build(m, |_| true)),
            ClassExpr::Union(parts) => parts
                .iter()
                .map(|p| eval_mask(p, m, base))
                .reduce(|a, b| a.or(&b))
                .unwrap_or_else(|| TableMask::empty(m)),
            ClassExpr::NegImage(e) => {
                eval_mask(e, m, base).preimage_under(|t| apply(Involution::Negate, m, t))
            }
            ClassExpr::InnerNegImage(e) => {
                eval_mask(e, m, base).preimage_under(|t| apply(Involution::InnerNegate, m, t))
            }
            ClassExpr::DualImage(e) => {
                eval_mask(e, m, base).preimage_under(|t| apply(Involution::Dual, m, t))
            }
        }
    }

    /// Sanity used by tests: the roster really has [`CLASS_COUNT`] entries.
    #[cfg(test)]
    pub(crate) fn roster_len() -> usize {
        ROSTER.len()
    }
}
