//! The twenty composition-closed function classes (clones) that act on the
//! 93 classes from the left and the right in the stability tables.
//!
//! Nineteen of the twenty have a defining predicate that coincides with a
//! roster class ([`ClassId`]); the twentieth, `Ic`, is the clone of
//! projections alone and gets a direct structural test.  Where the listed
//! generating sets exist they are cross-validated against the predicate
//! slices; inclusion between clones is decided by slice containment at
//! arities 1–3, an arity at which the order is already stable (adding
//! arity 4 changes nothing — see the tests).

use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::closure::FnSet;
use crate::predicates::slices::{self, TableMask};
use crate::predicates::{enumerate_class, ClassId, PredicateError, ENUM_MAX_ARITY};
use crate::truthtable::{named, TruthTable};

/// Number of clones in the fragment.
pub const CLONE_COUNT: usize = 20;

/// One of the twenty clones, named as in the stability tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CloneId {
    /// Projections only.
    Ic,
    /// Self-dual monotone functions.
    SM,
    /// Self-dual functions with `f(0⃗) = 0`.
    Sc,
    /// Self-dual functions.
    S,
    /// Monotone functions with `f(0⃗) = 0` and `f(1⃗) = 1`.
    Mc,
    /// Monotone functions with `f(0⃗) = 0`.
    M0,
    /// Monotone functions with `f(1⃗) = 1`.
    M1,
    /// Monotone functions.
    M,
    /// Monotone 1-separating functions with 0–1 endpoints.
    McU,
    /// Monotone 1-separating functions.
    MU,
    /// 1-separating functions with 0–1 endpoints.
    TcU,
    /// 1-separating functions (rank 2).
    U,
    /// Monotone 0-separating functions with 0–1 endpoints.
    McW,
    /// Monotone 0-separating functions.
    MW,
    /// 0-separating functions with 0–1 endpoints.
    TcW,
    /// 0-separating functions (rank 2).
    W,
    /// Functions with `f(0⃗) = 0` and `f(1⃗) = 1`.
    Tc,
    /// Functions with `f(0⃗) = 0`.
    T0,
    /// Functions with `f(1⃗) = 1`.
    T1,
    /// All functions.
    Omega,
}

/// Membership test backing a clone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloneTest {
    /// Members are exactly the projections.
    Projections,
    /// Members are the functions satisfying this roster class's predicate.
    Class(ClassId),
}

const ALL: [CloneId; CLONE_COUNT] = [
    CloneId::Ic,
    CloneId::SM,
    CloneId::Sc,
    CloneId::S,
    CloneId::Mc,
    CloneId::M0,
    CloneId::M1,
    CloneId::M,
    CloneId::McU,
    CloneId::MU,
    CloneId::TcU,
    CloneId::U,
    CloneId::McW,
    CloneId::MW,
    CloneId::TcW,
    CloneId::W,
    CloneId::Tc,
    CloneId::T0,
    CloneId::T1,
    CloneId::Omega,
];

struct GeneratorSets {
    ic: Vec<TruthTable>,
    sm: Vec<TruthTable>,
    s: Vec<TruthTable>,
    mc: Vec<TruthTable>,
    m: Vec<TruthTable>,
    mcu: Vec<TruthTable>,
    mu: Vec<TruthTable>,
    u: Vec<TruthTable>,
}

static GENERATORS: LazyLock<GeneratorSets> = LazyLock::new(|| GeneratorSets {
    ic: Vec::new(),
    sm: vec![named::maj()],
    s: vec![named::maj(), named::not()],
    mc: vec![named::maj(), named::and(), named::or()],
    // Classical generating set for the monotone functions, used for
    // cross-validation of the predicate only.
    m: vec![named::and(), named::or(), named::const0(), named::const1()],
    mcu: vec![named::maj(), named::and()],
    mu: vec![named::maj(), named::const0()],
    u: vec![named::maj(), named::nimp()],
});

impl CloneId {
    /// All clones, in the fixed report order.
    pub fn all() -> impl Iterator<Item = CloneId> + Clone {
        ALL.into_iter()
    }

    /// Canonical ASCII name.
    pub fn name(self) -> &'static str {
        match self {
            CloneId::Ic => "Ic",
            CloneId::SM => "SM",
            CloneId::Sc => "Sc",
            CloneId::S => "S",
            CloneId::Mc => "Mc",
            CloneId::M0 => "M0",
            CloneId::M1 => "M1",
            CloneId::M => "M",
            CloneId::McU => "McU",
            CloneId::MU => "MU",
            CloneId::TcU => "TcU",
            CloneId::U => "U",
            CloneId::McW => "McW",
            CloneId::MW => "MW",
            CloneId::TcW => "TcW",
            CloneId::W => "W",
            CloneId::Tc => "Tc",
            CloneId::T0 => "T0",
            CloneId::T1 => "T1",
            CloneId::Omega => "Omega",
        }
    }

    /// Looks a clone up by its canonical name.
    pub fn from_name(name: &str) -> Option<CloneId> {
        ALL.into_iter().find(|c| c.name() == name)
    }

    /// The membership test backing this clone.
    pub fn test(self) -> CloneTest {
        match self.class() {
            Some(cls) => CloneTest::Class(cls),
            None => CloneTest::Projections,
        }
    }

    /// The roster class whose members coincide with this clone, if any.
    /// Only `Ic` has none; the endpoint clones `Tc`, `T0`, `T1` map to the
    /// endpoint classes.
    pub fn class(self) -> Option<ClassId> {
        let name = match self {
            CloneId::Ic => return None,
            CloneId::Tc => "Omega_01",
            CloneId::T0 => "Omega_0x",
            CloneId::T1 => "Omega_x1",
            other => other.name(),
        };
        Some(ClassId::from_name(name).expect("clone classes are in the roster"))
    }

    /// Membership of a single function.
    pub fn member(self, f: &TruthTable) -> bool {
        match self.test() {
            CloneTest::Projections => is_projection(f),
            CloneTest::Class(cls) => cls.expr().holds(f),
        }
    }

    /// The recorded generating set, where one exists.  `Ic` carries the
    /// empty set (projections are always present); the generator-backed
    /// clones are `SM`, `S`, `Mc`, `M`, `McU`, `MU`, and `U`.
    pub fn generators(self) -> Option<&'static [TruthTable]> {
        let sets = &*GENERATORS;
        match self {
            CloneId::Ic => Some(&sets.ic),
            CloneId::SM => Some(&sets.sm),
            CloneId::S => Some(&sets.s),
            CloneId::Mc => Some(&sets.mc),
            CloneId::M => Some(&sets.m),
            CloneId::McU => Some(&sets.mcu),
            CloneId::MU => Some(&sets.mu),
            CloneId::U => Some(&sets.u),
            _ => None,
        }
    }
}

impl fmt::Display for CloneId {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}", self.name())
    }
}

impl FromStr for CloneId {
    type Err = PredicateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CloneId::from_name(s).ok_or_else(|| PredicateError::UnknownClone {
            name: s.to_owned(),
        })
    }
}

impl Serialize for CloneId {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for CloneId {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        CloneId::from_name(&s).ok_or_else(|| D::Error::custom(format!("unknown clone name `{s}`")))
    }
}

/// Whether `f` is a projection onto one of its arguments.
pub fn is_projection(f: &TruthTable) -> bool {
    (1..=f.arity()).any(|i| {
        TruthTable::projection(f.arity(), i)
            .map(|p| p == *f)
            .unwrap_or(false)
    })
}

/// The exact `m`-ary slice of the clone, `1 ≤ m ≤ 4`.
pub fn clone_members(c: CloneId, m: u8) -> Result<FnSet, PredicateError> {
    match c.test() {
        CloneTest::Class(cls) => enumerate_class(cls, m),
        CloneTest::Projections => {
            if !(1..=ENUM_MAX_ARITY).contains(&m) {
                return Err(PredicateError::ArityOutsideEnumerationRange { arity: m });
            }
            let mut out = FnSet::new(m);
            for i in 1..=m {
                out.insert(TruthTable::projection(m, i).expect("valid index"));
            }
            Ok(out)
        }
    }
}

static IC_MASKS: [OnceLock<TableMask>; ENUM_MAX_ARITY as usize] =
    [const { OnceLock::new() }; ENUM_MAX_ARITY as usize];

pub(crate) fn clone_mask(c: CloneId, m: u8) -> &'static TableMask {
    match c.test() {
        CloneTest::Class(cls) => slices::class_slice(cls, m),
        CloneTest::Projections => IC_MASKS[(m - 1) as usize].get_or_init(|| {
            TableMask::build(m, |t| is_projection(&TruthTable::from_word(m, t)))
        }),
    }
}

/// Whether every member of `c` belongs to `d`, decided by slice containment
/// at arities 1–3.
pub fn clone_leq(c: CloneId, d: CloneId) -> bool {
    (1..=3u8).all(|m| clone_mask(c, m).is_subset(clone_mask(d, m)))
}

/// All inclusion-ordered pairs `(c, d)` with `c ≤ d`, in report order.
pub fn inclusion_pairs() -> Vec<(CloneId, CloneId)> {
    CloneId::all()
        .flat_map(|c| CloneId::all().filter(move |&d| clone_leq(c, d)).map(move |d| (c, d)))
        .collect()
}

/// The unary functions in the clone.
pub fn unary_content(c: CloneId) -> FnSet {
    clone_members(c, 1).expect("arity 1 is always enumerable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::left_close;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn fnset(arity: u8, tables: &[&str]) -> FnSet {
        FnSet::from_tables(arity, tables.iter().map(|s| t(s))).unwrap()
    }

    #[test]
    fn names_round_trip() {
        assert_eq!(CloneId::all().count(), CLONE_COUNT);
        for c in CloneId::all() {
            assert_eq!(CloneId::from_name(c.name()), Some(c));
            assert_eq!(c.name().parse::<CloneId>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{c}\""));
        }
        assert!(CloneId::from_name("Nope").is_none());
    }

    #[test]
    fn backing_classes() {
        assert_eq!(CloneId::Ic.test(), CloneTest::Projections);
        for c in CloneId::all().filter(|&c| c != CloneId::Ic) {
            let cls = c.class().unwrap();
            assert_eq!(c.test(), CloneTest::Class(cls));
        }
        assert_eq!(CloneId::Tc.class().unwrap().name(), "Omega_01");
        assert_eq!(CloneId::T0.class().unwrap().name(), "Omega_0x");
        assert_eq!(CloneId::T1.class().unwrap().name(), "Omega_x1");
        assert_eq!(CloneId::SM.class().unwrap().name(), "SM");
    }

    #[test]
    fn projection_test() {
        assert!(is_projection(&named::id()));
        assert!(is_projection(&t("2:0011")));
        assert!(is_projection(&t("3:01010101")));
        assert!(!is_projection(&named::not()));
        assert!(!is_projection(&named::and()));
        assert!(CloneId::Ic.member(&t("2:0101")));
        assert!(!CloneId::Ic.member(&named::xor()));
    }

    #[test]
    fn member_examples() {
        assert!(CloneId::SM.member(&named::maj()));
        assert!(!CloneId::SM.member(&named::and()));
        assert!(CloneId::McU.member(&named::and()));
        assert!(CloneId::U.member(&named::nimp()));
        assert!(CloneId::Omega.member(&named::xor3()));
    }

    #[test]
    fn slice_examples() {
        assert_eq!(
            clone_members(CloneId::Ic, 2).unwrap(),
            fnset(2, &["2:0011", "2:0101"])
        );
        assert_eq!(
            clone_members(CloneId::SM, 3).unwrap(),
            fnset(3, &["3:00001111", "3:00010111", "3:00110011", "3:01010101"])
        );
        assert_eq!(clone_members(CloneId::Omega, 1).unwrap().len(), 4);
        assert!(matches!(
            clone_members(CloneId::SM, 5),
            Err(PredicateError::ArityOutsideEnumerationRange { arity: 5 })
        ));
    }

    /// Frozen slice sizes at arities 1–4.
    const CLONE_SIZES: [(&str, [usize; 4]); 20] = [
        ("Ic", [1, 2, 3, 4]),
        ("SM", [1, 2, 4, 12]),
        ("Sc", [1, 2, 8, 128]),
        ("S", [2, 4, 16, 256]),
        ("Mc", [1, 4, 18, 166]),
        ("M0", [2, 5, 19, 167]),
        ("M1", [2, 5, 19, 167]),
        ("M", [3, 6, 20, 168]),
        ("McU", [1, 3, 11, 80]),
        ("MU", [2, 4, 12, 81]),
        ("TcU", [1, 3, 20, 688]),
        ("U", [2, 6, 40, 1376]),
        ("McW", [1, 3, 11, 80]),
        ("MW", [2, 4, 12, 81]),
        ("TcW", [1, 3, 20, 688]),
        ("W", [2, 6, 40, 1376]),
        ("Tc", [1, 4, 64, 16384]),
        ("T0", [2, 8, 128, 32768]),
        ("T1", [2, 8, 128, 32768]),
        ("Omega", [4, 16, 256, 65536]),
    ];

    #[test]
    fn slice_sizes_match_frozen_table() {
        for (name, sizes) in CLONE_SIZES {
            let c = CloneId::from_name(name).unwrap();
            for (m, &want) in (1u8..=4).zip(sizes.iter()) {
                assert_eq!(
                    clone_members(c, m).unwrap().len(),
                    want,
                    "|{name}| at arity {m}"
                );
            }
        }
    }

    /// Frozen inclusion order: each clone with the list of clones above it.
    const ORDER: [(&str, &[&str]); 20] = [
        (
            "Ic",
            &[
                "Ic", "SM", "Sc", "S", "Mc", "M0", "M1", "M", "McU", "MU", "TcU", "U", "McW",
                "MW", "TcW", "W", "Tc", "T0", "T1", "Omega",
            ],
        ),
        (
            "SM",
            &[
                "SM", "Sc", "S", "Mc", "M0", "M1", "M", "McU", "MU", "TcU", "U", "McW", "MW",
                "TcW", "W", "Tc", "T0", "T1", "Omega",
            ],
        ),
        ("Sc", &["Sc", "S", "Tc", "T0", "T1", "Omega"]),
        ("S", &["S", "Omega"]),
        ("Mc", &["Mc", "M0", "M1", "M", "Tc", "T0", "T1", "Omega"]),
        ("M0", &["M0", "M", "T0", "Omega"]),
        ("M1", &["M1", "M", "T1", "Omega"]),
        ("M", &["M", "Omega"]),
        (
            "McU",
            &[
                "Mc", "M0", "M1", "M", "McU", "MU", "TcU", "U", "Tc", "T0", "T1", "Omega",
            ],
        ),
        ("MU", &["M0", "M", "MU", "U", "T0", "Omega"]),
        ("TcU", &["TcU", "U", "Tc", "T0", "T1", "Omega"]),
        ("U", &["U", "T0", "Omega"]),
        (
            "McW",
            &[
                "Mc", "M0", "M1", "M", "McW", "MW", "TcW", "W", "Tc", "T0", "T1", "Omega",
            ],
        ),
        ("MW", &["M1", "M", "MW", "W", "T1", "Omega"]),
        ("TcW", &["TcW", "W", "Tc", "T0", "T1", "Omega"]),
        ("W", &["W", "T1", "Omega"]),
        ("Tc", &["Tc", "T0", "T1", "Omega"]),
        ("T0", &["T0", "Omega"]),
        ("T1", &["T1", "Omega"]),
        ("Omega", &["Omega"]),
    ];

    #[test]
    fn inclusion_order_matches_frozen_table() {
        for (name, ups) in ORDER {
            let c = CloneId::from_name(name).unwrap();
            let got: Vec<&str> = CloneId::all()
                .filter(|&d| clone_leq(c, d))
                .map(|d| d.name())
                .collect();
            assert_eq!(got, ups.to_vec(), "upward set of {name}");
        }
        assert_eq!(inclusion_pairs().len(), 128);
    }

    #[test]
    fn inclusion_order_examples_and_laws() {
        assert!(clone_leq(CloneId::SM, CloneId::Sc));
        assert!(clone_leq(CloneId::SM, CloneId::U));
        assert!(!clone_leq(CloneId::S, CloneId::M));
        // Reflexive, antisymmetric, transitive.
        for a in CloneId::all() {
            assert!(clone_leq(a, a));
            for b in CloneId::all() {
                if a != b {
                    assert!(!(clone_leq(a, b) && clone_leq(b, a)), "{a} vs {b}");
                }
                for c in CloneId::all() {
                    if clone_leq(a, b) && clone_leq(b, c) {
                        assert!(clone_leq(a, c), "{a} ≤ {b} ≤ {c}");
                    }
                }
            }
        }
        // Ic is the bottom, Omega the top.
        for c in CloneId::all() {
            assert!(clone_leq(CloneId::Ic, c));
            assert!(clone_leq(c, CloneId::Omega));
        }
    }

    #[test]
    fn inclusion_order_stable_at_arity_four() {
        for c in CloneId::all() {
            for d in CloneId::all() {
                assert_eq!(
                    clone_leq(c, d),
                    clone_mask(c, 4).is_subset(clone_mask(d, 4)),
                    "{c} ≤ {d} must not flip at arity 4"
                );
            }
        }
    }

    #[test]
    fn unary_content_examples() {
        assert_eq!(unary_content(CloneId::Omega).len(), 4);
        assert_eq!(unary_content(CloneId::Sc), fnset(1, &["1:01"]));
        assert_eq!(unary_content(CloneId::T0), fnset(1, &["1:00", "1:01"]));
        assert_eq!(unary_content(CloneId::SM), fnset(1, &["1:01"]));
        assert_eq!(
            unary_content(CloneId::Omega),
            fnset(1, &["1:00", "1:01", "1:10", "1:11"])
        );
    }

    #[test]
    fn clones_missing_zero_preservation_contain_one_or_negation() {
        for c in CloneId::all() {
            if !clone_leq(c, CloneId::T0) {
                let unaries = unary_content(c);
                assert!(
                    unaries.contains(&named::const1()) || unaries.contains(&named::not()),
                    "{c} preserves no zero yet lacks const1 and negation"
                );
            }
        }
    }

    #[test]
    fn generators_belong_to_their_clone() {
        let with_gens: Vec<CloneId> = CloneId::all().filter(|c| c.generators().is_some()).collect();
        assert_eq!(
            with_gens,
            [
                CloneId::Ic,
                CloneId::SM,
                CloneId::S,
                CloneId::Mc,
                CloneId::M,
                CloneId::McU,
                CloneId::MU,
                CloneId::U
            ]
        );
        for c in with_gens {
            for g in c.generators().unwrap() {
                assert!(c.member(g), "{c} generator {g}");
            }
        }
    }

    #[test]
    fn generator_closures_reproduce_the_slices() {
        for c in CloneId::all() {
            let Some(gens) = c.generators() else { continue };
            for m in 1..=3u8 {
                let start = clone_members(CloneId::Ic, m).unwrap();
                let closed = left_close(&start, gens);
                assert_eq!(
                    closed,
                    clone_members(c, m).unwrap(),
                    "⟨generators⟩ of {c} at arity {m}"
                );
            }
        }
    }

    #[test]
    fn right_composition_stays_inside_larger_clones() {
        // If C ≤ K then K·C ⊆ K: composing any binary-or-less member of K
        // with tuples over C's slice stays in K.  Exhaustive at arities ≤ 2.
        use crate::closure::right_compose_slice;
        for k in CloneId::all() {
            for c in CloneId::all().filter(|&c| clone_leq(c, k)) {
                for n in 1..=2u8 {
                    let members: Vec<TruthTable> =
                        clone_members(k, n).unwrap().into_iter().collect();
                    for m in 1..=2u8 {
                        let composed = right_compose_slice(&members, c, m).unwrap();
                        for f in composed.iter() {
                            assert!(k.member(f), "{k}·{c} escaped at arity {m}: {f}");
                        }
                    }
                }
            }
        }
    }
}
