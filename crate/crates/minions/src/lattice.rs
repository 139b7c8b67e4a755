//! The inclusion lattice of the 93 classes.
//!
//! The order is decided by bounded slice containment: `A ≤ B` iff the `m`-ary
//! slice of `A` is contained in that of `B` for every `m` up to a decision
//! arity.  At decision arity 2 several classes are still indistinguishable
//! (they separate only from arity 3 on), so [`build_lattice`] reports the
//! colliding pairs instead of returning a non-antisymmetric relation.  The
//! order is identical at decision arities 3 and 4; the standard lattice uses
//! 4.
//!
//! The 93 classes form a closure system: every pairwise intersection is
//! again one of the 93.  [`ClassLattice::meet`] exploits this — the meet of
//! two classes is the unique greatest common lower bound, and its slices are
//! exactly the slice intersections.

use std::fmt::Write as _;
use std::sync::LazyLock;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::clones::CloneId;
use crate::predicates::slices::class_slice;
use crate::predicates::{ClassId, CLASS_COUNT};

/// Failures when building or querying the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// The decision arity must lie in `2..=4`.
    #[error("decision arity {m_max} outside the supported range 2..=4")]
    ArityOutOfRange { m_max: u8 },
    /// Slice containment at the requested arity is not antisymmetric: the
    /// listed pairs of classes have identical slices everywhere below the
    /// decision arity.  Raising the arity separates them.
    #[error("{} class pairs are indistinguishable at this arity; the first is {} / {}",
            .pairs.len(), .pairs[0].0, .pairs[0].1)]
    IndistinguishableClasses { pairs: Vec<(ClassId, ClassId)> },
    /// No unique greatest common lower bound — impossible for a correct
    /// roster, reported rather than silently mis-answered.
    #[error("classes {left} and {right} have no unique meet")]
    MissingMeet { left: ClassId, right: ClassId },
}

/// The inclusion order of the 93 classes, with covers and meets.
#[derive(Debug, Clone)]
pub struct ClassLattice {
    decision_arity: u8,
    /// `ups[i]` bit `j` set iff class `i` ≤ class `j` (roster indices).
    ups: Vec<u128>,
    /// `downs[j]` bit `i` set iff class `i` ≤ class `j`.
    downs: Vec<u128>,
    /// Cover edges `(lower, upper)`, sorted by roster index pairs.
    covers: Vec<(ClassId, ClassId)>,
}

/// Builds the lattice by slice containment at arities `1..=m_max`.
pub fn build_lattice(m_max: u8) -> Result<ClassLattice, LatticeError> {
    if !(2..=4).contains(&m_max) {
        return Err(LatticeError::ArityOutOfRange { m_max });
    }
    let classes: Vec<ClassId> = ClassId::all().collect();
    let leq = |a: ClassId, b: ClassId| {
        (1..=m_max).all(|m| class_slice(a, m).is_subset(class_slice(b, m)))
    };

    let mut ups = vec![0u128; CLASS_COUNT];
    for (i, &a) in classes.iter().enumerate() {
        for (j, &b) in classes.iter().enumerate() {
            if leq(a, b) {
                ups[i] |= 1 << j;
            }
        }
    }

    let mut collisions = Vec::new();
    for i in 0..CLASS_COUNT {
        for j in i + 1..CLASS_COUNT {
            if ups[i] >> j & 1 == 1 && ups[j] >> i & 1 == 1 {
                collisions.push((classes[i], classes[j]));
            }
        }
    }
    if !collisions.is_empty() {
        return Err(LatticeError::IndistinguishableClasses { pairs: collisions });
    }

    let mut downs = vec![0u128; CLASS_COUNT];
    for i in 0..CLASS_COUNT {
        for j in 0..CLASS_COUNT {
            if ups[i] >> j & 1 == 1 {
                downs[j] |= 1 << i;
            }
        }
    }

    // Transitive reduction: (a, b) is a cover iff a < b and nothing sits
    // strictly between.
    let mut covers = Vec::new();
    for i in 0..CLASS_COUNT {
        for j in 0..CLASS_COUNT {
            if i == j || ups[i] >> j & 1 == 0 {
                continue;
            }
            let between = ups[i] & downs[j] & !(1u128 << i) & !(1u128 << j);
            if between == 0 {
                covers.push((classes[i], classes[j]));
            }
        }
    }

    Ok(ClassLattice {
        decision_arity: m_max,
        ups,
        downs,
        covers,
    })
}

static STANDARD: LazyLock<ClassLattice> = LazyLock::new(|| {
    build_lattice(4).expect("the 93 classes are pairwise distinct at arity 4")
});

/// The lattice at the maximal decision arity (4).
pub fn standard_lattice() -> &'static ClassLattice {
    &STANDARD
}

impl ClassLattice {
    /// Arity bound the order was decided at.
    pub fn decision_arity(&self) -> u8 {
        self.decision_arity
    }

    /// The nodes in roster order.
    pub fn nodes(&self) -> impl Iterator<Item = ClassId> + Clone {
        ClassId::all()
    }

    /// Whether `a ≤ b`.
    pub fn leq(&self, a: ClassId, b: ClassId) -> bool {
        self.ups[a.index()] >> b.index() & 1 == 1
    }

    /// The top element (the class of all functions).
    pub fn top(&self) -> ClassId {
        self.nodes()
            .find(|&t| self.downs[t.index()].count_ones() as usize == CLASS_COUNT)
            .expect("a top exists")
    }

    /// The bottom element (the empty class).
    pub fn bottom(&self) -> ClassId {
        self.nodes()
            .find(|&b| self.ups[b.index()].count_ones() as usize == CLASS_COUNT)
            .expect("a bottom exists")
    }

    /// Cover edges `(lower, upper)` of the Hasse diagram.
    pub fn covers(&self) -> &[(ClassId, ClassId)] {
        &self.covers
    }

    /// Classes covering `c` from above.
    pub fn upper_covers(&self, c: ClassId) -> Vec<ClassId> {
        self.covers
            .iter()
            .filter(|&&(lo, _)| lo == c)
            .map(|&(_, hi)| hi)
            .collect()
    }

    /// Classes covered by `c`.
    pub fn lower_covers(&self, c: ClassId) -> Vec<ClassId> {
        self.covers
            .iter()
            .filter(|&&(_, hi)| hi == c)
            .map(|&(lo, _)| lo)
            .collect()
    }

    /// The greatest common lower bound of `a` and `b`.  The 93 classes are
    /// intersection-closed, so the meet always exists and its slices are the
    /// pairwise slice intersections; a failure indicates a roster bug.
    pub fn meet(&self, a: ClassId, b: ClassId) -> Result<ClassId, LatticeError> {
        let common = self.downs[a.index()] & self.downs[b.index()];
        let mut best = None;
        for c in self.nodes() {
            let i = c.index();
            if common >> i & 1 == 1 && common & !self.downs[i] == 0 {
                if best.is_some() {
                    return Err(LatticeError::MissingMeet { left: a, right: b });
                }
                best = Some(c);
            }
        }
        best.ok_or(LatticeError::MissingMeet { left: a, right: b })
    }

    /// Classes with exactly one upper cover (the top is excluded).
    pub fn meet_irreducibles(&self) -> Vec<ClassId> {
        let top = self.top();
        self.nodes()
            .filter(|&c| c != top && self.upper_covers(c).len() == 1)
            .collect()
    }

    /// The three roster permutations induced by outer negation, inner
    /// negation, and duality, in that order and indexed by roster position.
    /// Each is an order-automorphism of the lattice.
    pub fn automorphism_images(&self) -> [Vec<ClassId>; 3] {
        let neg = self.nodes().map(|c| c.negation_partner()).collect();
        let inner = self.nodes().map(|c| c.inner_negation_partner()).collect();
        let dual = self.nodes().map(|c| c.dual_partner()).collect();
        [neg, inner, dual]
    }

    /// Hasse diagram in DOT format, with the 19 classes that are clones
    /// drawn filled.
    pub fn to_dot(&self) -> String {
        let clone_classes: Vec<ClassId> = CloneId::all().filter_map(|c| c.class()).collect();
        let mut out = String::new();
        out.push_str("digraph class_lattice {\n");
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=box, fontsize=10];\n");
        for c in self.nodes() {
            if clone_classes.contains(&c) {
                let _ = writeln!(
                    out,
                    "  \"{c}\" [style=filled, fillcolor=lightgrey];"
                );
            } else {
                let _ = writeln!(out, "  \"{c}\";");
            }
        }
        for (lo, hi) in &self.covers {
            let _ = writeln!(out, "  \"{lo}\" -> \"{hi}\";");
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for ClassLattice {
    /// Serializes as `{decision_arity, nodes, leq, covers}`, where `leq`
    /// lists for each class the classes above it, in roster order.
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let nodes: Vec<&str> = self.nodes().map(|c| c.name()).collect();
        let leq: Vec<Vec<&str>> = self
            .nodes()
            .map(|a| {
                self.nodes()
                    .filter(|&b| self.leq(a, b))
                    .map(|b| b.name())
                    .collect()
            })
            .collect();
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|&(lo, hi)| (lo.name(), hi.name()))
            .collect();
        let mut s = ser.serialize_struct("ClassLattice", 4)?;
        s.serialize_field("decision_arity", &self.decision_arity)?;
        s.serialize_field("nodes", &nodes)?;
        s.serialize_field("leq", &leq)?;
        s.serialize_field("covers", &covers)?;
        s.end()
    }
}
