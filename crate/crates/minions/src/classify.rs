//! Classification of generator sets and the constructive machinery behind
//! it: extending prescribed values to a self-dual monotone function,
//! bisectability of a function over a generator set, and explicit majority
//! decompositions `f = h(φ₁,…,φ_N)` with `h` self-dual monotone and each
//! `φᵢ` a minor of a generator.
//!
//! Points of `{0,1}ⁿ` are encoded as row indices, using the same convention
//! as [`TruthTable`]: the first coordinate is the most significant bit of
//! the index.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::closure::{sm_closure, ClosureError};
use crate::lattice::standard_lattice;
use crate::predicates::{enumerate_class, ClassId};
use crate::truthtable::{ArgMap, TableError, TruthTable, HARD_MAX_ARITY};

/// Failures of the classification and decomposition operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// Point-set arity outside `1..=20`.
    #[error("arity {arity} outside the supported range 1..={max}")]
    ArityOutOfRange { arity: u8, max: u8 },
    /// A prescribed point does not fit the declared arity.
    #[error("point {point} does not fit arity {arity}")]
    PointOutOfRange { point: u32, arity: u8 },
    /// Two required true points have disjoint supports, so no monotone
    /// self-dual function can map both to 1.
    #[error("true points at rows {first} and {second} have disjoint supports")]
    TruePointsConflict { first: u32, second: u32 },
    /// Two required false points jointly cover every coordinate, so no
    /// monotone self-dual function can map both to 0.
    #[error("false points at rows {first} and {second} jointly cover every coordinate")]
    FalsePointsConflict { first: u32, second: u32 },
    /// A required true point lies below a required false point.
    #[error("true point at row {true_point} lies below false point at row {false_point}")]
    CrossPointsConflict { true_point: u32, false_point: u32 },
    /// The function cannot be written over the generators: it lies outside
    /// their closure.
    #[error("the function is not bisectable over these generators")]
    NotBisectable,
    /// The generators have more distinct minors at this arity than the outer
    /// function can take as arguments.
    #[error("decomposition needs {required} coordinates, above the supported {max}")]
    DecompositionTooWide { required: usize, max: u8 },
    /// The containing classes have no unique minimum — a roster or order
    /// bug, never a legal outcome.
    #[error("no unique minimal containing class; minimal candidates: {candidates:?}")]
    NoUniqueMinimum { candidates: Vec<ClassId> },
    /// The closure of the generators disagrees with the slice of the class
    /// picked by predicate minimality — a roster bug, never a legal outcome.
    #[error("closure at arity {arity} disagrees with the slice of {class}")]
    ClosureMismatch { class: ClassId, arity: u8 },
    /// Closure computation failed (e.g. a generator above the arity limit).
    #[error(transparent)]
    Closure(#[from] ClosureError),
    /// Table algebra failed (e.g. a stored argument map no longer fits).
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Required true and false points for [`extend_sm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSets {
    arity: u8,
    trues: BTreeSet<u32>,
    falses: BTreeSet<u32>,
}

impl PointSets {
    /// Collects the prescribed points, validating only that they fit the
    /// arity; the extension hypotheses are checked by
    /// [`check_hypotheses`](Self::check_hypotheses).
    pub fn new(
        arity: u8,
        trues: impl IntoIterator<Item = u32>,
        falses: impl IntoIterator<Item = u32>,
    ) -> Result<PointSets, ClassifyError> {
        if arity == 0 || arity > HARD_MAX_ARITY {
            return Err(ClassifyError::ArityOutOfRange {
                arity,
                max: HARD_MAX_ARITY,
            });
        }
        let size = 1u32 << arity;
        let trues: BTreeSet<u32> = trues.into_iter().collect();
        let falses: BTreeSet<u32> = falses.into_iter().collect();
        if let Some(&point) = trues.iter().chain(&falses).find(|&&p| p >= size) {
            return Err(ClassifyError::PointOutOfRange { point, arity });
        }
        Ok(PointSets {
            arity,
            trues,
            falses,
        })
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn trues(&self) -> impl Iterator<Item = u32> + '_ {
        self.trues.iter().copied()
    }

    pub fn falses(&self) -> impl Iterator<Item = u32> + '_ {
        self.falses.iter().copied()
    }

    /// Checks the three extension hypotheses and reports the first
    /// offending pair: no true point may sit below the complement of a true
    /// point, no false point above the complement of a false point, and no
    /// true point below a false point.
    pub fn check_hypotheses(&self) -> Result<(), ClassifyError> {
        let top = (1u32 << self.arity) - 1;
        for &u in &self.trues {
            for &v in &self.trues {
                if u & v == 0 {
                    return Err(ClassifyError::TruePointsConflict {
                        first: u,
                        second: v,
                    });
                }
            }
        }
        for &u in &self.falses {
            for &v in &self.falses {
                if u | v == top {
                    return Err(ClassifyError::FalsePointsConflict {
                        first: u,
                        second: v,
                    });
                }
            }
        }
        for &u in &self.trues {
            for &v in &self.falses {
                if u & !v & top == 0 {
                    return Err(ClassifyError::CrossPointsConflict {
                        true_point: u,
                        false_point: v,
                    });
                }
            }
        }
        Ok(())
    }
}

/// A plain bitset over the `2^n` points of the cube.
struct RowSet {
    bits: Vec<u64>,
}

impl RowSet {
    fn new(size: u32) -> RowSet {
        RowSet {
            bits: vec![0; (size as usize).div_ceil(64)],
        }
    }

    fn test(&self, x: u32) -> bool {
        self.bits[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    fn set(&mut self, x: u32) {
        self.bits[(x >> 6) as usize] |= 1 << (x & 63);
    }
}

/// Produces a self-dual monotone function taking the prescribed values: 1 on
/// every true point, 0 on every false point.
///
/// The construction seeds an upset with the true points and the complements
/// of the false points, then repeatedly adjoins the numerically greatest
/// point not yet decided (equivalently, the lexicographically greatest
/// maximal element of the undecided region — a deterministic choice) until
/// the upset holds exactly half the cube.  Its indicator function is the
/// result.
pub fn extend_sm(ps: &PointSets) -> Result<TruthTable, ClassifyError> {
    ps.check_hypotheses()?;
    let n = ps.arity;
    let size = 1u32 << n;
    let top = size - 1;
    let half = 1u64 << (n - 1);

    let mut upset = RowSet::new(size);
    for u in ps.trues() {
        upset.set(u);
    }
    for v in ps.falses() {
        upset.set(top ^ v);
    }
    // Upward closure in one ascending pass: each point marks its direct
    // successors, which are numerically greater and thus visited later.
    let mut count = 0u64;
    for x in 0..size {
        if upset.test(x) {
            count += 1;
            for j in 0..n {
                upset.set(x | 1 << j);
            }
        }
    }
    let mut mirror = RowSet::new(size);
    for x in 0..size {
        if upset.test(x) {
            assert!(
                !upset.test(top ^ x),
                "hypotheses guarantee a self-disjoint seed"
            );
            mirror.set(top ^ x);
        }
    }
    // Completion in one descending pass: the greatest undecided point is
    // always a maximal element of the undecided region.
    for x in (0..size).rev() {
        if count == half {
            break;
        }
        if !upset.test(x) && !mirror.test(x) {
            upset.set(x);
            mirror.set(top ^ x);
            count += 1;
        }
    }
    debug_assert_eq!(count, half);
    Ok(TruthTable::from_row_fn(n, |r| upset.test(r)).expect("arity validated"))
}

/// A minor of one generator: which generator, and the argument map applied
/// to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorDescriptor {
    /// Index into the generator list.
    pub gen_index: usize,
    /// The 1-based argument map `σ(1),…,σ(k)`.
    pub sigma: Vec<u8>,
}

/// All distinct `n`-ary minors of the generators, each labelled with its
/// first occurrence in (generator index, argument map) order.
fn generator_minors(gens: &[TruthTable], n: u8) -> (Vec<TruthTable>, Vec<MinorDescriptor>) {
    let mut tables = Vec::new();
    let mut descriptors = Vec::new();
    let mut seen = BTreeSet::new();
    for (gen_index, g) in gens.iter().enumerate() {
        let k = g.arity() as usize;
        let mut image = vec![1u8; k];
        'maps: loop {
            let sigma = ArgMap::new(image.clone(), n).expect("entries stay in range");
            let minor = g.minor(&sigma).expect("valid argument map");
            if seen.insert(minor.clone()) {
                tables.push(minor);
                descriptors.push(MinorDescriptor {
                    gen_index,
                    sigma: image.clone(),
                });
            }
            let mut i = k;
            loop {
                if i == 0 {
                    break 'maps;
                }
                i -= 1;
                if image[i] < n {
                    image[i] += 1;
                    continue 'maps;
                }
                image[i] = 1;
            }
        }
    }
    (tables, descriptors)
}

/// A row pair together with the minor separating it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub row_a: u32,
    pub row_b: u32,
    /// Index into the minor list of a `τ` with `τ(row_a) = f(row_a)` and
    /// `τ(row_b) = f(row_b)`.
    pub minor_index: usize,
}

/// The witnesses behind a successful bisectability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisectionWitnesses {
    /// The distinct minors of the generators at the function's arity.
    pub minors: Vec<TruthTable>,
    /// Where each minor comes from.
    pub descriptors: Vec<MinorDescriptor>,
    /// One witness per ordered pair of rows on which the function is
    /// (1,1), (0,0), or (1,0).
    pub pair_witnesses: Vec<PairWitness>,
}

/// Pairwise test for membership of `f` in the majority closure of the
/// generators: every pair of rows where `f` takes values (1,1), (0,0), or
/// (1,0) must be matched by some minor of a generator taking the same
/// values there.  On success the full witness map is returned.
pub fn bisection_witnesses(
    f: &TruthTable,
    gens: &[TruthTable],
) -> Option<BisectionWitnesses> {
    let (minors, descriptors) = generator_minors(gens, f.arity());
    let rows = f.row_count();
    let mut pair_witnesses = Vec::new();
    for a in 0..rows {
        for b in 0..rows {
            let want = (f.get_row(a), f.get_row(b));
            if want == (false, true) {
                continue;
            }
            let found = minors
                .iter()
                .position(|t| (t.get_row(a), t.get_row(b)) == want)?;
            pair_witnesses.push(PairWitness {
                row_a: a,
                row_b: b,
                minor_index: found,
            });
        }
    }
    Some(BisectionWitnesses {
        minors,
        descriptors,
        pair_witnesses,
    })
}

/// Whether `f` passes the pairwise bisectability test over the generators —
/// equivalently, whether `f` lies in their majority closure.
pub fn is_bisectable(f: &TruthTable, gens: &[TruthTable]) -> bool {
    bisection_witnesses(f, gens).is_some()
}

/// An explicit majority decomposition `f = h(φ₁,…,φ_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// The outer function, self-dual and monotone, of arity `N`.
    pub h: TruthTable,
    /// The inner minors, in the coordinate order of `h`'s arguments; the
    /// first named minor feeds `h`'s first argument.
    pub phis: Vec<MinorDescriptor>,
}

impl Decomposition {
    /// Reconstructs the inner minor tables at arity `n` from the
    /// descriptors.
    pub fn minor_tables(
        &self,
        gens: &[TruthTable],
        n: u8,
    ) -> Result<Vec<TruthTable>, ClassifyError> {
        self.phis
            .iter()
            .map(|d| {
                let sigma = ArgMap::new(d.sigma.clone(), n)?;
                Ok(gens[d.gen_index].minor(&sigma)?)
            })
            .collect()
    }
}

/// Writes `f` as `h(φ₁,…,φ_N)` where the `φᵢ` are the distinct minors of
/// the generators at `f`'s arity and `h` is self-dual monotone, or reports
/// that `f` lies outside the closure of the generators.
pub fn sm_decompose(
    f: &TruthTable,
    gens: &[TruthTable],
) -> Result<Decomposition, ClassifyError> {
    let witnesses = bisection_witnesses(f, gens).ok_or(ClassifyError::NotBisectable)?;
    let minors = witnesses.minors;
    let n_coords = minors.len();
    if n_coords > HARD_MAX_ARITY as usize {
        return Err(ClassifyError::DecompositionTooWide {
            required: n_coords,
            max: HARD_MAX_ARITY,
        });
    }
    // φ maps each row of f to a row index of h, first minor most
    // significant — the same convention compose() uses.
    let phi = |r: u32| {
        minors
            .iter()
            .fold(0u32, |acc, t| (acc << 1) | t.get_row(r) as u32)
    };
    let trues = (0..f.row_count()).filter(|&r| f.get_row(r)).map(phi);
    let falses = (0..f.row_count()).filter(|&r| !f.get_row(r)).map(phi);
    let ps = PointSets::new(n_coords as u8, trues, falses)?;
    let h = extend_sm(&ps).expect("bisectability is exactly the extension hypotheses");
    let replay = h.compose(&minors).expect("coordinate count matches");
    assert_eq!(&replay, f, "decomposition must reproduce the function");
    Ok(Decomposition {
        h,
        phis: witnesses.descriptors,
    })
}

/// All roster classes containing every listed function, in roster order.
pub fn containing_classes(fns: &[TruthTable]) -> Vec<ClassId> {
    ClassId::all()
        .filter(|c| fns.iter().all(|f| c.expr().holds(f)))
        .collect()
}

/// The class generated by the listed functions: the unique minimal roster
/// class containing them all.  The result is cross-checked against the
/// closure computation at small arities; any disagreement is reported as an
/// error because it can only arise from a roster or order bug.
pub fn generated_class(fns: &[TruthTable]) -> Result<ClassId, ClassifyError> {
    let containing = containing_classes(fns);
    let lattice = standard_lattice();
    let minimal: Vec<ClassId> = containing
        .iter()
        .copied()
        .filter(|&c| containing.iter().all(|&d| lattice.leq(c, d)))
        .collect();
    let [class] = minimal[..] else {
        return Err(ClassifyError::NoUniqueMinimum {
            candidates: minimal,
        });
    };
    for m in 1..=generation_check_arity(fns) {
        if sm_closure(fns, m)? != enumerate_class(class, m).expect("m is enumerable") {
            return Err(ClassifyError::ClosureMismatch { class, arity: m });
        }
    }
    Ok(class)
}

/// The arity up to which [`generated_class`] cross-checks its answer
/// against the closure computation: one past the widest generator, capped
/// at 3.
pub fn generation_check_arity(fns: &[TruthTable]) -> u8 {
    let max_gen_arity = fns.iter().map(|f| f.arity()).max().unwrap_or(0);
    3u8.min(max_gen_arity + 1)
}

/// Searches all argument maps `σ: [n] → [m]` in lexicographic order for one
/// whose minor of `f` matches every `(row, value)` constraint; rows are
/// `m`-ary row indices.
pub fn minor_search(f: &TruthTable, spec: &[(u32, bool)], m: u8) -> Option<ArgMap> {
    let n = f.arity() as usize;
    debug_assert!(spec.iter().all(|&(r, _)| r < 1u32 << m));
    let mut image = vec![1u8; n];
    loop {
        let sigma = ArgMap::new(image.clone(), m).expect("entries stay in range");
        let g = f.minor(&sigma).expect("valid argument map");
        if spec.iter().all(|&(r, v)| g.get_row(r) == v) {
            return Some(sigma);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if image[i] < m {
                image[i] += 1;
                break;
            }
            image[i] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{class_member, holds, BaseProp};
    use crate::truthtable::named;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn cls(name: &str) -> ClassId {
        ClassId::from_name(name).unwrap()
    }

    fn points(arity: u8, trues: &[u32], falses: &[u32]) -> PointSets {
        PointSets::new(arity, trues.iter().copied(), falses.iter().copied()).unwrap()
    }

    #[test]
    fn point_set_validation() {
        assert!(matches!(
            PointSets::new(0, [], []),
            Err(ClassifyError::ArityOutOfRange { arity: 0, .. })
        ));
        assert!(matches!(
            PointSets::new(21, [], []),
            Err(ClassifyError::ArityOutOfRange { arity: 21, .. })
        ));
        assert!(matches!(
            PointSets::new(2, [4], []),
            Err(ClassifyError::PointOutOfRange { point: 4, arity: 2 })
        ));
    }

    #[test]
    fn hypothesis_violations_report_the_pair() {
        // A true point with empty support conflicts with itself.
        assert_eq!(
            points(2, &[0b00], &[]).check_hypotheses(),
            Err(ClassifyError::TruePointsConflict {
                first: 0,
                second: 0
            })
        );
        assert_eq!(
            points(2, &[], &[0b11]).check_hypotheses(),
            Err(ClassifyError::FalsePointsConflict {
                first: 3,
                second: 3
            })
        );
        assert_eq!(
            points(2, &[0b01], &[0b01]).check_hypotheses(),
            Err(ClassifyError::CrossPointsConflict {
                true_point: 1,
                false_point: 1
            })
        );
        assert_eq!(
            points(3, &[0b110, 0b001], &[]).check_hypotheses(),
            Err(ClassifyError::TruePointsConflict {
                first: 1,
                second: 6
            })
        );
        assert!(points(3, &[0b110], &[0b001]).check_hypotheses().is_ok());
    }

    #[test]
    fn extension_fixed_examples() {
        assert_eq!(extend_sm(&points(1, &[], &[])).unwrap(), named::id());
        // The deterministic tie-break picks the first projection.
        assert_eq!(extend_sm(&points(2, &[0b11], &[0b00])).unwrap(), t("2:0011"));
        assert_eq!(
            extend_sm(&points(3, &[0b110], &[0b001])).unwrap(),
            t("3:00001111")
        );
        assert!(extend_sm(&points(2, &[0b00], &[])).is_err());
    }

    #[test]
    fn random_extensions_are_self_dual_monotone_and_honor_the_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 120 {
            let n: u8 = rng.random_range(2..=5);
            let top = (1u32 << n) - 1;
            let trues: Vec<u32> = (0..rng.random_range(0..4))
                .map(|_| rng.random_range(1..=top))
                .collect();
            let falses: Vec<u32> = (0..rng.random_range(0..4))
                .map(|_| rng.random_range(0..top))
                .collect();
            let ps = points(n, &trues, &falses);
            let Ok(f) = extend_sm(&ps) else { continue };
            done += 1;
            assert!(holds(BaseProp::SelfDual, &f), "{f}");
            assert!(holds(BaseProp::Monotone, &f), "{f}");
            assert!(trues.iter().all(|&u| f.get_row(u)));
            assert!(falses.iter().all(|&v| !f.get_row(v)));
        }
    }

    #[test]
    fn minor_enumeration_order_and_dedup() {
        let (tables, descr) = generator_minors(&[named::maj(), named::const1()], 2);
        assert_eq!(tables, vec![t("2:0011"), t("2:0101"), t("2:1111")]);
        assert_eq!(
            descr,
            vec![
                MinorDescriptor {
                    gen_index: 0,
                    sigma: vec![1, 1, 1]
                },
                MinorDescriptor {
                    gen_index: 0,
                    sigma: vec![1, 2, 2]
                },
                MinorDescriptor {
                    gen_index: 1,
                    sigma: vec![1]
                },
            ]
        );
    }

    #[test]
    fn bisectability_examples() {
        assert!(!is_bisectable(&named::or(), &[named::and()]));
        assert!(is_bisectable(&named::maj(), &[named::maj()]));
        assert!(!is_bisectable(&named::xor3(), &[named::xor()]));
        assert!(is_bisectable(&named::xor3(), &[named::xor3()]));
    }

    #[test]
    fn witnesses_replay() {
        let f = named::maj();
        let w = bisection_witnesses(&f, &[named::maj()]).unwrap();
        assert_eq!(w.minors.len(), w.descriptors.len());
        assert!(!w.pair_witnesses.is_empty());
        for pw in &w.pair_witnesses {
            let tau = &w.minors[pw.minor_index];
            assert_eq!(tau.get_row(pw.row_a), f.get_row(pw.row_a));
            assert_eq!(tau.get_row(pw.row_b), f.get_row(pw.row_b));
        }
    }

    #[test]
    fn bisectability_equals_closure_membership_at_arity_two() {
        let mut gens: Vec<TruthTable> = Vec::new();
        for bits in 0..4u32 {
            gens.push(TruthTable::from_row_fn(1, |r| bits >> r & 1 == 1).unwrap());
        }
        for bits in 0..16u32 {
            gens.push(TruthTable::from_row_fn(2, |r| bits >> r & 1 == 1).unwrap());
        }
        for g in &gens {
            let closed = sm_closure(&[g.clone()], 2).unwrap();
            for bits in 0..16u32 {
                let f = TruthTable::from_row_fn(2, |r| bits >> r & 1 == 1).unwrap();
                assert_eq!(
                    is_bisectable(&f, std::slice::from_ref(g)),
                    closed.contains(&f),
                    "generator {g}, candidate {f}"
                );
            }
        }
    }

    #[test]
    fn bisectability_equals_closure_membership_sampled_at_arity_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..60 {
            let mut gens = Vec::new();
            for _ in 0..rng.random_range(1..=2) {
                let k: u8 = rng.random_range(1..=3);
                let bits: u32 = rng.random_range(0..1u32 << (1 << k));
                gens.push(TruthTable::from_row_fn(k, |r| bits >> r & 1 == 1).unwrap());
            }
            let closed = sm_closure(&gens, 3).unwrap();
            let bits: u32 = rng.random_range(0..256);
            let f = TruthTable::from_row_fn(3, |r| bits >> r & 1 == 1).unwrap();
            assert_eq!(
                is_bisectable(&f, &gens),
                closed.contains(&f),
                "generators {gens:?}, candidate {f}"
            );
        }
    }

    #[test]
    fn decomposition_of_disjunction() {
        let d = sm_decompose(&named::or(), &[named::maj(), named::const1()]).unwrap();
        assert_eq!(d.h, named::maj());
        assert_eq!(
            d.phis,
            vec![
                MinorDescriptor {
                    gen_index: 0,
                    sigma: vec![1, 1, 1]
                },
                MinorDescriptor {
                    gen_index: 0,
                    sigma: vec![1, 2, 2]
                },
                MinorDescriptor {
                    gen_index: 1,
                    sigma: vec![1]
                },
            ]
        );
        let inner = d
            .minor_tables(&[named::maj(), named::const1()], 2)
            .unwrap();
        assert_eq!(d.h.compose(&inner).unwrap(), named::or());
        assert_eq!(
            serde_json::to_value(&d).unwrap(),
            serde_json::json!({
                "h": "3:00010111",
                "phis": [
                    {"gen_index": 0, "sigma": [1, 1, 1]},
                    {"gen_index": 0, "sigma": [1, 2, 2]},
                    {"gen_index": 1, "sigma": [1]},
                ],
            })
        );
    }

    #[test]
    fn decomposition_examples_replay() {
        for (f, gens) in [
            (named::and(), vec![named::and()]),
            (named::xor3(), vec![named::xor3()]),
            (named::maj(), vec![named::maj()]),
        ] {
            let d = sm_decompose(&f, &gens).unwrap();
            assert!(class_member(cls("SM"), &d.h), "outer {}", d.h);
            let inner = d.minor_tables(&gens, f.arity()).unwrap();
            assert_eq!(d.h.compose(&inner).unwrap(), f);
        }
        assert_eq!(
            sm_decompose(&named::or(), &[named::and()]),
            Err(ClassifyError::NotBisectable)
        );
    }

    #[test]
    fn random_decompositions_have_self_dual_monotone_outer() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut done = 0;
        while done < 40 {
            let mut gens = Vec::new();
            for _ in 0..rng.random_range(1..=2) {
                let k: u8 = rng.random_range(1..=2);
                let bits: u32 = rng.random_range(0..1u32 << (1 << k));
                gens.push(TruthTable::from_row_fn(k, |r| bits >> r & 1 == 1).unwrap());
            }
            let n: u8 = rng.random_range(2..=3);
            let closed = sm_closure(&gens, n).unwrap();
            if closed.is_empty() {
                continue;
            }
            let pick = rng.random_range(0..closed.len());
            let f = closed.iter().nth(pick).unwrap().clone();
            let d = sm_decompose(&f, &gens).expect("closure members are bisectable");
            assert!(class_member(cls("SM"), &d.h));
            let inner = d.minor_tables(&gens, n).unwrap();
            assert_eq!(d.h.compose(&inner).unwrap(), f);
            done += 1;
        }
    }

    #[test]
    fn containing_classes_examples() {
        let around_maj = containing_classes(&[named::maj()]);
        for name in ["SM", "Sc", "S", "Mc", "McU", "Omega"] {
            assert!(around_maj.contains(&cls(name)), "{name}");
        }
        assert!(!around_maj.contains(&cls("Vak")));
        assert_eq!(containing_classes(&[]).len(), 93);

        let around_not = containing_classes(&[named::not()]);
        let l = standard_lattice();
        for &c in &around_not {
            assert!(!l.leq(c, cls("M")), "{c} is monotone-only");
            assert!(!l.leq(c, cls("Omega_0x")), "{c} preserves zero");
        }
        assert!(around_not.contains(&cls("S")));
    }

    #[test]
    fn generated_class_examples() {
        assert_eq!(generated_class(&[named::maj()]).unwrap(), cls("SM"));
        assert_eq!(generated_class(&[named::xor()]).unwrap(), cls("Refl_00"));
        assert_eq!(generated_class(&[named::and()]).unwrap(), cls("McU"));
        assert_eq!(generated_class(&[named::nimp()]).unwrap(), cls("UW_neg"));
        assert_eq!(
            generated_class(&[named::id(), named::not()]).unwrap(),
            cls("S")
        );
        assert_eq!(
            generated_class(&[named::const0(), named::const1(), named::id(), named::not()])
                .unwrap(),
            cls("Omega")
        );
        assert_eq!(generated_class(&[]).unwrap(), cls("Empty"));
    }

    /// Frozen classification of every unary and binary function.
    const SINGLETON_CLASSES: [(&str, &str); 20] = [
        ("1:00", "Vak0"),
        ("1:10", "SM_neg"),
        ("1:01", "SM"),
        ("1:11", "Vak1"),
        ("2:0000", "Vak0"),
        ("2:1000", "McW_neg"),
        ("2:0100", "UW_neg"),
        ("2:1100", "SM_neg"),
        ("2:0010", "UW_neg"),
        ("2:1010", "SM_neg"),
        ("2:0110", "Refl_00"),
        ("2:1110", "McU_neg"),
        ("2:0001", "McU"),
        ("2:1001", "Refl_11"),
        ("2:0101", "SM"),
        ("2:1101", "WU_neg"),
        ("2:0011", "SM"),
        ("2:1011", "WU_neg"),
        ("2:0111", "McW"),
        ("2:1111", "Vak1"),
    ];

    #[test]
    fn singleton_classifications_match_frozen_table() {
        for (table, class) in SINGLETON_CLASSES {
            assert_eq!(
                generated_class(&[t(table)]).unwrap(),
                cls(class),
                "generated class of {table}"
            );
        }
    }

    #[test]
    fn generated_class_is_monotone_in_the_generators() {
        let l = standard_lattice();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..40 {
            let mut fns = Vec::new();
            for _ in 0..rng.random_range(1..=3) {
                let k: u8 = rng.random_range(1..=3);
                let bits: u32 = rng.random_range(0..1u32 << (1 << k));
                fns.push(TruthTable::from_row_fn(k, |r| bits >> r & 1 == 1).unwrap());
            }
            let prefix = rng.random_range(0..fns.len());
            let small = generated_class(&fns[..prefix]).unwrap();
            let big = generated_class(&fns).unwrap();
            assert!(l.leq(small, big), "{small} vs {big}");
        }
    }

    #[test]
    fn minor_search_examples() {
        assert!(minor_search(&named::and(), &[(0, true)], 1).is_none());
        let found = minor_search(
            &named::xor(),
            &[(0b00, false), (0b11, false), (0b01, true)],
            2,
        )
        .unwrap();
        assert_eq!(found, ArgMap::new(vec![1, 2], 2).unwrap());
    }

    #[test]
    fn endpoint_functions_outside_monotone_have_the_switching_minor() {
        // Every f with f(0⃗)=0, f(1⃗)=1 that is not monotone has a ternary
        // minor with the 0,1,0,1 profile on the chain 000 < 100 < 110 < 111.
        let spec = [(0b000, false), (0b100, true), (0b110, false), (0b111, true)];
        for arity in 3..=4u8 {
            let inside = enumerate_class(cls("Omega_01"), arity).unwrap();
            for f in inside.iter() {
                if class_member(cls("M"), f) {
                    continue;
                }
                assert!(
                    minor_search(f, &spec, 3).is_some(),
                    "no switching minor for {f}"
                );
            }
        }
    }

    #[test]
    fn zero_preserving_meet_functions_have_the_nonimplication_minor() {
        for arity in 2..=4u8 {
            let inside = enumerate_class(cls("Smin_00"), arity).unwrap();
            for f in inside.iter() {
                if f == &TruthTable::constant(arity, false).unwrap() {
                    continue;
                }
                assert!(
                    f.all_minors(2).unwrap().contains(&named::nimp()),
                    "{f} lacks the non-implication minor"
                );
            }
        }
    }
}
