//! Truth tables and the minor/composition algebra.
//!
//! An `n`-ary Boolean function `f : {0,1}ⁿ → {0,1}` is stored as `2ⁿ` output
//! bits.  Row index `i` encodes the argument tuple `(a₁,…,aₙ)` with `a₁` the
//! *most significant* binary digit of `i`; so for `n = 2` the rows are
//! `00, 01, 10, 11` read as `(a₁,a₂)`.  The canonical text form is
//! `"n:b₀b₁…b_{2ⁿ−1}"` (row 0 first), e.g. `and = "2:0001"`.
//!
//! The algebra provided here:
//!
//! * minors `f_σ(a) = f(a ∘ σ)` for an argument map `σ : [n] → [m]`
//!   ([`TruthTable::minor`]), covering permutation, identification, and
//!   introduction of fictitious arguments;
//! * composition `f(g₁,…,gₙ)(a) = f(g₁(a),…,gₙ(a))` ([`TruthTable::compose`]);
//! * the star product `(f ∗ g)(a₁,…,a_{m+n−1}) = f(g(a₁,…,a_m),
//!   a_{m+1},…,a_{m+n−1})` ([`TruthTable::star`]);
//! * pointwise ternary majority ([`maj3`]), implemented bit-parallel as
//!   `(f∧g) ∨ (f∧h) ∨ (g∧h)`;
//! * negation, inner negation `fⁿ(a) = f(ā)`, and the dual
//!   `f^d = ¬f(ā)` ([`TruthTable::negate`], [`TruthTable::inner_negate`],
//!   [`TruthTable::dual`]).
//!
//! Values are immutable after construction and all operations are pure.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Hard upper bound on the arity of any representable truth table.
///
/// `2^20` rows (128 KiB of bits) is comfortably enough for every bounded
/// search in this crate while still letting the constructive decomposition
/// build outer functions of moderate arity.  The *default* working limit is
/// lower ([`default_max_arity`]); callers raise it per call site or via the
/// CLI, never above this constant.
pub const HARD_MAX_ARITY: u8 = 20;

/// Default working arity limit: tables of arity ≤ 6 fit in one 64-bit word.
pub const DEFAULT_MAX_ARITY: u8 = 6;

/// The working arity limit honoured by parsing and arity-expanding
/// operations: the `MINION_MAX_ARITY` environment variable when set to a
/// valid value, otherwise [`DEFAULT_MAX_ARITY`].  Never exceeds
/// [`HARD_MAX_ARITY`].
pub fn default_max_arity() -> u8 {
    static LIMIT: std::sync::OnceLock<u8> = std::sync::OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("MINION_MAX_ARITY")
            .ok()
            .and_then(|v| v.parse::<u8>().ok())
            .filter(|&n| (1..=HARD_MAX_ARITY).contains(&n))
            .unwrap_or(DEFAULT_MAX_ARITY)
    })
}

/// Errors produced by truth-table construction and algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("arity {arity} out of supported range 1..={max}")]
    ArityOutOfRange { arity: usize, max: u8 },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: u8, got: u8 },
    #[error("composition expects {expected} inner functions, got {got}")]
    WrongListLength { expected: usize, got: usize },
    #[error("inner functions must share one arity (found {first} and {other})")]
    MixedInnerArities { first: u8, other: u8 },
    #[error("malformed truth table literal {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("argument map entry {entry} outside target range 1..={target_arity}")]
    BadArgMapEntry { entry: u8, target_arity: u8 },
    #[error("argument map has {got} entries but source arity is {source_arity}")]
    BadArgMapLength { source_arity: u8, got: usize },
}

/// An argument map `σ : [n] → [m]` driving minor formation `f_σ`.
///
/// Entries are 1-based: `image[i-1] = σ(i)` tells which of the `m` target
/// arguments feeds the `i`-th argument of the source function.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArgMap {
    target_arity: u8,
    image: Vec<u8>,
}

impl ArgMap {
    /// Builds a map with the given 1-based `image` entries into `1..=target_arity`.
    pub fn new(image: Vec<u8>, target_arity: u8) -> Result<Self, TableError> {
        if target_arity == 0 || target_arity > HARD_MAX_ARITY {
            return Err(TableError::ArityOutOfRange {
                arity: target_arity as usize,
                max: HARD_MAX_ARITY,
            });
        }
        if image.is_empty() || image.len() > HARD_MAX_ARITY as usize {
            return Err(TableError::BadArgMapLength {
                source_arity: image.len().min(u8::MAX as usize) as u8,
                got: image.len(),
            });
        }
        if let Some(&entry) = image.iter().find(|&&e| e == 0 || e > target_arity) {
            return Err(TableError::BadArgMapEntry { entry, target_arity });
        }
        Ok(ArgMap { target_arity, image })
    }

    pub fn source_arity(&self) -> u8 {
        self.image.len() as u8
    }

    pub fn target_arity(&self) -> u8 {
        self.target_arity
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: u8) -> u8 {
        self.image[i as usize - 1]
    }

    pub fn image(&self) -> &[u8] {
        &self.image
    }

    /// The identity map on `1..=n`.
    pub fn identity(n: u8) -> Result<Self, TableError> {
        ArgMap::new((1..=n).collect(), n)
    }

    /// The composite map `i ↦ τ(σ(i))`, satisfying
    /// `minor(minor(f,σ),τ) = minor(f, σ.then(τ))`.
    pub fn then(&self, tau: &ArgMap) -> Result<Self, TableError> {
        if tau.source_arity() != self.target_arity {
            return Err(TableError::ArityMismatch {
                expected: self.target_arity,
                got: tau.source_arity(),
            });
        }
        ArgMap::new(
            self.image.iter().map(|&i| tau.apply(i)).collect(),
            tau.target_arity,
        )
    }
}

/// An `n`-ary Boolean function stored as `2ⁿ` output bits.
///
/// Equality is value equality of arity and all bits; fictitious arguments are
/// *not* normalized away (the closure operators are arity-stratified).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: u8,
    /// Bit `r & 63` of `words[r >> 6]` is `f(row r)`; trailing bits are zero.
    words: Vec<u64>,
}

fn word_count(arity: u8) -> usize {
    ((1usize << arity) + 63) >> 6
}

impl TruthTable {
    fn check_arity(arity: usize, max: u8) -> Result<u8, TableError> {
        if arity == 0 || arity > max as usize {
            Err(TableError::ArityOutOfRange { arity, max })
        } else {
            Ok(arity as u8)
        }
    }

    fn zeroed(arity: u8) -> TruthTable {
        TruthTable {
            arity,
            words: vec![0; word_count(arity)],
        }
    }

    fn mask_top(&mut self) {
        let rows = self.row_count();
        if rows < 64 {
            self.words[0] &= (1u64 << rows) - 1;
        }
    }

    /// Builds a table from a row predicate; row index encodes `(a₁,…,aₙ)`
    /// with `a₁` as the most significant digit.
    pub fn from_row_fn(arity: u8, mut f: impl FnMut(u32) -> bool) -> Result<Self, TableError> {
        Self::check_arity(arity as usize, HARD_MAX_ARITY)?;
        let mut t = TruthTable::zeroed(arity);
        for r in 0..t.row_count() {
            if f(r) {
                t.words[(r >> 6) as usize] |= 1u64 << (r & 63);
            }
        }
        Ok(t)
    }

    /// Builds a table from a predicate on argument tuples; `args[k]` is
    /// `a_{k+1}`.
    pub fn from_fn(arity: u8, mut f: impl FnMut(&[bool]) -> bool) -> Result<Self, TableError> {
        let mut buf = vec![false; arity as usize];
        Self::from_row_fn(arity, |r| {
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = (r >> (arity as usize - 1 - k)) & 1 == 1;
            }
            f(&buf)
        })
    }

    /// The constant function of the given arity.
    pub fn constant(arity: u8, value: bool) -> Result<Self, TableError> {
        Self::from_row_fn(arity, |_| value)
    }

    /// The projection onto the `i`-th argument (1-based).
    pub fn projection(arity: u8, i: u8) -> Result<Self, TableError> {
        if i == 0 || i > arity {
            return Err(TableError::BadArgMapEntry {
                entry: i,
                target_arity: arity,
            });
        }
        Self::from_row_fn(arity, |r| (r >> (arity - i)) & 1 == 1)
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn row_count(&self) -> u32 {
        1u32 << self.arity
    }

    /// `f(row r)`.
    pub fn get_row(&self, r: u32) -> bool {
        debug_assert!(r < self.row_count());
        (self.words[(r >> 6) as usize] >> (r & 63)) & 1 == 1
    }

    /// Value of argument `a_i` (1-based) within row `r`.
    pub fn row_arg(r: u32, arity: u8, i: u8) -> bool {
        (r >> (arity - i)) & 1 == 1
    }

    /// Evaluates the function on an argument tuple.
    pub fn eval(&self, args: &[bool]) -> Result<bool, TableError> {
        if args.len() != self.arity as usize {
            return Err(TableError::ArityMismatch {
                expected: self.arity,
                got: args.len().min(u8::MAX as usize) as u8,
            });
        }
        let row = args.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        Ok(self.get_row(row))
    }

    /// Raw bit words (row `r` ↔ bit `r & 63` of word `r >> 6`).
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// For arity ≤ 6: the whole table as one integer, row `r` at bit `r`.
    pub fn as_word(&self) -> Option<u64> {
        (self.words.len() == 1).then(|| self.words[0])
    }

    /// Builds a single-word table (arity ≤ 6) directly from its bit word.
    pub(crate) fn from_word(arity: u8, word: u64) -> TruthTable {
        debug_assert!((1..=6).contains(&arity));
        let mut t = TruthTable {
            arity,
            words: vec![word],
        };
        t.mask_top();
        t
    }

    /// Number of true points.
    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// `¬f`.
    pub fn negate(&self) -> TruthTable {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.mask_top();
        out
    }

    /// Inner negation `fⁿ(a) = f(ā)`: reverses the row order.
    pub fn inner_negate(&self) -> TruthTable {
        let last = self.row_count() - 1;
        TruthTable::from_row_fn(self.arity, |r| self.get_row(last - r))
            .expect("arity already validated")
    }

    /// The dual `f^d(a) = ¬f(ā)`.
    pub fn dual(&self) -> TruthTable {
        self.inner_negate().negate()
    }

    /// The minor `f_σ` with `f_σ(a) = f(a ∘ σ)`, of arity `σ.target_arity()`.
    pub fn minor(&self, sigma: &ArgMap) -> Result<TruthTable, TableError> {
        if sigma.source_arity() != self.arity {
            return Err(TableError::ArityMismatch {
                expected: self.arity,
                got: sigma.source_arity(),
            });
        }
        let m = sigma.target_arity();
        TruthTable::from_row_fn(m, |a| {
            let mut row = 0u32;
            for i in 1..=self.arity {
                row = (row << 1) | TruthTable::row_arg(a, m, sigma.apply(i)) as u32;
            }
            self.get_row(row)
        })
    }

    /// All minors of `f` at arity `m`: `{ f_σ : σ ∈ [m]^[n] }`, deduplicated.
    pub fn all_minors(&self, m: u8) -> Result<BTreeSet<TruthTable>, TableError> {
        TruthTable::check_arity(m as usize, HARD_MAX_ARITY)?;
        let n = self.arity as usize;
        let mut out = BTreeSet::new();
        let mut image = vec![1u8; n];
        loop {
            let sigma = ArgMap::new(image.clone(), m)?;
            out.insert(self.minor(&sigma)?);
            // advance the odometer over [m]^n
            let mut k = n;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if image[k] < m {
                    image[k] += 1;
                    break;
                }
                image[k] = 1;
            }
        }
    }

    /// Composition `f(g₁,…,gₙ)` of this `n`-ary function with `n` inner
    /// functions of one common arity.
    pub fn compose(&self, inner: &[TruthTable]) -> Result<TruthTable, TableError> {
        if inner.len() != self.arity as usize {
            return Err(TableError::WrongListLength {
                expected: self.arity as usize,
                got: inner.len(),
            });
        }
        let m = inner[0].arity;
        if let Some(g) = inner.iter().find(|g| g.arity != m) {
            return Err(TableError::MixedInnerArities {
                first: m,
                other: g.arity,
            });
        }
        TruthTable::from_row_fn(m, |a| {
            let mut row = 0u32;
            for g in inner {
                row = (row << 1) | g.get_row(a) as u32;
            }
            self.get_row(row)
        })
    }

    /// The star product `(f ∗ g)(a₁,…,a_{m+n−1}) =
    /// f(g(a₁,…,a_m), a_{m+1},…,a_{m+n−1})`, of arity `m + n − 1`.
    pub fn star(&self, g: &TruthTable) -> Result<TruthTable, TableError> {
        let n = self.arity as usize;
        let m = g.arity as usize;
        let combined = TruthTable::check_arity(m + n - 1, HARD_MAX_ARITY)?;
        let tail = n - 1; // trailing pass-through arguments of f
        TruthTable::from_row_fn(combined, |a| {
            let grow = a >> tail;
            let frow = ((g.get_row(grow) as u32) << tail) | (a & ((1u32 << tail) - 1));
            self.get_row(frow)
        })
    }

    /// The unary minor identifying all arguments: `f'(a) = f(a,…,a)`.
    pub fn unary_collapse(&self) -> TruthTable {
        let sigma = ArgMap::new(vec![1; self.arity as usize], 1).expect("valid map");
        self.minor(&sigma).expect("arity matches")
    }

    /// Parses the canonical form `"n:b₀b₁…"`, requiring exactly `2ⁿ` bits.
    pub fn parse_with_limit(text: &str, max_arity: u8) -> Result<Self, TableError> {
        let err = |reason: &str| TableError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let (head, bits) = text.split_once(':').ok_or_else(|| err("missing ':'"))?;
        let arity: usize = head
            .parse()
            .map_err(|_| err("arity is not a decimal number"))?;
        let arity = TruthTable::check_arity(arity, max_arity)?;
        if bits.len() != 1usize << arity {
            return Err(err(&format!(
                "expected {} bits, got {}",
                1usize << arity,
                bits.len()
            )));
        }
        let bytes = bits.as_bytes();
        if let Some(&c) = bytes.iter().find(|&&c| c != b'0' && c != b'1') {
            return Err(err(&format!("invalid bit character {:?}", c as char)));
        }
        TruthTable::from_row_fn(arity, |r| bytes[r as usize] == b'1')
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.arity)?;
        for r in 0..self.row_count() {
            write!(f, "{}", self.get_row(r) as u8)?;
        }
        Ok(())
    }
}

impl FromStr for TruthTable {
    type Err = TableError;

    /// Parses `"n:bits"` under the working arity limit
    /// ([`default_max_arity`]).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TruthTable::parse_with_limit(s, default_max_arity())
    }
}

impl Ord for TruthTable {
    /// Orders by arity, then lexicographically by the printed bit string
    /// (row 0 compared first) — so sorting tables and sorting their `n:bits`
    /// serializations agree.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity.cmp(&other.arity).then_with(|| {
            let left = self.words.iter().map(|w| w.reverse_bits());
            let right = other.words.iter().map(|w| w.reverse_bits());
            left.cmp(right)
        })
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for TruthTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TruthTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        TruthTable::parse_with_limit(&s, HARD_MAX_ARITY).map_err(serde::de::Error::custom)
    }
}

/// Pointwise ternary majority `μ(f,g,h)`, computed bit-parallel as
/// `(f∧g) ∨ (f∧h) ∨ (g∧h)`.
pub fn maj3(f: &TruthTable, g: &TruthTable, h: &TruthTable) -> Result<TruthTable, TableError> {
    if g.arity != f.arity {
        return Err(TableError::ArityMismatch {
            expected: f.arity,
            got: g.arity,
        });
    }
    if h.arity != f.arity {
        return Err(TableError::ArityMismatch {
            expected: f.arity,
            got: h.arity,
        });
    }
    let mut out = TruthTable::zeroed(f.arity);
    for (o, ((&a, &b), &c)) in out
        .words
        .iter_mut()
        .zip(f.words.iter().zip(g.words.iter()).zip(h.words.iter()))
    {
        *o = (a & b) | (a & c) | (b & c);
    }
    Ok(out)
}

/// The well-known named functions used throughout tests and examples.
pub mod named {
    use super::TruthTable;

    fn t(s: &str) -> TruthTable {
        TruthTable::parse_with_limit(s, super::HARD_MAX_ARITY).expect("named table literal")
    }

    pub fn const0() -> TruthTable {
        t("1:00")
    }
    pub fn const1() -> TruthTable {
        t("1:11")
    }
    pub fn id() -> TruthTable {
        t("1:01")
    }
    pub fn not() -> TruthTable {
        t("1:10")
    }
    pub fn and() -> TruthTable {
        t("2:0001")
    }
    pub fn or() -> TruthTable {
        t("2:0111")
    }
    pub fn xor() -> TruthTable {
        t("2:0110")
    }
    pub fn iff() -> TruthTable {
        t("2:1001")
    }
    /// Nonimplication `a ∧ ¬b`.
    pub fn nimp() -> TruthTable {
        t("2:0010")
    }
    /// Ternary majority `μ`.
    pub fn maj() -> TruthTable {
        t("3:00010111")
    }
    /// Ternary parity `a ⊕ b ⊕ c`.
    pub fn xor3() -> TruthTable {
        t("3:01101001")
    }

    /// Name → table pairs for every named function.
    pub fn all() -> Vec<(&'static str, TruthTable)> {
        vec![
            ("const0", const0()),
            ("const1", const1()),
            ("id", id()),
            ("not", not()),
            ("and", and()),
            ("or", or()),
            ("xor", xor()),
            ("iff", iff()),
            ("nimp", nimp()),
            ("maj", maj()),
            ("xor3", xor3()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn tt(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn amap(image: &[u8], m: u8) -> ArgMap {
        ArgMap::new(image.to_vec(), m).unwrap()
    }

    #[test]
    fn named_tables_match_their_defining_formulas() {
        assert_eq!(id(), TruthTable::from_fn(1, |a| a[0]).unwrap());
        assert_eq!(not(), TruthTable::from_fn(1, |a| !a[0]).unwrap());
        assert_eq!(and(), TruthTable::from_fn(2, |a| a[0] & a[1]).unwrap());
        assert_eq!(or(), TruthTable::from_fn(2, |a| a[0] | a[1]).unwrap());
        assert_eq!(xor(), TruthTable::from_fn(2, |a| a[0] ^ a[1]).unwrap());
        assert_eq!(iff(), TruthTable::from_fn(2, |a| a[0] == a[1]).unwrap());
        assert_eq!(nimp(), TruthTable::from_fn(2, |a| a[0] & !a[1]).unwrap());
        assert_eq!(
            maj(),
            TruthTable::from_fn(3, |a| (a[0] as u8 + a[1] as u8 + a[2] as u8) >= 2).unwrap()
        );
        assert_eq!(
            xor3(),
            TruthTable::from_fn(3, |a| a[0] ^ a[1] ^ a[2]).unwrap()
        );
    }

    #[test]
    fn eval_reads_rows_msb_first() {
        assert!(maj().eval(&[false, true, true]).unwrap());
        assert!(!and().eval(&[false, false]).unwrap());
        assert!(id().eval(&[true]).unwrap());
        // row 1 of nimp is (a₁,a₂) = (0,1) → 0; row 2 is (1,0) → 1
        assert!(!nimp().get_row(1));
        assert!(nimp().get_row(2));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for (_, table) in all() {
            let text = table.to_string();
            assert_eq!(text.parse::<TruthTable>().unwrap(), table);
        }
        assert_eq!(tt("1:01").to_string(), "1:01");
        assert!(matches!(
            "2:001".parse::<TruthTable>(),
            Err(TableError::Parse { .. })
        ));
        assert!(matches!(
            "2:0a01".parse::<TruthTable>(),
            Err(TableError::Parse { .. })
        ));
        assert!(matches!(
            "0:".parse::<TruthTable>(),
            Err(TableError::ArityOutOfRange { .. })
        ));
        assert!(matches!(
            "9:0".parse::<TruthTable>(),
            Err(TableError::ArityOutOfRange { .. })
        ));
    }

    #[test]
    fn minors_match_hand_computations() {
        assert_eq!(and().minor(&amap(&[1, 1], 1)).unwrap(), id());
        assert_eq!(
            maj().minor(&amap(&[1, 1, 2], 2)).unwrap(),
            TruthTable::projection(2, 1).unwrap()
        );
        assert_eq!(nimp().minor(&amap(&[2, 1], 2)).unwrap(), tt("2:0100"));
    }

    #[test]
    fn all_minors_enumerations() {
        let minors: Vec<String> = and()
            .all_minors(2)
            .unwrap()
            .iter()
            .map(|t| t.to_string())
            .collect();
        let mut expect = vec!["2:0011".to_string(), "2:0101".into(), "2:0001".into()];
        expect.sort_by_key(|s| s.parse::<TruthTable>().unwrap());
        assert_eq!(minors, expect);
        assert_eq!(
            maj().all_minors(1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![id()]
        );
    }

    #[test]
    fn minor_composition_law_exhaustive_small() {
        // minor(minor(f,σ),τ) = minor(f, σ.then(τ)) for all σ:[2]→[2], τ:[2]→[3]
        for bits in 0..16u32 {
            let f = TruthTable::from_row_fn(2, |r| (bits >> r) & 1 == 1).unwrap();
            for s1 in 1..=2u8 {
                for s2 in 1..=2u8 {
                    let sigma = amap(&[s1, s2], 2);
                    for t1 in 1..=3u8 {
                        for t2 in 1..=3u8 {
                            let tau = amap(&[t1, t2], 3);
                            let lhs = f.minor(&sigma).unwrap().minor(&tau).unwrap();
                            let rhs = f.minor(&sigma.then(&tau).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn compose_matches_examples() {
        let pr1 = TruthTable::projection(2, 1).unwrap();
        let pr2 = TruthTable::projection(2, 2).unwrap();
        let c0 = TruthTable::constant(2, false).unwrap();
        let c1 = TruthTable::constant(2, true).unwrap();
        assert_eq!(maj().compose(&[pr1.clone(), pr2.clone(), c0]).unwrap(), and());
        assert_eq!(maj().compose(&[pr1.clone(), pr2.clone(), c1.clone()]).unwrap(), or());
        let nimp21 = nimp().minor(&amap(&[2, 1], 2)).unwrap();
        assert_eq!(maj().compose(&[nimp(), nimp21, c1]).unwrap(), xor());
        // compose with projections = minor
        let sigma = amap(&[2, 1], 2);
        assert_eq!(
            nimp().compose(&[pr2, pr1]).unwrap(),
            nimp().minor(&sigma).unwrap()
        );
    }

    #[test]
    fn star_matches_examples() {
        assert_eq!(and().star(&or()).unwrap(), tt("3:00010101"));
        for (_, f) in all() {
            assert_eq!(id().star(&f).unwrap(), f);
        }
    }

    #[test]
    fn star_with_majority_equals_pointwise_majority_of_minors() {
        // (f ∗ μ)(a) = μ(f_{σ₁}, f_{σ₂}, f_{σ₃})(a) where σᵢ sends argument 1
        // to i and argument j ≥ 2 to j + 2.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=4u8 {
            for _ in 0..50 {
                let bits = next();
                let f = TruthTable::from_row_fn(n, |r| (bits >> r) & 1 == 1).unwrap();
                let lhs = f.star(&maj()).unwrap();
                let minors: Vec<TruthTable> = (1..=3u8)
                    .map(|i| {
                        let mut image = vec![i];
                        image.extend((2..=n).map(|j| j + 2));
                        f.minor(&ArgMap::new(image, n + 2).unwrap()).unwrap()
                    })
                    .collect();
                let rhs = maj3(&minors[0], &minors[1], &minors[2]).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dualities() {
        assert_eq!(and().dual(), or());
        assert_eq!(nimp().inner_negate(), tt("2:0100"));
        for (_, f) in all() {
            assert_eq!(f.negate().negate(), f);
            assert_eq!(f.inner_negate().inner_negate(), f);
            assert_eq!(f.dual().dual(), f);
            assert_eq!(f.negate().inner_negate(), f.inner_negate().negate());
        }
    }

    #[test]
    fn maj3_bit_parallel_matches_composition_exhaustively() {
        for a in 0..16u32 {
            for b in 0..16u32 {
                for c in 0..16u32 {
                    let fa = TruthTable::from_row_fn(2, |r| (a >> r) & 1 == 1).unwrap();
                    let fb = TruthTable::from_row_fn(2, |r| (b >> r) & 1 == 1).unwrap();
                    let fc = TruthTable::from_row_fn(2, |r| (c >> r) & 1 == 1).unwrap();
                    let lhs = maj3(&fa, &fb, &fc).unwrap();
                    let rhs = maj()
                        .compose(&[fa.clone(), fb.clone(), fc.clone()])
                        .unwrap();
                    assert_eq!(lhs, rhs);
                    // majority absorbs duplicates
                    assert_eq!(maj3(&fa, &fa, &fb).unwrap(), fa);
                }
            }
        }
        assert_eq!(
            maj3(&tt("2:0011"), &tt("2:0101"), &tt("2:0000")).unwrap(),
            tt("2:0001")
        );
        assert_eq!(
            maj3(&tt("2:0010"), &tt("2:0100"), &tt("2:1111")).unwrap(),
            tt("2:0110")
        );
    }

    #[test]
    fn maj3_commutes_with_minors() {
        let sigma = amap(&[2, 2, 1], 2);
        let f = tt("3:00110101");
        let g = tt("3:01101001");
        let h = maj();
        assert_eq!(
            maj3(&f, &g, &h).unwrap().minor(&sigma).unwrap(),
            maj3(
                &f.minor(&sigma).unwrap(),
                &g.minor(&sigma).unwrap(),
                &h.minor(&sigma).unwrap()
            )
            .unwrap()
        );
    }

    #[test]
    fn majority_preserves_every_binary_relation() {
        // For each ρ ⊆ {0,1}² and any three pairs in ρ, the componentwise
        // majority of the pairs is again in ρ.
        for rho in 0..16u8 {
            let pairs: Vec<(bool, bool)> = (0..4u8)
                .filter(|&p| (rho >> p) & 1 == 1)
                .map(|p| (p & 2 != 0, p & 1 != 0))
                .collect();
            for &(a1, b1) in &pairs {
                for &(a2, b2) in &pairs {
                    for &(a3, b3) in &pairs {
                        let ma = (a1 & a2) | (a1 & a3) | (a2 & a3);
                        let mb = (b1 & b2) | (b1 & b3) | (b2 & b3);
                        let idx = ((ma as u8) << 1) | mb as u8;
                        assert!((rho >> idx) & 1 == 1, "relation {rho:04b} not preserved");
                    }
                }
            }
        }
    }

    #[test]
    fn unary_collapse_examples() {
        assert_eq!(and().unary_collapse(), id());
        assert_eq!(xor().unary_collapse(), const0());
        assert_eq!(not().unary_collapse(), not());
        assert_eq!(iff().unary_collapse(), const1());
    }

    #[test]
    fn ordering_matches_serialized_strings() {
        assert!(tt("1:01") < tt("2:0001"));
        assert!(tt("2:0011") < tt("2:0100"));
        assert!(tt("2:0001") < tt("2:0110"));
        // Sorting tables is the same as sorting their serializations.
        let mut tables = vec![tt("2:0111"), tt("2:0001"), tt("2:1000"), tt("2:0110")];
        tables.sort();
        let strings: Vec<String> = tables.iter().map(|t| t.to_string()).collect();
        let mut expect = strings.clone();
        expect.sort();
        assert_eq!(strings, expect);
    }

    #[test]
    fn arity_limits_enforced() {
        assert!(TruthTable::parse_with_limit("7:0", 6).is_err());
        let wide = "0".repeat(128);
        assert!(TruthTable::parse_with_limit(&format!("7:{wide}"), 7).is_ok());
        // star beyond the hard cap must error, not wrap
        let f = TruthTable::constant(HARD_MAX_ARITY, true).unwrap();
        assert!(matches!(
            f.star(&f),
            Err(TableError::ArityOutOfRange { .. })
        ));
    }
}
