//! Rank-based classification of small links and table verification.
//!
//! Every verdict is finite and diagrammatic. A named class is the one a link
//! with the computed `(components, total)` must belong to if the classification
//! theorems hold; nothing here proves an isotopy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::{base_name, Dataset, DatasetEntry};
use crate::error::{Error, Result};
use crate::khovanov::{kh_ranks, Basepoint, BigradedRanks, KhComplex, KhOptions};
use crate::linkdiag::LinkDiagram;

pub const IDENTIFICATION_NOTE: &str =
    "necessary rank class, conditional on the classification theorems; not an isotopy proof";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CorollaryClass {
    Unlink(usize),
    Trefoil,
    Hopf,
    HopfSumHopf,
    HopfUnionUnknot,
    L4a1,
    L6n1,
    /// Four components at the minimal rank 16 but not an unlink.
    Forest(usize),
    AboveThreshold,
    /// At or below the threshold but matching no class; contradicts the theorems.
    Unmatched,
}

impl CorollaryClass {
    /// Whether the class appears in the list of links with total rank at most 8.
    pub fn in_rank8_list(self) -> bool {
        matches!(
            self,
            CorollaryClass::Unlink(0..=3)
                | CorollaryClass::Trefoil
                | CorollaryClass::Hopf
                | CorollaryClass::HopfSumHopf
                | CorollaryClass::HopfUnionUnknot
                | CorollaryClass::L4a1
        )
    }
}

impl fmt::Display for CorollaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorollaryClass::Unlink(k) => write!(f, "unlink-{k}"),
            CorollaryClass::Trefoil => f.write_str("trefoil"),
            CorollaryClass::Hopf => f.write_str("Hopf"),
            CorollaryClass::HopfSumHopf => f.write_str("Hopf#Hopf"),
            CorollaryClass::HopfUnionUnknot => f.write_str("Hopf⊔unknot"),
            CorollaryClass::L4a1 => f.write_str("L4a1-class"),
            CorollaryClass::L6n1 => f.write_str("L6n1-class"),
            CorollaryClass::Forest(n) => write!(f, "forest-{n}"),
            CorollaryClass::AboveThreshold => f.write_str("above-threshold"),
            CorollaryClass::Unmatched => f.write_str("unmatched"),
        }
    }
}

/// Largest total rank for which the classification names a class.
pub fn threshold(components: usize) -> u64 {
    match components {
        0..=2 => 8,
        3 => 12,
        _ => 16,
    }
}

/// Class of a link with `n` components, total rank `total`, and homology in
/// `support` distinct homological degrees.
pub fn class_for(n: usize, total: u64, support: usize) -> CorollaryClass {
    use CorollaryClass::*;
    if total > threshold(n) {
        return AboveThreshold;
    }
    match (n, total, support) {
        (0, 1, _) => Unlink(0),
        (1, 2, _) => Unlink(1),
        (1, 6, _) => Trefoil,
        (2, 4, 1) => Unlink(2),
        (2, 4, 2) => Hopf,
        (2, 8, _) => L4a1,
        (3, 8, 1) => Unlink(3),
        (3, 8, 2) => HopfUnionUnknot,
        (3, 8, 3) => HopfSumHopf,
        (3, 12, _) => L6n1,
        (4, 16, 1) => Unlink(4),
        (4, 16, _) => Forest(4),
        _ => Unmatched,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub total_a: u64,
    pub total_b: u64,
    /// `total - total_a * total_b`.
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatsonSeedVerdict {
    pub total: u64,
    pub splits: Vec<Split>,
    pub ok: bool,
}

/// `total(D) >= total(A) * total(B)` over every bipartition of the components.
pub fn batson_seed_check(d: &LinkDiagram, opts: KhOptions) -> Result<BatsonSeedVerdict> {
    let total = kh_ranks(d, false, None, opts)?.total();
    batson_seed_with_total(d, total, opts)
}

fn batson_seed_with_total(d: &LinkDiagram, total: u64, opts: KhOptions) -> Result<BatsonSeedVerdict> {
    let n = d.component_count();
    if n < 2 {
        return Err(Error::TooFewComponents(n));
    }
    let mut cache: BTreeMap<u64, u64> = BTreeMap::new();
    let mut sub_total = |mask: u64| -> Result<u64> {
        if let Some(&t) = cache.get(&mask) {
            return Ok(t);
        }
        let keep: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
        let t = kh_ranks(&d.sublink(&keep)?, false, None, opts)?.total();
        cache.insert(mask, t);
        Ok(t)
    };
    let full = (1u64 << n) - 1;
    let mut splits = Vec::new();
    // component 0 always on side A
    for mask in (1..full).filter(|m| m & 1 == 1) {
        let rest = full & !mask;
        let (ta, tb) = (sub_total(mask)?, sub_total(rest)?);
        let members = |m: u64| (0..n).filter(|&c| m >> c & 1 == 1).collect::<Vec<_>>();
        splits.push(Split {
            a: members(mask),
            b: members(rest),
            total_a: ta,
            total_b: tb,
            margin: total as i64 - (ta * tb) as i64,
        });
    }
    let ok = splits.iter().all(|s| s.margin >= 0);
    Ok(BatsonSeedVerdict { total, splits, ok })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub components: usize,
    pub total: u64,
    pub reduced_total: u64,
    /// `total ≡ 2 (mod 4)` for knots, `≡ 0 (mod 4)` otherwise.
    pub parity_ok: bool,
    /// `total >= 2^n`.
    pub lower_bound_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub batson_seed: Option<BatsonSeedVerdict>,
    pub class: String,
    pub homological_support: Vec<i64>,
    pub flags: Vec<String>,
    pub note: String,
}

impl ClassificationReport {
    pub fn is_consistent(&self) -> bool {
        self.flags.is_empty()
    }
}

pub fn parity_ok(components: usize, total: u64) -> bool {
    match components {
        0 => total == 1,
        1 => total % 4 == 2,
        _ => total % 4 == 0,
    }
}

pub fn lower_bound_ok(components: usize, total: u64) -> bool {
    components >= 64 || total >= 1u64 << components
}

pub fn classify_by_rank(d: &LinkDiagram, name: Option<&str>, opts: KhOptions) -> Result<ClassificationReport> {
    let bigraded = kh_ranks(d, false, None, opts)?;
    classify_with(d, name, &bigraded, opts)
}

fn classify_with(
    d: &LinkDiagram,
    name: Option<&str>,
    bigraded: &BigradedRanks,
    opts: KhOptions,
) -> Result<ClassificationReport> {
    let n = d.component_count();
    let total = bigraded.total();
    let reduced_total = match Basepoint::default_for(d) {
        Some(bp) => kh_ranks(d, true, Some(bp), opts)?.total(),
        None => 0,
    };
    let support = bigraded.homological_support();
    let class = class_for(n, total, support.len());
    let batson_seed = if n >= 2 { Some(batson_seed_with_total(d, total, opts)?) } else { None };

    let parity = parity_ok(n, total);
    let lower = lower_bound_ok(n, total);
    let mut flags = Vec::new();
    if !parity {
        flags.push("parity violated".to_string());
    }
    if !lower {
        flags.push(format!("total {total} below 2^{n}"));
    }
    if let Some(bs) = &batson_seed {
        for s in bs.splits.iter().filter(|s| s.margin < 0) {
            flags.push(format!("Batson-Seed margin {} for split {:?} | {:?}", s.margin, s.a, s.b));
        }
    }
    if class == CorollaryClass::Unmatched {
        flags.push(format!("no class for {n} components at total {total}"));
    }
    Ok(ClassificationReport {
        name: name.map(str::to_string),
        components: n,
        total,
        reduced_total,
        parity_ok: parity,
        lower_bound_ok: lower,
        batson_seed,
        class: class.to_string(),
        homological_support: support,
        flags,
        note: IDENTIFICATION_NOTE.to_string(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Vacuous => "vacuous",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub status: CheckStatus,
    /// Entries that break the check, sorted.
    pub counterexamples: Vec<String>,
    pub detail: String,
}

impl CheckResult {
    fn from_failures(check: &str, tested: usize, failures: BTreeSet<String>, detail: &str) -> Self {
        let status = if !failures.is_empty() {
            CheckStatus::Fail
        } else if tested == 0 {
            CheckStatus::Vacuous
        } else {
            CheckStatus::Pass
        };
        CheckResult {
            check: check.to_string(),
            status,
            counterexamples: failures.into_iter().collect(),
            detail: format!("{detail}; {tested} tested"),
        }
    }
}

/// Everything computed for one table entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryResult {
    pub name: String,
    pub crossings: usize,
    pub components: usize,
    pub declared_components: usize,
    pub total: u64,
    pub reduced_totals: Vec<u64>,
    pub class: String,
    pub expected_total: Option<u64>,
    pub expected_class: Option<String>,
    pub dd_zero: bool,
    pub euler_ok: bool,
    pub mirror_symmetric: bool,
    pub mirror_involution: bool,
    pub mirror_class_same: bool,
    pub batson_seed_ok: Option<bool>,
    pub report: ClassificationReport,
    #[serde(skip)]
    pub bigraded: BigradedRanks,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub entries: Vec<EntryResult>,
    pub errors: Vec<(String, String)>,
    pub checks: Vec<CheckResult>,
}

impl TableReport {
    /// True when every check passed; vacuous checks do not count as passing.
    pub fn all_pass(&self) -> bool {
        self.errors.is_empty() && self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }
}

pub const CHECK_COMPUTED: &str = "entries computed";
pub const CHECK_COMPONENTS: &str = "declared component counts";
pub const CHECK_HALVING: &str = "halving identity on every basepoint";
pub const CHECK_BASEPOINT: &str = "reduced total basepoint-independent";
pub const CHECK_PARITY: &str = "parity of total rank";
pub const CHECK_LOWER: &str = "total >= 2^n";
pub const CHECK_DD: &str = "d∘d = 0";
pub const CHECK_EULER: &str = "Euler characteristic per j";
pub const CHECK_MIRROR: &str = "mirror bigraded symmetry";
pub const CHECK_INVOLUTION: &str = "mirror involution";
pub const CHECK_MIRROR_CLASS: &str = "mirror class invariance";
pub const CHECK_BATSON_SEED: &str = "Batson-Seed margins nonnegative";
pub const CHECK_UNION: &str = "disjoint union multiplicativity";
pub const CHECK_CONSISTENT: &str = "classification consistency";
pub const CHECK_L4A1: &str = "(n=2, total 8) is exactly the L4a1 pair";
pub const CHECK_L6N1: &str = "(n=3, total 12) is exactly the L6n1 pair";
pub const CHECK_RANK8: &str = "total <= 8 entries are in the rank-8 list";
pub const CHECK_EXPECTED_TOTAL: &str = "expected totals";
pub const CHECK_EXPECTED_CLASS: &str = "expected classes";

// entries up to this size are paired for the disjoint-union check
const UNION_MAX_CROSSINGS: usize = 4;

/// d∘d = 0 on every block of the unreduced complex.
pub fn dd_zero(cx: &KhComplex) -> bool {
    cx.gradings().iter().all(|&(i, j)| {
        let d0 = cx.differential(i, j);
        let d1 = cx.differential(i + 1, j);
        d0.mul(&d1).map(|m| m.is_zero()).unwrap_or(false)
    })
}

/// `Σ (-1)^i dim C^{i,j} = Σ (-1)^i rank H^{i,j}` for every `j`.
pub fn euler_ok(cx: &KhComplex, h: &BigradedRanks) -> bool {
    let mut chi: BTreeMap<i64, i64> = BTreeMap::new();
    for (i, j) in cx.gradings() {
        *chi.entry(j).or_default() += sign(i) * cx.chain_dim(i, j) as i64;
    }
    for ((i, j), r) in h.iter() {
        *chi.entry(j).or_default() -= sign(i) * r as i64;
    }
    chi.values().all(|&v| v == 0)
}

fn sign(i: i64) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn evaluate_entry(e: &DatasetEntry, opts: KhOptions) -> Result<EntryResult> {
    let start = std::time::Instant::now();
    let d = e.diagram()?;
    let cx = KhComplex::new(&d, None, opts)?;
    let bigraded = cx.homology();
    let dd = dd_zero(&cx);
    let euler = euler_ok(&cx, &bigraded);
    drop(cx);

    let mut reduced_totals = Vec::new();
    for bp in Basepoint::all_for(&d) {
        reduced_totals.push(kh_ranks(&d, true, Some(bp), opts)?.total());
    }
    let report = classify_with(&d, Some(&e.name), &bigraded, opts)?;

    let m = d.mirror();
    let mirror_bigraded = kh_ranks(&m, false, None, opts)?;
    let mirror_symmetric = mirror_bigraded == bigraded.reflected();
    let mirror_class = class_for(m.component_count(), mirror_bigraded.total(), mirror_bigraded.homological_support().len());

    Ok(EntryResult {
        name: e.name.clone(),
        crossings: d.crossing_count(),
        components: d.component_count(),
        declared_components: e.components,
        total: bigraded.total(),
        reduced_totals,
        class: report.class.clone(),
        expected_total: e.expected_total,
        expected_class: e.expected_class.clone(),
        dd_zero: dd,
        euler_ok: euler,
        mirror_symmetric,
        mirror_involution: m.mirror() == d,
        mirror_class_same: mirror_class.to_string() == report.class && mirror_bigraded.total() == bigraded.total(),
        batson_seed_ok: report.batson_seed.as_ref().map(|b| b.ok),
        report,
        bigraded,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs every check over `ds`. Entries are evaluated in parallel on the
/// current rayon pool; the report is sorted by entry name.
pub fn verify_table(ds: &Dataset, opts: KhOptions) -> TableReport {
    let evaluated: Vec<(String, Result<EntryResult>)> =
        ds.entries().par_iter().map(|e| (e.name.clone(), evaluate_entry(e, opts))).collect();
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for (name, r) in evaluated {
        match r {
            Ok(er) => entries.push(er),
            Err(e) => errors.push((name, e.to_string())),
        }
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    errors.sort();

    let union = union_check(ds, &entries, opts);
    let mut checks = vec![CheckResult::from_failures(
        CHECK_COMPUTED,
        ds.len(),
        errors.iter().map(|(n, e)| format!("{n}: {e}")).collect(),
        "every entry parses and stays within the crossing cap",
    )];
    let per = |check: &str, detail: &str, applies: &dyn Fn(&EntryResult) -> bool, ok: &dyn Fn(&EntryResult) -> bool| {
        let tested: Vec<&EntryResult> = entries.iter().filter(|e| applies(e)).collect();
        let failures = tested.iter().filter(|e| !ok(e)).map(|e| e.name.clone()).collect();
        CheckResult::from_failures(check, tested.len(), failures, detail)
    };
    let all = |_: &EntryResult| true;
    checks.push(per(CHECK_COMPONENTS, "diagram component count equals the declared count", &all, &|e| {
        e.components == e.declared_components
    }));
    checks.push(per(
        CHECK_HALVING,
        "total = 2 * reduced total for every arc and free loop",
        &|e| !e.reduced_totals.is_empty(),
        &|e| e.reduced_totals.iter().all(|&r| 2 * r == e.total),
    ));
    checks.push(per(
        CHECK_BASEPOINT,
        "one reduced total across all basepoints",
        &|e| e.reduced_totals.len() > 1,
        &|e| e.reduced_totals.windows(2).all(|w| w[0] == w[1]),
    ));
    checks.push(per(CHECK_PARITY, "4k+2 for knots, 4k for links", &all, &|e| parity_ok(e.components, e.total)));
    checks.push(per(CHECK_LOWER, "unreduced total at least 2^components", &all, &|e| {
        lower_bound_ok(e.components, e.total)
    }));
    checks.push(per(CHECK_DD, "composed differentials vanish on every block", &all, &|e| e.dd_zero));
    checks.push(per(CHECK_EULER, "chain and homology Euler characteristics agree", &all, &|e| e.euler_ok));
    checks.push(per(CHECK_MIRROR, "mirror ranks at (i, j) equal ranks at (-i, -j)", &all, &|e| e.mirror_symmetric));
    checks.push(per(CHECK_INVOLUTION, "mirror of the mirror is the same diagram", &all, &|e| e.mirror_involution));
    checks.push(per(CHECK_MIRROR_CLASS, "mirror has the same total, components and class", &all, &|e| {
        e.mirror_class_same
    }));
    checks.push(per(
        CHECK_BATSON_SEED,
        "total >= product of totals over every bipartition of components",
        &|e| e.batson_seed_ok.is_some(),
        &|e| e.batson_seed_ok == Some(true),
    ));
    checks.push(union);
    checks.push(per(CHECK_CONSISTENT, "no classification flags", &all, &|e| e.report.flags.is_empty()));
    checks.push(class_uniqueness(&entries, CHECK_L4A1, 2, 8, "L4a1", "L4a1-class"));
    checks.push(class_uniqueness(&entries, CHECK_L6N1, 3, 12, "L6n1", "L6n1-class"));
    checks.push(per(
        CHECK_RANK8,
        "every entry of total at most 8 gets a class from the rank-8 list",
        &|e| e.total <= 8,
        &|e| {
            let listed = [
                "unlink-0",
                "unlink-1",
                "unlink-2",
                "unlink-3",
                "trefoil",
                "Hopf",
                "Hopf#Hopf",
                "Hopf⊔unknot",
                "L4a1-class",
            ];
            listed.contains(&e.class.as_str())
        },
    ));
    checks.push(per(
        CHECK_EXPECTED_TOTAL,
        "computed totals equal the table's expected totals",
        &|e| e.expected_total.is_some(),
        &|e| e.expected_total == Some(e.total),
    ));
    checks.push(per(
        CHECK_EXPECTED_CLASS,
        "computed classes equal the table's expected classes",
        &|e| e.expected_class.is_some(),
        &|e| e.expected_class.as_deref() == Some(e.class.as_str()),
    ));
    TableReport { entries, errors, checks }
}

fn class_uniqueness(
    entries: &[EntryResult],
    check: &str,
    n: usize,
    total: u64,
    base: &str,
    class: &str,
) -> CheckResult {
    let found: BTreeSet<&str> =
        entries.iter().filter(|e| e.components == n && e.total == total).map(|e| e.name.as_str()).collect();
    let designated: BTreeSet<&str> = entries
        .iter()
        .filter(|e| base_name(&e.name) == base || e.expected_class.as_deref() == Some(class))
        .map(|e| e.name.as_str())
        .collect();
    let detail = format!("entries with {n} components and total {total}: {found:?}");
    if found.is_empty() {
        return CheckResult {
            check: check.to_string(),
            status: CheckStatus::Vacuous,
            counterexamples: designated.iter().map(|s| s.to_string()).collect(),
            detail: format!("{detail}; class is empty"),
        };
    }
    let diff: Vec<String> = found.symmetric_difference(&designated).map(|s| s.to_string()).collect();
    CheckResult {
        check: check.to_string(),
        status: if diff.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail },
        counterexamples: diff,
        detail,
    }
}

fn union_check(ds: &Dataset, entries: &[EntryResult], opts: KhOptions) -> CheckResult {
    let totals: BTreeMap<&str, u64> = entries.iter().map(|e| (e.name.as_str(), e.total)).collect();
    let small: Vec<&DatasetEntry> = ds
        .entries()
        .iter()
        .filter(|e| e.crossing_count() <= UNION_MAX_CROSSINGS && totals.contains_key(e.name.as_str()))
        .collect();
    let pairs: Vec<(&DatasetEntry, &DatasetEntry)> = small
        .iter()
        .enumerate()
        .flat_map(|(i, a)| small[i..].iter().map(move |b| (*a, *b)))
        .collect();
    let failures: BTreeSet<String> = pairs
        .par_iter()
        .filter_map(|(a, b)| {
            let ok = (|| -> Result<bool> {
                let u = a.diagram()?.disjoint_union(&b.diagram()?);
                let t = kh_ranks(&u, false, None, opts)?.total();
                Ok(t == totals[a.name.as_str()] * totals[b.name.as_str()])
            })()
            .unwrap_or(false);
            (!ok).then(|| format!("{} ⊔ {}", a.name, b.name))
        })
        .collect();
    CheckResult::from_failures(
        CHECK_UNION,
        pairs.len(),
        failures,
        &format!("total(A ⊔ B) = total(A) * total(B) over pairs of entries with at most {UNION_MAX_CROSSINGS} crossings"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> LinkDiagram {
        s.parse().unwrap()
    }

    const L4A1: &str = "X(6,1,7,2);X(8,3,5,4);X(2,5,3,6);X(4,7,1,8)";
    const L6N1: &str = "X(6,1,7,2);X(12,8,9,7);X(4,12,1,11);X(5,11,6,10);X(3,8,4,5);X(9,3,10,2)";
    const FIGURE8: &str = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)";

    #[test]
    fn classify_examples() {
        let opts = KhOptions::default();
        let r = classify_by_rank(&pd(L4A1), None, opts).unwrap();
        assert_eq!((r.components, r.total, r.class.as_str()), (2, 8, "L4a1-class"));
        let r = classify_by_rank(&pd(L6N1), None, opts).unwrap();
        assert_eq!((r.components, r.total, r.class.as_str()), (3, 12, "L6n1-class"));
        let r = classify_by_rank(&pd(FIGURE8), None, opts).unwrap();
        assert_eq!((r.components, r.total, r.class.as_str()), (1, 10, "above-threshold"));
        assert!(r.is_consistent());
    }

    #[test]
    fn support_separates_equal_ranks() {
        let opts = KhOptions::default();
        let class = |d: &LinkDiagram| classify_by_rank(d, None, opts).unwrap().class;
        assert_eq!(class(&pd("O O")), "unlink-2");
        assert_eq!(class(&pd("X(1,3,2,4);X(3,1,4,2)")), "Hopf");
        assert_eq!(class(&pd("X(1,3,2,4);X(3,1,4,2);O")), "Hopf⊔unknot");
        assert_eq!(class(&pd("O O O")), "unlink-3");
    }

    #[test]
    fn batson_seed_examples() {
        let opts = KhOptions::default();
        let v = batson_seed_check(&pd(L4A1), opts).unwrap();
        assert_eq!(v.splits.len(), 1);
        assert_eq!((v.splits[0].total_a, v.splits[0].total_b, v.splits[0].margin), (2, 2, 4));
        let v = batson_seed_check(&pd(L6N1), opts).unwrap();
        assert_eq!(v.splits.len(), 3);
        for s in &v.splits {
            let (pair, single) = if s.a.len() == 2 { (s.total_a, s.total_b) } else { (s.total_b, s.total_a) };
            assert_eq!((pair, single), (4, 2));
            assert_eq!(s.margin, 4);
        }
        let v = batson_seed_check(&pd("O O"), opts).unwrap();
        assert_eq!(v.splits[0].margin, 0);
        assert!(v.ok);
        assert_eq!(batson_seed_check(&pd("O"), opts).unwrap_err(), Error::TooFewComponents(1));
    }

    #[test]
    fn class_rules() {
        assert_eq!(class_for(2, 12, 3), CorollaryClass::AboveThreshold);
        assert_eq!(class_for(3, 12, 3), CorollaryClass::L6n1);
        assert_eq!(class_for(4, 16, 1), CorollaryClass::Unlink(4));
        assert_eq!(class_for(4, 20, 1), CorollaryClass::AboveThreshold);
        assert_eq!(class_for(1, 4, 1), CorollaryClass::Unmatched);
        assert_eq!(class_for(5, 32, 1), CorollaryClass::AboveThreshold);
    }
}
