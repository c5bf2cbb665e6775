//! Link tables: the builtin table and JSON-lines ingestion.
//!
//! One JSON object per line:
//!
//! ```text
//! {"name":"L2a1","pd":[[4,1,3,2],[2,3,1,4]],"free_loops":0,"components":2,"expected_total":4,"source":"..."}
//! ```
//!
//! `expected_total` and `expected_class` are optional. Blank lines and lines
//! starting with `#` are skipped.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::linkdiag::{braid_closure_diagram, LinkDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetEntry {
    pub name: String,
    pub pd: Vec<[u64; 4]>,
    #[serde(default)]
    pub free_loops: usize,
    pub components: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_total: Option<u64>,
    pub source: String,
    /// Rank class the entry is known to belong to, e.g. `L4a1-class`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_class: Option<String>,
}

impl DatasetEntry {
    pub fn from_diagram(name: &str, d: &LinkDiagram, expected_total: Option<u64>, source: &str) -> Self {
        DatasetEntry {
            name: name.to_string(),
            pd: d.crossings().iter().map(|q| q.map(u64::from)).collect(),
            free_loops: d.free_loops(),
            components: d.component_count(),
            expected_total,
            source: source.to_string(),
            expected_class: None,
        }
    }

    pub fn diagram(&self) -> Result<LinkDiagram> {
        LinkDiagram::from_pd(&self.pd, self.free_loops)
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Dataset {
    entries: Vec<DatasetEntry>,
}

const LINKINFO: &str = "LinkInfo pd_notation, {0} orientation variant";
const LINKINFO_3: &str = "LinkInfo pd_notation, {0,0} orientation variant";
const KNOTINFO: &str = "KnotInfo pd_notation";

// name, PD, source, expected Z/2 total (twice the determinant for alternating entries)
const TRANSCRIBED: &[(&str, &[[u64; 4]], &str, Option<u64>)] = &[
    ("3_1", &[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], KNOTINFO, Some(6)),
    ("4_1", &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]], KNOTINFO, Some(10)),
    ("5_1", &[[2, 8, 3, 7], [4, 10, 5, 9], [6, 2, 7, 1], [8, 4, 9, 3], [10, 6, 1, 5]], KNOTINFO, Some(10)),
    ("5_2", &[[1, 5, 2, 4], [3, 9, 4, 8], [5, 1, 6, 10], [7, 3, 8, 2], [9, 7, 10, 6]], KNOTINFO, Some(14)),
    (
        "6_1",
        &[[1, 7, 2, 6], [3, 10, 4, 11], [5, 3, 6, 2], [7, 1, 8, 12], [9, 4, 10, 5], [11, 9, 12, 8]],
        KNOTINFO,
        Some(18),
    ),
    (
        "6_2",
        &[[1, 8, 2, 9], [3, 11, 4, 10], [5, 1, 6, 12], [7, 2, 8, 3], [9, 7, 10, 6], [11, 5, 12, 4]],
        KNOTINFO,
        Some(22),
    ),
    (
        "6_3",
        &[[4, 2, 5, 1], [8, 4, 9, 3], [12, 9, 1, 10], [10, 5, 11, 6], [6, 11, 7, 12], [2, 8, 3, 7]],
        KNOTINFO,
        Some(26),
    ),
    (
        "7_1",
        &[[1, 9, 2, 8], [3, 11, 4, 10], [5, 13, 6, 12], [7, 1, 8, 14], [9, 3, 10, 2], [11, 5, 12, 4], [13, 7, 14, 6]],
        KNOTINFO,
        Some(14),
    ),
    ("L2a1", &[[4, 1, 3, 2], [2, 3, 1, 4]], LINKINFO, Some(4)),
    ("L4a1", &[[6, 1, 7, 2], [8, 3, 5, 4], [2, 5, 3, 6], [4, 7, 1, 8]], LINKINFO, Some(8)),
    ("L5a1", &[[6, 1, 7, 2], [10, 7, 5, 8], [4, 5, 1, 6], [2, 10, 3, 9], [8, 4, 9, 3]], LINKINFO, Some(16)),
    (
        "L6a1",
        &[[6, 1, 7, 2], [10, 3, 11, 4], [12, 8, 5, 7], [8, 12, 9, 11], [2, 5, 3, 6], [4, 9, 1, 10]],
        LINKINFO,
        Some(24),
    ),
    (
        "L6a2",
        &[[8, 1, 9, 2], [12, 5, 7, 6], [10, 3, 11, 4], [4, 11, 5, 12], [2, 7, 3, 8], [6, 9, 1, 10]],
        LINKINFO,
        Some(20),
    ),
    (
        "L6a3",
        &[[8, 1, 9, 2], [2, 9, 3, 10], [10, 3, 11, 4], [12, 5, 7, 6], [6, 7, 1, 8], [4, 11, 5, 12]],
        LINKINFO,
        Some(12),
    ),
    (
        "L6a4",
        &[[6, 1, 7, 2], [12, 8, 9, 7], [4, 12, 1, 11], [10, 5, 11, 6], [8, 4, 5, 3], [2, 9, 3, 10]],
        LINKINFO_3,
        Some(32),
    ),
    (
        "L6a5",
        &[[6, 1, 7, 2], [10, 3, 11, 4], [12, 7, 9, 8], [8, 11, 5, 12], [2, 5, 3, 6], [4, 9, 1, 10]],
        LINKINFO_3,
        Some(24),
    ),
    (
        "L6n1",
        &[[6, 1, 7, 2], [12, 8, 9, 7], [4, 12, 1, 11], [5, 11, 6, 10], [3, 8, 4, 5], [9, 3, 10, 2]],
        LINKINFO_3,
        Some(12),
    ),
    (
        "L7a1",
        &[[6, 1, 7, 2], [12, 7, 13, 8], [4, 13, 1, 14], [10, 6, 11, 5], [8, 4, 9, 3], [14, 10, 5, 9], [2, 12, 3, 11]],
        LINKINFO,
        Some(48),
    ),
    (
        "L7a2",
        &[[6, 1, 7, 2], [10, 3, 11, 4], [14, 11, 5, 12], [12, 7, 13, 8], [8, 13, 9, 14], [2, 5, 3, 6], [4, 9, 1, 10]],
        LINKINFO,
        Some(40),
    ),
    (
        "L7a3",
        &[[6, 1, 7, 2], [10, 4, 11, 3], [12, 8, 13, 7], [14, 10, 5, 9], [8, 14, 9, 13], [2, 5, 3, 6], [4, 12, 1, 11]],
        LINKINFO,
        Some(32),
    ),
    (
        "L7a4",
        &[[6, 1, 7, 2], [10, 4, 11, 3], [14, 8, 5, 7], [12, 10, 13, 9], [8, 14, 9, 13], [2, 5, 3, 6], [4, 12, 1, 11]],
        LINKINFO,
        Some(32),
    ),
    (
        "L7a5",
        &[[8, 1, 9, 2], [10, 3, 11, 4], [12, 6, 13, 5], [14, 11, 7, 12], [4, 14, 5, 13], [2, 7, 3, 8], [6, 9, 1, 10]],
        LINKINFO,
        Some(36),
    ),
    (
        "L7a6",
        &[[8, 1, 9, 2], [10, 4, 11, 3], [14, 10, 7, 9], [12, 6, 13, 5], [2, 7, 3, 8], [4, 12, 5, 11], [6, 14, 1, 13]],
        LINKINFO,
        Some(28),
    ),
    (
        "L7a7",
        &[[6, 1, 7, 2], [10, 3, 11, 4], [14, 12, 9, 11], [8, 14, 5, 13], [12, 8, 13, 7], [2, 5, 3, 6], [4, 9, 1, 10]],
        LINKINFO_3,
        Some(40),
    ),
    (
        "L7n1",
        &[[6, 1, 7, 2], [12, 7, 13, 8], [4, 13, 1, 14], [5, 10, 6, 11], [3, 8, 4, 9], [9, 14, 10, 5], [11, 2, 12, 3]],
        LINKINFO,
        None,
    ),
    (
        "L7n2",
        &[[6, 1, 7, 2], [12, 7, 13, 8], [13, 1, 14, 4], [5, 10, 6, 11], [3, 8, 4, 9], [9, 14, 10, 5], [2, 12, 3, 11]],
        LINKINFO,
        None,
    ),
];

const MIRRORED: &[&str] = &["3_1", "L2a1", "L4a1", "L6n1"];

pub const MIRROR_SUFFIX: &str = "-mirror";

/// Entry name with any mirror suffix removed.
pub fn base_name(name: &str) -> &str {
    name.strip_suffix(MIRROR_SUFFIX).unwrap_or(name)
}

impl Dataset {
    pub fn new(entries: Vec<DatasetEntry>) -> Result<Self> {
        let ds = Dataset { entries };
        ds.validate()?;
        Ok(ds)
    }

    /// The shipped table.
    pub fn builtin() -> Dataset {
        let mut entries = Vec::new();
        let mut push_unlink = |name: &str, n: usize| {
            let d = LinkDiagram::unlink(n);
            entries.push(DatasetEntry::from_diagram(name, &d, Some(1u64 << n), "constructed: crossingless unlink"));
        };
        push_unlink("unknot", 1);
        push_unlink("unlink-2", 2);
        push_unlink("unlink-3", 3);
        push_unlink("unlink-4", 4);

        for &(name, pd, source, total) in TRANSCRIBED {
            let d = LinkDiagram::from_pd(pd, 0).expect("builtin PD is valid");
            let mut e = DatasetEntry::from_diagram(name, &d, total, source);
            e.pd = pd.to_vec();
            entries.push(e.clone());
            if MIRRORED.contains(&name) {
                let m = d.mirror();
                let source = format!("mirror() of {name}");
                entries.push(DatasetEntry::from_diagram(&format!("{name}{MIRROR_SUFFIX}"), &m, total, &source));
            }
        }

        let word: BraidWord = "3:1 1 2 2".parse().expect("valid braid");
        let hh = braid_closure_diagram(&word);
        entries.push(DatasetEntry::from_diagram("Hopf#Hopf", &hh, Some(8), "constructed: closure of 3:1 1 2 2"));
        let hopf = LinkDiagram::from_pd(TRANSCRIBED[8].1, 0).expect("valid");
        let hu = hopf.disjoint_union(&LinkDiagram::unlink(1));
        entries.push(DatasetEntry::from_diagram("Hopf+unknot", &hu, Some(8), "constructed: L2a1 disjoint union unknot"));
        let trefoil = LinkDiagram::from_pd(TRANSCRIBED[0].1, 0).expect("valid");
        let tu = trefoil.disjoint_union(&LinkDiagram::unlink(1));
        entries.push(DatasetEntry::from_diagram("3_1+unknot", &tu, Some(12), "constructed: 3_1 disjoint union unknot"));

        for e in &mut entries {
            e.expected_class = builtin_class(&e.name).map(str::to_string);
        }
        Dataset::new(entries).expect("builtin table is valid")
    }

    pub fn entries(&self) -> &[DatasetEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&DatasetEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// A copy without the named entries.
    pub fn without(&self, names: &[&str]) -> Dataset {
        Dataset { entries: self.entries.iter().filter(|e| !names.contains(&e.name.as_str())).cloned().collect() }
    }

    pub fn entries_mut(&mut self) -> &mut [DatasetEntry] {
        &mut self.entries
    }

    /// Unique names and component counts matching the diagrams.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(e.name.as_str()) {
                return Err(Error::Dataset(format!("duplicate name {:?}", e.name)));
            }
            let d = e.diagram().map_err(|err| Error::Dataset(format!("{}: {err}", e.name)))?;
            if d.component_count() != e.components {
                return Err(Error::Dataset(format!(
                    "{}: declares {} components, diagram has {}",
                    e.name,
                    e.components,
                    d.component_count()
                )));
            }
        }
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("entry serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Dataset> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let e: DatasetEntry =
                serde_json::from_str(line).map_err(|err| Error::Dataset(format!("line {}: {err}", n + 1)))?;
            entries.push(e);
        }
        Dataset::new(entries)
    }

    pub fn load(path: &Path) -> Result<Dataset> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_jsonl(&text)
    }
}

fn builtin_class(name: &str) -> Option<&'static str> {
    Some(match base_name(name) {
        "unknot" => "unlink-1",
        "unlink-2" => "unlink-2",
        "unlink-3" => "unlink-3",
        "unlink-4" => "unlink-4",
        "3_1" => "trefoil",
        "L2a1" => "Hopf",
        "L4a1" => "L4a1-class",
        "L6n1" => "L6n1-class",
        "Hopf#Hopf" => "Hopf#Hopf",
        "Hopf+unknot" => "Hopf⊔unknot",
        _ => return None,
    })
}
