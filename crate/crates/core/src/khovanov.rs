//! Khovanov homology over Z/2 from the cube of resolutions.
//!
//! At vertex `v` of the cube each crossing `X(a,b,c,d)` is smoothed by
//! joining `a-b, c-d` (bit 0) or `a-d, b-c` (bit 1). A generator labels every
//! circle of the smoothing with `1` or `X`; in a label mask bit set means `X`.
//! Gradings:
//!
//! ```text
//! i = |v| - n_-
//! j = (#1 - #X) + |v| + n_+ - 2 n_-
//! ```
//!
//! The differential preserves `j`, so homology is computed one `(i, j)` block
//! at a time. The reduced theory is the subcomplex where the circle through the
//! basepoint is labelled `X`, shifted up by one in `j`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::linkdiag::LinkDiagram;

pub const DEFAULT_MAX_CROSSINGS: usize = 14;

// masks are u64; free loops count as circles too
const MAX_CIRCLES: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KhOptions {
    pub max_crossings: usize,
}

impl Default for KhOptions {
    fn default() -> Self {
        Self { max_crossings: DEFAULT_MAX_CROSSINGS }
    }
}

/// Marked point for the reduced theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basepoint {
    Arc(u32),
    /// Index among the diagram's crossingless circles.
    FreeLoop(usize),
}

impl Basepoint {
    /// Arc 1, or the first free loop of a crossingless diagram.
    pub fn default_for(d: &LinkDiagram) -> Option<Basepoint> {
        if d.arc_count() > 0 {
            Some(Basepoint::Arc(1))
        } else if d.free_loops() > 0 {
            Some(Basepoint::FreeLoop(0))
        } else {
            None
        }
    }

    /// Every arc and every free loop of `d`.
    pub fn all_for(d: &LinkDiagram) -> Vec<Basepoint> {
        (1..=d.arc_count() as u32)
            .map(Basepoint::Arc)
            .chain((0..d.free_loops()).map(Basepoint::FreeLoop))
            .collect()
    }
}

impl std::fmt::Display for Basepoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Basepoint::Arc(a) => write!(f, "arc {a}"),
            Basepoint::FreeLoop(i) => write!(f, "free loop {i}"),
        }
    }
}

/// Ranks of homology by `(i, j)`; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedRanks {
    entries: BTreeMap<(i64, i64), u64>,
}

impl BigradedRanks {
    pub fn from_entries(it: impl IntoIterator<Item = ((i64, i64), u64)>) -> Self {
        let mut entries = BTreeMap::new();
        for (k, r) in it {
            if r > 0 {
                *entries.entry(k).or_default() += r;
            }
        }
        Self { entries }
    }

    pub fn get(&self, i: i64, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Entries sorted by `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(&k, &r)| (k, r))
    }

    /// Distinct homological degrees carrying homology.
    pub fn homological_support(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.entries.keys().map(|&(i, _)| i).collect();
        v.dedup();
        v
    }

    /// `(i, j) -> (-i, -j)`.
    pub fn reflected(&self) -> BigradedRanks {
        Self::from_entries(self.iter().map(|((i, j), r)| ((-i, -j), r)))
    }

    pub fn shifted(&self, di: i64, dj: i64) -> BigradedRanks {
        Self::from_entries(self.iter().map(|((i, j), r)| ((i + di, j + dj), r)))
    }

    /// Graded tensor product.
    pub fn tensor(&self, other: &BigradedRanks) -> BigradedRanks {
        let mut out = BTreeMap::new();
        for ((i1, j1), r1) in self.iter() {
            for ((i2, j2), r2) in other.iter() {
                *out.entry((i1 + i2, j1 + j2)).or_insert(0) += r1 * r2;
            }
        }
        Self { entries: out }
    }

    /// `[[i, j, rank], ...]` sorted by `(i, j)`.
    pub fn triples(&self) -> Vec<[i64; 3]> {
        self.iter().map(|((i, j), r)| [i, j, r as i64]).collect()
    }
}

impl Serialize for BigradedRanks {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigradedRanks {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<[i64; 3]> = Vec::deserialize(d)?;
        Ok(Self::from_entries(v.into_iter().map(|[i, j, r]| ((i, j), r.max(0) as u64))))
    }
}

/// How an edge of the cube changes the circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Circles `a` and `b` of the source fuse into circle `into` of the target.
    Merge { a: usize, b: usize, into: usize },
    /// Circle `from` of the source splits into `a` and `b` of the target.
    Split { from: usize, a: usize, b: usize },
}

/// Complete resolutions of every vertex of the cube.
#[derive(Debug, Clone)]
pub struct ResolutionCube {
    n: usize,
    arcs: usize,
    free_loops: usize,
    crossings: Vec<[u32; 4]>,
    circles: Vec<u8>,
    // vertex-major, arc label l at offset l-1
    arc_circle: Vec<u8>,
}

impl ResolutionCube {
    pub fn new(d: &LinkDiagram) -> Result<Self> {
        let n = d.crossing_count();
        if n >= 63 {
            return Err(Error::CrossingCap { crossings: n, cap: 62 });
        }
        let arcs = d.arc_count();
        let vertices = 1usize << n;
        let mut circles = Vec::with_capacity(vertices);
        let mut arc_circle = Vec::with_capacity(vertices * arcs);
        let mut parent = vec![0usize; arcs + 1];
        let mut ids = vec![u8::MAX; arcs + 1];
        for v in 0..vertices as u64 {
            let count = resolve_into(d.crossings(), v, &mut parent, &mut ids);
            let total = count + d.free_loops();
            if total > MAX_CIRCLES {
                return Err(Error::Dataset(format!("{total} circles exceed the supported {MAX_CIRCLES}")));
            }
            circles.push(total as u8);
            arc_circle.extend_from_slice(&ids[1..]);
        }
        Ok(Self {
            n,
            arcs,
            free_loops: d.free_loops(),
            crossings: d.crossings().to_vec(),
            circles,
            arc_circle,
        })
    }

    pub fn crossings(&self) -> usize {
        self.n
    }

    pub fn circle_count(&self, v: u64) -> usize {
        self.circles[v as usize] as usize
    }

    /// Circle through arc `label` at vertex `v`.
    pub fn circle_of_arc(&self, v: u64, label: u32) -> usize {
        self.arc_circle[v as usize * self.arcs + label as usize - 1] as usize
    }

    /// Circle index of free loop `i` at vertex `v`.
    pub fn circle_of_free_loop(&self, v: u64, i: usize) -> usize {
        debug_assert!(i < self.free_loops);
        self.circle_count(v) - self.free_loops + i
    }

    /// Edge from `v` raising bit `e` (which must be 0 in `v`).
    pub fn edge_kind(&self, v: u64, e: usize) -> EdgeKind {
        debug_assert_eq!(v >> e & 1, 0);
        let w = v | 1 << e;
        let [a, b, c, _] = self.crossings[e];
        let (ca, cc) = (self.circle_of_arc(v, a), self.circle_of_arc(v, c));
        if ca != cc {
            EdgeKind::Merge { a: ca, b: cc, into: self.circle_of_arc(w, a) }
        } else {
            EdgeKind::Split { from: ca, a: self.circle_of_arc(w, a), b: self.circle_of_arc(w, b) }
        }
    }

    /// Target circle of every source circle not involved in the edge `v -> v + e`
    /// (`u8::MAX` for the involved ones).
    fn carry_map(&self, v: u64, e: usize) -> Vec<u8> {
        let w = v | 1 << e;
        let c = self.circle_count(v);
        let mut map = vec![u8::MAX; c];
        let base = v as usize * self.arcs;
        let wbase = w as usize * self.arcs;
        for l in 0..self.arcs {
            let from = self.arc_circle[base + l] as usize;
            if map[from] == u8::MAX {
                map[from] = self.arc_circle[wbase + l];
            }
        }
        for i in 0..self.free_loops {
            map[self.circle_of_free_loop(v, i)] = self.circle_of_free_loop(w, i) as u8;
        }
        match self.edge_kind(v, e) {
            EdgeKind::Merge { a, b, .. } => {
                map[a] = u8::MAX;
                map[b] = u8::MAX;
            }
            EdgeKind::Split { from, .. } => map[from] = u8::MAX,
        }
        map
    }
}

/// Union-find over arcs for the smoothing `v`; writes circle ids (numbered
/// by smallest arc) into `ids[1..]` and returns the number of arc circles.
fn resolve_into(crossings: &[[u32; 4]], v: u64, parent: &mut [usize], ids: &mut [u8]) -> usize {
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let n = p[c];
            p[c] = r;
            c = n;
        }
        r
    }
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i;
    }
    let join = |p: &mut [usize], x: u32, y: u32| {
        let (rx, ry) = (find(p, x as usize), find(p, y as usize));
        if rx != ry {
            p[rx.max(ry)] = rx.min(ry);
        }
    };
    for (k, &[a, b, c, d]) in crossings.iter().enumerate() {
        if v >> k & 1 == 0 {
            join(parent, a, b);
            join(parent, c, d);
        } else {
            join(parent, a, d);
            join(parent, b, c);
        }
    }
    let mut count = 0usize;
    let mut root_id = vec![u8::MAX; parent.len()];
    for l in 1..parent.len() {
        let r = find(parent, l);
        if root_id[r] == u8::MAX {
            root_id[r] = count as u8;
            count += 1;
        }
        ids[l] = root_id[r];
    }
    count
}

/// Circles of the complete resolution `state` (bit `k` smooths crossing `k`),
/// as arc lists; each free loop is an empty list at the end.
pub fn resolve(d: &LinkDiagram, state: &[bool]) -> Result<Vec<Vec<u32>>> {
    if state.len() != d.crossing_count() {
        return Err(Error::DimensionMismatch(format!(
            "state of length {} for {} crossings",
            state.len(),
            d.crossing_count()
        )));
    }
    if state.len() > 64 {
        return Err(Error::CrossingCap { crossings: state.len(), cap: 64 });
    }
    let v = state.iter().enumerate().fold(0u64, |acc, (k, &b)| acc | (b as u64) << k);
    let arcs = d.arc_count();
    let mut parent = vec![0; arcs + 1];
    let mut ids = vec![0u8; arcs + 1];
    let count = resolve_into(d.crossings(), v, &mut parent, &mut ids);
    let mut out = vec![Vec::new(); count];
    for l in 1..=arcs {
        out[ids[l] as usize].push(l as u32);
    }
    out.extend(std::iter::repeat_n(Vec::new(), d.free_loops()));
    Ok(out)
}

struct Binomials(Vec<[u64; 65]>);

impl Binomials {
    fn new() -> Self {
        let mut t = vec![[0u64; 65]; 65];
        for n in 0..65 {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1].saturating_add(if k < n { t[n - 1][k] } else { 0 });
            }
        }
        Binomials(t)
    }
    fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.0[n][k]
        }
    }
    /// Colex rank of `mask` among masks with the same popcount.
    fn rank(&self, mask: u64) -> usize {
        let mut r = 0u64;
        let mut bits = mask;
        let mut i = 1;
        while bits != 0 {
            let p = bits.trailing_zeros() as usize;
            r += self.get(p, i);
            i += 1;
            bits &= bits - 1;
        }
        r as usize
    }
}

/// Masks of `width` bits with `ones` set, in increasing order.
fn subsets(width: usize, ones: usize) -> impl Iterator<Item = u64> {
    let limit = if width >= 64 { u64::MAX } else { (1u64 << width) - 1 };
    let mut cur = if ones == 0 {
        Some(0u64)
    } else if ones > width {
        None
    } else {
        Some(if ones == 64 { u64::MAX } else { (1u64 << ones) - 1 })
    };
    std::iter::from_fn(move || {
        let m = cur?;
        cur = if m == 0 || m == limit {
            None
        } else {
            // Gosper's hack
            let c = m & m.wrapping_neg();
            let r = m + c;
            let next = (((r ^ m) >> 2) / c) | r;
            (next <= limit && next > m).then_some(next)
        };
        Some(m)
    })
}

fn insert_bit(m: u64, b: usize) -> u64 {
    let low = m & ((1u64 << b) - 1);
    ((m >> b) << (b + 1)) | (1 << b) | low
}

fn remove_bit(m: u64, b: usize) -> u64 {
    let low = m & ((1u64 << b) - 1);
    ((m >> (b + 1)) << b) | low
}

#[derive(Debug, Clone)]
struct Block {
    // (vertex, number of X labels, offset), vertices ascending
    vertices: Vec<(u64, usize, usize)>,
    dim: usize,
}

/// The Khovanov chain complex over Z/2, split into `(i, j)` blocks.
pub struct KhComplex {
    cube: ResolutionCube,
    n_plus: usize,
    n_minus: usize,
    basepoint: Option<Basepoint>,
    blocks: BTreeMap<(i64, i64), Block>,
    binom: Binomials,
}

impl KhComplex {
    pub fn new(d: &LinkDiagram, basepoint: Option<Basepoint>, opts: KhOptions) -> Result<Self> {
        if d.crossing_count() > opts.max_crossings {
            return Err(Error::CrossingCap { crossings: d.crossing_count(), cap: opts.max_crossings });
        }
        if let Some(bp) = basepoint {
            let ok = match bp {
                Basepoint::Arc(a) => a >= 1 && (a as usize) <= d.arc_count(),
                Basepoint::FreeLoop(i) => i < d.free_loops(),
            };
            if !ok {
                return Err(Error::BasepointNotInDiagram(bp.to_string()));
            }
        }
        let cube = ResolutionCube::new(d)?;
        let (n_plus, n_minus) = d.sign_counts();
        let mut cx = KhComplex {
            cube,
            n_plus,
            n_minus,
            basepoint,
            blocks: BTreeMap::new(),
            binom: Binomials::new(),
        };
        cx.index_blocks();
        Ok(cx)
    }

    pub fn cube(&self) -> &ResolutionCube {
        &self.cube
    }

    pub fn is_reduced(&self) -> bool {
        self.basepoint.is_some()
    }

    fn base_circle(&self, v: u64) -> Option<usize> {
        self.basepoint.map(|bp| match bp {
            Basepoint::Arc(a) => self.cube.circle_of_arc(v, a),
            Basepoint::FreeLoop(i) => self.cube.circle_of_free_loop(v, i),
        })
    }

    fn j_shift(&self) -> i64 {
        self.n_plus as i64 - 2 * self.n_minus as i64 + self.is_reduced() as i64
    }

    fn index_blocks(&mut self) {
        let n = self.cube.n;
        let reduced = self.is_reduced();
        for v in 0..(1u64 << n) {
            let h = v.count_ones() as i64;
            let c = self.cube.circle_count(v);
            let i = h - self.n_minus as i64;
            for k in reduced as usize..=c {
                let j = c as i64 - 2 * k as i64 + h + self.j_shift();
                let count = if reduced {
                    self.binom.get(c - 1, k - 1)
                } else {
                    self.binom.get(c, k)
                } as usize;
                let block = self.blocks.entry((i, j)).or_insert(Block { vertices: Vec::new(), dim: 0 });
                block.vertices.push((v, k, block.dim));
                block.dim += count;
            }
        }
    }

    /// Gradings `(i, j)` with a nonzero chain group, sorted.
    pub fn gradings(&self) -> Vec<(i64, i64)> {
        self.blocks.keys().copied().collect()
    }

    pub fn chain_dim(&self, i: i64, j: i64) -> usize {
        self.blocks.get(&(i, j)).map_or(0, |b| b.dim)
    }

    /// Label masks of the generators at vertex `v` with `k` X-labels, in index order.
    fn masks(&self, v: u64, k: usize) -> Box<dyn Iterator<Item = u64> + '_> {
        let c = self.cube.circle_count(v);
        match self.base_circle(v) {
            None => Box::new(subsets(c, k)),
            Some(b) => Box::new(subsets(c - 1, k - 1).map(move |m| insert_bit(m, b))),
        }
    }

    fn index_in_vertex(&self, v: u64, mask: u64) -> usize {
        match self.base_circle(v) {
            None => self.binom.rank(mask),
            Some(b) => {
                debug_assert!(mask >> b & 1 == 1, "basepoint circle must carry X");
                self.binom.rank(remove_bit(mask, b))
            }
        }
    }

    /// Matrix of `d: C^{i,j} -> C^{i+1,j}`; row `r` is the image of source
    /// generator `r`.
    pub fn differential(&self, i: i64, j: i64) -> BitMatrix {
        let (Some(src), Some(tgt)) = (self.blocks.get(&(i, j)), self.blocks.get(&(i + 1, j))) else {
            return BitMatrix::zeros(self.chain_dim(i, j), self.chain_dim(i + 1, j));
        };
        let mut m = BitMatrix::zeros(src.dim, tgt.dim);
        let n = self.cube.n;
        for &(v, k, off) in &src.vertices {
            for e in (0..n).filter(|&e| v >> e & 1 == 0) {
                let w = v | 1 << e;
                let Ok(pos) = tgt.vertices.binary_search_by_key(&w, |&(u, _, _)| u) else {
                    continue;
                };
                let woff = tgt.vertices[pos].2;
                let kind = self.cube.edge_kind(v, e);
                let carry = self.cube.carry_map(v, e);
                for (idx, mask) in self.masks(v, k).enumerate() {
                    let mut base = 0u64;
                    for (from, &to) in carry.iter().enumerate() {
                        if to != u8::MAX && mask >> from & 1 == 1 {
                            base |= 1 << to;
                        }
                    }
                    let row = off + idx;
                    let mut put = |target: u64| {
                        m.flip(row, woff + self.index_in_vertex(w, target));
                    };
                    match kind {
                        EdgeKind::Merge { a, b, into } => {
                            let (xa, xb) = (mask >> a & 1, mask >> b & 1);
                            if xa & xb == 0 {
                                put(base | (xa | xb) << into);
                            }
                        }
                        EdgeKind::Split { from, a, b } => {
                            if mask >> from & 1 == 1 {
                                put(base | 1 << a | 1 << b);
                            } else {
                                put(base | 1 << b);
                                put(base | 1 << a);
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// Homology ranks, one independent rank computation per block.
    pub fn homology(&self) -> BigradedRanks {
        let keys = self.gradings();
        let ranks: BTreeMap<(i64, i64), usize> =
            keys.par_iter().map(|&(i, j)| ((i, j), self.differential(i, j).rank())).collect();
        BigradedRanks::from_entries(keys.iter().map(|&(i, j)| {
            let out = ranks.get(&(i, j)).copied().unwrap_or(0);
            let inc = ranks.get(&(i - 1, j)).copied().unwrap_or(0);
            ((i, j), (self.chain_dim(i, j) - out - inc) as u64)
        }))
    }
}

/// Unreduced (`reduced = false`) or reduced Khovanov homology over Z/2.
/// The basepoint defaults to arc 1 (or the first free loop when there are no arcs).
pub fn kh_ranks(
    d: &LinkDiagram,
    reduced: bool,
    basepoint: Option<Basepoint>,
    opts: KhOptions,
) -> Result<BigradedRanks> {
    let bp = if reduced {
        Some(
            basepoint
                .or_else(|| Basepoint::default_for(d))
                .ok_or_else(|| Error::BasepointNotInDiagram("empty diagram".into()))?,
        )
    } else {
        None
    };
    Ok(KhComplex::new(d, bp, opts)?.homology())
}

pub fn total_rank(d: &LinkDiagram) -> Result<u64> {
    total_rank_with(d, KhOptions::default())
}

pub fn total_rank_with(d: &LinkDiagram, opts: KhOptions) -> Result<u64> {
    Ok(kh_ranks(d, false, None, opts)?.total())
}

/// JSON rank report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub components: usize,
    pub total: u64,
    pub reduced_total: u64,
    pub bigraded: BigradedRanks,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced_bigraded: Option<BigradedRanks>,
}

pub fn rank_report(d: &LinkDiagram, name: Option<&str>, with_reduced_grading: bool, opts: KhOptions) -> Result<RankReport> {
    let bigraded = kh_ranks(d, false, None, opts)?;
    let reduced = match Basepoint::default_for(d) {
        Some(bp) => Some(kh_ranks(d, true, Some(bp), opts)?),
        None => None,
    };
    Ok(RankReport {
        name: name.map(str::to_string),
        components: d.component_count(),
        total: bigraded.total(),
        reduced_total: reduced.as_ref().map_or(0, |r| r.total()),
        bigraded,
        reduced_bigraded: if with_reduced_grading { reduced } else { None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> LinkDiagram {
        s.parse().unwrap()
    }

    const HOPF: &str = "X(1,3,2,4);X(3,1,4,2)";
    const TREFOIL: &str = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";

    #[test]
    fn resolve_examples() {
        assert_eq!(resolve(&pd("O"), &[]).unwrap().len(), 1);
        assert_eq!(resolve(&pd(HOPF), &[false, false]).unwrap().len(), 2);
        assert_eq!(resolve(&pd(HOPF), &[false, true]).unwrap().len(), 1);
        // this trefoil is negative: the all-0 state is its unoriented smoothing
        assert_eq!(resolve(&pd(TREFOIL), &[false; 3]).unwrap().len(), 3);
        assert_eq!(resolve(&pd(TREFOIL), &[true; 3]).unwrap().len(), 2);
        assert!(resolve(&pd(HOPF), &[false]).is_err());
    }

    #[test]
    fn adjacent_vertices_differ_by_one_circle() {
        let d = pd(TREFOIL);
        let cube = ResolutionCube::new(&d).unwrap();
        for v in 0..8u64 {
            for e in (0..3).filter(|&e| v >> e & 1 == 0) {
                let w = v | 1 << e;
                let (cv, cw) = (cube.circle_count(v) as i64, cube.circle_count(w) as i64);
                assert_eq!((cv - cw).abs(), 1);
                match cube.edge_kind(v, e) {
                    EdgeKind::Merge { .. } => assert_eq!(cw, cv - 1),
                    EdgeKind::Split { .. } => assert_eq!(cw, cv + 1),
                }
            }
        }
    }

    #[test]
    fn subsets_and_ranks_agree() {
        let b = Binomials::new();
        for width in 0..8 {
            for ones in 0..=width {
                let all: Vec<u64> = subsets(width, ones).collect();
                assert_eq!(all.len() as u64, b.get(width, ones));
                for (i, &m) in all.iter().enumerate() {
                    assert_eq!(m.count_ones() as usize, ones);
                    assert_eq!(b.rank(m), i);
                }
            }
        }
        assert_eq!(remove_bit(insert_bit(0b1011, 2), 2), 0b1011);
        assert_eq!(insert_bit(0b11, 1), 0b111);
    }

    #[test]
    fn unknot() {
        let r = kh_ranks(&pd("O"), false, None, KhOptions::default()).unwrap();
        assert_eq!(r.total(), 2);
        assert_eq!(r.get(0, 1), 1);
        assert_eq!(r.get(0, -1), 1);
        let red = kh_ranks(&pd("O"), true, None, KhOptions::default()).unwrap();
        assert_eq!(red.triples(), vec![[0, 0, 1]]);
    }

    #[test]
    fn kinked_unknot() {
        for s in ["X(1,1,2,2)", "X(2,1,1,2)"] {
            let r = kh_ranks(&pd(s), false, None, KhOptions::default()).unwrap();
            assert_eq!(r.triples(), vec![[0, -1, 1], [0, 1, 1]], "{s}");
        }
    }

    #[test]
    fn small_totals() {
        assert_eq!(total_rank(&pd(HOPF)).unwrap(), 4);
        assert_eq!(total_rank(&pd("O O")).unwrap(), 4);
        assert_eq!(total_rank(&pd(TREFOIL)).unwrap(), 6);
        assert_eq!(total_rank(&LinkDiagram::empty()).unwrap(), 1);
    }

    #[test]
    fn basepoint_errors() {
        let d = pd(HOPF);
        let e = kh_ranks(&d, true, Some(Basepoint::Arc(9)), KhOptions::default()).unwrap_err();
        assert!(matches!(e, Error::BasepointNotInDiagram(_)));
        let e = kh_ranks(&d, true, Some(Basepoint::FreeLoop(0)), KhOptions::default()).unwrap_err();
        assert!(matches!(e, Error::BasepointNotInDiagram(_)));
        assert!(kh_ranks(&LinkDiagram::empty(), true, None, KhOptions::default()).is_err());
    }

    #[test]
    fn crossing_cap() {
        let e = kh_ranks(&pd(TREFOIL), false, None, KhOptions { max_crossings: 2 }).unwrap_err();
        assert_eq!(e, Error::CrossingCap { crossings: 3, cap: 2 });
    }

    #[test]
    fn report_json_shape() {
        let r = rank_report(&pd("O"), Some("unknot"), false, KhOptions::default()).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"name":"unknot","components":1,"total":2,"reduced_total":1,"bigraded":[[0,-1,1],[0,1,1]]}"#
        );
    }
}
