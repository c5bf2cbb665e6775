//! Oriented link diagrams in planar-diagram (PD) notation.
//!
//! A crossing `X(a,b,c,d)` lists its four arcs counterclockwise starting at
//! the incoming under-strand `a`; the under-strand runs `a -> c`. Whether the
//! over-strand runs `b -> d` or `d -> b` is read off the rest of the diagram.
//! A crossing is positive when the over-strand runs `d -> b`.
//!
//! Crossingless circles cannot be written as quadruples, so the text form has
//! an extra `O` token for each of them.
//!
//! Planarity is not checked.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

/// Slot reached by continuing straight through a crossing.
fn opposite(slot: usize) -> usize {
    (slot + 2) % 4
}

#[derive(Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
    // true when the over-strand of crossing k runs b -> d
    over_b_to_d: Vec<bool>,

    // derived
    components: Vec<Vec<u32>>,
    arc_component: Vec<usize>,
    ends: Vec<[(usize, usize); 2]>,
}

/// Serialized diagram: `{"name": str?, "pd": [[a,b,c,d],...], "free_loops": int}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub pd: Vec<[u64; 4]>,
    #[serde(default)]
    pub free_loops: usize,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl LinkDiagram {
    /// Validates raw quadruples, normalizing labels to `1..=2n` in increasing
    /// order and inferring orientations.
    pub fn from_pd(raw: &[[u64; 4]], free_loops: usize) -> Result<Self> {
        Self::build(raw, free_loops, None)
    }

    /// The empty link.
    pub fn empty() -> Self {
        Self::build(&[], 0, None).expect("empty diagram is valid")
    }

    pub fn unlink(components: usize) -> Self {
        Self::build(&[], components, None).expect("unlink is valid")
    }

    fn build(raw: &[[u64; 4]], free_loops: usize, orientation: Option<&[bool]>) -> Result<Self> {
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for q in raw {
            for &l in q {
                if l == 0 {
                    return Err(Error::PdParse("arc labels must be positive".into()));
                }
                *counts.entry(l).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::ArcMultiplicity { label, count });
        }
        let relabel: BTreeMap<u64, u32> =
            counts.keys().enumerate().map(|(i, &l)| (l, i as u32 + 1)).collect();
        let crossings: Vec<[u32; 4]> = raw.iter().map(|q| q.map(|l| relabel[&l])).collect();
        let arcs = 2 * crossings.len();

        let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(2); arcs + 1];
        for (k, q) in crossings.iter().enumerate() {
            for (slot, &l) in q.iter().enumerate() {
                ends[l as usize].push((k, slot));
            }
        }
        let ends: Vec<[(usize, usize); 2]> = ends
            .into_iter()
            .map(|e| if e.is_empty() { [(0, 0); 2] } else { [e[0], e[1]] })
            .collect();

        let over_b_to_d = match orientation {
            Some(o) => {
                if o.len() != crossings.len() {
                    return Err(Error::InconsistentTraversal("orientation length mismatch".into()));
                }
                o.to_vec()
            }
            None => infer_orientation(&crossings, &ends)?,
        };
        check_orientation(&crossings, &ends, &over_b_to_d)?;

        let mut d = LinkDiagram {
            crossings,
            free_loops,
            over_b_to_d,
            components: Vec::new(),
            arc_component: vec![usize::MAX; arcs + 1],
            ends,
        };
        d.trace_components();
        Ok(d)
    }

    /// Slot where arc `label` ends (its head).
    fn head(&self, label: u32) -> (usize, usize) {
        let e = self.ends[label as usize];
        if self.is_head(e[0]) {
            e[0]
        } else {
            e[1]
        }
    }

    fn is_head(&self, (k, slot): (usize, usize)) -> bool {
        slot_is_head(slot, self.over_b_to_d[k])
    }

    /// Arc that follows `label` along its component.
    pub fn next_arc(&self, label: u32) -> u32 {
        let (k, slot) = self.head(label);
        self.crossings[k][opposite(slot)]
    }

    fn trace_components(&mut self) {
        let arcs = self.arc_count();
        for start in 1..=arcs as u32 {
            if self.arc_component[start as usize] != usize::MAX {
                continue;
            }
            let idx = self.components.len();
            let mut comp = Vec::new();
            let mut a = start;
            loop {
                self.arc_component[a as usize] = idx;
                comp.push(a);
                a = self.next_arc(a);
                if a == start {
                    break;
                }
            }
            self.components.push(comp);
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Components: traversal components in order of their smallest arc, each
    /// listed along its orientation from that arc; free loops last, as empty lists.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut out = self.components.clone();
        out.extend(std::iter::repeat_n(Vec::new(), self.free_loops));
        out
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    /// Components that pass through at least one crossing.
    pub fn traversal_component_count(&self) -> usize {
        self.components.len()
    }

    pub fn arc_component(&self, label: u32) -> Option<usize> {
        self.arc_component.get(label as usize).copied().filter(|&c| c != usize::MAX)
    }

    /// `(under component, over component)` at crossing `k`.
    pub fn crossing_components(&self, k: usize) -> (usize, usize) {
        let q = self.crossings[k];
        (self.arc_component[q[A] as usize], self.arc_component[q[B] as usize])
    }

    pub fn over_runs_b_to_d(&self, k: usize) -> bool {
        self.over_b_to_d[k]
    }

    pub fn crossing_sign(&self, k: usize) -> i32 {
        if self.over_b_to_d[k] {
            -1
        } else {
            1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|k| self.crossing_sign(k) as i64).sum()
    }

    /// `(n_plus, n_minus)`.
    pub fn sign_counts(&self) -> (usize, usize) {
        let plus = (0..self.crossing_count()).filter(|&k| self.crossing_sign(k) > 0).count();
        (plus, self.crossing_count() - plus)
    }

    pub fn linking_number(&self, comp_a: usize, comp_b: usize) -> Result<i64> {
        let n = self.component_count();
        for c in [comp_a, comp_b] {
            if c >= n {
                return Err(Error::NoSuchComponent(c));
            }
        }
        if comp_a == comp_b {
            return Err(Error::SameComponent);
        }
        let mut sum = 0i64;
        for k in 0..self.crossing_count() {
            let (u, o) = self.crossing_components(k);
            if (u == comp_a && o == comp_b) || (u == comp_b && o == comp_a) {
                sum += self.crossing_sign(k) as i64;
            }
        }
        Ok(sum / 2)
    }

    /// Over/under reversed at every crossing, orientation kept.
    pub fn mirror(&self) -> LinkDiagram {
        let mut quads = Vec::with_capacity(self.crossing_count());
        let mut orient = Vec::with_capacity(self.crossing_count());
        for (k, q) in self.crossings.iter().enumerate() {
            let [a, b, c, d] = q.map(u64::from);
            if self.over_b_to_d[k] {
                quads.push([b, c, d, a]);
            } else {
                quads.push([d, a, b, c]);
            }
            orient.push(!self.over_b_to_d[k]);
        }
        Self::build(&quads, self.free_loops, Some(&orient)).expect("mirror preserves validity")
    }

    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let offset = self.arc_count() as u64;
        let quads: Vec<[u64; 4]> = self
            .crossings
            .iter()
            .map(|q| q.map(u64::from))
            .chain(other.crossings.iter().map(|q| q.map(|l| l as u64 + offset)))
            .collect();
        let orient: Vec<bool> = self.over_b_to_d.iter().chain(&other.over_b_to_d).copied().collect();
        Self::build(&quads, self.free_loops + other.free_loops, Some(&orient))
            .expect("disjoint union preserves validity")
    }

    /// Removes component `comp` (index into [`components`](Self::components)).
    /// Its crossings disappear; the surviving strand at each of them is fused.
    pub fn delete_component(&self, comp: usize) -> Result<LinkDiagram> {
        self.delete_components(&[comp])
    }

    /// Sublink made of the components listed in `keep`.
    pub fn sublink(&self, keep: &[usize]) -> Result<LinkDiagram> {
        for &c in keep {
            if c >= self.component_count() {
                return Err(Error::NoSuchComponent(c));
            }
        }
        let drop: Vec<usize> = (0..self.component_count()).filter(|c| !keep.contains(c)).collect();
        self.delete_components(&drop)
    }

    /// Removes every listed component at once.
    pub fn delete_components(&self, comps: &[usize]) -> Result<LinkDiagram> {
        let n = self.component_count();
        let mut gone = vec![false; n];
        for &c in comps {
            if c >= n {
                return Err(Error::NoSuchComponent(c));
            }
            gone[c] = true;
        }
        let traversal = self.components.len();
        let loops_left = (traversal..n).filter(|&c| !gone[c]).count();
        let arcs = self.arc_count();
        let mut dsu = Dsu::new(arcs + 1);
        let mut kept = Vec::new();
        for (k, q) in self.crossings.iter().enumerate() {
            let (u, o) = self.crossing_components(k);
            match (gone[u], gone[o]) {
                (true, true) => {}
                (false, false) => kept.push(k),
                (true, false) => dsu.union(q[B] as usize, q[D] as usize),
                (false, true) => dsu.union(q[A] as usize, q[C] as usize),
            }
        }
        let mut touched = vec![false; traversal];
        let quads: Vec<[u64; 4]> = kept
            .iter()
            .map(|&k| {
                let q = self.crossings[k];
                for &l in &q {
                    touched[self.arc_component[l as usize]] = true;
                }
                q.map(|l| dsu.find(l as usize) as u64)
            })
            .collect();
        let orient: Vec<bool> = kept.iter().map(|&k| self.over_b_to_d[k]).collect();
        let isolated = (0..traversal).filter(|&c| !gone[c] && !touched[c]).count();
        Self::build(&quads, loops_left + isolated, Some(&orient))
    }

    pub fn to_json(&self, name: Option<&str>) -> DiagramJson {
        DiagramJson {
            name: name.map(str::to_string),
            pd: self.crossings.iter().map(|q| q.map(u64::from)).collect(),
            free_loops: self.free_loops,
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        Self::from_pd(&j.pd, j.free_loops)
    }

    /// PD text, e.g. `X(1,3,2,4);X(3,1,4,2)`; free loops print as `O`.
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|q| format!("X({},{},{},{})", q[0], q[1], q[2], q[3]))
            .collect();
        parts.extend(std::iter::repeat_n("O".to_string(), self.free_loops));
        parts.join(";")
    }
}

fn slot_is_head(slot: usize, over_b_to_d: bool) -> bool {
    match slot {
        A => true,
        C => false,
        B => over_b_to_d,
        _ => !over_b_to_d,
    }
}

fn check_orientation(crossings: &[[u32; 4]], ends: &[[(usize, usize); 2]], o: &[bool]) -> Result<()> {
    for label in 1..=2 * crossings.len() {
        let [e0, e1] = ends[label];
        if slot_is_head(e0.1, o[e0.0]) == slot_is_head(e1.1, o[e1.0]) {
            return Err(Error::InconsistentTraversal(format!(
                "arc {label} does not run from one crossing into another"
            )));
        }
    }
    Ok(())
}

/// Solves for the over-strand direction at each crossing so every arc has
/// exactly one head. Over-strands forced by no under-passage are oriented so
/// their smallest arc heads toward the neighbouring arc with smaller label.
fn infer_orientation(crossings: &[[u32; 4]], ends: &[[(usize, usize); 2]]) -> Result<Vec<bool>> {
    let n = crossings.len();
    let is_over = |s: usize| s == B || s == D;
    // parity edges between crossings: f_i xor f_j = w
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    let mut forced: Vec<Option<bool>> = vec![None; n];
    let bad = |label: usize| {
        Error::InconsistentTraversal(format!("arc {label} cannot be oriented consistently"))
    };
    for label in 1..=2 * n {
        let [(k1, s1), (k2, s2)] = ends[label];
        match (is_over(s1), is_over(s2)) {
            (false, false) => {
                if s1 == s2 {
                    return Err(bad(label));
                }
            }
            (true, false) | (false, true) => {
                let ((ko, so), su) = if is_over(s1) { ((k1, s1), s2) } else { ((k2, s2), s1) };
                // the over end must be a head iff the under end is a tail
                let want_head = su == C;
                let f = if so == B { want_head } else { !want_head };
                if forced[ko].is_some_and(|g| g != f) {
                    return Err(bad(label));
                }
                forced[ko] = Some(f);
            }
            (true, true) => {
                // head(s, f) = f xor (s == d); exactly one head
                let w = !((s1 == D) ^ (s2 == D));
                if k1 == k2 {
                    if !w {
                        return Err(bad(label));
                    }
                } else {
                    adj[k1].push((k2, w));
                    adj[k2].push((k1, w));
                }
            }
        }
    }

    let mut value: Vec<Option<bool>> = vec![None; n];
    let mut group = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if group[s] != usize::MAX {
            continue;
        }
        let gi = groups.len();
        let mut members = vec![s];
        group[s] = gi;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if group[v] == usize::MAX {
                    group[v] = gi;
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        groups.push(members);
    }

    for members in &groups {
        let seed = members.iter().find_map(|&k| forced[k].map(|f| (k, f))).unwrap_or_else(|| {
            // free choice: start from the smallest over arc of the group
            let mut best: Option<(u32, usize, usize)> = None;
            for &k in members {
                for s in [B, D] {
                    let l = crossings[k][s];
                    if best.is_none_or(|(bl, _, _)| l < bl) {
                        best = Some((l, k, s));
                    }
                }
            }
            let (l, _, _) = best.expect("nonempty group");
            let [e0, e1] = ends[l as usize];
            let partner = |(k, s): (usize, usize)| crossings[k][opposite(s)];
            let toward = if (partner(e0), e0) <= (partner(e1), e1) { e0 } else { e1 };
            // make `toward` the head of arc l
            (toward.0, toward.1 == B)
        });
        value[seed.0] = Some(seed.1);
        let mut queue = VecDeque::from([seed.0]);
        while let Some(u) = queue.pop_front() {
            let fu = value[u].expect("assigned");
            for &(v, w) in &adj[u] {
                let fv = fu ^ w;
                match value[v] {
                    None => {
                        value[v] = Some(fv);
                        queue.push_back(v);
                    }
                    Some(x) if x != fv => {
                        return Err(Error::InconsistentTraversal(
                            "over-strand directions form an odd cycle".into(),
                        ))
                    }
                    _ => {}
                }
            }
        }
        for &k in members {
            if forced[k].is_some_and(|f| Some(f) != value[k]) {
                return Err(Error::InconsistentTraversal(format!(
                    "crossing {} has contradictory over-strand direction",
                    k + 1
                )));
            }
        }
    }
    Ok(value.into_iter().map(|v| v.expect("every crossing assigned")).collect())
}

impl FromStr for LinkDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (quads, loops) = parse_pd_tokens(text)?;
        LinkDiagram::from_pd(&quads, loops)
    }
}

/// Parses `X(a,b,c,d)` / `X[a,b,c,d]` and `O` tokens separated by `;`,
/// commas or whitespace.
pub fn parse_pd_tokens(text: &str) -> Result<(Vec<[u64; 4]>, usize)> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut quads = Vec::new();
    let mut loops = 0;
    let err = |i: usize, msg: &str| Error::PdParse(format!("{msg} at byte {i}"));
    let expect_separator = |i: usize| match bytes.get(i) {
        Some(c) if !matches!(c, b';' | b',') && !c.is_ascii_whitespace() => {
            Err(err(i, "expected separator"))
        }
        _ => Ok(()),
    };
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    while i < bytes.len() {
        match bytes[i] {
            b';' | b',' => i += 1,
            c if c.is_ascii_whitespace() => i += 1,
            b'O' | b'o' => {
                loops += 1;
                i += 1;
                expect_separator(i)?;
            }
            b'X' | b'x' => {
                i += 1;
                skip_ws(&mut i);
                let close = match bytes.get(i) {
                    Some(b'(') => b')',
                    Some(b'[') => b']',
                    _ => return Err(err(i, "expected '(' after X")),
                };
                i += 1;
                let mut q = [0u64; 4];
                for (slot, v) in q.iter_mut().enumerate() {
                    skip_ws(&mut i);
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(err(i, "expected arc label"));
                    }
                    *v = text[start..i].parse().map_err(|_| err(start, "arc label too large"))?;
                    skip_ws(&mut i);
                    let want = if slot < 3 { b',' } else { close };
                    if bytes.get(i) != Some(&want) {
                        return Err(err(i, &format!("expected '{}'", want as char)));
                    }
                    i += 1;
                }
                quads.push(q);
                expect_separator(i)?;
            }
            _ => return Err(err(i, "unexpected character")),
        }
    }
    Ok((quads, loops))
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkDiagram({})", self.to_pd_string())
    }
}

/// Closure of a braid, strands oriented upward. σ_i is a positive crossing
/// in which the strand moving from position i to i+1 passes over.
pub fn braid_closure_diagram(w: &BraidWord) -> LinkDiagram {
    closure_with_strand_labels(w).0
}

/// Closure of `w` and, for each starting position, one arc label on that strand
/// (`None` when the strand never crosses anything).
fn closure_with_strand_labels(w: &BraidWord) -> (LinkDiagram, Vec<Option<u32>>) {
    let l = w.strands();
    let mut current: Vec<u64> = (1..=l as u64).collect();
    let mut touched = vec![false; l];
    let mut next = l as u64 + 1;
    let mut quads = Vec::with_capacity(w.len());
    let mut orient = Vec::with_capacity(w.len());
    for &g in w.letters() {
        let i = g.unsigned_abs() as usize - 1;
        let (in_l, in_r) = (current[i], current[i + 1]);
        let (out_l, out_r) = (next, next + 1);
        next += 2;
        if g > 0 {
            quads.push([in_r, out_r, out_l, in_l]);
            orient.push(false);
        } else {
            quads.push([in_l, in_r, out_r, out_l]);
            orient.push(true);
        }
        current[i] = out_l;
        current[i + 1] = out_r;
        touched[i] = true;
        touched[i + 1] = true;
    }
    let mut dsu = Dsu::new(next as usize);
    for p in 0..l {
        dsu.union(p + 1, current[p] as usize);
    }
    let quads: Vec<[u64; 4]> = quads.iter().map(|q| q.map(|x| dsu.find(x as usize) as u64)).collect();
    let free = touched.iter().filter(|t| !**t).count();
    let d = LinkDiagram::build(&quads, free, Some(&orient)).expect("braid closures are valid diagrams");

    let mut used: Vec<u64> = quads.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let labels = (0..l)
        .map(|p| {
            touched[p].then(|| {
                let raw = dsu.find(p + 1) as u64;
                used.binary_search(&raw).expect("strand label in use") as u32 + 1
            })
        })
        .collect();
    (d, labels)
}

/// `U ∪ β̂`: the closure of `w` plus its braid axis, drawn as an extra strand
/// that passes under every strand going left and over every strand coming
/// back. Returns the diagram and the component index of the axis.
pub fn axis_link(w: &BraidWord) -> (LinkDiagram, usize) {
    let l = w.strands() as i32;
    let mut letters = w.letters().to_vec();
    letters.extend((1..=l).rev());
    letters.extend(1..=l);
    let belted = BraidWord::new(w.strands() + 1, letters).expect("belt letters are in range");
    let (d, labels) = closure_with_strand_labels(&belted);
    let axis_arc = labels[w.strands()].expect("axis strand always crosses");
    let axis = d.arc_component(axis_arc).expect("axis arc belongs to a component");
    (d, axis)
}

pub fn axis_link_diagram(w: &BraidWord) -> LinkDiagram {
    axis_link(w).0
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
    fn parse_examples() {
        let h = pd(HOPF);
        assert_eq!(h.crossing_count(), 2);
        assert_eq!(h.component_count(), 2);
        let o = pd("O");
        assert_eq!(o.crossing_count(), 0);
        assert_eq!(o.free_loops(), 1);
        assert_eq!(o.component_count(), 1);
        // kinked unknot: arc 1 enters at a, leaves as c=2, 2 re-enters at d
        let k = pd("X(1,1,2,2)");
        assert_eq!(k.component_count(), 1);
    }

    #[test]
    fn parse_normalizes_labels() {
        let h = pd("X(10,30,20,40) ; x[30, 10, 40, 20]");
        assert_eq!(h.crossings(), &[[1, 3, 2, 4], [3, 1, 4, 2]]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("X(1,2,3)".parse::<LinkDiagram>(), Err(Error::PdParse(_))));
        assert!(matches!("Y".parse::<LinkDiagram>(), Err(Error::PdParse(_))));
        assert!(matches!("X(1,2,3,4)".parse::<LinkDiagram>(), Err(Error::ArcMultiplicity { .. })));
        assert!(matches!(
            "X(1,2,3,4);X(1,4,3,2)".parse::<LinkDiagram>(),
            Err(Error::InconsistentTraversal(_))
        ));
        assert!(matches!("X(0,0,1,1)".parse::<LinkDiagram>(), Err(Error::PdParse(_))));
    }

    #[test]
    fn components_examples() {
        assert_eq!(pd(HOPF).components(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(pd("O O O").component_count(), 3);
        let t = pd(TREFOIL);
        assert_eq!(t.components(), vec![vec![1, 2, 3, 4, 5, 6]]);
        let u = pd(HOPF).disjoint_union(&pd("O"));
        assert_eq!(u.components(), vec![vec![1, 2], vec![3, 4], vec![]]);
    }

    #[test]
    fn signs_and_writhe() {
        let h = pd(HOPF);
        assert_eq!(h.crossing_sign(0), h.crossing_sign(1));
        assert_eq!(h.writhe().abs(), 2);
        assert_eq!(h.mirror().writhe(), -h.writhe());
        assert_eq!(pd("O").writhe(), 0);
        let t = pd(TREFOIL);
        assert_eq!(t.writhe().abs(), 3);
        assert_eq!(t.mirror().writhe(), -t.writhe());
        // positive braid letters give positive crossings
        let c = braid_closure_diagram(&"2:1 1 1".parse().unwrap());
        assert_eq!(c.writhe(), 3);
    }

    #[test]
    fn linking_examples() {
        let h = pd(HOPF);
        assert_eq!(h.linking_number(0, 1).unwrap().abs(), 1);
        assert_eq!(h.linking_number(0, 1), h.linking_number(1, 0));
        assert_eq!(h.linking_number(0, 0), Err(Error::SameComponent));
        assert_eq!(h.linking_number(0, 5), Err(Error::NoSuchComponent(5)));
        assert_eq!(pd("O O").linking_number(0, 1), Ok(0));
        let (ax, axis) = axis_link(&"2:1 1".parse().unwrap());
        assert_eq!(ax.component_count(), 3);
        let total: i64 =
            (0..3).filter(|&c| c != axis).map(|c| ax.linking_number(axis, c).unwrap()).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn mirror_involution() {
        for s in [HOPF, TREFOIL, "O", "X(1,1,2,2)"] {
            let d = pd(s);
            assert_eq!(d.mirror().mirror(), d);
        }
        assert_eq!(pd("O").mirror(), pd("O"));
    }

    #[test]
    fn mirror_keeps_orientation_of_all_over_components() {
        // component {3,4} of this Hopf link only passes over
        let d = pd("X(1,3,2,4);X(2,4,1,3)");
        let m = d.mirror();
        assert_eq!(m.linking_number(0, 1).unwrap(), -d.linking_number(0, 1).unwrap());
    }

    #[test]
    fn union_and_delete() {
        let h = pd(HOPF);
        assert_eq!(pd("O").disjoint_union(&h).component_count(), 3);
        for c in 0..2 {
            let k = h.delete_component(c).unwrap();
            assert_eq!(k.crossing_count(), 0);
            assert_eq!(k.component_count(), 1);
        }
        let empty = pd("O").delete_component(0).unwrap();
        assert_eq!(empty.component_count(), 0);
        assert_eq!(pd(TREFOIL).delete_component(0).unwrap(), LinkDiagram::empty());
        assert!(h.delete_component(2).is_err());
    }

    #[test]
    fn delete_keeps_self_crossings() {
        let t = pd(TREFOIL).disjoint_union(&pd(HOPF));
        let d = t.delete_component(1).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.free_loops(), 1);
    }

    #[test]
    fn closure_examples() {
        let h = braid_closure_diagram(&"2:1 1".parse().unwrap());
        assert_eq!(h.component_count(), 2);
        assert_eq!(h.linking_number(0, 1).unwrap().abs(), 1);
        let u = braid_closure_diagram(&"1:".parse().unwrap());
        assert_eq!(u.component_count(), 1);
        assert_eq!(u.crossing_count(), 0);
        let a = axis_link_diagram(&"2:1".parse().unwrap());
        assert_eq!(a.component_count(), 2);
        assert_eq!(a.linking_number(0, 1).unwrap().abs(), 2);
        assert_eq!(a.crossing_count(), 5);
    }

    #[test]
    fn closure_with_idle_strands() {
        let d = braid_closure_diagram(&"4:2 2".parse().unwrap());
        assert_eq!(d.component_count(), 4);
        assert_eq!(d.free_loops(), 2);
    }

    #[test]
    fn json_round_trip() {
        let d = pd(HOPF).disjoint_union(&pd("O"));
        let j = d.to_json(Some("h"));
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"name":"h","pd":[[1,3,2,4],[3,1,4,2]],"free_loops":1}"#);
        let back: DiagramJson = serde_json::from_str(&s).unwrap();
        assert_eq!(LinkDiagram::from_json(&back).unwrap(), d);
        assert_eq!(d.to_pd_string(), "X(1,3,2,4);X(3,1,4,2);O");
    }
}
