//! Generators for the forbidden set systems, bigraphs and graphs.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::format::sections;
use crate::graph::{Bigraph, Graph, Side};

const FIGURES: &str = include_str!("../data/figures.txt");

/// An ordered list of subsets of `1..`; the order is part of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    pub ground: Vec<u32>,
    pub sets: Vec<Vec<u32>>,
}

impl SetSystem {
    /// Ground set is the union of the sets.
    pub fn new(sets: Vec<Vec<u32>>) -> Self {
        let ground: BTreeSet<u32> = sets.iter().flatten().copied().collect();
        Self {
            ground: ground.into_iter().collect(),
            sets,
        }
    }

    /// Elements within each set sorted, set order kept.
    pub fn canonical(&self) -> Self {
        Self {
            ground: self.ground.clone(),
            sets: self
                .sets
                .iter()
                .map(|s| {
                    let mut s = s.clone();
                    s.sort_unstable();
                    s
                })
                .collect(),
        }
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self
            .sets
            .iter()
            .map(|s| {
                let items: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", sets.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    C,
    T,
    W,
    D,
    M,
    N,
    G1,
    G2,
    G3,
    Pfam,
    Tgraph,
    T0graph,
    Pgraph,
    Sun,
}

/// Valid indices: `min..=max`, `None` for unbounded. Unindexed families have none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexRange {
    None,
    Range { min: usize, max: Option<usize> },
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexRange::None => f.write_str("-"),
            IndexRange::Range { min, max: None } => write!(f, "i >= {min}"),
            IndexRange::Range { min, max: Some(max) } => write!(f, "{min} <= i <= {max}"),
        }
    }
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::C,
        Family::T,
        Family::W,
        Family::D,
        Family::M,
        Family::N,
        Family::G1,
        Family::G2,
        Family::G3,
        Family::Pfam,
        Family::Tgraph,
        Family::T0graph,
        Family::Pgraph,
        Family::Sun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::C => "C",
            Family::T => "T",
            Family::W => "W",
            Family::D => "D",
            Family::M => "M",
            Family::N => "N",
            Family::G1 => "G1",
            Family::G2 => "G2",
            Family::G3 => "G3",
            Family::Pfam => "Pfam",
            Family::Tgraph => "Tgraph",
            Family::T0graph => "T0graph",
            Family::Pgraph => "Pgraph",
            Family::Sun => "Sun",
        }
    }

    /// Case-insensitive; `sun` and `Sun` both work.
    pub fn from_name(name: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn index_range(self) -> IndexRange {
        let r = |min, max| IndexRange::Range { min, max };
        match self {
            Family::C => r(3, None),
            Family::T | Family::W | Family::D => r(1, None),
            Family::M | Family::N => r(1, Some(3)),
            Family::Pfam => r(2, None),
            Family::Sun => r(3, None),
            _ => IndexRange::None,
        }
    }

    /// Set-system families yield bigraphs, the rest graphs.
    pub fn is_bigraph_family(self) -> bool {
        matches!(
            self,
            Family::C | Family::T | Family::W | Family::D | Family::M | Family::N | Family::G1 | Family::G2 | Family::G3
        )
    }

    pub fn description(self) -> &'static str {
        match self {
            Family::C => "cycle set systems; incidence bigraph is C_2i",
            Family::T => "path plus dominating set with pendant element",
            Family::W => "path plus two overlapping dominating sets",
            Family::D => "path of triples sharing an apex element",
            Family::M => "nested chains, first three members only",
            Family::N => "nested chains with pendant, first three members only",
            Family::G1 => "three legs joined by one set",
            Family::G2 => "sporadic set system",
            Family::G3 => "sporadic set system",
            Family::Pfam => "path with apex and pendant path",
            Family::Tgraph => "spider with three legs of length two",
            Family::T0graph => "two triangles on a path with pendant path",
            Family::Pgraph => "the graph P",
            Family::Sun => "k-sun: 2k-cycle with the even vertices made a clique",
        }
    }
}

/// A family member and its index, validated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub family: Family,
    pub index: Option<usize>,
}

impl FamilyId {
    pub fn new(family: Family, index: Option<usize>) -> Result<Self> {
        let bad = |index| Error::FamilyIndex {
            family: family.name().to_string(),
            index,
        };
        match (family.index_range(), index) {
            (IndexRange::None, None) => {}
            (IndexRange::None, Some(i)) => return Err(bad(i)),
            (IndexRange::Range { min, .. }, None) => return Err(bad(min.saturating_sub(1))),
            (IndexRange::Range { min, max }, Some(i)) => {
                if i < min || max.is_some_and(|m| i > m) {
                    return Err(bad(i));
                }
            }
        }
        Ok(Self { family, index })
    }

    pub fn parse(name: &str, index: Option<usize>) -> Result<Self> {
        Self::new(Family::from_name(name)?, index)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.family.name(), i),
            None => f.write_str(self.family.name()),
        }
    }
}

fn sets(raw: &[&[u32]]) -> SetSystem {
    SetSystem::new(raw.iter().map(|s| s.to_vec()).collect())
}

fn range(a: u32, b: u32) -> Vec<u32> {
    (a..=b).collect()
}

fn with(mut v: Vec<u32>, extra: &[u32]) -> Vec<u32> {
    v.extend_from_slice(extra);
    v
}

/// The set system of a set-system family.
pub fn set_system(id: FamilyId) -> Result<SetSystem> {
    let i = id.index.unwrap_or(0) as u32;
    let path = |n: u32| (1..=n).map(|k| vec![k, k + 1]);
    let out = match id.family {
        Family::C => SetSystem::new((1..=i).map(|k| vec![k, k % i + 1]).collect()),
        Family::T => {
            let mut s: Vec<_> = path(i + 2).collect();
            s.push(with(range(2, i + 2), &[i + 4]));
            s.push(vec![i + 4]);
            SetSystem::new(s)
        }
        Family::W => {
            let mut s: Vec<_> = path(i + 1).collect();
            s.push(with(range(1, i + 1), &[i + 3]));
            s.push(with(range(2, i + 2), &[i + 3]));
            s.push(vec![i + 3]);
            SetSystem::new(s)
        }
        Family::D => {
            let mut s: Vec<_> = (1..=i + 1).map(|k| vec![k, k + 1, i + 4]).collect();
            s.push(vec![i + 2]);
            s.push(vec![i + 3, i + 4]);
            s.push(range(2, i + 4));
            SetSystem::new(s)
        }
        Family::M => match i {
            1 => sets(&[&[1, 2, 3, 4, 5], &[1, 2, 3], &[1], &[1, 2, 4, 6], &[2, 4], &[2, 5]]),
            2 => sets(&[
                &[1, 2, 3, 4, 5, 6, 7],
                &[1, 2, 3, 4, 5],
                &[1, 2, 3],
                &[1],
                &[1, 2, 3, 4, 6, 8],
                &[1, 2, 4, 6],
                &[2, 4],
                &[2, 7],
            ]),
            _ => sets(&[
                &[1, 2, 3, 4, 5, 6, 7, 8, 9],
                &[1, 2, 3, 4, 5, 6, 7],
                &[1, 2, 3, 4, 5],
                &[1, 2, 3],
                &[1],
                &[1, 2, 3, 4, 5, 6, 8, 10],
                &[1, 2, 3, 4, 6, 8],
                &[1, 2, 4, 6],
                &[2, 4],
                &[2, 9],
            ]),
        },
        Family::N => match i {
            1 => sets(&[&[1, 2, 3], &[1], &[1, 2, 4, 6], &[2, 4], &[2, 5], &[6]]),
            2 => sets(&[
                &[1, 2, 3, 4, 5],
                &[1, 2, 3],
                &[1],
                &[1, 2, 3, 4, 6, 8],
                &[1, 2, 4, 6],
                &[2, 4],
                &[2, 7],
                &[8],
            ]),
            _ => sets(&[
                &[1, 2, 3, 4, 5, 6, 7],
                &[1, 2, 3, 4, 5],
                &[1, 2, 3],
                &[1],
                &[1, 2, 3, 4, 5, 6, 8, 10],
                &[1, 2, 3, 4, 6, 8],
                &[1, 2, 4, 6],
                &[2, 4],
                &[2, 9],
                &[10],
            ]),
        },
        Family::G1 => sets(&[&[1, 3, 5], &[1, 2], &[3, 4], &[5, 6]]),
        Family::G2 => sets(&[&[1], &[1, 2, 3, 4], &[2, 4, 5], &[2, 3, 6]]),
        Family::G3 => sets(&[&[1, 2], &[3, 4], &[5], &[1, 2, 3], &[1, 3, 5]]),
        _ => {
            return Err(Error::Mismatch(format!("{} is not a set-system family", id.family.name())))
        }
    };
    Ok(out)
}

/// Sets become `X`, ground elements `Y`; `S e` is an edge iff `e` is in `S`.
pub fn incidence_bigraph(s: &SetSystem) -> Bigraph {
    let mut b = Bigraph::with_labels(
        (1..=s.sets.len()).map(|k| format!("S{k}")).collect(),
        s.ground.iter().map(|e| e.to_string()).collect(),
    );
    for (k, set) in s.sets.iter().enumerate() {
        for e in set {
            let y = s.ground.iter().position(|g| g == e).unwrap();
            b.add_edge(k, y);
        }
    }
    b
}

fn figure(name: &str) -> Graph {
    let body = sections(FIGURES)
        .into_iter()
        .find(|(n, _)| n == name)
        .unwrap_or_else(|| panic!("missing figure {name}"))
        .1;
    let mut lines = body
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let vertices: Vec<String> = lines
        .next()
        .and_then(|l| l.strip_prefix("vertices"))
        .expect("figure must start with a vertices line")
        .split_whitespace()
        .map(String::from)
        .collect();
    let mut g = Graph::with_labels(vertices);
    for line in lines {
        let ends: Vec<usize> = line
            .split_whitespace()
            .map(|l| g.index_of(l).unwrap_or_else(|| panic!("unknown vertex {l} in {name}")))
            .collect();
        assert_eq!(ends.len(), 2, "bad edge line {line:?} in {name}");
        assert!(!g.has_edge(ends[0], ends[1]), "duplicate edge {line:?} in {name}");
        g.add_edge(ends[0], ends[1]);
    }
    g
}

pub fn gen_t() -> Graph {
    figure("T")
}

pub fn gen_t0() -> Graph {
    figure("T0")
}

pub fn gen_p() -> Graph {
    figure("P")
}

/// Path `y v t1 .. ti w z`, apex `u` adjacent to `v`, `w` and every `tk`,
/// pendant path `u x s`.
pub fn gen_pi(i: usize) -> Result<Graph> {
    if i < 2 {
        return Err(Error::FamilyIndex {
            family: "Pfam".into(),
            index: i,
        });
    }
    let mut labels: Vec<String> = vec!["y".into(), "v".into()];
    labels.extend((1..=i).map(|k| format!("t{k}")));
    labels.extend(["w", "z", "u", "x", "s"].map(String::from));
    let mut g = Graph::with_labels(labels);
    let at = |g: &Graph, l: &str| g.index_of(l).unwrap();
    // Bottom path occupies indices 0..i+4 in order.
    for k in 1..i + 4 {
        g.add_edge(k - 1, k);
    }
    let u = at(&g, "u");
    for k in 1..=i + 2 {
        g.add_edge(u, k);
    }
    let x = at(&g, "x");
    let s = at(&g, "s");
    g.add_edge(u, x);
    g.add_edge(x, s);
    Ok(g)
}

/// Cycle `v1 .. v2k` with the even-indexed vertices made a clique.
pub fn gen_sun(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::FamilyIndex {
            family: "Sun".into(),
            index: k,
        });
    }
    let n = 2 * k;
    let mut g = Graph::with_labels((1..=n).map(|i| format!("v{i}")).collect());
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    // v2, v4, .. are the odd 0-based indices.
    for a in (1..n).step_by(2) {
        for b in (a + 2..n).step_by(2) {
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

/// `B` as a graph with the chosen side made a clique.
pub fn split_augment(b: &Bigraph, side: Side) -> Graph {
    let mut g = b.to_graph();
    let members: Vec<usize> = match side {
        Side::X => (0..b.nx()).collect(),
        Side::Y => (b.nx()..b.nx() + b.ny()).collect(),
    };
    for (k, &u) in members.iter().enumerate() {
        for &v in &members[k + 1..] {
            g.add_edge(u, v);
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyObject {
    Bigraph(Bigraph),
    Graph(Graph),
}

pub fn generate(id: FamilyId) -> Result<FamilyObject> {
    let i = id.index.unwrap_or(0);
    Ok(match id.family {
        f if f.is_bigraph_family() => FamilyObject::Bigraph(incidence_bigraph(&set_system(id)?)),
        Family::Pfam => FamilyObject::Graph(gen_pi(i)?),
        Family::Sun => FamilyObject::Graph(gen_sun(i)?),
        Family::Tgraph => FamilyObject::Graph(gen_t()),
        Family::T0graph => FamilyObject::Graph(gen_t0()),
        _ => FamilyObject::Graph(gen_p()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: Family,
    pub range: IndexRange,
    pub kind: &'static str,
    pub description: &'static str,
}

pub fn catalog() -> Vec<CatalogEntry> {
    Family::ALL
        .into_iter()
        .map(|family| CatalogEntry {
            family,
            range: family.index_range(),
            kind: if family.is_bigraph_family() { "bigraph" } else { "graph" },
            description: family.description(),
        })
        .collect()
}
