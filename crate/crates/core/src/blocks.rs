//! The three block shapes certificates are made of: bicliques, complete
//! multipartite blocks, and products of two bicliques.
//!
//! All blocks are kept in a canonical form (classes sorted internally and
//! ordered by minimum element) so that certificates serialize
//! deterministically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Edge;

/// A complete bipartite graph given by two nonempty disjoint vertex classes.
/// The class containing the overall minimum label is stored first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Biclique {
    x: BTreeSet<u32>,
    y: BTreeSet<u32>,
}

impl Biclique {
    pub fn new<A, B>(x: A, y: B) -> Result<Self>
    where
        A: IntoIterator<Item = u32>,
        B: IntoIterator<Item = u32>,
    {
        let x: BTreeSet<u32> = x.into_iter().collect();
        let y: BTreeSet<u32> = y.into_iter().collect();
        if x.is_empty() || y.is_empty() {
            return Err(Error::InvalidArguments("biclique class is empty".into()));
        }
        if x.intersection(&y).next().is_some() {
            return Err(Error::InvalidArguments(
                "biclique classes are not disjoint".into(),
            ));
        }
        // Canonical order: the class holding the smallest label comes first.
        if x.iter().next() <= y.iter().next() {
            Ok(Biclique { x, y })
        } else {
            Ok(Biclique { x: y, y: x })
        }
    }

    pub fn class_x(&self) -> &BTreeSet<u32> {
        &self.x
    }

    pub fn class_y(&self) -> &BTreeSet<u32> {
        &self.y
    }

    pub fn edge_count(&self) -> u64 {
        self.x.len() as u64 * self.y.len() as u64
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        (self.x.contains(&e.lo()) && self.y.contains(&e.hi()))
            || (self.y.contains(&e.lo()) && self.x.contains(&e.hi()))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.x.iter().flat_map(move |&u| {
            self.y
                .iter()
                .map(move |&v| Edge::new(u, v).expect("classes are disjoint"))
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.x.iter().chain(self.y.iter()).copied()
    }

    /// Intersects both classes with `keep`; `None` when a class empties.
    pub fn restrict(&self, keep: &BTreeSet<u32>) -> Option<Biclique> {
        let x: BTreeSet<u32> = self.x.intersection(keep).copied().collect();
        let y: BTreeSet<u32> = self.y.intersection(keep).copied().collect();
        if x.is_empty() || y.is_empty() {
            None
        } else {
            Biclique::new(x, y).ok()
        }
    }

    /// Injective relabeling of both classes.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Biclique> {
        Biclique::new(map_class(&self.x, map)?, map_class(&self.y, map)?)
    }

    /// Replaces every vertex by a set of vertices (a blow-up of classes).
    /// Images of distinct labels must stay disjoint across the two classes.
    pub fn expand(&self, map: &BTreeMap<u32, BTreeSet<u32>>) -> Result<Biclique> {
        Biclique::new(expand_class(&self.x, map)?, expand_class(&self.y, map)?)
    }
}

impl fmt::Debug for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.x, self.y)
    }
}

fn map_class(class: &BTreeSet<u32>, map: &BTreeMap<u32, u32>) -> Result<BTreeSet<u32>> {
    let mut out = BTreeSet::new();
    for v in class {
        let w = *map.get(v).ok_or_else(|| {
            Error::InvalidArguments(format!("relabeling does not map vertex {v}"))
        })?;
        if !out.insert(w) {
            return Err(Error::InvalidArguments(format!(
                "relabeling is not injective at image {w}"
            )));
        }
    }
    Ok(out)
}

fn expand_class(
    class: &BTreeSet<u32>,
    map: &BTreeMap<u32, BTreeSet<u32>>,
) -> Result<BTreeSet<u32>> {
    let mut out = BTreeSet::new();
    for v in class {
        let image = map
            .get(v)
            .ok_or_else(|| Error::InvalidArguments(format!("expansion does not map vertex {v}")))?;
        out.extend(image.iter().copied());
    }
    Ok(out)
}

/// A complete r-partite r-graph: r pairwise-disjoint nonempty vertex
/// classes. Its edges are all r-sets with exactly one vertex per class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultipartiteBlock {
    classes: Vec<BTreeSet<u32>>,
}

impl MultipartiteBlock {
    pub fn new<I, C>(classes: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = u32>,
    {
        let mut classes: Vec<BTreeSet<u32>> = classes
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        if classes.is_empty() {
            return Err(Error::InvalidArguments("block has no classes".into()));
        }
        let mut seen = BTreeSet::new();
        for c in &classes {
            if c.is_empty() {
                return Err(Error::InvalidArguments("block class is empty".into()));
            }
            for v in c {
                if !seen.insert(*v) {
                    return Err(Error::InvalidArguments(format!(
                        "block classes are not disjoint at vertex {v}"
                    )));
                }
            }
        }
        classes.sort_by_key(|c| *c.iter().next().expect("nonempty"));
        Ok(MultipartiteBlock { classes })
    }

    /// A biclique is the r = 2 case.
    pub fn from_biclique(b: &Biclique) -> Self {
        MultipartiteBlock {
            classes: vec![b.class_x().clone(), b.class_y().clone()],
        }
    }

    pub fn r(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[BTreeSet<u32>] {
        &self.classes
    }

    pub fn edge_count(&self) -> u128 {
        self.classes.iter().map(|c| c.len() as u128).product()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.classes.iter().flat_map(|c| c.iter().copied())
    }

    /// True when the sorted r-set takes exactly one vertex from each class.
    pub fn contains_edge(&self, edge: &[u32]) -> bool {
        if edge.len() != self.classes.len() {
            return false;
        }
        let mut hit = vec![false; self.classes.len()];
        for v in edge {
            match self.classes.iter().position(|c| c.contains(v)) {
                Some(i) if !hit[i] => hit[i] = true,
                _ => return false,
            }
        }
        true
    }

    /// All transversal r-sets, each emitted sorted.
    pub fn edges(&self) -> TransversalIter {
        TransversalIter::new(&self.classes)
    }
}

impl fmt::Debug for MultipartiteBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "]")
    }
}

/// Odometer over one representative per class.
pub struct TransversalIter {
    classes: Vec<Vec<u32>>,
    idx: Vec<usize>,
    done: bool,
}

impl TransversalIter {
    fn new(classes: &[BTreeSet<u32>]) -> Self {
        TransversalIter {
            classes: classes
                .iter()
                .map(|c| c.iter().copied().collect())
                .collect(),
            idx: vec![0; classes.len()],
            done: classes.is_empty(),
        }
    }
}

impl Iterator for TransversalIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let mut edge: Vec<u32> = self
            .idx
            .iter()
            .zip(&self.classes)
            .map(|(&i, c)| c[i])
            .collect();
        edge.sort_unstable();
        // advance odometer
        let mut pos = self.classes.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.classes[pos].len() {
                break;
            }
            self.idx[pos] = 0;
        }
        Some(edge)
    }
}

/// The product of the edge sets of two bicliques, one in each host factor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProductBlock {
    pub left: Biclique,
    pub right: Biclique,
}

impl ProductBlock {
    pub fn new(left: Biclique, right: Biclique) -> Self {
        ProductBlock { left, right }
    }

    pub fn pair_count(&self) -> u128 {
        self.left.edge_count() as u128 * self.right.edge_count() as u128
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Edge, Edge)> + '_ {
        self.left
            .edges()
            .flat_map(move |e| self.right.edges().map(move |f| (e, f)))
    }

    pub fn transposed(&self) -> ProductBlock {
        ProductBlock {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn restrict(&self, keep_left: &BTreeSet<u32>, keep_right: &BTreeSet<u32>) -> Option<Self> {
        Some(ProductBlock {
            left: self.left.restrict(keep_left)?,
            right: self.right.restrict(keep_right)?,
        })
    }
}
