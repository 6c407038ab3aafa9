use super::SimplicialSet;
use crate::report::ValidationReport;
use crate::{Error, Result};

/// A simplicial set with a set of marked edges containing every degenerate
/// edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSimplicialSet {
    space: SimplicialSet,
    marked: Vec<bool>,
}

impl MarkedSimplicialSet {
    /// `marked` lists edge indices; degenerate edges need not be listed.
    pub fn new(space: SimplicialSet, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let edges = if space.dim() >= 1 { space.size(1) } else { 0 };
        let mut flags = vec![false; edges];
        for e in marked {
            if e >= edges {
                return Err(Error::Malformed(format!("marked edge {e} does not exist")));
            }
            flags[e] = true;
        }
        for (e, f) in flags.iter_mut().enumerate() {
            if !space.is_nondegenerate(1, e) {
                *f = true;
            }
        }
        Ok(MarkedSimplicialSet { space, marked: flags })
    }

    /// Raw constructor used by validation tests; does not add degenerate edges.
    pub fn from_flags(space: SimplicialSet, marked: Vec<bool>) -> Result<Self> {
        let edges = if space.dim() >= 1 { space.size(1) } else { 0 };
        if marked.len() != edges {
            return Err(Error::Malformed(format!("{} marking flags for {edges} edges", marked.len())));
        }
        Ok(MarkedSimplicialSet { space, marked })
    }

    /// Only degenerate edges marked.
    pub fn minimal(space: SimplicialSet) -> Self {
        Self::new(space, []).expect("no explicit marks")
    }

    /// Every edge marked.
    pub fn maximal(space: SimplicialSet) -> Self {
        let edges = if space.dim() >= 1 { space.size(1) } else { 0 };
        Self::new(space, 0..edges).expect("edges in range")
    }

    pub fn space(&self) -> &SimplicialSet {
        &self.space
    }

    pub fn is_marked(&self, e: usize) -> bool {
        self.marked[e]
    }

    pub fn marked_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.marked.iter().enumerate().filter(|(_, &m)| m).map(|(e, _)| e)
    }

    pub fn flags(&self) -> &[bool] {
        &self.marked
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = self.space.validate();
        if self.space.dim() >= 1 {
            for v in 0..self.space.size(0) {
                let e = self.space.degen(0, 0, v);
                if !self.marked[e] {
                    report.push("marking", format!("cell (1, {e})"), format!("degenerate edge s_0 of vertex {v} is unmarked"));
                }
            }
        }
        report
    }
}
