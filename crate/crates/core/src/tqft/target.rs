use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Euler characteristic gained by resolving one conjugate pair of nodes.
pub const EULER_GAIN_PER_NODE_PAIR: i64 = 4;

/// Topological type of the real locus of a connected symmetric curve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealLocus {
    pub circles: u32,
    pub separating: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetKind {
    /// Two conjugate copies of a genus `half_genus` curve.
    Doublet { half_genus: u32 },
    /// A connected symmetric curve of genus `genus`.
    Connected { genus: u32, real_locus: RealLocus },
}

/// A symmetric target curve, described by topological data only.
///
/// The genus stored in [`TargetKind`] is that of the normalized components.
/// For a nodal target, [`TargetCurve::euler_char`] reports the Euler
/// characteristic of a smoothing, which is what enters dimension counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TargetJson", into = "TargetJson")]
pub struct TargetCurve {
    pub kind: TargetKind,
    pub marked_pairs: u32,
    pub node_pairs: u32,
    /// Number of conjugate node pairs resolved to obtain this curve.
    pub resolved_node_pairs: u32,
    /// Degree `k` of the line bundle.
    pub level: i64,
}

// Flat wire form. Kept free of tagged enums and `flatten`, which do not
// round-trip numbers under serde_json's arbitrary precision mode.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TargetJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    half_genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    real_locus: Option<RealLocus>,
    #[serde(default)]
    marked_pairs: u32,
    #[serde(default)]
    node_pairs: u32,
    #[serde(default)]
    resolved_node_pairs: u32,
    #[serde(default)]
    level: i64,
}

impl From<TargetCurve> for TargetJson {
    fn from(t: TargetCurve) -> Self {
        let (kind, half_genus, genus, real_locus) = match t.kind {
            TargetKind::Doublet { half_genus } => ("doublet", Some(half_genus), None, None),
            TargetKind::Connected { genus, real_locus } => {
                ("connected", None, Some(genus), Some(real_locus))
            }
        };
        TargetJson {
            kind: kind.to_string(),
            half_genus,
            genus,
            real_locus,
            marked_pairs: t.marked_pairs,
            node_pairs: t.node_pairs,
            resolved_node_pairs: t.resolved_node_pairs,
            level: t.level,
        }
    }
}

impl TryFrom<TargetJson> for TargetCurve {
    type Error = String;

    fn try_from(j: TargetJson) -> std::result::Result<Self, String> {
        let kind = match (j.kind.as_str(), j.half_genus, j.genus) {
            ("doublet", Some(half_genus), None) => TargetKind::Doublet { half_genus },
            ("connected", None, Some(genus)) => TargetKind::Connected {
                genus,
                real_locus: j.real_locus.unwrap_or_default(),
            },
            (kind, _, _) => {
                return Err(format!(
                    "target kind {kind:?} needs exactly `half_genus` (doublet) or `genus` (connected)"
                ))
            }
        };
        Ok(TargetCurve {
            kind,
            marked_pairs: j.marked_pairs,
            node_pairs: j.node_pairs,
            resolved_node_pairs: j.resolved_node_pairs,
            level: j.level,
        })
    }
}

impl TargetCurve {
    pub fn doublet(half_genus: u32) -> Self {
        Self::from_kind(TargetKind::Doublet { half_genus })
    }

    pub fn connected(genus: u32, real_locus: RealLocus) -> Self {
        Self::from_kind(TargetKind::Connected { genus, real_locus })
    }

    fn from_kind(kind: TargetKind) -> Self {
        TargetCurve {
            kind,
            marked_pairs: 0,
            node_pairs: 0,
            resolved_node_pairs: 0,
            level: 0,
        }
    }

    pub fn with_marked_pairs(mut self, r: u32) -> Self {
        self.marked_pairs = r;
        self
    }

    pub fn with_level(mut self, k: i64) -> Self {
        self.level = k;
        self
    }

    pub fn euler_char(&self) -> i64 {
        let smooth = match self.kind {
            TargetKind::Doublet { half_genus } => 2 * (2 - 2 * i64::from(half_genus)),
            TargetKind::Connected { genus, .. } => 2 - 2 * i64::from(genus),
        };
        smooth - EULER_GAIN_PER_NODE_PAIR * i64::from(self.node_pairs)
    }

    pub fn is_smooth(&self) -> bool {
        self.node_pairs == 0
    }

    /// Pinches one conjugate pair of non-separating circles.
    ///
    /// For a doublet this puts one node on each half, lowering the half genus
    /// by one; for a connected curve the normalization loses genus two.
    pub fn degenerate(&self) -> Result<Self> {
        let kind = match self.kind {
            TargetKind::Doublet { half_genus } if half_genus >= 1 => TargetKind::Doublet {
                half_genus: half_genus - 1,
            },
            TargetKind::Connected { genus, real_locus } if genus >= 2 => TargetKind::Connected {
                genus: genus - 2,
                real_locus,
            },
            _ => {
                return Err(Error::WrongTarget(format!(
                    "{self:?} has no conjugate pair of non-separating circles to pinch"
                )))
            }
        };
        Ok(TargetCurve {
            kind,
            node_pairs: self.node_pairs + 1,
            ..*self
        })
    }

    /// Separates every node pair into two new pairs of marked points.
    pub fn normalization(&self) -> Self {
        TargetCurve {
            marked_pairs: self.marked_pairs + 2 * self.node_pairs,
            resolved_node_pairs: self.resolved_node_pairs + self.node_pairs,
            node_pairs: 0,
            ..*self
        }
    }

    /// Normalization of the one-node-pair degeneration of a smooth target.
    pub fn split_target(&self) -> Result<Self> {
        if !self.is_smooth() {
            return Err(Error::WrongTarget(format!("{self:?} is already nodal")));
        }
        Ok(self.degenerate()?.normalization())
    }

    pub fn half_genus(&self) -> Option<u32> {
        match self.kind {
            TargetKind::Doublet { half_genus } => Some(half_genus),
            TargetKind::Connected { .. } => None,
        }
    }
}
