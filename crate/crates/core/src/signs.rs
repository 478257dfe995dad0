//! Formal bookkeeping of orientation signs for determinant lines under the
//! attaching map.
//!
//! Lines are opaque symbols; an isomorphism is a pair of words with a
//! declared sign depending on `ℓ`, the number of conjugate pairs of nodes of
//! the domain. Words are compared as sorted multisets. Reordering factors is
//! treated as a braiding with sign `+1`; that is a convention of this ledger
//! (all factors are orientation lines of even-rank spaces unless a
//! registered isomorphism says otherwise).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which curve a bundle or moduli stratum lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Curve {
    Nodal,
    Normalization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bundle {
    /// `(ℂ, c_std)`
    Trivial,
    /// `(ℂ^{n+2}, c_std)`
    TrivialFrame,
    /// Relative tangent bundle `(𝒯, c_𝒯)`.
    Tangent(Curve),
    /// The oriented Real bundle `(W, φ)`.
    Oriented(Curve),
    /// `(E, c_E)^∨` from the twisted orientation data.
    TwistDual(Curve),
    /// `(L ⊕ c*L̄, c_tw)`.
    Twisted(Curve),
    /// `2L`, twice a Real bundle.
    Doubled(Curve),
}

/// Moduli strata whose tangent determinant enters the orientation sheaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stratum {
    /// `𝓜_{χ, ℓ(μ)}`
    Domain,
    /// `𝓜_{χ+4ℓ, ℓ(μ)+2ℓ}`
    ResolvedDomain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Line {
    DetDbar(Bundle),
    DetModuli(Stratum),
}

/// A line symbol, possibly pulled back along the attaching map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub line: Line,
    pub pulled_back: bool,
}

impl Factor {
    pub fn here(line: Line) -> Self {
        Factor {
            line,
            pulled_back: false,
        }
    }

    pub fn pulled(line: Line) -> Self {
        Factor {
            line,
            pulled_back: true,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match self.line {
            Line::DetDbar(b) => format!("det-dbar({})", bundle_tag(b)),
            Line::DetModuli(Stratum::Domain) => "det-T-DM(chi)".to_string(),
            Line::DetModuli(Stratum::ResolvedDomain) => "det-T-DM(chi+4l)".to_string(),
        };
        if self.pulled_back {
            write!(f, "Phi*{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

fn bundle_tag(b: Bundle) -> String {
    let curve = |c: Curve| match c {
        Curve::Nodal => "0",
        Curve::Normalization => "~",
    };
    match b {
        Bundle::Trivial => "C".into(),
        Bundle::TrivialFrame => "C^{n+2}".into(),
        Bundle::Tangent(c) => format!("T{}", curve(c)),
        Bundle::Oriented(c) => format!("W{}", curve(c)),
        Bundle::TwistDual(c) => format!("Edual{}", curve(c)),
        Bundle::Twisted(c) => format!("Etw{}", curve(c)),
        Bundle::Doubled(c) => format!("2L{}", curve(c)),
    }
}

/// A tensor product of line symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineWord {
    factors: Vec<Factor>,
}

impl LineWord {
    pub fn new(factors: impl IntoIterator<Item = Factor>) -> Self {
        LineWord {
            factors: factors.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn tensor(&self, other: &LineWord) -> LineWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        LineWord { factors }
    }

    /// Sorted form used for word equality.
    pub fn canonical(&self) -> LineWord {
        let mut factors = self.factors.clone();
        factors.sort();
        LineWord { factors }
    }

    pub fn equivalent(&self, other: &LineWord) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for LineWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(Factor::to_string).collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

/// Sign of an isomorphism as a function of `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignRule {
    Plus,
    /// `(−1)^ℓ`
    NodeParity,
    Product(&'static [SignRule]),
}

impl SignRule {
    pub fn eval(&self, ell: u32) -> i8 {
        match self {
            SignRule::Plus => 1,
            SignRule::NodeParity => {
                if ell.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
            SignRule::Product(rules) => rules.iter().map(|r| r.eval(ell)).product(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedIso {
    pub name: String,
    pub source: LineWord,
    pub target: LineWord,
    pub sign: SignRule,
}

impl NamedIso {
    pub fn new(name: &str, source: LineWord, target: LineWord, sign: SignRule) -> Self {
        NamedIso {
            name: name.to_string(),
            source,
            target,
            sign,
        }
    }

    pub fn inverse(&self) -> NamedIso {
        NamedIso {
            name: format!("{}^-1", self.name),
            source: self.target.clone(),
            target: self.source.clone(),
            sign: self.sign,
        }
    }

    /// `self ⊗ id_word`
    pub fn with_identity(&self, word: &LineWord) -> NamedIso {
        NamedIso {
            name: format!("{} ⊗ id", self.name),
            source: self.source.tensor(word),
            target: self.target.tensor(word),
            sign: self.sign,
        }
    }
}

pub const ISO_DM_SPLIT: &str = "iso-DM-split";
pub const ISO_TANGENT_NORMALIZATION: &str = "iso-tangent-normalization";
pub const ISO_SQUARE_TRIVIAL: &str = "iso-square-trivial";
pub const ISO_TWIST: &str = "iso-twist";
pub const ISO_SQUARE_BUNDLE: &str = "iso-square-bundle";
pub const ISO_FRAME_IDENTIFICATION: &str = "iso-frame-identification";
pub const ISO_ORIENTED_PULLBACK: &str = "iso-oriented-pullback";

fn dbar(b: Bundle) -> Line {
    Line::DetDbar(b)
}

fn word(factors: &[Factor]) -> LineWord {
    LineWord::new(factors.iter().copied())
}

/// Registered isomorphisms by name.
#[derive(Clone, Debug)]
pub struct Catalog {
    isos: BTreeMap<String, NamedIso>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Result<&NamedIso> {
        self.isos.get(name).ok_or_else(|| Error::UnknownIso(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &NamedIso> {
        self.isos.values()
    }

    pub fn len(&self) -> usize {
        self.isos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.isos.is_empty()
    }
}

/// The isomorphisms comparing orientations of the nodal moduli space with
/// those of the normalization, with their declared signs.
pub fn register_paper_isos() -> Catalog {
    use Bundle::*;
    use Curve::*;
    let c = Factor::here(dbar(Trivial));
    let pc = Factor::pulled(dbar(Trivial));
    let isos = vec![
        // Deligne–Mumford part, tensored with the trivial-bundle sequence.
        NamedIso::new(
            ISO_DM_SPLIT,
            word(&[pc, Factor::pulled(Line::DetModuli(Stratum::Domain))]),
            word(&[c, Factor::here(Line::DetModuli(Stratum::ResolvedDomain))]),
            SignRule::NodeParity,
        ),
        // Normalization sequence for the tangent bundle.
        NamedIso::new(
            ISO_TANGENT_NORMALIZATION,
            word(&[Factor::pulled(dbar(Tangent(Nodal))), pc]),
            word(&[Factor::here(dbar(Tangent(Normalization))), c]),
            SignRule::NodeParity,
        ),
        // Two copies of the trivial-bundle sequence.
        NamedIso::new(ISO_SQUARE_TRIVIAL, word(&[pc, pc]), word(&[c, c]), SignRule::Plus),
        // Pullback for L ⊕ c*L̄ with complex orientations.
        NamedIso::new(
            ISO_TWIST,
            word(&[Factor::pulled(dbar(Twisted(Nodal)))]),
            word(&[Factor::here(dbar(Twisted(Normalization)))]),
            SignRule::NodeParity,
        ),
        // Pullback for twice a Real bundle, oriented as a square.
        NamedIso::new(
            ISO_SQUARE_BUNDLE,
            word(&[Factor::pulled(dbar(Doubled(Nodal)))]),
            word(&[Factor::here(dbar(Doubled(Normalization)))]),
            SignRule::Plus,
        ),
        // Pullback of the canonical frame identification W ⊕ E^∨ ≅ ℂ^{n+2}.
        NamedIso::new(
            ISO_FRAME_IDENTIFICATION,
            word(&[
                Factor::pulled(dbar(Oriented(Nodal))),
                Factor::pulled(dbar(TwistDual(Nodal))),
                Factor::pulled(dbar(TrivialFrame)),
            ]),
            word(&[
                Factor::here(dbar(Oriented(Normalization))),
                Factor::here(dbar(TwistDual(Normalization))),
                Factor::here(dbar(TrivialFrame)),
            ]),
            SignRule::Plus,
        ),
        // The composite compared by replay_lemma_comsign.
        NamedIso::new(
            ISO_ORIENTED_PULLBACK,
            word(&[Factor::pulled(dbar(Oriented(Nodal))), pc]),
            word(&[Factor::here(dbar(Oriented(Normalization))), c]),
            SignRule::NodeParity,
        ),
    ];
    Catalog {
        isos: isos.into_iter().map(|i| (i.name.clone(), i)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub name: String,
    pub sign: i8,
    pub running: i8,
}

/// Result of composing a chain at a fixed `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedIdentification {
    pub sign: i8,
    pub source: LineWord,
    pub target: LineWord,
    pub steps: Vec<StepRecord>,
}

/// Composes `chain` left to right. Each junction must match as words after
/// canonicalization; the first mismatch is reported with its index.
pub fn compose(chain: &[NamedIso], ell: u32) -> Result<SignedIdentification> {
    let mut steps = Vec::with_capacity(chain.len());
    let mut running: i8 = 1;
    for (i, iso) in chain.iter().enumerate() {
        if i > 0 {
            let prev = &chain[i - 1].target;
            if !prev.equivalent(&iso.source) {
                return Err(Error::WordMismatch {
                    junction: i,
                    expected: prev.canonical().to_string(),
                    found: iso.source.canonical().to_string(),
                });
            }
        }
        let s = iso.sign.eval(ell);
        running *= s;
        steps.push(StepRecord {
            name: iso.name.clone(),
            sign: s,
            running,
        });
    }
    let (source, target) = match (chain.first(), chain.last()) {
        (Some(first), Some(last)) => (first.source.clone(), last.target.clone()),
        _ => (LineWord::default(), LineWord::default()),
    };
    Ok(SignedIdentification {
        sign: running,
        source,
        target,
        steps,
    })
}

/// The chain showing the attaching map preserves orientation.
///
/// Starting from `Φ*(det ∂̄_𝒯 ⊗ det T𝓜) ⊗ Φ*(det ∂̄_ℂ)^{⊗2}`, apply the
/// Deligne–Mumford step, then the tangent step, then undo the square of the
/// trivial sequence. What is left is the comparison isomorphism itself,
/// tensored with the identity of `Φ*(det ∂̄_ℂ)^{⊗2}`, so the chain sign is
/// its sign.
pub fn main_chain(catalog: &Catalog) -> Result<Vec<NamedIso>> {
    use Bundle::*;
    use Curve::*;
    let dm = catalog.get(ISO_DM_SPLIT)?;
    let tangent = catalog.get(ISO_TANGENT_NORMALIZATION)?;
    let square = catalog.get(ISO_SQUARE_TRIVIAL)?;
    let c = Factor::here(dbar(Trivial));
    let pc = Factor::pulled(dbar(Trivial));
    Ok(vec![
        dm.with_identity(&word(&[Factor::pulled(dbar(Tangent(Nodal))), pc])),
        tangent.with_identity(&word(&[c, Factor::here(Line::DetModuli(Stratum::ResolvedDomain))])),
        square.inverse().with_identity(&word(&[
            Factor::here(Line::DetModuli(Stratum::ResolvedDomain)),
            Factor::here(dbar(Tangent(Normalization))),
        ])),
    ])
}

/// The three pullback steps behind the sign of
/// [`ISO_ORIENTED_PULLBACK`]: square bundle, frame identification, twist.
pub fn comsign_chain(catalog: &Catalog) -> Result<Vec<NamedIso>> {
    use Bundle::*;
    use Curve::*;
    let square = catalog.get(ISO_SQUARE_BUNDLE)?;
    let frame = catalog.get(ISO_FRAME_IDENTIFICATION)?;
    let twist = catalog.get(ISO_TWIST)?;
    let frame_pulled = frame.source.clone();
    let frame_here = frame.target.clone();
    let twisted_pulled = Factor::pulled(dbar(Twisted(Nodal)));
    let doubled_here = Factor::here(dbar(Doubled(Normalization)));
    Ok(vec![
        square.with_identity(&frame_pulled.tensor(&word(&[twisted_pulled]))),
        frame.with_identity(&word(&[doubled_here, twisted_pulled])),
        twist.with_identity(&frame_here.tensor(&word(&[doubled_here]))),
    ])
}

/// Sign of the pullback isomorphism for an oriented Real bundle, as the
/// product of its three ingredients. Equals `(−1)^ℓ`.
pub fn replay_lemma_comsign(ell: u32) -> i8 {
    let catalog = register_paper_isos();
    let chain = comsign_chain(&catalog).expect("catalog contains the comsign steps");
    compose(&chain, ell).expect("comsign chain is composable").sign
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainName {
    Main,
    Comsign,
}

pub fn named_chain(catalog: &Catalog, name: ChainName) -> Result<Vec<NamedIso>> {
    match name {
        ChainName::Main => main_chain(catalog),
        ChainName::Comsign => comsign_chain(catalog),
    }
}
