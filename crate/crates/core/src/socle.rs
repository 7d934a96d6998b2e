//! Socle filtrations of the indecomposable summands of tensor
//! representations of `gl∞`, `sl∞`, `sp∞` and `so∞`.
//!
//! Every indecomposable summand is indexed by one pair `(λ; μ)` (gl/sl) or
//! one partition `λ` (sp/so), and its socle layers are given by sums of
//! Littlewood–Richardson coefficients:
//!
//! * gl/sl, layer `r+1`: `Γ_{λ';μ'}` with multiplicity `Σ_{|γ|=r} N^λ_{λ',γ} N^μ_{μ',γ}`;
//! * sp, layer `r+1`: `Γ⟨μ⟩` with multiplicity `Σ_{|γ|=r} N^λ_{μ,(2γ)ᵀ}`;
//! * so, layer `r+1`: `Γ[μ]` with multiplicity `Σ_{|γ|=r} N^λ_{μ,2γ}`.
//!
//! Layers are stored bottom-up: `layers()[0]` is the socle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::lr_coefficient;
use crate::partitions::{partitions_of, sym_group_irrep_dim, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Gl,
    Sl,
    Sp,
    So,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 4] = [Self::Gl, Self::Sl, Self::Sp, Self::So];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Gl => "gl",
            Self::Sl => "sl",
            Self::Sp => "sp",
            Self::So => "so",
        }
    }

    /// gl and sl act on mixed tensors `V^{⊗(p,q)}`; sp and so only on `V^{⊗d}`.
    pub fn is_mixed(self) -> bool {
        matches!(self, Self::Gl | Self::Sl)
    }

    /// Reject `(p, q)` with `q ≠ 0` for sp/so.
    pub fn check_shape(self, p: usize, q: usize) -> Result<()> {
        if !self.is_mixed() && q != 0 {
            return Err(Error::MixedShape { algebra: self, p, q });
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gl" => Ok(Self::Gl),
            "sl" => Ok(Self::Sl),
            "sp" => Ok(Self::Sp),
            "so" => Ok(Self::So),
            _ => Err(Error::ParseAlgebra(s.to_string())),
        }
    }
}

/// A simple module: `Γ_{λ;μ}` for gl/sl, `Γ⟨λ⟩` for sp, `Γ[λ]` for so.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    algebra: AlgebraKind,
    covariant: Partition,
    contravariant: Partition,
}

impl IrrepLabel {
    pub fn new(algebra: AlgebraKind, covariant: Partition, contravariant: Partition) -> Result<Self> {
        if !algebra.is_mixed() && !contravariant.is_zero() {
            return Err(Error::MixedShape {
                algebra,
                p: covariant.weight(),
                q: contravariant.weight(),
            });
        }
        Ok(Self {
            algebra,
            covariant,
            contravariant,
        })
    }

    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn covariant(&self) -> &Partition {
        &self.covariant
    }

    pub fn contravariant(&self) -> &Partition {
        &self.contravariant
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.algebra {
            AlgebraKind::Gl | AlgebraKind::Sl => {
                write!(f, "Γ{{{};{}}}", self.covariant, self.contravariant)
            }
            AlgebraKind::Sp => write!(f, "Γ⟨{}⟩", self.covariant),
            AlgebraKind::So => write!(f, "Γ[{}]", self.covariant),
        }
    }
}

impl fmt::Debug for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One semisimple layer: labels with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Layer {
    entries: BTreeMap<IrrepLabel, u64>,
}

impl Layer {
    pub fn multiplicity(&self, label: &IrrepLabel) -> u64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    /// Entries in canonical order: decreasing on covariant, then contravariant.
    pub fn iter(&self) -> impl Iterator<Item = (&IrrepLabel, u64)> {
        self.entries.iter().rev().map(|(l, &m)| (l, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    fn add(&mut self, label: IrrepLabel, mult: u64) {
        if mult > 0 {
            *self.entries.entry(label).or_insert(0) += mult;
        }
    }
}

impl FromIterator<(IrrepLabel, u64)> for Layer {
    fn from_iter<I: IntoIterator<Item = (IrrepLabel, u64)>>(iter: I) -> Self {
        let mut layer = Layer::default();
        for (l, m) in iter {
            layer.add(l, m);
        }
        layer
    }
}

/// Socle filtration of the indecomposable module indexed by `(λ; μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DiagramJson", try_from = "DiagramJson")]
pub struct SocleDiagram {
    algebra: AlgebraKind,
    lambda: Partition,
    mu: Partition,
    layers: Vec<Layer>,
}

impl SocleDiagram {
    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Bottom-up: index 0 is the socle.
    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }

    /// Sum over all layers of the multiplicity of `label`.
    pub fn total_multiplicity_of(&self, label: &IrrepLabel) -> u64 {
        self.layers.iter().map(|l| l.multiplicity(label)).sum()
    }

    /// The label of the simple socle.
    pub fn socle_label(&self) -> IrrepLabel {
        IrrepLabel {
            algebra: self.algebra,
            covariant: self.lambda.clone(),
            contravariant: self.mu.clone(),
        }
    }

    /// Builds a diagram from explicit layers, trimming trailing empty ones.
    pub fn from_layers(
        algebra: AlgebraKind,
        lambda: Partition,
        mu: Partition,
        mut layers: Vec<Layer>,
    ) -> Result<Self> {
        if !algebra.is_mixed() && !mu.is_zero() {
            return Err(Error::MixedShape {
                algebra,
                p: lambda.weight(),
                q: mu.weight(),
            });
        }
        while layers.last().is_some_and(Layer::is_empty) {
            layers.pop();
        }
        if layers.iter().any(Layer::is_empty) {
            return Err(Error::InvalidShape("socle diagram has an empty interior layer".into()));
        }
        for layer in &layers {
            if let Some((label, _)) = layer.iter().find(|(l, _)| l.algebra != algebra) {
                return Err(Error::InvalidShape(format!(
                    "label {label} does not belong to a {algebra} diagram"
                )));
            }
        }
        Ok(Self {
            algebra,
            lambda,
            mu,
            layers,
        })
    }
}

/// Layers of `Γ_{λ;0} ⊗ Γ_{0;μ}` over gl∞ (equivalently sl∞).
pub fn gl_socle_layers(lambda: &Partition, mu: &Partition) -> SocleDiagram {
    mixed_socle_layers(AlgebraKind::Gl, lambda, mu)
}

fn mixed_socle_layers(algebra: AlgebraKind, lambda: &Partition, mu: &Partition) -> SocleDiagram {
    let (p, q) = (lambda.weight(), mu.weight());
    let layers = (0..=p.min(q))
        .map(|r| {
            let gammas = partitions_of(r);
            let mut layer = Layer::default();
            for lp in partitions_of(p - r) {
                for mp in partitions_of(q - r) {
                    let mult: u64 = gammas
                        .iter()
                        .map(|g| lr_coefficient(&lp, g, lambda) * lr_coefficient(&mp, g, mu))
                        .sum();
                    layer.add(
                        IrrepLabel {
                            algebra,
                            covariant: lp.clone(),
                            contravariant: mp.clone(),
                        },
                        mult,
                    );
                }
            }
            layer
        })
        .collect();
    SocleDiagram::from_layers(algebra, lambda.clone(), mu.clone(), layers)
        .expect("gl layers are contiguous")
}

/// Layers of `Γ_{λ;0}` restricted to sp∞.
pub fn sp_socle_layers(lambda: &Partition) -> SocleDiagram {
    pure_socle_layers(AlgebraKind::Sp, lambda, |g| g.double().transpose())
}

/// Layers of `Γ_{λ;0}` restricted to so∞.
pub fn so_socle_layers(lambda: &Partition) -> SocleDiagram {
    pure_socle_layers(AlgebraKind::So, lambda, |g| g.double())
}

fn pure_socle_layers(
    algebra: AlgebraKind,
    lambda: &Partition,
    removed: impl Fn(&Partition) -> Partition,
) -> SocleDiagram {
    let d = lambda.weight();
    let layers = (0..=d / 2)
        .map(|r| {
            let shapes: Vec<Partition> = partitions_of(r).iter().map(&removed).collect();
            partitions_of(d - 2 * r)
                .into_iter()
                .map(|m| {
                    let mult = shapes.iter().map(|s| lr_coefficient(&m, s, lambda)).sum();
                    let label = IrrepLabel {
                        algebra,
                        covariant: m,
                        contravariant: Partition::zero(),
                    };
                    (label, mult)
                })
                .collect()
        })
        .collect();
    SocleDiagram::from_layers(algebra, lambda.clone(), Partition::zero(), layers)
        .expect("sp/so layers are contiguous")
}

/// Dispatch on the algebra; `mu` must be zero for sp/so.
pub fn socle_layers(algebra: AlgebraKind, lambda: &Partition, mu: &Partition) -> Result<SocleDiagram> {
    algebra.check_shape(lambda.weight(), mu.weight())?;
    Ok(match algebra {
        AlgebraKind::Gl | AlgebraKind::Sl => mixed_socle_layers(algebra, lambda, mu),
        AlgebraKind::Sp => sp_socle_layers(lambda),
        AlgebraKind::So => so_socle_layers(lambda),
    })
}

/// `[Γ_{λ;0} ⊗ Γ_{0;μ} : Γ_{λ';μ'}] = Σ_γ N^λ_{λ',γ} N^μ_{μ',γ}`.
pub fn total_multiplicity(
    lambda: &Partition,
    mu: &Partition,
    lambda_p: &Partition,
    mu_p: &Partition,
) -> u64 {
    let (p, q) = (lambda.weight(), mu.weight());
    let (pp, qp) = (lambda_p.weight(), mu_p.weight());
    if pp > p || qp > q || p - pp != q - qp {
        return 0;
    }
    partitions_of(p - pp)
        .iter()
        .map(|g| lr_coefficient(lambda_p, g, lambda) * lr_coefficient(mu_p, g, mu))
        .sum()
}

pub fn loewy_length(diagram: &SocleDiagram) -> usize {
    diagram.loewy_length()
}

/// Ambient Loewy bound for the whole tensor space: `min(p,q)+1` for gl/sl,
/// `⌊d/2⌋+1` for sp/so.
pub fn loewy_bound(algebra: AlgebraKind, p: usize, q: usize) -> usize {
    if algebra.is_mixed() {
        p.min(q) + 1
    } else {
        (p + q) / 2 + 1
    }
}

/// Indecomposable summands of `V^{⊗(p,q)}` with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    algebra: AlgebraKind,
    p: usize,
    q: usize,
    summands: BTreeMap<(Partition, Partition), u64>,
}

impl Decomposition {
    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn multiplicity(&self, lambda: &Partition, mu: &Partition) -> u64 {
        self.summands
            .get(&(lambda.clone(), mu.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// Summands in canonical order (decreasing covariant, then contravariant).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition, u64)> {
        self.summands.iter().rev().map(|((l, m), &k)| (l, m, k))
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Each summand with its socle diagram.
    pub fn towers(&self) -> Vec<Tower> {
        self.iter()
            .map(|(l, m, mult)| Tower {
                mult,
                diagram: socle_layers(self.algebra, l, m).expect("summands have a valid shape"),
            })
            .collect()
    }

    pub fn structure(&self) -> TensorStructure {
        TensorStructure {
            algebra: self.algebra,
            p: self.p,
            q: self.q,
            towers: self.towers(),
        }
    }
}

/// `V^{⊗(p,q)} ≅ ⊕ (dim H_λ · dim H_μ) Γ_{λ;0}⊗Γ_{0;μ}` for gl/sl and
/// `V^{⊗d} ≅ ⊕ (dim H_λ) Γ_{λ;0}` for sp/so.
pub fn decompose_tensor(algebra: AlgebraKind, p: usize, q: usize) -> Result<Decomposition> {
    algebra.check_shape(p, q)?;
    let mut summands = BTreeMap::new();
    for l in partitions_of(p) {
        for m in partitions_of(q) {
            let mult = sym_group_irrep_dim(&l) * sym_group_irrep_dim(&m);
            summands.insert((l.clone(), m), mult);
        }
    }
    Ok(Decomposition {
        algebra,
        p,
        q,
        summands,
    })
}

/// One indecomposable summand with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tower {
    pub mult: u64,
    pub diagram: SocleDiagram,
}

/// The whole tensor space as a list of towers; the JSON form of `decompose`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorStructure {
    pub algebra: AlgebraKind,
    pub p: usize,
    pub q: usize,
    pub towers: Vec<Tower>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    cov: Partition,
    con: Partition,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    algebra: AlgebraKind,
    lambda: Partition,
    mu: Partition,
    layers: Vec<Vec<EntryJson>>,
}

impl From<SocleDiagram> for DiagramJson {
    fn from(d: SocleDiagram) -> Self {
        let layers = d
            .layers
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .map(|(label, mult)| EntryJson {
                        cov: label.covariant.clone(),
                        con: label.contravariant.clone(),
                        mult,
                    })
                    .collect()
            })
            .collect();
        DiagramJson {
            algebra: d.algebra,
            lambda: d.lambda,
            mu: d.mu,
            layers,
        }
    }
}

impl TryFrom<DiagramJson> for SocleDiagram {
    type Error = Error;

    fn try_from(j: DiagramJson) -> Result<Self> {
        let mut layers = Vec::with_capacity(j.layers.len());
        for raw in j.layers {
            let mut layer = Layer::default();
            for e in raw {
                if e.mult == 0 {
                    return Err(Error::InvalidShape("zero multiplicity in layer".into()));
                }
                layer.add(IrrepLabel::new(j.algebra, e.cov, e.con)?, e.mult);
            }
            layers.push(layer);
        }
        SocleDiagram::from_layers(j.algebra, j.lambda, j.mu, layers)
    }
}
