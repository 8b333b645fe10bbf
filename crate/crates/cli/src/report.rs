//! Output documents: a versioned envelope around one typed report per
//! command, rendered as JSON or as a plain table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use dk_core::cartesian::{FormsReport, Point, TangentComplex, WeakEquivalenceReport};
use dk_core::cdga::{AlgebraSpec, WeightedQuasiIsoReport};
use dk_core::linear::{ChainComplex, Scalar};
use dk_core::scdga::{ConnectivityReport, IndecomposablesRow, KernelIdealReport, UnitMapCertificate};
use dk_core::simplicial::{Shuffle, SimplicialVectorSpace};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub version: String,
    pub max_degree: usize,
    pub max_weight: u32,
    pub report: Report,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", content = "result", rename_all = "kebab-case")]
pub enum Report {
    Homology(Vec<HomologyRow>),
    Homotopy(Vec<HomotopyRow>),
    Normalize(ChainComplex),
    Gamma(SimplicialVectorSpace),
    EzTable(Vec<Shuffle>),
    Attach(AlgebraSpec),
    Koszul(KoszulReport),
    Tor(TorReport),
    QFunctor(QFunctorReport),
    BetaCheck(BetaReport),
    Theta(ThetaReport),
    Connectivity(ConnectivityReport),
    KernelIdealCheck(KernelIdealReport),
    ClassicalPoint(ClassicalPointReport),
    Tangent(TangentComplex),
    WeqCheck(WeqReport),
    FibrationCheck(FibrationReport),
    Forms(FormsReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRow {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
    pub dimension: usize,
    /// Cycles representing a basis, as polynomials or coordinate vectors.
    pub representatives: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyRow {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
    pub normalized: usize,
    pub moore: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulRow {
    pub weight: u32,
    pub homology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulReport {
    pub generators: usize,
    pub rows: Vec<KoszulRow>,
    /// Homology is the ground field in bidegree (0, 0) and zero elsewhere.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorReport {
    pub generators: usize,
    pub dimensions: Vec<usize>,
    pub binomial: Vec<usize>,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDims {
    pub level: usize,
    pub weight: u32,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFunctorReport {
    pub source: AlgebraSpec,
    /// Generator labels per level, `monomial@surjection`.
    pub generators: Vec<Vec<String>>,
    pub relations: Vec<usize>,
    pub dims: Vec<LevelDims>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaReport {
    pub certificate: UnitMapCertificate,
    pub indecomposables: Vec<IndecomposablesRow>,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaImage {
    pub level: usize,
    pub generator: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaReport {
    pub source: AlgebraSpec,
    pub target: AlgebraSpec,
    pub images: Vec<ThetaImage>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalPointReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical: Option<bool>,
    /// The whole rational classical locus when it could be enumerated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locus: Option<Vec<Point>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeqReport {
    pub geometric: WeakEquivalenceReport,
    /// Per-weight quasi-isomorphism test of the algebra map itself, when
    /// both sides are weight graded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebraic: Option<WeightedQuasiIsoReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationReport {
    pub point: Point,
    pub fibration: bool,
}

impl Report {
    /// `None` for reports without a yes/no answer.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Report::Koszul(r) => Some(r.exact),
            Report::Tor(r) => Some(r.verdict),
            Report::BetaCheck(r) => Some(r.verdict),
            Report::Connectivity(r) => Some(r.verdict),
            Report::KernelIdealCheck(r) => Some(r.verdict),
            Report::ClassicalPoint(r) => r.classical,
            Report::WeqCheck(r) => Some(r.geometric.verdict),
            Report::FibrationCheck(r) => Some(r.fibration),
            _ => None,
        }
    }

    pub fn table(&self) -> String {
        let mut t = Table::default();
        match self {
            Report::Homology(rows) => {
                t.header(&["degree", "weight", "dim", "representatives"]);
                for r in rows {
                    t.row(vec![r.degree.to_string(), opt(r.weight), r.dimension.to_string(), r.representatives.join("; ")]);
                }
            }
            Report::Homotopy(rows) => {
                t.header(&["degree", "weight", "normalized", "moore"]);
                for r in rows {
                    t.row(vec![r.degree.to_string(), opt(r.weight), r.normalized.to_string(), r.moore.to_string()]);
                }
            }
            Report::Normalize(c) => {
                t.header(&["degree", "dim", "boundary rank"]);
                for k in 0..=c.top() {
                    t.row(vec![k.to_string(), c.dim(k).to_string(), c.boundary(k).rank().to_string()]);
                }
            }
            Report::Gamma(v) => {
                t.header(&["level", "dim", "degenerate"]);
                for n in 0..=v.top() {
                    t.row(vec![n.to_string(), v.dim(n).to_string(), v.degenerate_dim(n).to_string()]);
                }
            }
            Report::EzTable(shuffles) => {
                t.header(&["p", "q", "first", "second", "sign"]);
                for s in shuffles {
                    t.row(vec![s.p.to_string(), s.q.to_string(), list(&s.first), list(&s.second), s.sign.to_string()]);
                }
            }
            Report::Attach(spec) => {
                t.header(&["generator", "degree", "weight", "differential"]);
                for g in &spec.generators {
                    let d = spec.differential.get(&g.name).cloned().unwrap_or_else(|| "0".into());
                    t.row(vec![g.name.clone(), g.degree.to_string(), g.weight.to_string(), d]);
                }
            }
            Report::Koszul(r) => {
                t.header(&["weight", "homology"]);
                for row in &r.rows {
                    t.row(vec![row.weight.to_string(), list(&row.homology)]);
                }
                t.footer(format!("exact: {}", r.exact));
            }
            Report::Tor(r) => {
                t.header(&["degree", "tor", "binomial"]);
                for (j, (a, b)) in r.dimensions.iter().zip(&r.binomial).enumerate() {
                    t.row(vec![j.to_string(), a.to_string(), b.to_string()]);
                }
                t.footer(format!("verdict: {}", r.verdict));
            }
            Report::QFunctor(r) => {
                t.header(&["level", "weight", "dim"]);
                for d in &r.dims {
                    t.row(vec![d.level.to_string(), d.weight.to_string(), d.dimension.to_string()]);
                }
            }
            Report::BetaCheck(r) => {
                t.header(&["degree", "weight", "source", "target", "rank"]);
                for b in &r.certificate.reports {
                    t.row(vec![
                        b.degree.to_string(),
                        b.weight.to_string(),
                        b.source_dim.to_string(),
                        b.target_dim.to_string(),
                        b.induced_rank.to_string(),
                    ]);
                }
                t.footer(format!("checked through degree {}", r.certificate.checked_through));
                t.footer(format!("verdict: {}", r.verdict));
            }
            Report::Theta(r) => {
                t.header(&["level", "generator", "image"]);
                for i in &r.images {
                    t.row(vec![i.level.to_string(), i.generator.clone(), i.image.clone()]);
                }
            }
            Report::Connectivity(r) => {
                t.header(&["degree", "weight", "dim"]);
                for h in &r.rows {
                    t.row(vec![h.degree.to_string(), h.weight.to_string(), h.dimension.to_string()]);
                }
                t.footer(format!("power {}: verdict {}", r.power, r.verdict));
            }
            Report::KernelIdealCheck(r) => {
                t.header(&["weight", "slice", "kernel", "span", "contained"]);
                for k in &r.rows {
                    t.row(vec![
                        k.weight.to_string(),
                        k.slice_dim.to_string(),
                        k.kernel_dim.to_string(),
                        k.span_rank.to_string(),
                        k.contained.to_string(),
                    ]);
                }
                t.footer(format!("verdict: {}", r.verdict));
            }
            Report::ClassicalPoint(r) => {
                t.header(&["point", "classical"]);
                if let Some(p) = &r.point {
                    t.row(vec![point(p), opt(r.classical)]);
                }
                for p in r.locus.iter().flatten() {
                    t.row(vec![point(p), "true".into()]);
                }
            }
            Report::Tangent(tc) => {
                t.header(&["degree", "generators", "cohomology"]);
                for (j, (g, h)) in tc.generators.iter().zip(&tc.cohomology).enumerate() {
                    t.row(vec![j.to_string(), g.join(" "), h.to_string()]);
                }
                t.footer(format!("at {}", point(&tc.point)));
            }
            Report::WeqCheck(r) => {
                t.header(&["source point", "target point", "source H", "target H", "quasi-iso"]);
                for c in &r.geometric.points {
                    t.row(vec![
                        point(&c.source_point),
                        point(&c.target_point),
                        list(&c.source_tangent),
                        list(&c.target_tangent),
                        c.quasi_iso.to_string(),
                    ]);
                }
                t.footer(format!("bijection: {}", r.geometric.bijection));
                if let Some(a) = &r.algebraic {
                    t.footer(format!("algebra map quasi-iso: {}", a.verdict));
                }
                t.footer(format!("verdict: {}", r.geometric.verdict));
            }
            Report::FibrationCheck(r) => {
                t.header(&["point", "fibration"]);
                t.row(vec![point(&r.point), r.fibration.to_string()]);
            }
            Report::Forms(r) => {
                t.header(&["generator", "degree", "weight"]);
                for g in &r.generators {
                    t.row(vec![g.name.clone(), g.degree.to_string(), g.weight.to_string()]);
                }
                let dims: Vec<String> = r
                    .dimensions
                    .iter()
                    .filter(|d| d.dimension > 0)
                    .map(|d| format!("({},{})={}", d.degree, d.weight, d.dimension))
                    .collect();
                t.footer(format!("free algebra dims: {}", dims.join(" ")));
            }
        }
        t.render()
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".into(), |x| x.to_string())
}

fn list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn point(p: &Point) -> String {
    let parts: Vec<String> = p.iter().map(|(k, v): (&String, &Scalar)| format!("{k}={v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

#[derive(Default)]
struct Table {
    rows: Vec<Vec<String>>,
    footer: Vec<String>,
}

impl Table {
    fn header(&mut self, cols: &[&str]) {
        self.rows.push(cols.iter().map(|c| c.to_string()).collect());
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn footer(&mut self, line: String) {
        self.footer.push(line);
    }

    fn render(&self) -> String {
        let ncols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..ncols)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in &self.rows {
            let cells: Vec<String> =
                r.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = widths[c])).collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        for f in &self.footer {
            let _ = writeln!(out, "{f}");
        }
        out
    }
}
