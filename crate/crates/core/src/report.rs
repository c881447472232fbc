//! Serializable analysis records, the flat CSV form, and Hasse diagram
//! rendering.

use std::fmt::Write as _;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::cascade::Cascade;
use crate::classify::{CpWitness, Freeness};
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBlock {
    pub stab_dim: usize,
    pub index_estimate: usize,
    pub saturation_dim: usize,
    pub agrees: bool,
}

/// `ε`-notation for the classical types; display only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonBlock {
    pub cascade: Vec<String>,
    pub stab_roots: Vec<String>,
}

/// Everything computed for one nilradical. `T` is the key; root sets are
/// integer vectors in simple-root order, labels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub t: Vec<usize>,
    pub dim: usize,
    pub depth: usize,
    pub dim_centre: usize,
    pub cascade: Vec<Root>,
    pub tilde_t: Vec<usize>,
    pub optimal: bool,
    pub index: usize,
    pub b: usize,
    pub stab_roots: Vec<Root>,
    pub generic: bool,
    pub witness: Option<(Root, Root)>,
    pub frobenius_roots: Vec<Root>,
    pub frobenius_dim: usize,
    pub quasi_quadratic: bool,
    pub square_integrable: bool,
    pub has_cp: bool,
    pub cp_witness: Option<CpWitness>,
    pub freeness: Freeness,
    pub trdeg_su: usize,
    pub trdeg_sn: usize,
    pub finitely_generated: bool,
    pub rational_singularities: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<EpsilonBlock>,
}

/// One CSV line. Root sets are `;`-joined digit strings such as
/// `111111;011110`; label lists are `;`-joined integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub t: String,
    pub dim: usize,
    pub depth: usize,
    pub dim_centre: usize,
    pub cascade: String,
    pub tilde_t: String,
    pub optimal: bool,
    pub index: usize,
    pub b: usize,
    pub stab_roots: String,
    pub generic: bool,
    pub witness: String,
    pub frobenius_roots: String,
    pub frobenius_dim: usize,
    pub quasi_quadratic: bool,
    pub square_integrable: bool,
    pub has_cp: bool,
    pub cp_witness: String,
    pub freeness: String,
    pub trdeg_su: usize,
    pub trdeg_sn: usize,
    pub finitely_generated: bool,
    pub rational_singularities: bool,
    pub oracle_stab_dim: Option<usize>,
    pub oracle_index_estimate: Option<usize>,
    pub oracle_saturation_dim: Option<usize>,
    pub oracle_agrees: Option<bool>,
}

fn join_roots(roots: &[Root]) -> String {
    roots.iter().map(Root::digits).collect::<Vec<_>>().join(";")
}

fn split_roots(s: &str) -> Result<Vec<Root>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(Root::from_digits).collect()
}

fn join_labels(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(";")
}

fn split_labels(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad label list {s:?}"))))
        .collect()
}

impl From<&AnalysisRecord> for CsvRow {
    fn from(r: &AnalysisRecord) -> CsvRow {
        CsvRow {
            lie_type: r.lie_type.clone(),
            rank: r.rank,
            t: join_labels(&r.t),
            dim: r.dim,
            depth: r.depth,
            dim_centre: r.dim_centre,
            cascade: join_roots(&r.cascade),
            tilde_t: join_labels(&r.tilde_t),
            optimal: r.optimal,
            index: r.index,
            b: r.b,
            stab_roots: join_roots(&r.stab_roots),
            generic: r.generic,
            witness: r
                .witness
                .as_ref()
                .map(|(d, e)| format!("{};{}", d.digits(), e.digits()))
                .unwrap_or_default(),
            frobenius_roots: join_roots(&r.frobenius_roots),
            frobenius_dim: r.frobenius_dim,
            quasi_quadratic: r.quasi_quadratic,
            square_integrable: r.square_integrable,
            has_cp: r.has_cp,
            cp_witness: match r.cp_witness {
                None => String::new(),
                Some(CpWitness::Heisenberg) => "heisenberg".into(),
                Some(CpWitness::Abelian(a)) => format!("abelian:{a}"),
            },
            freeness: r.freeness.to_string(),
            trdeg_su: r.trdeg_su,
            trdeg_sn: r.trdeg_sn,
            finitely_generated: r.finitely_generated,
            rational_singularities: r.rational_singularities,
            oracle_stab_dim: r.oracle.as_ref().map(|o| o.stab_dim),
            oracle_index_estimate: r.oracle.as_ref().map(|o| o.index_estimate),
            oracle_saturation_dim: r.oracle.as_ref().map(|o| o.saturation_dim),
            oracle_agrees: r.oracle.as_ref().map(|o| o.agrees),
        }
    }
}

impl TryFrom<CsvRow> for AnalysisRecord {
    type Error = Error;

    /// The `ε` block is display-only and is not carried by CSV.
    fn try_from(r: CsvRow) -> Result<AnalysisRecord> {
        let witness = match split_roots(&r.witness)?.as_slice() {
            [] => None,
            [d, e] => Some((d.clone(), e.clone())),
            _ => return Err(Error::Parse(format!("bad witness {:?}", r.witness))),
        };
        let cp_witness = match r.cp_witness.as_str() {
            "" => None,
            "heisenberg" => Some(CpWitness::Heisenberg),
            s => Some(CpWitness::Abelian(
                s.strip_prefix("abelian:")
                    .and_then(|a| a.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad cp witness {s:?}")))?,
            )),
        };
        let oracle = match (r.oracle_stab_dim, r.oracle_index_estimate, r.oracle_saturation_dim, r.oracle_agrees) {
            (Some(stab_dim), Some(index_estimate), Some(saturation_dim), Some(agrees)) => Some(OracleBlock {
                stab_dim,
                index_estimate,
                saturation_dim,
                agrees,
            }),
            (None, None, None, None) => None,
            _ => return Err(Error::Parse("partial oracle columns".into())),
        };
        Ok(AnalysisRecord {
            lie_type: r.lie_type,
            rank: r.rank,
            t: split_labels(&r.t)?,
            dim: r.dim,
            depth: r.depth,
            dim_centre: r.dim_centre,
            cascade: split_roots(&r.cascade)?,
            tilde_t: split_labels(&r.tilde_t)?,
            optimal: r.optimal,
            index: r.index,
            b: r.b,
            stab_roots: split_roots(&r.stab_roots)?,
            generic: r.generic,
            witness,
            frobenius_roots: split_roots(&r.frobenius_roots)?,
            frobenius_dim: r.frobenius_dim,
            quasi_quadratic: r.quasi_quadratic,
            square_integrable: r.square_integrable,
            has_cp: r.has_cp,
            cp_witness,
            freeness: r.freeness.parse()?,
            trdeg_su: r.trdeg_su,
            trdeg_sn: r.trdeg_sn,
            finitely_generated: r.finitely_generated,
            rational_singularities: r.rational_singularities,
            oracle,
            epsilon: None,
        })
    }
}

pub fn write_json<W: Write>(records: &[AnalysisRecord], out: W) -> Result<()> {
    let mut out = out;
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)?;
    Ok(())
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<AnalysisRecord>> {
    Ok(serde_json::from_reader(input)?)
}

pub fn write_csv<W: Write>(records: &[AnalysisRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<AnalysisRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    rd.deserialize::<CsvRow>()
        .map(|row| AnalysisRecord::try_from(row?))
        .collect()
}

fn phi_label(phi: &crate::rootsys::SimpleSet) -> String {
    let inner: Vec<String> = phi.iter().map(|a| format!("α{}", a + 1)).collect();
    format!("{{{}}}", inner.join(","))
}

/// Graphviz rendering of the cascade poset, `θ` at the top.
pub fn hasse_dot(rs: &RootSystem, cascade: &Cascade) -> String {
    let mut s = format!("digraph cascade_{} {{\n  rankdir=TB;\n", rs.stype());
    for (i, el) in cascade.elements().iter().enumerate() {
        let _ = writeln!(
            s,
            "  b{0} [label=\"β_{0}\", phi=\"{1}\", root=\"{2}\"];",
            i + 1,
            phi_label(&el.phi),
            rs.root(el.root).digits()
        );
    }
    for (p, c) in cascade.hasse_edges() {
        let _ = writeln!(s, "  b{} -> b{};", p + 1, c + 1);
    }
    s.push_str("}\n");
    s
}

/// Indented tree, children below their parent.
pub fn hasse_ascii(rs: &RootSystem, cascade: &Cascade) -> String {
    fn walk(rs: &RootSystem, c: &Cascade, i: usize, depth: usize, out: &mut String) {
        let el = c.get(i);
        let _ = writeln!(
            out,
            "{}β_{} {} Φ={}",
            "  ".repeat(depth),
            i + 1,
            rs.root(el.root),
            phi_label(&el.phi)
        );
        for ch in c.children(i) {
            walk(rs, c, ch, depth + 1, out);
        }
    }
    let mut out = String::new();
    for (i, el) in cascade.elements().iter().enumerate() {
        if el.parent.is_none() {
            walk(rs, cascade, i, 0, &mut out);
        }
    }
    out
}
