//! Row computation and rendering for the CLI reports.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use orbitdim::corpus::{ladder_label, ExpectedDims, ExpectedKetDims, NamedState};
use orbitdim::lie::{tangent_matrix, GroupKind};
use orbitdim::orbit::{orbit_report, principal_u2_dim, state_matrix, witness_w1};
use orbitdim::rank::{exact_rank, float_rank_default};
use orbitdim::statefile::{state_to_file, StateFile};
use orbitdim::{PureKet, RankError, RationalMatrix};

use crate::CliError;

/// Sampling settings recorded with every report.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Meta {
    pub seed: u64,
    pub trials: u32,
    pub ilo_range: u32,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct GroupDims {
    pub ket: usize,
    pub state: usize,
}

/// Everything the reports print about one state. The integers are exactly
/// the values the orbit computations return.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub label: String,
    pub n: u32,
    pub representative: String,
    pub state: StateFile,
    pub gl: GroupDims,
    pub sl: GroupDims,
    pub u2: GroupDims,
    pub su2: GroupDims,
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    pub w1: usize,
    pub ladder: Option<&'static str>,
    pub trial_values: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    pub expected: Option<ExpectedTriple>,
    pub expected_ket: Option<ExpectedKetPair>,
    /// None when there is nothing to compare against.
    pub pass: Option<bool>,
    pub prediction: bool,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExpectedTriple {
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExpectedKetPair {
    pub gl: usize,
    pub sl: usize,
}

impl From<ExpectedDims> for ExpectedTriple {
    fn from(e: ExpectedDims) -> Self {
        Self {
            d1: e.d1,
            d2: e.d2,
            d3: e.d3,
        }
    }
}

impl From<ExpectedKetDims> for ExpectedKetPair {
    fn from(e: ExpectedKetDims) -> Self {
        Self { gl: e.gl, sl: e.sl }
    }
}

fn check_matrix(label: &str, m: &RationalMatrix, float_check: bool) -> Result<usize, CliError> {
    let exact = exact_rank(m).rank;
    if float_check {
        match float_rank_default(m) {
            Ok(float) if float.rank == exact => {}
            Ok(float) => {
                return Err(CliError::FloatMismatch(format!(
                    "{label}: exact rank {exact} but float rank {}",
                    float.rank
                )))
            }
            Err(RankError::AmbiguousRank { gap_ratio, .. }) => {
                eprintln!(
                    "warning: {label}: float path cannot certify (gap {gap_ratio:.3e}); exact rank {exact} stands"
                );
            }
            Err(err) => return Err(CliError::FloatMismatch(format!("{label}: {err}"))),
        }
    }
    Ok(exact)
}

fn group_dims(ket: &PureKet, group: GroupKind, float_check: bool) -> Result<GroupDims, CliError> {
    if !float_check {
        let report = orbit_report(ket, group);
        return Ok(GroupDims {
            ket: report.ket_dim,
            state: report.state_dim,
        });
    }
    let tangent = tangent_matrix(ket, group);
    let ket_dim = check_matrix(&format!("{group} tangent"), tangent.matrix(), true)?;
    let state = state_matrix(ket, group);
    let state_dim = check_matrix(&format!("{group} state matrix"), &state, true)? - 2;
    Ok(GroupDims {
        ket: ket_dim,
        state: state_dim,
    })
}

/// Computes one report row. The master seed alone determines the sampling,
/// so identical invocations print identical rows.
pub fn build_row(state: &NamedState, meta: Meta, float_check: bool) -> Result<ReportRow, CliError> {
    let ket = &state.ket;
    let gl = group_dims(ket, GroupKind::GL, float_check)?;
    let sl = group_dims(ket, GroupKind::SL, float_check)?;
    let u2 = group_dims(ket, GroupKind::U2, float_check)?;
    let su2 = group_dims(ket, GroupKind::SU2, float_check)?;

    let d1 = gl.state;
    let mut rng = ChaCha8Rng::seed_from_u64(meta.seed);
    let principal = principal_u2_dim(ket, meta.trials, &mut rng, meta.ilo_range)
        .map_err(|e| CliError::Failure(e.to_string()))?;
    if float_check {
        for (index, trial) in principal.trials.iter().enumerate() {
            let m = state_matrix(&trial.ket, GroupKind::U2);
            check_matrix(&format!("U2 state matrix, trial {index}"), &m, true)?;
        }
    }
    let d2 = principal.d2;
    let d3 = d1
        .checked_sub(d2)
        .expect("principal orbit dimension cannot exceed the class dimension");
    let w1 = witness_w1(ket);

    let expected: Option<ExpectedTriple> = state.expected.map(Into::into);
    let expected_ket: Option<ExpectedKetPair> = state.expected_ket.map(Into::into);
    let pass = match (expected, expected_ket) {
        (None, None) => None,
        _ => {
            let dims_ok = expected.is_none_or(|e| (e.d1, e.d2, e.d3) == (d1, d2, d3));
            let ket_ok = expected_ket.is_none_or(|e| (e.gl, e.sl) == (gl.ket, sl.ket));
            Some(dims_ok && ket_ok)
        }
    };

    Ok(ReportRow {
        label: state.name.clone(),
        n: ket.n(),
        representative: ket.to_string(),
        state: state_to_file(ket),
        gl,
        sl,
        u2,
        su2,
        d1,
        d2,
        d3,
        w1,
        ladder: ladder_label(ket.n(), d2),
        trial_values: principal.trial_values(),
        warning: principal.warning,
        expected,
        expected_ket,
        pass,
        prediction: expected.is_none(),
    })
}

fn pad(s: &str, width: usize, right_align: bool) -> String {
    let fill = width.saturating_sub(s.chars().count());
    if right_align {
        format!("{}{}", " ".repeat(fill), s)
    } else {
        format!("{}{}", s, " ".repeat(fill))
    }
}

const TABLE_HEADER: [&str; 12] = [
    "Class", "Representative", "GL", "SL", "U2", "SU2", "D1", "D2", "D3", "W1", "Expected",
    "Status",
];

fn table_cells(row: &ReportRow) -> Vec<String> {
    let expected = match row.expected {
        Some(e) => format!("{}/{}/{}", e.d1, e.d2, e.d3),
        None => "-".to_owned(),
    };
    let status = match row.pass {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "pred",
    };
    vec![
        row.label.clone(),
        row.representative.clone(),
        row.gl.ket.to_string(),
        row.sl.ket.to_string(),
        row.u2.ket.to_string(),
        row.su2.ket.to_string(),
        row.d1.to_string(),
        row.d2.to_string(),
        row.d3.to_string(),
        row.w1.to_string(),
        expected,
        status.to_owned(),
    ]
}

/// Aligned text table; the first two columns are left-aligned, the rest
/// right-aligned.
pub fn render_table_text(rows: &[ReportRow], meta: Meta) -> String {
    let mut cells: Vec<Vec<String>> = vec![TABLE_HEADER.iter().map(|s| s.to_string()).collect()];
    cells.extend(rows.iter().map(table_cells));
    let widths: Vec<usize> = (0..TABLE_HEADER.len())
        .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = format!(
        "# ket-dim columns GL/SL/U2/SU2; seed={} trials={} ilo-range={}\n",
        meta.seed, meta.trials, meta.ilo_range
    );
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| pad(cell, widths[c], c >= 2))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_table_tsv(rows: &[ReportRow]) -> String {
    let mut out = TABLE_HEADER.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&table_cells(row).join("\t"));
        out.push('\n');
    }
    out
}

pub fn render_json(rows: &[ReportRow], meta: Meta) -> String {
    #[derive(Serialize)]
    struct Document<'a> {
        meta: Meta,
        rows: &'a [ReportRow],
    }
    let mut text = serde_json::to_string_pretty(&Document { meta, rows })
        .expect("report rows serialize infallibly");
    text.push('\n');
    text
}

/// The long-form single-state report used by `dims`.
pub fn render_dims_text(row: &ReportRow, meta: Meta, groups: &[GroupKind]) -> String {
    let mut out = String::new();
    out.push_str(&format!("name:           {}\n", row.label));
    out.push_str(&format!("representative: {}\n", row.representative));
    out.push_str(&format!("n:              {}\n", row.n));
    out.push_str(&format!(
        "sampling:       seed={} trials={} ilo-range={}\n\n",
        meta.seed, meta.trials, meta.ilo_range
    ));
    out.push_str("group  ket-dim  state-dim\n");
    for group in groups {
        let dims = match group {
            GroupKind::GL => row.gl,
            GroupKind::SL => row.sl,
            GroupKind::U2 => row.u2,
            GroupKind::SU2 => row.su2,
        };
        out.push_str(&format!(
            "{}  {}  {}\n",
            pad(group.label(), 5, false),
            pad(&dims.ket.to_string(), 7, true),
            pad(&dims.state.to_string(), 9, true),
        ));
    }
    out.push_str(&format!(
        "\nD1={}  D2={}  D3={}  W1={}\n",
        row.d1, row.d2, row.d3, row.w1
    ));
    out.push_str(&format!("trials: {:?}\n", row.trial_values));
    if let Some(label) = row.ladder {
        out.push_str(&format!("ladder: {label}\n"));
    }
    match (row.expected, row.pass) {
        (Some(e), Some(pass)) => {
            out.push_str(&format!(
                "expected: D1={} D2={} D3={} -> {}\n",
                e.d1,
                e.d2,
                e.d3,
                if pass { "PASS" } else { "FAIL" }
            ));
        }
        _ => out.push_str("expected: none (prediction)\n"),
    }
    out
}
