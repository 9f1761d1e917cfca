//! Output documents and their json/csv/md renderings.
//!
//! Every subcommand produces one typed document. JSON emission goes through
//! serde with the struct field order defining the key order; csv and md are
//! rendered from the same tabular view (header row, LF line endings, no
//! quoting — all cells are integers or bare words).

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy)]
pub enum Align {
    Right,
    Left,
}

/// Tabular view shared by the csv and md renderers.
pub struct Tabular {
    pub headers: Vec<&'static str>,
    pub align: Vec<Align>,
    pub rows: Vec<Vec<String>>,
}

impl Tabular {
    fn csv(&self) -> String {
        let mut out = self.headers.join(",");
        for row in &self.rows {
            out.push('\n');
            out.push_str(&row.join(","));
        }
        out
    }

    fn md(&self) -> String {
        let mut out = format!("| {} |", self.headers.join(" | "));
        out.push('\n');
        let marks: Vec<&str> = self
            .align
            .iter()
            .map(|a| match a {
                Align::Right => "---:",
                Align::Left => ":---",
            })
            .collect();
        out.push_str(&format!("| {} |", marks.join(" | ")));
        for row in &self.rows {
            out.push('\n');
            out.push_str(&format!("| {} |", row.join(" | ")));
        }
        out
    }
}

pub trait Document: Serialize {
    fn tabular(&self) -> Tabular;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("document serializes"),
            Format::Csv => self.tabular().csv(),
            Format::Md => self.tabular().md(),
        }
    }
}

fn scalar_row(fields: Vec<(&'static str, String, Align)>) -> Tabular {
    let mut headers = Vec::with_capacity(fields.len());
    let mut align = Vec::with_capacity(fields.len());
    let mut row = Vec::with_capacity(fields.len());
    for (name, value, a) in fields {
        headers.push(name);
        align.push(a);
        row.push(value);
    }
    Tabular {
        headers,
        align,
        rows: vec![row],
    }
}

fn join_ints<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
pub struct IotaDoc {
    pub n: u64,
    pub iota: u32,
}

impl Document for IotaDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("n", self.n.to_string(), Align::Right),
            ("iota", self.iota.to_string(), Align::Right),
        ])
    }
}

#[derive(Serialize)]
pub struct TauDoc {
    pub n: u64,
    pub tau: u32,
}

impl Document for TauDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("n", self.n.to_string(), Align::Right),
            ("tau", self.tau.to_string(), Align::Right),
        ])
    }
}

#[derive(Serialize)]
pub struct IotaKDoc {
    pub k: u32,
    pub n: u64,
    pub iota_k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
}

impl Document for IotaKDoc {
    fn tabular(&self) -> Tabular {
        let mut fields = vec![
            ("k", self.k.to_string(), Align::Right),
            ("n", self.n.to_string(), Align::Right),
            ("iota_k", self.iota_k.to_string(), Align::Right),
        ];
        if let Some(witness) = &self.witness {
            fields.push(("witness", join_ints(witness), Align::Left));
        }
        scalar_row(fields)
    }
}

#[derive(Serialize)]
pub struct FrobeniusDoc {
    pub a: u64,
    pub k: u32,
    pub g: u64,
    pub method: &'static str,
}

impl Document for FrobeniusDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("a", self.a.to_string(), Align::Right),
            ("k", self.k.to_string(), Align::Right),
            ("g", self.g.to_string(), Align::Right),
            ("method", self.method.to_string(), Align::Left),
        ])
    }
}

#[derive(Serialize)]
pub struct InfiniteDoc {
    pub a: u64,
    pub g: u64,
    pub r: u64,
    pub case: &'static str,
}

impl Document for InfiniteDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("a", self.a.to_string(), Align::Right),
            ("g", self.g.to_string(), Align::Right),
            ("r", self.r.to_string(), Align::Right),
            ("case", self.case.to_string(), Align::Left),
        ])
    }
}

#[derive(Serialize)]
pub struct CoefficientsDoc {
    pub k: u32,
    pub u: u64,
    pub u_hat: u64,
    pub t: Vec<u64>,
    pub r: Vec<u64>,
}

impl Document for CoefficientsDoc {
    fn tabular(&self) -> Tabular {
        Tabular {
            headers: vec!["j", "t", "r"],
            align: vec![Align::Right, Align::Right, Align::Right],
            rows: (0..self.t.len())
                .map(|j| {
                    vec![
                        j.to_string(),
                        self.t[j].to_string(),
                        self.r[j].to_string(),
                    ]
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct LowerBoundDoc {
    pub k: u32,
    pub u_hat: u64,
}

impl Document for LowerBoundDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("k", self.k.to_string(), Align::Right),
            ("u_hat", self.u_hat.to_string(), Align::Right),
        ])
    }
}

#[derive(Serialize)]
pub struct StabilityDoc {
    pub k: u32,
    pub stable_from: u64,
    pub proven_bound: u64,
}

impl Document for StabilityDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("k", self.k.to_string(), Align::Right),
            ("stable_from", self.stable_from.to_string(), Align::Right),
            ("proven_bound", self.proven_bound.to_string(), Align::Right),
        ])
    }
}

#[derive(Serialize)]
pub struct TableRow {
    pub a: u64,
    pub r: u64,
    pub g: u64,
    pub case: &'static str,
}

#[derive(Serialize)]
pub struct TableDoc {
    pub max_a: u64,
    pub rows: Vec<TableRow>,
}

impl Document for TableDoc {
    fn tabular(&self) -> Tabular {
        Tabular {
            headers: vec!["a", "r", "g", "case"],
            align: vec![Align::Right, Align::Right, Align::Right, Align::Left],
            rows: self
                .rows
                .iter()
                .map(|row| {
                    vec![
                        row.a.to_string(),
                        row.r.to_string(),
                        row.g.to_string(),
                        row.case.to_string(),
                    ]
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ConjectureDoc {
    pub max_a: u64,
    pub counterexamples: Vec<u64>,
}

impl Document for ConjectureDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("max_a", self.max_a.to_string(), Align::Right),
            (
                "counterexamples",
                join_ints(&self.counterexamples),
                Align::Left,
            ),
        ])
    }
}

#[derive(Serialize)]
pub struct PrimesRangeDoc {
    pub verified: bool,
    pub a_low: u64,
    pub a_high: u64,
}

impl Document for PrimesRangeDoc {
    fn tabular(&self) -> Tabular {
        scalar_row(vec![
            ("verified", self.verified.to_string(), Align::Left),
            ("a_low", self.a_low.to_string(), Align::Right),
            ("a_high", self.a_high.to_string(), Align::Right),
        ])
    }
}
