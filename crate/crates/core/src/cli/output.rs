use std::io::{self, Write};

use serde::{Deserialize, Serialize};

/// Version of the JSON layout written by [`write_run_file`].
pub const SCHEMA_VERSION: u32 = 1;

/// Envelope shared by every output file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunFile<C, S, R> {
    pub schema_version: u32,
    pub kind: String,
    pub seed: u64,
    pub config: C,
    pub summary: S,
    pub records: Vec<R>,
}

impl<C, S, R> RunFile<C, S, R> {
    pub fn new(kind: &str, seed: u64, config: C, summary: S, records: Vec<R>) -> Self {
        Self { schema_version: SCHEMA_VERSION, kind: kind.to_string(), seed, config, summary, records }
    }
}

/// Writes `file` as JSON with one top-level field per line and one record
/// per line. Field order is fixed, so equal values give equal bytes.
pub fn write_run_file<W, C, S, R>(mut out: W, file: &RunFile<C, S, R>) -> io::Result<()>
where
    W: Write,
    C: Serialize,
    S: Serialize,
    R: Serialize,
{
    writeln!(out, "{{")?;
    writeln!(out, "  \"schema_version\": {},", file.schema_version)?;
    writeln!(out, "  \"kind\": {},", serde_json::to_string(&file.kind)?)?;
    writeln!(out, "  \"seed\": {},", file.seed)?;
    writeln!(out, "  \"config\": {},", serde_json::to_string(&file.config)?)?;
    writeln!(out, "  \"summary\": {},", serde_json::to_string(&file.summary)?)?;
    if file.records.is_empty() {
        writeln!(out, "  \"records\": []")?;
    } else {
        writeln!(out, "  \"records\": [")?;
        let last = file.records.len() - 1;
        for (i, r) in file.records.iter().enumerate() {
            let sep = if i == last { "" } else { "," };
            writeln!(out, "    {}{sep}", serde_json::to_string(r)?)?;
        }
        writeln!(out, "  ]")?;
    }
    writeln!(out, "}}")?;
    out.flush()
}
