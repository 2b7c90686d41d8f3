//! `golden mint` and `golden verify`.

use std::fmt::Write as _;
use std::path::Path;

use hypergruss::oracle::golden::{default_specs, format_entries, mint, parse_entries, verify_entry, GoldenSpec};

use crate::{exit, exit_code_for, fmt17};

/// Command failure with the exit code it maps to.
#[derive(Debug, Clone, PartialEq)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CmdError {}

fn io_err(path: &Path, e: std::io::Error) -> CmdError {
    CmdError { code: exit::IO, message: format!("{}: {e}", path.display()) }
}

fn lib_err(e: hypergruss::HgError) -> CmdError {
    CmdError { code: exit_code_for(&e), message: e.to_string() }
}

/// Specs to mint: those already in `file` when it exists, else the
/// built-in set. Resolutions are multiplied by `scale`.
pub fn mint_specs(file: &Path, scale: u64) -> Result<Vec<GoldenSpec>, CmdError> {
    let specs = if file.exists() {
        let text = std::fs::read_to_string(file).map_err(|e| io_err(file, e))?;
        parse_entries(&text).map_err(lib_err)?.iter().map(GoldenSpec::from).collect()
    } else {
        default_specs()
    };
    Ok(specs
        .into_iter()
        .map(|s| GoldenSpec { resolution: s.resolution * scale.max(1), ..s })
        .collect())
}

/// Regenerate `file`. Returns the number of records written.
pub fn cmd_mint(file: &Path, scale: u64) -> Result<usize, CmdError> {
    let specs = mint_specs(file, scale)?;
    let entries = specs.iter().map(mint).collect::<Result<Vec<_>, _>>().map_err(lib_err)?;
    std::fs::write(file, format_entries(&entries)).map_err(|e| io_err(file, e))?;
    Ok(entries.len())
}

/// Recompute every record of `file`. Returns the report text and whether
/// every record matched.
pub fn cmd_verify(file: &Path) -> Result<(String, bool), CmdError> {
    let text = std::fs::read_to_string(file).map_err(|e| io_err(file, e))?;
    let entries = parse_entries(&text).map_err(lib_err)?;
    let mut out = String::new();
    let mut n_ok = 0;
    for e in &entries {
        let v = verify_entry(e).map_err(lib_err)?;
        n_ok += usize::from(v.ok());
        let _ = writeln!(
            out,
            "{:<4} {:<13} z={} stored={} oracle={} production={}±{} bound={}",
            if v.ok() { "ok" } else { "FAIL" },
            e.kind.token(),
            e.z,
            fmt17(e.value),
            fmt17(v.recomputed),
            fmt17(v.production.0),
            fmt17(v.production.1),
            fmt17(e.bound),
        );
    }
    let _ = writeln!(out, "{n_ok} of {} records verified", entries.len());
    Ok((out, n_ok == entries.len()))
}
