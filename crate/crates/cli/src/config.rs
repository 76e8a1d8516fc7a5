//! `key=value` config files, turned into extra command-line arguments.
//!
//! A key maps to `--key` (or `-k` for one-letter keys); the value `true`
//! yields a bare flag and `false` drops the line. Blank lines and lines
//! starting with `#` are ignored. The arguments are appended after those
//! given on the command line, so the file wins.

use anyhow::{bail, Result};

pub fn config_args(text: &str) -> Result<Vec<String>> {
    let mut args = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected key=value, got {line:?}", i + 1);
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || key.starts_with('-') || key == "config" {
            bail!("config line {}: invalid key {key:?}", i + 1);
        }
        let flag = if key.chars().count() == 1 { format!("-{key}") } else { format!("--{key}") };
        match value {
            "false" => {}
            "true" => args.push(flag),
            v => {
                args.push(flag);
                args.push(v.to_string());
            }
        }
    }
    Ok(args)
}
