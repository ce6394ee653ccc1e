//! `key = value` search configuration files.
//!
//! Recognised keys: `max_n`, `max_m`, `general_type_filter`,
//! `simply_connected_filter`, `certify`, `threads`. Blank lines and lines
//! starting with `#` are ignored. Command line flags override file values.

use std::path::Path;

use crate::Error;

/// Values read from a config file; `None` where the file is silent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub max_n: Option<i64>,
    pub max_m: Option<i64>,
    pub general_type_filter: Option<bool>,
    pub simply_connected_filter: Option<bool>,
    pub certify: Option<bool>,
    pub threads: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, Error> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut cfg = ConfigFile::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Config {
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let int = || value.parse::<i64>().map_err(|e| err(format!("{key}: {e}")));
            let flag = || match value {
                "true" | "yes" | "1" => Ok(true),
                "false" | "no" | "0" => Ok(false),
                _ => Err(err(format!("{key}: expected true or false, got {value:?}"))),
            };
            match key {
                "max_n" => cfg.max_n = Some(int()?),
                "max_m" => cfg.max_m = Some(int()?),
                "general_type_filter" => cfg.general_type_filter = Some(flag()?),
                "simply_connected_filter" => cfg.simply_connected_filter = Some(flag()?),
                "certify" => cfg.certify = Some(flag()?),
                "threads" => {
                    cfg.threads = Some(value.parse().map_err(|e| err(format!("threads: {e}")))?)
                }
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = ConfigFile::parse(
            "# bounds\nmax_n = 30\n\nmax_m=8\ncertify = false\nthreads = 3\ngeneral_type_filter=yes\n",
        )
        .unwrap();
        assert_eq!(cfg.max_n, Some(30));
        assert_eq!(cfg.max_m, Some(8));
        assert_eq!(cfg.certify, Some(false));
        assert_eq!(cfg.threads, Some(3));
        assert_eq!(cfg.general_type_filter, Some(true));
        assert_eq!(cfg.simply_connected_filter, None);
    }

    #[test]
    fn reports_line_numbers() {
        let err = ConfigFile::parse("max_n = 3\nmax_m = x\n").unwrap_err();
        assert!(matches!(err, Error::Config { line: 2, .. }));
        assert!(matches!(
            ConfigFile::parse("bogus = 1").unwrap_err(),
            Error::Config { line: 1, .. }
        ));
        assert!(matches!(
            ConfigFile::parse("max_n 3").unwrap_err(),
            Error::Config { line: 1, .. }
        ));
    }
}
