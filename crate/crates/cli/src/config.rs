use std::path::{Path, PathBuf};

use clap::Args;
use morphoforge::amp::AmpConfig;

use crate::error::{CliError, Result};
use crate::io::read_text;

pub const CONFIG_ENV: &str = "MORPHOFORGE_CONFIG";

#[derive(Debug, Clone, Default, Args)]
pub struct ConfigArgs {
    /// key=value configuration file (overrides $MORPHOFORGE_CONFIG)
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Override one configuration key; repeatable
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub sets: Vec<String>,
}

impl ConfigArgs {
    /// Defaults, then the config file, then `--set` overrides.
    pub fn resolve(&self) -> Result<AmpConfig> {
        let file = self
            .config
            .clone()
            .or_else(|| std::env::var_os(CONFIG_ENV).filter(|v| !v.is_empty()).map(PathBuf::from));
        let mut cfg = match &file {
            Some(path) => load(path)?,
            None => AmpConfig::default(),
        };
        for s in &self.sets {
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--set expects KEY=VALUE, got {s:?}")))?;
            cfg.set(k.trim(), v.trim())
                .map_err(|e| CliError::Usage(format!("--set {s}: {e}")))?;
        }
        cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }
}

fn load(path: &Path) -> Result<AmpConfig> {
    AmpConfig::parse(&read_text(path)?).map_err(|e| CliError::at(path, e))
}
