use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use ebsearch::ebsss::ParamError;
use ebsearch::{EbParams, Ratio};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Domain {
    Stp,
    Pancake,
    Mero,
    Random,
}

impl Domain {
    pub fn as_str(self) -> &'static str {
        match self {
            Domain::Stp => "stp",
            Domain::Pancake => "pancake",
            Domain::Mero => "mero",
            Domain::Random => "random",
        }
    }

    /// Whether tables report counts in millions.
    pub fn scaled(self) -> bool {
        matches!(self, Domain::Stp | Domain::Pancake)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Algorithm {
    Ebts,
    Ebgs,
    Astar,
    Idastar,
    Oracle,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Ebts => "ebts",
            Algorithm::Ebgs => "ebgs",
            Algorithm::Astar => "astar",
            Algorithm::Idastar => "idastar",
            Algorithm::Oracle => "oracle",
        }
    }
}

/// Bounded-search engine behind the oracle run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Engine {
    Tree,
    Graph,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("bad instance range {0:?}: expected a..b, a..=b or k=k1,k2,...")]
    BadRange(String),
    #[error("bad integer {0:?}")]
    BadInteger(String),
    #[error(transparent)]
    Params(#[from] ParamError),
}

/// Which instances of a domain to run. Spans are half-open unless written
/// `a..=b`; instance ids are 1-based for the sliding-tile and pancake sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceRange {
    Span { start: u64, end: u64 },
    List(Vec<u64>),
}

impl InstanceRange {
    pub fn ids(&self) -> Vec<u64> {
        match self {
            InstanceRange::Span { start, end } => (*start..*end).collect(),
            InstanceRange::List(v) => v.clone(),
        }
    }
}

impl FromStr for InstanceRange {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let bad = || ConfigError::BadRange(s.to_string());
        let s = s.trim();
        if let Some(list) = s.strip_prefix("k=") {
            let ks = list
                .split(',')
                .map(|k| parse_count(k.trim()).map_err(|_| bad()))
                .collect::<Result<Vec<u64>, _>>()?;
            return Ok(InstanceRange::List(ks));
        }
        if let Some((a, b)) = s.split_once("..=") {
            let start = parse_count(a).map_err(|_| bad())?;
            let last = parse_count(b).map_err(|_| bad())?;
            return Ok(InstanceRange::Span {
                start,
                end: last.checked_add(1).ok_or_else(bad)?,
            });
        }
        if let Some((a, b)) = s.split_once("..") {
            let start = parse_count(a).map_err(|_| bad())?;
            let end = parse_count(b).map_err(|_| bad())?;
            return Ok(InstanceRange::Span {
                start,
                end: end.max(start),
            });
        }
        let one = parse_count(s).map_err(|_| bad())?;
        Ok(InstanceRange::List(vec![one]))
    }
}

impl fmt::Display for InstanceRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceRange::Span { start, end } => write!(f, "{start}..{end}"),
            InstanceRange::List(ks) => {
                let parts: Vec<String> = ks.iter().map(u64::to_string).collect();
                write!(f, "k={}", parts.join(","))
            }
        }
    }
}

/// Parses a non-negative integer, also accepting `1e6` and `10^9` forms.
pub fn parse_count(s: &str) -> Result<u64, ConfigError> {
    let bad = || ConfigError::BadInteger(s.to_string());
    let s = s.trim().replace('_', "");
    let (mantissa, exp) = if let Some((m, e)) = s.split_once(['e', 'E']) {
        (m.to_string(), e.parse::<u32>().map_err(|_| bad())?)
    } else if let Some(e) = s.strip_prefix("10^") {
        ("1".to_string(), e.parse::<u32>().map_err(|_| bad())?)
    } else {
        (s.clone(), 0)
    };
    if mantissa.is_empty() || !mantissa.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let m: u64 = mantissa.parse().map_err(|_| bad())?;
    10u64
        .checked_pow(exp)
        .and_then(|p| m.checked_mul(p))
        .ok_or_else(bad)
}

/// Inverse of [`parse_count`] for labels: powers of ten from 1000 up are
/// written `1eK`.
pub fn compact_count(n: u64) -> String {
    if n >= 1000 {
        let mut k = 0;
        let mut m = n;
        while m % 10 == 0 {
            m /= 10;
            k += 1;
        }
        if m == 1 {
            return format!("1e{k}");
        }
    }
    n.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub domain: Domain,
    pub algorithm: Algorithm,
    pub c1: Ratio,
    pub c2: Ratio,
    pub delta: u64,
    pub resolution: u64,
    pub instances: InstanceRange,
    pub seed: u64,
    pub time_limit: Option<Duration>,
    pub output: Option<PathBuf>,
    pub workers: usize,
    /// A* on the real-valued costs with a 1e-6 tolerance (weighted domains).
    pub float_astar: bool,
    pub oracle_engine: Option<Engine>,
    pub pancake_size: usize,
    pub random_states: usize,
    /// Alternative sliding-tile instance file.
    pub korf_file: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(domain: Domain, algorithm: Algorithm, instances: InstanceRange) -> Self {
        ExperimentConfig {
            domain,
            algorithm,
            c1: Ratio::integer(2),
            c2: Ratio::integer(5),
            delta: 1,
            resolution: 1_000_000,
            instances,
            seed: 1,
            time_limit: None,
            output: None,
            workers: 1,
            float_astar: false,
            oracle_engine: None,
            pancake_size: 20,
            random_states: 12,
            korf_file: None,
        }
    }

    pub fn params(&self) -> Result<EbParams, ConfigError> {
        Ok(EbParams::new(self.c1, self.c2, self.delta)?)
    }

    pub fn with_params(mut self, c1: u64, c2: u64, resolution: u64, delta: u64) -> Self {
        self.c1 = Ratio::integer(c1);
        self.c2 = Ratio::integer(c2);
        self.resolution = resolution;
        self.delta = delta;
        self
    }

    pub fn engine_for_oracle(&self) -> Engine {
        self.oracle_engine.unwrap_or(match self.domain {
            Domain::Stp | Domain::Pancake => Engine::Tree,
            Domain::Mero | Domain::Random => Engine::Graph,
        })
    }

    /// Row label in the style `EBTS(2,5,1e6,1)`. Domains with integer costs
    /// leave out the resolution.
    pub fn label(&self) -> String {
        let name = match self.algorithm {
            Algorithm::Ebts => "EBTS",
            Algorithm::Ebgs => "EBGS",
            Algorithm::Astar => return "A*".into(),
            Algorithm::Idastar => return "IDA*".into(),
            Algorithm::Oracle => return "Oracle".into(),
        };
        if self.domain.scaled() {
            format!(
                "{name}({},{},{},{})",
                self.c1,
                self.c2,
                compact_count(self.resolution),
                compact_count(self.delta)
            )
        } else {
            format!("{name}({},{},{})", self.c1, self.c2, compact_count(self.delta))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("1..21".parse::<InstanceRange>().unwrap().ids().len(), 20);
        assert_eq!("1..=20".parse::<InstanceRange>().unwrap().ids().len(), 20);
        assert!("5..5".parse::<InstanceRange>().unwrap().ids().is_empty());
        assert_eq!(
            "k=100,1000".parse::<InstanceRange>().unwrap(),
            InstanceRange::List(vec![100, 1000])
        );
        assert_eq!("k=1e4".parse::<InstanceRange>().unwrap().ids(), vec![10_000]);
        assert!("k=".parse::<InstanceRange>().is_err());
        assert!("a..b".parse::<InstanceRange>().is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(parse_count("1e6").unwrap(), 1_000_000);
        assert_eq!(parse_count("10^9").unwrap(), 1_000_000_000);
        assert_eq!(parse_count("1_000").unwrap(), 1000);
        assert_eq!(parse_count("3e0").unwrap(), 3);
        assert!(parse_count("1e30").is_err());
        assert!(parse_count("-1").is_err());
        assert!(parse_count("").is_err());
        assert_eq!(compact_count(1_000_000), "1e6");
        assert_eq!(compact_count(1_000_000_000), "1e9");
        assert_eq!(compact_count(100), "100");
        assert_eq!(compact_count(3000), "3000");
    }

    #[test]
    fn labels() {
        let c = ExperimentConfig::new(Domain::Stp, Algorithm::Ebts, InstanceRange::List(vec![]));
        assert_eq!(c.clone().with_params(2, 5, 1_000_000, 1).label(), "EBTS(2,5,1e6,1)");
        assert_eq!(c.with_params(10, 20, 1_000_000_000, 1_000_000_000).label(), "EBTS(10,20,1e9,1e9)");
        let m = ExperimentConfig::new(Domain::Mero, Algorithm::Ebgs, InstanceRange::List(vec![]));
        assert_eq!(m.with_params(10, 20, 1, 3).label(), "EBGS(10,20,3)");
        let a = ExperimentConfig::new(Domain::Mero, Algorithm::Astar, InstanceRange::List(vec![]));
        assert_eq!(a.label(), "A*");
    }
}
