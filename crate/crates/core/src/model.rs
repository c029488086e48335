//! The constraint model: search variables are the positions of the
//! candidate string, each ranging over a per-position domain; the per-string
//! mismatch sums and their maximum are kept implicitly by the search state.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::metrics::{position_domains, BoundInterval};
use crate::pwm::{build_pwm, Pwm, TieBreak};
use crate::search::ColumnIndex;
use crate::strings::StringSet;
use crate::symbols::SymbolSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Minimise the largest distance.
    Optimize,
    /// Find one string within the given distance of every input.
    Decide(usize),
    /// Find every string within the given distance of every input.
    Enumerate(usize),
}

impl Mode {
    pub fn fixed_distance(self) -> Option<usize> {
        match self {
            Mode::Optimize => None,
            Mode::Decide(d) | Mode::Enumerate(d) => Some(d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Optimize => "optimize",
            Mode::Decide(_) => "decide",
            Mode::Enumerate(_) => "enumerate",
        }
    }
}

/// Variable/value ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Heuristic {
    /// Smallest current domain first, values in ascending code order.
    Sdf,
    /// Positions by descending PWM column maximum, values by descending count.
    #[default]
    Pwm,
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Heuristic::Sdf => "sdf",
            Heuristic::Pwm => "pwm",
        })
    }
}

impl FromStr for Heuristic {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "sdf" => Ok(Heuristic::Sdf),
            "pwm" => Ok(Heuristic::Pwm),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DomainMode {
    /// Each position limited to symbols that occur there in the input.
    /// Sound when one optimal string is wanted, not for enumeration.
    #[default]
    Restricted,
    /// Every position ranges over the whole alphabet.
    Unrestricted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    strings: StringSet,
    pwm: Pwm,
    domains: Vec<SymbolSet>,
    bounds: BoundInterval,
    mode: Mode,
    heuristic: Heuristic,
    tie_break: TieBreak,
    root_sac: bool,
    index: ColumnIndex,
}

pub fn build_model(
    strings: StringSet,
    mode: Mode,
    heuristic: Heuristic,
    domain_mode: DomainMode,
) -> Result<Model> {
    check_mode(mode, strings.len())?;
    let domains = match domain_mode {
        DomainMode::Restricted => position_domains(&strings),
        DomainMode::Unrestricted => alloc::vec![strings.alphabet().full_set(); strings.len()],
    };
    Ok(Model {
        pwm: build_pwm(&strings),
        index: ColumnIndex::new(&strings),
        bounds: BoundInterval::for_instance(&strings),
        strings,
        domains,
        mode,
        heuristic,
        tie_break: TieBreak::LeastIndex,
        root_sac: false,
    })
}

fn check_mode(mode: Mode, len: usize) -> Result<()> {
    match mode.fixed_distance() {
        Some(d) if d > len => Err(Error::DistanceOutOfRange { d, len }),
        _ => Ok(()),
    }
}

impl Model {
    pub fn strings(&self) -> &StringSet {
        &self.strings
    }

    pub fn pwm(&self) -> &Pwm {
        &self.pwm
    }

    pub fn domains(&self) -> &[SymbolSet] {
        &self.domains
    }

    pub fn bounds(&self) -> BoundInterval {
        self.bounds
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn heuristic(&self) -> Heuristic {
        self.heuristic
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    pub fn root_sac(&self) -> bool {
        self.root_sac
    }

    pub(crate) fn index(&self) -> &ColumnIndex {
        &self.index
    }

    /// String length `L`.
    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn with_mode(mut self, mode: Mode) -> Result<Self> {
        check_mode(mode, self.len())?;
        self.mode = mode;
        Ok(self)
    }

    pub fn with_heuristic(mut self, heuristic: Heuristic) -> Self {
        self.heuristic = heuristic;
        self
    }

    pub fn with_tie_break(mut self, tie_break: TieBreak) -> Self {
        self.tie_break = tie_break;
        self
    }

    pub fn with_root_sac(mut self, on: bool) -> Self {
        self.root_sac = on;
        self
    }

    pub fn with_bounds(mut self, bounds: BoundInterval) -> Result<Self> {
        if bounds.high() > self.len() {
            return Err(Error::InvalidBounds {
                low: bounds.low(),
                high: bounds.high(),
                len: self.len(),
            });
        }
        self.bounds = bounds;
        Ok(self)
    }

    /// Replaces the per-position domains. Each must be a non-empty subset of the alphabet.
    pub fn with_domains(mut self, domains: Vec<SymbolSet>) -> Result<Self> {
        if domains.len() != self.len() {
            return Err(Error::InvalidDomain(domains.len().min(self.len())));
        }
        let full = self.strings.alphabet().full_set();
        if let Some(j) = domains
            .iter()
            .position(|d| d.is_empty() || !d.is_subset(full))
        {
            return Err(Error::InvalidDomain(j));
        }
        self.domains = domains;
        Ok(self)
    }

    /// Number of full assignments over the current domains, saturating.
    pub fn search_space(&self) -> u128 {
        self.domains
            .iter()
            .fold(1u128, |acc, d| acc.saturating_mul(d.len() as u128))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{encode_strings, Alphabet};

    fn set(rows: &[&str]) -> StringSet {
        encode_strings(rows, &Alphabet::dna()).unwrap()
    }

    #[test]
    fn restricted_optimize_model() {
        let m = build_model(set(&["AAA", "TTT"]), Mode::Optimize, Heuristic::Pwm, DomainMode::Restricted)
            .unwrap();
        assert_eq!((m.bounds().low(), m.bounds().high()), (2, 3));
        let at = SymbolSet::from_bits(0b1001);
        assert_eq!(m.domains(), [at; 3]);
        assert_eq!(m.search_space(), 8);
    }

    #[test]
    fn single_string_bounds() {
        let m = build_model(set(&["AAA"]), Mode::Optimize, Heuristic::Sdf, DomainMode::Restricted).unwrap();
        assert!(m.bounds().is_closed());
        assert_eq!(m.bounds().high(), 0);
    }

    #[test]
    fn fixed_distance_must_fit_length() {
        let r = build_model(set(&["AAA", "TTT"]), Mode::Decide(4), Heuristic::Pwm, DomainMode::Restricted);
        assert_eq!(r, Err(Error::DistanceOutOfRange { d: 4, len: 3 }));
        let m = build_model(set(&["AAA"]), Mode::Decide(3), Heuristic::Pwm, DomainMode::Unrestricted).unwrap();
        assert_eq!(m.domains()[0], SymbolSet::full(4));
        assert!(m.clone().with_domains(alloc::vec![SymbolSet::EMPTY; 3]).is_err());
        assert!(m.with_domains(alloc::vec![SymbolSet::from_bits(1 << 5); 3]).is_err());
    }
}
