//! A self-contained verification run: every closed form is replayed against
//! constructions and exhaustive search, one named check per claim.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bounds::{self, ExactValue, Row, Table1Cell};
use crate::constructions;
use crate::engine::{count_transversals, enumerate_maximal, Mode};
use crate::hypercore::{Hypergraph, Profile};
use crate::search::{self, SearchSpace};

/// Serde helper storing a [`Duration`] as whole milliseconds.
pub mod duration_ms {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Formula identities, constructions up to n = 12, exhaustive graphs up to n = 5.
    Quick,
    /// Adds exhaustive 3-uniform and graph search at n = 6 and parity sweeps.
    Full,
}

impl FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(format!("unknown level {s:?} (expected quick|full)")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

/// Deliberate corruption of a reference formula, for testing the harness itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// The MSIS bound is reported one too small.
    CorruptG,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    #[serde(rename = "elapsed_ms", with = "duration_ms")]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub level: Level,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Zeroes every timing so reports compare byte for byte.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.elapsed = Duration::ZERO;
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub level: Level,
    pub workers: usize,
    pub fault: Fault,
}

impl VerifyOptions {
    pub fn new(level: Level) -> Self {
        VerifyOptions { level, workers: 1, fault: Fault::None }
    }
}

struct Harness {
    options: VerifyOptions,
    checks: Vec<Check>,
}

impl Harness {
    fn run(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<(String, String, bool), String>) {
        let start = Instant::now();
        let (expected, observed, pass) = body().unwrap_or_else(|e| ("no error".into(), format!("error: {e}"), false));
        self.checks.push(Check { name: name.into(), expected, observed, pass, elapsed: start.elapsed() });
    }

    fn equal(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<(String, String), String>) {
        self.run(name, || body().map(|(e, o)| (e.clone(), o.clone(), e == o)));
    }

    /// The MSIS bound as the harness believes it.
    fn g(&self, n: usize) -> ExactValue {
        let g = bounds::g_thm1(n);
        match self.options.fault {
            Fault::None => g,
            Fault::CorruptG => g + ExactValue::integer(-1),
        }
    }

}

fn search_max(space: SearchSpace, a: Profile, mode: Mode, workers: usize) -> Result<search::SearchReport, String> {
    search::max_transversal_count(space, a, mode, workers).map_err(err)
}

fn p(v: &[usize]) -> Profile {
    Profile::new(v.iter().copied()).expect("non-empty literal profile")
}

fn graph_profiles() -> impl Iterator<Item = Profile> {
    (1u64..8).map(|m| Profile::from_mask(m).expect("non-empty"))
}

fn floor_u128(v: &ExactValue) -> u128 {
    v.floor().try_into().unwrap_or(0)
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

pub fn run_verification(options: VerifyOptions) -> VerificationReport {
    let mut h = Harness { options, checks: Vec::new() };
    let strong = Profile::strong();
    let full = options.level == Level::Full;
    let workers = options.workers;

    for n in 6..=12 {
        let g = h.g(n);
        h.equal(format!("g3_msis_construction_n{n}"), || {
            let host = constructions::thm1_extremal(n).map_err(err)?;
            Ok((g.to_string(), enumerate_maximal(&host, strong).len().to_string()))
        });
    }

    let g: Vec<ExactValue> = (0..=60).map(|n| h.g(n)).collect();
    h.run("g3_recurrence_n3_60", || {
        let bad = (3..=60).find(|&n| g[n] != ExactValue::integer(3) * g[n - 3].clone());
        Ok(("g(n) = 3 g(n-3)".into(), bad.map_or("holds".into(), |n| format!("fails at n={n}")), bad.is_none()))
    });
    h.run("g3_dominance_n3_60", || {
        let bad = (3..=60usize)
            .flat_map(|n| (3..=n).map(move |d| (n, d)))
            .find(|&(n, d)| (d as u64) * &g[n - d] > g[n]);
        Ok(("d g(n-d) <= g(n)".into(), bad.map_or("holds".into(), |(n, d)| format!("fails at n={n} d={d}")), bad.is_none()))
    });

    let msis_ns: &[usize] = if full { &[3, 4, 5, 6] } else { &[3, 4, 5] };
    for &n in msis_ns {
        let bound = floor_u128(&h.g(n));
        let witness_class = match n {
            4 => Some(("complete K4", constructions::complete_hypergraph(4, 3))),
            6 => Some(("two disjoint triples", constructions::matching(6, 3))),
            _ => None,
        };
        let report = search_max(SearchSpace::all(n, 3), strong, Mode::Maximal, workers);
        h.run(format!("g3_msis_n{n}"), || {
            let report = report.clone()?;
            // n = 5 is only bounded; elsewhere the bound is attained.
            let pass = if n == 5 { report.maximum <= bound } else { report.maximum == bound };
            let expected = if n == 5 { format!("<= {bound}") } else { bound.to_string() };
            Ok((expected, report.maximum.to_string(), pass))
        });
        if let Some((label, class)) = witness_class {
            h.run(format!("g3_msis_n{n}_extremal_class"), || {
                let report = report?;
                let class = class.map_err(err)?;
                let iso = search::is_isomorphic(&report.witness, &class).map_err(err)?;
                let count = enumerate_maximal(&class, strong).len() as u128;
                // Several classes tie at n = 4; the bound is attained by the named one.
                let pass = count == report.maximum && (n == 4 || iso);
                Ok((
                    format!("{label} attains {}", report.maximum),
                    format!("{label} count {count}, witness isomorphic: {iso}"),
                    pass,
                ))
            });
        }
    }

    let graph_ns = if full { 2..=6 } else { 2..=5 };
    for n in graph_ns.clone().filter(|&n| n >= 3) {
        h.equal(format!("moon_moser_n{n}"), || {
            let want = bounds::moon_moser(n).map_err(err)?;
            let got = search_max(SearchSpace::all(n, 2), strong, Mode::Maximal, workers)?;
            Ok((want.to_string(), got.maximum.to_string()))
        });
    }
    for n in graph_ns {
        for (row, space, mode) in [
            (Row::G, SearchSpace::without_isolated(n, 2), Mode::All),
            (Row::H, SearchSpace::all(n, 2), Mode::Maximal),
        ] {
            h.run(format!("table1_{row}_n{n}"), || {
                let mut want = Vec::new();
                let mut got = Vec::new();
                for a in graph_profiles() {
                    match bounds::table1_value(a, n, row).map_err(err)? {
                        Table1Cell::Value(v) => want.push(format!("{a}:{v}")),
                        Table1Cell::Undefined => want.push(format!("{a}:-")),
                    }
                    got.push(format!("{a}:{}", search_max(space, a, mode, workers)?.maximum));
                }
                let (want, got) = (want.join(" "), got.join(" "));
                let pass = want == got;
                Ok((want, got, pass))
            });
        }
    }

    let parity_exhaustive = if full { 3..=6 } else { 3..=5 };
    for n in parity_exhaustive {
        for (name, a) in [("even", Profile::even(3)), ("odd", Profile::odd(3))] {
            h.equal(format!("parity_{name}_r3_n{n}"), || {
                let want = bounds::parity_bound(3, n).map_err(err)?;
                let got = search_max(SearchSpace::without_isolated(n, 3), a, Mode::All, workers)?;
                Ok((want.to_string(), got.maximum.to_string()))
            });
        }
    }
    let parity_sweep: Vec<(usize, usize)> = if full {
        (2..=5).flat_map(|r| (r..=12).map(move |n| (r, n))).collect()
    } else {
        (3..=12).map(|n| (3, n)).collect()
    };
    h.run("parity_overlap_constructions", || {
        for &(r, n) in &parity_sweep {
            let host = constructions::parity_overlap(r, n).map_err(err)?;
            let want = bounds::parity_bound(r, n).map_err(err)?;
            for a in [Profile::even(r), Profile::odd(r)] {
                let got = count_transversals(&host, a).count;
                if got != want || host.has_isolated_vertices() {
                    return Ok(("2^floor((r-1)n/r)".into(), format!("r={r} n={n} A={a}: {got}"), false));
                }
            }
        }
        Ok(("2^floor((r-1)n/r)".into(), format!("{} cases", parity_sweep.len()), true))
    });

    for (a, r, n) in [(p(&[0, 1]), 3, 14), (p(&[1]), 2, 8)] {
        h.run(format!("sunflower_{}_r{r}_n{n}", a.elements().map(|x| x.to_string()).collect::<Vec<_>>().join("_")), || {
            let layout = constructions::sunflower_layout(a, r, n).map_err(err)?;
            let floor = layout.f.pow(layout.petals as u32);
            let host = constructions::thm3i_sunflower(a, r, n).map_err(err)?;
            let got = count_transversals(&host, a).count;
            Ok((format!(">= {floor}"), got.to_string(), got >= floor))
        });
    }
    h.equal("best_exponent_0_1_r3", || {
        let c = bounds::best_exponent(p(&[0, 1]), 3).map_err(err)?;
        Ok(("p=1 i=0 f=2".into(), format!("p={} i={} f={}", c.p, c.i, c.f)))
    });

    for r in [2, 3] {
        h.run(format!("prop1v_construction_r{r}"), || {
            for n in r..=12 {
                let host = constructions::prop1v_construction(r, n).map_err(err)?;
                let got = count_transversals(&host, Profile::from_mask(1 | 1 << r).map_err(err)?).count;
                if got != 1u128 << (n / r) {
                    return Ok(("2^floor(n/r)".into(), format!("n={n}: {got}"), false));
                }
            }
            Ok(("2^floor(n/r)".into(), "n up to 12".into(), true))
        });
    }
    let prop1v_ns = if full { 3..=6 } else { 3..=5 };
    for n in prop1v_ns {
        h.equal(format!("prop1v_exhaustive_r3_n{n}"), || {
            let got = search_max(SearchSpace::without_isolated(n, 3), p(&[0, 3]), Mode::All, workers)?;
            Ok(((1u128 << (n / 3)).to_string(), got.maximum.to_string()))
        });
    }
    h.run("prop1_iv_vi_samples", || {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for k in 0..200 {
            let r = 2 + k % 2;
            let host: Hypergraph = crate::random::random_hypergraph(&mut rng, 8, r, 10);
            if count_transversals(&host, Profile::all(r)).count != 1 << 8 {
                return Ok(("all-profile count 2^n, duality".into(), format!("iv fails on {host:?}"), false));
            }
            for mask in 1u64..1 << (r + 1) {
                let a = Profile::from_mask(mask).map_err(err)?;
                let b = a.complement(r);
                if count_transversals(&host, a).count != count_transversals(&host, b).count {
                    return Ok(("all-profile count 2^n, duality".into(), format!("vi fails for {a}"), false));
                }
            }
        }
        Ok(("all-profile count 2^n, duality".into(), "200 samples".into(), true))
    });

    let summary = Summary {
        passed: h.checks.iter().filter(|c| c.pass).count(),
        failed: h.checks.iter().filter(|c| !c.pass).count(),
    };
    VerificationReport { level: options.level, checks: h.checks, summary }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_passes_with_enough_checks() {
        let report = run_verification(VerifyOptions::new(Level::Quick));
        if let Some(c) = report.checks.iter().find(|c| !c.pass) {
            panic!("{}: expected {} observed {}", c.name, c.expected, c.observed);
        }
        assert!(report.checks.len() >= 25, "{}", report.checks.len());
        assert!(report.passed());
    }

    #[test]
    fn corrupted_g_fails() {
        let report = run_verification(VerifyOptions { fault: Fault::CorruptG, ..VerifyOptions::new(Level::Quick) });
        assert!(!report.passed());
        assert!(!report.check("g3_msis_construction_n6").unwrap().pass);
    }

    #[test]
    fn report_round_trips() {
        let report = VerificationReport {
            level: Level::Quick,
            checks: vec![Check {
                name: "x".into(),
                expected: "16/3".into(),
                observed: "5".into(),
                pass: false,
                elapsed: Duration::from_millis(7),
            }],
            summary: Summary { passed: 0, failed: 1 },
        };
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<VerificationReport>(&json).unwrap(), report);
    }
}
