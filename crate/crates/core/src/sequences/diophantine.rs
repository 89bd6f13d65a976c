//! Registry of Diophantine systems behind the sequence-shape case analysis.
//!
//! Each case pairs the genus identity with the self-intersection condition
//! of the relevant resolution diagram and is solved by bounded enumeration.
//! The registry also stores the substituted single-equation form each proof
//! derives (re-derived from the genus identity where the source display is
//! inconsistent), so tests can assert both routes agree.

use std::collections::BTreeMap;

use super::SequenceError;

/// Solution as a sorted name -> value map.
pub type Solution = BTreeMap<String, i64>;

fn sol(pairs: &[(&str, i64)]) -> Solution {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn isqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i64;
    for c in [r - 1, r, r + 1] {
        if c >= 0 && c * c == n {
            return Some(c);
        }
    }
    None
}

/// Positive roots of d² + b·d + c = 0.
fn quadratic_roots(b: i64, c: i64) -> Vec<i64> {
    let disc = b * b - 4 * c;
    match isqrt(disc) {
        None => Vec::new(),
        Some(s) => {
            let mut out = Vec::new();
            for num in [-b + s, -b - s] {
                if num > 0 && num % 2 == 0 {
                    out.push(num / 2);
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        }
    }
}

/// Constant sequences (m_(k)), terminal self-intersection -1:
///   d² - k m² - m + 2 = 0  and  d² - 3d + 2 = k m (m - 1).
fn constant_delta_neg1(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 2..=bound {
        for k in 1..=bound {
            // Genus identity as a quadratic in d.
            for d in quadratic_roots(-3, 2 - k * m * (m - 1)) {
                if d < 4 || d > bound {
                    continue;
                }
                if d * d - k * m * m - m + 2 == 0 {
                    out.push(sol(&[("d", d), ("m", m), ("k", k)]));
                }
            }
        }
    }
    out
}

/// Paper form for the same case: d² - 3dm + m² - m + 2 = 0 with
/// k = (3d - m)/m a positive integer.
fn constant_delta_neg1_paper(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 2..=bound {
        for d in quadratic_roots(-3 * m, m * m - m + 2) {
            if d < 4 || d > bound {
                continue;
            }
            if (3 * d - m) % m != 0 {
                continue;
            }
            let k = (3 * d - m) / m;
            if (1..=bound).contains(&k) {
                out.push(sol(&[("d", d), ("m", m), ("k", k)]));
            }
        }
    }
    out
}

/// Constant sequences, terminal self-intersection 0; the diagram forces
/// k = m - 1:  d² - (m-1)m² - m + 1 = 0  and the genus identity.
fn constant_delta_zero(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 2..=bound {
        let k = m - 1;
        if k < 1 {
            continue;
        }
        if let Some(d) = isqrt((m - 1) * m * m + m - 1) {
            if d < 4 || d > bound {
                continue;
            }
            if d * d - 3 * d + 2 == k * m * (m - 1) {
                out.push(sol(&[("d", d), ("m", m), ("k", k)]));
            }
        }
    }
    out
}

/// One-step sequences (m+1, m_(l)) with the first strict transform already
/// of self-intersection -1 (repeated multiplicity m >= 2, length l):
///   d² - (m+1)² - l m² + 1 = 0  and  d² - 3d + 2 = (m+1)m + l m(m-1).
fn one_step_a1(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 2..=bound {
        for l in 1..=bound {
            if let Some(d) = isqrt((m + 1) * (m + 1) + l * m * m - 1) {
                if d < 4 || d > bound {
                    continue;
                }
                if d * d - 3 * d + 2 == (m + 1) * m + l * m * (m - 1) {
                    out.push(sol(&[("d", d), ("m", m), ("l", l)]));
                }
            }
        }
    }
    out
}

/// Paper form: d = 3m and l = 8 - 2/m, so m | 2.
fn one_step_a1_paper(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 2..=bound {
        if 2 % m != 0 {
            continue;
        }
        let l = 8 - 2 / m;
        let d = 3 * m;
        if d > bound || l > bound || l < 1 {
            continue;
        }
        let delta_ok = d * d - (m + 1) * (m + 1) - l * m * m + 1 == 0;
        let genus_ok = d * d - 3 * d + 2 == (m + 1) * m + l * m * (m - 1);
        if delta_ok && genus_ok {
            out.push(sol(&[("d", d), ("m", m), ("l", l)]));
        }
    }
    out
}

/// One-step (m, (m-1)_(l)) with k = 1, terminal self-intersection -1 after
/// the extra chain:  d² - m² - l(m-1)² - m + 2 = 0  plus the genus identity
/// d² - 3d + 2 = m(m-1) + l(m-1)(m-2); m >= 3.
fn one_step_a2(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 3..=bound {
        for l in 1..=bound {
            if let Some(d) = isqrt(m * m + l * (m - 1) * (m - 1) + m - 2) {
                if d < 4 || d > bound {
                    continue;
                }
                if d * d - 3 * d + 2 == m * (m - 1) + l * (m - 1) * (m - 2) {
                    out.push(sol(&[("d", d), ("m", m), ("l", l)]));
                }
            }
        }
    }
    out
}

/// One-step with k = 1 and l forced to 1, terminal self-intersection 0:
///   d² - m² - (m-1)² - m + 1 = 0  plus the genus identity; m >= 3.
fn one_step_a3(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 3..=bound {
        if let Some(d) = isqrt(m * m + (m - 1) * (m - 1) + m - 1) {
            if d < 4 || d > bound {
                continue;
            }
            if d * d - 3 * d + 2 == m * (m - 1) + (m - 1) * (m - 2) {
                out.push(sol(&[("d", d), ("m", m)]));
            }
        }
    }
    out
}

/// One-step (m_(k), m-1) through the satellite point, self-intersection
/// delta after the resolution; shared genus identity
/// d² - 3d + 2 = k m(m-1) + (m-1)(m-2); m >= 3, k >= 2.
fn one_step_bi(bound: i64, delta: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 3..=bound {
        for k in 2..=bound {
            // delta = d² - k m² - (m-1)² - (m-2)
            if let Some(d) = isqrt(delta + k * m * m + (m - 1) * (m - 1) + m - 2) {
                if d < 4 || d > bound {
                    continue;
                }
                if d * d - 3 * d + 2 == k * m * (m - 1) + (m - 1) * (m - 2) {
                    out.push(sol(&[("d", d), ("m", m), ("k", k)]));
                }
            }
        }
    }
    out
}

/// Paper form of the delta = 0 satellite case: d² - 3dm + m² + 1 = 0 with
/// k = (3d - 2m + 1)/m a positive integer.
fn one_step_bi2_paper(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 3..=bound {
        for d in quadratic_roots(-3 * m, m * m + 1) {
            if d < 4 || d > bound {
                continue;
            }
            if (3 * d - 2 * m + 1) % m != 0 {
                continue;
            }
            let k = (3 * d - 2 * m + 1) / m;
            if (2..=bound).contains(&k) {
                out.push(sol(&[("d", d), ("m", m), ("k", k)]));
            }
        }
    }
    out
}

/// Substituted form of the delta = -1 satellite case:
/// d² - 3dm + m² - m + 2 = 0 with k = (3d - 2m + 2)/m a positive integer.
fn one_step_bi1_paper(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 3..=bound {
        for d in quadratic_roots(-3 * m, m * m - m + 2) {
            if d < 4 || d > bound {
                continue;
            }
            if (3 * d - 2 * m + 2) % m != 0 {
                continue;
            }
            let k = (3 * d - 2 * m + 2) / m;
            if (2..=bound).contains(&k) {
                out.push(sol(&[("d", d), ("m", m), ("k", k)]));
            }
        }
    }
    out
}

/// One-step (m_(k), m-1) avoiding the satellite point, terminal
/// self-intersection 0; the diagram forces k = m - 1:
///   d² = m(m² - 1)  plus the genus identity.
fn one_step_bii2(bound: i64) -> Vec<Solution> {
    let mut out = Vec::new();
    for m in 3..=bound {
        let k = m - 1;
        if let Some(d) = isqrt(m * (m * m - 1)) {
            if d < 4 || d > bound {
                continue;
            }
            if d * d - 3 * d + 2 == k * m * (m - 1) + (m - 1) * (m - 2) {
                out.push(sol(&[("d", d), ("m", m), ("k", k)]));
            }
        }
    }
    out
}

/// Case descriptors.
pub struct CaseInfo {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub description: &'static str,
}

const CASES: &[CaseInfo] = &[
    CaseInfo {
        id: "constant-delta=-1",
        aliases: &["constant-δ=−1", "constant-δ=-1"],
        description: "constant sequences (m_(k)) with terminal self-intersection -1",
    },
    CaseInfo {
        id: "constant-delta=0",
        aliases: &["constant-δ=0"],
        description: "constant sequences (m_(k)) with terminal self-intersection 0 (k = m-1)",
    },
    CaseInfo {
        id: "one-step-A1",
        aliases: &["one-step-a1", "A.1"],
        description: "one-step (m+1, m_(l)) with immediate (-1) strict transform",
    },
    CaseInfo {
        id: "one-step-A2",
        aliases: &["one-step-a2", "A.2"],
        description: "one-step k=1 with terminal self-intersection -1",
    },
    CaseInfo {
        id: "one-step-A3",
        aliases: &["one-step-a3", "A.3"],
        description: "one-step k=1, l=1 with terminal self-intersection 0",
    },
    CaseInfo {
        id: "one-step-Bi-delta=-1",
        aliases: &["one-step-bi1", "B.i.1", "one-step-Bi-δ=−1"],
        description: "one-step (m_(k), m-1) through the satellite point, delta = -1",
    },
    CaseInfo {
        id: "one-step-Bi-delta=0",
        aliases: &["one-step-bi2", "B.i.2", "one-step-Bi-δ=0"],
        description: "one-step (m_(k), m-1) through the satellite point, delta = 0",
    },
    CaseInfo {
        id: "one-step-Bi-delta=1",
        aliases: &["one-step-bi3", "B.i.3", "one-step-Bi-δ=1"],
        description: "one-step (m_(k), m-1) through the satellite point, delta = 1",
    },
    CaseInfo {
        id: "one-step-Bii-delta=0",
        aliases: &["one-step-bii2", "B.ii.2", "one-step-Bii-δ=0"],
        description: "one-step (m_(k), m-1) avoiding the satellite point, delta = 0 (k = m-1)",
    },
];

pub fn registry_ids() -> Vec<&'static str> {
    CASES.iter().map(|c| c.id).collect()
}

fn canonical_id(case: &str) -> Option<&'static str> {
    for c in CASES {
        if c.id == case || c.aliases.contains(&case) {
            return Some(c.id);
        }
    }
    None
}

/// Bounded enumeration of one registered case's solution set.
pub fn diophantine_case(case: &str, bound: i64) -> Result<Vec<Solution>, SequenceError> {
    let id = canonical_id(case).ok_or_else(|| SequenceError::UnknownCase(case.to_string()))?;
    let mut sols = match id {
        "constant-delta=-1" => constant_delta_neg1(bound),
        "constant-delta=0" => constant_delta_zero(bound),
        "one-step-A1" => one_step_a1(bound),
        "one-step-A2" => one_step_a2(bound),
        "one-step-A3" => one_step_a3(bound),
        "one-step-Bi-delta=-1" => one_step_bi(bound, -1),
        "one-step-Bi-delta=0" => one_step_bi(bound, 0),
        "one-step-Bi-delta=1" => one_step_bi(bound, 1),
        "one-step-Bii-delta=0" => one_step_bii2(bound),
        _ => unreachable!(),
    };
    sols.sort();
    sols.dedup();
    Ok(sols)
}

/// The substituted single-equation route of the proof for the cases that
/// have published solutions; tests assert agreement with the primary route.
pub fn paper_form_case(case: &str, bound: i64) -> Result<Option<Vec<Solution>>, SequenceError> {
    let id = canonical_id(case).ok_or_else(|| SequenceError::UnknownCase(case.to_string()))?;
    let mut sols = match id {
        "constant-delta=-1" => constant_delta_neg1_paper(bound),
        "one-step-A1" => one_step_a1_paper(bound),
        "one-step-Bi-delta=-1" => one_step_bi1_paper(bound),
        "one-step-Bi-delta=0" => one_step_bi2_paper(bound),
        _ => return Ok(None),
    };
    sols.sort();
    sols.dedup();
    Ok(Some(sols))
}
