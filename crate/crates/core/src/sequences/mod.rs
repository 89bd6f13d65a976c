//! Arithmetic on multiplicity sequences: admissibility constraints, the
//! degree ≤ 8 enumerator, Noether's homaloidal conditions, the Diophantine
//! case registry, and the embedding-extension classifier.

use std::fmt;

pub mod diophantine;

pub use diophantine::{diophantine_case, registry_ids};

/// A candidate multiplicity sequence for a given degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SequenceCandidate {
    pub degree: i64,
    /// Non-increasing entries, all >= 2.
    pub entries: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceError {
    Inadmissible,
    UnknownCase(String),
    BadSequence(String),
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::Inadmissible => write!(f, "sequence is not admissible"),
            SequenceError::UnknownCase(c) => write!(f, "unknown Diophantine case `{c}`"),
            SequenceError::BadSequence(s) => write!(f, "bad sequence: {s}"),
        }
    }
}

impl std::error::Error for SequenceError {}

impl SequenceCandidate {
    pub fn new(degree: i64, entries: Vec<i64>) -> Result<Self, SequenceError> {
        if degree < 3 {
            return Err(SequenceError::BadSequence("degree must be >= 3".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(SequenceError::BadSequence(
                "entries must be non-increasing".into(),
            ));
        }
        if entries.iter().any(|&m| m < 2) {
            return Err(SequenceError::BadSequence("entries must be >= 2".into()));
        }
        Ok(SequenceCandidate { degree, entries })
    }
}

/// Exact genus identity Σ m(m-1) = d² - 3d + 2 and the squares slack
/// d² + 1 - Σ m² (which must be >= 0 for admissibility).
pub fn genus_and_squares_check(c: &SequenceCandidate) -> (bool, i64) {
    let d = c.degree;
    let genus_sum: i64 = c.entries.iter().map(|m| m * (m - 1)).sum();
    let sq_sum: i64 = c.entries.iter().map(|m| m * m).sum();
    (genus_sum == d * d - 3 * d + 2, d * d + 1 - sq_sum)
}

/// m1 + m2 <= d < 3 m1, with m2 := 1 for singleton sequences.
pub fn degree_bounds_check(c: &SequenceCandidate) -> bool {
    let d = c.degree;
    let m1 = match c.entries.first() {
        Some(&m) => m,
        None => return true,
    };
    let m2 = c.entries.get(1).copied().unwrap_or(1);
    m1 + m2 <= d && d < 3 * m1
}

/// Quadratic-transform reduction centered at the first three points.
///
/// Applicable when the first three multiplicities are equal and exceed the
/// degree in total: equal multiplicities put the three points in the
/// position the exclusion argument needs (non-collinear by Bézout, third
/// point not proximate to the first). The transformed candidate has degree
/// 2d - m1 - m2 - m3 and multiset {d - m2 - m3, d - m1 - m3, d - m1 - m2}
/// joined with the remaining entries; entries <= 1 are dropped.
pub fn quadratic_reduction_filter(c: &SequenceCandidate) -> Option<SequenceCandidate> {
    if c.entries.len() < 3 {
        return None;
    }
    let (m1, m2, m3) = (c.entries[0], c.entries[1], c.entries[2]);
    if !(m1 == m2 && m2 == m3 && m1 + m2 + m3 > c.degree && m2 + m3 > m1) {
        return None;
    }
    let d = c.degree;
    let new_degree = 2 * d - m1 - m2 - m3;
    let mut entries: Vec<i64> = vec![d - m2 - m3, d - m1 - m3, d - m1 - m2];
    entries.extend_from_slice(&c.entries[3..]);
    entries.retain(|&m| m >= 2);
    entries.sort_unstable_by(|a, b| b.cmp(a));
    Some(SequenceCandidate {
        degree: new_degree,
        entries,
    })
}

/// Full admissibility: genus identity, squares inequality, degree bounds,
/// and not excluded by the quadratic reduction, applied recursively.
pub fn is_admissible(c: &SequenceCandidate) -> bool {
    let (genus_ok, slack) = genus_and_squares_check(c);
    if !genus_ok || slack < 0 || !degree_bounds_check(c) {
        return false;
    }
    match quadratic_reduction_filter(c) {
        None => true,
        Some(reduced) => {
            if reduced.degree <= 2 {
                // A line or conic: fine exactly when no singular entries
                // remain.
                reduced.entries.is_empty()
            } else {
                is_admissible(&reduced)
            }
        }
    }
}

/// All admissible multiplicity sequences for a degree, in descending
/// lexicographic order.
pub fn enumerate_admissible(degree: i64) -> Vec<SequenceCandidate> {
    fn gen(
        degree: i64,
        remaining: i64,
        max_entry: i64,
        acc: &mut Vec<i64>,
        out: &mut Vec<SequenceCandidate>,
    ) {
        if remaining == 0 {
            let cand = SequenceCandidate {
                degree,
                entries: acc.clone(),
            };
            if is_admissible(&cand) {
                out.push(cand);
            }
            return;
        }
        let mut m = max_entry;
        while m >= 2 {
            if m * (m - 1) <= remaining {
                acc.push(m);
                gen(degree, remaining - m * (m - 1), m, acc, out);
                acc.pop();
            }
            m -= 1;
        }
    }
    let target = degree * degree - 3 * degree + 2;
    let mut out = Vec::new();
    let mut acc: Vec<i64> = Vec::new();
    gen(degree, target, degree - 1, &mut acc, &mut out);
    out.sort_by(|a, b| b.entries.cmp(&a.entries));
    out
}

/// Noether's homaloidal conditions: Σ m = 3d - 3 and Σ m² = d² - 1.
pub fn homaloidal_check(degree: i64, mults: &[i64]) -> bool {
    let s: i64 = mults.iter().sum();
    let sq: i64 = mults.iter().map(|m| m * m).sum();
    s == 3 * degree - 3 && sq == degree * degree - 1
}

/// Two-jump obstruction: indices r < s <= k-2 (1-indexed) with
///   m_{r+1} + m_{r+2} > m_r > m_{r+1},
///   m_{s+1} + m_{s+2} > m_s > m_{s+1},
///   m_s + m_{s+1} > m_{s-1}.
/// When it holds, every open embedding of the complement extends.
pub fn jump_obstruction(entries: &[i64]) -> bool {
    let k = entries.len();
    if k < 4 {
        return false;
    }
    let m = |i: usize| entries[i - 1]; // 1-indexed
    for r in 1..=(k - 2) {
        if !(m(r + 1) + m(r + 2) > m(r) && m(r) > m(r + 1)) {
            continue;
        }
        for s in (r + 1).max(2)..=(k - 2) {
            if m(s + 1) + m(s + 2) > m(s) && m(s) > m(s + 1) && m(s) + m(s + 1) > m(s - 1) {
                return true;
            }
        }
    }
    false
}

/// Outcome of the unicuspidal contractibility trichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnicuspidalCase {
    /// d² - Σm² = -1 and m_{k-1} - m_k = 1.
    CaseI,
    /// d² - Σm² - m_k = -2 with m_k = 2, m_{k-1} != 3.
    CaseII,
    /// d² - Σm² - m_k >= -1.
    CaseIII,
    /// None of the three: no non-extendable embedding exists.
    NoEmbedding,
}

impl fmt::Display for UnicuspidalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnicuspidalCase::CaseI => write!(f, "case (i)"),
            UnicuspidalCase::CaseII => write!(f, "case (ii)"),
            UnicuspidalCase::CaseIII => write!(f, "case (iii)"),
            UnicuspidalCase::NoEmbedding => write!(f, "no non-extendable embedding"),
        }
    }
}

/// Decides, for a unicuspidal curve with the given data, whether a
/// non-extendable embedding of the complement exists, and through which of
/// the three mutually exclusive mechanisms.
pub fn unicuspidal_embedding_classifier(degree: i64, entries: &[i64]) -> UnicuspidalCase {
    let k = entries.len();
    let sq: i64 = entries.iter().map(|m| m * m).sum();
    let s2 = degree * degree - sq;
    let mk = entries.last().copied().unwrap_or(1);
    let t = s2 - mk;
    if s2 == -1 && k >= 2 && entries[k - 2] - entries[k - 1] == 1 {
        return UnicuspidalCase::CaseI;
    }
    if t == -2 && mk == 2 && (k < 2 || entries[k - 2] != 3) {
        return UnicuspidalCase::CaseII;
    }
    if t >= -1 {
        return UnicuspidalCase::CaseIII;
    }
    UnicuspidalCase::NoEmbedding
}

/// Classifier verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictTag {
    /// Every open embedding of the complement extends to an automorphism of
    /// the plane.
    ExtendsAlways,
    /// No non-extendable embedding exists for this class of curves.
    NoNonExtendableEmbedding,
    /// Non-extendable embeddings exist and the class is unicuspidal; all
    /// curves in the class are projectively equivalent.
    EmbeddingExistsUnicuspidal,
    /// The rule alone does not decide: the unicuspidal trichotomy applies.
    RequiresUnicuspidal,
    /// Non-extendable embeddings may exist; the smooth locus of the curve is
    /// A¹ minus a point.
    SpecialPunctured,
    Unknown,
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictTag::ExtendsAlways => "ExtendsAlways",
            VerdictTag::NoNonExtendableEmbedding => "NoNonExtendableEmbedding",
            VerdictTag::EmbeddingExistsUnicuspidal => "EmbeddingExistsUnicuspidal",
            VerdictTag::RequiresUnicuspidal => "RequiresUnicuspidal",
            VerdictTag::SpecialPunctured => "SpecialPunctured",
            VerdictTag::Unknown => "Unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifierVerdict {
    pub tag: VerdictTag,
    /// The rule that produced the verdict.
    pub rule: String,
    /// Arithmetic trace backing the verdict, when one exists.
    pub witness: Option<String>,
    pub note: Option<String>,
    /// Set for sequences whose realizability by an actual curve is open.
    pub existence_unknown: bool,
}

impl ClassifierVerdict {
    fn new(tag: VerdictTag, rule: &str) -> Self {
        ClassifierVerdict {
            tag,
            rule: rule.to_string(),
            witness: None,
            note: None,
            existence_unknown: false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        m.insert("tag".into(), self.tag.to_string().into());
        m.insert("rule".into(), self.rule.clone().into());
        m.insert(
            "witness".into(),
            self.witness
                .clone()
                .map(Into::into)
                .unwrap_or(serde_json::Value::Null),
        );
        m.insert(
            "note".into(),
            self.note
                .clone()
                .map(Into::into)
                .unwrap_or(serde_json::Value::Null),
        );
        m.insert("existence_unknown".into(), self.existence_unknown.into());
        serde_json::Value::Object(m)
    }
}

fn is_constant(entries: &[i64]) -> bool {
    !entries.is_empty() && entries.iter().all(|&m| m == entries[0])
}

/// (m, k, l) when the sequence has the one-step shape (m_(k), (m-1)_(l)).
fn one_step_shape(entries: &[i64]) -> Option<(i64, usize, usize)> {
    let m = *entries.first()?;
    if m < 3 {
        return None;
    }
    let k = entries.iter().take_while(|&&x| x == m).count();
    let l = entries.len() - k;
    if l == 0 {
        return None;
    }
    if entries[k..].iter().all(|&x| x == m - 1) {
        Some((m, k, l))
    } else {
        None
    }
}

/// All entries even, with a tail of 2s after index l such that every earlier
/// multiplicity is smaller than the sum of the later ones.
fn all_even_shape(entries: &[i64]) -> bool {
    let k = entries.len();
    if k < 2 || entries.iter().any(|&m| m % 2 != 0) {
        return false;
    }
    let head = entries.iter().take_while(|&&m| m > 2).count();
    if head == 0 || head >= k {
        return false;
    }
    for j in 0..head {
        let rest: i64 = entries[j + 1..].iter().sum();
        if entries[j] >= rest {
            return false;
        }
    }
    true
}

/// Sequences that cannot be realized by a unicuspidal curve.
fn not_unicuspidal_listed(entries: &[i64]) -> bool {
    let lists: [&[i64]; 4] = [
        &[3, 3, 3, 3, 2, 2, 2],
        &[4, 3, 3, 3, 3, 3],
        &[4, 3, 3, 3, 3, 2, 2, 2],
        &[5, 2, 2, 2, 2, 2],
    ];
    lists.iter().any(|l| *l == entries)
}

/// The constant-sequence rule: for curves with sequence (m_(k)) and at least
/// two branches, embeddings extend except for (d, m, k) = (8, 3, 7) and
/// (16, 6, 7), where the smooth locus is A¹ minus a point (the nodal cubic
/// is the separate degree-3 boundary case). Unicuspidal inputs defer to the
/// trichotomy.
pub fn constant_sequence_theorem(degree: i64, m: i64, k: usize, branches: u32) -> ClassifierVerdict {
    if branches == 1 {
        let mut v = ClassifierVerdict::new(VerdictTag::RequiresUnicuspidal, "constant");
        v.note = Some("unicuspidal input: apply the unicuspidal trichotomy".into());
        return v;
    }
    if degree == 3 && m == 2 && k == 1 {
        let mut v = ClassifierVerdict::new(VerdictTag::SpecialPunctured, "nodal-cubic");
        v.note =
            Some("smooth locus is A^1 minus a point; non-extendable automorphisms exist".into());
        return v;
    }
    if (degree, m, k) == (8, 3, 7) || (degree, m, k) == (16, 6, 7) {
        let mut v = ClassifierVerdict::new(VerdictTag::SpecialPunctured, "constant");
        v.witness = Some(format!("{degree}^2 - {k}*{m}^2 - {m} + 2 = 0 with 3d = m(k+1)"));
        v.note = Some("smooth locus is A^1 minus a point".into());
        return v;
    }
    ClassifierVerdict::new(VerdictTag::ExtendsAlways, "constant")
}

/// Fixed-priority classification of (degree, sequence, branch count).
pub fn classify(
    degree: i64,
    entries: &[i64],
    branches: u32,
) -> Result<ClassifierVerdict, SequenceError> {
    let cand = SequenceCandidate::new(degree, entries.to_vec())?;
    if !is_admissible(&cand) {
        return Err(SequenceError::Inadmissible);
    }

    // 1. Two-jump obstruction: extends regardless of branches.
    if jump_obstruction(entries) {
        return Ok(ClassifierVerdict::new(VerdictTag::ExtendsAlways, "jump"));
    }

    // 2. Degree 7 with (5, 2_(5)): extends unconditionally.
    if degree == 7 && entries == [5, 2, 2, 2, 2, 2] {
        return Ok(ClassifierVerdict::new(VerdictTag::ExtendsAlways, "deg7-5-2x5"));
    }

    // 3. Sequences that cannot be unicuspidal: a branches = 1 query
    //    describes an empty class of curves.
    if branches == 1 && not_unicuspidal_listed(entries) {
        let mut v = ClassifierVerdict::new(VerdictTag::NoNonExtendableEmbedding, "not-unicuspidal");
        v.note = Some("no unicuspidal curve carries this sequence; the class is empty".into());
        return Ok(v);
    }

    // 4. Constant sequences.
    if is_constant(entries) {
        let v = constant_sequence_theorem(degree, entries[0], entries.len(), branches);
        if v.tag != VerdictTag::RequiresUnicuspidal {
            return Ok(v);
        }
        return Ok(unicuspidal_verdict(degree, entries));
    }

    // 5. One-step sequences (m_(k), (m-1)_(l)).
    if let Some((m, k, l)) = one_step_shape(entries) {
        if branches >= 2 {
            if degree == 6 && (m, k, l) == (3, 1, 7) {
                let mut v = ClassifierVerdict::new(VerdictTag::SpecialPunctured, "one-step");
                v.note = Some(
                    "smooth locus is A^1 minus a point; all such sextics are projectively equivalent"
                        .into(),
                );
                return Ok(v);
            }
            if degree == 13 && (m, k, l) == (5, 6, 1) {
                let mut v = ClassifierVerdict::new(VerdictTag::SpecialPunctured, "one-step");
                v.witness = Some("13^2 - 3*13*5 + 5^2 + 1 = 0".into());
                v.existence_unknown = true;
                return Ok(v);
            }
            return Ok(ClassifierVerdict::new(VerdictTag::ExtendsAlways, "one-step"));
        }
        if degree == 6 && (m, k, l) == (3, 1, 7) {
            let mut v = ClassifierVerdict::new(VerdictTag::EmbeddingExistsUnicuspidal, "deg6-3-2x7");
            v.note = Some("projectively equivalent class of sextics".into());
            return Ok(v);
        }
        return Ok(unicuspidal_verdict(degree, entries));
    }

    // 6. All-even sequences with a tail of 2s.
    if all_even_shape(entries) {
        if branches >= 2 {
            return Ok(ClassifierVerdict::new(VerdictTag::ExtendsAlways, "all-even"));
        }
        return Ok(unicuspidal_verdict(degree, entries));
    }

    // 7. Remaining unicuspidal inputs.
    if branches == 1 {
        return Ok(unicuspidal_verdict(degree, entries));
    }

    Ok(ClassifierVerdict::new(VerdictTag::Unknown, "none"))
}

fn unicuspidal_verdict(degree: i64, entries: &[i64]) -> ClassifierVerdict {
    let case = unicuspidal_embedding_classifier(degree, entries);
    let sq: i64 = entries.iter().map(|m| m * m).sum();
    let mk = entries.last().copied().unwrap_or(1);
    let witness = format!(
        "{}^2 - sum(m^2) = {}, minus m_k = {}",
        degree,
        degree * degree - sq,
        degree * degree - sq - mk
    );
    match case {
        UnicuspidalCase::NoEmbedding => {
            let mut v = ClassifierVerdict::new(VerdictTag::NoNonExtendableEmbedding, "unicuspidal");
            v.witness = Some(witness);
            v
        }
        c => {
            let mut v = ClassifierVerdict::new(VerdictTag::EmbeddingExistsUnicuspidal, "unicuspidal");
            v.witness = Some(format!("{witness}; {c}"));
            v
        }
    }
}

/// The degree -> sequences row as JSON, matching the golden file layout.
pub fn table_json(degree: i64) -> serde_json::Value {
    let rows = enumerate_admissible(degree);
    let mut m = serde_json::Map::new();
    m.insert("degree".into(), degree.into());
    m.insert(
        "sequences".into(),
        serde_json::Value::Array(
            rows.iter()
                .map(|c| serde_json::Value::Array(c.entries.iter().map(|&e| e.into()).collect()))
                .collect(),
        ),
    );
    serde_json::Value::Object(m)
}

/// Parses "3,3,3" into sequence entries.
pub fn parse_entries(s: &str) -> Result<Vec<i64>, SequenceError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| SequenceError::BadSequence(format!("bad entry `{p}`")))
        })
        .collect()
}

/// Branch counts worth sweeping for a sequence (the not-unicuspidal list
/// rules out a single branch).
pub fn plausible_branches(entries: &[i64]) -> Vec<u32> {
    if not_unicuspidal_listed(entries) {
        vec![2]
    } else {
        vec![1, 2]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(d: i64, e: &[i64]) -> SequenceCandidate {
        SequenceCandidate::new(d, e.to_vec()).unwrap()
    }

    #[test]
    fn genus_and_squares_examples() {
        let (ok, slack) = genus_and_squares_check(&cand(6, &[3, 2, 2, 2, 2, 2, 2, 2]));
        assert!(ok);
        assert_eq!(slack, 0);
        let (ok, slack) = genus_and_squares_check(&cand(3, &[2]));
        assert!(ok);
        assert_eq!(slack, 6);
        let (ok, slack) = genus_and_squares_check(&cand(7, &[3, 3, 3, 3, 3]));
        assert!(ok);
        assert_eq!(slack, 5);
    }

    #[test]
    fn degree_bounds_examples() {
        assert!(degree_bounds_check(&cand(5, &[4])));
        assert!(!degree_bounds_check(&cand(5, &[3, 3])));
        assert!(degree_bounds_check(&cand(4, &[2, 2, 2])));
    }

    #[test]
    fn quadratic_filter_examples() {
        // (7, 3_(5)) reduces to (5, (3,3)), which fails the degree bounds.
        let red = quadratic_reduction_filter(&cand(7, &[3, 3, 3, 3, 3])).unwrap();
        assert_eq!(red.degree, 5);
        assert_eq!(red.entries, vec![3, 3]);
        assert!(!degree_bounds_check(&red));
        assert!(!is_admissible(&cand(7, &[3, 3, 3, 3, 3])));

        // (6, (3,3,3,2)) reduces to (3, (2)), which passes.
        let red = quadratic_reduction_filter(&cand(6, &[3, 3, 3, 2])).unwrap();
        assert_eq!(red.degree, 3);
        assert_eq!(red.entries, vec![2]);
        assert!(is_admissible(&cand(6, &[3, 3, 3, 2])));

        // (8, (3_(7))) reduces to the admissible (7, (3_(4), 2_(3))).
        let red = quadratic_reduction_filter(&cand(8, &[3; 7])).unwrap();
        assert_eq!(red.degree, 7);
        assert_eq!(red.entries, vec![3, 3, 3, 3, 2, 2, 2]);
        assert!(is_admissible(&cand(8, &[3; 7])));

        // Unequal leading multiplicities: not applicable.
        assert!(quadratic_reduction_filter(&cand(8, &[4, 4, 3, 3, 3])).is_none());
        assert!(is_admissible(&cand(8, &[4, 4, 3, 3, 3])));
    }

    #[test]
    fn enumerate_small_degrees() {
        let rows: Vec<Vec<i64>> = enumerate_admissible(5)
            .into_iter()
            .map(|c| c.entries)
            .collect();
        assert_eq!(rows, vec![vec![4], vec![3, 2, 2, 2], vec![2, 2, 2, 2, 2, 2]]);
        let rows: Vec<Vec<i64>> = enumerate_admissible(3)
            .into_iter()
            .map(|c| c.entries)
            .collect();
        assert_eq!(rows, vec![vec![2]]);
        // Exactly 12 sequences at degree 8, ending with (3_(7)).
        let rows = enumerate_admissible(8);
        assert_eq!(rows.len(), 12);
        assert_eq!(rows.last().unwrap().entries, vec![3; 7]);
        // (3_(5)) is absent at degree 7.
        let rows = enumerate_admissible(7);
        assert!(rows.iter().all(|c| c.entries != vec![3, 3, 3, 3, 3]));
        assert_eq!(rows.len(), 6);
    }

    #[test]
    fn enumerated_rows_satisfy_constraints_post_hoc() {
        for d in 3..=8 {
            for c in enumerate_admissible(d) {
                let (ok, slack) = genus_and_squares_check(&c);
                assert!(ok && slack >= 0);
                assert!(degree_bounds_check(&c));
            }
        }
    }

    #[test]
    fn homaloidal_examples() {
        assert!(homaloidal_check(5, &[2, 2, 2, 2, 2, 2]));
        assert!(homaloidal_check(2, &[1, 1, 1]));
        assert!(!homaloidal_check(5, &[2, 2, 2, 2, 2]));
        // The two Noether identities jointly imply the genus identity.
        for (d, m) in [(5i64, vec![2i64; 6]), (2, vec![1, 1, 1]), (3, vec![2, 1, 1, 1, 1])] {
            if homaloidal_check(d, &m) {
                let s: i64 = m.iter().map(|x| x * (x - 1)).sum();
                assert_eq!(s, d * d - 3 * d + 2);
            }
        }
    }

    #[test]
    fn jump_examples() {
        assert!(jump_obstruction(&[4, 3, 2, 2, 2, 2, 2, 2]));
        assert!(jump_obstruction(&[5, 3, 3, 3, 2, 2]));
        assert!(!jump_obstruction(&[3, 3, 3, 3, 3, 3, 3]));
        // The full list backing the jump corollary.
        for seq in [
            vec![4, 3, 2, 2, 2, 2, 2, 2],
            vec![4, 3, 3, 2, 2, 2],
            vec![4, 3, 3, 3, 3, 2, 2, 2],
            vec![4, 4, 3, 2, 2, 2, 2, 2, 2],
            vec![4, 4, 3, 3, 2, 2, 2],
            vec![5, 3, 3, 2, 2, 2, 2, 2],
            vec![5, 3, 3, 3, 2, 2],
        ] {
            assert!(jump_obstruction(&seq), "expected jump for {seq:?}");
        }
        // Non-jump rows stay out.
        for seq in [
            vec![5, 2, 2, 2, 2, 2],
            vec![3, 2, 2, 2, 2, 2, 2, 2],
            vec![4, 3, 3, 3, 3, 3],
            vec![2, 2, 2, 2, 2, 2],
            vec![3, 3, 2, 2, 2, 2],
        ] {
            assert!(!jump_obstruction(&seq), "unexpected jump for {seq:?}");
        }
    }

    #[test]
    fn unicuspidal_cases() {
        assert_eq!(
            unicuspidal_embedding_classifier(8, &[3; 7]),
            UnicuspidalCase::NoEmbedding
        );
        assert_eq!(
            unicuspidal_embedding_classifier(5, &[2; 6]),
            UnicuspidalCase::CaseIII
        );
        assert_eq!(unicuspidal_embedding_classifier(3, &[2]), UnicuspidalCase::CaseIII);
        // The sextic (6; 3, 2_(7)): 36 - 37 - 2 = -3, so none of the three
        // cases holds -- consistent with this sequence never being
        // unicuspidal.
        assert_eq!(
            unicuspidal_embedding_classifier(6, &[3, 2, 2, 2, 2, 2, 2, 2]),
            UnicuspidalCase::NoEmbedding
        );
        // Case (i): 7^2 - (25 + 16 + 9) = -1 with a final drop of one.
        assert_eq!(
            unicuspidal_embedding_classifier(7, &[5, 4, 3]),
            UnicuspidalCase::CaseI
        );
        // Case (ii): 4^2 - 4*4 - 2 = -2 with m_k = 2 and m_{k-1} = 2.
        assert_eq!(
            unicuspidal_embedding_classifier(4, &[2, 2, 2, 2]),
            UnicuspidalCase::CaseII
        );
    }

    #[test]
    fn classify_pinned_cases() {
        for b in [1, 2] {
            let v = classify(7, &[5, 2, 2, 2, 2, 2], b).unwrap();
            assert_eq!(v.tag, VerdictTag::ExtendsAlways, "branches {b}");
        }
        let v = classify(8, &[3; 7], 1).unwrap();
        assert_eq!(v.tag, VerdictTag::NoNonExtendableEmbedding);
        let v = classify(8, &[3; 7], 2).unwrap();
        assert_eq!(v.tag, VerdictTag::SpecialPunctured);
        let v = classify(6, &[3, 2, 2, 2, 2, 2, 2, 2], 1).unwrap();
        assert_eq!(v.tag, VerdictTag::EmbeddingExistsUnicuspidal);
        assert_eq!(
            classify(7, &[3, 3, 3, 3, 3], 1).unwrap_err(),
            SequenceError::Inadmissible
        );
    }

    #[test]
    fn classify_never_unknown_on_table() {
        for d in 3..=8 {
            for cand in enumerate_admissible(d) {
                for b in [1u32, 2] {
                    let v = classify(d, &cand.entries, b).unwrap();
                    assert_ne!(
                        v.tag,
                        VerdictTag::Unknown,
                        "Unknown verdict for d={d}, {:?}, branches={b}",
                        cand.entries
                    );
                }
            }
        }
    }

    #[test]
    fn constant_theorem_cases() {
        assert_eq!(constant_sequence_theorem(8, 3, 7, 2).tag, VerdictTag::SpecialPunctured);
        assert_eq!(constant_sequence_theorem(16, 6, 7, 2).tag, VerdictTag::SpecialPunctured);
        assert_eq!(constant_sequence_theorem(6, 5, 1, 2).tag, VerdictTag::ExtendsAlways);
        assert_eq!(
            constant_sequence_theorem(8, 3, 7, 1).tag,
            VerdictTag::RequiresUnicuspidal
        );
    }
}
