//! The integer intersection calculus on blow-ups of the plane.
//!
//! A lattice is spanned by the line class H and the total transforms
//! ē_1, ..., ē_n of the exceptional divisors of an iterated blow-up, with
//! H² = 1, ē_i² = -1 and mixed products 0. A divisor class is stored as
//! (d; m_1, ..., m_n) meaning d·H - Σ m_i ē_i, so the pairing is
//! d·d' - Σ m_i·m_i'.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::cluster::ProximityTree;

#[derive(Clone, Debug)]
pub enum LatticeError {
    /// Contraction requires a (-1)-class of arithmetic genus 0; carries the
    /// obstruction and a snapshot of the current state.
    NotContractible {
        name: String,
        self_intersection: BigInt,
        genus: Rational,
        step: usize,
        state: Vec<(String, DivisorClass)>,
    },
    /// The plan does not contract down to rank one.
    RankNotOne,
    UnknownClass(String),
    SizeMismatch,
    BadPlan(String),
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotContractible {
                name,
                self_intersection,
                genus,
                step,
                ..
            } => write!(
                f,
                "step {step}: class `{name}` is not contractible (self-intersection {self_intersection}, genus {genus})"
            ),
            LatticeError::RankNotOne => write!(f, "plan does not contract to rank one"),
            LatticeError::UnknownClass(n) => write!(f, "unknown class `{n}`"),
            LatticeError::SizeMismatch => write!(f, "class size does not match the lattice"),
            LatticeError::BadPlan(s) => write!(f, "bad plan: {s}"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// Basis data of an iterated blow-up of the plane.
#[derive(Clone, Debug)]
pub struct BlowupLattice {
    tree: ProximityTree,
}

/// Integer vector (d; m_1, ..., m_n) in the Picard lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub d: BigInt,
    pub mults: Vec<BigInt>,
}

impl DivisorClass {
    pub fn from_ints(d: i64, mults: &[i64]) -> Self {
        DivisorClass {
            d: BigInt::from(d),
            mults: mults.iter().map(|&m| BigInt::from(m)).collect(),
        }
    }

    pub fn pair(&self, other: &DivisorClass) -> BigInt {
        assert_eq!(self.mults.len(), other.mults.len(), "lattice size mismatch");
        let mut acc = &self.d * &other.d;
        for (a, b) in self.mults.iter().zip(&other.mults) {
            acc -= a * b;
        }
        acc
    }

    pub fn self_intersection(&self) -> BigInt {
        self.pair(self)
    }

    /// D + c·E, the pushforward update under contracting E.
    fn plus_multiple(&self, c: &BigInt, e: &DivisorClass) -> DivisorClass {
        DivisorClass {
            d: &self.d + c * &e.d,
            mults: self
                .mults
                .iter()
                .zip(&e.mults)
                .map(|(m, em)| m + c * em)
                .collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.mults.iter().map(|m| m.to_string()).collect();
        write!(f, "({}; {})", self.d, ms.join(","))
    }
}

impl BlowupLattice {
    pub fn new(tree: ProximityTree) -> Self {
        BlowupLattice { tree }
    }

    pub fn n(&self) -> usize {
        self.tree.len()
    }

    pub fn tree(&self) -> &ProximityTree {
        &self.tree
    }

    pub fn line_class(&self) -> DivisorClass {
        DivisorClass {
            d: BigInt::one(),
            mults: vec![BigInt::zero(); self.n()],
        }
    }

    /// K = -3H + Σ ē_i, so K² = 9 - n.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass {
            d: BigInt::from(-3),
            mults: vec![BigInt::from(-1); self.n()],
        }
    }

    /// Total transform ē_i.
    pub fn total_transform(&self, i: usize) -> DivisorClass {
        let mut mults = vec![BigInt::zero(); self.n()];
        mults[i] = BigInt::from(-1);
        DivisorClass {
            d: BigInt::zero(),
            mults,
        }
    }

    /// Strict transform of the i-th exceptional curve:
    /// E_i = ē_i - Σ_{j proximate to i} ē_j.
    pub fn exceptional_class(&self, i: usize) -> DivisorClass {
        let mut mults = vec![BigInt::zero(); self.n()];
        mults[i] = BigInt::from(-1);
        for node in &self.tree.nodes {
            if node.proximate_to.contains(&i) {
                mults[node.id] = BigInt::one();
            }
        }
        DivisorClass {
            d: BigInt::zero(),
            mults,
        }
    }

    /// Strict transform class of a plane curve of the given degree with the
    /// given multiplicities at the tree's points.
    pub fn curve_class(&self, degree: i64, mults: &[i64]) -> Result<DivisorClass, LatticeError> {
        if mults.len() != self.n() {
            return Err(LatticeError::SizeMismatch);
        }
        Ok(DivisorClass::from_ints(degree, mults))
    }

    /// Arithmetic genus by adjunction: (D² + D·K)/2 + 1.
    pub fn adjunction_genus(&self, class: &DivisorClass) -> Rational {
        let k = self.canonical_class();
        let num = class.self_intersection() + class.pair(&k);
        Rational::new(num + BigInt::from(2), BigInt::from(2))
    }
}

/// A (-1)-tower check: the tree must be a chain and the terminal class must
/// have self-intersection -1 and adjunction genus 0.
#[derive(Clone, Debug)]
pub struct TowerCheck {
    pub ok: bool,
    pub is_chain: bool,
    pub terminal_self_intersection: BigInt,
    pub genus: Rational,
    /// Partial self-intersections d² - Σ_{i<=k} m_i² along the chain.
    pub trace: Vec<BigInt>,
}

pub fn verify_minus_one_tower(lattice: &BlowupLattice, class: &DivisorClass) -> TowerCheck {
    let is_chain = lattice.tree().is_chain();
    let mut trace = Vec::with_capacity(class.mults.len() + 1);
    let mut acc = &class.d * &class.d;
    trace.push(acc.clone());
    for m in &class.mults {
        acc -= m * m;
        trace.push(acc.clone());
    }
    let terminal = class.self_intersection();
    let genus = lattice.adjunction_genus(class);
    TowerCheck {
        ok: is_chain && terminal == BigInt::from(-1) && genus.is_zero(),
        is_chain,
        terminal_self_intersection: terminal,
        genus,
        trace,
    }
}

/// Extends a multiplicity vector by unit points until the self-intersection
/// reaches -1; `None` when it is already below -1.
pub fn extend_to_minus_one(degree: i64, mults: &[i64]) -> Option<Vec<i64>> {
    let mut s: i64 = degree * degree - mults.iter().map(|m| m * m).sum::<i64>();
    if s < -1 {
        return None;
    }
    let mut out = mults.to_vec();
    while s > -1 {
        out.push(1);
        s -= 1;
    }
    Some(out)
}

/// Simple-normal-crossings tree check for a configuration of classes.
#[derive(Clone, Debug)]
pub struct SncCheck {
    pub ok: bool,
    pub transverse: bool,
    pub connected: bool,
    pub acyclic: bool,
    /// Edges (i, j) with pairwise product 1.
    pub edges: Vec<(usize, usize)>,
}

/// True iff all pairwise products are 0 or 1 and the intersection graph is
/// a tree.
pub fn snc_tree_check(classes: &[DivisorClass]) -> SncCheck {
    let n = classes.len();
    let mut transverse = true;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = classes[i].pair(&classes[j]);
            if p.is_negative() || p > BigInt::one() {
                transverse = false;
            } else if p.is_one() {
                edges.push((i, j));
            }
        }
    }
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut acyclic = true;
    for &(i, j) in &edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri == rj {
            acyclic = false;
        } else {
            parent[ri] = rj;
        }
    }
    let root = if n > 0 { find(&mut parent, 0) } else { 0 };
    let connected = (0..n).all(|i| find(&mut parent, i) == root);
    SncCheck {
        ok: transverse && connected && acyclic,
        transverse,
        connected,
        acyclic,
        edges,
    }
}

/// A contraction plan: named classes, an order to contract, and a tracked
/// class whose image profile is reported.
#[derive(Clone, Debug)]
pub struct ContractionPlan {
    pub lattice: BlowupLattice,
    pub classes: BTreeMap<String, DivisorClass>,
    pub order: Vec<String>,
    pub track: Option<String>,
}

/// One executed contraction step.
#[derive(Clone, Debug)]
pub struct ContractionStep {
    pub name: String,
    /// The contracted class at the moment of contraction.
    pub class: DivisorClass,
    /// Intersection of the tracked class with the contracted class, i.e. the
    /// multiplicity of the tracked image at the re-created point.
    pub tracked_intersection: Option<BigInt>,
}

/// Final profile of the tracked class after a full contraction to rank one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardProfile {
    pub degree: BigInt,
    /// Multiplicities at the re-created points, in reverse contraction order
    /// (= blow-up order of the inverse map).
    pub multiplicities: Vec<BigInt>,
}

impl PushforwardProfile {
    /// The multiplicity-sequence part: entries >= 2.
    pub fn sequence_entries(&self) -> Vec<i64> {
        self.multiplicities
            .iter()
            .filter(|m| **m >= BigInt::from(2))
            .map(|m| i64::try_from(m).expect("desk-scale multiplicity"))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct ContractionOutcome {
    pub steps: Vec<ContractionStep>,
    /// All named classes, pushed forward past every contraction.
    pub final_classes: BTreeMap<String, DivisorClass>,
    pub profile: Option<PushforwardProfile>,
}

/// Contracts one (-1)-class: every remaining class D becomes D + (D·e)·e.
pub fn contract_step(
    classes: &BTreeMap<String, DivisorClass>,
    name: &str,
    lattice: &BlowupLattice,
    step: usize,
) -> Result<BTreeMap<String, DivisorClass>, LatticeError> {
    let e = classes
        .get(name)
        .ok_or_else(|| LatticeError::UnknownClass(name.to_string()))?
        .clone();
    let s = e.self_intersection();
    let genus = lattice.adjunction_genus(&e);
    if s != BigInt::from(-1) || !genus.is_zero() {
        return Err(LatticeError::NotContractible {
            name: name.to_string(),
            self_intersection: s,
            genus,
            step,
            state: classes.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        });
    }
    let mut out = BTreeMap::new();
    for (k, v) in classes {
        if k == name {
            continue;
        }
        let c = v.pair(&e);
        out.insert(k.clone(), v.plus_multiple(&c, &e));
    }
    Ok(out)
}

impl ContractionPlan {
    /// Replays the plan, checking the (-1) precondition at every step.
    pub fn run(&self) -> Result<ContractionOutcome, LatticeError> {
        let mut classes = self.classes.clone();
        if let Some(t) = &self.track {
            if !classes.contains_key(t) {
                return Err(LatticeError::UnknownClass(t.clone()));
            }
        }
        let mut steps = Vec::new();
        let mut tracked_mults = Vec::new();
        for (i, name) in self.order.iter().enumerate() {
            let e = classes
                .get(name)
                .ok_or_else(|| LatticeError::UnknownClass(name.clone()))?
                .clone();
            let tracked_intersection = self.track.as_ref().map(|t| classes[t].pair(&e));
            classes = contract_step(&classes, name, &self.lattice, i)?;
            if let Some(m) = &tracked_intersection {
                tracked_mults.push(m.clone());
            }
            steps.push(ContractionStep {
                name: name.clone(),
                class: e,
                tracked_intersection,
            });
        }
        let profile = match &self.track {
            Some(t) if self.order.len() == self.lattice.n() => {
                let final_class = &classes[t];
                let sq = final_class.self_intersection();
                if sq.is_negative() {
                    return Err(LatticeError::BadPlan(format!(
                        "tracked class has negative terminal self-intersection {sq}"
                    )));
                }
                let degree = sq.sqrt();
                if &degree * &degree != sq {
                    return Err(LatticeError::BadPlan(format!(
                        "tracked class has non-square terminal self-intersection {sq}"
                    )));
                }
                tracked_mults.reverse();
                Some(PushforwardProfile {
                    degree,
                    multiplicities: tracked_mults,
                })
            }
            _ => None,
        };
        Ok(ContractionOutcome {
            steps,
            final_classes: classes,
            profile,
        })
    }

    /// Profile of the tracked class; requires a full plan (rank drops to 1).
    pub fn pushforward_multiplicity_profile(&self) -> Result<PushforwardProfile, LatticeError> {
        if self.order.len() != self.lattice.n() {
            return Err(LatticeError::RankNotOne);
        }
        let outcome = self.run()?;
        outcome.profile.ok_or(LatticeError::RankNotOne)
    }
}

#[derive(Serialize, Deserialize)]
struct ClassFile {
    d: i64,
    m: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct PlanFile {
    tree: serde_json::Value,
    classes: BTreeMap<String, ClassFile>,
    contract: Vec<String>,
    track: Option<String>,
}

impl ContractionPlan {
    pub fn to_json(&self) -> serde_json::Value {
        let file = PlanFile {
            tree: self.lattice.tree().to_json(),
            classes: self
                .classes
                .iter()
                .map(|(k, v)| {
                    (
                        k.clone(),
                        ClassFile {
                            d: i64::try_from(&v.d).expect("desk-scale degree"),
                            m: v
                                .mults
                                .iter()
                                .map(|m| i64::try_from(m).expect("desk-scale mult"))
                                .collect(),
                        },
                    )
                })
                .collect(),
            contract: self.order.clone(),
            track: self.track.clone(),
        };
        serde_json::to_value(file).expect("plan serialization")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, LatticeError> {
        let file: PlanFile =
            serde_json::from_value(v.clone()).map_err(|e| LatticeError::BadPlan(e.to_string()))?;
        let tree = ProximityTree::from_json(&file.tree).map_err(LatticeError::BadPlan)?;
        let lattice = BlowupLattice::new(tree);
        let n = lattice.n();
        let mut classes = BTreeMap::new();
        for (k, c) in file.classes {
            if c.m.len() != n {
                return Err(LatticeError::SizeMismatch);
            }
            classes.insert(k, DivisorClass::from_ints(c.d, &c.m));
        }
        Ok(ContractionPlan {
            lattice,
            classes,
            order: file.contract,
            track: file.track,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::ClusterNode;

    /// Chain lattice of n free points (each proximate only to its parent).
    fn free_chain(n: usize) -> BlowupLattice {
        let nodes = (0..n)
            .map(|i| ClusterNode {
                id: i,
                parent: i.checked_sub(1),
                proper_point: None,
                chart_coord: None,
                multiplicity: 1,
                proximate_to: i.checked_sub(1).into_iter().collect(),
            })
            .collect();
        BlowupLattice::new(ProximityTree { nodes })
    }

    #[test]
    fn exceptional_classes_and_proximity() {
        let l = free_chain(3);
        // Free last point: E_2 = ē_2 with self-intersection -1.
        let e2 = l.exceptional_class(2);
        assert_eq!(e2.self_intersection(), BigInt::from(-1));
        // Interior point with one successor: ē_i - ē_{i+1}, square -2.
        let e1 = l.exceptional_class(1);
        assert_eq!(e1.self_intersection(), BigInt::from(-2));

        // Cross-check against the proximity matrix: the strict transform of
        // E_i is the i-th column of P in the ē-basis.
        let p = l.tree().proximity_matrix();
        for i in 0..3 {
            let ei = l.exceptional_class(i);
            for j in 0..3 {
                assert_eq!(ei.mults[j], BigInt::from(-p[j][i]));
            }
        }
    }

    #[test]
    fn curve_classes_and_genus() {
        let l = free_chain(7);
        let c = l.curve_class(2, &[1, 1, 1, 1, 1, 0, 0]).unwrap();
        assert_eq!(c.self_intersection(), BigInt::from(-1));
        let c8 = l.curve_class(8, &[3; 7]).unwrap();
        assert_eq!(c8.self_intersection(), BigInt::from(1));
        assert!(l.adjunction_genus(&c8).is_zero());
        assert_eq!(l.line_class().self_intersection(), BigInt::one());
        assert!(l.adjunction_genus(&l.line_class()).is_zero());
        assert_eq!(l.canonical_class().self_intersection(), BigInt::from(9 - 7));
        let l6 = free_chain(6);
        let q = l6.curve_class(5, &[2; 6]).unwrap();
        assert!(l6.adjunction_genus(&q).is_zero());
    }

    #[test]
    fn pairwise_intersections() {
        let l = free_chain(4);
        let h = l.line_class();
        let e1 = l.total_transform(1);
        assert_eq!(h.pair(&e1), BigInt::zero());
        // C·E_k = m_k - (sum over proximate successors of the chain).
        let c = l.curve_class(3, &[2, 2, 1, 0]).unwrap();
        let e2 = l.exceptional_class(2);
        assert_eq!(c.pair(&e2), BigInt::one());
        let e3 = l.exceptional_class(3);
        assert_eq!(c.pair(&e3), BigInt::zero());
    }

    #[test]
    fn minus_one_tower_checks() {
        // Quintic (2_(6)) extended by unit points: 25 - 24 - k = -1 at k = 2.
        let ext = extend_to_minus_one(5, &[2; 6]).unwrap();
        assert_eq!(ext.len(), 8);
        let l = free_chain(8);
        let c = l.curve_class(5, &ext).unwrap();
        assert!(verify_minus_one_tower(&l, &c).ok);

        // Cuspidal cubic: 9 - 4 - 6 = -1, chain of 7.
        let ext = extend_to_minus_one(3, &[2]).unwrap();
        assert_eq!(ext.len(), 7);
        let l = free_chain(7);
        let c = l.curve_class(3, &ext).unwrap();
        assert!(verify_minus_one_tower(&l, &c).ok);

        // Terminal self-intersection 0 is not a (-1)-tower.
        let l = free_chain(4);
        let c = l.curve_class(2, &[1, 1, 1, 1]).unwrap();
        let check = verify_minus_one_tower(&l, &c);
        assert!(!check.ok);
        assert_eq!(check.terminal_self_intersection, BigInt::zero());
    }

    #[test]
    fn snc_checks() {
        let l = free_chain(4);
        let classes: Vec<DivisorClass> = (0..4).map(|i| l.exceptional_class(i)).collect();
        assert!(snc_tree_check(&classes).ok);

        // Tangency (pairwise product 2) fails.
        let a = DivisorClass::from_ints(2, &[1, 1, 0, 0]);
        let c = DivisorClass::from_ints(2, &[0, 0, 1, 1]);
        assert_eq!(a.pair(&c), BigInt::from(4));
        let check = snc_tree_check(&[a, c]);
        assert!(!check.ok);
        assert!(!check.transverse);
    }

    #[test]
    fn contraction_round_trip_recovers_profile() {
        // Contracting the curve's own resolution recovers (degree, mults).
        let l = free_chain(8);
        let mults = extend_to_minus_one(5, &[2; 6]).unwrap();
        let mut classes = BTreeMap::new();
        classes.insert("C".to_string(), l.curve_class(5, &mults).unwrap());
        let mut order = Vec::new();
        for i in (0..8).rev() {
            let name = format!("E{i}");
            classes.insert(name.clone(), l.exceptional_class(i));
            order.push(name);
        }
        let plan = ContractionPlan {
            lattice: l,
            classes,
            order,
            track: Some("C".to_string()),
        };
        let profile = plan.pushforward_multiplicity_profile().unwrap();
        assert_eq!(profile.degree, BigInt::from(5));
        let expect: Vec<BigInt> = mults.iter().map(|&m| BigInt::from(m)).collect();
        assert_eq!(profile.multiplicities, expect);
        assert_eq!(profile.sequence_entries(), vec![2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn not_contractible_reports_obstruction() {
        let l = free_chain(2);
        let mut classes = BTreeMap::new();
        // E_0 = ē_0 - ē_1 is a (-2)-class while node 1 sits above it.
        classes.insert("E0".to_string(), l.exceptional_class(0));
        match contract_step(&classes, "E0", &l, 0) {
            Err(LatticeError::NotContractible {
                self_intersection, ..
            }) => assert_eq!(self_intersection, BigInt::from(-2)),
            other => panic!("expected NotContractible, got {other:?}"),
        }
    }

    #[test]
    fn conservation_under_contraction() {
        let l = free_chain(5);
        let mut classes = BTreeMap::new();
        classes.insert("K".to_string(), l.canonical_class());
        classes.insert("A".to_string(), l.curve_class(1, &[1, 1, 0, 0, 0]).unwrap());
        classes.insert("B".to_string(), l.curve_class(1, &[0, 1, 1, 0, 0]).unwrap());
        classes.insert("E4".to_string(), l.exceptional_class(4));
        let before_ab = classes["A"].pair(&classes["B"]);
        let k2_before = classes["K"].self_intersection();
        let genus_a = l.adjunction_genus(&classes["A"]);
        let after = contract_step(&classes, "E4", &l, 0).unwrap();
        // A and B do not meet E4: pairings and classes unchanged.
        assert_eq!(after["A"], classes["A"]);
        assert_eq!(after["A"].pair(&after["B"]), before_ab);
        // K² increases by exactly 1 and adjunction genus (computed against
        // the pushed-forward canonical class) is invariant.
        assert_eq!(after["K"].self_intersection(), k2_before + BigInt::one());
        let num = after["A"].self_intersection() + after["A"].pair(&after["K"]);
        let genus_after = Rational::new(num + BigInt::from(2), BigInt::from(2));
        assert_eq!(genus_a, genus_after);
    }

    #[test]
    fn plan_json_round_trip() {
        let l = free_chain(3);
        let mut classes = BTreeMap::new();
        classes.insert("C".to_string(), l.curve_class(2, &[1, 1, 1]).unwrap());
        for i in 0..3 {
            classes.insert(format!("E{i}"), l.exceptional_class(i));
        }
        let plan = ContractionPlan {
            lattice: l,
            classes,
            order: vec!["E2".into(), "E1".into(), "E0".into()],
            track: Some("C".to_string()),
        };
        let json = plan.to_json();
        let back = ContractionPlan::from_json(&json).unwrap();
        assert_eq!(back.order, plan.order);
        let p1 = plan.pushforward_multiplicity_profile().unwrap();
        let p2 = back.pushforward_multiplicity_profile().unwrap();
        assert_eq!(p1, p2);
    }
}
