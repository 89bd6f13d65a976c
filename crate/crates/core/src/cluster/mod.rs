//! Local blow-ups, infinitely near points, multiplicity sequences and
//! proximity.
//!
//! Everything happens in two-variable affine charts with the current center
//! at the origin. Blow-up charts follow the `(x, xy)` / `(xy, y)`
//! convention: chart A substitutes y := x·y (exceptional line x = 0, chart
//! coordinate y = direction), chart B substitutes x := x·y (exceptional
//! line y = 0), which covers the one direction chart A misses.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use serde::{Deserialize, Serialize};

use crate::algebra::{gcd, rational_roots, MultiPoly, Rational};
use crate::geom::{PlaneCurve, ProjPoint};

const UV: [&str; 2] = ["u", "v"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterError {
    PointNotOnCurve,
    /// A center with non-rational coordinates was requested.
    NonRationalCenter,
    /// A singular point of a strict transform is not rational; carries the
    /// chart polynomial whose roots would be needed.
    NonRationalInfinitelyNearPoint { chart_poly: String },
    /// Internal consistency failure in exact division.
    NotDivisible,
    /// Chain length exceeded the genus bound.
    InternalLimit,
}

impl fmt::Display for ClusterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterError::PointNotOnCurve => write!(f, "point does not lie on the curve"),
            ClusterError::NonRationalCenter => write!(f, "blow-up center is not rational"),
            ClusterError::NonRationalInfinitelyNearPoint { chart_poly } => write!(
                f,
                "non-rational infinitely near singular point (chart polynomial {chart_poly})"
            ),
            ClusterError::NotDivisible => write!(f, "strict transform division failed"),
            ClusterError::InternalLimit => write!(f, "blow-up chain exceeded the genus bound"),
        }
    }
}

impl std::error::Error for ClusterError {}

/// One infinitely near (or proper root) point of a cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterNode {
    pub id: usize,
    pub parent: Option<usize>,
    /// Roots carry the proper point.
    pub proper_point: Option<ProjPoint>,
    /// Position on the parent's exceptional line: chart A coordinate, or
    /// `None` for the chart-B direction.
    pub chart_coord: Option<Option<Rational>>,
    pub multiplicity: u32,
    pub proximate_to: BTreeSet<usize>,
}

/// Rooted forest of infinitely near points with proximity relations,
/// topologically ordered (parents before children).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ProximityTree {
    pub nodes: Vec<ClusterNode>,
}

#[derive(Serialize, Deserialize)]
struct NodeFile {
    id: usize,
    parent: Option<usize>,
    mult: u32,
    prox: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TreeFile {
    nodes: Vec<NodeFile>,
}

impl ProximityTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Lower-triangular proximity matrix: 1 on the diagonal, -1 at (i, j)
    /// when node i is proximate to node j.
    pub fn proximity_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.nodes.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, node) in self.nodes.iter().enumerate() {
            m[i][i] = 1;
            for &j in &node.proximate_to {
                m[i][j] = -1;
            }
        }
        m
    }

    /// True when the nodes form a single chain: node i+1 is a child of i.
    pub fn is_chain(&self) -> bool {
        self.nodes
            .iter()
            .enumerate()
            .all(|(i, n)| n.parent == i.checked_sub(1).filter(|_| i > 0))
    }

    /// Proximity inequality: each node's multiplicity is at least the sum of
    /// the multiplicities of nodes proximate to it.
    pub fn satisfies_proximity_inequality(&self) -> bool {
        self.nodes.iter().all(|n| {
            let s: u64 = self
                .nodes
                .iter()
                .filter(|q| q.proximate_to.contains(&n.id))
                .map(|q| q.multiplicity as u64)
                .sum();
            n.multiplicity as u64 >= s
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let file = TreeFile {
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeFile {
                    id: n.id,
                    parent: n.parent,
                    mult: n.multiplicity,
                    prox: n.proximate_to.iter().copied().collect(),
                })
                .collect(),
        };
        serde_json::to_value(file).expect("tree serialization")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let file: TreeFile = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        let mut nodes = Vec::new();
        for (i, n) in file.nodes.iter().enumerate() {
            if n.id != i {
                return Err("node ids must be 0..n in order".to_string());
            }
            if let Some(p) = n.parent {
                if p >= i {
                    return Err("parents must precede children".to_string());
                }
            }
            nodes.push(ClusterNode {
                id: n.id,
                parent: n.parent,
                proper_point: None,
                chart_coord: None,
                multiplicity: n.mult,
                proximate_to: n.prox.iter().copied().collect(),
            });
        }
        Ok(ProximityTree { nodes })
    }
}

/// Multiplicity sequence of a singular point: the non-increasing list of
/// multiplicities (entries >= 2) along the chain of infinitely near singular
/// points, together with the proximity data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicitySequence {
    pub entries: Vec<u32>,
    pub tree: ProximityTree,
    /// True when some strict transform had more than one singular point;
    /// `entries` then follows the deterministic depth-first order and is not
    /// a chain in the strict sense.
    pub branching: bool,
}

/// Full output of resolving one point of a curve.
#[derive(Clone, Debug)]
pub struct PointResolution {
    pub sequence: MultiplicitySequence,
    /// Number of points of the smooth strict transform lying over the
    /// starting point (1 for cusps and smooth points).
    pub branches: u32,
}

/// Both chart strict transforms of one blow-up at an affine center.
#[derive(Clone, Debug)]
pub struct BlowUpCharts {
    /// Strict transform in chart (x, xy); exceptional line u = 0.
    pub chart_a: MultiPoly,
    /// Strict transform in chart (xy, y); exceptional line v = 0.
    pub chart_b: MultiPoly,
    pub multiplicity: u32,
}

fn chart_a_total(f: &MultiPoly) -> MultiPoly {
    let u = MultiPoly::var(&UV, "u").unwrap();
    let v = MultiPoly::var(&UV, "v").unwrap();
    let mut bind = BTreeMap::new();
    bind.insert("v".to_string(), u.mul(&v));
    f.substitute(&bind).expect("chart A substitution")
}

fn chart_b_total(f: &MultiPoly) -> MultiPoly {
    let u = MultiPoly::var(&UV, "u").unwrap();
    let v = MultiPoly::var(&UV, "v").unwrap();
    let mut bind = BTreeMap::new();
    bind.insert("u".to_string(), u.mul(&v));
    f.substitute(&bind).expect("chart B substitution")
}

/// Blows up an affine curve at a center of multiplicity `m`, returning the
/// strict transforms in both charts.
pub fn blow_up_chart(
    f: &MultiPoly,
    center: &(Rational, Rational),
    m: u32,
) -> Result<BlowUpCharts, ClusterError> {
    let centered = f.translate(0, &center.0).translate(1, &center.1);
    let actual = centered.order_at_origin();
    if actual != m || m == 0 {
        return Err(ClusterError::NotDivisible);
    }
    let u = MultiPoly::var(&UV, "u").unwrap();
    let v = MultiPoly::var(&UV, "v").unwrap();
    let ta = chart_a_total(&centered);
    let tb = chart_b_total(&centered);
    let chart_a = ta.exact_divide(&u.pow(m)).map_err(|_| ClusterError::NotDivisible)?;
    let chart_b = tb.exact_divide(&v.pow(m)).map_err(|_| ClusterError::NotDivisible)?;
    Ok(BlowUpCharts {
        chart_a,
        chart_b,
        multiplicity: m,
    })
}

/// Recursion state: strict transform at the origin plus the strict
/// transforms of the ancestor exceptional lines visible in this chart.
struct ChartState {
    f: MultiPoly,
    exceptionals: Vec<(usize, MultiPoly)>,
}

struct Resolver {
    nodes: Vec<ClusterNode>,
    branching: bool,
    fuel: i64,
}

impl Resolver {
    /// Explores the germ of `state.f` at the origin; the origin has
    /// multiplicity >= 2 (singular) except for the root smooth case.
    /// Returns the branch count of the germ.
    fn explore(
        &mut self,
        state: &ChartState,
        parent: Option<usize>,
        proper: Option<ProjPoint>,
        chart_coord: Option<Option<Rational>>,
    ) -> Result<u32, ClusterError> {
        self.fuel -= 1;
        if self.fuel < 0 {
            return Err(ClusterError::InternalLimit);
        }
        let origin = [Rational::zero(), Rational::zero()];
        debug_assert!(state.f.eval(&origin).is_zero());
        let m = state.f.order_at_origin();

        let id = self.nodes.len();
        let mut prox: BTreeSet<usize> = BTreeSet::new();
        if let Some(p) = parent {
            prox.insert(p);
        }
        for (j, e) in &state.exceptionals {
            if e.eval(&origin).is_zero() {
                prox.insert(*j);
            }
        }
        self.nodes.push(ClusterNode {
            id,
            parent,
            proper_point: proper,
            chart_coord,
            multiplicity: m,
            proximate_to: prox,
        });

        if m <= 1 {
            // Smooth germ: one branch, nothing to blow up. This only occurs
            // for a smooth starting point.
            return Ok(1);
        }

        // Blow up the origin.
        let u = MultiPoly::var(&UV, "u").unwrap();
        let v = MultiPoly::var(&UV, "v").unwrap();
        let fa = chart_a_total(&state.f)
            .exact_divide(&u.pow(m))
            .map_err(|_| ClusterError::NotDivisible)?;
        let fb = chart_b_total(&state.f)
            .exact_divide(&v.pow(m))
            .map_err(|_| ClusterError::NotDivisible)?;

        // Transform ancestor exceptionals and add the new one.
        let exc_a: Vec<(usize, MultiPoly)> = {
            let mut out: Vec<(usize, MultiPoly)> = state
                .exceptionals
                .iter()
                .map(|(j, e)| {
                    let t = chart_a_total(e);
                    (*j, t.divide_out_all(&u).0)
                })
                .collect();
            out.push((id, u.clone()));
            out
        };
        let exc_b: Vec<(usize, MultiPoly)> = {
            let mut out: Vec<(usize, MultiPoly)> = state
                .exceptionals
                .iter()
                .map(|(j, e)| {
                    let t = chart_b_total(e);
                    (*j, t.divide_out_all(&v).0)
                })
                .collect();
            out.push((id, v.clone()));
            out
        };

        // Points of the strict transform on the new exceptional line.
        // Chart A: E = {u = 0}, points (0, c); chart B adds only its origin.
        let restriction = fa.eval_partial(0, &Rational::zero());

        // Distinct intersection points over the algebraic closure =
        // degree of the squarefree part (plus possibly the chart-B origin).
        let distinct_roots = {
            let r = restriction.clone();
            if r.is_constant() {
                0
            } else {
                let dr = r.derivative(1);
                let g = gcd(&r, &dr);
                (r.total_degree() - g.total_degree()) as u32
            }
        };

        // Singular points of the strict transform on E must be rational.
        let sing_restr = {
            let s1 = fa.derivative(0).eval_partial(0, &Rational::zero());
            let s2 = fa.derivative(1).eval_partial(0, &Rational::zero());
            gcd(&gcd(&restriction, &s1), &s2)
        };
        let mut singular_coords: Vec<Rational> = Vec::new();
        if !sing_restr.is_constant() {
            let coeffs = sing_restr.to_univariate(1).expect("gcd is univariate");
            let (roots, leftover) = rational_roots(&coeffs);
            if leftover > 0 {
                return Err(ClusterError::NonRationalInfinitelyNearPoint {
                    chart_poly: fa.to_string(),
                });
            }
            singular_coords = roots.into_iter().map(|(r, _)| r).collect();
        }

        let mut branches = distinct_roots - singular_coords.len() as u32;
        let mut singular_here = 0usize;

        for c in singular_coords {
            singular_here += 1;
            let moved_f = fa.translate(1, &c);
            let moved_exc: Vec<(usize, MultiPoly)> = exc_a
                .iter()
                .map(|(j, e)| (*j, e.translate(1, &c)))
                .collect();
            let st = ChartState {
                f: moved_f,
                exceptionals: moved_exc,
            };
            branches += self.explore(&st, Some(id), None, Some(Some(c)))?;
        }

        // Chart B origin: the direction chart A misses.
        let origin_b = [Rational::zero(), Rational::zero()];
        if fb.eval(&origin_b).is_zero() {
            let sing_b = fb.derivative(0).eval(&origin_b).is_zero()
                && fb.derivative(1).eval(&origin_b).is_zero();
            if sing_b {
                singular_here += 1;
                let st = ChartState {
                    f: fb,
                    exceptionals: exc_b,
                };
                branches += self.explore(&st, Some(id), None, Some(None))?;
            } else {
                branches += 1;
            }
        }

        if singular_here > 1 {
            self.branching = true;
        }
        Ok(branches)
    }
}

/// Resolves one rational point of a curve: blows up repeatedly, following
/// singular points of strict transforms, until the strict transform is
/// smooth over the chain.
pub fn resolve_point(curve: &PlaneCurve, start: &ProjPoint) -> Result<PointResolution, ClusterError> {
    if !curve.contains(start) {
        return Err(ClusterError::PointNotOnCurve);
    }
    let local = crate::geom::localize_at(curve.equation(), start);
    let d = curve.degree() as i64;
    let mut resolver = Resolver {
        nodes: Vec::new(),
        branching: false,
        // Genus bound on the chain length, with room for the branch tree.
        fuel: (d - 1) * (d - 2) / 2 + 1 + d,
    };
    let state = ChartState {
        f: local,
        exceptionals: Vec::new(),
    };
    let branches = resolver.explore(&state, None, Some(start.clone()), None)?;

    // Keep only singular nodes (multiplicity >= 2) in the reported tree.
    let singular_ids: Vec<usize> = resolver
        .nodes
        .iter()
        .filter(|n| n.multiplicity >= 2)
        .map(|n| n.id)
        .collect();
    let relabel: BTreeMap<usize, usize> = singular_ids
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let nodes: Vec<ClusterNode> = singular_ids
        .iter()
        .map(|&old| {
            let n = &resolver.nodes[old];
            ClusterNode {
                id: relabel[&old],
                parent: n.parent.and_then(|p| relabel.get(&p).copied()),
                proper_point: n.proper_point.clone(),
                chart_coord: n.chart_coord.clone(),
                multiplicity: n.multiplicity,
                proximate_to: n
                    .proximate_to
                    .iter()
                    .filter_map(|p| relabel.get(p).copied())
                    .collect(),
            }
        })
        .collect();
    let entries: Vec<u32> = nodes.iter().map(|n| n.multiplicity).collect();
    let tree = ProximityTree { nodes };
    Ok(PointResolution {
        sequence: MultiplicitySequence {
            entries,
            tree,
            branching: resolver.branching,
        },
        branches,
    })
}

/// The multiplicity sequence of a curve at a singular rational point.
pub fn multiplicity_sequence(
    curve: &PlaneCurve,
    start: &ProjPoint,
) -> Result<MultiplicitySequence, ClusterError> {
    Ok(resolve_point(curve, start)?.sequence)
}

/// Number of local branches of the curve at a rational point.
pub fn branch_count(curve: &PlaneCurve, p: &ProjPoint) -> Result<u32, ClusterError> {
    Ok(resolve_point(curve, p)?.branches)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s, None).unwrap()
    }

    fn uvpoly(s: &str) -> MultiPoly {
        parse_poly(s, &UV).unwrap()
    }

    #[test]
    fn blow_up_chart_cusp() {
        let f = uvpoly("u^2 - v^3");
        let charts = blow_up_chart(&f, &(rat(0, 1), rat(0, 1)), 2).unwrap();
        // Chart (x, xy): u^2(1 - u v^3), a unit at the origin.
        assert_eq!(charts.chart_a, uvpoly("1 - u*v^3"));
        // Chart (xy, y): v^2(u^2 - v).
        assert_eq!(charts.chart_b, uvpoly("u^2 - v"));

        // Blow-down reproduces the total transform exactly.
        let u = MultiPoly::var(&UV, "u").unwrap();
        assert_eq!(charts.chart_a.mul(&u.pow(2)), chart_a_total(&f));
    }

    #[test]
    fn blow_up_chart_node() {
        let f = uvpoly("u*v");
        let charts = blow_up_chart(&f, &(rat(0, 1), rat(0, 1)), 2).unwrap();
        // Strict transforms meet the exceptional line in two distinct points.
        assert_eq!(charts.chart_a, uvpoly("v"));
        assert_eq!(charts.chart_b, uvpoly("u"));
        // Wrong multiplicity is rejected.
        assert!(blow_up_chart(&f, &(rat(0, 1), rat(0, 1)), 1).is_err());
    }

    #[test]
    fn cuspidal_cubic_sequence() {
        let res = resolve_point(&curve("x^2*z - y^3"), &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(res.sequence.entries, vec![2]);
        assert!(!res.sequence.branching);
        assert_eq!(res.branches, 1);
    }

    #[test]
    fn nodal_cubic_sequence() {
        let res =
            resolve_point(&curve("x^2*z - y^3 - y^2*z"), &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(res.sequence.entries, vec![2]);
        assert_eq!(res.branches, 2);
    }

    #[test]
    fn quintic_sequence_is_two_six() {
        let q = curve("(xz+y^2)((xz+y^2)z + 2x^2y) - x^5");
        let res = resolve_point(&q, &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(res.sequence.entries, vec![2, 2, 2, 2, 2, 2]);
        assert!(res.sequence.tree.is_chain());
        assert!(!res.sequence.branching);
        assert_eq!(res.branches, 1);
        assert!(res.sequence.tree.satisfies_proximity_inequality());
    }

    #[test]
    fn tacnode_like_sequence() {
        // u^2 = v^5 has multiplicity sequence (2, 2): an A4 double point.
        let c = curve("x^2*z^3 - y^5");
        let res = resolve_point(&c, &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(res.sequence.entries, vec![2, 2]);
        assert_eq!(res.branches, 1);
    }

    #[test]
    fn proximity_matrix_shapes() {
        // Chain of three free points.
        let tree = ProximityTree {
            nodes: (0..3)
                .map(|i| ClusterNode {
                    id: i,
                    parent: i.checked_sub(1),
                    proper_point: None,
                    chart_coord: None,
                    multiplicity: 2,
                    proximate_to: i.checked_sub(1).into_iter().collect(),
                })
                .collect(),
        };
        assert_eq!(
            tree.proximity_matrix(),
            vec![vec![1, 0, 0], vec![-1, 1, 0], vec![0, -1, 1]]
        );

        // Satellite: node 2 proximate to both 0 and 1.
        let mut sat = tree.clone();
        sat.nodes[2].proximate_to.insert(0);
        assert_eq!(
            sat.proximity_matrix(),
            vec![vec![1, 0, 0], vec![-1, 1, 0], vec![-1, -1, 1]]
        );

        let single = ProximityTree {
            nodes: vec![ClusterNode {
                id: 0,
                parent: None,
                proper_point: None,
                chart_coord: None,
                multiplicity: 3,
                proximate_to: BTreeSet::new(),
            }],
        };
        assert_eq!(single.proximity_matrix(), vec![vec![1]]);
    }

    #[test]
    fn tree_json_round_trip() {
        let q = curve("(xz+y^2)((xz+y^2)z + 2x^2y) - x^5");
        let res = resolve_point(&q, &ProjPoint::from_ints(0, 0, 1)).unwrap();
        let json = res.sequence.tree.to_json();
        let back = ProximityTree::from_json(&json).unwrap();
        assert_eq!(back.len(), 6);
        assert_eq!(back.proximity_matrix(), res.sequence.tree.proximity_matrix());
    }

    #[test]
    fn genus_consistency_for_rational_corpus() {
        // (d-1)(d-2)/2 = sum m(m-1)/2 for the rational curves with all
        // singular data at one rational point.
        for (eq, pt) in [
            ("x^2*z - y^3", ProjPoint::from_ints(0, 0, 1)),
            ("x^2*z - y^3 - y^2*z", ProjPoint::from_ints(0, 0, 1)),
            (
                "(xz+y^2)((xz+y^2)z + 2x^2y) - x^5",
                ProjPoint::from_ints(0, 0, 1),
            ),
        ] {
            let c = curve(eq);
            let res = resolve_point(&c, &pt).unwrap();
            let d = c.degree() as i64;
            let delta: i64 = res
                .sequence
                .entries
                .iter()
                .map(|&m| (m as i64) * (m as i64 - 1))
                .sum();
            assert_eq!((d - 1) * (d - 2), delta, "genus mismatch for {eq}");
        }
    }
}
