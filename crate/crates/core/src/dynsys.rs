//! Built-in torus maps with exact invariant splittings.
//!
//! Every system lives on the d-torus (d in {2,3,4}) and carries an ordered
//! splitting into one-dimensional bundles, strongest expansion first. The
//! bundle directions are constant vectors, so log-derivatives along them
//! have closed forms and no numerical bundle estimation is needed:
//!
//! * `cat2`   — the automorphism `[[2,1],[1,1]]` of T²; unstable/stable only.
//! * `catrot` — `cat2 × (θ ↦ θ + ρ)` on T³ with `ρ = (√5−1)/2`; the fiber is
//!   an isometry, so the center log-derivative vanishes identically.
//! * `catns`  — `cat2 × (θ ↦ θ + ε sin 2πθ)` on T³; the fiber has a
//!   repelling circle at θ=0 and an attracting one at θ=1/2.
//! * `lin4`   — the block automorphism `[[3,2],[1,1]] ⊕ [[2,1],[1,1]]` of T⁴
//!   with the four eigendirections ordered 2+√3 > (3+√5)/2 > (3−√5)/2 > 2−√3.

use crate::error::{Error, Result};
use crate::measures::{ReferenceMeasure, TorusPoint};
use crate::seeding::SplitMix64;
use crate::timesets::RealSequence;

const TAU: f64 = std::f64::consts::TAU;

/// Largest fiber strength accepted for `catns`; beyond it the domination
/// margin over the stable direction thins out and the fiber derivative
/// heads toward zero.
pub const CATNS_MAX_EPSILON: f64 = 0.05;

pub const CATNS_DEFAULT_EPSILON: f64 = 0.01;

/// Optional construction parameters, system-specific.
#[derive(Debug, Clone, Copy, Default, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemParams {
    /// Fiber strength for `catns`.
    pub epsilon: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Cat2,
    CatRot,
    CatNs,
    Lin4,
}

#[derive(Debug, Clone, Copy)]
enum Obs {
    Const(f64),
    /// `θ ↦ log(1 + 2πε cos 2πθ)` evaluated on the last coordinate.
    FiberLogDeriv { eps: f64 },
}

/// A validated torus map with its splitting and observables.
///
/// Observable `i` for `i = 0, …, k+1` is the log-derivative along the i-th
/// bundle (0 = unstable, 1..k = centers, k+1 = stable); the construction
/// re-checks bundle invariance and pointwise domination on random points.
#[derive(Debug, Clone)]
pub struct SystemSpec {
    kind: Kind,
    dim: usize,
    centers: usize,
    eps: f64,
    observables: Vec<Obs>,
    directions: Vec<[f64; 4]>,
}

fn unit2(x: f64, y: f64) -> [f64; 4] {
    let norm = (x * x + y * y).sqrt();
    [x / norm, y / norm, 0.0, 0.0]
}

fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    // values landing in [1 - 1e-15, 1) wrap to 0
    if f >= 1.0 - 1e-15 {
        0.0
    } else {
        f
    }
}

impl SystemSpec {
    /// Builds a named system and runs the invariance and domination
    /// self-checks once.
    pub fn make(name: &str, params: &SystemParams) -> Result<SystemSpec> {
        let sqrt5 = 5f64.sqrt();
        let sqrt3 = 3f64.sqrt();
        let lam_u = (3.0 + sqrt5) / 2.0;
        let lam_s = (3.0 - sqrt5) / 2.0;
        let cat_u = unit2(1.0, (sqrt5 - 1.0) / 2.0);
        let cat_s = unit2(1.0, -(1.0 + sqrt5) / 2.0);
        let spec = match name {
            "cat2" => SystemSpec {
                kind: Kind::Cat2,
                dim: 2,
                centers: 0,
                eps: 0.0,
                observables: vec![Obs::Const(lam_u.ln()), Obs::Const(lam_s.ln())],
                directions: vec![cat_u, cat_s],
            },
            "catrot" => {
                let embed = |v: [f64; 4]| [v[0], v[1], 0.0, 0.0];
                SystemSpec {
                    kind: Kind::CatRot,
                    dim: 3,
                    centers: 1,
                    eps: 0.0,
                    observables: vec![
                        Obs::Const(lam_u.ln()),
                        Obs::Const(0.0),
                        Obs::Const(lam_s.ln()),
                    ],
                    directions: vec![embed(cat_u), [0.0, 0.0, 1.0, 0.0], embed(cat_s)],
                }
            }
            "catns" => {
                let eps = params.epsilon.unwrap_or(CATNS_DEFAULT_EPSILON);
                if !(eps > 0.0 && eps <= CATNS_MAX_EPSILON) {
                    return Err(Error::InvalidParameter(format!(
                        "catns epsilon must lie in (0, {CATNS_MAX_EPSILON}], got {eps}"
                    )));
                }
                let embed = |v: [f64; 4]| [v[0], v[1], 0.0, 0.0];
                SystemSpec {
                    kind: Kind::CatNs,
                    dim: 3,
                    centers: 1,
                    eps,
                    observables: vec![
                        Obs::Const(lam_u.ln()),
                        Obs::FiberLogDeriv { eps },
                        Obs::Const(lam_s.ln()),
                    ],
                    directions: vec![embed(cat_u), [0.0, 0.0, 1.0, 0.0], embed(cat_s)],
                }
            }
            "lin4" => {
                let block1_u = unit2(1.0, (sqrt3 - 1.0) / 2.0);
                let block1_s = unit2(1.0, -(1.0 + sqrt3) / 2.0);
                let lift = |v: [f64; 4]| [0.0, 0.0, v[0], v[1]];
                SystemSpec {
                    kind: Kind::Lin4,
                    dim: 4,
                    centers: 2,
                    eps: 0.0,
                    observables: vec![
                        Obs::Const((2.0 + sqrt3).ln()),
                        Obs::Const(lam_u.ln()),
                        Obs::Const(lam_s.ln()),
                        Obs::Const((2.0 - sqrt3).ln()),
                    ],
                    directions: vec![block1_u, lift(cat_u), lift(cat_s), block1_s],
                }
            }
            other => return Err(Error::UnknownSystem(other.to_string())),
        };
        spec.self_check()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            Kind::Cat2 => "cat2",
            Kind::CatRot => "catrot",
            Kind::CatNs => "catns",
            Kind::Lin4 => "lin4",
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of one-dimensional center bundles (`k`).
    pub fn center_count(&self) -> usize {
        self.centers
    }

    /// Observables are indexed `0..=k+1`.
    pub fn observable_count(&self) -> usize {
        self.centers + 2
    }

    pub fn epsilon(&self) -> f64 {
        self.eps
    }

    /// One application of the map; coordinates reduced mod 1 into `[0,1)`.
    pub fn apply(&self, p: &TorusPoint) -> TorusPoint {
        let c = p.raw();
        let out = match self.kind {
            Kind::Cat2 => [frac(2.0 * c[0] + c[1]), frac(c[0] + c[1]), 0.0, 0.0],
            Kind::CatRot => [
                frac(2.0 * c[0] + c[1]),
                frac(c[0] + c[1]),
                frac(c[2] + (5f64.sqrt() - 1.0) / 2.0),
                0.0,
            ],
            Kind::CatNs => [
                frac(2.0 * c[0] + c[1]),
                frac(c[0] + c[1]),
                frac(c[2] + self.eps * (TAU * c[2]).sin()),
                0.0,
            ],
            Kind::Lin4 => [
                frac(3.0 * c[0] + 2.0 * c[1]),
                frac(c[0] + c[1]),
                frac(2.0 * c[2] + c[3]),
                frac(c[2] + c[3]),
            ],
        };
        TorusPoint::from_raw(self.dim, out)
    }

    /// Differential at `p` applied to a tangent vector.
    pub fn differential(&self, p: &TorusPoint, v: [f64; 4]) -> [f64; 4] {
        match self.kind {
            Kind::Cat2 => [2.0 * v[0] + v[1], v[0] + v[1], 0.0, 0.0],
            Kind::CatRot => [2.0 * v[0] + v[1], v[0] + v[1], v[2], 0.0],
            Kind::CatNs => {
                let fiber = 1.0 + TAU * self.eps * (TAU * p.raw()[2]).cos();
                [2.0 * v[0] + v[1], v[0] + v[1], fiber * v[2], 0.0]
            }
            Kind::Lin4 => [
                3.0 * v[0] + 2.0 * v[1],
                v[0] + v[1],
                2.0 * v[2] + v[3],
                v[2] + v[3],
            ],
        }
    }

    /// Unit direction of bundle `i` (constant for every built-in).
    pub fn bundle_direction(&self, i: usize) -> Result<[f64; 4]> {
        self.directions
            .get(i)
            .copied()
            .ok_or(Error::ObservableIndex {
                index: i,
                max: self.observable_count() - 1,
            })
    }

    /// The constant unit unstable direction, when the system has one.
    pub fn constant_unstable_direction(&self) -> Option<[f64; 4]> {
        Some(self.directions[0])
    }

    /// Log-derivative along bundle `i` at `p`.
    pub fn observable(&self, i: usize, p: &TorusPoint) -> Result<f64> {
        let obs = self.observables.get(i).ok_or(Error::ObservableIndex {
            index: i,
            max: self.observable_count() - 1,
        })?;
        Ok(Self::eval_obs(obs, p))
    }

    fn eval_obs(obs: &Obs, p: &TorusPoint) -> f64 {
        match *obs {
            Obs::Const(c) => c,
            Obs::FiberLogDeriv { eps } => (1.0 + TAU * eps * (TAU * p.raw()[2]).cos()).ln(),
        }
    }

    /// Sup norm of observable `i` over the torus, in closed form.
    pub fn observable_sup_norm(&self, i: usize) -> Result<f64> {
        let obs = self.observables.get(i).ok_or(Error::ObservableIndex {
            index: i,
            max: self.observable_count() - 1,
        })?;
        Ok(match *obs {
            Obs::Const(c) => c.abs(),
            // |log(1±2πε)| peaks on the contracting side
            Obs::FiberLogDeriv { eps } => -(1.0 - TAU * eps).ln(),
        })
    }

    /// Sum of the observables `0..=i`: the log-Jacobian along the span of
    /// the strongest `i+1` bundles.
    pub fn log_jacobian_upper(&self, i: usize, p: &TorusPoint) -> Result<f64> {
        if i >= self.observable_count() {
            return Err(Error::ObservableIndex {
                index: i,
                max: self.observable_count() - 1,
            });
        }
        Ok(self.observables[..=i]
            .iter()
            .map(|o| Self::eval_obs(o, p))
            .sum())
    }

    /// `[x0, f(x0), …, f^{n-1}(x0)]`.
    pub fn orbit(&self, x0: &TorusPoint, n: usize) -> Vec<TorusPoint> {
        let mut out = Vec::with_capacity(n);
        let mut x = *x0;
        for _ in 0..n {
            out.push(x);
            x = self.apply(&x);
        }
        out
    }

    /// The sequence `(φ_i(f^k x0))_{k < n}`.
    pub fn observable_sequence(&self, x0: &TorusPoint, n: usize, i: usize) -> Result<RealSequence> {
        if i >= self.observable_count() {
            return Err(Error::ObservableIndex {
                index: i,
                max: self.observable_count() - 1,
            });
        }
        let obs = self.observables[i];
        let mut values = Vec::with_capacity(n);
        let mut x = *x0;
        for _ in 0..n {
            values.push(Self::eval_obs(&obs, &x));
            x = self.apply(&x);
        }
        RealSequence::new(values)
    }

    pub fn observable_sequence_from_orbit(
        &self,
        orbit: &[TorusPoint],
        i: usize,
    ) -> Result<RealSequence> {
        if i >= self.observable_count() {
            return Err(Error::ObservableIndex {
                index: i,
                max: self.observable_count() - 1,
            });
        }
        let obs = self.observables[i];
        RealSequence::new(orbit.iter().map(|x| Self::eval_obs(&obs, x)).collect())
    }

    /// Average of observable `i` over steps `burn_in..n`.
    pub fn finite_time_exponent(
        &self,
        x0: &TorusPoint,
        n: usize,
        i: usize,
        burn_in: usize,
    ) -> Result<f64> {
        if n <= burn_in {
            return Err(Error::InvalidParameter(format!(
                "need n > burn_in, got n={n}, burn_in={burn_in}"
            )));
        }
        if i >= self.observable_count() {
            return Err(Error::ObservableIndex {
                index: i,
                max: self.observable_count() - 1,
            });
        }
        let obs = self.observables[i];
        let mut x = *x0;
        for _ in 0..burn_in {
            x = self.apply(&x);
        }
        let mut sum = 0.0;
        for _ in burn_in..n {
            sum += Self::eval_obs(&obs, &x);
            x = self.apply(&x);
        }
        Ok(sum / (n - burn_in) as f64)
    }

    /// The invariant measure generic orbits are compared against.
    pub fn reference_measure(&self) -> ReferenceMeasure {
        match self.kind {
            Kind::Cat2 | Kind::CatRot | Kind::Lin4 => ReferenceMeasure::Haar,
            Kind::CatNs => ReferenceMeasure::BaseTimesCircleAtom { theta: 0.5 },
        }
    }

    /// Whether the map preserves volume (catns contracts along its fiber).
    pub fn is_volume_preserving(&self) -> bool {
        !matches!(self.kind, Kind::CatNs)
    }

    /// Bundle invariance and pointwise domination at random points.
    pub fn self_check(&self) -> Result<()> {
        let mut rng = SplitMix64::new(0x5E1F_C4EC);
        for _ in 0..256 {
            let p = random_point(self.dim, &mut rng);
            self.check_at(&p)?;
        }
        Ok(())
    }

    /// Runs both splitting checks at a single point.
    pub fn check_at(&self, p: &TorusPoint) -> Result<()> {
        let fp = self.apply(p);
        for (i, &v) in self.directions.iter().enumerate() {
            let w = self.differential(p, v);
            let target = self.directions[i];
            let dot: f64 = (0..4).map(|j| w[j] * target[j]).sum();
            let norm: f64 = (0..4).map(|j| w[j] * w[j]).sum::<f64>().sqrt();
            let residual: f64 = (0..4)
                .map(|j| (w[j] - dot * target[j]).powi(2))
                .sum::<f64>()
                .sqrt();
            if residual > 1e-12 * norm.max(1.0) {
                return Err(Error::UnsupportedSystem(format!(
                    "bundle {i} of {} is not invariant at {:?}",
                    self.name(),
                    p.coords()
                )));
            }
            // one-step expansion along the bundle must match the observable
            let logd = norm.ln();
            let obs = self.observable(i, p)?;
            if (logd - obs).abs() > 1e-12 {
                return Err(Error::UnsupportedSystem(format!(
                    "observable {i} of {} disagrees with |Df| along its bundle",
                    self.name()
                )));
            }
        }
        for i in 0..self.observable_count() - 1 {
            if self.observable(i, p)? <= self.observable(i + 1, p)? {
                return Err(Error::UnsupportedSystem(format!(
                    "domination order fails between bundles {i} and {} of {}",
                    i + 1,
                    self.name()
                )));
            }
        }
        let _ = fp;
        Ok(())
    }
}

/// Uniform random point on the d-torus.
pub fn random_point(dim: usize, rng: &mut SplitMix64) -> TorusPoint {
    let mut c = [0.0f64; 4];
    for slot in c.iter_mut().take(dim) {
        *slot = rng.next_f64();
    }
    TorusPoint::from_raw(dim, c)
}

/// Orbit dump: one row per point, `k` then the coordinates.
pub fn orbit_to_csv(orbit: &[TorusPoint]) -> String {
    let mut out = String::new();
    if let Some(first) = orbit.first() {
        out.push('k');
        for i in 0..first.dim() {
            out.push_str(&format!(",c{i}"));
        }
        out.push('\n');
    }
    for (k, p) in orbit.iter().enumerate() {
        out.push_str(&format!("{k}"));
        for c in p.coords() {
            out.push_str(&format!(",{}", crate::fmt_f64(*c)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[f64]) -> TorusPoint {
        TorusPoint::new(coords).unwrap()
    }

    #[test]
    fn known_systems_build() {
        for name in ["cat2", "catrot", "catns", "lin4"] {
            let sys = SystemSpec::make(name, &SystemParams::default()).unwrap();
            assert_eq!(sys.name(), name);
        }
        assert!(matches!(
            SystemSpec::make("horseshoe", &SystemParams::default()),
            Err(Error::UnknownSystem(_))
        ));
    }

    #[test]
    fn cat2_has_no_centers() {
        let sys = SystemSpec::make("cat2", &SystemParams::default()).unwrap();
        assert_eq!(sys.dim(), 2);
        assert_eq!(sys.center_count(), 0);
    }

    #[test]
    fn catns_rejects_large_epsilon() {
        let params = SystemParams { epsilon: Some(0.2) };
        assert!(matches!(
            SystemSpec::make("catns", &params),
            Err(Error::InvalidParameter(_))
        ));
        let ok = SystemParams {
            epsilon: Some(0.01),
        };
        assert!(SystemSpec::make("catns", &ok).is_ok());
    }

    #[test]
    fn cat2_fixed_point_orbit_is_constant() {
        let sys = SystemSpec::make("cat2", &SystemParams::default()).unwrap();
        let orbit = sys.orbit(&pt(&[0.0, 0.0]), 5);
        assert!(orbit.iter().all(|p| p.coords() == [0.0, 0.0]));
    }

    #[test]
    fn cat2_period_three_cycle() {
        let sys = SystemSpec::make("cat2", &SystemParams::default()).unwrap();
        let orbit = sys.orbit(&pt(&[0.5, 0.5]), 4);
        assert_eq!(orbit[1].coords(), [0.5, 0.0]);
        assert_eq!(orbit[2].coords(), [0.0, 0.5]);
        assert_eq!(orbit[3].coords(), [0.5, 0.5]);
    }

    #[test]
    fn catrot_fiber_is_rotation() {
        let sys = SystemSpec::make("catrot", &SystemParams::default()).unwrap();
        let rho = (5f64.sqrt() - 1.0) / 2.0;
        let orbit = sys.orbit(&pt(&[0.3, 0.7, 0.2]), 10);
        for (k, p) in orbit.iter().enumerate() {
            let expected = (0.2 + k as f64 * rho).rem_euclid(1.0);
            assert!((p.coords()[2] - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn observable_values() {
        let lam_u = (3.0 + 5f64.sqrt()) / 2.0;
        let cat = SystemSpec::make("cat2", &SystemParams::default()).unwrap();
        let x = pt(&[0.123, 0.456]);
        assert!((cat.observable(0, &x).unwrap() - lam_u.ln()).abs() < 1e-15);

        let rot = SystemSpec::make("catrot", &SystemParams::default()).unwrap();
        assert_eq!(rot.observable(1, &pt(&[0.1, 0.2, 0.9])).unwrap(), 0.0);

        let ns = SystemSpec::make("catns", &SystemParams::default()).unwrap();
        let on_circle = pt(&[0.1, 0.2, 0.5]);
        let expected = (1.0 - TAU * 0.01).ln();
        assert!((ns.observable(1, &on_circle).unwrap() - expected).abs() < 1e-12);

        assert!(cat.observable(5, &x).is_err());
    }

    #[test]
    fn finite_time_exponents_of_constant_observables() {
        let rot = SystemSpec::make("catrot", &SystemParams::default()).unwrap();
        let e = rot
            .finite_time_exponent(&pt(&[0.3, 0.1, 0.7]), 2000, 1, 100)
            .unwrap();
        assert_eq!(e, 0.0);

        let lin = SystemSpec::make("lin4", &SystemParams::default()).unwrap();
        let e1 = lin
            .finite_time_exponent(&pt(&[0.11, 0.29, 0.53, 0.71]), 2000, 1, 0)
            .unwrap();
        assert!((e1 - ((3.0 + 5f64.sqrt()) / 2.0).ln()).abs() < 1e-12);

        assert!(rot.finite_time_exponent(&pt(&[0.1, 0.1, 0.1]), 10, 1, 10).is_err());
    }

    #[test]
    fn catns_attracting_circle_exponent() {
        let sys = SystemSpec::make("catns", &SystemParams::default()).unwrap();
        let e = sys
            .finite_time_exponent(&pt(&[0.3, 0.8, 0.31]), 20_000, 1, 1_000)
            .unwrap();
        let target = (1.0 - TAU * 0.01).ln();
        assert!(
            (e - target).abs() < 0.1 * target.abs(),
            "exponent {e} vs {target}"
        );
    }

    #[test]
    fn volume_preserving_flags() {
        for (name, expect) in [("cat2", true), ("catrot", true), ("catns", false), ("lin4", true)]
        {
            let sys = SystemSpec::make(name, &SystemParams::default()).unwrap();
            assert_eq!(sys.is_volume_preserving(), expect, "{name}");
        }
    }

    #[test]
    fn orbit_csv_has_header_and_rows() {
        let sys = SystemSpec::make("cat2", &SystemParams::default()).unwrap();
        let csv = orbit_to_csv(&sys.orbit(&pt(&[0.5, 0.5]), 3));
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("k,c0,c1"));
        assert_eq!(csv.lines().count(), 4);
    }
}
