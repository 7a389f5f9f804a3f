//! Four-component spinor quasi-plane waves of the massive wave equation in
//! horospheric coordinates.
//!
//! With Ψ = e^{−iεt} e^{i(k₁x + k₂y)} (f₁, f₂, f₃, f₄)(z) and the chiral
//! matrix basis, separation of variables leaves four coupled first-order
//! lines in z (written with D := d/dz − 1):
//!
//! ```text
//! −iε f₃ − ik₁e^z f₄ − k₂e^z f₄ − D f₃ + im f₁ = 0
//! −iε f₄ − ik₁e^z f₃ + k₂e^z f₃ + D f₄ + im f₂ = 0
//! −iε f₁ + ik₁e^z f₂ + k₂e^z f₂ + D f₁ + im f₃ = 0
//! −iε f₂ + ik₁e^z f₁ − k₂e^z f₁ − D f₂ + im f₄ = 0
//! ```
//!
//! The generalized helicity operator commutes with the wave operator; on its
//! eigenstates with eigenvalue p = ±√(ε² − m²) the lower pair is locked to
//! the upper one, f₃ = A f₁ and f₄ = A f₂ with A = (ε−p)/m = m/(ε+p), and
//! the system closes into two lines for (f₁, f₂):
//!
//! ```text
//! (D − ip) f₁ + e^z (ik₁ + k₂) f₂ = 0,
//! (D + ip) f₂ − e^z (ik₁ − k₂) f₁ = 0.
//! ```
//!
//! In the variable y = 2k⊥e^z with a = ip and the unit phase
//! e^{iα} = √((k₂+ik₁)/(k₂−ik₁)), the two independent solution families are
//!
//! * type I:  f₁ = M₊ e^{−y/2} y^{1+a} Φ(a, 2a, y),
//!            f₂ =     e^{−y/2} y^{2+a} Φ(a+1, 2a+2, y),
//!            M₊ = −2 e^{+iα} (1 + 2a);
//! * type II: f₁ = M₋ e^{−y/2} y^{2−a} Φ(1−a, 2−2a, y),
//!            f₂ =     e^{−y/2} y^{1−a} Φ(−a, −2a, y),
//!            M₋ = −e^{+iα} / (2(1 − 2a));
//!
//! normalized so the f₂ profile carries unit coefficient. The relative
//! factors M± are fixed by the first-order system itself (both lines, at
//! leading and next-to-leading order in y), and the decisive check is the
//! first-order residual: a percent-level perturbation of M± shows up as a
//! residual above 1e−3.
//!
//! Small z makes type I a right-moving wave e^z e^{+ipz} and type II a
//! left-moving one e^z e^{−ipz}; the axial case k₁ = k₂ = 0 degenerates to
//! exactly those plane-wave forms. The flat-space contraction (curvature
//! radius R → ∞ with physical quantities held fixed) turns both types into
//! ordinary flat plane waves e^{±ip₀x₃}, which this module verifies
//! quantitatively through [`flat_limit_study`].

use crate::error::{Error, Result};
use crate::oracle::{LineValue, ResidualReport};
use crate::profile::{confluent_profile_jet, ConfluentKind};
use crate::real::{c, r, to_f64, Real};
use num_complex::Complex;

/// Helicity eigenvalue sign: p = ±√(ε² − m²).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Helicity::Plus => T::one(),
            Helicity::Minus => -T::one(),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Helicity::Plus => Helicity::Minus,
            Helicity::Minus => Helicity::Plus,
        }
    }
}

/// The two independent solution families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiracType {
    I,
    II,
}

/// Quantum numbers of a massive spinor wave: energy ε, transverse wave
/// numbers (k₁, k₂), mass m > 0 and the helicity sign selecting p.
#[derive(Clone, Copy, Debug)]
pub struct WaveParams<T: Real> {
    pub epsilon: T,
    pub m: T,
    pub k1: T,
    pub k2: T,
    pub helicity: Helicity,
}

impl<T: Real> WaveParams<T> {
    pub fn new(epsilon: T, m: T, k1: T, k2: T, helicity: Helicity) -> Result<Self> {
        if m < T::zero() {
            return Err(Error::Config("mass must be nonnegative".into()));
        }
        if m == T::zero() {
            return Err(Error::Domain(
                "massless waves are built by the weyl module; the small-component ratio \
                 (epsilon - p)/m degenerates at m = 0"
                    .into(),
            ));
        }
        if !(epsilon * epsilon > m * m) {
            return Err(Error::Evanescent {
                k3_sq: to_f64(epsilon * epsilon - m * m),
            });
        }
        Ok(WaveParams { epsilon, m, k1, k2, helicity })
    }

    /// Helicity eigenvalue p = ±√(ε² − m²).
    pub fn p(&self) -> T {
        self.helicity.sign::<T>() * (self.epsilon * self.epsilon - self.m * self.m).sqrt()
    }

    /// Confluent upper parameter a = ip.
    pub fn a(&self) -> Complex<T> {
        Complex::new(T::zero(), self.p())
    }

    pub fn k_perp(&self) -> T {
        (self.k1 * self.k1 + self.k2 * self.k2).sqrt()
    }

    pub fn is_axial(&self) -> bool {
        self.k1 == T::zero() && self.k2 == T::zero()
    }

    /// Unit phase e^{iα} = √((k₂ + ik₁)/(k₂ − ik₁)), principal branch, so
    /// that k₁ = 0, k₂ > 0 gives exactly 1.
    pub fn alpha_phase(&self) -> Result<Complex<T>> {
        if self.is_axial() {
            return Err(Error::Domain(
                "the transverse phase is undefined for an axial wave".into(),
            ));
        }
        let num = Complex::new(self.k2, self.k1);
        let den = Complex::new(self.k2, -self.k1);
        Ok((num / den).sqrt())
    }

    /// The confluent variable y = 2 k⊥ e^z.
    pub fn y(&self, z: T) -> T {
        r::<T>(2.0) * self.k_perp() * z.exp()
    }

    /// Turning point of the second-order forms: |p| = k⊥ e^{z_turn}.
    pub fn turning_z(&self) -> Result<T> {
        if self.is_axial() {
            return Err(Error::Domain("an axial wave has no turning point".into()));
        }
        Ok((self.p().abs() / self.k_perp()).ln())
    }

    /// Lower-pair lock A = (ε − p)/m, evaluated in the cancellation-free
    /// form m/(ε + p).
    pub fn small_ratio(&self) -> T {
        self.m / (self.epsilon + self.p())
    }
}

/// A built solution: parameters, family, and an optional scaling of the
/// relative factor (1 for the genuine solution; used to demonstrate that
/// the first-order residual pins the factor).
#[derive(Clone, Copy, Debug)]
pub struct DiracWave<T: Real> {
    pub params: WaveParams<T>,
    pub dtype: DiracType,
    factor_scale: T,
}

/// Internal spec of the (f₁, f₂) Kummer pair: everything the assembly needs,
/// decoupled from mass and energy. The massless module builds the same pair
/// with its own `a`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct PairSpec<T: Real> {
    pub a: Complex<T>,
    /// e^{iα}
    pub alpha: Complex<T>,
    pub k_perp: T,
    pub factor_scale: T,
}

impl<T: Real> PairSpec<T> {
    /// The relative factor multiplying the f₁ profile.
    pub(crate) fn relative_factor(&self, dtype: DiracType) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        let two = c::<T>(2.0, 0.0);
        let scale = Complex::new(self.factor_scale, T::zero());
        match dtype {
            DiracType::I => -two * self.alpha * (one + two * self.a) * scale,
            DiracType::II => -self.alpha / (two * (one - two * self.a)) * scale,
        }
    }

    /// Analytic jets ([f₁, f₁', f₁''], [f₂, f₂', f₂'']) at z.
    pub(crate) fn jets(&self, dtype: DiracType, z: T) -> Result<([Complex<T>; 3], [Complex<T>; 3])> {
        let a = self.a;
        let one = Complex::new(T::one(), T::zero());
        let two = c::<T>(2.0, 0.0);
        let m = self.relative_factor(dtype);
        let (s1, a1, c1, s2, a2, c2) = match dtype {
            DiracType::I => (one + a, a, two * a, two + a, a + one, two * a + two),
            DiracType::II => (two - a, one - a, two - two * a, one - a, -a, -two * a),
        };
        let j1 = confluent_profile_jet(self.k_perp, z, s1, a1, c1, ConfluentKind::Regular)?;
        let j2 = confluent_profile_jet(self.k_perp, z, s2, a2, c2, ConfluentKind::Regular)?;
        Ok(([m * j1[0], m * j1[1], m * j1[2]], j2))
    }
}

impl<T: Real> DiracWave<T> {
    pub fn new(params: WaveParams<T>, dtype: DiracType) -> Self {
        DiracWave { params, dtype, factor_scale: T::one() }
    }

    /// A deliberately wrong solution: the relative factor is multiplied by
    /// `scale`. Exists so tests (and the fault-injection hook) can prove the
    /// first-order residual is sensitive to the factor.
    pub fn with_scaled_factor(params: WaveParams<T>, dtype: DiracType, scale: T) -> Self {
        DiracWave { params, dtype, factor_scale: scale }
    }

    fn spec(&self) -> Result<PairSpec<T>> {
        Ok(PairSpec {
            a: self.params.a(),
            alpha: self.params.alpha_phase()?,
            k_perp: self.params.k_perp(),
            factor_scale: self.factor_scale,
        })
    }

    /// Analytic jets of the upper pair. For an axial wave this is the exact
    /// plane-wave pair: type I carries f₁ = e^{(1+ip)z} with f₂ ≡ 0, type II
    /// carries f₂ = e^{(1−ip)z} with f₁ ≡ 0.
    pub fn pair_jets(&self, z: T) -> Result<([Complex<T>; 3], [Complex<T>; 3])> {
        if self.params.is_axial() {
            let zero = [Complex::new(T::zero(), T::zero()); 3];
            let ip = self.params.a();
            let one = Complex::new(T::one(), T::zero());
            match self.dtype {
                DiracType::I => {
                    let lam = one + ip;
                    let f = (lam * Complex::new(z, T::zero())).exp();
                    Ok(([f, lam * f, lam * lam * f], zero))
                }
                DiracType::II => {
                    let lam = one - ip;
                    let f = (lam * Complex::new(z, T::zero())).exp();
                    Ok((zero, [f, lam * f, lam * lam * f]))
                }
            }
        } else {
            self.spec()?.jets(self.dtype, z)
        }
    }

    /// All four components' jets; the lower pair is A × the upper pair.
    pub fn four_jets(&self, z: T) -> Result<[[Complex<T>; 3]; 4]> {
        let (j1, j2) = self.pair_jets(z)?;
        let a_lock = Complex::new(self.params.small_ratio(), T::zero());
        Ok([
            j1,
            j2,
            [a_lock * j1[0], a_lock * j1[1], a_lock * j1[2]],
            [a_lock * j2[0], a_lock * j2[1], a_lock * j2[2]],
        ])
    }

    /// (f₁, f₂, f₃, f₄) at z.
    pub fn sample(&self, z: T) -> Result<[Complex<T>; 4]> {
        let jets = self.four_jets(z)?;
        Ok([jets[0][0], jets[1][0], jets[2][0], jets[3][0]])
    }
}

// ---------------------------------------------------------------------------
// equation lines
// ---------------------------------------------------------------------------

/// The two closed lines for the upper pair, evaluated term by term:
/// (D − ip) f₁ + e^z(ik₁ + k₂) f₂ and (D + ip) f₂ − e^z(ik₁ − k₂) f₁.
/// Takes the eigenvalue and wave numbers directly: the same two lines with
/// p = −ε are the massless system.
pub fn first_order_lines<T: Real>(
    p: T,
    k1: T,
    k2: T,
    z: T,
    f1: &[Complex<T>; 3],
    f2: &[Complex<T>; 3],
) -> [LineValue<T>; 2] {
    let i = c::<T>(0.0, 1.0);
    let ez = z.exp();
    let ip = i * Complex::new(p, T::zero());
    let coup1 = Complex::new(k2 * ez, k1 * ez); // e^z (ik₁ + k₂)
    let coup2 = Complex::new(-(k2 * ez), k1 * ez); // e^z (ik₁ − k₂)
    [
        LineValue::from_terms(&[f1[1], -f1[0], -ip * f1[0], coup1 * f2[0]]),
        LineValue::from_terms(&[f2[1], -f2[0], ip * f2[0], -(coup2 * f1[0])]),
    ]
}

/// The four separated lines on all components (D := d/dz − 1):
/// see the module docs for the sign pattern.
pub fn separated_lines<T: Real>(
    params: &WaveParams<T>,
    z: T,
    jets: &[[Complex<T>; 3]; 4],
) -> [LineValue<T>; 4] {
    let i = c::<T>(0.0, 1.0);
    let ez = z.exp();
    let ie = i * Complex::new(params.epsilon, T::zero());
    let im = i * Complex::new(params.m, T::zero());
    let ik1 = i * Complex::new(params.k1 * ez, T::zero());
    let k2e = Complex::new(params.k2 * ez, T::zero());
    let d = |j: &[Complex<T>; 3]| j[1] - j[0];
    let [f1, f2, f3, f4] = jets;
    [
        LineValue::from_terms(&[-ie * f3[0], -(ik1 * f4[0]), -(k2e * f4[0]), -d(f3), im * f1[0]]),
        LineValue::from_terms(&[-ie * f4[0], -(ik1 * f3[0]), k2e * f3[0], d(f4), im * f2[0]]),
        LineValue::from_terms(&[-ie * f1[0], ik1 * f2[0], k2e * f2[0], d(f1), im * f3[0]]),
        LineValue::from_terms(&[-ie * f2[0], ik1 * f1[0], -(k2e * f1[0]), -d(f2), im * f4[0]]),
    ]
}

/// The four helicity-eigenstate lines Σf = p_eig·f, term by term:
/// k₁e^z f₂ − ik₂e^z f₂ − iD f₁ = p f₁ and its three companions.
pub fn helicity_lines<T: Real>(
    params: &WaveParams<T>,
    z: T,
    jets: &[[Complex<T>; 3]; 4],
    p_eig: T,
) -> [LineValue<T>; 4] {
    let i = c::<T>(0.0, 1.0);
    let ez = z.exp();
    let k1e = Complex::new(params.k1 * ez, T::zero());
    let ik2e = i * Complex::new(params.k2 * ez, T::zero());
    let pe = Complex::new(p_eig, T::zero());
    let d = |j: &[Complex<T>; 3]| j[1] - j[0];
    let [f1, f2, f3, f4] = jets;
    [
        LineValue::from_terms(&[k1e * f2[0], -(ik2e * f2[0]), -(i * d(f1)), -(pe * f1[0])]),
        LineValue::from_terms(&[k1e * f1[0], ik2e * f1[0], i * d(f2), -(pe * f2[0])]),
        LineValue::from_terms(&[k1e * f4[0], -(ik2e * f4[0]), -(i * d(f3)), -(pe * f3[0])]),
        LineValue::from_terms(&[k1e * f3[0], ik2e * f3[0], i * d(f4), -(pe * f4[0])]),
    ]
}

/// The decoupled second-order line in Z = k⊥e^z for one component:
/// Z f_ZZ − 2 f_Z + ((p² + s·ip + 2)/Z − Z) f with s = +1 for f₁, −1 for f₂.
/// Jets come in as z-derivatives and are converted through dZ/dz = Z.
pub fn second_order_line<T: Real>(
    p: T,
    k_perp: T,
    z: T,
    component_sign: f64,
    jet: &[Complex<T>; 3],
) -> LineValue<T> {
    let s = r::<T>(component_sign.signum());
    let zv = k_perp * z.exp();
    let zc = Complex::new(zv, T::zero());
    let f = jet[0];
    let f_z = jet[1] / zc;
    let f_zz = (jet[2] - jet[1]) / (zc * zc);
    let bracket = Complex::new(p * p + r::<T>(2.0), s * p); // p² + s·ip + 2
    LineValue::from_terms(&[zc * f_zz, -(f_z + f_z), bracket / zc * f, -(zc * f)])
}

// ---------------------------------------------------------------------------
// residual reports over grids
// ---------------------------------------------------------------------------

fn worst_over_grid<T: Real, F>(zs: &[T], mut eval: F) -> Result<ResidualReport<T>>
where
    F: FnMut(T) -> Result<T>,
{
    let mut report = ResidualReport::new();
    for &z in zs {
        report.absorb(z, eval(z)?);
    }
    Ok(report)
}

/// Worst relative residual of the two first-order lines over the grid —
/// the decisive test of the relative factors.
pub fn first_order_residual<T: Real>(wave: &DiracWave<T>, zs: &[T]) -> Result<ResidualReport<T>> {
    let (p, k1, k2) = (wave.params.p(), wave.params.k1, wave.params.k2);
    worst_over_grid(zs, |z| {
        let (j1, j2) = wave.pair_jets(z)?;
        let lines = first_order_lines(p, k1, k2, z, &j1, &j2);
        Ok(lines[0].relative().max(lines[1].relative()))
    })
}

/// Worst relative residual of the four separated lines over the grid.
pub fn separated_system_residual<T: Real>(
    wave: &DiracWave<T>,
    zs: &[T],
) -> Result<ResidualReport<T>> {
    worst_over_grid(zs, |z| {
        let jets = wave.four_jets(z)?;
        let lines = separated_lines(&wave.params, z, &jets);
        Ok(lines.iter().fold(T::zero(), |m, l| m.max(l.relative())))
    })
}

/// Worst relative residual of the four helicity lines with the declared p.
pub fn helicity_residual<T: Real>(wave: &DiracWave<T>, zs: &[T]) -> Result<ResidualReport<T>> {
    worst_over_grid(zs, |z| {
        let jets = wave.four_jets(z)?;
        let lines = helicity_lines(&wave.params, z, &jets, wave.params.p());
        Ok(lines.iter().fold(T::zero(), |m, l| m.max(l.relative())))
    })
}

/// Worst relative residual of the decoupled second-order equations for both
/// components over the grid.
pub fn second_order_residual<T: Real>(wave: &DiracWave<T>, zs: &[T]) -> Result<ResidualReport<T>> {
    let (p, kp) = (wave.params.p(), wave.params.k_perp());
    worst_over_grid(zs, |z| {
        let (j1, j2) = wave.pair_jets(z)?;
        let l1 = second_order_line(p, kp, z, 1.0, &j1);
        let l2 = second_order_line(p, kp, z, -1.0, &j2);
        Ok(l1.relative().max(l2.relative()))
    })
}

/// The swap symmetry: if (f₁, f₂) solves the system at (p, k₁, k₂), then
/// (f₂, f₁) solves it at (−p, −k₁, k₂). Returns the worst residual of the
/// swapped pair in the swapped system.
pub fn swapped_system_residual<T: Real>(
    wave: &DiracWave<T>,
    zs: &[T],
) -> Result<ResidualReport<T>> {
    let (p, k1, k2) = (wave.params.p(), wave.params.k1, wave.params.k2);
    worst_over_grid(zs, |z| {
        let (j1, j2) = wave.pair_jets(z)?;
        let lines = first_order_lines(-p, -k1, k2, z, &j2, &j1);
        Ok(lines[0].relative().max(lines[1].relative()))
    })
}

// ---------------------------------------------------------------------------
// axial waves (k₁ = k₂ = 0)
// ---------------------------------------------------------------------------

/// The two axial plane-wave branches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxialBranch {
    /// f₁ = e^z e^{+ipz}, f₂ = 0.
    C1,
    /// f₂ = e^z e^{−ipz}, f₁ = 0.
    C2,
}

/// Four-component axial sample: the nonzero upper component is
/// e^z e^{±ipz} and the lower pair is A times the upper one.
pub fn axial_solution<T: Real>(
    params: &WaveParams<T>,
    branch: AxialBranch,
    z: T,
) -> Result<[Complex<T>; 4]> {
    if !params.is_axial() {
        return Err(Error::Config(
            "axial solutions require k1 = k2 = 0; use the type I/II builders otherwise".into(),
        ));
    }
    let dtype = match branch {
        AxialBranch::C1 => DiracType::I,
        AxialBranch::C2 => DiracType::II,
    };
    DiracWave::new(*params, dtype).sample(z)
}

// ---------------------------------------------------------------------------
// flat-space reference solutions
// ---------------------------------------------------------------------------

/// A flat-space spinor plane wave: p = ±√(ε² − m²), k₃ = +√(ε² − m² − k⊥²),
/// and the two branches e^{±ik₃z} with their locked component ratios.
#[derive(Clone, Copy, Debug)]
pub struct FlatWave<T: Real> {
    pub p: T,
    pub k1: T,
    pub k2: T,
    pub k3: T,
}

/// Branch label: the sign in e^{±ik₃z}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlatBranch {
    Plus,
    Minus,
}

pub fn flat_space_solution<T: Real>(
    epsilon: T,
    m: T,
    k1: T,
    k2: T,
    p_sign: Helicity,
) -> Result<FlatWave<T>> {
    let k3_sq = epsilon * epsilon - m * m - k1 * k1 - k2 * k2;
    if !(k3_sq > T::zero()) {
        return Err(Error::Evanescent { k3_sq: to_f64(k3_sq) });
    }
    Ok(FlatWave {
        p: p_sign.sign::<T>() * (epsilon * epsilon - m * m).sqrt(),
        k1,
        k2,
        k3: k3_sq.sqrt(),
    })
}

impl<T: Real> FlatWave<T> {
    fn k3_signed(&self, branch: FlatBranch) -> T {
        match branch {
            FlatBranch::Plus => self.k3,
            FlatBranch::Minus => -self.k3,
        }
    }

    /// f₂/f₁ = −(±ik₃ − ip)/(ik₁ + k₂) on the chosen branch.
    pub fn component_ratio(&self, branch: FlatBranch) -> Complex<T> {
        let i = c::<T>(0.0, 1.0);
        let num = i * Complex::new(self.k3_signed(branch) - self.p, T::zero());
        let den = Complex::new(self.k2, self.k1);
        -num / den
    }

    /// (f₁, f₂) and first derivatives at z for the chosen branch.
    pub fn jets(&self, branch: FlatBranch, z: T) -> ([Complex<T>; 2], [Complex<T>; 2]) {
        let ik3 = c::<T>(0.0, 1.0) * Complex::new(self.k3_signed(branch), T::zero());
        let f1 = (ik3 * Complex::new(z, T::zero())).exp();
        let f2 = self.component_ratio(branch) * f1;
        ([f1, ik3 * f1], [f2, ik3 * f2])
    }

    /// The flat first-order lines (d/dz − ip) f₁ + (ik₁ + k₂) f₂ and
    /// (d/dz + ip) f₂ − (ik₁ − k₂) f₁, term by term.
    pub fn lines(&self, branch: FlatBranch, z: T) -> [LineValue<T>; 2] {
        let i = c::<T>(0.0, 1.0);
        let ip = i * Complex::new(self.p, T::zero());
        let coup1 = Complex::new(self.k2, self.k1); // ik₁ + k₂
        let coup2 = Complex::new(-self.k2, self.k1); // ik₁ − k₂
        let (j1, j2) = self.jets(branch, z);
        [
            LineValue::from_terms(&[j1[1], -(ip * j1[0]), coup1 * j2[0]]),
            LineValue::from_terms(&[j2[1], ip * j2[0], -(coup2 * j1[0])]),
        ]
    }
}

// ---------------------------------------------------------------------------
// the flat-space limit of the curved solutions
// ---------------------------------------------------------------------------

/// One row of the contraction study at curvature radius R.
#[derive(Clone, Copy, Debug)]
pub struct FlatLimitRow<T: Real> {
    pub radius: T,
    /// max over the x₃ window of |w(x₃) − w_target| / p₀, where w is the
    /// signed total wavenumber recovered from the measured axial phase slope
    /// of the dominant component together with the fixed transverse momenta.
    pub err_type_i: T,
    pub err_type_ii: T,
}

/// Dimensionless parameters at curvature radius R are ε = ER, m = MR,
/// kᵢ = PᵢR (physical quantities E, M, P₁, P₂ held fixed, natural units),
/// and curved solutions are sampled along z = x₃/R on a window of the
/// physical coordinate x₃.
///
/// The limiting object is the flat plane wave e^{i(P₁x₁ + P₂x₂ + k₃x₃)}
/// with k₃² = E² − M² − P₁² − P₂² forced by the flat dispersion relation, so
/// the axial phase slope Im[f′/f]/R of type I's f₁ tends to +k₃ and that of
/// type II's f₂ to −k₃. The wavenumber of the limiting wave — the magnitude
/// of its full wave vector, with the sign of its axial motion — is then
/// w = sign(w₃)·√(P₁² + P₂² + w₃²), and tends to +p₀ = +√(E² − M²) for
/// type I and −p₀ for type II, with error O(1/R).
///
/// M = 0 is the massless path: the same pair assembly with a = −iε (helicity
/// locked to p = −ε, matching the massless module), whose type I wavenumber
/// tends to −p₀ and type II to +p₀.
pub fn flat_limit_study<T: Real>(
    e_phys: T,
    m_phys: T,
    p1_phys: T,
    p2_phys: T,
    radii: &[T],
) -> Result<Vec<FlatLimitRow<T>>> {
    if !(e_phys * e_phys > m_phys * m_phys) {
        return Err(Error::Evanescent {
            k3_sq: to_f64(e_phys * e_phys - m_phys * m_phys),
        });
    }
    if p1_phys == T::zero() && p2_phys == T::zero() {
        return Err(Error::Config(
            "the contraction study needs a transverse direction; use the axial forms otherwise"
                .into(),
        ));
    }
    let p0 = (e_phys * e_phys - m_phys * m_phys).sqrt();
    let massless = m_phys == T::zero();
    let n_x3 = 33usize;
    let mut rows = Vec::with_capacity(radii.len());
    for &radius in radii {
        let spec_for = |scale_a: Complex<T>| -> Result<PairSpec<T>> {
            let k1 = p1_phys * radius;
            let k2 = p2_phys * radius;
            let num = Complex::new(k2, k1);
            let den = Complex::new(k2, -k1);
            Ok(PairSpec {
                a: scale_a,
                alpha: (num / den).sqrt(),
                k_perp: (k1 * k1 + k2 * k2).sqrt(),
                factor_scale: T::one(),
            })
        };
        // a = ip with p = +εR·p₀/ε... for m > 0: p = +√((ER)²−(MR)²) = R·p₀;
        // for m = 0 the massless convention p = −ε applies.
        let (a, w_target_i) = if massless {
            (Complex::new(T::zero(), -(e_phys * radius)), -p0)
        } else {
            (Complex::new(T::zero(), radius * p0), p0)
        };
        let spec = spec_for(a)?;
        let kp_phys_sq = p1_phys * p1_phys + p2_phys * p2_phys;
        let total = |w3: T| w3.signum() * (kp_phys_sq + w3 * w3).sqrt();
        let mut err_i = T::zero();
        let mut err_ii = T::zero();
        for j in 0..n_x3 {
            let x3 = r::<T>(-0.5) + r::<T>(j as f64 / (n_x3 - 1) as f64);
            let z = x3 / radius;
            let (j1, _) = spec.jets(DiracType::I, z)?;
            let (_, j2) = spec.jets(DiracType::II, z)?;
            let w_i = total((j1[1] / j1[0]).im / radius);
            let w_ii = total((j2[1] / j2[0]).im / radius);
            err_i = err_i.max((w_i - w_target_i).abs() / p0);
            err_ii = err_ii.max((w_ii + w_target_i).abs() / p0);
        }
        rows.push(FlatLimitRow { radius, err_type_i: err_i, err_type_ii: err_ii });
    }
    Ok(rows)
}
