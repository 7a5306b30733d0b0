use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matq::{coproduct_rep, CoproductVariant, Rep, RepMatrix};
use crate::scalars::{heine_number, q_int_sym, QScalar};

use super::RMatrixValue;

/// Coefficient `c` of the n-th term `cⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficient {
    OneMinusQ2,
    OneMinusQm2,
    QMinusQinv,
    QinvMinusQ,
}

/// Base of the factorial dividing the n-th term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factorial {
    HeineQ,
    HeineQ2,
    HeineQm2,
    Symmetric,
}

/// Where the Cartan factor `K^{±1}` sits next to a ladder operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dressing {
    KLeft,
    KRight,
    KinvLeft,
    KinvRight,
}

/// One reading of the universal R series
/// `q^{2 X0⊗X0} Σ cⁿ q^{±n(n−1)/2} / [n]! (X ⊗ Y)ⁿ`
/// with `X` a dressed `E` on the first factor and `Y` a dressed `F` on the
/// second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Convention {
    pub coefficient: Coefficient,
    pub q_power_sign: i64,
    pub factorial: Factorial,
    pub raise: Dressing,
    pub lower: Dressing,
    pub cartan_left: bool,
}

impl Convention {
    /// The series read literally: `(1 − q²)ⁿ q^{n(n−1)/2} / [n]_q!` with
    /// `K·E ⊗ K⁻¹·F` and the Cartan factor on the left.
    pub const AS_WRITTEN: Convention = Convention {
        coefficient: Coefficient::OneMinusQ2,
        q_power_sign: 1,
        factorial: Factorial::HeineQ,
        raise: Dressing::KLeft,
        lower: Dressing::KinvLeft,
        cartan_left: true,
    };

    /// Every convention, the literal reading first.
    pub fn all() -> Vec<Convention> {
        use Coefficient::*;
        use Dressing::*;
        use Factorial::*;
        let mut out = vec![Self::AS_WRITTEN];
        for coefficient in [OneMinusQ2, OneMinusQm2, QMinusQinv, QinvMinusQ] {
            for raise in [KLeft, KRight, KinvLeft, KinvRight] {
                for lower in [KinvLeft, KinvRight, KLeft, KRight] {
                    for cartan_left in [true, false] {
                        for factorial in [HeineQ, HeineQ2, HeineQm2, Symmetric] {
                            for q_power_sign in [1, -1] {
                                let c = Convention {
                                    coefficient,
                                    q_power_sign,
                                    factorial,
                                    raise,
                                    lower,
                                    cartan_left,
                                };
                                if c != Self::AS_WRITTEN {
                                    out.push(c);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn coefficient_value(&self) -> QScalar {
        let one = QScalar::one();
        match self.coefficient {
            Coefficient::OneMinusQ2 => one - QScalar::q_pow(2),
            Coefficient::OneMinusQm2 => one - QScalar::q_pow(-2),
            Coefficient::QMinusQinv => QScalar::q_minus_qinv(),
            Coefficient::QinvMinusQ => -QScalar::q_minus_qinv(),
        }
    }

    fn factorial_value(&self, n: u32) -> QScalar {
        (1..=n).fold(QScalar::one(), |acc, k| {
            let f = match self.factorial {
                Factorial::HeineQ => heine_number(k, &QScalar::q()),
                Factorial::HeineQ2 => heine_number(k, &QScalar::q_pow(2)),
                Factorial::HeineQm2 => heine_number(k, &QScalar::q_pow(-2)),
                Factorial::Symmetric => q_int_sym(k as i64),
            };
            acc * f
        })
    }
}

fn dress(x: &RepMatrix, rep: &Rep, d: Dressing) -> RepMatrix {
    match d {
        Dressing::KLeft => &rep.k * x,
        Dressing::KRight => x * &rep.k,
        Dressing::KinvLeft => &rep.kinv * x,
        Dressing::KinvRight => x * &rep.kinv,
    }
}

fn coefficient_text(c: Coefficient) -> &'static str {
    match c {
        Coefficient::OneMinusQ2 => "(1 - q^2)^n",
        Coefficient::OneMinusQm2 => "(1 - q^-2)^n",
        Coefficient::QMinusQinv => "(q - q^-1)^n",
        Coefficient::QinvMinusQ => "(q^-1 - q)^n",
    }
}

fn dressing_text(d: Dressing, x: &str) -> String {
    match d {
        Dressing::KLeft => format!("K.{x}"),
        Dressing::KRight => format!("{x}.K"),
        Dressing::KinvLeft => format!("Kinv.{x}"),
        Dressing::KinvRight => format!("{x}.Kinv"),
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fact = match self.factorial {
            Factorial::HeineQ => "[n]_q!",
            Factorial::HeineQ2 => "[n]_{q^2}!",
            Factorial::HeineQm2 => "[n]_{q^-2}!",
            Factorial::Symmetric => "[[n]]_q!",
        };
        let sign = if self.q_power_sign > 0 { "" } else { "-" };
        write!(
            f,
            "{} q^({sign}n(n-1)/2) / {fact}, terms ({} (x) {})^n, Cartan factor on the {}",
            coefficient_text(self.coefficient),
            dressing_text(self.raise, "E"),
            dressing_text(self.lower, "F"),
            if self.cartan_left { "left" } else { "right" }
        )
    }
}

/// `q^{2 X0⊗X0}`: diagonal with entry `s^{k_i k_j}` for `K = diag(s^{k})`.
pub fn cartan_factor(r1: &Rep, r2: &Rep) -> Result<RepMatrix> {
    let (w1, w2) = (r1.doubled_weights()?, r2.doubled_weights()?);
    let d: Vec<QScalar> = w1
        .iter()
        .flat_map(|a| w2.iter().map(move |b| QScalar::s_pow(a * b)))
        .collect();
    Ok(RepMatrix::diag(&d))
}

/// The truncated universal series on `r1 ⊗ r2` under `conv`.
pub fn universal_series(
    r1: &Rep,
    r2: &Rep,
    conv: &Convention,
    max_order: usize,
) -> Result<RepMatrix> {
    let x = dress(&r1.e, r1, conv.raise);
    let y = dress(&r2.f, r2, conv.lower);
    let m = x.kron(&y);
    let n_dim = m.rows();
    let c = conv.coefficient_value();
    let mut sum = RepMatrix::identity(n_dim);
    let mut power = RepMatrix::identity(n_dim);
    let mut nilpotent = false;
    for n in 1..=max_order as u32 {
        power = &power * &m;
        if power.is_zero() {
            nilpotent = true;
            break;
        }
        let tri = (n * (n - 1) / 2) as i64;
        let fact = conv.factorial_value(n).inv().ok_or_else(|| Error::Domain {
            index: n as usize,
            reason: "factorial vanishes".into(),
        })?;
        let w = c.pow(n) * QScalar::q_pow(conv.q_power_sign * tri) * fact;
        sum = &sum + &power.scale(&w);
    }
    if !nilpotent {
        return Err(Error::NotNilpotent { max_order });
    }
    let h = cartan_factor(r1, r2)?;
    Ok(if conv.cartan_left {
        &h * &sum
    } else {
        &sum * &h
    })
}

/// First generator `g` with `R·Δ_q(g) ≠ Δ_{q⁻¹}(g)·R`.
pub fn intertwiner_violation(r: &RepMatrix, r1: &Rep, r2: &Rep) -> Option<String> {
    let dq = coproduct_rep(r1, r2, CoproductVariant::Q);
    let dqi = coproduct_rep(r1, r2, CoproductVariant::QInv);
    for (g, a, b) in [
        ("E", &dq.e, &dqi.e),
        ("F", &dq.f, &dqi.f),
        ("K", &dq.k, &dqi.k),
    ] {
        if r.rows() != a.rows() {
            return Some(format!(
                "R has size {} but the tensor space has dimension {}",
                r.rows(),
                a.rows()
            ));
        }
        let d = &(r * a) - &(b * r);
        if let Some(e) = d.first_nonzero_entry() {
            return Some(format!(
                "generator {g}: R.delta_q({g}) - delta_qinv({g}).R has {e}"
            ));
        }
    }
    None
}

/// The convention fixed by requiring the `(fund, fund)` image to be a
/// multiple of the fundamental R-matrix and both the `(fund, fund)` and
/// `(spin1, spin1)` images to intertwine the two coproducts. Also returns
/// how many conventions were tried.
pub fn calibrated_convention() -> Result<(Convention, usize)> {
    static CHOICE: OnceLock<Result<(Convention, usize)>> = OnceLock::new();
    CHOICE
        .get_or_init(|| {
            let fund = crate::matq::builtin_rep("fund")?;
            let spin1 = crate::matq::builtin_rep("spin1")?;
            let target = super::fundamental_r().r;
            for (i, conv) in Convention::all().into_iter().enumerate() {
                let Ok(r2) = universal_series(&fund, &fund, &conv, 4) else {
                    continue;
                };
                if r2.proportional_to(&target).is_none()
                    || intertwiner_violation(&r2, &fund, &fund).is_some()
                {
                    continue;
                }
                let Ok(r3) = universal_series(&spin1, &spin1, &conv, 6) else {
                    continue;
                };
                if intertwiner_violation(&r3, &spin1, &spin1).is_none() {
                    return Ok((conv, i + 1));
                }
            }
            Err(Error::Construction(
                "no ordering convention of the universal series reproduces the fundamental R-matrix"
                    .into(),
            ))
        })
        .clone()
}

/// Image of the universal R-matrix on `r1 ⊗ r2`, in the calibrated
/// convention, verified to intertwine the two coproducts.
pub fn universal_r(r1: &Rep, r2: &Rep, max_order: usize) -> Result<RMatrixValue> {
    let (conv, tried) = calibrated_convention()?;
    let r = universal_series(r1, r2, &conv, max_order)?;
    if let Some(w) = intertwiner_violation(&r, r1, r2) {
        return Err(Error::Construction(w));
    }
    let literal = if tried == 1 {
        "the literal reading matches".to_string()
    } else {
        format!(
            "the literal reading fails; convention {tried} of {} matches",
            Convention::all().len()
        )
    };
    Ok(RMatrixValue {
        r,
        dims: (r1.dim, r2.dim),
        note: format!("{conv}; {literal}"),
    })
}
