//! Closed-form parameter and exponent formulas for colored non-simple loop
//! ensembles: the coupling relations between kappa', kappa, gamma, alpha and
//! alpha', the q(kappa') percolation formula, the p <-> rho interface
//! correspondence, boundary intersection dimensions, one-arm exponents and
//! the jump-rate ledger of the left/right boundary-length processes.

use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::PI;

/// The coupled parameter tuple (kappa', kappa, gamma, alpha, alpha').
///
/// All five are determined by kappa' in (4, 8):
/// kappa = 16/kappa', gamma = sqrt(kappa), alpha = 4/kappa, alpha' = 4/kappa'.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingParams {
    pub kappa_prime: f64,
    pub kappa: f64,
    pub gamma: f64,
    pub alpha: f64,
    pub alpha_prime: f64,
}

/// Interface parameters for a coloring probability p: the force-point weight
/// rho in [-2, kappa-4] and the cluster-coloring value q(kappa').
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InterfaceParams {
    pub p: f64,
    pub rho: f64,
    pub q: f64,
}

/// Jump-rate ledger of the pair (R, L) of boundary-length processes.
///
/// The overall scale is not canonical; `jump_rate_ledger` fixes it by
/// prescribing `a_minus`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JumpRates {
    pub u_l: f64,
    pub u_r: f64,
    pub a_plus: f64,
    pub a_minus: f64,
    pub a_plus_l: f64,
    pub a_plus_r: f64,
    pub a_minus_l: f64,
    pub a_minus_r: f64,
}

/// One-arm exponent value; `is_limit` marks the p -> 0+ limit, where the
/// exponent is reported as a limit rather than a value of the formula.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArmExponent {
    pub value: f64,
    pub is_limit: bool,
}

/// The two lattice models with closed-form arm exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ArmModel {
    /// Bernoulli percolation; kappa' = 6.
    Percolation,
    /// FK with q = 2 (Ising random cluster); kappa' = 16/3.
    Fk2,
}

/// Derive the full coupling tuple from kappa' in (4, 8).
pub fn couplings(kappa_prime: f64) -> Result<CouplingParams> {
    if !(kappa_prime > 4.0 && kappa_prime < 8.0) {
        return Err(Error::domain("kappa_prime", kappa_prime, "(4, 8)"));
    }
    let kappa = 16.0 / kappa_prime;
    Ok(CouplingParams {
        kappa_prime,
        kappa,
        gamma: kappa.sqrt(),
        alpha: 4.0 / kappa,
        alpha_prime: 4.0 / kappa_prime,
    })
}

/// q(kappa') = 4 cos^2(4 pi / kappa'), the cluster-coloring value for which
/// the colored ensemble reproduces the dual simple ensemble.
pub fn q_of_kappa_prime(kappa_prime: f64) -> Result<f64> {
    if !(kappa_prime > 4.0 && kappa_prime < 8.0) {
        return Err(Error::domain("kappa_prime", kappa_prime, "(4, 8)"));
    }
    let c = (4.0 * PI / kappa_prime).cos();
    Ok(4.0 * c * c)
}

/// rho as a function of the coloring probability p.
///
/// The inverse of `p_from_rho`. The arctangent form needs a branch choice:
/// the angle theta = pi (rho + 2) / 2 lies in (0, pi), so it is taken as the
/// two-argument angle of (-sin(pi kappa / 2), -(1 + cos(pi kappa / 2) - 1/p)),
/// which reproduces the endpoints p = 0, 1/2, 1 and is continuous and
/// strictly increasing in between. p = 0 and p = 1 return the exact
/// endpoints -2 and kappa - 4 without evaluating the formula.
pub fn rho_from_p(p: f64, cp: &CouplingParams) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain("p", p, "[0, 1]"));
    }
    if p == 0.0 {
        return Ok(-2.0);
    }
    if p == 1.0 {
        return Ok(cp.kappa - 4.0);
    }
    let half_kappa_angle = PI * cp.kappa / 2.0;
    let num = half_kappa_angle.sin();
    let den = 1.0 + half_kappa_angle.cos() - 1.0 / p;
    let theta = (-num).atan2(-den);
    Ok(2.0 / PI * theta - 2.0)
}

/// p as a function of rho in [-2, kappa - 4]:
/// p = sin(pi (rho+2)/2) / (sin(pi (rho+2)/2) + sin(pi (kappa-4-rho)/2)).
pub fn p_from_rho(rho: f64, cp: &CouplingParams) -> Result<f64> {
    if !(-2.0..=cp.kappa - 4.0).contains(&rho) {
        return Err(Error::domain(
            "rho",
            rho,
            format!("[-2, {}]", cp.kappa - 4.0),
        ));
    }
    let s_own = (PI * (rho + 2.0) / 2.0).sin();
    let s_dual = (PI * (cp.kappa - 4.0 - rho) / 2.0).sin();
    Ok(s_own / (s_own + s_dual))
}

/// Boundary intersection dimension d(kappa, rho) of the interface with the
/// domain boundary: d = 1 - (kappa - 2 - (rho+2)) (kappa/2 - (rho+2)) / kappa,
/// valid for rho + 2 in (0, kappa - 2).
pub fn boundary_dimension(rho: f64, cp: &CouplingParams) -> Result<f64> {
    let w = rho + 2.0;
    if !(w > 0.0 && w < cp.kappa - 2.0) {
        return Err(Error::domain(
            "rho + 2",
            w,
            format!("(0, {})", cp.kappa - 2.0),
        ));
    }
    Ok(1.0 - (cp.kappa - 2.0 - w) * (cp.kappa / 2.0 - w) / cp.kappa)
}

/// One-arm exponent a(p) = 1 - d(kappa, rho_from_p(p)) for p in (0, 1];
/// p = 0 returns the p -> 0+ limit kappa/2 - 1 flagged as a limit.
pub fn arm_exponent(p: f64, cp: &CouplingParams) -> Result<ArmExponent> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain("p", p, "[0, 1]"));
    }
    if p == 0.0 {
        return Ok(ArmExponent {
            value: cp.kappa / 2.0 - 1.0,
            is_limit: true,
        });
    }
    if p == 1.0 {
        return Ok(ArmExponent {
            value: 0.0,
            is_limit: false,
        });
    }
    let rho = rho_from_p(p, cp)?;
    Ok(ArmExponent {
        value: 1.0 - boundary_dimension(rho, cp)?,
        is_limit: false,
    })
}

/// Closed arctangent forms of the one-arm exponent for the two lattice
/// models. Agrees with `arm_exponent` at kappa' = 6 resp. 16/3.
pub fn arm_exponent_closed_form(p: f64, model: ArmModel) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain("p", p, "[0, 1]"));
    }
    Ok(match model {
        ArmModel::Percolation => {
            let t = 3.0 / PI * (p * 3f64.sqrt() / (2.0 - p)).atan();
            (2.0 - t) * (1.0 - t) / 6.0
        }
        ArmModel::Fk2 => {
            let t = if p == 1.0 {
                // arctan(p/(1-p)) -> pi/2
                1.0
            } else {
                2.0 / PI * (p / (1.0 - p)).atan()
            };
            (1.0 - t) * (3.0 - 2.0 * t) / 6.0
        }
    })
}

/// Up/down jump-intensity ratios (U_L, U_R) of the boundary-length processes
/// L and R at interior rho:
/// U_L = sin(-pi rho/2) / sin(pi rho/2 - pi alpha'),
/// U_R = sin(2 pi alpha' - pi rho/2) / sin(pi rho/2 - pi alpha').
pub fn jump_ratios(rho: f64, cp: &CouplingParams) -> Result<(f64, f64)> {
    if !(rho > -2.0 && rho < cp.kappa - 4.0) {
        return Err(Error::domain(
            "rho",
            rho,
            format!("(-2, {})", cp.kappa - 4.0),
        ));
    }
    let den = (PI * rho / 2.0 - PI * cp.alpha_prime).sin();
    let u_l = (-PI * rho / 2.0).sin() / den;
    let u_r = (2.0 * PI * cp.alpha_prime - PI * rho / 2.0).sin() / den;
    Ok((u_l, u_r))
}

/// Ladder index alpha'' = 2 + rho/2 - alpha' of the descending ladder set of
/// R. Satisfies U_R = sin(pi (alpha' - alpha'')) / sin(pi alpha'').
pub fn ladder_index(rho: f64, cp: &CouplingParams) -> Result<f64> {
    if !(rho > -2.0 && rho < cp.kappa - 4.0) {
        return Err(Error::domain(
            "rho",
            rho,
            format!("(-2, {})", cp.kappa - 4.0),
        ));
    }
    Ok(2.0 + rho / 2.0 - cp.alpha_prime)
}

/// Complete jump-rate ledger at coloring probability p, normalized so that
/// the total negative rate equals `normalization`. The identities
/// a_plus_l = p a_plus, a_plus_r = (1-p) a_plus, a_plus_x / a_minus_x = U_x,
/// a_minus_l = a_minus_r and a_plus / a_minus = -cos(pi alpha') then all
/// hold simultaneously.
pub fn jump_rate_ledger(p: f64, cp: &CouplingParams, normalization: f64) -> Result<JumpRates> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain("p", p, "(0, 1)"));
    }
    if normalization <= 0.0 {
        return Err(Error::domain("normalization", normalization, "(0, inf)"));
    }
    let rho = rho_from_p(p, cp)?;
    let (u_l, u_r) = jump_ratios(rho, cp)?;
    let a_minus = normalization;
    let a_minus_l = a_minus / 2.0;
    let a_minus_r = a_minus / 2.0;
    let a_plus_l = u_l * a_minus_l;
    let a_plus_r = u_r * a_minus_r;
    Ok(JumpRates {
        u_l,
        u_r,
        a_plus: a_plus_l + a_plus_r,
        a_minus,
        a_plus_l,
        a_plus_r,
        a_minus_l,
        a_minus_r,
    })
}

/// Interface parameter record (p, rho, q) for a given coloring probability.
pub fn interface_params(p: f64, cp: &CouplingParams) -> Result<InterfaceParams> {
    Ok(InterfaceParams {
        p,
        rho: rho_from_p(p, cp)?,
        q: q_of_kappa_prime(cp.kappa_prime)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const KP_GRID: [f64; 5] = [4.2, 4.8, 16.0 / 3.0, 6.0, 7.5];

    #[test]
    fn couplings_at_reference_points() {
        let cp = couplings(6.0).unwrap();
        assert!((cp.kappa - 8.0 / 3.0).abs() < 1e-15);
        assert!((cp.gamma - (8.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((cp.alpha - 1.5).abs() < 1e-15);
        assert!((cp.alpha_prime - 2.0 / 3.0).abs() < 1e-15);

        let cp = couplings(16.0 / 3.0).unwrap();
        assert!((cp.kappa - 3.0).abs() < 1e-15);
        assert!((cp.alpha - 4.0 / 3.0).abs() < 1e-15);
        assert!((cp.alpha_prime - 0.75).abs() < 1e-15);
    }

    #[test]
    fn couplings_near_boundary_and_errors() {
        let cp = couplings(4.0 + 1e-9).unwrap();
        assert!(cp.alpha_prime < 1.0 && cp.alpha_prime > 1.0 - 1e-9);
        assert!(cp.kappa < 4.0 && cp.kappa > 4.0 - 1e-8);
        for bad in [4.0, 8.0, 0.0, -1.0, 9.0] {
            let err = couplings(bad).unwrap_err();
            assert!(err.to_string().contains("(4, 8)"), "{err}");
        }
    }

    #[test]
    fn q_values() {
        assert!((q_of_kappa_prime(16.0 / 3.0).unwrap() - 2.0).abs() < 1e-12);
        assert!((q_of_kappa_prime(24.0 / 5.0).unwrap() - 3.0).abs() < 1e-12);
        assert!((q_of_kappa_prime(6.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(q_of_kappa_prime(4.0).is_err());
    }

    #[test]
    fn q_strictly_decreasing_with_range() {
        let mut prev = f64::INFINITY;
        for i in 1..400 {
            let kp = 4.0 + 4.0 * i as f64 / 400.0;
            if kp >= 8.0 {
                break;
            }
            let q = q_of_kappa_prime(kp).unwrap();
            assert!(q > 0.0 && q < 4.0);
            assert!(q < prev, "q not decreasing at kp={kp}");
            prev = q;
        }
    }

    #[test]
    fn rho_endpoints_and_midpoint() {
        for kp in KP_GRID {
            let cp = couplings(kp).unwrap();
            assert_eq!(rho_from_p(0.0, &cp).unwrap(), -2.0);
            assert_eq!(rho_from_p(1.0, &cp).unwrap(), cp.kappa - 4.0);
            let mid = rho_from_p(0.5, &cp).unwrap();
            assert!(
                (mid - (cp.kappa - 6.0) / 2.0).abs() < 1e-12,
                "kp={kp} mid={mid}"
            );
        }
    }

    #[test]
    fn rho_p_round_trip_and_symmetry() {
        for kp in KP_GRID {
            let cp = couplings(kp).unwrap();
            for i in 0..=1000 {
                let p = i as f64 / 1000.0;
                let rho = rho_from_p(p, &cp).unwrap();
                assert!(rho >= -2.0 - 1e-12 && rho <= cp.kappa - 4.0 + 1e-12);
                let back = p_from_rho(rho.clamp(-2.0, cp.kappa - 4.0), &cp).unwrap();
                assert!((back - p).abs() < 1e-10, "kp={kp} p={p} back={back}");
                let rho_sym = rho_from_p(1.0 - p, &cp).unwrap();
                assert!(
                    (rho_sym - (cp.kappa - 6.0 - rho)).abs() < 1e-10,
                    "symmetry kp={kp} p={p}"
                );
            }
        }
    }

    #[test]
    fn rho_strictly_increasing() {
        for kp in KP_GRID {
            let cp = couplings(kp).unwrap();
            let mut prev = -2.0;
            for i in 1..=500 {
                let rho = rho_from_p(i as f64 / 500.0, &cp).unwrap();
                assert!(rho > prev, "kp={kp} i={i}");
                prev = rho;
            }
        }
    }

    #[test]
    fn p_from_rho_dual_pair() {
        for kp in KP_GRID {
            let cp = couplings(kp).unwrap();
            for i in 1..20 {
                let rho = -2.0 + (cp.kappa - 2.0) * i as f64 / 20.0;
                if rho > cp.kappa - 4.0 {
                    continue;
                }
                let p = p_from_rho(rho, &cp).unwrap();
                let p_dual = p_from_rho(cp.kappa - 6.0 - rho, &cp).unwrap();
                assert!((p + p_dual - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn p_from_rho_domain_error() {
        let cp = couplings(6.0).unwrap();
        assert!(p_from_rho(-2.5, &cp).is_err());
        assert!(p_from_rho(cp.kappa - 3.9, &cp).is_err());
    }

    #[test]
    fn dimension_values() {
        // limit rho + 2 -> 0 gives d -> 2 - kappa/2
        let cp = couplings(6.0).unwrap();
        let d = boundary_dimension(-2.0 + 1e-9, &cp).unwrap();
        assert!((d - (2.0 - cp.kappa / 2.0)).abs() < 1e-7);
        let cp3 = couplings(16.0 / 3.0).unwrap();
        let d3 = boundary_dimension(-2.0 + 1e-9, &cp3).unwrap();
        assert!((d3 - 0.5).abs() < 1e-7);
        // kappa = 8/3, rho = (kappa-6)/2 -> d = 7/8
        let d_mid = boundary_dimension((cp.kappa - 6.0) / 2.0, &cp).unwrap();
        assert!((d_mid - 0.875).abs() < 1e-12);
        assert!(boundary_dimension(-2.0, &cp).is_err());
        assert!(boundary_dimension(cp.kappa - 2.0 + 0.1, &cp).is_err());
    }

    #[test]
    fn arm_exponent_values_and_limits() {
        let cp6 = couplings(6.0).unwrap();
        let a = arm_exponent(0.0, &cp6).unwrap();
        assert!(a.is_limit && (a.value - 1.0 / 3.0).abs() < 1e-12);
        let cp53 = couplings(16.0 / 3.0).unwrap();
        let a = arm_exponent(0.0, &cp53).unwrap();
        assert!(a.is_limit && (a.value - 0.5).abs() < 1e-12);
        let a_half = arm_exponent(0.5, &cp6).unwrap();
        assert!(!a_half.is_limit && (a_half.value - 0.125).abs() < 1e-12);
        assert_eq!(arm_exponent(1.0, &cp6).unwrap().value, 0.0);
    }

    #[test]
    fn closed_forms_match_composition() {
        let cp6 = couplings(6.0).unwrap();
        let cp53 = couplings(16.0 / 3.0).unwrap();
        for i in 1..100 {
            let p = i as f64 / 100.0;
            let perc = arm_exponent_closed_form(p, ArmModel::Percolation).unwrap();
            assert!((perc - arm_exponent(p, &cp6).unwrap().value).abs() < 1e-12);
            let fk2 = arm_exponent_closed_form(p, ArmModel::Fk2).unwrap();
            assert!((fk2 - arm_exponent(p, &cp53).unwrap().value).abs() < 1e-12);
        }
        // spot values: arctan(1/sqrt(3)) = pi/6 and arctan(1) = pi/4
        assert!(
            (arm_exponent_closed_form(0.5, ArmModel::Percolation).unwrap() - 0.125).abs() < 1e-15
        );
        assert!(
            (arm_exponent_closed_form(0.5, ArmModel::Fk2).unwrap() - 1.0 / 6.0).abs() < 1e-15
        );
        assert!(arm_exponent_closed_form(1.0, ArmModel::Percolation)
            .unwrap()
            .abs()
            < 1e-15);
    }

    #[test]
    fn arm_exponent_decreasing() {
        for kp in KP_GRID {
            let cp = couplings(kp).unwrap();
            let mut prev = f64::INFINITY;
            for i in 1..=200 {
                let a = arm_exponent(i as f64 / 200.0, &cp).unwrap().value;
                assert!(a < prev, "kp={kp}");
                prev = a;
            }
        }
    }

    #[test]
    fn jump_ratio_values() {
        let cp = couplings(6.0).unwrap();
        let rho_mid = (cp.kappa - 6.0) / 2.0;
        let (ul, ur) = jump_ratios(rho_mid, &cp).unwrap();
        assert!((ul - 0.5).abs() < 1e-12 && (ur - 0.5).abs() < 1e-12);
        // p -> 1: U_L -> -2 cos(pi alpha') = 1 at kappa' = 6
        let (ul, _) = jump_ratios(cp.kappa - 4.0 - 1e-9, &cp).unwrap();
        assert!((ul - 1.0).abs() < 1e-7, "{ul}");
        assert!(jump_ratios(-2.0, &cp).is_err());
        assert!(jump_ratios(cp.kappa - 4.0, &cp).is_err());
    }

    #[test]
    fn jump_ratio_mean_and_ladder_identities() {
        for kp in KP_GRID {
            let cp = couplings(kp).unwrap();
            for i in 1..100 {
                let p = i as f64 / 100.0;
                let rho = rho_from_p(p, &cp).unwrap();
                let (ul, ur) = jump_ratios(rho, &cp).unwrap();
                assert!(ul > 0.0 && ur > 0.0);
                assert!(((ul + ur) / 2.0 + (PI * cp.alpha_prime).cos()).abs() < 1e-10);
                // U_L(rho) = U_R(kappa - 6 - rho)
                let (_, ur_dual) = jump_ratios(cp.kappa - 6.0 - rho, &cp).unwrap();
                assert!((ul - ur_dual).abs() < 1e-9);
                let a2 = ladder_index(rho, &cp).unwrap();
                assert!(a2 > 0.0 && a2 < cp.alpha_prime);
                let ur_from_ladder =
                    (PI * (cp.alpha_prime - a2)).sin() / (PI * a2).sin();
                assert!((ur_from_ladder - ur).abs() < 1e-10, "kp={kp} p={p}");
            }
        }
    }

    #[test]
    fn ladder_index_reference_points() {
        let cp = couplings(6.0).unwrap();
        // p = 1 endpoint: alpha'' -> 1 - alpha' = 1/3
        let a2 = ladder_index(cp.kappa - 4.0 - 1e-12, &cp).unwrap();
        assert!((a2 - 1.0 / 3.0).abs() < 1e-9);
        // rho = (kappa-6)/2 = -5/3: alpha'' = 2 - 5/6 - 2/3 = 1/2
        let a2 = ladder_index((cp.kappa - 6.0) / 2.0, &cp).unwrap();
        assert!((a2 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ledger_reference_point_and_closure() {
        let cp = couplings(6.0).unwrap();
        let lg = jump_rate_ledger(0.5, &cp, 1.0).unwrap();
        assert!((lg.a_plus - 0.5).abs() < 1e-12);
        assert!((lg.a_plus_l - 0.25).abs() < 1e-12);
        assert!((lg.a_plus_r - 0.25).abs() < 1e-12);
        assert!((lg.a_minus_l - 0.5).abs() < 1e-12);
        assert!((lg.a_minus_r - 0.5).abs() < 1e-12);

        for kp in KP_GRID {
            let cp = couplings(kp).unwrap();
            for i in 1..50 {
                let p = i as f64 / 50.0;
                let lg = jump_rate_ledger(p, &cp, 2.5).unwrap();
                assert!((lg.a_plus_l - p * lg.a_plus).abs() < 1e-12 * lg.a_plus);
                assert!((lg.a_plus_r - (1.0 - p) * lg.a_plus).abs() < 1e-12 * lg.a_plus);
                assert!((lg.a_plus_l / lg.a_minus_l - lg.u_l).abs() < 1e-12 * lg.u_l.max(1.0));
                assert!((lg.a_plus_r / lg.a_minus_r - lg.u_r).abs() < 1e-12 * lg.u_r.max(1.0));
                assert!((lg.a_minus_l + lg.a_minus_r - lg.a_minus).abs() < 1e-12);
                assert!(
                    (lg.a_plus / lg.a_minus + (PI * cp.alpha_prime).cos()).abs() < 1e-12
                );
            }
        }
    }

    #[test]
    fn ledger_color_swap_symmetry() {
        let cp = couplings(7.5).unwrap();
        let a = jump_rate_ledger(0.3, &cp, 1.0).unwrap();
        let b = jump_rate_ledger(0.7, &cp, 1.0).unwrap();
        assert!((a.a_plus_l - b.a_plus_r).abs() < 1e-12);
        assert!((a.a_plus_r - b.a_plus_l).abs() < 1e-12);
        assert!((a.a_minus_l - b.a_minus_r).abs() < 1e-12);
    }
}
