//! The chi and k pipeline. The as-printed formula chi = ((-1)^n - mu)/2
//! fails forced sanity cases (a sphere needs a negative mu), so a small
//! documented family of sign/offset variants is evaluated and recorded,
//! with the as-printed variant as the default output. The calibration
//! table (two points, circle, sphere) records every variant next to the
//! classical Euler characteristics 2, 0, 2; agreement is reported, never
//! assumed.

use super::bruce::{bruce_h_generic, build_h_upsilon, build_h_v, BruceInput};
use super::milnor::{milnor_number, MilnorConfig, MilnorResult, MuValue};
use super::EulerError;
use crate::poly::{parse_poly, MonomialOrder, PolyRing};
use crate::scalar::QQ;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FormulaVariant {
    /// ((-1)^n - mu) / 2, as printed.
    AsPrinted,
    /// (mu - (-1)^n) / 2.
    MuMinusSign,
    /// ((-1)^n + mu) / 2.
    SignPlusMu,
}

impl FormulaVariant {
    pub const ALL: [FormulaVariant; 3] =
        [FormulaVariant::AsPrinted, FormulaVariant::MuMinusSign, FormulaVariant::SignPlusMu];

    pub fn name(&self) -> &'static str {
        match self {
            FormulaVariant::AsPrinted => "as-printed",
            FormulaVariant::MuMinusSign => "mu-minus-sign",
            FormulaVariant::SignPlusMu => "sign-plus-mu",
        }
    }

    fn numerator(&self, mu: i64, n: u32) -> i64 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        match self {
            FormulaVariant::AsPrinted => sign - mu,
            FormulaVariant::MuMinusSign => mu - sign,
            FormulaVariant::SignPlusMu => sign + mu,
        }
    }
}

/// Apply a variant to mu exactly; a non-even numerator is a parity
/// inconsistency of the variant, reported as an error.
pub fn euler_characteristic(mu: usize, n: u32, variant: FormulaVariant) -> Result<i64, EulerError> {
    let num = variant.numerator(mu as i64, n);
    if num % 2 != 0 {
        return Err(EulerError::NonIntegerResult);
    }
    Ok(num / 2)
}

#[derive(Debug, Clone, Serialize)]
pub struct VariantValue {
    pub variant: &'static str,
    /// The exact value, or None on parity failure.
    pub value: Option<i64>,
    pub integral: bool,
}

fn variant_table(mu: usize, n: u32) -> Vec<VariantValue> {
    FormulaVariant::ALL
        .iter()
        .map(|v| {
            let val = euler_characteristic(mu, n, *v).ok();
            VariantValue { variant: v.name(), value: val, integral: val.is_some() }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CalibrationRow {
    pub name: String,
    pub n: u32,
    pub mu: Option<usize>,
    pub methods_agree: Option<bool>,
    pub variants: Vec<VariantValue>,
    pub topological_chi: i64,
    /// Variants whose value equals the classical Euler characteristic.
    pub agreeing_variants: Vec<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineConfig {
    pub milnor: MilnorConfig,
    pub variant: FormulaVariant,
    /// Include the reference-surface calibration table.
    pub calibrate: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            milnor: MilnorConfig::default(),
            variant: FormulaVariant::AsPrinted,
            calibrate: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerReport {
    pub variety: String,
    /// Ambient affine dimension of the compact model.
    pub n: u32,
    pub mu: MuValue,
    pub mora_complete: bool,
    pub mora_steps: u64,
    pub jet_stabilized: Option<usize>,
    pub jet_dims: Vec<(u32, usize)>,
    pub methods_agree: Option<bool>,
    pub variants: Vec<VariantValue>,
    /// chi under the selected variant, when mu is finite and parity allows.
    pub chi: Option<i64>,
    pub selected_variant: &'static str,
    /// k = 26 - chi for the cuboid surface, k' = 18 - chi for the
    /// face-cuboid surface.
    pub k: Option<i64>,
    pub k_offset: i64,
    pub calibration: Vec<CalibrationRow>,
}

impl EulerReport {
    /// The stored k must always re-derive from the stored chi.
    pub fn k_consistent(&self) -> bool {
        match (self.chi, self.k) {
            (Some(chi), Some(k)) => k == self.k_offset - chi,
            (None, None) => true,
            _ => false,
        }
    }
}

/// The calibration set: V(x^2-1) (two points), the circle, the sphere.
pub fn calibration_table(cfg: &MilnorConfig) -> Result<Vec<CalibrationRow>, EulerError> {
    let cases: [(&str, &[&str], &str, u32, i64); 3] = [
        ("two-points", &["x"], "x^2 - 1", 1, 2),
        ("circle", &["x", "y"], "x^2 + y^2 - 1", 2, 0),
        ("sphere", &["x", "y", "z"], "x^2 + y^2 + z^2 - 1", 3, 2),
    ];
    let mut rows = Vec::new();
    for (name, vars, f, n, topo) in cases {
        let ring = PolyRing::new(QQ, vars, MonomialOrder::grevlex(vars.len()))?;
        let fp = parse_poly(f, &ring)?;
        let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "hy".into() })?;
        let m = milnor_number(&h, cfg)?;
        let mu = match m.mu {
            MuValue::Finite(v) => Some(v),
            _ => None,
        };
        let variants = mu.map(|v| variant_table(v, n)).unwrap_or_default();
        let agreeing = variants
            .iter()
            .filter(|vv| vv.value == Some(topo))
            .map(|vv| vv.variant)
            .collect();
        rows.push(CalibrationRow {
            name: name.to_string(),
            n,
            mu,
            methods_agree: m.methods_agree,
            variants,
            topological_chi: topo,
            agreeing_variants: agreeing,
        });
    }
    Ok(rows)
}

fn build_report(
    variety: &str,
    n: u32,
    k_offset: i64,
    m: MilnorResult,
    cfg: &PipelineConfig,
) -> Result<EulerReport, EulerError> {
    let mu = match m.mu {
        MuValue::Finite(v) => Some(v),
        _ => None,
    };
    let variants = mu.map(|v| variant_table(v, n)).unwrap_or_default();
    let chi = mu.and_then(|v| euler_characteristic(v, n, cfg.variant).ok());
    let k = chi.map(|c| k_offset - c);
    let calibration = if cfg.calibrate { calibration_table(&cfg.milnor)? } else { Vec::new() };
    Ok(EulerReport {
        variety: variety.to_string(),
        n,
        mu: m.mu,
        mora_complete: m.mora.complete,
        mora_steps: m.mora.steps,
        jet_stabilized: m.jet.as_ref().and_then(|j| j.stabilized),
        jet_dims: m.jet.as_ref().map(|j| j.dims.clone()).unwrap_or_default(),
        methods_agree: m.methods_agree,
        variants,
        chi,
        selected_variant: cfg.variant.name(),
        k,
        k_offset,
        calibration,
    })
}

/// k = 26 - chi for the cuboid surface viewed in the compact chart (n = 6).
pub fn compute_k(cfg: &PipelineConfig) -> Result<EulerReport, EulerError> {
    let h = build_h_upsilon();
    let m = milnor_number(&h, &cfg.milnor)?;
    build_report("upsilon", 6, 26, m, cfg)
}

/// k' = 18 - chi for the face-cuboid surface (n = 5).
pub fn compute_k_prime(cfg: &PipelineConfig) -> Result<EulerReport, EulerError> {
    let h = build_h_v();
    let m = milnor_number(&h, &cfg.milnor)?;
    build_report("V", 5, 18, m, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_arithmetic() {
        // mu = 1, n = 6, as printed: (1 - 1)/2 = 0
        assert_eq!(euler_characteristic(1, 6, FormulaVariant::AsPrinted).unwrap(), 0);
        // mu = 1, n = 5: (-1 - 1)/2 = -1
        assert_eq!(euler_characteristic(1, 5, FormulaVariant::AsPrinted).unwrap(), -1);
        // parity failure: mu = 2, n = 5: (-1 - 2)/2
        assert!(matches!(
            euler_characteristic(2, 5, FormulaVariant::AsPrinted),
            Err(EulerError::NonIntegerResult)
        ));
    }

    #[test]
    fn k_arithmetic_identities() {
        // chi = -10 gives k = 36; chi = 18 gives k' = 0
        assert_eq!(26 - (-10), 36);
        assert_eq!(18 - 18, 0);
    }
}
