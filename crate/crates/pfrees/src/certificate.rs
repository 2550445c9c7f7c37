//! Koszul certificates on disk.

use pfrees_core::koszulcheck::{replay_certificate, KoszulCertificate};
use pfrees_core::{Budget, Monomial, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::formats::{ideal_from_json, ideal_to_json, order_from_json, order_to_json, IdealJson, OrderJson, SCHEMA};

/// A certificate together with the generators it speaks about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub schema: u32,
    pub kind: String,
    /// Defining relations, or the base ideal for a refutation.
    pub ideal: IdealJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderJson>,
    /// Reduced Gröbner basis, same term layout as `ideal.gens`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<IdealJson>,
    /// Leading exponent vectors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

pub fn certificate_to_json(ring: &Ring, gens: &[Polynomial], cert: &KoszulCertificate) -> Result<CertificateJson, CliError> {
    let mut out = CertificateJson {
        schema: SCHEMA,
        kind: cert.kind().to_string(),
        ideal: ideal_to_json(ring, gens),
        order: None,
        basis: None,
        leading: None,
        power: None,
        i: None,
        degree: None,
        rank: None,
    };
    match cert {
        KoszulCertificate::GQuadratic { order, basis } => {
            out.order = Some(order_to_json(order, ring)?);
            out.basis = Some(ideal_to_json(ring, basis));
        }
        KoszulCertificate::QuadricCompleteIntersection { order, leading } => {
            out.order = order.as_ref().map(|o| order_to_json(o, ring)).transpose()?;
            out.leading = Some(leading.iter().map(|m| m.exps().to_vec()).collect());
        }
        KoszulCertificate::NonLinearPower { power, i, degree, rank } => {
            out.power = Some(*power);
            out.i = Some(*i);
            out.degree = Some(*degree);
            out.rank = Some(*rank);
        }
    }
    Ok(out)
}

fn missing(field: &str) -> CliError {
    CliError::Parse(format!("certificate lacks `{field}`"))
}

pub fn certificate_from_json(j: &CertificateJson) -> Result<(Ring, Vec<Polynomial>, KoszulCertificate), CliError> {
    if j.schema != SCHEMA {
        return Err(CliError::Parse(format!("unsupported schema {}", j.schema)));
    }
    let (ring, gens) = ideal_from_json(&j.ideal)?;
    let order = j.order.as_ref().map(|o| order_from_json(o, &ring)).transpose()?;
    let cert = match j.kind.as_str() {
        "G_QUADRATIC" => {
            let (bring, basis) = ideal_from_json(j.basis.as_ref().ok_or_else(|| missing("basis"))?)?;
            if bring.names() != ring.names() {
                return Err(CliError::Parse(String::from("basis ring differs from ideal ring")));
            }
            let basis = basis.iter().map(|p| p.map_by_name(&ring)).collect::<Result<_, _>>()?;
            KoszulCertificate::GQuadratic { order: order.ok_or_else(|| missing("order"))?, basis }
        }
        "CI_OF_QUADRICS" => {
            let leading = j.leading.as_ref().ok_or_else(|| missing("leading"))?;
            if leading.iter().any(|e| e.len() != ring.nvars()) {
                return Err(CliError::Parse(String::from("leading exponent vector of wrong length")));
            }
            let leading = leading.iter().map(|e| Monomial::new(&ring, e.clone())).collect();
            KoszulCertificate::QuadricCompleteIntersection { order, leading }
        }
        "NON_LINEAR_POWER" => KoszulCertificate::NonLinearPower {
            power: j.power.ok_or_else(|| missing("power"))?,
            i: j.i.ok_or_else(|| missing("i"))?,
            degree: j.degree.ok_or_else(|| missing("degree"))?,
            rank: j.rank.ok_or_else(|| missing("rank"))?,
        },
        other => return Err(CliError::Parse(format!("unknown certificate kind `{other}`"))),
    };
    Ok((ring, gens, cert))
}

/// Parses and recomputes a certificate.
pub fn replay(text: &str, budget: &dyn Budget) -> Result<bool, CliError> {
    let j: CertificateJson = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let (_, gens, cert) = certificate_from_json(&j)?;
    Ok(replay_certificate(&gens, &cert, budget)?)
}
