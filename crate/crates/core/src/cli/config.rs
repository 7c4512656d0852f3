use serde::{Deserialize, Serialize};

use crate::sdc::{AdversaryModel, AttackKind, AttackTarget, SessionConfig, VerificationPolicy};
use crate::{Result, SimError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeleportConfig {
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SdcRunConfig {
    pub seed: u64,
    #[serde(flatten)]
    pub session: SessionConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub adversary: AdversaryModel,
    pub policy: VerificationPolicy,
}

/// One invocation of the harness.
#[derive(Debug, Clone, PartialEq)]
pub enum RunConfig {
    Teleport(TeleportConfig),
    Sdc(SdcRunConfig),
    Verify(VerifyConfig),
    Table,
}

fn positive_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(SimError::InvalidParameter("trials must be at least 1".into()));
    }
    Ok(())
}

impl TeleportConfig {
    pub fn validate(&self) -> Result<()> {
        positive_trials(self.trials)
    }
}

impl SdcRunConfig {
    pub fn validate(&self) -> Result<()> {
        self.session.policy.validate()?;
        self.session.adversary.validate()
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        positive_trials(self.trials)?;
        self.policy.validate()?;
        self.adversary.validate()
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        match self {
            RunConfig::Teleport(c) => c.validate(),
            RunConfig::Sdc(c) => c.validate(),
            RunConfig::Verify(c) => c.validate(),
            RunConfig::Table => Ok(()),
        }
    }
}

/// Builds an adversary from command-line spellings: `none`, `ir-z`, `ir-x`
/// or `depol`, plus target `A`/`B`. `p` must be given exactly when the kind
/// is `depol`.
pub fn parse_adversary(kind: &str, p: Option<f64>, target: &str) -> Result<AdversaryModel> {
    let target = match target {
        "A" | "a" => AttackTarget::QubitA,
        "B" | "b" => AttackTarget::QubitB,
        other => return Err(SimError::InvalidParameter(format!("unknown target '{other}' (expected A or B)"))),
    };
    let kind = match (kind, p) {
        ("none", None) => AttackKind::None,
        ("ir-z", None) => AttackKind::InterceptResendZ,
        ("ir-x", None) => AttackKind::InterceptResendX,
        ("depol", Some(p)) => AttackKind::Depolarize { p },
        ("depol", None) => return Err(SimError::InvalidParameter("depol requires --p".into())),
        ("none" | "ir-z" | "ir-x", Some(_)) => {
            return Err(SimError::InvalidParameter(format!("--p is only valid with depol, not {kind}")))
        }
        (other, _) => return Err(SimError::InvalidParameter(format!("unknown adversary '{other}'"))),
    };
    let model = AdversaryModel { kind, target };
    model.validate()?;
    Ok(model)
}
