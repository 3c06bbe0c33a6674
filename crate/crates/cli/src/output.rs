//! Tagged numeric output: every emitted number says whether it is exact or
//! which way it was rounded.

use pnt_bounds::LogScalar;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Tagged {
    pub value: f64,
    pub rounding: &'static str,
}

impl Tagged {
    pub fn exact(value: f64) -> Tagged {
        Tagged {
            value,
            rounding: "exact",
        }
    }

    pub fn up(value: f64) -> Tagged {
        Tagged {
            value,
            rounding: "rounded-up",
        }
    }

    pub fn down(value: f64) -> Tagged {
        Tagged {
            value,
            rounding: "rounded-down",
        }
    }
}

/// A log-space value rendered as (sign, log10 magnitude) plus the plain
/// value when representable.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TaggedLog {
    pub log10: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    pub rounding: &'static str,
}

impl TaggedLog {
    pub fn new(v: &LogScalar, rounding: &'static str) -> TaggedLog {
        TaggedLog {
            log10: v.log10_mag().unwrap_or(f64::NEG_INFINITY),
            value: v.to_f64().ok(),
            rounding,
        }
    }
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("certificates serialize")
    );
}
