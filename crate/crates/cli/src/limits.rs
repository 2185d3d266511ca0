//! Wall-clock and node limits.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use zipcross_core::solver::Interrupt;

/// Environment variable holding the default node limit.
pub const NODE_LIMIT_VAR: &str = "ZIPCROSS_NODE_LIMIT";
/// Environment variable holding the default time limit in seconds.
pub const TIME_LIMIT_VAR: &str = "ZIPCROSS_TIME_LIMIT";

/// Stops a search once a deadline passes or [`Deadline::cancel`] is called.
#[derive(Debug)]
pub struct Deadline {
    end: Option<Instant>,
    cancelled: AtomicBool,
}

impl Deadline {
    pub fn new(limit: Option<Duration>) -> Self {
        Deadline {
            end: limit.map(|d| Instant::now() + d),
            cancelled: AtomicBool::new(false),
        }
    }

    pub fn none() -> Self {
        Deadline::new(None)
    }

    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn expired(&self) -> bool {
        self.cancelled.load(Ordering::Relaxed) || self.end.is_some_and(|e| Instant::now() >= e)
    }
}

impl Interrupt for Deadline {
    fn should_stop(&self) -> bool {
        self.expired()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Limits {
    pub nodes: Option<u64>,
    pub seconds: Option<f64>,
}

impl Limits {
    /// Flags win over the environment.
    pub fn resolve(nodes: Option<u64>, seconds: Option<f64>) -> Result<Self, String> {
        let env_nodes = match std::env::var(NODE_LIMIT_VAR) {
            Ok(v) => Some(
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("{NODE_LIMIT_VAR}={v} is not an integer"))?,
            ),
            Err(_) => None,
        };
        let env_secs = match std::env::var(TIME_LIMIT_VAR) {
            Ok(v) => Some(
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("{TIME_LIMIT_VAR}={v} is not a number"))?,
            ),
            Err(_) => None,
        };
        let seconds = seconds.or(env_secs);
        if seconds.is_some_and(|s| !(s.is_finite() && s >= 0.0)) {
            return Err("time limit must be a nonnegative number of seconds".into());
        }
        Ok(Limits {
            nodes: nodes.or(env_nodes),
            seconds,
        })
    }

    pub fn deadline(&self) -> Deadline {
        Deadline::new(self.seconds.map(Duration::from_secs_f64))
    }
}
