//! Report plumbing shared by the verification suites: sample grids,
//! violation records, and fixed-precision numeric formatting.

use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

/// Default slack below which an inequality margin counts as a violation.
pub const MARGIN_TOL: f64 = 1e-9;

/// Formats a float in scientific notation with 17 significant digits,
/// enough to round-trip any f64.
pub fn fmt_g17(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Uniform sample grid over a closed interval.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(start: f64, end: f64, count: usize) -> Self {
        assert!(count >= 2, "grid needs at least two points");
        assert!(end > start, "grid interval must be nondegenerate");
        GridSpec { start, end, count }
    }

    /// Points including both endpoints.
    pub fn points(&self) -> Vec<f64> {
        let step = (self.end - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|i| self.start + step * i as f64).collect()
    }

    /// Points over the half-open interval (start, end].
    pub fn points_open_start(&self) -> Vec<f64> {
        let step = (self.end - self.start) / self.count as f64;
        (1..=self.count).map(|i| self.start + step * i as f64).collect()
    }
}

/// A sample at which a checked inequality fell below tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub label: String,
    pub margin: f64,
}

/// Outcome of one verification run. `worst_margin` is the minimum slack
/// (left side minus right side) seen across all samples; a run passes when
/// no sample dips below the violation tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub samples: u64,
    pub worst_margin: f64,
    pub violations: Vec<Violation>,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub diagnostics: BTreeMap<String, f64>,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>) -> Self {
        CheckReport {
            check_name: check_name.into(),
            samples: 0,
            worst_margin: f64::INFINITY,
            violations: Vec::new(),
            runtime_ms: 0,
            diagnostics: BTreeMap::new(),
        }
    }

    /// Records one sample. The label closure is only invoked for violations.
    pub fn observe(&mut self, margin: f64, tol: f64, label: impl FnOnce() -> String) {
        self.samples += 1;
        if margin < self.worst_margin {
            self.worst_margin = margin;
        }
        if !(margin >= -tol) {
            self.violations.push(Violation { label: label(), margin });
        }
    }

    /// Records a quantity that must sit at zero margin (equality cases).
    pub fn observe_equality(&mut self, deviation: f64, tol: f64, label: impl FnOnce() -> String) {
        self.observe(tol - deviation.abs(), 0.0, label);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.samples += other.samples;
        self.worst_margin = self.worst_margin.min(other.worst_margin);
        self.violations.extend(other.violations);
        self.runtime_ms += other.runtime_ms;
        for (k, v) in other.diagnostics {
            self.diagnostics.insert(k, v);
        }
    }

    /// Sorts violations canonically and stamps the runtime.
    pub fn finalize(&mut self, started: Instant) {
        self.violations.sort_by(|a, b| {
            a.label
                .cmp(&b.label)
                .then(a.margin.partial_cmp(&b.margin).unwrap_or(std::cmp::Ordering::Equal))
        });
        self.runtime_ms = started.elapsed().as_millis() as u64;
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = GridSpec::new(0.0, 1.0, 5);
        let pts = g.points();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], 0.0);
        assert_eq!(pts[4], 1.0);
        let open = g.points_open_start();
        assert_eq!(open.len(), 5);
        assert!(open[0] > 0.0);
        assert_eq!(open[4], 1.0);
    }

    #[test]
    fn report_tracks_worst_margin_and_violations() {
        let t0 = Instant::now();
        let mut r = CheckReport::new("demo");
        r.observe(1.0, MARGIN_TOL, || "a".into());
        r.observe(-1e-3, MARGIN_TOL, || "b".into());
        r.observe(2.0, MARGIN_TOL, || "c".into());
        r.finalize(t0);
        assert_eq!(r.samples, 3);
        assert_eq!(r.worst_margin, -1e-3);
        assert_eq!(r.violations.len(), 1);
        assert!(!r.passed());
    }

    #[test]
    fn fmt_g17_round_trips() {
        for &x in &[0.0, 1.0, -1.0 / 3.0, 6.283185307179586, 1e-300, 3.5e200] {
            let s = fmt_g17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }
}
