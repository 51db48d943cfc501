//! The curve `α ↦ f(α)` on a log grid, with its three interior critical
//! points marked, as CSV and as a small standalone SVG.

use serde::{Deserialize, Serialize};

use super::normal::{f_alpha, g_roots};
use crate::error::{precondition, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub alpha: f64,
    pub f_alpha: f64,
    pub is_extremum: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub label: String,
    pub alpha: f64,
    pub f_alpha: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveTable {
    pub rows: Vec<CurveRow>,
    pub extrema: Vec<Extremum>,
    pub min_value: f64,
    pub argmin: f64,
    /// All values lie strictly between 1/2 and 1.
    pub above_half: bool,
    /// Directions of the grid differences, with runs collapsed.
    pub pattern: Vec<String>,
    /// The pattern is increase, decrease, increase, decrease.
    pub pattern_ok: bool,
}

/// Tabulates `f` at `points` log-spaced values in `[alpha_min, alpha_max]`
/// plus the critical points `√r1`, `2`, `√r3` that fall in range.
pub fn emit_f_alpha_curve(alpha_min: f64, alpha_max: f64, points: usize) -> Result<CurveTable> {
    if !(alpha_min > 0.0 && alpha_min < alpha_max) {
        return precondition("need 0 < alpha_min < alpha_max");
    }
    if points < 2 {
        return precondition("need at least two grid points");
    }
    let roots = g_roots()?;
    let marks = [
        ("local max (sqrt r1)", roots.r1.sqrt()),
        ("local min (alpha = 2)", 2.0),
        ("local max (sqrt r3)", roots.r3.sqrt()),
    ];
    let (lmin, lmax) = (alpha_min.ln(), alpha_max.ln());
    let mut rows = Vec::with_capacity(points + 3);
    for i in 0..points {
        let alpha = (lmin + (lmax - lmin) * i as f64 / (points - 1) as f64).exp();
        rows.push(CurveRow {
            alpha,
            f_alpha: f_alpha(alpha)?,
            is_extremum: false,
        });
    }
    let mut extrema = Vec::new();
    for (label, alpha) in marks {
        if alpha < alpha_min || alpha > alpha_max {
            continue;
        }
        let f = f_alpha(alpha)?;
        rows.push(CurveRow {
            alpha,
            f_alpha: f,
            is_extremum: true,
        });
        extrema.push(Extremum {
            label: label.to_string(),
            alpha,
            f_alpha: f,
        });
    }
    rows.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
    rows.dedup_by(|a, b| a.alpha == b.alpha && {
        b.is_extremum |= a.is_extremum;
        true
    });

    let (argmin, min_value) = rows
        .iter()
        .map(|r| (r.alpha, r.f_alpha))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let above_half = rows.iter().all(|r| r.f_alpha > 0.5 && r.f_alpha < 1.0);
    let mut pattern: Vec<String> = Vec::new();
    for w in rows.windows(2) {
        let d = w[1].f_alpha - w[0].f_alpha;
        if d == 0.0 {
            continue;
        }
        let s = if d > 0.0 { "increase" } else { "decrease" };
        if pattern.last().map(String::as_str) != Some(s) {
            pattern.push(s.to_string());
        }
    }
    let pattern_ok = pattern == ["increase", "decrease", "increase", "decrease"];
    Ok(CurveTable {
        rows,
        extrema,
        min_value,
        argmin,
        above_half,
        pattern,
        pattern_ok,
    })
}

impl CurveTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,f_alpha,is_extremum\n");
        for r in &self.rows {
            out.push_str(&format!("{:.12},{:.15},{}\n", r.alpha, r.f_alpha, r.is_extremum));
        }
        out
    }

    /// Log-scale x axis, linear y axis, one polyline and a circle per
    /// extremum.
    pub fn to_svg(&self) -> String {
        let (w, h, pad) = (640.0, 400.0, 48.0);
        let (x0, x1) = (self.rows[0].alpha.ln(), self.rows[self.rows.len() - 1].alpha.ln());
        let ys = self.rows.iter().map(|r| r.f_alpha);
        let (y0, y1) = (0.5, ys.fold(0.5f64, f64::max) + 0.005);
        let px = |a: f64| pad + (a.ln() - x0) / (x1 - x0) * (w - 2.0 * pad);
        let py = |f: f64| h - pad - (f - y0) / (y1 - y0) * (h - 2.0 * pad);
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
             <line x1=\"{pad}\" y1=\"{yb}\" x2=\"{xr}\" y2=\"{yb}\" stroke=\"black\"/>\n\
             <line x1=\"{pad}\" y1=\"{pad}\" x2=\"{pad}\" y2=\"{yb}\" stroke=\"black\"/>\n\
             <text x=\"{tx}\" y=\"{ty}\" font-size=\"14\" text-anchor=\"middle\">alpha (log scale)</text>\n\
             <text x=\"14\" y=\"{pad}\" font-size=\"14\">f(alpha)</text>\n",
            yb = h - pad,
            xr = w - pad,
            tx = w / 2.0,
            ty = h - 12.0,
        );
        let pts: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("{:.2},{:.2}", px(r.alpha), py(r.f_alpha)))
            .collect();
        s.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"{}\"/>\n",
            pts.join(" ")
        ));
        for e in &self.extrema {
            s.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"green\"><title>{}: alpha = {:.6}, f = {:.6}</title></circle>\n",
                px(e.alpha),
                py(e.f_alpha),
                e.label,
                e.alpha,
                e.f_alpha
            ));
        }
        s.push_str("</svg>\n");
        s
    }
}
