//! Minimal native SVG scatter rendering for the spectral figures: points,
//! vertical reference lines, axes with a few ticks. No external plotting
//! dependency.

/// A vertical reference line at `x` with a color and legend label.
#[derive(Debug, Clone)]
pub struct VLine {
    pub x: f64,
    pub color: &'static str,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct Scatter {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    /// (x, y) data points
    pub points: Vec<(f64, f64)>,
    pub vlines: Vec<VLine>,
}

const W: f64 = 760.0;
const H: f64 = 520.0;
const ML: f64 = 64.0; // left margin
const MR: f64 = 24.0;
const MT: f64 = 40.0;
const MB: f64 = 48.0;

impl Scatter {
    pub fn render(&self) -> String {
        let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in &self.points {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
        for v in &self.vlines {
            xmin = xmin.min(v.x);
            xmax = xmax.max(v.x);
        }
        if !xmin.is_finite() {
            (xmin, xmax, ymin, ymax) = (0.0, 1.0, 0.0, 1.0);
        }
        if (xmax - xmin).abs() < 1e-12 {
            xmax = xmin + 1.0;
        }
        if (ymax - ymin).abs() < 1e-12 {
            ymax = ymin + 1.0;
        }
        let xpad = 0.04 * (xmax - xmin);
        let ypad = 0.06 * (ymax - ymin);
        let (x0, x1) = (xmin - xpad, xmax + xpad);
        let (y0, y1) = (ymin - ypad, ymax + ypad);
        let sx = |x: f64| ML + (x - x0) / (x1 - x0) * (W - ML - MR);
        let sy = |y: f64| H - MB - (y - y0) / (y1 - y0) * (H - MT - MB);

        let mut s = String::new();
        s.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
             viewBox=\"0 0 {W} {H}\">\n"
        ));
        s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        s.push_str(&format!(
            "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" \
             font-family=\"sans-serif\">{}</text>\n",
            W / 2.0,
            xml_escape(&self.title)
        ));
        // axes
        s.push_str(&format!(
            "<line x1=\"{ML}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
            H - MB,
            W - MR,
            H - MB
        ));
        s.push_str(&format!(
            "<line x1=\"{ML}\" y1=\"{MT}\" x2=\"{ML}\" y2=\"{}\" stroke=\"black\"/>\n",
            H - MB
        ));
        // ticks
        for i in 0..=4 {
            let fx = x0 + (x1 - x0) * i as f64 / 4.0;
            let px = sx(fx);
            s.push_str(&format!(
                "<line x1=\"{px:.1}\" y1=\"{}\" x2=\"{px:.1}\" y2=\"{}\" stroke=\"black\"/>\n",
                H - MB,
                H - MB + 5.0
            ));
            s.push_str(&format!(
                "<text x=\"{px:.1}\" y=\"{}\" text-anchor=\"middle\" font-size=\"11\" \
                 font-family=\"sans-serif\">{fx:.3}</text>\n",
                H - MB + 18.0
            ));
            let fy = y0 + (y1 - y0) * i as f64 / 4.0;
            let py = sy(fy);
            s.push_str(&format!(
                "<line x1=\"{}\" y1=\"{py:.1}\" x2=\"{ML}\" y2=\"{py:.1}\" stroke=\"black\"/>\n",
                ML - 5.0
            ));
            s.push_str(&format!(
                "<text x=\"{}\" y=\"{:.1}\" text-anchor=\"end\" font-size=\"11\" \
                 font-family=\"sans-serif\">{fy:.1}</text>\n",
                ML - 8.0,
                py + 4.0
            ));
        }
        // axis labels
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\" \
             font-family=\"sans-serif\">{}</text>\n",
            (ML + W - MR) / 2.0,
            H - 10.0,
            xml_escape(&self.x_label)
        ));
        s.push_str(&format!(
            "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\" \
             font-family=\"sans-serif\" transform=\"rotate(-90 16 {})\">{}</text>\n",
            (MT + H - MB) / 2.0,
            (MT + H - MB) / 2.0,
            xml_escape(&self.y_label)
        ));
        // reference lines
        for (i, v) in self.vlines.iter().enumerate() {
            let px = sx(v.x);
            s.push_str(&format!(
                "<line x1=\"{px:.2}\" y1=\"{MT}\" x2=\"{px:.2}\" y2=\"{}\" stroke=\"{}\" \
                 stroke-dasharray=\"5,3\"/>\n",
                H - MB,
                v.color
            ));
            s.push_str(&format!(
                "<text x=\"{:.2}\" y=\"{:.1}\" font-size=\"11\" fill=\"{}\" \
                 font-family=\"sans-serif\">{}</text>\n",
                px + 4.0,
                MT + 14.0 + 14.0 * i as f64,
                v.color,
                xml_escape(&v.label)
            ));
        }
        // points
        for &(x, y) in &self.points {
            s.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.4\" fill=\"steelblue\" \
                 fill-opacity=\"0.75\"/>\n",
                sx(x),
                sy(y)
            ));
        }
        s.push_str("</svg>\n");
        s
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
