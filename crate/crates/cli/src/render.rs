//! SVG 1.1 drawings of grid scenes, and a text dump for finite ones.

use crate::load::{Carrier, Ctx, DescriptiveCtx, Loaded};
use crate::report::Report;
use serde_json::Value;
use std::fmt::Write as _;
use strongnear::{FiniteSpace, Grid, GridRegion, Space};

const PALETTE: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f",
];

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            c => out.push(c),
        }
    }
    out
}

/// Row `y` of the grid is drawn at SVG row `height - 1 - y` so that the
/// picture is upright.
fn fill_path(r: &GridRegion) -> String {
    let (w, h) = (r.width(), r.height());
    let mut d = String::new();
    for y in 0..h {
        let row = h - 1 - y;
        let mut x = 0;
        while x < w {
            if !r.get_xy(x, y) {
                x += 1;
                continue;
            }
            let start = x;
            while x < w && r.get_xy(x, y) {
                x += 1;
            }
            let _ = write!(d, "M{start} {row}h{}v1h-{}z", x - start, x - start);
        }
    }
    d
}

/// Pixel-boundary edges of `r`, merged into maximal straight runs.
fn outline_path(r: &GridRegion) -> String {
    let (w, h) = (r.width(), r.height());
    let inside =
        |x: i64, y: i64| x >= 0 && y >= 0 && (x as usize) < w && (y as usize) < h && r.get_xy(x as usize, y as usize);
    let mut d = String::new();
    // horizontal edges sit between grid rows y-1 and y
    for y in 0..=h as i64 {
        let svg_y = h as i64 - y;
        let mut x = 0i64;
        while x < w as i64 {
            let edge = |x: i64| inside(x, y) != inside(x, y - 1);
            if !edge(x) {
                x += 1;
                continue;
            }
            let start = x;
            while x < w as i64 && edge(x) {
                x += 1;
            }
            let _ = write!(d, "M{start} {svg_y}h{}", x - start);
        }
    }
    for x in 0..=w as i64 {
        let mut y = 0i64;
        while y < h as i64 {
            let edge = |y: i64| inside(x, y) != inside(x - 1, y);
            if !edge(y) {
                y += 1;
                continue;
            }
            let start = y;
            while y < h as i64 && edge(y) {
                y += 1;
            }
            let _ = write!(d, "M{x} {}v{}", h as i64 - y, y - start);
        }
    }
    d
}

/// Label anchor: the set pixel nearest the centroid.
fn anchor(r: &GridRegion) -> Option<(f64, f64)> {
    let n = r.count();
    if n == 0 {
        return None;
    }
    let w = r.width();
    let (mut sx, mut sy) = (0.0, 0.0);
    for i in r.iter() {
        sx += (i % w) as f64;
        sy += (i / w) as f64;
    }
    let (cx, cy) = (sx / n as f64, sy / n as f64);
    let best = r
        .iter()
        .min_by(|&a, &b| {
            let da = ((a % w) as f64 - cx).powi(2) + ((a / w) as f64 - cy).powi(2);
            let db = ((b % w) as f64 - cx).powi(2) + ((b / w) as f64 - cy).powi(2);
            da.total_cmp(&db)
        })
        .expect("nonempty");
    Some(((best % w) as f64 + 0.5, (r.height() - best / w) as f64 - 0.5))
}

struct Overlay {
    label: String,
    kind: &'static str,
    sets: Vec<String>,
    numbered: bool,
}

fn names(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().filter_map(|x| x.as_str().map(str::to_string)).collect())
        .unwrap_or_default()
}

fn overlays(report: &Report) -> Vec<Overlay> {
    let mut out = Vec::new();
    for r in &report.records {
        let d = &r.details;
        let (kind, sets, numbered) = match r.check.as_str() {
            "verify_decomposition" | "find_decomposition" | "delta_implies_connected" => {
                ("decomposition", names(&d["pieces"]), true)
            }
            "find_chain" => ("chain", names(&d["links"]), true),
            "spc" => {
                let w = &d["spc_witness"];
                let pair: Vec<String> = ["a", "b", "set"]
                    .iter()
                    .filter_map(|k| w[*k].as_str().map(str::to_string))
                    .collect();
                ("failing-pair", pair, false)
            }
            _ => continue,
        };
        if !sets.is_empty() {
            out.push(Overlay {
                label: r.label.clone(),
                kind,
                sets,
                numbered,
            });
        }
    }
    out
}

/// Draw every named set of a grid scene plus witness overlays taken from
/// `report`. Refused for finite scenes; see [`text_dump`].
pub fn render_svg(loaded: &Loaded, report: &Report) -> Result<String, String> {
    match &loaded.carrier {
        Carrier::Grid(ctx) => Ok(svg(ctx, loaded.descriptive.as_ref(), report)),
        Carrier::Finite(_) => Err("rendering needs the grid backend".into()),
    }
}

fn svg(ctx: &Ctx<Grid>, desc: Option<&DescriptiveCtx>, report: &Report) -> String {
    let g = &ctx.space;
    let (w, h) = (g.width(), g.height());
    let font = (w.max(h) as f64 / 30.0).max(4.0);
    let stroke = (w.max(h) as f64 / 400.0).max(0.5);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(s, "<title>{}</title>", escape(&report.scene));
    let _ = writeln!(s, "<rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>");
    if let Some(domain) = g.domain() {
        let _ = writeln!(
            s,
            "<g id=\"domain\" fill=\"#eeeeee\"><path d=\"{}\"/></g>",
            fill_path(domain)
        );
    }
    if let Some(d) = desc {
        tessellation(&mut s, d, stroke, font);
    }
    for (i, (name, region)) in ctx.sets.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let _ = write!(
            s,
            "<g id=\"set-{}\" class=\"region\" fill=\"{color}\" fill-opacity=\"0.35\">",
            escape(name)
        );
        if !region.is_empty() {
            let _ = write!(s, "<path d=\"{}\"/>", fill_path(region));
        }
        s.push_str("</g>\n");
    }
    for (k, o) in overlays(report).iter().enumerate() {
        let color = if o.kind == "failing-pair" { "#d00000" } else { "#000000" };
        let _ = writeln!(
            s,
            "<g id=\"witness-{k}\" class=\"{}\" data-check=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{stroke}\">",
            o.kind,
            escape(&o.label)
        );
        for (j, name) in o.sets.iter().enumerate() {
            let Some(region) = ctx.sets.iter().find(|(n, _)| n == name).map(|(_, r)| r) else {
                continue;
            };
            let _ = writeln!(
                s,
                "<path data-set=\"{}\" d=\"{}\"/>",
                escape(name),
                outline_path(region)
            );
            if let (true, Some((x, y))) = (o.numbered, anchor(region)) {
                let _ = writeln!(
                    s,
                    "<text x=\"{x:.1}\" y=\"{y:.1}\" font-size=\"{font:.1}\" fill=\"{color}\" stroke=\"none\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
                    j + 1
                );
            }
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}

fn color_hex(name: &str, k: usize) -> &'static str {
    match name {
        "g" | "green" => "#59a14f",
        "r" | "red" => "#e15759",
        "b" | "blue" => "#4e79a7",
        _ => PALETTE[k % PALETTE.len()],
    }
}

fn tessellation(s: &mut String, d: &DescriptiveCtx, stroke: f64, font: f64) {
    let t = &d.tessellation;
    for (k, cell) in t.cells().iter().enumerate() {
        let _ = write!(
            s,
            "<g id=\"cell-{}\" class=\"cell\" fill=\"{}\" fill-opacity=\"0.5\">",
            escape(&cell.name),
            color_hex(&cell.color, k)
        );
        let region = t.cell_region(k);
        if !region.is_empty() {
            let _ = write!(s, "<path d=\"{}\"/>", fill_path(&region));
        }
        s.push_str("</g>\n");
    }
    for (i, r) in d.family.regions.iter().enumerate() {
        let _ = writeln!(
            s,
            "<g id=\"family-{i}\" class=\"family\" data-instant=\"{}\" data-cell=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{stroke}\"><path d=\"{}\"/></g>",
            escape(&r.instant),
            escape(&r.cell),
            outline_path(&r.region)
        );
    }
    let g = t.grid();
    for (name, at, _) in &d.probes {
        let Some(p) = g.pixel_at(*at) else { continue };
        let (x, y) = ((p % g.width()) as f64 + 0.5, (g.height() - p / g.width()) as f64 - 0.5);
        let _ = writeln!(
            s,
            "<g class=\"probe\"><circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{:.1}\" fill=\"#000000\"/><text x=\"{:.1}\" y=\"{y:.1}\" font-size=\"{font:.1}\">{}</text></g>",
            font / 4.0,
            x + font / 2.0,
            escape(name)
        );
    }
}

/// Plain-text description of a finite scene: points, opens and named sets.
pub fn text_dump(loaded: &Loaded) -> String {
    match &loaded.carrier {
        Carrier::Finite(ctx) => finite_dump(ctx),
        Carrier::Grid(ctx) => {
            let mut s = String::new();
            for (name, r) in &ctx.sets {
                let _ = writeln!(s, "{name}: {}", ctx.space.describe(r));
            }
            s
        }
    }
}

fn finite_dump(ctx: &Ctx<FiniteSpace>) -> String {
    let sp = &ctx.space;
    let mut s = String::new();
    let _ = writeln!(s, "points: {}", sp.labels().join(" "));
    let opens: Vec<String> = sp.opens().iter().map(|o| sp.describe(o)).collect();
    let _ = writeln!(s, "opens: {}", opens.join(" "));
    for (name, set) in &ctx.sets {
        let _ = writeln!(s, "{name}: {}", sp.describe(set));
    }
    s
}
