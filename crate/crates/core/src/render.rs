//! Deterministic SVG diagrams: Dyck paths on their grid, necklaces as bead
//! circles with block separators, and gallery pages combining both.
//!
//! Rendering is a pure function of the object and the options; every
//! coordinate is emitted with exactly three decimal places, so equal inputs
//! produce byte-identical documents. Elements carry stable `class`
//! attributes (`grid`, `diagonal`, `path`, `anchor`, `bead`, `separator`,
//! `mark`) so consumers and tests can count features without a full XML
//! parser.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, GridShape};
use crate::necklaces::{canonical_rotation, enumerate_necklaces, Necklace};
use crate::paths::{enumerate_dyck, DyckPath, Letter};
use crate::Int;

const GRID_STROKE: &str = "#cccccc";
const DIAGONAL_STROKE: &str = "#999999";
const PATH_STROKE: &str = "#2266aa";
const ANCHOR_FILL: &str = "#e74c3c";
const BEAD_STROKE: &str = "#000000";
const SEPARATOR_STROKE: &str = "#666666";
const MARK_STROKE: &str = "#f1948a";
const LABEL_FAMILY: &str = "sans-serif";

/// Geometry for path diagrams, in user units.
#[derive(Debug, Clone)]
pub struct PathOptions {
    /// Side length of one grid cell.
    pub unit: f64,
    /// Blank border around the grid.
    pub margin: f64,
}

impl Default for PathOptions {
    fn default() -> Self {
        PathOptions {
            unit: 40.0,
            margin: 24.0,
        }
    }
}

/// Geometry for necklace diagrams, in user units.
#[derive(Debug, Clone)]
pub struct NecklaceOptions {
    /// Distance from the center to each bead center.
    pub radius: f64,
    pub bead_radius: f64,
}

impl Default for NecklaceOptions {
    fn default() -> Self {
        NecklaceOptions {
            radius: 56.0,
            bead_radius: 10.0,
        }
    }
}

/// Geometry and size guard for gallery pages.
#[derive(Debug, Clone)]
pub struct GalleryOptions {
    /// Maximum number of necklace rows before rendering is refused.
    pub cap: u64,
    pub path: PathOptions,
    pub necklace: NecklaceOptions,
}

impl Default for GalleryOptions {
    fn default() -> Self {
        GalleryOptions {
            cap: 64,
            path: PathOptions::default(),
            necklace: NecklaceOptions::default(),
        }
    }
}

/// Fixed three-decimal formatting; the only numeric formatting in any SVG.
/// Negative zero is normalized so equal geometry gives equal bytes.
fn fmt3(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn svg_document(body: &str, width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n{body}</svg>\n",
        w = fmt3(width),
        h = fmt3(height),
    )
}

/// Grid, main diagonal, the path polyline, and one marker per anchor.
/// The polyline has `m + n` segments; the viewport is the grid plus margins.
pub fn render_path(path: &DyckPath, options: &PathOptions) -> String {
    let (body, width, height) = path_group(path, options);
    svg_document(&body, width, height)
}

fn path_group(path: &DyckPath, o: &PathOptions) -> (String, f64, f64) {
    let shape = path.shape();
    let (m, n) = (shape.m(), shape.n());
    let width = 2.0 * o.margin + n as f64 * o.unit;
    let height = 2.0 * o.margin + m as f64 * o.unit;
    let gx = |x: f64| o.margin + x * o.unit;
    // Grid y grows upward, SVG y grows downward.
    let gy = |y: f64| o.margin + (m as f64 - y) * o.unit;
    let mut s = String::new();

    for i in 0..=n {
        let x = fmt3(gx(i as f64));
        let _ = writeln!(
            s,
            "<line class=\"grid\" x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"{GRID_STROKE}\" stroke-width=\"1\"/>",
            fmt3(gy(m as f64)),
            fmt3(gy(0.0)),
        );
    }
    for j in 0..=m {
        let y = fmt3(gy(j as f64));
        let _ = writeln!(
            s,
            "<line class=\"grid\" x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"{GRID_STROKE}\" stroke-width=\"1\"/>",
            fmt3(gx(0.0)),
            fmt3(gx(n as f64)),
        );
    }
    let _ = writeln!(
        s,
        "<line class=\"diagonal\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{DIAGONAL_STROKE}\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>",
        fmt3(gx(0.0)),
        fmt3(gy(0.0)),
        fmt3(gx(n as f64)),
        fmt3(gy(m as f64)),
    );

    let points: Vec<String> = path
        .vertices()
        .into_iter()
        .map(|(x, y)| format!("{},{}", fmt3(gx(x as f64)), fmt3(gy(y as f64))))
        .collect();
    let _ = writeln!(
        s,
        "<polyline class=\"path\" points=\"{}\" fill=\"none\" stroke=\"{PATH_STROKE}\" stroke-width=\"3\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>",
        points.join(" "),
    );

    for &(x, y) in path.anchors() {
        let _ = writeln!(
            s,
            "<circle class=\"anchor\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{ANCHOR_FILL}\"/>",
            fmt3(gx(x as f64)),
            fmt3(gy(y as f64)),
            fmt3(o.unit * 0.125),
        );
    }
    (s, width, height)
}

/// Beads on a circle, first canonical letter at the top and the rest
/// clockwise; U beads white, R beads black. One radial separator per block
/// boundary (`gcd(m, n)` of them) and an optional highlight band behind the
/// marked block's beads. `mark` must be a distinguishable block index.
pub fn render_necklace(
    necklace: &Necklace,
    mark: Option<usize>,
    options: &NecklaceOptions,
) -> Result<String> {
    let (body, size) = necklace_group(necklace, mark, options)?;
    Ok(svg_document(&body, size, size))
}

fn necklace_group(
    necklace: &Necklace,
    mark: Option<usize>,
    o: &NecklaceOptions,
) -> Result<(String, f64)> {
    if let Some(index) = mark {
        if !necklace.distinguishable_blocks().contains(&index) {
            return Err(Error::MarkNotDistinguishable { index });
        }
    }
    let shape = necklace.shape();
    let total = shape.total();
    let gcd = shape.gcd();
    let block_len = shape.block_len();

    let sep_reach = o.bead_radius + 6.0;
    let extent = o.radius + o.bead_radius + sep_reach + 4.0;
    let size = 2.0 * extent;
    let center = extent;
    // Bead k sits at 90 degrees minus k full turns over the bead count,
    // i.e. the first bead on top, the rest clockwise on screen.
    let angle = |k: f64| (90.0 - k * 360.0 / total as f64).to_radians();
    let pos = |k: f64, r: f64| {
        let a = angle(k);
        (center + r * a.cos(), center - r * a.sin())
    };
    let mut s = String::new();

    if let Some(index) = mark {
        let band_width = 2.0 * (o.bead_radius + 4.0);
        if gcd == 1 {
            let _ = writeln!(
                s,
                "<circle class=\"mark\" cx=\"{c}\" cy=\"{c}\" r=\"{r}\" fill=\"none\" stroke=\"{MARK_STROKE}\" stroke-width=\"{w}\"/>",
                c = fmt3(center),
                r = fmt3(o.radius),
                w = fmt3(band_width),
            );
        } else {
            let start = (index as u64 * block_len) as f64 - 0.5;
            let end = start + block_len as f64;
            let (x0, y0) = pos(start, o.radius);
            let (x1, y1) = pos(end, o.radius);
            let large_arc = if block_len as f64 / total as f64 > 0.5 { 1 } else { 0 };
            let _ = writeln!(
                s,
                "<path class=\"mark\" d=\"M {} {} A {r} {r} 0 {large_arc} 1 {} {}\" fill=\"none\" stroke=\"{MARK_STROKE}\" stroke-width=\"{w}\" stroke-linecap=\"butt\"/>",
                fmt3(x0),
                fmt3(y0),
                fmt3(x1),
                fmt3(y1),
                r = fmt3(o.radius),
                w = fmt3(band_width),
            );
        }
    }

    for j in 0..gcd {
        let cut = (j * block_len) as f64 - 0.5;
        let (x0, y0) = pos(cut, o.radius - sep_reach);
        let (x1, y1) = pos(cut, o.radius + sep_reach);
        let _ = writeln!(
            s,
            "<line class=\"separator\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{SEPARATOR_STROKE}\" stroke-width=\"1.5\"/>",
            fmt3(x0),
            fmt3(y0),
            fmt3(x1),
            fmt3(y1),
        );
    }

    for (k, &letter) in necklace.canonical().letters().iter().enumerate() {
        let (x, y) = pos(k as f64, o.radius);
        let (class, fill) = match letter {
            Letter::U => ("bead bead-u", "#ffffff"),
            Letter::R => ("bead bead-r", "#000000"),
        };
        let _ = writeln!(
            s,
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" stroke=\"{BEAD_STROKE}\" stroke-width=\"1.5\"/>",
            fmt3(x),
            fmt3(y),
            fmt3(o.bead_radius),
        );
    }
    Ok((s, size))
}

/// Euler's totient by trial division; inputs here divide `m + n`.
fn euler_phi(mut x: u64) -> u64 {
    let mut result = x;
    let mut p = 2;
    while p * p <= x {
        if x.is_multiple_of(p) {
            while x.is_multiple_of(p) {
                x /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if x > 1 {
        result -= result / x;
    }
    result
}

/// Number of necklaces of the shape, by Burnside's lemma:
/// `(1 / (m + n)) * sum over d | gcd(m, n) of phi(d) * binomial((m + n) / d, n / d)`.
/// Used only to guard gallery size before enumerating anything.
pub(crate) fn necklace_count(shape: GridShape) -> Result<Int> {
    let total = shape.total();
    let mut sum = Int::from(0u8);
    for d in 1..=shape.gcd() {
        if shape.gcd().is_multiple_of(d) {
            sum += Int::from(euler_phi(d)) * binomial::<Int>(total / d, shape.n() / d)?;
        }
    }
    let (count, rem) = sum.div_rem(&Int::from(total));
    if !rem.is_zero() {
        return Err(Error::NotDivisible {
            context: "necklace count",
            numerator: sum.to_string(),
            denominator: total.to_string(),
        });
    }
    Ok(count)
}

/// One row per necklace of the shape: the bare necklace with its weight
/// label, every marked variant, then the Dyck paths whose rotation class is
/// that necklace, each with its anchored weight label. Rows are in
/// lexicographic order of canonical words; paths keep enumeration order
/// within a row. Refuses shapes with more necklaces than `options.cap`.
pub fn render_gallery(shape: GridShape, options: &GalleryOptions) -> Result<String> {
    let rows = necklace_count(shape)?;
    if rows > Int::from(options.cap) {
        return Err(Error::GalleryTooLarge {
            necklaces: rows.to_u64().unwrap_or(u64::MAX),
            cap: options.cap,
        });
    }

    let necklaces: Vec<Necklace> = enumerate_necklaces(shape).collect();
    let mut paths_by_class: HashMap<String, Vec<DyckPath>> = HashMap::new();
    for path in enumerate_dyck(shape) {
        let class = canonical_rotation(path.word())?.to_string();
        paths_by_class.entry(class).or_default().push(path);
    }

    let label_height = 22.0;
    let probe_path = enumerate_dyck(shape).next().expect("every shape has a Dyck path");
    let (_, path_w, path_h) = path_group(&probe_path, &options.path);
    let (_, neck_size) = necklace_group(&necklaces[0], None, &options.necklace)?;
    let cell_w = neck_size.max(path_w);
    let cell_h = neck_size.max(path_h) + label_height;
    let outer = 12.0;

    let mut body = String::new();
    let mut max_cols = 0usize;
    for (row, necklace) in necklaces.iter().enumerate() {
        let row_y = outer + row as f64 * cell_h;
        let mut col = 0usize;
        let place = |body: &mut String, content: &str, w: f64, h: f64, class: &str, col: usize| {
            let x = outer + col as f64 * cell_w + (cell_w - w) / 2.0;
            let y = row_y + (cell_h - label_height - h) / 2.0;
            let _ = writeln!(
                body,
                "<g class=\"{class}\" transform=\"translate({} {})\">\n{content}</g>",
                fmt3(x),
                fmt3(y),
            );
        };
        let label = |body: &mut String, text: &str, class: &str, col: usize| {
            let x = outer + col as f64 * cell_w + cell_w / 2.0;
            let y = row_y + cell_h - label_height / 2.0;
            let _ = writeln!(
                body,
                "<text class=\"{class}\" x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"{LABEL_FAMILY}\" font-size=\"14\">{text}</text>",
                fmt3(x),
                fmt3(y),
            );
        };

        let (content, size) = necklace_group(necklace, None, &options.necklace)?;
        place(&mut body, &content, size, size, "cell-necklace", col);
        label(&mut body, &necklace.weight()?.to_string(), "necklace-weight", col);
        col += 1;

        for mark in necklace.distinguishable_blocks() {
            let (content, size) = necklace_group(necklace, Some(mark), &options.necklace)?;
            place(&mut body, &content, size, size, "cell-marked", col);
            col += 1;
        }

        let key = necklace.canonical().to_string();
        for path in paths_by_class.get(&key).map(Vec::as_slice).unwrap_or(&[]) {
            let (content, w, h) = path_group(path, &options.path);
            place(&mut body, &content, w, h, "cell-path", col);
            label(
                &mut body,
                &path.anchored_weight().to_string(),
                "path-weight",
                col,
            );
            col += 1;
        }
        max_cols = max_cols.max(col);
    }

    let width = 2.0 * outer + max_cols as f64 * cell_w;
    let height = 2.0 * outer + necklaces.len() as f64 * cell_h;
    Ok(svg_document(&body, width, height))
}
