//! 4-connected digital curves: chain-code files, standard-line tracing and
//! Gauss-digitized circle boundaries.
//!
//! A curve is a start point plus a sequence of Freeman codes over `{0,1,2,3}`
//! (unit steps right, up, left, down). Closed curves must have zero net
//! displacement; their point indices wrap modulo the code count.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the integer grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// The point reached by one Freeman step.
    pub fn step(self, code: FreemanCode) -> Self {
        let (dx, dy) = code.vector();
        Self::new(self.x + dx, self.y + dy)
    }

    pub fn is_four_adjacent(self, other: Self) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One of the four unit steps of a 4-connected path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FreemanCode {
    /// `0`: step (+1, 0)
    Right,
    /// `1`: step (0, +1)
    Up,
    /// `2`: step (-1, 0)
    Left,
    /// `3`: step (0, -1)
    Down,
}

impl FreemanCode {
    pub const ALL: [FreemanCode; 4] = [Self::Right, Self::Up, Self::Left, Self::Down];

    pub fn from_digit(c: char) -> Result<Self> {
        match c {
            '0' => Ok(Self::Right),
            '1' => Ok(Self::Up),
            '2' => Ok(Self::Left),
            '3' => Ok(Self::Down),
            other => Err(Error::InvalidCodeSymbol(other)),
        }
    }

    pub fn digit(self) -> char {
        match self {
            Self::Right => '0',
            Self::Up => '1',
            Self::Left => '2',
            Self::Down => '3',
        }
    }

    pub fn vector(self) -> (i64, i64) {
        match self {
            Self::Right => (1, 0),
            Self::Up => (0, 1),
            Self::Left => (-1, 0),
            Self::Down => (0, -1),
        }
    }

    pub fn from_vector(dx: i64, dy: i64) -> Option<Self> {
        match (dx, dy) {
            (1, 0) => Some(Self::Right),
            (0, 1) => Some(Self::Up),
            (-1, 0) => Some(Self::Left),
            (0, -1) => Some(Self::Down),
            _ => None,
        }
    }
}

/// A 4-connected digital curve, open or closed.
///
/// For a closed curve of `n` codes there are `n` distinct points and indices
/// wrap modulo `n`; an open curve of `n` codes has `n + 1` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitalCurve {
    start: GridPoint,
    codes: Vec<FreemanCode>,
    closed: bool,
    points: Vec<GridPoint>,
}

impl DigitalCurve {
    pub fn new(start: GridPoint, codes: Vec<FreemanCode>, closed: bool) -> Result<Self> {
        let mut points = Vec::with_capacity(codes.len() + 1);
        let mut p = start;
        points.push(p);
        for &c in &codes {
            p = p.step(c);
            points.push(p);
        }
        if closed {
            let end = *points.last().unwrap();
            if end != start {
                return Err(Error::ClosedCurveDisplacement {
                    dx: end.x - start.x,
                    dy: end.y - start.y,
                });
            }
            points.pop();
        }
        Ok(Self {
            start,
            codes,
            closed,
            points,
        })
    }

    pub fn start(&self) -> GridPoint {
        self.start
    }

    pub fn codes(&self) -> &[FreemanCode] {
        &self.codes
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Number of distinct points.
    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// The distinct points in order, starting at `start`.
    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    /// Point at a (possibly unwrapped) index. Closed curves wrap modulo the
    /// point count; open curves reject out-of-range indices.
    pub fn point_at(&self, index: isize) -> Result<GridPoint> {
        let n = self.points.len() as isize;
        if self.closed {
            Ok(self.points[index.rem_euclid(n) as usize])
        } else if (0..n).contains(&index) {
            Ok(self.points[index as usize])
        } else {
            Err(Error::IndexOutOfRange(index.unsigned_abs()))
        }
    }

    /// Code of the step leaving point `index` (wrapping on closed curves).
    pub fn code_at(&self, index: isize) -> Result<FreemanCode> {
        let n = self.codes.len() as isize;
        if self.closed {
            Ok(self.codes[index.rem_euclid(n) as usize])
        } else if (0..n).contains(&index) {
            Ok(self.codes[index as usize])
        } else {
            Err(Error::IndexOutOfRange(index.unsigned_abs()))
        }
    }

    /// Parse the chain-code text format: a header line `<x0> <y0> <open|closed>`,
    /// then one line of digits over `{0,1,2,3}`. Lines starting with `#` are
    /// comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim_end)
            .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::MalformedHeader(format!(
                "expected '<x0> <y0> <open|closed>', got '{header}'"
            )));
        }
        let x: i64 = fields[0]
            .parse()
            .map_err(|_| Error::MalformedHeader(format!("bad x coordinate '{}'", fields[0])))?;
        let y: i64 = fields[1]
            .parse()
            .map_err(|_| Error::MalformedHeader(format!("bad y coordinate '{}'", fields[1])))?;
        let closed = match fields[2] {
            "open" => false,
            "closed" => true,
            other => {
                return Err(Error::MalformedHeader(format!(
                    "expected 'open' or 'closed', got '{other}'"
                )))
            }
        };
        let code_line = lines.next().unwrap_or("");
        let codes: Vec<FreemanCode> = code_line
            .chars()
            .map(FreemanCode::from_digit)
            .collect::<Result<_>>()?;
        if let Some(extra) = lines.next() {
            return Err(Error::MalformedHeader(format!(
                "unexpected extra line '{extra}'"
            )));
        }
        Self::new(GridPoint::new(x, y), codes, closed)
    }

    /// Serialize to the chain-code text format, bit-exact: no trailing
    /// whitespace, one trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = format!(
            "{} {} {}\n",
            self.start.x,
            self.start.y,
            if self.closed { "closed" } else { "open" }
        );
        for c in &self.codes {
            out.push(c.digit());
        }
        out.push('\n');
        out
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest nonnegative x with a*x ≡ mu (mod b), for gcd(a, b) = 1.
fn solve_congruence(a: i64, mu: i64, b: i64) -> i64 {
    if b == 1 {
        return 0;
    }
    // extended Euclid for the inverse of a mod b
    let (mut r0, mut r1) = (a.rem_euclid(b), b);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(b) * mu.rem_euclid(b)).rem_euclid(b)
}

/// Trace the standard line of characteristics `(a, b, mu)` for `n_patterns`
/// consecutive patterns, starting at the upper leaning point of smallest
/// nonnegative x.
///
/// Every visited point P satisfies `mu <= a*x - b*y < mu + a + b`; the code
/// word uses only `0` (right) and `1` (up), with `n_patterns * a` ones.
pub fn trace_standard_line(a: i64, b: i64, mu: i64, n_patterns: u32) -> Result<DigitalCurve> {
    if !(0..=b).contains(&a) || b < 1 || gcd(a, b) != 1 {
        return Err(Error::InvalidSlope { a, b });
    }
    if n_patterns == 0 {
        return Err(Error::DegenerateCurve("need at least one pattern"));
    }
    // Upper leaning points satisfy a*x - b*y = mu.
    let x0 = solve_congruence(a, mu, b);
    let y0 = (a * x0 - mu) / b;
    let start = GridPoint::new(x0, y0);

    let steps = (a + b) as usize * n_patterns as usize;
    let mut codes = Vec::with_capacity(steps);
    let mut r = mu;
    for _ in 0..steps {
        // exactly one of the two steps stays inside the band
        if r + a < mu + a + b {
            codes.push(FreemanCode::Right);
            r += a;
        } else {
            codes.push(FreemanCode::Up);
            r -= b;
        }
    }
    DigitalCurve::new(start, codes, false)
}

/// Gauss-digitize the disk x^2 + y^2 <= r^2 around `center` and trace the
/// inter-pixel boundary of its pixel set, counterclockwise.
///
/// Pixel (i, j) occupies the unit square with corners (i-1, j-1) and (i, j)
/// on the vertex lattice (the half-integer inter-pixel lattice shifted by
/// (-1/2, -1/2) onto the integers). The march keeps disk pixels on the left.
pub fn digitize_circle_boundary(radius: i64, center: GridPoint) -> Result<DigitalCurve> {
    if radius < 2 {
        return Err(Error::RadiusTooSmall(radius));
    }
    let rr = radius * radius;
    let inside = |px: i64, py: i64| -> bool {
        let dx = px - center.x;
        let dy = py - center.y;
        dx * dx + dy * dy <= rr
    };

    // pixels left/right of the edge leaving vertex v in direction d
    let side_pixels = |v: GridPoint, d: (i64, i64)| -> ((i64, i64), (i64, i64)) {
        match d {
            (1, 0) => ((v.x + 1, v.y + 1), (v.x + 1, v.y)),
            (0, 1) => ((v.x, v.y + 1), (v.x + 1, v.y + 1)),
            (-1, 0) => ((v.x, v.y), (v.x, v.y + 1)),
            (0, -1) => ((v.x + 1, v.y), (v.x, v.y)),
            _ => unreachable!(),
        }
    };
    let is_boundary_edge = |v: GridPoint, d: (i64, i64)| -> bool {
        let (l, r) = side_pixels(v, d);
        inside(l.0, l.1) && !inside(r.0, r.1)
    };

    // rightmost column of the disk; start on its right edge heading up
    let start = GridPoint::new(center.x + radius, center.y - 1);
    let mut dir = (0i64, 1i64);
    debug_assert!(is_boundary_edge(start, dir));

    let mut codes = Vec::new();
    let mut v = start;
    loop {
        codes.push(FreemanCode::from_vector(dir.0, dir.1).unwrap());
        v = GridPoint::new(v.x + dir.0, v.y + dir.1);
        if v == start {
            break;
        }
        let turn_left = (-dir.1, dir.0);
        let turn_right = (dir.1, -dir.0);
        dir = [turn_left, dir, turn_right]
            .into_iter()
            .find(|&d| is_boundary_edge(v, d))
            .expect("disk boundary has no dead ends");
    }
    DigitalCurve::new(start, codes, true)
}

/// True when no grid point repeats along the curve.
pub fn is_simple(curve: &DigitalCurve) -> bool {
    let mut seen = HashSet::with_capacity(curve.point_count());
    curve.points().iter().all(|p| seen.insert(*p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes_of(s: &str) -> Vec<FreemanCode> {
        s.chars().map(|c| FreemanCode::from_digit(c).unwrap()).collect()
    }

    #[test]
    fn parse_open_straight_path() {
        let c = DigitalCurve::parse("0 0 open\n000\n").unwrap();
        assert!(!c.is_closed());
        assert_eq!(
            c.points(),
            &[
                GridPoint::new(0, 0),
                GridPoint::new(1, 0),
                GridPoint::new(2, 0),
                GridPoint::new(3, 0)
            ]
        );
    }

    #[test]
    fn parse_closed_unit_square() {
        let c = DigitalCurve::parse("0 0 closed\n0123\n").unwrap();
        assert!(c.is_closed());
        assert_eq!(c.point_count(), 4);
        assert_eq!(c.point_at(5).unwrap(), c.point_at(1).unwrap());
    }

    #[test]
    fn parse_rejects_nonzero_displacement() {
        let err = DigitalCurve::parse("0 0 closed\n001\n").unwrap_err();
        assert_eq!(err, Error::ClosedCurveDisplacement { dx: 2, dy: 1 });
    }

    #[test]
    fn parse_rejects_bad_symbol_and_header() {
        assert!(matches!(
            DigitalCurve::parse("0 0 open\n04\n"),
            Err(Error::InvalidCodeSymbol('4'))
        ));
        assert!(matches!(
            DigitalCurve::parse("0 0\n00\n"),
            Err(Error::MalformedHeader(_))
        ));
    }

    #[test]
    fn parse_ignores_comments() {
        let c = DigitalCurve::parse("# a fixture\n2 3 open\n# body\n01\n").unwrap();
        assert_eq!(c.start(), GridPoint::new(2, 3));
        assert_eq!(c.codes(), codes_of("01"));
    }

    #[test]
    fn serialize_is_bit_exact() {
        let text = "-1 4 closed\n0123\n";
        let c = DigitalCurve::parse(text).unwrap();
        assert_eq!(c.serialize(), text);
    }

    #[test]
    fn trace_flat_line() {
        let c = trace_standard_line(0, 1, 0, 3).unwrap();
        assert_eq!(c.serialize(), "0 0 open\n000\n");
    }

    #[test]
    fn trace_half_slope() {
        let c = trace_standard_line(1, 2, 0, 2).unwrap();
        let word: String = c.codes().iter().map(|c| c.digit()).collect();
        assert_eq!(word, "001001");
    }

    #[test]
    fn trace_rejects_unreduced_or_inverted_slopes() {
        assert!(trace_standard_line(2, 4, 0, 1).is_err());
        assert!(trace_standard_line(3, 2, 0, 1).is_err());
    }

    #[test]
    fn trace_starts_at_upper_leaning_point_and_stays_in_band() {
        for (a, b, mu) in [(10, 23, 0), (3, 10, 12), (1, 2, -5), (2, 5, 7)] {
            let c = trace_standard_line(a, b, mu, 2).unwrap();
            let r0 = a * c.start().x - b * c.start().y;
            assert_eq!(r0, mu, "({a},{b},{mu}) must start on the upper edge");
            assert!(c.start().x >= 0 && c.start().x < b.max(1));
            for p in c.points() {
                let r = a * p.x - b * p.y;
                assert!(r >= mu && r < mu + a + b);
            }
            let ones = c.codes().iter().filter(|&&c| c == FreemanCode::Up).count();
            assert_eq!(ones as i64, 2 * a);
        }
    }

    #[test]
    fn circle_is_closed_simple_and_four_connected() {
        for r in [2, 3, 5, 8] {
            let c = digitize_circle_boundary(r, GridPoint::new(0, 0)).unwrap();
            assert!(c.is_closed());
            assert!(is_simple(&c), "r={r} boundary revisits a vertex");
            for i in 0..c.point_count() as isize {
                let p = c.point_at(i).unwrap();
                let q = c.point_at(i + 1).unwrap();
                assert!(p.is_four_adjacent(q));
            }
        }
    }

    #[test]
    fn circle_length_matches_exposed_edge_count() {
        // independent oracle: each disk pixel contributes one boundary edge
        // per empty 4-neighbor
        for r in [2, 3, 5, 7] {
            let rr = r * r;
            let inside = |x: i64, y: i64| x * x + y * y <= rr;
            let mut edges = 0usize;
            for x in -r..=r {
                for y in -r..=r {
                    if inside(x, y) {
                        for (dx, dy) in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
                            if !inside(x + dx, y + dy) {
                                edges += 1;
                            }
                        }
                    }
                }
            }
            let c = digitize_circle_boundary(r, GridPoint::new(0, 0)).unwrap();
            assert_eq!(c.codes().len(), edges, "r={r}");
        }
    }

    #[test]
    fn circle_vertices_touch_inside_and_outside_pixels() {
        let r = 3i64;
        let rr = r * r;
        let inside = |x: i64, y: i64| x * x + y * y <= rr;
        let c = digitize_circle_boundary(r, GridPoint::new(0, 0)).unwrap();
        for p in c.points() {
            // the four pixels incident to vertex p
            let cells = [
                (p.x, p.y),
                (p.x + 1, p.y),
                (p.x, p.y + 1),
                (p.x + 1, p.y + 1),
            ];
            assert!(cells.iter().any(|&(x, y)| inside(x, y)));
            assert!(cells.iter().any(|&(x, y)| !inside(x, y)));
        }
    }

    #[test]
    fn circle_point_set_has_the_four_reflection_symmetries() {
        // pixel centers sit at (i+1/2, j+1/2) relative to the vertex lattice,
        // so the disk's mirror axes map vertex (x, y) to (-1-x, y) etc.
        let c = digitize_circle_boundary(2, GridPoint::new(0, 0)).unwrap();
        let set: HashSet<GridPoint> = c.points().iter().copied().collect();
        for p in &set {
            assert!(set.contains(&GridPoint::new(-1 - p.x, p.y)));
            assert!(set.contains(&GridPoint::new(p.x, -1 - p.y)));
            assert!(set.contains(&GridPoint::new(-1 - p.x, -1 - p.y)));
            assert!(set.contains(&GridPoint::new(p.y, p.x)));
        }
    }

    #[test]
    fn circle_rejects_small_radius() {
        assert!(matches!(
            digitize_circle_boundary(1, GridPoint::new(0, 0)),
            Err(Error::RadiusTooSmall(1))
        ));
    }
}
