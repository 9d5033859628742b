//! Deterministic constructions of the standard small strongly regular
//! graphs, so the test corpus needs no binary data.

use crate::graphs::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown fixture '{0}'")]
    Unknown(String),
    #[error("paley order {0} must be a prime power congruent to 1 mod 4")]
    BadPaleyOrder(u64),
}

/// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
/// {0..4} in lexicographic order, adjacent when disjoint. SRG(10,3,0,1).
pub fn petersen() -> Graph {
    let pairs: Vec<(u8, u8)> = (0u8..5)
        .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
        .collect();
    let mut g = Graph::new(10);
    for (a, &(i1, j1)) in pairs.iter().enumerate() {
        for (b, &(i2, j2)) in pairs.iter().enumerate().skip(a + 1) {
            if i1 != i2 && i1 != j2 && j1 != i2 && j1 != j2 {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Rook's graph K4 □ K4: cells of a 4x4 grid, adjacent in the same row or
/// column. Vertex (r,c) is numbered 4r + c. SRG(16,6,2,2).
pub fn rook4() -> Graph {
    let mut g = Graph::new(16);
    for r in 0..4 {
        for c in 0..4 {
            let u = 4 * r + c;
            for c2 in (c + 1)..4 {
                g.add_edge(u, 4 * r + c2);
            }
            for r2 in (r + 1)..4 {
                g.add_edge(u, 4 * r2 + c);
            }
        }
    }
    g
}

/// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}. Vertex (x,y) is numbered 4x + y. SRG(16,6,2,2),
/// not isomorphic to the rook's graph.
pub fn shrikhande() -> Graph {
    let conn = [(1i32, 0i32), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let mut g = Graph::new(16);
    for x in 0..4i32 {
        for y in 0..4i32 {
            let u = (4 * x + y) as usize;
            for &(dx, dy) in &conn {
                let v = (4 * ((x + dx) % 4) + (y + dy) % 4) as usize;
                if u < v {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g
}

/// Clebsch graph (folded 5-cube): vertices are 4-bit strings, adjacent when
/// the Hamming distance is 1 or 4. SRG(16,5,0,2).
pub fn clebsch() -> Graph {
    let mut g = Graph::new(16);
    for u in 0u32..16 {
        for v in (u + 1)..16 {
            let dist = (u ^ v).count_ones();
            if dist == 1 || dist == 4 {
                g.add_edge(u as usize, v as usize);
            }
        }
    }
    g
}

/// The pentagon. SRG(5,2,0,1); equals paley(5).
pub fn c5() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
}

/// Paley graph on GF(q), q a prime power with q ≡ 1 (mod 4): vertices are
/// field elements, adjacent when their difference is a nonzero square.
/// SRG(q, (q-1)/2, (q-5)/4, (q-1)/4).
pub fn paley(q: u64) -> Result<Graph, FixtureError> {
    if q % 4 != 1 || !(5..=10_000).contains(&q) {
        return Err(FixtureError::BadPaleyOrder(q));
    }
    let field = GaloisField::new(q).ok_or(FixtureError::BadPaleyOrder(q))?;
    let q = q as usize;
    let mut is_square = vec![false; q];
    for x in 1..q {
        is_square[field.mul(x, x)] = true;
    }
    let mut g = Graph::new(q);
    for u in 0..q {
        for v in (u + 1)..q {
            if is_square[field.sub(v, u)] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Looks up a fixture by name; accepts `paley(Q)` and `paleyQ` spellings.
pub fn by_name(name: &str) -> Result<Graph, FixtureError> {
    match name {
        "petersen" => return Ok(petersen()),
        "rook4" => return Ok(rook4()),
        "shrikhande" => return Ok(shrikhande()),
        "clebsch" => return Ok(clebsch()),
        "c5" => return Ok(c5()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("paley") {
        let digits = rest.trim_start_matches('(').trim_end_matches(')');
        if let Ok(q) = digits.parse::<u64>() {
            return paley(q);
        }
    }
    Err(FixtureError::Unknown(name.to_string()))
}

pub const FIXTURE_NAMES: &[&str] = &[
    "petersen",
    "rook4",
    "shrikhande",
    "clebsch",
    "c5",
    "paley(q)",
];

/// GF(p^m) for small prime powers, represented as base-p digit strings with
/// multiplication modulo the lexicographically first monic irreducible
/// polynomial of degree m.
struct GaloisField {
    p: u64,
    m: u32,
    q: u64,
    /// Coefficients of x^m modulo the reduction polynomial, lowest degree
    /// first (empty for prime fields).
    reduction: Vec<u64>,
}

impl GaloisField {
    fn new(q: u64) -> Option<GaloisField> {
        let (p, m) = prime_power_split(q)?;
        if m == 1 {
            return Some(GaloisField {
                p,
                m,
                q,
                reduction: Vec::new(),
            });
        }
        // Find the first monic irreducible of degree m: encoded as the digits
        // of its non-leading coefficients.
        'poly: for code in 0..q {
            let coeffs = digits(code, p, m);
            if coeffs[0] == 0 {
                continue; // reducible: divisible by x
            }
            // Trial division by every monic polynomial of degree 1..=m/2.
            for deg in 1..=(m / 2) {
                let count = p.pow(deg);
                for dcode in 0..count {
                    let divisor = digits(dcode, p, deg);
                    if poly_divides(&divisor, &coeffs, p, m) {
                        continue 'poly;
                    }
                }
            }
            // x^m ≡ -(lower coefficients)
            let reduction = coeffs.iter().map(|&c| (p - c) % p).collect();
            return Some(GaloisField { p, m, q, reduction });
        }
        None
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        if self.m == 1 {
            return ((a as u64 + self.p - b as u64) % self.p) as usize;
        }
        self.zip_digits(a as u64, b as u64, |x, y| (x + self.p - y) % self.p)
    }

    fn zip_digits(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> usize {
        let da = digits(a, self.p, self.m);
        let db = digits(b, self.p, self.m);
        let mut out = 0u64;
        for i in (0..self.m as usize).rev() {
            out = out * self.p + f(da[i], db[i]);
        }
        out as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p) as usize;
        }
        let da = digits(a as u64, self.p, self.m);
        let db = digits(b as u64, self.p, self.m);
        let deg = self.m as usize;
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce x^t for t >= m using x^m = reduction.
        for t in (deg..prod.len()).rev() {
            let c = prod[t];
            if c == 0 {
                continue;
            }
            prod[t] = 0;
            for (i, &r) in self.reduction.iter().enumerate() {
                prod[t - deg + i] = (prod[t - deg + i] + c * r) % self.p;
            }
        }
        let mut out = 0u64;
        for i in (0..deg).rev() {
            out = out * self.p + prod[i];
        }
        debug_assert!(out < self.q);
        out as usize
    }
}

/// Base-p digits of `v`, lowest first, padded to `m` digits.
fn digits(v: u64, p: u64, m: u32) -> Vec<u64> {
    let mut v = v;
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

/// Remainder test: does the monic polynomial with low coefficients `div`
/// (degree `div.len()`) divide the monic polynomial with low coefficients
/// `poly` (degree `deg`)? All coefficients mod p.
fn poly_divides(div: &[u64], poly: &[u64], p: u64, deg: u32) -> bool {
    let d = div.len();
    let mut rem: Vec<u64> = poly.to_vec();
    rem.push(1); // leading coefficient of the degree-`deg` monic polynomial
    for t in (d..=deg as usize).rev() {
        let c = rem[t];
        if c == 0 {
            continue;
        }
        rem[t] = 0;
        for (i, &coef) in div.iter().enumerate() {
            let idx = t - d + i;
            rem[idx] = (rem[idx] + c * (p - coef) % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

fn prime_power_split(q: u64) -> Option<(u64, u32)> {
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = 0;
            let mut rest = q;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}
