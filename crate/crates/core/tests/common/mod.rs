//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use legendrian::{EventKind, Front};

pub fn assets_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("assets")
}

/// Every `.front` file of the assets corpus, sorted by name.
pub fn corpus() -> Vec<(String, Front)> {
    let mut files: Vec<_> = std::fs::read_dir(assets_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "front"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, legendrian::dsl::parse(&text).unwrap().front)
        })
        .collect()
}

pub fn front(word: &str) -> Front {
    legendrian::dsl::parse(word).unwrap().front
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn join(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Decides normality by building the whole resolution first and then
/// checking each condition globally, without the incremental sweep.
pub fn resolution_oracle(front: &Front, switches: &[usize]) -> bool {
    let events = front.events();
    let is_switch = |label: usize| switches.contains(&label);
    // Strand pieces are labelled at birth and keep their label through
    // unswitched crossings; a switch keeps each piece on its own level.
    let pieces = 2 * front.left_cusp_count();
    let mut dsu = Dsu::new(pieces);
    let mut at: Vec<usize> = Vec::new();
    let mut next = 0;
    let mut snapshots: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut unswitched_pairs = Vec::new();
    for (i, e) in events.iter().enumerate() {
        let k = e.level - 1;
        match e.kind {
            EventKind::LeftCusp => {
                at.splice(k..k, [next, next + 1]);
                dsu.join(next, next + 1);
                next += 2;
            }
            EventKind::Crossing => {
                let label = front.crossing_label(i).unwrap();
                if is_switch(label) {
                    snapshots.push((k, at.clone()));
                } else {
                    unswitched_pairs.push((at[k], at[k + 1]));
                    at.swap(k, k + 1);
                }
            }
            EventKind::RightCusp => {
                dsu.join(at[k], at[k + 1]);
                at.drain(k..k + 2);
            }
        }
    }
    let root: Vec<usize> = (0..pieces).map(|p| dsu.find(p)).collect();

    // Each component of the resolution must carry exactly one left cusp
    // and one right cusp.
    let mut left: BTreeMap<usize, usize> = BTreeMap::new();
    for j in 0..front.left_cusp_count() {
        *left.entry(root[2 * j]).or_default() += 1;
    }
    if left.values().any(|&c| c != 1) {
        return false;
    }
    // Unswitched crossings may not join a component to itself.
    if unswitched_pairs.iter().any(|&(a, b)| root[a] == root[b]) {
        return false;
    }
    // At a switch the eyes differ, and their vertical extents are disjoint
    // or strictly nested.
    for (k, positions) in snapshots {
        let (ea, eb) = (root[positions[k]], root[positions[k + 1]]);
        if ea == eb {
            return false;
        }
        let span = |eye: usize| {
            let ps: Vec<usize> = (0..positions.len())
                .filter(|&p| root[positions[p]] == eye)
                .collect();
            (ps[0], *ps.last().unwrap())
        };
        let (a, b) = (span(ea), span(eb));
        let disjoint = a.1 < b.0 || b.1 < a.0;
        let nested = (a.0 < b.0 && b.1 < a.1) || (b.0 < a.0 && a.1 < b.1);
        if !(disjoint || nested) {
            return false;
        }
    }
    true
}

/// Counts rulings with the resolution oracle, by switch count.
pub fn oracle_histogram(front: &Front) -> BTreeMap<usize, u64> {
    let c = front.crossing_count();
    let mut hist = BTreeMap::new();
    for mask in 0u64..1 << c {
        let labels: Vec<usize> = (1..=c).filter(|l| mask >> (l - 1) & 1 == 1).collect();
        if resolution_oracle(front, &labels) {
            *hist.entry(labels.len()).or_default() += 1;
        }
    }
    hist
}

/// Laurent polynomial with integer coefficients.
pub type Laurent = BTreeMap<i64, i64>;

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Jones polynomial in the variable `A` (with `t = A^-4`), from the
/// Kauffman bracket of the smooth diagram obtained from the front.
///
/// The A-smoothing of a front crossing joins its two left ends and its two
/// right ends, i.e. the horizontal resolution.
pub fn jones(front: &Front, writhe: i64) -> Laurent {
    let events = front.events();
    let mut segments: Vec<(usize, usize)> = Vec::new();
    let mut crossings: Vec<[usize; 4]> = Vec::new();
    let mut at: Vec<usize> = Vec::new();
    let mut ends = 0;
    let mut fresh = || {
        ends += 1;
        ends - 1
    };
    for e in events {
        let k = e.level - 1;
        match e.kind {
            EventKind::LeftCusp => {
                let (a, b) = (fresh(), fresh());
                segments.push((a, b));
                at.splice(k..k, [a, b]);
            }
            EventKind::Crossing => {
                let (nw, sw, ne, se) = (fresh(), fresh(), fresh(), fresh());
                segments.push((at[k], nw));
                segments.push((at[k + 1], sw));
                crossings.push([nw, ne, sw, se]);
                at[k] = ne;
                at[k + 1] = se;
            }
            EventKind::RightCusp => {
                segments.push((at[k], at[k + 1]));
                at.drain(k..k + 2);
            }
        }
    }
    let n = crossings.len();
    // Bracket: sum over states of A^(a - b) d^(loops - 1), d = -A^2 - A^-2.
    let mut states: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    for mask in 0u64..1 << n {
        let mut dsu = Dsu::new(ends);
        for &(a, b) in &segments {
            dsu.join(a, b);
        }
        let mut a_count = 0i64;
        for (i, &[nw, ne, sw, se]) in crossings.iter().enumerate() {
            if mask >> i & 1 == 1 {
                dsu.join(nw, ne);
                dsu.join(sw, se);
                a_count += 1;
            } else {
                dsu.join(nw, sw);
                dsu.join(ne, se);
            }
        }
        let mut roots: Vec<usize> = (0..ends).map(|x| dsu.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        *states
            .entry((2 * a_count - n as i64, roots.len()))
            .or_default() += 1;
    }
    let d: Laurent = [(2, -1), (-2, -1)].into_iter().collect();
    let mut bracket = Laurent::new();
    for ((e, loops), c) in states {
        let mut term: Laurent = [(e, c)].into_iter().collect();
        for _ in 1..loops {
            term = mul(&term, &d);
        }
        for (k, v) in term {
            *bracket.entry(k).or_default() += v;
        }
    }
    bracket.retain(|_, c| *c != 0);
    // Normalise by (-A^3)^(-w).
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let norm: Laurent = [(-3 * writhe, sign)].into_iter().collect();
    mul(&bracket, &norm)
}

/// Jones polynomial of the torus link `T(p, q)` from the closed formula
/// `t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)`,
/// written in `A` with `t = A^-4`. Negative `q` gives the mirror image.
pub fn torus_jones(p: i64, q: i64) -> Laurent {
    let qa = q.abs();
    // Numerator in t, divided by 1 - t^2 through long division.
    let mut num: BTreeMap<i64, i64> = BTreeMap::new();
    for (e, c) in [(0, 1), (p + 1, -1), (qa + 1, -1), (p + qa, 1)] {
        *num.entry(e).or_default() += c;
    }
    num.retain(|_, c| *c != 0);
    let mut quotient: BTreeMap<i64, i64> = BTreeMap::new();
    while let Some((&e, &c)) = num.iter().next() {
        // Leading term c t^e over 1 - t^2 contributes c t^e.
        quotient.insert(e, c);
        *num.entry(e).or_default() -= c;
        *num.entry(e + 2).or_default() += c;
        num.retain(|_, c| *c != 0);
        assert!(e < 4 * (p + qa), "division does not terminate");
    }
    // t^x = A^(-4x); the prefactor is t^((p-1)(q-1)/2) = A^(-2(p-1)(q-1)).
    let shift = -2 * (p - 1) * (qa - 1);
    let flip = if q < 0 { -1 } else { 1 };
    quotient
        .into_iter()
        .map(|(e, c)| (flip * (-4 * e + shift), c))
        .collect()
}
