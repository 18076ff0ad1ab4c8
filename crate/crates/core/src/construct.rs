//! Constructions of large failed zero forcing sets for graph products, plus
//! the known closed-form values they are checked against.
//!
//! Each construction returns the product graph together with a
//! [`ConstructionResult`]: the vertex set, its predicted size, and the claims
//! the set is supposed to satisfy. Claims are never taken on faith; callers
//! verify them live through the forcing predicates via
//! [`ConstructionResult::verify`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::family::{build_family, FamilyError, FamilySpec};
use crate::forcing::{is_failed, is_maximal_failed, is_stalled};
use crate::graph::{Graph, GraphError};
use crate::oracle::{verify_sharpness, Certificate, Route, SharpnessVerdict, Stat};
use crate::product::{cartesian_product, corona, lexicographic_product, strong_product, ProductOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{construction}: {constraint}")]
    InvalidParameter {
        construction: &'static str,
        constraint: &'static str,
    },
    #[error("no closed form for `{0}`")]
    NoClosedForm(String),
    #[error("construction requires a witness certificate: {needed}")]
    MissingWitness { needed: String },
    #[error("witness certificate mismatch: {0}")]
    WitnessMismatch(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A property a constructed set is claimed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Failed,
    Stalled,
    Maximal,
    /// The set size equals the failed zero forcing number, certified through
    /// the structural upper bound.
    ExactF,
}

impl Claim {
    pub const ALL: [Claim; 4] = [Claim::Failed, Claim::Stalled, Claim::Maximal, Claim::ExactF];

    /// Checks the claim on `g` via the forcing predicates.
    pub fn holds(&self, g: &Graph, set: &VertexSet) -> bool {
        match self {
            Claim::Failed => is_failed(g, set),
            Claim::Stalled => is_stalled(g, set),
            Claim::Maximal => is_maximal_failed(g, set),
            Claim::ExactF => matches!(
                verify_sharpness(g, set),
                SharpnessVerdict::Exact(ref cert) if cert.value == set.len()
            ),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::Failed => "failed",
            Claim::Stalled => "stalled",
            Claim::Maximal => "maximal",
            Claim::ExactF => "exact_F",
        })
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Claim, String> {
        match s {
            "failed" => Ok(Claim::Failed),
            "stalled" => Ok(Claim::Stalled),
            "maximal" => Ok(Claim::Maximal),
            "exact_F" => Ok(Claim::ExactF),
            other => Err(format!("unknown claim `{other}`")),
        }
    }
}

/// A constructed vertex set with its predicted size and claimed properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub set: VertexSet,
    pub predicted_size: usize,
    pub claims: Vec<Claim>,
    /// Construction tag, e.g. `grid` or `corona`.
    pub source: String,
}

impl ConstructionResult {
    fn new(set: VertexSet, predicted_size: usize, claims: Vec<Claim>, source: &str) -> Self {
        debug_assert_eq!(set.len(), predicted_size, "{source}: size mismatch");
        ConstructionResult {
            set,
            predicted_size,
            claims,
            source: source.to_string(),
        }
    }

    /// Evaluates every claim on the given graph, in claim order.
    pub fn verify(&self, g: &Graph) -> Vec<(Claim, bool)> {
        self.claims
            .iter()
            .map(|&c| (c, c.holds(g, &self.set)))
            .collect()
    }
}

/// Closed-form failed zero forcing numbers for the supported families.
/// Families outside the table report an explicit no-closed-form error.
pub fn known_failed_forcing_number(spec: &FamilySpec) -> Result<usize, ConstructionError> {
    spec.validate()?;
    let no_form = || Err(ConstructionError::NoClosedForm(spec.to_string()));
    match *spec {
        FamilySpec::Path { n } => Ok(if n <= 2 { 0 } else { (n - 2).div_ceil(2) }),
        FamilySpec::Cycle { n } => Ok(n / 2),
        FamilySpec::Complete { n } => {
            if n >= 2 {
                Ok(n - 2)
            } else {
                no_form()
            }
        }
        FamilySpec::MaryTree { .. } => Ok(spec.order() - 2),
        FamilySpec::Wheel { n } => Ok(if n == 5 { 3 } else { (2 * n - 2) / 3 }),
        FamilySpec::CompleteBipartite { m, n } => {
            if m >= n && m + n >= 3 {
                Ok(m + n - 2)
            } else {
                no_form()
            }
        }
        FamilySpec::Petersen => Ok(6),
        FamilySpec::Empty { .. } => no_form(),
    }
}

/// Closed-form failed zero forcing numbers for products of two named
/// families, where one is known exactly.
pub fn product_closed_form(op: ProductOp, left: &FamilySpec, right: &FamilySpec) -> Option<usize> {
    use FamilySpec::{Complete, Path};
    match (op, *left, *right) {
        (ProductOp::Cartesian, Complete { n }, Complete { n: m }) if n >= 4 && m >= 2 => {
            Some(n * m - 4)
        }
        (ProductOp::Cartesian, Path { n }, Path { n: m }) if n == m && n >= 2 => Some(n * n - n),
        (ProductOp::Strong, Complete { n }, Complete { n: m }) if n >= 2 && m >= 2 => {
            Some(n * m - 2)
        }
        (ProductOp::Lexicographic, Complete { n }, Complete { n: m }) if n >= 2 && m >= 2 => {
            Some(n * m - 2)
        }
        (ProductOp::Corona, Complete { n }, Complete { n: m }) if n >= 2 && m >= 2 => {
            Some(n * m + n - 2)
        }
        _ => None,
    }
}

/// Lower bound on the failed number of a Cartesian product from the factors:
/// `max(n_h * F(g), n_g * F(h))`.
pub fn cartesian_lower_bound(f_g: usize, n_g: usize, f_h: usize, n_h: usize) -> usize {
    (n_h * f_g).max(n_g * f_h)
}

fn param_err(construction: &'static str, constraint: &'static str) -> ConstructionError {
    ConstructionError::InvalidParameter {
        construction,
        constraint,
    }
}

/// Ceiling of `x / 3` for possibly negative `x`.
fn ceil_div3(x: i64) -> i64 {
    (x + 2).div_euclid(3)
}

// ---------------------------------------------------------------------------
// Cartesian grid: diagonal zig-zag construction on P_n box P_m
// ---------------------------------------------------------------------------

/// White cells of the grid construction on an abstract `m`-row, `n`-column
/// grid (1-based). Starts with the main diagonal `(1,1)..(m,m)`, then bounces
/// diagonal legs between row 1, row m and column n; each leg follows the
/// diagonal not traced last and must be free of earlier white cells. A final
/// sweep extends both diagonals through the stopping cell until blocked.
fn grid_white_cells(n: i64, m: i64) -> HashSet<(i64, i64)> {
    let in_grid = |(i, j): (i64, i64)| 1 <= i && i <= m && 1 <= j && j <= n;
    let at_stop = |(i, j): (i64, i64)| i == 1 || i == m || j == n;

    let mut white: HashSet<(i64, i64)> = (1..=m).map(|i| (i, i)).collect();
    let mut v = (m, m);
    let mut last_main = true; // the seed runs along the main diagonal

    let dirs_of = |main: bool| -> [(i64, i64); 2] {
        if main {
            [(1, 1), (-1, -1)]
        } else {
            [(-1, 1), (1, -1)]
        }
    };

    loop {
        // candidate leg: the unique in-grid direction along the other diagonal
        let dir = dirs_of(!last_main)
            .into_iter()
            .find(|d| in_grid((v.0 + d.0, v.1 + d.1)));
        let Some(dir) = dir else { break };
        let mut ray = Vec::new();
        let mut c = (v.0 + dir.0, v.1 + dir.1);
        while in_grid(c) {
            ray.push(c);
            c = (c.0 + dir.0, c.1 + dir.1);
        }
        if ray.iter().any(|c| white.contains(c)) {
            break;
        }
        for c in ray {
            white.insert(c);
            v = c;
            if at_stop(c) {
                break;
            }
        }
        last_main = !last_main;
    }

    // final sweep: the diagonal not traced last first, then the other
    for main in [!last_main, last_main] {
        for d in dirs_of(main) {
            let mut c = (v.0 + d.0, v.1 + d.1);
            while in_grid(c) && !white.contains(&c) {
                white.insert(c);
                c = (c.0 + d.0, c.1 + d.1);
            }
        }
    }
    white
}

/// Failed set on the grid `P_n box P_m` (`n >= m >= 2`) via the diagonal
/// zig-zag. The complement of the white diagonals is failed, and maximal for
/// `m > 2`; its size is `nm - n` when `r = 0` and `nm - n - m + 2` otherwise,
/// where `r = (n - m) mod (m - 1)` (taking `r = 0` when `n = m`).
pub fn grid_construction(
    n: usize,
    m: usize,
) -> Result<(Graph, ConstructionResult), ConstructionError> {
    if m < 2 || n < m {
        return Err(param_err("grid", "requires n >= m >= 2"));
    }
    let pn = build_family(&FamilySpec::Path { n })?;
    let pm = build_family(&FamilySpec::Path { n: m })?;
    let graph = cartesian_product(&pn, &pm)?;

    // abstract cell (i, j) = row i of m, column j of n; vertex (j-1, i-1)
    let white = grid_white_cells(n as i64, m as i64);
    let mut set = graph.vertex_set();
    for &(i, j) in &white {
        set.remove((j as usize - 1) * m + (i as usize - 1));
    }

    let r = if n == m { 0 } else { (n - m) % (m - 1) };
    let predicted = if r == 0 { n * m - n } else { n * m - n - m + 2 };
    let mut claims = vec![Claim::Failed];
    if m > 2 {
        claims.push(Claim::Maximal);
    }
    Ok((
        graph,
        ConstructionResult::new(set, predicted, claims, "grid"),
    ))
}

// ---------------------------------------------------------------------------
// Torus constructions: same-parity set on products of two cycles
// ---------------------------------------------------------------------------

fn parity_set(m: usize, n: usize) -> VertexSet {
    VertexSet::from_indices((0..m).flat_map(|a| {
        (0..n)
            .filter(move |b| (a + b) % 2 == 0)
            .map(move |b| a * n + b)
    }))
}

/// Stalled (hence failed) set on `C_m box C_n` (`m, n >= 3`): all pairs with
/// coordinates of equal parity; size `ceil(mn / 2)`.
pub fn torus_construction(
    m: usize,
    n: usize,
) -> Result<(Graph, ConstructionResult), ConstructionError> {
    if m < 3 || n < 3 {
        return Err(param_err("torus", "requires m, n >= 3"));
    }
    let cm = build_family(&FamilySpec::Cycle { n: m })?;
    let cn = build_family(&FamilySpec::Cycle { n })?;
    let graph = cartesian_product(&cm, &cn)?;
    let set = parity_set(m, n);
    let predicted = (m * n).div_ceil(2);
    Ok((
        graph,
        ConstructionResult::new(set, predicted, vec![Claim::Stalled, Claim::Failed], "torus"),
    ))
}

/// The same parity set transplanted onto the strong product `C_m strong C_n`:
/// every member keeps at least two white neighbors, so the set stays stalled.
pub fn strong_torus_construction(
    m: usize,
    n: usize,
) -> Result<(Graph, ConstructionResult), ConstructionError> {
    if m < 3 || n < 3 {
        return Err(param_err("strong-torus", "requires m, n >= 3"));
    }
    let cm = build_family(&FamilySpec::Cycle { n: m })?;
    let cn = build_family(&FamilySpec::Cycle { n })?;
    let graph = strong_product(&cm, &cn)?;
    let set = parity_set(m, n);
    let predicted = (m * n).div_ceil(2);
    Ok((
        graph,
        ConstructionResult::new(
            set,
            predicted,
            vec![Claim::Stalled, Claim::Failed],
            "strong-torus",
        ),
    ))
}

// ---------------------------------------------------------------------------
// Prism: P_2 box C_n
// ---------------------------------------------------------------------------

/// Stalled set on the prism `P_2 box C_n` (`n >= 3`) of size
/// `ceil(n/2) + 3*floor(n/4)`. Row 1 takes the columns with index not
/// divisible by 4 (trimmed near the seam depending on `n mod 4`), row 2 the
/// even columns, plus the seam vertex of row 2 when `n mod 4 = 1`.
pub fn prism_construction(n: usize) -> Result<(Graph, ConstructionResult), ConstructionError> {
    if n < 3 {
        return Err(param_err("prism", "requires n >= 3"));
    }
    let p2 = build_family(&FamilySpec::Path { n: 2 })?;
    let cn = build_family(&FamilySpec::Cycle { n })?;
    let graph = cartesian_product(&p2, &cn)?;

    let l = n % 4;
    let mut set = VertexSet::empty();
    // 1-based column j maps to vertex (row-1)*n + (j-1)
    let row1 = |j: usize| j - 1;
    let row2 = |j: usize| n + j - 1;
    for j in 1..=n {
        let trimmed = match l {
            1 => j == n,
            2 | 3 => j == n || j == n - 1,
            _ => false,
        };
        if j % 4 != 0 && !trimmed {
            set.insert(row1(j));
        }
        if j % 2 == 0 {
            set.insert(row2(j));
        }
    }
    if l == 1 {
        set.insert(row2(n));
    }

    let predicted = n.div_ceil(2) + 3 * (n / 4);
    Ok((
        graph,
        ConstructionResult::new(set, predicted, vec![Claim::Stalled, Claim::Failed], "prism"),
    ))
}

// ---------------------------------------------------------------------------
// Strong grid: P_n strong P_m
// ---------------------------------------------------------------------------

/// Failed and maximal set on `P_n strong P_m` (`n >= m >= 2`) of size
/// `nm - m + ceil((m-4)/3)`: everything outside the first `P_m` fiber, plus
/// every third interior vertex of that fiber.
pub fn strong_grid_construction(
    n: usize,
    m: usize,
) -> Result<(Graph, ConstructionResult), ConstructionError> {
    if m < 2 || n < m {
        return Err(param_err("strong-grid", "requires n >= m >= 2"));
    }
    let pn = build_family(&FamilySpec::Path { n })?;
    let pm = build_family(&FamilySpec::Path { n: m })?;
    let graph = strong_product(&pn, &pm)?;

    let c = ceil_div3(m as i64 - 4).max(0) as usize;
    let mut set = graph.vertex_set();
    // whiten the first fiber {(0, b)}, then re-add the blue interior vertices
    for b in 0..m {
        set.remove(b);
    }
    for k in 1..=c {
        set.insert(3 * k - 1);
    }

    let predicted = n * m - m + c;
    Ok((
        graph,
        ConstructionResult::new(
            set,
            predicted,
            vec![Claim::Failed, Claim::Maximal],
            "strong-grid",
        ),
    ))
}

// ---------------------------------------------------------------------------
// Lexicographic products
// ---------------------------------------------------------------------------

/// Which certificate [`lexicographic_construction`] needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexWitnessNeed {
    /// `h` has no isolated vertex: a maximum failed certificate for `h`.
    InnerMaxFailed,
    /// `h` has an isolated vertex: a maximum failed certificate for `g`.
    OuterMaxFailed,
}

pub fn lexicographic_witness_need(h: &Graph) -> LexWitnessNeed {
    if h.isolated_vertices().is_empty() {
        LexWitnessNeed::InnerMaxFailed
    } else {
        LexWitnessNeed::OuterMaxFailed
    }
}

fn check_max_failed_witness(
    cert: &Certificate,
    graph: &Graph,
    role: &str,
) -> Result<(), ConstructionError> {
    if cert.target != Stat::F || cert.route != Route::Exhaustive {
        return Err(ConstructionError::WitnessMismatch(format!(
            "expected an exhaustive maximum-failed certificate for {role}"
        )));
    }
    if !cert.verify_witness(graph) {
        return Err(ConstructionError::WitnessMismatch(format!(
            "certificate witness does not verify on {role} (order {})",
            graph.order()
        )));
    }
    Ok(())
}

/// Maximal failed set on `g lex h`. With no isolated vertex in `h`, the set
/// is everything outside the last copy of `h` plus a maximum failed set
/// inside it, of size `|g||h| - |h| + F(h)`. With an isolated vertex in `h`,
/// the fiber of one isolated vertex plays the role of a copy of `g`: the set
/// is everything outside that fiber plus a maximum failed set of `g` inside
/// it, of size `|g||h| - |g| + F(g)`.
pub fn lexicographic_construction(
    g: &Graph,
    h: &Graph,
    witness: &Certificate,
) -> Result<(Graph, ConstructionResult), ConstructionError> {
    let graph = lexicographic_product(g, h)?;
    let nh = h.order();
    match lexicographic_witness_need(h) {
        LexWitnessNeed::InnerMaxFailed => {
            check_max_failed_witness(witness, h, "the right factor")?;
            let base = (g.order() - 1) * nh;
            let mut set = graph.vertex_set();
            for b in 0..nh {
                set.remove(base + b);
            }
            for b in witness.witness.iter() {
                set.insert(base + b);
            }
            let predicted = g.order() * nh - nh + witness.value;
            Ok((
                graph,
                ConstructionResult::new(set, predicted, vec![Claim::Failed, Claim::Maximal], "lex"),
            ))
        }
        LexWitnessNeed::OuterMaxFailed => {
            check_max_failed_witness(witness, g, "the left factor")?;
            let b0 = h
                .isolated_vertices()
                .lowest()
                .expect("isolated vertex exists");
            let mut set = graph.vertex_set();
            for a in 0..g.order() {
                set.remove(a * nh + b0);
            }
            for a in witness.witness.iter() {
                set.insert(a * nh + b0);
            }
            let predicted = g.order() * nh - g.order() + witness.value;
            Ok((
                graph,
                ConstructionResult::new(set, predicted, vec![Claim::Failed, Claim::Maximal], "lex"),
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// Coronas
// ---------------------------------------------------------------------------

/// Which certificate [`corona_construction`] needs; the case is always
/// derived from the isolated-vertex census of `h`, never caller-asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoronaWitnessNeed {
    /// `|h| = 1`: a maximum failed certificate for `g`.
    OuterMaxFailed,
    /// `|h| >= 2` and no isolated vertex: a maximum failed certificate for `h`.
    InnerMaxFailed,
    /// Every vertex of `h` is isolated: no certificate needed.
    None,
    /// Mixed census: a maximum failed certificate for the induced subgraph of
    /// `h` on its non-isolated vertices (given here with its index map back
    /// into `h`).
    ReducedInnerMaxFailed(Graph, Vec<usize>),
}

pub fn corona_witness_need(h: &Graph) -> CoronaWitnessNeed {
    if h.order() == 1 {
        return CoronaWitnessNeed::OuterMaxFailed;
    }
    let isolated = h.isolated_vertices();
    if isolated.is_empty() {
        CoronaWitnessNeed::InnerMaxFailed
    } else if isolated.len() == h.order() {
        CoronaWitnessNeed::None
    } else {
        let keep = isolated.complement_within(h.order());
        let (reduced, map) = h.induced_subgraph(&keep);
        CoronaWitnessNeed::ReducedInnerMaxFailed(reduced, map)
    }
}

/// Failed set on the corona `g corona h`, by the isolated-vertex census of
/// `h`:
///
/// - `|h| = 1`: a maximum failed set of `g` plus the leaves of exactly those
///   centers, size `2 F(g)`; claimed maximal.
/// - no isolated vertex in `h`: everything outside the last copy of `h` plus
///   a maximum failed set inside it, size `|g||h| + |g| - |h| + F(h)`;
///   claimed maximal.
/// - `h` entirely isolated, `|h| >= 2`: everything except two leaves of one
///   copy, size `|g||h| + |g| - 2`; the two leaves form an order-2 module, so
///   the size is exactly the failed zero forcing number.
/// - mixed census: the no-isolated construction on the non-isolated part,
///   with every isolated-position leaf added back; size
///   `|g||h| + |g| - |h| + |W| + F(h')` where `W` is the isolated set of `h`
///   and `h'` the rest; claimed maximal.
pub fn corona_construction(
    g: &Graph,
    h: &Graph,
    witness: Option<&Certificate>,
) -> Result<(Graph, ConstructionResult), ConstructionError> {
    let graph = corona(g, h)?;
    let m = g.order();
    let nh = h.order();
    let need_witness = |needed: &str| -> Result<&Certificate, ConstructionError> {
        witness.ok_or_else(|| ConstructionError::MissingWitness {
            needed: needed.to_string(),
        })
    };
    match corona_witness_need(h) {
        CoronaWitnessNeed::OuterMaxFailed => {
            let cert = need_witness("maximum failed certificate for the center graph")?;
            check_max_failed_witness(cert, g, "the center graph")?;
            let mut set = cert.witness;
            for i in cert.witness.iter() {
                set.insert(m + i);
            }
            let predicted = 2 * cert.value;
            Ok((
                graph,
                ConstructionResult::new(
                    set,
                    predicted,
                    vec![Claim::Failed, Claim::Maximal],
                    "corona",
                ),
            ))
        }
        CoronaWitnessNeed::InnerMaxFailed => {
            let cert = need_witness("maximum failed certificate for the leaf graph")?;
            check_max_failed_witness(cert, h, "the leaf graph")?;
            let base = m + (m - 1) * nh;
            let mut set = graph.vertex_set();
            for b in 0..nh {
                set.remove(base + b);
            }
            for b in cert.witness.iter() {
                set.insert(base + b);
            }
            let predicted = m * nh + m - nh + cert.value;
            Ok((
                graph,
                ConstructionResult::new(
                    set,
                    predicted,
                    vec![Claim::Failed, Claim::Maximal],
                    "corona",
                ),
            ))
        }
        CoronaWitnessNeed::None => {
            // two leaves of the first copy form a module of order 2
            let mut set = graph.vertex_set();
            set.remove(m);
            set.remove(m + 1);
            let predicted = m * nh + m - 2;
            Ok((
                graph,
                ConstructionResult::new(
                    set,
                    predicted,
                    vec![Claim::Failed, Claim::ExactF],
                    "corona",
                ),
            ))
        }
        CoronaWitnessNeed::ReducedInnerMaxFailed(reduced, map) => {
            let cert = need_witness(
                "maximum failed certificate for the leaf graph minus its isolated vertices",
            )?;
            check_max_failed_witness(cert, &reduced, "the non-isolated part of the leaf graph")?;
            let base = m + (m - 1) * nh;
            let mut set = graph.vertex_set();
            // whiten the non-isolated positions of the last copy, then
            // restore the witness positions
            for &b in &map {
                set.remove(base + b);
            }
            for w in cert.witness.iter() {
                set.insert(base + map[w]);
            }
            let predicted = m * nh + m - map.len() + cert.value;
            Ok((
                graph,
                ConstructionResult::new(
                    set,
                    predicted,
                    vec![Claim::Failed, Claim::Maximal],
                    "corona",
                ),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{failed_zero_forcing_number, ExactOptions};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn max_failed_cert(g: &Graph) -> Certificate {
        failed_zero_forcing_number(g, &ExactOptions::default()).unwrap()
    }

    fn assert_all_claims(graph: &Graph, result: &ConstructionResult) {
        assert_eq!(result.set.len(), result.predicted_size, "{}", result.source);
        for (claim, ok) in result.verify(graph) {
            assert!(ok, "{} claim `{claim}` failed", result.source);
        }
    }

    #[test]
    fn family_closed_forms() {
        assert_eq!(
            known_failed_forcing_number(&FamilySpec::Path { n: 7 }).unwrap(),
            3
        );
        assert_eq!(
            known_failed_forcing_number(&FamilySpec::Wheel { n: 5 }).unwrap(),
            3
        );
        assert_eq!(
            known_failed_forcing_number(&FamilySpec::CompleteBipartite { m: 3, n: 2 }).unwrap(),
            3
        );
        assert_eq!(
            known_failed_forcing_number(&FamilySpec::Petersen).unwrap(),
            6
        );
        assert_eq!(
            known_failed_forcing_number(&FamilySpec::Path { n: 1 }).unwrap(),
            0
        );
        assert!(matches!(
            known_failed_forcing_number(&FamilySpec::Empty { n: 3 }),
            Err(ConstructionError::NoClosedForm(_))
        ));
        assert!(known_failed_forcing_number(&FamilySpec::Complete { n: 1 }).is_err());
        assert!(
            known_failed_forcing_number(&FamilySpec::CompleteBipartite { m: 2, n: 3 }).is_err()
        );
    }

    #[test]
    fn product_closed_form_examples() {
        use FamilySpec::{Complete, Cycle, Path};
        let k = |n| Complete { n };
        let p = |n| Path { n };
        assert_eq!(
            product_closed_form(ProductOp::Cartesian, &k(4), &k(2)),
            Some(4)
        );
        assert_eq!(
            product_closed_form(ProductOp::Cartesian, &p(3), &p(3)),
            Some(6)
        );
        assert_eq!(
            product_closed_form(ProductOp::Corona, &k(2), &k(2)),
            Some(4)
        );
        assert_eq!(
            product_closed_form(ProductOp::Strong, &k(2), &k(3)),
            Some(4)
        );
        assert_eq!(
            product_closed_form(ProductOp::Cartesian, &k(3), &k(2)),
            None
        );
        assert_eq!(
            product_closed_form(ProductOp::Cartesian, &p(3), &p(4)),
            None
        );
        assert_eq!(
            product_closed_form(ProductOp::Cartesian, &Cycle { n: 3 }, &k(2)),
            None
        );
    }

    #[test]
    fn cartesian_lower_bound_examples() {
        // C_4 (F=2, 4 vertices) with P_3 (F=1, 3 vertices)
        assert_eq!(cartesian_lower_bound(2, 4, 1, 3), 6);
        assert_eq!(cartesian_lower_bound(0, 2, 0, 2), 0);
        assert_eq!(cartesian_lower_bound(1, 3, 1, 3), 3);
    }

    #[test]
    fn grid_sizes() {
        for (n, m, want) in [(2, 2, 2), (3, 3, 6), (5, 3, 10), (6, 4, 16)] {
            let (_, result) = grid_construction(n, m).unwrap();
            assert_eq!(result.set.len(), want, "grid {n}x{m}");
            assert_eq!(result.predicted_size, want);
        }
        assert!(grid_construction(3, 4).is_err());
        assert!(grid_construction(2, 1).is_err());
    }

    #[test]
    fn grid_claims_verify() {
        for (n, m) in [(2, 2), (3, 2), (3, 3), (4, 3), (5, 3), (6, 4), (5, 5)] {
            let (graph, result) = grid_construction(n, m).unwrap();
            assert_all_claims(&graph, &result);
            if m > 2 {
                assert!(result.claims.contains(&Claim::Maximal));
            } else {
                assert!(!result.claims.contains(&Claim::Maximal));
            }
        }
    }

    #[test]
    fn torus_and_prism_examples() {
        for (m, n, want) in [(4, 4, 8), (3, 3, 5), (3, 4, 6)] {
            let (graph, result) = torus_construction(m, n).unwrap();
            assert_eq!(result.set.len(), want);
            assert_all_claims(&graph, &result);
            let (sgraph, sresult) = strong_torus_construction(m, n).unwrap();
            assert_eq!(sresult.set.len(), want);
            assert_all_claims(&sgraph, &sresult);
        }
        for (n, want) in [(4, 5), (5, 6), (8, 10), (3, 2)] {
            let (graph, result) = prism_construction(n).unwrap();
            assert_eq!(result.set.len(), want, "prism {n}");
            assert_all_claims(&graph, &result);
        }
        assert!(torus_construction(2, 4).is_err());
        assert!(prism_construction(2).is_err());
    }

    #[test]
    fn strong_grid_examples() {
        for (n, m, want) in [(4, 2, 6), (4, 3, 9), (4, 4, 12), (5, 4, 16), (7, 7, 43)] {
            let (graph, result) = strong_grid_construction(n, m).unwrap();
            assert_eq!(result.set.len(), want, "strong grid {n}x{m}");
            assert_all_claims(&graph, &result);
        }
        assert!(strong_grid_construction(2, 3).is_err());
    }

    #[test]
    fn lexicographic_construction_examples() {
        // no isolated vertices in h: witness for h
        let p2 = fam(FamilySpec::Path { n: 2 });
        let p3 = fam(FamilySpec::Path { n: 3 });
        let cert = max_failed_cert(&p3);
        let (graph, result) = lexicographic_construction(&p2, &p3, &cert).unwrap();
        assert_eq!(result.set.len(), 4);
        assert_all_claims(&graph, &result);

        let k2 = fam(FamilySpec::Complete { n: 2 });
        let cert = max_failed_cert(&k2);
        let (graph, result) = lexicographic_construction(&k2, &k2, &cert).unwrap();
        assert_eq!(result.set.len(), 2);
        assert_all_claims(&graph, &result);

        // isolated vertex in h: witness for g; the product collapses to g
        let e1 = fam(FamilySpec::Empty { n: 1 });
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        let cert = max_failed_cert(&c4);
        let (graph, result) = lexicographic_construction(&c4, &e1, &cert).unwrap();
        assert_eq!(result.set.len(), 2);
        assert_all_claims(&graph, &result);

        // a witness that does not verify on the right factor is rejected
        let k4 = fam(FamilySpec::Complete { n: 4 });
        let bad = max_failed_cert(&k4);
        assert!(matches!(
            lexicographic_construction(&p2, &p3, &bad),
            Err(ConstructionError::WitnessMismatch(_))
        ));
    }

    #[test]
    fn corona_construction_examples() {
        // single-vertex h: doubled maximum failed set of g
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        let k1 = fam(FamilySpec::Complete { n: 1 });
        let cert = max_failed_cert(&c4);
        let (graph, result) = corona_construction(&c4, &k1, Some(&cert)).unwrap();
        assert_eq!(result.set.len(), 4);
        assert_all_claims(&graph, &result);

        // h entirely isolated: exact value, no witness needed
        let k2 = fam(FamilySpec::Complete { n: 2 });
        let e2 = fam(FamilySpec::Empty { n: 2 });
        let (graph, result) = corona_construction(&k2, &e2, None).unwrap();
        assert_eq!(result.set.len(), 4);
        assert!(result.claims.contains(&Claim::ExactF));
        assert_all_claims(&graph, &result);

        // no isolated vertices in h
        let p3 = fam(FamilySpec::Path { n: 3 });
        let p4 = fam(FamilySpec::Path { n: 4 });
        let cert = max_failed_cert(&p4);
        let (graph, result) = corona_construction(&p3, &p4, Some(&cert)).unwrap();
        assert_eq!(result.set.len(), 12);
        assert_all_claims(&graph, &result);

        let c3 = fam(FamilySpec::Cycle { n: 3 });
        let cert = max_failed_cert(&c3);
        let (graph, result) = corona_construction(&c4, &c3, Some(&cert)).unwrap();
        assert_eq!(result.set.len(), 14);
        assert_all_claims(&graph, &result);

        // mixed census: P_3 plus two isolated vertices
        let mixed = Graph::from_edges(5, [(0, 1), (1, 2)]).unwrap();
        let need = corona_witness_need(&mixed);
        let CoronaWitnessNeed::ReducedInnerMaxFailed(reduced, map) = &need else {
            panic!("expected the mixed case, got {need:?}");
        };
        assert_eq!(reduced.order(), 3);
        assert_eq!(map, &vec![0, 1, 2]);
        let cert = max_failed_cert(reduced);
        let (graph, result) = corona_construction(&k2, &mixed, Some(&cert)).unwrap();
        // 2*5 + 2 - 5 + 2 + F(P_3) = 10
        assert_eq!(result.set.len(), 10);
        assert_all_claims(&graph, &result);

        // a missing witness is reported
        assert!(matches!(
            corona_construction(&c4, &k1, None),
            Err(ConstructionError::MissingWitness { .. })
        ));
    }

    #[test]
    fn corona_exact_claim_holds_with_disconnected_centers() {
        // two disjoint stars: the value is still pinned, through the bound
        // for graphs without isolated vertices rather than the module route
        let e2 = fam(FamilySpec::Empty { n: 2 });
        let (graph, result) = corona_construction(&e2, &e2, None).unwrap();
        assert_eq!(graph.connected_component_count(), 2);
        assert_eq!(result.set.len(), 4);
        assert!(result.claims.contains(&Claim::ExactF));
        assert_all_claims(&graph, &result);
        match verify_sharpness(&graph, &result.set) {
            SharpnessVerdict::Exact(cert) => {
                assert_eq!(cert.basis.as_deref(), Some("no-isolated-vertex"));
            }
            other => panic!("expected exact, got {other:?}"),
        }
    }
}
