//! Acceptance suite: one PASS/FAIL line per criterion. Structural claims
//! are re-derived here by brute force (BFS distances, integer matrix
//! powers, direct matrix recursion) rather than trusted to the library.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gaincover::families::{
    butson_gain, cohen_tits_cover, fourier_butson, huang_matrix, huang_signing, k3n_nonexample,
    s3_cover_k5,
};
use gaincover::graph::{
    complete_bipartite, complete_graph, complete_multipartite, cycle, hypercube, kneser, petersen,
};
use gaincover::search::{
    column_count_prefilter, enumerate_gains, has_symmetric_spectrum, search_two_ev,
    verify_corollary_6_5, verify_theorem_5_1, verify_theorem_6_2, verify_theorem_6_4,
    verify_theorem_6_4_search, CheckOutcome, SearchMode, SearchSpec, THM_SRG_DRG,
};
use gaincover::spectral::block_spectrum;
use gaincover::{
    char_poly, classify_two_ev, hermitian_spectrum, is_distance_regular, is_walk_regular,
    rep_matrix, srg_parameters, CMatrix, Graph, GroupSpec, IntPolynomial,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- oracles

fn bfs(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; g.n()];
    d[s] = Some(0);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if d[w].is_none() {
                d[w] = Some(d[u].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    d
}

/// Intersection array `{b_0..b_{d-1}; c_1..c_d}` by counting, from every
/// ordered pair, or `None` when some count is not constant.
fn brute_array(g: &Graph) -> Option<String> {
    let n = g.n();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|s| bfs(g, s)).collect();
    let mut numbers: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let i = dist[x][y]?;
            let at = |k: Option<usize>| g.neighbors(y).iter().filter(|&&z| dist[x][z] == k).count();
            let c = if i == 0 { 0 } else { at(Some(i - 1)) };
            let b = at(Some(i + 1));
            if *numbers.entry(i).or_insert((c, b)) != (c, b) {
                return None;
            }
        }
    }
    let d = *numbers.keys().last()?;
    let b: Vec<String> = (0..d).map(|i| numbers[&i].1.to_string()).collect();
    let c: Vec<String> = (1..=d).map(|i| numbers[&i].0.to_string()).collect();
    Some(format!("{{{};{}}}", b.join(","), c.join(",")))
}

fn brute_diameter(g: &Graph) -> Option<usize> {
    (0..g.n()).map(|s| bfs(g, s).into_iter().max().flatten()).max().flatten()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// Constant diagonal of `A^k` for `k = 1..n-1`; Cayley-Hamilton covers
/// the higher powers.
fn brute_walk_regular(g: &Graph) -> bool {
    let a = g.adjacency_matrix();
    let n = g.n();
    let mut p: Vec<Vec<BigInt>> = a.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
    for _ in 1..n {
        if (0..n).any(|i| p[i][i] != p[0][0]) {
            return false;
        }
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if !p[i][k].is_zero() {
                    for &j in g.neighbors(k) {
                        next[i][j] += &p[i][k];
                    }
                }
            }
        }
        p = next;
    }
    true
}

fn huang_recursive(n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = vec![vec![0, 1], vec![1, 0]];
    for _ in 1..n {
        let m = a.len();
        let mut next = vec![vec![0i64; 2 * m]; 2 * m];
        for i in 0..m {
            for j in 0..m {
                next[i][j] = a[i][j];
                next[m + i][m + j] = -a[i][j];
            }
            next[i][m + i] = 1;
            next[m + i][i] = 1;
        }
        a = next;
    }
    a
}

fn roots(r: &[(i64, usize)]) -> IntPolynomial {
    IntPolynomial::from_integer_roots(r)
}

fn spectrum_matches(got: &[(f64, usize)], want: &[(f64, usize)], tol: f64) -> bool {
    got.len() == want.len()
        && got
            .iter()
            .zip(want)
            .all(|(g, w)| g.1 == w.1 && (g.0 - w.0).abs() <= tol)
}

// ------------------------------------------------------------- criteria

fn kneser_spectrum() -> Outcome {
    let p = char_poly(&lib(kneser(7, 2))?);
    let want = roots(&[(10, 1), (1, 14), (-4, 6)]);
    ensure!(p == want, "char poly {p} != {want}");
    Ok("char_poly(K(7,2)) = (x-10)(x-1)^14(x+4)^6".into())
}

fn huang_signings() -> Outcome {
    for n in 1..=8 {
        let a = lib(huang_matrix(n))?;
        ensure!(a == huang_recursive(n), "n = {n}: signing differs from the block recursion");
        let sq = mat_mul(&a, &a);
        let size = a.len();
        for (i, row) in sq.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                ensure!(x == if i == j { n as i64 } else { 0 }, "n = {n}: (A^2)[{i}][{j}] = {x}");
            }
        }
        let s = lib(rep_matrix(&lib(huang_signing(n))?, &[1]))?;
        for i in 0..size {
            for j in 0..size {
                let e = s.matrix[(i, j)];
                ensure!(e.im == 0.0 && e.re == a[i][j] as f64, "n = {n}: S[{i}][{j}] = {e}");
            }
        }
        let spec = lib(hermitian_spectrum(&s.matrix, 1e-7))?;
        let r = (n as f64).sqrt();
        let half = size / 2;
        ensure!(
            spectrum_matches(spec.pairs(), &[(r, half), (-r, half)], 1e-9),
            "n = {n}: spectrum {:?}",
            spec.pairs()
        );
    }
    Ok("A_n^2 = nI exactly and Spec(S) = {+-sqrt(n)^(2^(n-1))} within 1e-9 for n = 1..8".into())
}

fn cohen_tits() -> Outcome {
    let mut girths = Vec::new();
    let mut regular = Vec::new();
    for n in 2..=6 {
        let cover = lib(cohen_tits_cover(n))?;
        let g = cover.graph();
        let girth = g.girth();
        let want = if n == 2 { 8 } else { 6 };
        ensure!(girth == Some(want), "n = {n}: girth {girth:?}, want {want}");
        girths.push(want.to_string());
        if (3..=5).contains(&n) {
            ensure!(is_walk_regular(g) && brute_walk_regular(g), "n = {n}: lift not walk-regular");
            let reported = lib(is_distance_regular(g))?.map(|a| a.to_string());
            let counted = brute_array(g);
            ensure!(reported == counted, "n = {n}: library {reported:?} vs counting {counted:?}");
            if let Some(arr) = counted {
                regular.push(format!("n = {n}: lift is distance-regular with array {arr}"));
            }
        }
    }
    ensure!(regular.is_empty(), "{} (library and counting oracle agree)", regular.join("; "));
    Ok(format!("girths {} for n = 2..6; n = 3..5 walk-regular, not distance-regular", girths.join(",")))
}

fn drackn() -> Outcome {
    let q3 = char_poly(&lib(hypercube(3))?);
    let mut notes = Vec::new();
    for (n, r, budget) in [(4, 2, 8), (4, 3, 27), (5, 2, 64)] {
        let s = lib(verify_theorem_6_2(n, r, budget))?;
        ensure!(s.sampled == budget, "K{n}/Z{r}: sampled {} of {budget}", s.sampled);
        ensure!(s.verified == s.connected_two_ev, "K{n}/Z{r}: verified {} of {}", s.verified, s.connected_two_ev);
        let mut cube = false;
        for rec in s.records.iter().filter(|r| r.two_ev.cover_connected) {
            let cover = rec.gain.lift();
            let g = cover.graph();
            ensure!(brute_diameter(g) == Some(3), "K{n}/Z{r}: hit of diameter {:?}", brute_diameter(g));
            let arr = brute_array(g).ok_or(format!("K{n}/Z{r}: connected hit not distance-regular"))?;
            // antipodal classes are the fibers: distance 3 exactly within a fiber
            for x in 0..g.n() {
                let d = bfs(g, x);
                for (y, dy) in d.iter().enumerate() {
                    let same = cover.fiber_of(x) == cover.fiber_of(y);
                    ensure!(same == (x == y || *dy == Some(3)), "K{n}/Z{r}: antipodal classes differ from fibers");
                }
            }
            let p = rec.regularity.drackn.ok_or(format!("K{n}/Z{r}: drackn parameters missing"))?;
            // t counted as common neighbours at distance 2
            let x = 0;
            let d = bfs(g, x);
            for y in (0..g.n()).filter(|&y| d[y] == Some(2)) {
                let common = g.neighbors(x).iter().filter(|z| g.neighbors(y).contains(z)).count();
                ensure!(common == p.t, "K{n}/Z{r}: {common} common neighbours, t = {}", p.t);
            }
            ensure!((p.n, p.r) == (n, r), "K{n}/Z{r}: parameters {p}");
            cube |= char_poly(g) == q3;
            notes.push(format!("K{n}/Z{r} {p} {arr}"));
        }
        ensure!(n != 4 || r != 2 || cube, "no K4/Z2 hit has the characteristic polynomial of Q3");
        if s.connected_two_ev == 0 {
            notes.push(format!("K{n}/Z{r} no connected hits"));
        }
    }
    notes.dedup();
    Ok(notes.join("; "))
}

fn petersen_obstruction() -> Outcome {
    let p = petersen();
    let c = lib(srg_parameters(&p))?.ok_or("petersen not strongly regular")?.c;
    let s_integral = c % 2 == 0;
    let z2 = lib(GroupSpec::cyclic(2))?;
    let filter = lib(column_count_prefilter(&p, &z2))?;
    ensure!(filter == Some(true) && !s_integral, "prefilter verdict {filter:?} with c = {c}");
    let spec = lib(SearchSpec::exhaustive(p, z2, 64))?;
    let oracle = lib(search_two_ev(&spec, false))?;
    ensure!(oracle.sampled == 64, "oracle sampled {}", oracle.sampled);
    ensure!(oracle.hits.is_empty(), "oracle found {} 2ev covers", oracle.hits.len());
    let filtered = lib(search_two_ev(&spec, true))?;
    ensure!(filtered.prefiltered && filtered.hits.is_empty(), "prefiltered search disagrees");
    Ok("s = 1/2; prefilter proves emptiness and all 64 assignments are non-2ev".into())
}

fn f4_mul(x: usize, y: usize) -> usize {
    // GF(4) = {0, 1, w, w + 1} as bit pairs, w^2 = w + 1
    let (mut acc, mut a) = (0, x);
    for bit in 0..2 {
        if y >> bit & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        if a & 4 != 0 {
            a ^= 0b111;
        }
    }
    acc
}

/// `K_{4,4}` over `Z_2 x Z_2` from the multiplication table of GF(4).
fn gf4_gain() -> Result<gaincover::GainGraph, String> {
    let base = lib(complete_bipartite(4, 4))?;
    let group = lib(GroupSpec::abelian(vec![2, 2]))?;
    let arcs = (0..4).flat_map(|j| {
        (0..4).map(move |k| {
            let p = f4_mul(j, k);
            (j, 4 + k, gaincover::GroupElement::Abelian(vec![p >> 1 & 1, p & 1]))
        })
    });
    lib(gaincover::GainGraph::from_oriented(base, group, arcs))
}

fn butson_and_bipartite() -> Outcome {
    for (m, n) in [(2, 3), (3, 3)] {
        let s = lib(verify_corollary_6_5(m, n, 2, 1 << 12))?;
        ensure!(s.connected_two_ev == 0, "K{m},{n}/Z2: {} connected 2ev hits", s.connected_two_ev);
        let size = 1u64 << (m * n - (m + n) + 1);
        ensure!(s.sampled == size, "K{m},{n}/Z2: sampled {} of {size}", s.sampled);
    }
    let cases = [
        (2, "{2,1,1,1;1,1,1,2}"),
        (3, "{3,2,2,1;1,1,2,3}"),
        (4, "{4,3,3,1;1,1,3,4}"),
    ];
    for (q, want) in cases {
        let h = lib(fourier_butson(q))?;
        let f = lib(butson_gain(&h))?;
        let rec = lib(verify_theorem_6_4(&f))?;
        if rec.theorem_checks.get(THM_SRG_DRG) != Some(&CheckOutcome::Pass) {
            let mut why = format!(
                "q = {q}, r = {q}: Fourier gain is not 2ev ({} new eigenvalues)",
                rec.two_ev.distinct_new
            );
            for j in 1..q {
                let spec = lib(hermitian_spectrum(&lib(rep_matrix(&f, &[j]))?.matrix, 1e-7))?;
                if spec.distinct() != 2 {
                    why += &format!("; character {j} has {} distinct eigenvalues", spec.distinct());
                }
            }
            if q == 4 {
                let alt = brute_array(gf4_gain()?.lift().graph());
                why += &format!("; the Z2xZ2 gain from GF(4) lifts to array {alt:?}");
            }
            return Err(why);
        }
        let g = rec.gain.lift().graph().clone();
        let arr = brute_array(&g).ok_or(format!("q = {q}: lift not distance-regular"))?;
        ensure!(arr == want, "q = {q}: counted array {arr}, want {want}");
        let reported = rec.regularity.drg.as_ref().map(ToString::to_string);
        ensure!(reported.as_deref() == Some(want), "q = {q}: library array {reported:?}");
        // K_{q,q} is (2q, q, 0, q) and the gain has order r = q
        let (k, a, c, r) = (q, 0, q, q);
        let formula = format!("{{{k},{},{},1;1,{},{},{k}}}", k - a - 1, c * (r - 1) / r, c / r, k - a - 1);
        ensure!(formula == want, "q = {q}: formula gives {formula}");
        ensure!(g.is_bipartite() && has_symmetric_spectrum(&g), "q = {q}: lift not bipartite");
        ensure!(brute_diameter(&g) == Some(4), "q = {q}: diameter {:?}", brute_diameter(&g));
    }
    Ok("three Butson arrays match by count and formula; K2,3 and K3,3 over Z2 have no connected 2ev covers".into())
}

fn octahedron_audit() -> Outcome {
    let octa = lib(complete_multipartite(&[2, 2, 2]))?;
    let a = lib(srg_parameters(&octa))?.ok_or("octahedron not strongly regular")?.a;
    ensure!(a == 2, "octahedron a = {a}");
    let s = lib(verify_theorem_6_4_search(octa, 2, 128))?;
    ensure!(s.sampled == 128, "sampled {}", s.sampled);
    let (mut checked, mut drg) = (0, 0);
    for rec in &s.records {
        if !rec.two_ev.connected_two_ev() {
            continue;
        }
        checked += 1;
        let lambda = rec.two_ev.lambda().unwrap();
        let is_drg = brute_array(rec.gain.lift().graph()).is_some();
        ensure!(is_drg == (lambda == a as i64), "lambda = {lambda}, distance-regular = {is_drg}");
        drg += usize::from(is_drg);
    }
    Ok(format!(
        "{} 2ev hits, {checked} connected, {drg} distance-regular; equivalence holds on all",
        s.two_ev
    ))
}

fn s3_cover() -> Outcome {
    let f = s3_cover_k5();
    let lift = f.lift();
    let g = lift.graph();
    let lp = petersen().line_graph();
    ensure!(char_poly(g) == char_poly(&lp), "char poly differs from L(Petersen)");
    ensure!(g.degree_sequence() == lp.degree_sequence(), "degree sequences differ");
    let want = roots(&[(4, 1), (2, 5), (-1, 4), (-2, 5)]);
    ensure!(char_poly(g) == want, "lift char poly {}", char_poly(g));
    let base = char_poly(&lib(complete_graph(5))?);
    let diff = char_poly(g).div_exact(&base).ok_or("K5 poly does not divide")?;
    ensure!(diff == roots(&[(2, 5), (-2, 5)]), "difference {diff}");
    let cert = lib(classify_two_ev(&f))?;
    let e = cert.new_eigenvalues.as_ref().ok_or("not classified 2ev")?;
    ensure!(
        cert.is_two_ev && (e.lambda, e.mu, e.mult_theta, e.mult_tau) == (0, 4, 5, 5),
        "certificate {e:?}"
    );
    Ok("lift = L(Petersen) spectrally, Spec = {4, 2^5, -1^4, -2^5}, new part {2^5, -2^5}".into())
}

fn nonexample() -> Outcome {
    for n in [2usize, 3] {
        let f = lib(k3n_nonexample(n))?;
        let s = lib(rep_matrix(&f, &[1]))?;
        let spec = lib(hermitian_spectrum(&s.matrix, 1e-7))?;
        let m = n as f64;
        let want = [(2.0 * m - 1.0, 2), (-1.0, 3 * n - 3), (-m - 1.0, 1)];
        ensure!(spectrum_matches(spec.pairs(), &want, 1e-9), "n = {n}: {:?}", spec.pairs());
        let cert = lib(classify_two_ev(&f))?;
        ensure!(!cert.is_two_ev, "n = {n}: classified 2ev");
        let g = f.lift().graph().clone();
        ensure!(lib(is_distance_regular(&g))?.is_none(), "n = {n}: library reports distance-regular");
        ensure!(brute_array(&g).is_none(), "n = {n}: counted array is constant");
    }
    Ok("signed spectra {(2n-1)^2, -1^(3n-3), (-n-1)^1}; not 2ev, not distance-regular".into())
}

fn walk_regular_suite() -> Outcome {
    let bases = vec![
        lib(complete_graph(4))?,
        lib(complete_graph(5))?,
        lib(complete_bipartite(3, 3))?,
        lib(cycle(6))?,
        lib(hypercube(3))?,
    ];
    let groups = vec![
        lib(GroupSpec::cyclic(2))?,
        lib(GroupSpec::cyclic(3))?,
        lib(GroupSpec::cyclic(4))?,
        lib(GroupSpec::abelian(vec![2, 2]))?,
    ];
    let s = lib(verify_theorem_5_1(&bases, &groups, 200, 2024))?;
    ensure!(s.sampled == 200 * 20, "sampled {}", s.sampled);
    ensure!(s.verified == s.two_ev && s.failures.is_empty(), "{} of {} verified", s.verified, s.two_ev);
    for rec in &s.records {
        ensure!(brute_walk_regular(rec.gain.lift().graph()), "brute force rejects a verified lift");
    }
    let mut samples = 0;
    for (bi, base) in bases.iter().enumerate() {
        for (gi, group) in groups.iter().enumerate() {
            let spec = lib(SearchSpec::new(
                base.clone(),
                group.clone(),
                SearchMode::Random,
                200,
                (bi * 10 + gi) as u64,
            ))?;
            for f in lib(enumerate_gains(&spec))? {
                let blocks = lib(block_spectrum(&f, 1e-7))?;
                let lift = lib(hermitian_spectrum(&CMatrix::from_real(&f.lift().graph().adjacency_matrix()), 1e-7))?;
                ensure!(
                    blocks.approx_eq(&lift, 1e-7),
                    "master test fails on\n{}",
                    f.to_gain_file()
                );
                samples += 1;
            }
        }
    }
    Ok(format!(
        "{} samples, {} 2ev ({} connected), all walk-regular; {samples} master-test samples agree",
        s.sampled, s.two_ev, s.connected_two_ev
    ))
}

fn random_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=8);
            let mut edges = Vec::new();
            if i % 2 == 0 {
                let p: f64 = rng.gen_range(0.15..0.85);
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
            } else {
                // random circulant: walk-regular by construction
                let jumps: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.5)).collect();
                for u in 0..n {
                    for &j in &jumps {
                        let v = (u + j) % n;
                        let e = (u.min(v), u.max(v));
                        if u != v && !edges.contains(&e) {
                            edges.push(e);
                        }
                    }
                }
            }
            Graph::from_edges(n, edges).expect("valid corpus graph")
        })
        .collect()
}

fn infrastructure() -> Outcome {
    let corpus = random_corpus(500, 7);
    let mut walk = 0;
    for (i, g) in corpus.iter().enumerate() {
        let brute = brute_walk_regular(g);
        ensure!(is_walk_regular(g) == brute, "graph {i}: walk-regularity disagrees\n{}", g.to_edge_list());
        walk += usize::from(brute);
        let exact = char_poly(g).real_roots(1e-12);
        let numeric = lib(hermitian_spectrum(&CMatrix::from_real(&g.adjacency_matrix()), 1e-7))?;
        ensure!(
            spectrum_matches(numeric.pairs(), &exact, 1e-7),
            "graph {i}: roots {exact:?} vs eigenvalues {:?}",
            numeric.pairs()
        );
    }
    Ok(format!("500 graphs ({walk} walk-regular): walk check and root/eigenvalue agreement"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
    /// Exact failure message of a criterion that contradicts a proven
    /// counterexample; any other outcome, including a pass, fails the run.
    known_conflict: Option<&'static str>,
}

const CT_Q4: &str = "n = 4: lift is distance-regular with array {4,3,3,1;1,1,3,4} (library and counting oracle agree)";
const FOURIER_4: &str = "q = 4, r = 4: Fourier gain is not 2ev (5 new eigenvalues); character 2 has 3 distinct eigenvalues; \
     the Z2xZ2 gain from GF(4) lifts to array Some(\"{4,3,3,1;1,1,3,4}\")";

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "Kneser K(7,2) spectrum", budget: Duration::from_secs(1), run: kneser_spectrum, known_conflict: None },
        Criterion { name: "Huang signings n=1..8", budget: Duration::from_secs(10), run: huang_signings, known_conflict: None },
        Criterion { name: "Cohen-Tits covers", budget: Duration::from_secs(30), run: cohen_tits, known_conflict: Some(CT_Q4) },
        Criterion { name: "drackn covers of K4, K5", budget: Duration::from_secs(60), run: drackn, known_conflict: None },
        Criterion { name: "Petersen column-count obstruction", budget: Duration::from_secs(30), run: petersen_obstruction, known_conflict: None },
        Criterion { name: "Butson covers and K_{m,n}", budget: Duration::from_secs(60), run: butson_and_bipartite, known_conflict: Some(FOURIER_4) },
        Criterion { name: "octahedron a = lambda audit", budget: Duration::from_secs(60), run: octahedron_audit, known_conflict: None },
        Criterion { name: "S3 cover of K5", budget: Duration::from_secs(5), run: s3_cover, known_conflict: None },
        Criterion { name: "signed K_3n non-example", budget: Duration::from_secs(10), run: nonexample, known_conflict: None },
        Criterion { name: "walk-regularity property suite", budget: Duration::from_secs(300), run: walk_regular_suite, known_conflict: None },
        Criterion { name: "infrastructure oracles", budget: Duration::from_secs(120), run: infrastructure, known_conflict: None },
    ];
    let (mut failed, mut conflicts) = (0, 0);
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        let over = if start.elapsed() > c.budget { " [over time budget]" } else { "" };
        match (outcome, c.known_conflict) {
            (Ok(detail), None) => println!("criterion {:>2} PASS  {} ({secs:.2} s){over}: {detail}", i + 1, c.name),
            (Err(why), Some(known)) if why == known => {
                conflicts += 1;
                println!(
                    "criterion {:>2} FAIL  {} ({secs:.2} s): {why} [known counterexample to the criterion as stated]",
                    i + 1,
                    c.name
                );
            }
            (Ok(detail), Some(_)) => {
                failed += 1;
                println!(
                    "criterion {:>2} PASS  {} ({secs:.2} s): {detail} [unexpected: recorded counterexample no longer reproduces]",
                    i + 1,
                    c.name
                );
            }
            (Err(why), _) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({secs:.2} s): {why}", i + 1, c.name);
            }
        }
    }
    let passed = criteria.len() - failed - conflicts;
    println!(
        "{passed} of {} criteria passed; {conflicts} fail on recorded counterexamples; {failed} unexpected",
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
