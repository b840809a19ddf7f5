//! Acceptance suite. Prints one line per criterion and exits non-zero when a
//! criterion fails unexpectedly.
//!
//! Small instances are cross-checked against brute-force oracles written
//! here, independently of the library's enumeration code.

use std::collections::{BTreeSet, VecDeque};
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gallai::graph_constructions::{
    blow_up, check_doubling_hypotheses, cyclic_prime_colouring, delete_vertex, double_extension, paths_colouring,
    predicted_pipeline_count, upper_bound_pipeline,
};
use gallai::hypergraph_constructions::{
    covering_4graph_colouring, covering_blowup, k17_colouring, k17_type_classes, minimal_3graph_edge_count,
    minimal_connected_3graph, parity_covering_2colouring, pointwise_cycles_colouring, realisable_types, strong_blowup,
};
use gallai::search::{
    family_lower_bound, min_connected_3graph_edges, min_multicoloured_triangles, min_multicoloured_triangles_with,
    min_partition_family, TriangleSearchOptions,
};
use gallai::subset::{binomial, Subsets};
use gallai::verify::{
    colour_set_family, is_connected, is_connected_colouring, link_connectivity_profile, max_colours_on_d_set,
    multicoloured_family, partition_condition, tricoloured_count, classes_isomorphic_under, ConnectivityNotion,
    ScanMode,
};
use gallai::{Colour, EdgeColouring, Hypergraph};

enum Outcome {
    Pass(String),
    Fail(String),
    /// Impossible as stated; `proof_holds` records whether the
    /// impossibility argument itself checked out.
    Unattainable { detail: String, proof_holds: bool },
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---------- oracles ----------

/// Colour sets of multicoloured triangles by direct triple loops.
fn oracle_triangle_family(c: &EdgeColouring) -> BTreeSet<[Colour; 3]> {
    let n = c.n();
    let col = |a: usize, b: usize| c.colour(&[a, b]).unwrap();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for x in b + 1..n {
                let mut t = [col(a, b), col(a, x), col(b, x)];
                t.sort_unstable();
                if t[0] != t[1] && t[1] != t[2] {
                    out.insert(t);
                }
            }
        }
    }
    out
}

/// Breadth-first search over one colour class of a graph colouring.
fn oracle_class_connected(c: &EdgeColouring, colour: Colour) -> bool {
    let n = c.n();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for w in 0..n {
            if w != v && !seen[w] && c.colour(&[v, w]).unwrap() == colour {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn oracle_connected(c: &EdgeColouring) -> bool {
    (1..=c.k() as Colour).all(|col| oracle_class_connected(c, col))
}

/// Every `s`-subset of vertices lies in some edge.
fn oracle_covers(h: &Hypergraph, s: usize) -> bool {
    Subsets::new(h.n(), s).all(|t| h.edges().any(|e| t.iter().all(|v| e.contains(&(*v as u32)))))
}

fn family_set(c: &EdgeColouring) -> Result<BTreeSet<[Colour; 3]>, String> {
    Ok(ok(colour_set_family(c))?
        .iter()
        .map(|s| [s[0], s[1], s[2]])
        .collect())
}

// ---------- criteria ----------

fn c1_cyclic() -> Check {
    let mut details = Vec::new();
    for k in [3, 5, 6, 8] {
        let c = ok(cyclic_prime_colouring(k))?;
        ensure(ok(is_connected_colouring(&c, ConnectivityNotion::Graph))?, || format!("k={k} not connected"))?;
        ensure(oracle_connected(&c), || format!("k={k}: oracle disagrees on connectivity"))?;
        let f = ok(colour_set_family(&c))?;
        ensure(f.len() * 3 == k * (k - 2), || format!("k={k}: family size {}", f.len()))?;
        ensure(family_set(&c)? == oracle_triangle_family(&c), || format!("k={k}: oracle family differs"))?;
        for col in 1..=k as Colour {
            ensure(f.degree(col) == k - 2, || format!("k={k}: colour {col} in {} sets", f.degree(col)))?;
        }
        details.push(format!("k={k}:{}", f.len()));
    }
    Ok(format!("family sizes {}", details.join(" ")))
}

fn c2_vertex_deletion() -> Check {
    let c = ok(cyclic_prime_colouring(5))?;
    for v in 0..11 {
        let d = ok(delete_vertex(&c, v))?;
        ensure(d.k() == 5 && ok(is_connected_colouring(&d, ConnectivityNotion::Graph))?, || {
            format!("deleting {v} disconnects a class")
        })?;
        ensure(oracle_connected(&d), || format!("deleting {v}: oracle disagrees"))?;
        let size = ok(colour_set_family(&d))?.len();
        ensure(size == 5, || format!("deleting {v}: family size {size}"))?;
        ensure(family_set(&d)? == oracle_triangle_family(&d), || format!("deleting {v}: oracle family differs"))?;
    }
    Ok("all 11 deletions connected with family size 5".into())
}

fn c3_blow_up() -> Check {
    let c = ok(cyclic_prime_colouring(5))?;
    let base = family_set(&c)?;
    let mut sizes_30 = vec![3; 8];
    sizes_30.extend([2, 2, 2]);
    for sizes in [vec![2; 11], sizes_30] {
        let b = ok(blow_up(&c, &sizes))?;
        let n = b.n();
        ensure(ok(is_connected_colouring(&b, ConnectivityNotion::Graph))?, || format!("n={n} not connected"))?;
        ensure(family_set(&b)? == base, || format!("n={n}: family changed"))?;
        ensure(oracle_triangle_family(&b) == base, || format!("n={n}: oracle family differs"))?;
    }
    Ok("n=22 and n=30 keep the 5-member family".into())
}

fn c4_doubling() -> Check {
    let c = ok(cyclic_prime_colouring(5))?;
    let hyp = ok(check_doubling_hypotheses(&c, 5))?;
    let d = ok(double_extension(&c, &hyp))?;
    ensure((d.n(), d.k()) == (22, 6), || format!("got n={} k={}", d.n(), d.k()))?;
    ensure(oracle_connected(&d), || "K_22 not connected (oracle)".into())?;
    let f = ok(colour_set_family(&d))?;
    ensure(f.len() == 9 && f.degree(6) == 4, || format!("family {} with {} new", f.len(), f.degree(6)))?;
    ensure(family_set(&d)? == oracle_triangle_family(&d), || "K_22 oracle family differs".into())?;
    let hyp2 = ok(check_doubling_hypotheses(&d, 6))?;
    ensure(hyp2.special_count == 4 && hyp2.family_size == 9, || "K_22 hypotheses".into())?;
    let e = ok(double_extension(&d, &hyp2))?;
    ensure((e.n(), e.k()) == (44, 7), || format!("second: n={} k={}", e.n(), e.k()))?;
    ensure(oracle_connected(&e), || "K_44 not connected (oracle)".into())?;
    let size = oracle_triangle_family(&e).len();
    ensure(size == 14 && ok(colour_set_family(&e))?.len() == 14, || format!("K_44 family {size}"))?;
    Ok("K_22: 9 sets (4 new), hypotheses hold; K_44: 14 sets".into())
}

fn c5_pipeline() -> Check {
    let mut details = Vec::new();
    for k in 4..=10 {
        let p = ok(upper_bound_pipeline(k))?;
        let c = &p.colouring;
        ensure(c.k() == k && oracle_connected(c), || format!("k={k}: not connected"))?;
        let size = oracle_triangle_family(c).len();
        let predicted = predicted_pipeline_count(k, p.k0);
        ensure(size == predicted, || format!("k={k}: {size} != predicted {predicted}"))?;
        ensure(size >= family_lower_bound(k), || format!("k={k}: below the lower bound"))?;
        details.push(format!("{k}:{size}"));
    }
    Ok(format!("k:size {}", details.join(" ")))
}

fn c6_paths() -> Check {
    for (k, n) in [(3, 20), (5, 30)] {
        let c = ok(paths_colouring(k, n, 1, 3))?;
        ensure(oracle_connected(&c), || format!("k={k}: not connected"))?;
        let expected: BTreeSet<[Colour; 3]> = (1..k as Colour)
            .flat_map(|i| (i + 1..k as Colour).map(move |j| [i, j, k as Colour]))
            .collect();
        ensure(expected.len() as u64 == binomial(k - 1, 2), || "bad expectation".into())?;
        ensure(oracle_triangle_family(&c) == expected, || format!("k={k}: family differs"))?;
        ensure(family_set(&c)? == expected, || format!("k={k}: library family differs"))?;
    }
    let c = ok(paths_colouring(6, 300, 1, 4))?;
    ensure(ok(is_connected_colouring(&c, ConnectivityNotion::Graph))?, || "(6,4) not connected".into())?;
    let (most, set) = ok(max_colours_on_d_set(&c, 4))?;
    ensure(most == 4, || format!("(6,4): some K_4 spans {most} colours"))?;
    let colours: BTreeSet<Colour> = Subsets::new(4, 2)
        .map(|p| c.colour(&[set[p[0]], set[p[1]]]).unwrap())
        .collect();
    ensure(colours.len() == 4, || "(6,4): witness K_4 does not span 4 colours".into())?;
    Ok(format!("(3,3),(5,3) families exact; (6,4) at n=300: max 4 colours on a K_4, e.g. {set:?}"))
}

fn c7_exhaustive_f() -> Check {
    let reduced = ok(min_multicoloured_triangles(3, 6, u64::MAX))?;
    ensure(reduced.complete && reduced.optimum == Some(1), || format!("reduced: {:?}", reduced.optimum))?;
    let w = reduced.colouring().ok_or("no witness")?;
    ensure(oracle_connected(w) && oracle_triangle_family(w).len() == 1, || "witness fails oracle".into())?;
    let mut opts = TriangleSearchOptions::new(u64::MAX);
    opts.symmetry_breaking = false;
    opts.pruning = false;
    let full = ok(min_multicoloured_triangles_with(3, 6, &opts))?;
    ensure(full.complete && full.optimum == Some(1), || format!("unreduced: {:?}", full.optimum))?;
    ensure(full.nodes >= 3u64.pow(15), || format!("unreduced visited only {} nodes", full.nodes))?;
    Ok(format!(
        "minimum 1 (reduced {} nodes, unreduced {} nodes)",
        reduced.nodes, full.nodes
    ))
}

fn c8_partition_family() -> Check {
    let mut details = Vec::new();
    for (k, expected) in [(4, 3), (5, 5), (6, 8)] {
        let r = ok(min_partition_family(k, u64::MAX))?;
        ensure(r.complete && r.optimum == Some(expected), || format!("k={k}: {:?}", r.optimum))?;
        let f = r.family().ok_or("no witness")?;
        ensure(ok(partition_condition(f, k))?.ok, || format!("k={k}: witness fails"))?;
        ensure(ok(link_connectivity_profile(f, k))?.iter().all(|l| l.link_connected), || {
            format!("k={k}: disconnected link")
        })?;
        details.push(format!("k={k}:{expected}"));
    }
    Ok(details.join(" "))
}

fn c9_k17() -> Check {
    ok(k17_type_classes())?;
    ensure(realisable_types().len() == 24, || "not 24 types".into())?;
    let c = ok(k17_colouring())?;
    let conn = ok(gallai::verify::colouring_connectivity(&c, ConnectivityNotion::Strong))?;
    ensure(conn.iter().all(|(_, r)| r.passed()), || "a class is not strongly connected".into())?;
    let m = ok(multicoloured_family(&c, 4, ScanMode::Full))?;
    ensure(m.count == 0 && m.visited == 2380, || format!("{} of {}", m.count, m.visited))?;
    let doubling: Vec<usize> = (0..17).map(|x| 2 * x % 17).collect();
    let iso = ok(classes_isomorphic_under(&c, &doubling))?;
    ensure(iso.ok, || format!("x -> 2x fails: {:?}", iso.counterexample))?;
    Ok("24 types partitioned; 4 strong classes; 0 of 2380 multicoloured; x->2x cycles classes".into())
}

fn c10_strong_blowup() -> Check {
    let mono = ok(EdgeColouring::monochromatic(3, 3))?;
    let c = ok(strong_blowup(&ok(strong_blowup(&mono))?))?;
    ensure((c.n(), c.k()) == (81, 3), || format!("got n={} k={}", c.n(), c.k()))?;
    ensure(ok(is_connected_colouring(&c, ConnectivityNotion::Strong))?, || "K_81 not strong".into())?;
    let m = ok(multicoloured_family(&c, 4, ScanMode::Full))?;
    ensure(m.count == 0 && m.visited == 1_663_740, || format!("K_81: {} of {}", m.count, m.visited))?;
    let big = ok(strong_blowup(&ok(k17_colouring())?))?;
    ensure((big.n(), big.k()) == (289, 5), || "K_289 shape".into())?;
    ensure(ok(is_connected_colouring(&big, ConnectivityNotion::Strong))?, || "K_289 not strong".into())?;
    let m = ok(multicoloured_family(&big, 4, ScanMode::Full))?;
    ensure(m.count == 0 && m.visited == binomial(289, 4), || format!("K_289: {} of {}", m.count, m.visited))?;
    Ok(format!("K_81: 0 of 1663740; K_289 (5 colours, strong): 0 of {} (full scan)", m.visited))
}

fn c11_covering_blowup() -> Check {
    let mono = ok(EdgeColouring::monochromatic(4, 3))?;
    let c = ok(covering_blowup(&ok(covering_blowup(&mono))?))?;
    ensure((c.n(), c.k()) == (256, 3), || format!("got n={} k={}", c.n(), c.k()))?;
    ensure(ok(is_connected_colouring(&c, ConnectivityNotion::Covering))?, || "not covering".into())?;
    let t = ok(tricoloured_count(&c, 3, ScanMode::Full))?;
    ensure(t.at_least == 0 && t.visited == binomial(256, 4), || format!("{} of {}", t.at_least, t.visited))?;
    Ok(format!("K_256, 3 colours, covering; 0 of {} tricoloured", t.visited))
}

fn c12_pointwise_cycles() -> Check {
    let c = ok(pointwise_cycles_colouring(4, 13))?;
    ensure(ok(is_connected_colouring(&c, ConnectivityNotion::Pointwise))?, || "not pointwise".into())?;
    let m = ok(multicoloured_family(&c, 4, ScanMode::Full))?;
    ensure(m.count == 0 && m.visited == 715, || format!("{} of {}", m.count, m.visited))?;
    Ok("all 4 classes pointwise connected; 0 of 715 multicoloured".into())
}

/// Five-case block rule written out directly, on any two bases.
fn oracle_covering_4graph(c: &EdgeColouring, d: &EdgeColouring) -> EdgeColouring {
    let n = c.n();
    EdgeColouring::from_fn(n * n, 4, 3, |e| {
        let blocks: Vec<usize> = e.iter().map(|v| v / n).collect();
        let inner: Vec<usize> = e.iter().map(|v| v % n).collect();
        let distinct: BTreeSet<usize> = blocks.iter().copied().collect();
        let largest = distinct.iter().map(|b| blocks.iter().filter(|x| *x == b).count()).max().unwrap();
        match (distinct.len(), largest) {
            (4, _) => d.colour(&blocks).unwrap() + 1,
            (1, _) => c.colour(&inner).unwrap(),
            (3, _) => 1,
            (2, 2) => 2,
            _ => 3,
        }
    })
    .unwrap()
}

fn c13_covering_4graph() -> Outcome {
    // As stated: parity bases at n=6. No 2-colouring of K_6^(4) is a covering,
    // so the construction has no valid input there.
    let mut covering_bases = 0;
    for code in 0u32..1 << 15 {
        let colours: Vec<Colour> = (0..15).map(|i| 1 + ((code >> i) & 1) as Colour).collect();
        if let Ok(c) = EdgeColouring::from_ranked(6, 4, 2, colours) {
            if is_connected_colouring(&c, ConnectivityNotion::Covering).unwrap() {
                covering_bases += 1;
            }
        }
    }
    let parity6 = EdgeColouring::from_fn(6, 4, 2, |e| 1 + (e.iter().sum::<usize>() % 2) as Colour).unwrap();
    let literal = oracle_covering_4graph(&parity6, &parity6);
    let literal_covering = is_connected_colouring(&literal, ConnectivityNotion::Covering).unwrap();
    let literal_count = tricoloured_count(&literal, 3, ScanMode::Full).unwrap();
    let literal_fails = parity_covering_2colouring(6, (1, 2)).is_err();

    // Smallest n where the parity bases are coverings.
    let base = parity_covering_2colouring(8, (1, 2)).unwrap();
    let c = covering_4graph_colouring(&base, &base).unwrap();
    let same_as_oracle = c == oracle_covering_4graph(&base, &base);
    let covering = is_connected_colouring(&c, ConnectivityNotion::Covering).unwrap();
    let t = tricoloured_count(&c, 3, ScanMode::Full).unwrap();
    let n8_holds = same_as_oracle && covering && t.at_least == 0 && t.visited == binomial(64, 5);

    Outcome::Unattainable {
        detail: format!(
            "as stated (n=6) the output is {}covering ({} of {} five-sets use 3 colours): \
             {covering_bases} of 32768 2-colourings of K_6^(4) are coverings, so no base exists; \
             at n=8 the K_64^(4) colouring is {}covering with {} of {} five-sets using 3 colours",
            if literal_covering { "" } else { "not " },
            literal_count.at_least,
            literal_count.visited,
            if covering { "" } else { "not " },
            t.at_least,
            t.visited
        ),
        proof_holds: covering_bases == 0 && !literal_covering && literal_fails && n8_holds,
    }
}

fn c14_minimal_3graphs() -> Check {
    for n in 2..=30 {
        let h = ok(minimal_connected_3graph(n))?;
        ensure(h.edge_count() == minimal_3graph_edge_count(n), || format!("n={n}: {} edges", h.edge_count()))?;
        ensure(h.edge_count() as u64 == binomial(n, 2) / 2, || format!("n={n}: count formula"))?;
        let report = ok(is_connected(&h, ConnectivityNotion::Strong))?;
        if n >= 3 {
            ensure(report.passed(), || format!("n={n}: not strongly connected"))?;
        } else {
            ensure(report.ok(), || "n=2 should be degenerate-connected".into())?;
        }
    }
    let mut minima = Vec::new();
    for (n, expected) in [(4, 3), (5, 5), (6, 7)] {
        let r = ok(min_connected_3graph_edges(n, u64::MAX))?;
        ensure(r.complete && r.optimum == Some(expected), || format!("n={n}: {:?}", r.optimum))?;
        minima.push(format!("n={n}:{expected}"));
    }
    Ok(format!("2<=n<=30 exact counts, strong for n>=3; minimal {}", minima.join(" ")))
}

fn random_colouring(rng: &mut ChaCha8Rng, n: usize, r: usize, k: usize) -> EdgeColouring {
    loop {
        let colours = (0..binomial(n, r)).map(|_| rng.gen_range(1..=k as Colour)).collect();
        if let Ok(c) = EdgeColouring::from_ranked(n, r, k, colours) {
            return c;
        }
    }
}

fn c15_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut instances = 0;
    let mut gallai_checked = 0;
    let mut implications_checked = 0;

    // graph colourings: random, plus connected 3-colourings from constructions
    let mut graphs: Vec<EdgeColouring> = Vec::new();
    for _ in 0..700 {
        let n = rng.gen_range(6..=9);
        graphs.push(random_colouring(&mut rng, n, 2, 3));
    }
    let cyclic3 = ok(cyclic_prime_colouring(3))?;
    graphs.push(cyclic3.clone());
    for _ in 0..20 {
        let sizes: Vec<usize> = (0..7).map(|_| rng.gen_range(1..=3)).collect();
        graphs.push(ok(blow_up(&cyclic3, &sizes))?);
    }
    for seed in 0..10 {
        graphs.push(ok(paths_colouring(3, 12 + seed as usize, seed, 3))?);
    }
    if let Some(w) = ok(min_multicoloured_triangles(3, 6, u64::MAX))?.colouring() {
        graphs.push(w.clone());
    }
    for c in &graphs {
        instances += 1;
        let k = c.k();
        let family = ok(colour_set_family(c))?;
        let mut perm: Vec<Colour> = (1..=k as Colour).collect();
        perm.shuffle(&mut rng);
        let permuted = ok(c.permute_colours(&perm))?;
        ensure(ok(colour_set_family(&permuted))? == family.mapped(&perm), || "colour equivariance".into())?;
        let mut sigma: Vec<usize> = (0..c.n()).collect();
        sigma.shuffle(&mut rng);
        let moved = ok(c.permute_vertices(&sigma))?;
        ensure(ok(colour_set_family(&moved))? == family, || "vertex invariance (family)".into())?;
        let connected = ok(is_connected_colouring(c, ConnectivityNotion::Graph))?;
        ensure(connected == ok(is_connected_colouring(&moved, ConnectivityNotion::Graph))?, || {
            "vertex invariance (connectivity)".into()
        })?;
        ensure(connected == oracle_connected(c), || "connectivity oracle".into())?;
        if connected && k == 3 {
            gallai_checked += 1;
            ensure(!family.is_empty() && !oracle_triangle_family(c).is_empty(), || {
                "connected 3-colouring without a multicoloured triangle".into()
            })?;
        }
    }

    // 3- and 4-graph colourings: implications between notions and invariance
    for i in 0..400 {
        let (n, r) = if i % 4 == 0 { (rng.gen_range(6..=7), 4) } else { (rng.gen_range(5..=8), 3) };
        let k = rng.gen_range(2..=3);
        let c = random_colouring(&mut rng, n, r, k);
        instances += 1;
        for colour in 1..=k as Colour {
            let h = ok(c.colour_class(colour))?;
            let strong = ok(is_connected(&h, ConnectivityNotion::Strong))?.ok();
            let covering = ok(is_connected(&h, ConnectivityNotion::Covering))?.ok();
            let pointwise = ok(is_connected(&h, ConnectivityNotion::Pointwise))?.ok();
            ensure(covering == oracle_covers(&h, r - 1), || "covering oracle".into())?;
            ensure(!strong || covering, || "strong without covering".into())?;
            ensure(!strong || pointwise, || "strong without pointwise".into())?;
            ensure(!covering || oracle_covers(&h, 2), || "covering without 2-set coverage".into())?;
            implications_checked += 1;
        }
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(&mut rng);
        let moved = ok(c.permute_vertices(&sigma))?;
        let a = ok(multicoloured_family(&c, r + 1, ScanMode::Full))?;
        let b = ok(multicoloured_family(&moved, r + 1, ScanMode::Full))?;
        ensure(a.count == b.count && a.family == b.family, || "vertex invariance (r+1 sets)".into())?;
        let ta = ok(tricoloured_count(&c, 3, ScanMode::Full))?;
        let tb = ok(tricoloured_count(&moved, 3, ScanMode::Full))?;
        ensure(ta.at_least == tb.at_least, || "vertex invariance (tricoloured)".into())?;
        let strong = ok(is_connected_colouring(&c, ConnectivityNotion::Strong))?;
        ensure(strong == ok(is_connected_colouring(&moved, ConnectivityNotion::Strong))?, || {
            "vertex invariance (strong)".into()
        })?;
    }
    ensure(instances >= 1000, || format!("only {instances} instances"))?;
    Ok(format!(
        "{instances} instances, {gallai_checked} connected 3-colourings with a multicoloured triangle, \
         {implications_checked} classes checked for implications, 0 violations"
    ))
}

fn main() -> ExitCode {
    let criteria: Vec<(u8, &str, fn() -> Outcome)> = vec![
        (1, "cyclic colourings", || wrap(c1_cyclic)),
        (2, "vertex deletion", || wrap(c2_vertex_deletion)),
        (3, "blow-up invariance", || wrap(c3_blow_up)),
        (4, "doubling", || wrap(c4_doubling)),
        (5, "pipeline", || wrap(c5_pipeline)),
        (6, "paths colouring", || wrap(c6_paths)),
        (7, "exhaustive f(3) on K_6", || wrap(c7_exhaustive_f)),
        (8, "partition family minima", || wrap(c8_partition_family)),
        (9, "K_17 distance-type colouring", || wrap(c9_k17)),
        (10, "strong blow-up", || wrap(c10_strong_blowup)),
        (11, "covering blow-up", || wrap(c11_covering_blowup)),
        (12, "pointwise cycles", || wrap(c12_pointwise_cycles)),
        (13, "covering 4-graph colouring", c13_covering_4graph),
        (14, "minimal strongly connected 3-graphs", || wrap(c14_minimal_3graphs)),
        (15, "property suites", || wrap(c15_properties)),
    ];
    let mut unexpected = 0;
    let mut failed = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::Fail(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                failed += 1;
                unexpected += 1;
                ("FAIL", d)
            }
            Outcome::Unattainable { detail, proof_holds } => {
                failed += 1;
                if !proof_holds {
                    unexpected += 1;
                }
                let proof = if proof_holds { "impossibility verified" } else { "impossibility NOT verified" };
                ("FAIL", format!("unattainable as stated, {proof}: {detail}"))
            }
        };
        println!("criterion {id:>2} {status}  {title}: {detail} [{secs:.1}s]");
    }
    println!(
        "acceptance: {} passed, {failed} failed ({} unattainable as stated with verified proof)",
        15 - failed,
        failed - unexpected
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn wrap(f: fn() -> Check) -> Outcome {
    match f() {
        Ok(d) => Outcome::Pass(d),
        Err(d) => Outcome::Fail(d),
    }
}
