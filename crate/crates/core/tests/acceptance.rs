//! Acceptance criteria 1–10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use popgraph::generators::{random_pop, spider, bare_edges, suite, LayerShape};
use popgraph::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Verdict + 'a>;

fn shape() -> LayerShape {
    LayerShape {
        max_legs: 3,
        max_width: 6,
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:?}, limit {limit:?}"))
    }
}

/// A random POP-graph with input count and layer count drawn from ranges.
fn rpop(
    rng: &mut ChaCha8Rng,
    inputs: std::ops::RangeInclusive<usize>,
    layers: std::ops::RangeInclusive<usize>,
) -> PopGraph {
    let (n, l) = (rng.gen_range(inputs), rng.gen_range(layers));
    random_pop(rng, n, l, shape())
}

fn fail(msg: impl Into<String>) -> Verdict {
    Err(msg.into())
}

/// Criterion 1: `ppg order` on Γ prints exactly 1..19, in under a second.
fn gamma_order() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ppg"))
        .arg("order")
        .arg(common::fixture("gamma.ppg"))
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let expected = format!("{}\n", common::one_to(19));
    if out.status.code() != Some(0) || text != expected {
        return fail(format!("exit {:?}, output {text:?}", out.status.code()));
    }
    within(elapsed, Duration::from_secs(1), "ppg order")?;
    Ok(format!("output `{}` in {elapsed:?}", text.trim()))
}

/// Criterion 2: The three layer fixtures compose to Γ with its fixture order.
fn example_composition() -> Verdict {
    let top = common::load_pop("layer_top.ppg");
    let middle = common::load_pop("layer_middle.ppg");
    let bottom = common::load_pop("layer_bottom.ppg");
    let composed = compose(&compose(&top, &middle).map_err(|e| e.to_string())?, &bottom)
        .map_err(|e| e.to_string())?;
    let gamma = common::gamma();
    if !pop_isomorphic(&composed, &gamma) {
        return fail("composite is not pop-isomorphic to Γ");
    }
    Ok(format!(
        "{} + {} + {} edges compose to the 19-edge Γ, order matches rank for rank",
        top.edge_count(),
        middle.edge_count(),
        bottom.edge_count()
    ))
}

/// Criterion 3: 1000 random composable pairs all compose to valid planar orders.
fn closure() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pairs = 1000;
    let mut edges = 0;
    for k in 0..pairs {
        let a = rpop(&mut rng, 1..=5, 1..=4);
        let b = { let n = a.graph().outputs().len(); rpop(&mut rng, n..=n, 1..=3) };
        let c = compose(&a, &b).map_err(|e| format!("pair {k}: {e}"))?;
        let violations = check_axioms(c.graph(), c.order().as_slice()).map_err(|e| e.to_string())?;
        if !violations.is_empty() {
            return fail(format!("pair {k}: {}", violations[0]));
        }
        edges += c.edge_count();
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30), "closure run")?;
    Ok(format!("{pairs}/{pairs} composites valid ({edges} edges total) in {elapsed:?}"))
}

/// An elementary graph with `n` inputs and one internal vertex: a spider
/// over inputs `at..at+p` with `q` outputs, bare wires elsewhere.
fn one_spider(n: usize, at: usize, p: usize, q: usize, tag: &str) -> PopGraph {
    let mut edges = Vec::new();
    let mut order = Vec::new();
    let mut push = |id: String, src: String, dst: String| {
        order.push(EdgeId::from(id.clone()));
        edges.push((id, src, dst));
    };
    for k in 0..at {
        push(format!("{tag}w{k}"), format!("{tag}a{k}"), format!("{tag}z{k}"));
    }
    for j in 0..p {
        push(format!("{tag}i{j}"), format!("{tag}ai{j}"), format!("{tag}v"));
    }
    for j in 0..q {
        push(format!("{tag}o{j}"), format!("{tag}v"), format!("{tag}zo{j}"));
    }
    for k in at + p..n {
        push(format!("{tag}w{k}"), format!("{tag}a{k}"), format!("{tag}z{k}"));
    }
    let g = ProgressiveGraph::new(DirectedMultigraph::from_edges(edges).unwrap()).unwrap();
    PopGraph::new(g, &order).unwrap()
}

/// Another POP-graph with the same boundary arities as `x` that is not
/// pop-isomorphic to it: a different planar order of the same graph when a
/// random transposition finds one, otherwise a fresh random graph.
fn perturb(rng: &mut ChaCha8Rng, x: &PopGraph) -> PopGraph {
    for _ in 0..20 {
        let mut order = x.order().into_vec();
        let (i, j) = (rng.gen_range(0..order.len()), rng.gen_range(0..order.len()));
        order.swap(i, j);
        if let Ok(y) = PopGraph::new(x.graph().clone(), &order) {
            if !pop_isomorphic(x, &y) {
                return y;
            }
        }
    }
    let (n_in, n_out) = (x.graph().inputs().len(), x.graph().outputs().len());
    loop {
        let y = rpop(rng, n_in..=n_in, 1..=3);
        if y.graph().outputs().len() == n_out && !pop_isomorphic(x, &y) {
            return y;
        }
    }
}

/// Criterion 4: Associativity on 200 triples; cancellation by a one-spider
/// elementary factor on 200 distinct pairs, on both sides.
fn associativity_and_cancellation() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let triples = 200;
    for k in 0..triples {
        let a = rpop(&mut rng, 1..=4, 1..=3);
        let b = { let n = a.graph().outputs().len(); rpop(&mut rng, n..=n, 1..=3) };
        let c = { let n = b.graph().outputs().len(); rpop(&mut rng, n..=n, 1..=3) };
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        if !pop_isomorphic(&left, &right) {
            return fail(format!("triple {k}: folds differ"));
        }
    }
    let pairs = 200;
    let mut equal_controls = 0;
    for k in 0..pairs {
        let x = rpop(&mut rng, 1..=4, 1..=3);
        let y = perturb(&mut rng, &x);
        let n = x.graph().outputs().len();
        let p = rng.gen_range(1..=n.min(3));
        let at = rng.gen_range(0..=n - p);
        let below = one_spider(n, at, p, rng.gen_range(1..=3), "H.");
        if pop_isomorphic(&compose(&x, &below).unwrap(), &compose(&y, &below).unwrap()) {
            return fail(format!("pair {k}: x∘h ≅ y∘h although x ≇ y"));
        }
        // The same factor on the input side.
        let m = x.graph().inputs().len();
        let above = if m == 1 {
            one_spider(0, 0, rng.gen_range(1..=3), 1, "U.")
        } else {
            let q = rng.gen_range(1..=m.min(3));
            let wires = m - q;
            one_spider(wires + 1, rng.gen_range(0..=wires), 1, q, "U.")
        };
        if pop_isomorphic(&compose(&above, &x).unwrap(), &compose(&above, &y).unwrap()) {
            return fail(format!("pair {k}: h∘x ≅ h∘y although x ≇ y"));
        }
        // Control: a renamed copy of x must cancel to an isomorphic composite.
        let doc = emit_ppg(&PpgDocument::from_order(x.clone())).replace(" L", " K");
        let x2 = parse_ppg(&doc).unwrap().pop().unwrap().clone();
        if pop_isomorphic(&compose(&x, &below).unwrap(), &compose(&x2, &below).unwrap()) {
            equal_controls += 1;
        }
    }
    if equal_controls != pairs {
        return fail(format!("only {equal_controls}/{pairs} renamed controls stayed isomorphic"));
    }
    Ok(format!(
        "{triples} triples associative; {pairs} distinct pairs stay distinct under one-spider factors on both sides; {pairs} renamed controls stay equal"
    ))
}

/// Criterion 5: recompose ∘ elementary_decomposition is the identity up to
/// pop-isomorphism, with one factor per internal vertex.
fn decomposition_round_trip() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases: Vec<PopGraph> = (0..200)
        .map(|_| rpop(&mut rng, 1..=5, 1..=5))
        .collect();
    cases.push(common::gamma());
    let mut factors = 0;
    for (k, p) in cases.iter().enumerate() {
        let d = elementary_decomposition(p);
        let expected = p.graph().internal_vertices().len().max(1);
        if d.len() != expected {
            return fail(format!("case {k}: {} factors, expected {expected}", d.len()));
        }
        let back = recompose(&d).map_err(|e| e.to_string())?;
        if !pop_isomorphic(&back, p) {
            return fail(format!("case {k}: recomposition differs"));
        }
        factors += d.len();
    }
    let gamma_factors = elementary_decomposition(&common::gamma()).len();
    Ok(format!(
        "{} graphs round-trip ({factors} factors; Γ has {gamma_factors})",
        cases.len()
    ))
}

/// Every planar order of every suite graph with at most 7 edges.
fn small_orders() -> Vec<(String, PopGraph)> {
    let mut out = Vec::new();
    for (name, g) in suite(7) {
        for o in enumerate_planar_orders(&g, None).unwrap().orders {
            out.push((name.clone(), PopGraph::from_order(g.clone(), &o).unwrap()));
        }
    }
    out
}

/// Criterion 6: synthesize_order(extract_pa(π)) = π for every enumerated π.
fn uniqueness(orders: &[(String, PopGraph)], graphs: usize) -> Verdict {
    let start = Instant::now();
    for (name, p) in orders {
        let back = synthesize_order(&extract_pa(p)).map_err(|e| format!("{name}: {e}"))?;
        if back != p.order() {
            return fail(format!("{name}: {} resynthesized as {back}", p.order()));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60), "uniqueness oracle")?;
    Ok(format!("{} orders over {graphs} graphs resynthesize exactly in {elapsed:?}", orders.len()))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Criterion 7: Spider and bare-edge counts.
fn counting() -> Verdict {
    let mut checked = Vec::new();
    for p in 1..=3u64 {
        for q in 1..=3u64 {
            let n = count_planar_orders(&spider(p as usize, q as usize)).map_err(|e| e.to_string())?;
            if n != factorial(p) * factorial(q) {
                return fail(format!("spider({p},{q}) has {n} orders"));
            }
            checked.push(n);
        }
    }
    for k in 1..=5u64 {
        let n = count_planar_orders(&bare_edges(k as usize)).map_err(|e| e.to_string())?;
        if n != factorial(k) {
            return fail(format!("{k} bare edges have {n} orders"));
        }
    }
    Ok("spider(p,q) = p!·q! for p,q ≤ 3; k bare edges = k! for k ≤ 5".into())
}

/// Criterion 8: Conjugate orders of every enumerated order check out and invert.
fn conjugacy(orders: &[(String, PopGraph)]) -> Verdict {
    for (name, p) in orders {
        let rel = conjugate_order(p);
        let report = check_conjugacy(p.graph(), &rel);
        if !report.is_conjugate() {
            return fail(format!("{name}: {:?}", report.defects));
        }
        let back = order_from_conjugate(p.graph(), &rel).map_err(|e| format!("{name}: {e}"))?;
        if back != p.order() {
            return fail(format!("{name}: conjugate inverts to {back}"));
        }
    }
    Ok(format!("{} conjugate orders valid and invertible", orders.len()))
}

/// Criterion 9: circ(hat(g)) ≅ g on the suite and Γ; hat(Γ) has the expected shape.
fn hat_circ() -> Verdict {
    let gamma = common::gamma().graph().clone();
    let mut graphs: Vec<(String, ProgressiveGraph)> = suite(usize::MAX);
    graphs.push(("Γ".into(), gamma.clone()));
    for (name, g) in &graphs {
        let st = g.hat().map_err(|e| format!("{name}: {e}"))?;
        let back = st.circ().map_err(|e| format!("{name}: {e}"))?;
        if !back.same_up_to_vertex_renaming(g) {
            return fail(format!("{name}: circ(hat(g)) differs"));
        }
    }
    let st = gamma.hat().unwrap();
    let shape = (st.vertex_count(), st.edge_count(), st.out_degree("s"), st.in_degree("t"));
    if shape != (8, 19, 8, 6) {
        return fail(format!("hat(Γ) has (vertices, edges, deg s, deg t) = {shape:?}"));
    }
    Ok(format!(
        "{} graphs round-trip; hat(Γ): 8 vertices, 19 edges, deg⁺(s) = 8, deg⁻(t) = 6",
        graphs.len()
    ))
}

/// Criterion 10: Drawings check out exactly and read back the polarization and
/// anchor, for all small orders, random graphs, and Γ.
fn drawings(orders: &[(String, PopGraph)]) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut cases: Vec<(String, PopGraph)> = orders.to_vec();
    for k in 0..200 {
        cases.push((
            format!("random #{k}"),
            rpop(&mut rng, 1..=5, 1..=5),
        ));
    }
    cases.push(("Γ".into(), common::gamma()));
    let mut drawn = 0;
    for (name, p) in &cases {
        let pa = extract_pa(p);
        for d in [
            layout(p),
            layout(p).with_flow(Flow::Up),
            layout_st(p),
            layout_st(p).with_flow(Flow::Up),
        ] {
            let report = check_drawing(&d);
            if !report.is_valid() {
                return fail(format!("{name}: {}", report.defects[0]));
            }
            let rb = read_back(&d);
            if &rb.anchor != pa.anchor() || &rb.polarization != pa.polarization() {
                return fail(format!("{name}: read-back differs from extract_pa"));
            }
            drawn += 1;
        }
    }
    Ok(format!("{drawn} drawings of {} POP-graphs valid; read-back matches", cases.len()))
}

fn main() -> ExitCode {
    let orders = small_orders();
    let graphs = suite(7).len();
    let criteria: Vec<(&str, Check)> = vec![
        ("Planar order of Γ", Box::new(gamma_order)),
        ("Layer composition", Box::new(example_composition)),
        ("Closure under composition", Box::new(closure)),
        ("Associativity and cancellation", Box::new(associativity_and_cancellation)),
        ("Decomposition round-trip", Box::new(decomposition_round_trip)),
        ("Uniqueness of synthesized orders", Box::new(|| uniqueness(&orders, graphs))),
        ("Counting", Box::new(counting)),
        ("Conjugacy", Box::new(|| conjugacy(&orders))),
        ("Hat/circ round-trip", Box::new(hat_circ)),
        ("Drawing validity", Box::new(|| drawings(&orders))),
    ];
    let mut failures = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {title}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
