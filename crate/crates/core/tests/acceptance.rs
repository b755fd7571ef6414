//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the numbers that certify it (visible under --nocapture).
//!
//! Independent oracles live in this file: a fraction-free Bareiss
//! determinant for spot-checking characteristic polynomials and a
//! partition-counting oracle for the in-family census counts.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use distspectra::census::{anchor_eigenvalues, enumerate_connected, reproduce_tables, verify_theorem};
use distspectra::classifier::{classify, theorem_condition};
use distspectra::family::{
    build_graph, eval_at, factorization_identity_check, poly_h, poly_r, poly_s, CliqueJoinSpec,
};
use distspectra::graph::{DistanceMatrix, Graph};
use distspectra::poly::IntPoly;
use distspectra::spectra::{
    float_spectrum, inertia_shifted, interlacing_check_with, EigenComparator, EigenContext,
    SturmChain, ThresholdPosition,
};
use distspectra::{lambda2_threshold, BigInt, BigRational};

fn width(pow: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(pow))
}

/// Sorted partitions of `total` into exactly `parts` positive parts.
fn partitions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(remaining: u64, parts: usize, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if remaining >= min {
                cur.push(remaining);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let mut k = min;
        while k * parts as u64 <= remaining {
            cur.push(k);
            rec(remaining - k, parts - 1, k, cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(total, parts, 1, &mut Vec::new(), &mut out);
    out
}

/// All clique-join specs with total order (1 + Σ sizes) at most `max_order`.
fn all_specs_up_to(max_order: u64) -> Vec<CliqueJoinSpec> {
    let mut specs = Vec::new();
    for total in 2..max_order {
        for parts in 2..=4usize {
            for p in partitions(total, parts) {
                specs.push(CliqueJoinSpec::new(&p).unwrap());
            }
        }
    }
    specs
}

#[test]
fn criterion_1_table_reproduction() {
    let rows = reproduce_tables().unwrap();
    assert_eq!(rows.len(), 24, "Tables 1-4 carry 24 rows");
    let max_width = width(9);
    for row in &rows {
        assert!(
            row.enclosure.width() <= max_width,
            "enclosure too wide for table {} n4={}",
            row.table,
            row.n4
        );
        assert!(
            row.matches_printed,
            "table {} n4={} computed {} vs printed {}",
            row.table, row.n4, row.computed, row.printed
        );
    }
    let flagged: Vec<String> = rows
        .iter()
        .filter(|r| r.near_rounding_boundary)
        .map(|r| format!("T{} n4={}", r.table, r.n4))
        .collect();
    println!(
        "ACCEPTANCE criterion 1: PASS - all 24 table rows match at printed precision \
         (width <= 1e-9; near-boundary flags: {flagged:?})"
    );
}

#[test]
fn criterion_2_anchor_reproduction() {
    let rows = anchor_eigenvalues().unwrap();
    assert_eq!(rows.len(), 15, "15 scattered anchors");
    for row in &rows {
        assert!(
            row.matches,
            "anchor {} computed {} vs {:?}",
            row.description, row.computed, row.target
        );
    }

    // exact algebraic anchors: λ2 within 1e-9 of the closed form, plus an
    // exact certificate (minimal quadratic divides the char poly and its
    // root lies inside the isolated enclosure)
    let k1 = Graph::complete(1).unwrap();
    let k2 = Graph::complete(2).unwrap();
    let k3 = Graph::complete(3).unwrap();
    let join_2k2_2k3 = k1
        .join(
            &Graph::scalar_union(2, &k2)
                .unwrap()
                .disjoint_union(&Graph::scalar_union(2, &k3).unwrap())
                .unwrap(),
        )
        .unwrap();
    let cases: Vec<(&str, Graph, f64, IntPoly)> = vec![
        (
            "lambda2(P3) = 1-sqrt(3)",
            Graph::path(3).unwrap(),
            1.0 - 3f64.sqrt(),
            IntPoly::from_i64(&[-2, -2, 1]),
        ),
        (
            "lambda2(S4) = 2-sqrt(7)",
            Graph::star(4).unwrap(),
            2.0 - 7f64.sqrt(),
            IntPoly::from_i64(&[-3, -4, 1]),
        ),
        (
            "lambda2(S5) = 3-sqrt(13)",
            Graph::star(5).unwrap(),
            3.0 - 13f64.sqrt(),
            IntPoly::from_i64(&[-4, -6, 1]),
        ),
        (
            "lambda2(S6) = 4-sqrt(21)",
            Graph::star(6).unwrap(),
            4.0 - 21f64.sqrt(),
            IntPoly::from_i64(&[-5, -8, 1]),
        ),
        (
            "lambda2(K4-e) = (3-sqrt(17))/2",
            Graph::complete(4).unwrap().delete_edge(0, 1).unwrap(),
            (3.0 - 17f64.sqrt()) / 2.0,
            IntPoly::from_i64(&[-2, -3, 1]),
        ),
        (
            "lambda2(K1 v (2K2 u 2K3)) = sqrt(2)-2",
            join_2k2_2k3,
            2f64.sqrt() - 2.0,
            IntPoly::from_i64(&[2, 4, 1]),
        ),
    ];
    for (name, g, closed, min_poly) in cases {
        let ctx = EigenContext::for_matrix(&g.distance_matrix().unwrap());
        let enc = ctx.lambda_k(2, &width(12)).unwrap();
        let target = BigRational::from_float(closed).unwrap();
        let err = (enc.midpoint() - &target).abs();
        assert!(err <= width(9), "{name}: off by {err}");
        assert!(
            ctx.poly().divide_exact(&min_poly).is_some(),
            "{name}: minimal polynomial does not divide"
        );
        assert_eq!(
            SturmChain::new(&min_poly).count_in_halfopen(&enc.lo, &enc.hi),
            1,
            "{name}: closed-form root not inside the enclosure"
        );
    }
    println!(
        "ACCEPTANCE criterion 2: PASS - 15 anchors match at printed precision and all 6 \
         algebraic anchors agree with their closed forms to 1e-9 with exact certificates"
    );
}

#[test]
fn criterion_3_boundary_certification() {
    let t = lambda2_threshold();

    // exact sign flip of h(1,2,3,·) at the threshold between 870 and 871
    assert!(eval_at(&poly_h(1, 2, 3, 870), &t).is_negative());
    assert!(eval_at(&poly_h(1, 2, 3, 871), &t).is_positive());

    // coefficient of n4 in r(n3, ·) at the threshold flips at 873 -> 874
    let slope = |n3: u64| eval_at(&poly_r(n3, 2), &t) - eval_at(&poly_r(n3, 1), &t);
    assert!(slope(873).is_negative());
    assert!(slope(874).is_positive());

    // structural verdicts flip at exactly the printed n4 boundaries, and
    // the certified spectral verdict agrees on both sides of each
    let boundaries: [([u64; 3], u64); 6] = [
        ([1, 2, 4], 14),
        ([1, 2, 5], 8),
        ([1, 2, 6], 6),
        ([1, 3, 3], 7),
        ([1, 3, 4], 4),
        ([2, 2, 2], 5),
    ];
    for (base, last_in) in boundaries {
        let inside = [base[0], base[1], base[2], last_in];
        let outside = [base[0], base[1], base[2], last_in + 1];
        assert!(
            theorem_condition(&inside).unwrap().satisfied,
            "{inside:?} must satisfy the condition"
        );
        assert!(
            !theorem_condition(&outside).unwrap().satisfied,
            "{outside:?} must fail the condition"
        );
        for (sizes, expect_below) in [(inside, true), (outside, false)] {
            let g = build_graph(&CliqueJoinSpec::new(&sizes).unwrap()).unwrap();
            let v = classify(&g).unwrap();
            assert!(v.agree, "classification disagreement at {sizes:?}");
            assert_eq!(
                v.spectral == ThresholdPosition::Below,
                expect_below,
                "spectral verdict at {sizes:?}"
            );
        }
    }
    println!(
        "ACCEPTANCE criterion 3: PASS - h(1,2,3,870/871) signs, the r-coefficient flip at \
         n3=873/874, and all six structural boundaries certified exactly"
    );
}

#[test]
fn criterion_4_theorem_verification_census() {
    let report = verify_theorem(7, None).unwrap();
    assert_eq!(report.total_failures(), 0, "structural/spectral disagreement");
    assert_eq!(report.total_connected(), 996);

    let in_family: Vec<usize> = report
        .per_order
        .iter()
        .filter(|r| r.order >= 2)
        .map(|r| r.in_family_count)
        .collect();
    assert_eq!(in_family, vec![1, 2, 3, 5, 6, 9]);

    // independent oracle: count partitions of n−1 into 2..4 parts passing
    // the size conditions, plus K_n itself
    for rec in report.per_order.iter().filter(|r| r.order >= 2) {
        let mut expected = 1usize;
        for parts in 2..=4usize {
            for p in partitions(rec.order as u64 - 1, parts) {
                if theorem_condition(&p).unwrap().satisfied {
                    expected += 1;
                }
            }
        }
        assert_eq!(
            rec.in_family_count, expected,
            "partition oracle mismatch at order {}",
            rec.order
        );
    }
    println!(
        "ACCEPTANCE criterion 4: PASS - zero disagreements over {} classes (orders 1..=7), \
         in-family counts (1,2,3,5,6,9) confirmed by the partition oracle, elapsed {:.2?}",
        report.total_connected(),
        report.elapsed
    );
}

#[test]
fn criterion_5_factorization_identities() {
    let specs = all_specs_up_to(40);
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|spec| {
            match factorization_identity_check(spec) {
                Ok(true) => None,
                Ok(false) => Some(format!("{:?}", spec.sizes())),
                Err(e) => Some(format!("{:?}: {e}", spec.sizes())),
            }
        })
        .collect();
    assert!(failures.is_empty(), "factorization failures: {failures:?}");

    // h = (λ+2)·r and h = (λ+3)·s on 50 sampled tuples, exact equality
    let lambda_plus = |a: i64| IntPoly::from_i64(&[a, 1]);
    let mut checked = 0;
    for n3 in [1u64, 2, 5, 873, 874] {
        for n4 in [1u64, 7, 100, 100_000, 1_000_000_000] {
            let h = poly_h(1, 1, n3, n4);
            let r = poly_r(n3, n4);
            assert_eq!(h.poly, lambda_plus(2).mul(&r.poly), "(1,1,{n3},{n4})");
            checked += 1;
        }
    }
    for n4 in [
        1u64, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 870, 871, 987, 10_000,
        5_000_000, 999_999_999, 123_456_789, 42, 64, 65_536, 1_000_003,
    ] {
        let h = poly_h(1, 2, 2, n4);
        let s = poly_s(n4);
        assert_eq!(h.poly, lambda_plus(3).mul(&s.poly), "(1,2,2,{n4})");
        checked += 1;
    }
    assert_eq!(checked, 50);
    println!(
        "ACCEPTANCE criterion 5: PASS - char poly = (lambda+1)^(n-r-1) * family for all {} \
         specs of order <= 40, and 50 sampled h/r/s factor identities hold exactly",
        specs.len()
    );
}

#[test]
fn criterion_6_dual_oracle_agreement() {
    let t = lambda2_threshold();
    let t_f64 = -0.5858_f64;
    let guard = 1e-8;
    let mut graphs = Vec::new();
    for n in 2..=7 {
        graphs.extend(enumerate_connected(n).unwrap());
    }
    let checked: usize = graphs
        .par_iter()
        .map(|g| {
            let d = g.distance_matrix().unwrap();
            let ctx = EigenContext::for_matrix(&d);
            let by_sturm = ctx.count_greater(&t);
            let by_inertia = inertia_shifted(&d, &t).positive;
            assert_eq!(by_sturm, by_inertia, "exact oracles disagree on {g:?}");
            // no census eigenvalue sits exactly on the threshold: out-of-family
            // graphs have lambda2 strictly above it
            assert!(
                !ctx.counter().is_root(&t),
                "threshold is an eigenvalue of {g:?}"
            );
            assert_eq!(inertia_shifted(&d, &t).zero, 0, "kernel at the threshold on {g:?}");

            let floats = float_spectrum(&d).unwrap();
            let at_least = floats.iter().filter(|&&x| x > t_f64 + guard).count();
            let at_most = floats.iter().filter(|&&x| x > t_f64 - guard).count();
            assert!(
                at_least <= by_sturm && by_sturm <= at_most,
                "float count outside the guard band on {g:?}"
            );

            // every floating eigenvalue within 1e-8 of its certified enclosure
            let spectrum = ctx.spectrum(&width(10)).unwrap();
            for (f, iv) in floats.iter().zip(&spectrum.intervals) {
                let fx = BigRational::from_float(*f).unwrap();
                let dist = if fx < iv.lo {
                    &iv.lo - &fx
                } else if fx > iv.hi {
                    &fx - &iv.hi
                } else {
                    BigRational::zero()
                };
                assert!(
                    dist <= width(8),
                    "float eigenvalue {f} drifts from its enclosure on {g:?}"
                );
            }
            1
        })
        .sum();
    assert_eq!(checked, 995);
    println!(
        "ACCEPTANCE criterion 6: PASS - Sturm counts, rational inertia, and the Jacobi \
         solver agree above -2929/5000 on all 995 census graphs of orders 2..=7; the \
         threshold itself is never an eigenvalue"
    );
}

#[test]
fn criterion_7_interlacing_and_isometric_fixtures() {
    // exhaustive principal-submatrix interlacing over the n <= 6 census
    let mut graphs = Vec::new();
    for n in 2..=6 {
        graphs.extend(enumerate_connected(n).unwrap());
    }
    let checked: usize = graphs
        .par_iter()
        .map(|g| {
            let n = g.order();
            let d = g.distance_matrix().unwrap();
            let ctx_a = EigenContext::for_matrix(&d);
            let mut local = 0;
            for mask in 1u32..1 << n {
                if mask.count_ones() < 2 {
                    continue;
                }
                let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let sub = d.principal_submatrix(&subset).unwrap();
                let ctx_b = EigenContext::for_matrix(&sub);
                assert!(
                    interlacing_check_with(&ctx_a, &ctx_b).unwrap(),
                    "interlacing failed on {g:?} subset {subset:?}"
                );
                local += 1;
            }
            local
        })
        .sum();

    // the proof's witnessed H ⊴ G embeddings: λ2(G) >= λ2(H) and
    // λn(G) <= λm(H), decided exactly
    let k1 = Graph::complete(1).unwrap();
    let k2 = Graph::complete(2).unwrap();
    let p3 = Graph::path(3).unwrap();
    let p4 = Graph::path(4).unwrap();
    let spec = |sizes: &[u64]| build_graph(&CliqueJoinSpec::new(sizes).unwrap()).unwrap();
    let fixtures: Vec<(&str, Graph, Vec<usize>)> = vec![
        ("S4 in K1v(K2uK3uK4)", spec(&[2, 3, 4]), vec![0, 1, 3, 6]),
        ("S4 in K1v(K1u3K2)", spec(&[1, 2, 2, 2]), vec![0, 1, 2, 4]),
        ("S5 in K1v(K1uK2uK2uK3)", spec(&[1, 2, 2, 3]), vec![0, 1, 2, 4, 6]),
        (
            "S6 in K1v(4K1uK2)",
            k1.join(
                &Graph::scalar_union(4, &k1)
                    .unwrap()
                    .disjoint_union(&k2)
                    .unwrap(),
            )
            .unwrap(),
            vec![0, 1, 2, 3, 4, 5],
        ),
        (
            "K4-e in K1v(K1uP3)",
            k1.join(&k1.disjoint_union(&p3).unwrap()).unwrap(),
            vec![0, 2, 3, 4],
        ),
        (
            "C4 in 2K1v2K2",
            Graph::scalar_union(2, &k1)
                .unwrap()
                .join(&Graph::scalar_union(2, &k2).unwrap())
                .unwrap(),
            vec![0, 1, 2, 4],
        ),
        (
            "K1vP4 in K1v(P4uK1)",
            k1.join(&p4.disjoint_union(&k1).unwrap()).unwrap(),
            vec![0, 1, 2, 3, 4],
        ),
    ];
    for (name, host, subset) in &fixtures {
        assert!(
            host.is_isometric_induced(subset).unwrap(),
            "{name}: subset is not isometric"
        );
        let h = host.induced_subgraph(subset).unwrap();
        let ctx_g = EigenContext::for_matrix(&host.distance_matrix().unwrap());
        let ctx_h = EigenContext::for_matrix(&h.distance_matrix().unwrap());
        let cmp = EigenComparator::new(&ctx_g, &ctx_h);
        assert_ne!(
            cmp.compare(2, 2).unwrap(),
            Ordering::Less,
            "{name}: lambda2(G) < lambda2(H)"
        );
        assert_ne!(
            cmp.compare(host.order(), h.order()).unwrap(),
            Ordering::Greater,
            "{name}: lambda_n(G) > lambda_m(H)"
        );
    }
    println!(
        "ACCEPTANCE criterion 7: PASS - interlacing certified for {checked} principal \
         submatrices over the n <= 6 census and all {} proof fixtures satisfy \
         lambda2(G) >= lambda2(H)",
        fixtures.len()
    );
}

#[test]
fn criterion_8_p4_in_coconnected_graphs() {
    let mut total = 0;
    let mut coconnected = 0;
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            total += 1;
            if g.complement().is_connected() {
                coconnected += 1;
                assert!(
                    g.find_induced_p4().is_some(),
                    "no induced P4 in co-connected graph {g:?}"
                );
            }
        }
    }
    assert!(coconnected > 0);
    println!(
        "ACCEPTANCE criterion 8: PASS - every co-connected graph among the {total} census \
         graphs (orders 2..=7; {coconnected} with connected complement) contains an induced P4"
    );
}

/// Fraction-free Bareiss determinant over BigInt: the independent oracle
/// for spot-checking char_poly_exact at integer points.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (signed_q, r) = num_integer::Integer::div_rem(&num, &prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = signed_q;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn det_xi_minus_d(d: &DistanceMatrix, x: i64) -> BigInt {
    let n = d.order();
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = -BigInt::from(d.entry(i, j));
                    if i == j {
                        e + BigInt::from(x)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(m)
}

/// Deterministic pseudo-random connected graph on n vertices.
fn random_connected_graph(n: usize, mut seed: u64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                seed = seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                if seed >> 33 & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

#[test]
fn char_poly_cross_oracle_against_bareiss() {
    // the characteristic polynomial evaluated at integers equals the
    // independent fraction-free determinant, on named graphs, the order-5
    // census, and random graphs up to order 8
    let mut graphs = vec![
        Graph::path(8).unwrap(),
        Graph::cycle(7).unwrap(),
        Graph::star(6).unwrap(),
        build_graph(&CliqueJoinSpec::new(&[1, 2, 4]).unwrap()).unwrap(),
    ];
    graphs.extend(enumerate_connected(5).unwrap());
    for (i, n) in (6..=8).cycle().take(12).enumerate() {
        graphs.push(random_connected_graph(n, 0x9E3779B97F4A7C15 ^ i as u64));
    }
    for g in &graphs {
        let d = g.distance_matrix().unwrap();
        let p = distspectra::char_poly_exact(&d);
        for x in -3i64..=3 {
            assert_eq!(
                p.eval_bigint(&BigInt::from(x)),
                det_xi_minus_d(&d, x),
                "cross-oracle mismatch at x={x} on {g:?}"
            );
        }
    }
}
