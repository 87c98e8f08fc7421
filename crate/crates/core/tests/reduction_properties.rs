mod common;

use common::{big, brute_min, brute_minimizers};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qubo_core::{
    interpret_ilp_result, normalize_rational, reduce_clique_to_squbo, reduce_ilp_to_qubo, repair_to_clique,
    solve_qubo, Assignment, Graph, IlpInstance, OracleHandle, RationalQubo,
};

fn brute_ilp_optimum(ilp: &IlpInstance) -> BigInt {
    let (m, n) = (ilp.m(), ilp.n());
    (0..1u64 << n)
        .filter(|mask| {
            (0..m).all(|i| {
                let lhs: BigInt = (0..n).filter(|j| mask >> j & 1 == 1).map(|j| &ilp.a()[i][j]).sum();
                lhs <= ilp.b()[i]
            })
        })
        .map(|mask| (0..n).filter(|j| mask >> j & 1 == 1).map(|j| &ilp.c()[j]).sum::<BigInt>())
        .max()
        .expect("x = 0 is feasible")
}

fn arb_ilp() -> impl Strategy<Value = IlpInstance> {
    // Keeps n + m*k at or below 15 so the brute-force sweeps stay cheap.
    (1usize..=3, 1usize..=3).prop_flat_map(|(m, n)| {
        (
            proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), m),
            proptest::collection::vec(0i64..=4, m),
            proptest::collection::vec(0i64..=5, n),
        )
            .prop_map(|(a, b, c)| {
                let rows: Vec<&[i64]> = a.iter().map(Vec::as_slice).collect();
                IlpInstance::from_i64(&rows, &b, &c).unwrap()
            })
    })
}

fn bits_needed(v: &BigInt) -> u64 {
    v.bits()
}

fn brute_clique(g: &Graph) -> usize {
    let n = g.n_vertices();
    (0..1u64 << n)
        .map(|m| (1..=n).filter(|&v| m >> (v - 1) & 1 == 1).collect::<Vec<_>>())
        .filter(|vs| g.is_clique(vs))
        .map(|vs| vs.len())
        .max()
        .unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn check_clique_reduction(g: &Graph) {
    let q = reduce_clique_to_squbo(g);
    assert!(q.classify(None, None).unwrap().squbo);
    let (min, minimizers) = brute_minimizers(&q);
    let omega = brute_clique(g);
    assert_eq!(-min.clone(), big(omega as i64), "{g:?}");
    for m in minimizers {
        let x = Assignment::from_mask(m, q.n());
        let z = repair_to_clique(&q, &x).unwrap();
        let vs: Vec<usize> = z.ones().collect();
        assert!(g.is_clique(&vs));
        assert_eq!(vs.len(), omega);
        assert_eq!(q.evaluate(&z).unwrap(), q.evaluate(&x).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ilp_reduction_preserves_the_optimum(ilp in arb_ilp()) {
        let map = reduce_ilp_to_qubo(&ilp).unwrap();
        prop_assert_eq!(map.qubo.n(), ilp.n() + ilp.m() * map.k);
        let report = solve_qubo(&map.qubo, &mut OracleHandle::new(map.qubo.clone())).unwrap();
        prop_assert_eq!(interpret_ilp_result(&map, &report), brute_ilp_optimum(&ilp));
    }

    #[test]
    fn ilp_penalty_propositions(ilp in arb_ilp()) {
        let map = reduce_ilp_to_qubo(&ilp).unwrap();
        let (_, minimizers) = brute_minimizers(&map.qubo);
        for m in minimizers {
            let a = Assignment::from_mask(m, map.qubo.n());
            prop_assert_eq!(map.constraint_penalty(&a), big(0));
        }
        for m in 0..1u64 << map.qubo.n() {
            let a = Assignment::from_mask(m, map.qubo.n());
            if map.constraint_penalty(&a) == big(0) {
                prop_assert!(ilp.is_feasible(&map.decode_x(&a)));
            }
        }
    }

    #[test]
    fn ilp_slack_width_bound(ilp in arb_ilp()) {
        let map = reduce_ilp_to_qubo(&ilp).unwrap();
        let max_b = ilp.b().iter().max().unwrap().clone();
        let min_a = ilp.a().iter().flatten().min().unwrap().clone();
        let n_min_a = BigInt::from(ilp.n()) * min_a.magnitude_signed();
        prop_assert!(map.k as u64 <= bits_needed(&max_b) + bits_needed(&n_min_a) + 2);
    }

    #[test]
    fn clique_reduction_on_random_graphs(g in arb_graph(9)) {
        check_clique_reduction(&g);
    }

    #[test]
    fn rational_scaling_preserves_minimizers(
        (n, raw) in (1usize..=8).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
            let len = pairs.len();
            (Just(n), proptest::collection::vec((proptest::bool::weighted(0.5), -12i64..=12, 1i64..=6), len)
                .prop_map(move |v| pairs.iter().zip(v).filter(|(_, e)| e.0).map(|(&(i, j), (_, p, q))| (i, j, p, q)).collect::<Vec<_>>()))
        })
    ) {
        let rq = RationalQubo::new(n, raw.iter().map(|&(i, j, p, q)| (i, j, BigInt::from(p), BigInt::from(q)))).unwrap();
        let (int_q, scale) = normalize_rational(&rq).unwrap();

        let rational_value = |mask: u64| -> BigRational {
            raw.iter()
                .filter(|(i, j, _, _)| mask >> (i - 1) & 1 == 1 && mask >> (j - 1) & 1 == 1)
                .map(|&(_, _, p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .sum()
        };
        let values: Vec<BigRational> = (0..1u64 << n).map(rational_value).collect();
        let rmin = values.iter().min().unwrap().clone();
        let rargmin: Vec<u64> = (0..1u64 << n).filter(|&m| values[m as usize] == rmin).collect();

        let (imin, iargmin) = brute_minimizers(&int_q);
        prop_assert_eq!(BigRational::new(imin, scale.clone()), rmin);
        prop_assert_eq!(iargmin, rargmin.clone());

        // Scaling by the full product of denominators gives the same minimizers.
        let product: BigInt = raw.iter().map(|&(_, _, _, q)| BigInt::from(q)).product();
        prop_assert!((&product % &scale) == big(0));
        let by_product = qubo_core::QuboInstance::from_entries(
            n,
            raw.iter().map(|&(i, j, p, q)| (i, j, BigInt::from(p) * (&product / BigInt::from(q)))),
        ).unwrap();
        prop_assert_eq!(brute_minimizers(&by_product).1, rargmin);
    }
}

#[test]
fn clique_reduction_on_all_five_vertex_graphs() {
    let pairs: Vec<(usize, usize)> = (1..=5).flat_map(|u| (u + 1..=5).map(move |v| (u, v))).collect();
    assert_eq!(pairs.len(), 10);
    for mask in 0u32..1 << 10 {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        check_clique_reduction(&Graph::new(5, edges).unwrap());
    }
}

#[test]
fn worked_ilp_examples_through_the_solver() {
    for (a, b, c, optimum, qb_min) in [
        (vec![1i64, 1], 1i64, vec![1i64, 1], 1i64, -1i64),
        (vec![1], 1, vec![0], 0, 0),
        (vec![2, 3], 4, vec![5, 1], 5, -5),
    ] {
        let ilp = IlpInstance::from_i64(&[&a], &[b], &c).unwrap();
        let map = reduce_ilp_to_qubo(&ilp).unwrap();
        let report = solve_qubo(&map.qubo, &mut OracleHandle::new(map.qubo.clone())).unwrap();
        assert_eq!(interpret_ilp_result(&map, &report), big(optimum));
        assert_eq!(&report.min_value + &map.constant, big(qb_min));
        assert_eq!(brute_min(&map.qubo), report.min_value);
    }
}

trait MagnitudeSigned {
    fn magnitude_signed(&self) -> BigInt;
}

impl MagnitudeSigned for BigInt {
    fn magnitude_signed(&self) -> BigInt {
        if *self < big(0) { -self } else { self.clone() }
    }
}
