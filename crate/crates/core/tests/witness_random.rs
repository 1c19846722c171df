use std::collections::BTreeMap;

use mustpath_core::oracle::{random_graph, CycleCatalog, GraphClass};
use mustpath_core::query::Engine;
use mustpath_core::witness::{tri_cycle_three_edges, TriCase};
use mustpath_core::{EdgeId, ElementRef};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn three_edge_machine_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    for seed in 0..1500u64 {
        let n = 5 + (seed as usize % 6);
        let m = (3 * n) / 2 + (seed as usize % n);
        let g = random_graph(seed, GraphClass::Triconnected, n, m).unwrap();
        let catalog = CycleCatalog::new(&g).unwrap();
        let edges: Vec<EdgeId> = g.edges().map(|(e, _, _)| e).collect();
        for _ in 0..15 {
            let es: Vec<EdgeId> = edges.choose_multiple(&mut rng, 3).copied().collect();
            let got = tri_cycle_three_edges(&g, es[0], es[1], es[2])
                .unwrap_or_else(|err| panic!("seed {seed} {es:?}: {err}\n{}", g.to_edge_list()));
            let want = catalog.contains_all(&es.iter().map(|&e| ElementRef::Edge(e)).collect::<Vec<_>>());
            assert_eq!(got.is_some(), want, "seed {seed} {es:?}");
            if let Some(tc) = got {
                tc.cycle.validate(&g).unwrap();
                *cases.entry(format!("{:?}", tc.case)).or_default() += 1;
            }
        }
    }
    eprintln!("{cases:?}");
    for c in [TriCase::Triangle, TriCase::Chain, TriCase::SharedPair, TriCase::MainCase1, TriCase::MainCase2] {
        assert!(cases.contains_key(&format!("{c:?}")), "{c:?} never exercised");
    }
}

#[test]
fn witness_matches_decision() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for seed in 0..400u64 {
        let class = [GraphClass::Connected, GraphClass::Biconnected, GraphClass::Triconnected][seed as usize % 3];
        let n = 4 + (seed as usize % 6);
        let g = random_graph(seed, class, n, n + (seed as usize % (n + 3))).unwrap();
        let catalog = CycleCatalog::new(&g).unwrap();
        let engine = Engine::new(g.clone()).unwrap();
        let mut pool: Vec<ElementRef> = g.vertices().map(ElementRef::Vertex).collect();
        pool.extend(g.edges().map(|(e, _, _)| ElementRef::Edge(e)));
        for _ in 0..20 {
            let xs: Vec<ElementRef> = pool.choose_multiple(&mut rng, 3).copied().collect();
            let w = engine
                .construct_cycle(xs[0], xs[1], xs[2])
                .unwrap_or_else(|err| panic!("seed {seed} {xs:?}: {err}\n{}", g.to_edge_list()));
            assert_eq!(w.is_some(), catalog.contains_all(&xs), "seed {seed} {xs:?}");
            if let Some(w) = w {
                w.cycle.validate(&g).unwrap();
                assert!(xs.iter().all(|&x| w.cycle.contains(x)));
            }
        }
    }
}

#[test]
fn disjoint_triples_in_sparse_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    for seed in 0..2500u64 {
        let n = 8 + (seed as usize % 5);
        let g = random_graph(10_000 + seed, GraphClass::Triconnected, n, 3 * n / 2).unwrap();
        let catalog = CycleCatalog::new(&g).unwrap();
        let edges: Vec<(EdgeId, u32, u32)> = g.edges().map(|(e, a, b)| (e, a.0, b.0)).collect();
        for _ in 0..30 {
            let pick: Vec<(EdgeId, u32, u32)> = edges.choose_multiple(&mut rng, 3).copied().collect();
            let mut ends: Vec<u32> = pick.iter().flat_map(|&(_, a, b)| [a, b]).collect();
            ends.sort();
            ends.dedup();
            if ends.len() < 6 {
                continue;
            }
            let es: Vec<EdgeId> = pick.iter().map(|p| p.0).collect();
            let got = tri_cycle_three_edges(&g, es[0], es[1], es[2])
                .unwrap_or_else(|err| panic!("seed {seed} {es:?}: {err}\n{}", g.to_edge_list()));
            let want = catalog.contains_all(&es.iter().map(|&e| ElementRef::Edge(e)).collect::<Vec<_>>());
            assert_eq!(got.is_some(), want, "seed {seed} {es:?}");
            if let Some(tc) = got {
                *cases.entry(format!("{:?}", tc.case)).or_default() += 1;
            }
        }
    }
    eprintln!("{cases:?}");
}

#[test]
fn path_splice_on_planted_instances() {
    use mustpath_core::witness::path_splice;
    use mustpath_core::{Cycle, Graph, Path, VertexId};
    use rand::Rng;

    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut done = 0;
    while done < 500 {
        let k: u32 = rng.gen_range(4..9);
        let i = rng.gen_range(0..k);
        let j = (i + rng.gen_range(2..k - 1)) % k;
        // Arc from the e1 end at i+1 forward to the e2 end at j.
        let arc: Vec<u32> = (0..k).map(|d| (i + 1 + d) % k).take_while(|&x| x != (j + 1) % k).collect();
        if arc.len() < 2 {
            continue;
        }
        let f: Vec<u32> = arc.choose_multiple(&mut rng, 2).copied().collect();
        let (s, t) = (k, k + 1);
        let (l1, l2) = (rng.gen_range(0..3u32), rng.gen_range(0..3u32));
        let mut edges: Vec<(u32, u32)> = (0..k).map(|x| (x, (x + 1) % k)).collect();
        let mut next = k + 2;
        let mut chain = |from: u32, to: u32, len: u32, edges: &mut Vec<(u32, u32)>| {
            let mut vs = vec![from];
            for _ in 0..len {
                vs.push(next);
                next += 1;
            }
            vs.push(to);
            for w in vs.windows(2) {
                edges.push((w[0], w[1]));
            }
            vs
        };
        let p1 = chain(s, f[0], l1, &mut edges);
        let p2 = chain(t, f[1], l2, &mut edges);
        let n = next as usize;
        for _ in 0..rng.gen_range(0..6) {
            let (x, y) = (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32));
            if x != y && !edges.iter().any(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x)) {
                edges.push((x, y));
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let cyc: Vec<VertexId> = (0..k).map(VertexId).collect();
        let cycle = Cycle::from_vertices(&g, &cyc).unwrap();
        let e1 = g.edge_between(VertexId(i), VertexId((i + 1) % k)).unwrap();
        let e2 = g.edge_between(VertexId(j), VertexId((j + 1) % k)).unwrap();
        let to_vs = |p: &[u32]| p.iter().map(|&x| VertexId(x)).collect::<Vec<_>>();
        let p1 = Path::from_vertices(&g, &to_vs(&p1)).unwrap();
        let p2 = Path::from_vertices(&g, &to_vs(&p2)).unwrap();
        let out = path_splice(&g, &cycle, e1, e2, &p1, &p2).unwrap();
        out.validate(&g).unwrap();
        assert_eq!((out.first(), out.last()), (VertexId(s), VertexId(t)));
        assert!(out.contains(ElementRef::Edge(e1)) && out.contains(ElementRef::Edge(e2)));
        done += 1;
    }
}
