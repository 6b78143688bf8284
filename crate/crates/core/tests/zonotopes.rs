use std::collections::BTreeSet;
use std::time::Instant;

use isozono::catalog::{builtin_graph, d4_original_zonotope};
use isozono::geometry::FVector;
use isozono::graph::PLGraph;
use isozono::zonotope::Zonotope;

fn zonotope(name: &str) -> Zonotope {
    let spec = builtin_graph(name).unwrap();
    Zonotope::from_graph(&PLGraph::new(spec.dim, &spec.generators).unwrap())
}

fn signed_permutations(base: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let n = base.len();
    let mut idx: Vec<usize> = (0..n).collect();
    permute(&mut idx, 0, &mut |perm| {
        for mask in 0..(1u32 << n) {
            let v: Vec<i64> = perm
                .iter()
                .enumerate()
                .map(|(i, &p)| if mask >> i & 1 == 1 { -base[p] } else { base[p] })
                .collect();
            out.insert(v);
        }
    });
    out
}

fn permute(idx: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == idx.len() {
        f(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, f);
        idx.swap(k, i);
    }
}

#[test]
fn linf_f_vectors() {
    assert_eq!(zonotope("linf:2").f_vector(), FVector(vec![8, 8]));
    assert_eq!(zonotope("linf:3").f_vector(), FVector(vec![96, 144, 50]));
}

#[test]
fn linf4_f_vector() {
    let start = Instant::now();
    let f = zonotope("linf:4").f_vector();
    eprintln!("linf:4 f-vector in {:?}", start.elapsed());
    assert_eq!(f, FVector(vec![5376, 11328, 7312, 1360]));
    assert!(f.satisfies_euler());
}

#[test]
fn truncated_24_cell() {
    let z = d4_original_zonotope().unwrap();
    assert_eq!(z.generators().len(), 12);
    let verts: BTreeSet<Vec<i64>> = z.vertices().into_iter().collect();
    assert_eq!(verts.len(), 192);
    assert_eq!(verts, signed_permutations(&[0, 2, 4, 6]));
    assert_eq!(z.f_vector(), FVector(vec![192, 384, 240, 48]));
    let normals = z.facet_normals();
    assert_eq!(normals.len(), 48);
    let chart = zonotope("d4cross");
    assert_eq!(chart.f_vector(), z.f_vector());
}
