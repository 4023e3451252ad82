use hessdd::gkm::{combine, expand_in_basis_ordered};
use hessdd::{build_family, expand_in_basis, FlowUpFamily, Polynomial, RootSystem, WeylGroup};

fn a2() -> (WeylGroup, FlowUpFamily) {
    let g = WeylGroup::new(RootSystem::new("A2".parse().unwrap()).unwrap());
    let fam = build_family(&g).unwrap();
    (g, fam)
}

fn a(s: &str) -> Polynomial {
    Polynomial::parse(s, 2, 'a').unwrap()
}

#[test]
fn square_of_s1() {
    let (g, fam) = a2();
    let p = fam.class(g.simple(0));
    let square = p.mul(p);
    let coeffs = expand_in_basis(&g, fam.hessenberg(), &square, fam.classes()).unwrap();
    for (x, f) in coeffs.iter().enumerate() {
        let want = match g.name(x).as_str() {
            "1" => a("a1"),
            "1.2" => a("a2"),
            "1.2.1" => a("-1"),
            _ => a("0"),
        };
        assert_eq!(f, &want, "coefficient at {}", g.name(x));
    }
    assert_eq!(combine(&g, &coeffs, fam.classes()), square);
}

#[test]
fn disjoint_product_vanishes() {
    let (g, fam) = a2();
    let prod = fam.class(g.simple(0)).mul(fam.class(g.simple(1)));
    let coeffs = expand_in_basis(&g, fam.hessenberg(), &prod, fam.classes()).unwrap();
    assert!(coeffs.iter().all(Polynomial::is_zero));
}

/// Any order compatible with flow-up gives the same coefficients.
#[test]
fn order_independent() {
    let (g, fam) = a2();
    let h = fam.hessenberg();
    let graph = g.hessenberg_graph(h);
    let p = fam.class(g.simple(0));
    let target = p.mul(p).add(&fam.class(g.simple(1)).scale(&a("a1+a2")));
    let canonical = expand_in_basis(&g, h, &target, fam.classes()).unwrap();
    let mut extensions = 0;
    let mut order: Vec<usize> = (0..g.order()).collect();
    permutations(&mut order, 0, &mut |o: &[usize]| {
        let compatible = (0..o.len())
            .all(|i| (i + 1..o.len()).all(|j| o[i] == o[j] || !graph.flow_up_leq(o[j], o[i])));
        if compatible {
            extensions += 1;
            let got = expand_in_basis_ordered(&g, h, &target, fam.classes(), o).unwrap();
            assert_eq!(got, canonical, "order {o:?}");
        }
    });
    assert!(extensions > 1);
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}
