use cuspcalc_core::algebra::{parse_poly_auto, MonomialOrder, Rat};
use cuspcalc_core::germ::{classify_germ, Germ};
use cuspcalc_core::standard_basis::{mora, quotient_dimension, Ideal};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_default();
    match which.as_str() {
        "tjurina" => {
            let (p, _) = parse_poly_auto::<Rat>("V*(X^2 + Y^2) - Y*(U^2 + V^2)").unwrap();
            let mut gens = p.gradient();
            gens.push(p.clone());
            let i = Ideal::new(gens).unwrap();
            eprintln!("building tjurina basis...");
            let b = mora(&i, &MonomialOrder::negdegrevlex()).unwrap();
            eprintln!("done, size {}", b.elements.len());
        }
        "classify-other" => {
            let (p, _) = parse_poly_auto::<Rat>("V*(X^2 + Y^2) - Y*(U^2 + V^2)").unwrap();
            let r = classify_germ(&Germ::new(p).unwrap()).unwrap();
            eprintln!("class {:?} mu {:?}", r.class, r.milnor);
        }
        "classify-cusp" => {
            let (p, _) = parse_poly_auto::<Rat>("X^2 - U^2 - Y^3 + V^3").unwrap();
            let r = classify_germ(&Germ::new(p).unwrap()).unwrap();
            eprintln!("class {:?} mu {:?}", r.class, r.milnor);
        }
        "qdim" => {
            let (p, _) = parse_poly_auto::<Rat>("V*(X^2 + Y^2) - Y*(U^2 + V^2)").unwrap();
            let j = Ideal::jacobian(&p).unwrap();
            eprintln!("{:?}", quotient_dimension(&j, &MonomialOrder::negdegrevlex()).unwrap());
        }
        "bigt1" => {
            use cuspcalc_core::algebra::{parse_poly, Ring, Polynomial};
            use cuspcalc_core::germ::fiber_product_germ;
            let ring = Ring::new(&["X", "Y", "U", "V", "t"]);
            let f: Polynomial<Rat> = parse_poly("X^2 - Y^3 + Y^2 + t*(X^3 + Y^3 + 1)", &ring).unwrap();
            let g = parse_poly("U^2 - V^3 + V^2 + t*(U^3 + V^3 + 1)", &ring).unwrap();
            let germ = fiber_product_germ(&f, &g, "t").unwrap();
            eprintln!("germ terms: {}", germ.poly().n_terms());
            let start = std::time::Instant::now();
            let b = cuspcalc_core::germ::t1_basis(&germ);
            eprintln!("t1 in {:?}: {:?}", start.elapsed(), b.map(|q| q.dimension));
        }
        "wcusp" => {
            use cuspcalc_core::fibration::*;
            use cuspcalc_core::algebra::{UPoly, Cyclotomic};
            use cuspcalc_core::germ::{fiber_product_germ, classify_germ};
            let f = WeierstrassFibration::new(UPoly::from_ints(&[0,1,1]), UPoly::from_ints(&[0,1])).unwrap();
            let (f1, f2) = weierstrass_local_equations(&f, &Cyclotomic::zero(), &Cyclotomic::zero());
            eprintln!("f1 = {f1}");
            eprintln!("f2 = {f2}");
            let germ = fiber_product_germ(&f1, &f2, "t").unwrap();
            eprintln!("germ ({} terms) lowest: {}", germ.poly().n_terms(), germ.poly().lowest_part());
            let rep = classify_germ(&germ).unwrap();
            eprintln!("class {:?} mu {:?} tau {:?} corank {}", rep.class, rep.milnor, rep.tyurina, rep.corank);
        }
        "lambda1" => {
            use cuspcalc_core::versal::*;
            use cuspcalc_core::algebra::Cyclotomic;
            let locus = three_node_locus();
            for sol in &locus.solutions {
                let base = sol.at(&Cyclotomic::from_int(3));
                let rep = deformed_fiber_singularities(&base).unwrap();
                eprint!("{}: {} point(s):", sol.name, rep.points.len());
                for p in &rep.points {
                    if let Some(r) = &p.report {
                        eprint!(" [class {:?} mu {:?} tau {:?} corank {}]", r.class, r.milnor, r.tyurina, r.corank);
                    } else {
                        eprint!(" [numeric {:?}]", p.class);
                    }
                }
                eprintln!();
            }
        }
        "nonnodo-classify" => {
            use cuspcalc_core::algebra::{parse_poly, Ring, Polynomial, rat_int};
            let ring = Ring::new(&["X", "Y", "U", "V"]);
            let a = |x: &str, y: &str| format!("{x}^2 - {y}^3 - {y}^2");
            let b = |x: &str, y: &str| format!("{x}^3 + {y}^3 + 1");
            let r_src = format!("({})*({}) - ({})*({})", a("X","Y"), b("U","V"), b("X","Y"), a("U","V"));
            let r: Polynomial<Rat> = parse_poly(&r_src, &ring).unwrap();
            let pt = vec![rat_int(0), rat_int(-1), rat_int(0), rat_int(-1)];
            let g = r.translate(&pt).unwrap();
            let start = std::time::Instant::now();
            let rep = classify_germ(&Germ::new(g).unwrap()).unwrap();
            eprintln!("class {:?} mu {:?} tau {:?} corank {} in {:?}", rep.class, rep.milnor, rep.tyurina, rep.corank, start.elapsed());
        }
        "nonnodo" => {
            use cuspcalc_core::algebra::{parse_poly, Ring, Polynomial, rat_int};
            let ring = Ring::new(&["X", "Y", "U", "V"]);
            let a = |x: &str, y: &str| format!("{x}^2 - {y}^3 - {y}^2");
            let b = |x: &str, y: &str| format!("{x}^3 + {y}^3 + 1");
            let r_src = format!("({})*({}) - ({})*({})", a("X","Y"), b("U","V"), b("X","Y"), a("U","V"));
            let r: Polynomial<Rat> = parse_poly(&r_src, &ring).unwrap();
            let pt = vec![rat_int(0), rat_int(-1), rat_int(0), rat_int(-1)];
            let g = r.translate(&pt).unwrap();
            eprintln!("germ terms: {}, lowest part: {}", g.n_terms(), g.lowest_part());
            let start = std::time::Instant::now();
            let j = Ideal::jacobian(&g).unwrap();
            let d = quotient_dimension(&j, &MonomialOrder::negdegrevlex());
            eprintln!("mu in {:?}: {:?}", start.elapsed(), d);
        }
        "nonnodo-trunc" => {
            use cuspcalc_core::algebra::{parse_poly, Ring, Polynomial, rat_int};
            use cuspcalc_core::standard_basis::truncated_quotient_dimension;
            let ring = Ring::new(&["X", "Y", "U", "V"]);
            let a = |x: &str, y: &str| format!("{x}^2 - {y}^3 - {y}^2");
            let b = |x: &str, y: &str| format!("{x}^3 + {y}^3 + 1");
            let r_src = format!("({})*({}) - ({})*({})", a("X","Y"), b("U","V"), b("X","Y"), a("U","V"));
            let r: Polynomial<Rat> = parse_poly(&r_src, &ring).unwrap();
            let pt = vec![rat_int(0), rat_int(-1), rat_int(0), rat_int(-1)];
            let g = r.translate(&pt).unwrap();
            let j = Ideal::jacobian(&g).unwrap();
            for k in 2..=9 {
                let start = std::time::Instant::now();
                let d = truncated_quotient_dimension(&j, k).unwrap();
                eprintln!("k={k}: dim {d} in {:?}", start.elapsed());
            }
        }
        _ => eprintln!("usage: tjurina | classify-other | classify-cusp | qdim"),
    }
}
