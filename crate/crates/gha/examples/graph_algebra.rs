//! The algebra map f_k: gluing turns into pointwise products, both inner
//! products agree, the trace operators commute with f_k, and the image has
//! an idempotent basis of class indicators.
//!
//!     cargo run --example graph_algebra

use gha::{
    algebra_product, corpus, enumerate_k_labeled, f_k, format_rational, idempotent_basis,
    inner_product_a, inner_product_g, trace_a, AlgebraVector, CatalogBounds, QuantumGraph,
};

fn main() {
    let g = corpus::paw();
    let k = 2;
    let catalog = enumerate_k_labeled(k, CatalogBounds::new(3, 2, 1)).unwrap();

    let f1 = &catalog.graphs()[2];
    let f2 = &catalog.graphs()[4];
    println!("f1 = {f1}, f2 = {f2}");

    // Gluing on the graph side is the pointwise product on the map side.
    let glued = f_k(&f1.glue(f2), &g);
    let pointwise = algebra_product(&f_k(f1, &g), &f_k(f2, &g));
    println!("f_k(f1 f2) == f_k(f1) * f_k(f2): {}", glued == pointwise);

    // Both inner products give the same value, exactly.
    let lhs = inner_product_g(
        &QuantumGraph::from_graph(f1),
        &QuantumGraph::from_graph(f2),
        &g,
    );
    let rhs = inner_product_a(&f_k(f1, &g), &f_k(f2, &g), &g);
    println!(
        "<f1, f2> via hom = {}, via map space = {}",
        format_rational(&lhs),
        format_rational(&rhs)
    );

    // The trace operators commute with f_k.
    let commutes = trace_a(&f_k(f1, &g), &g) == f_k(&f1.trace_graph(), &g);
    println!("trace . f_k == f_(k-1) . trace: {commutes}");

    // Idempotent basis: indicators of the map-equivalence classes.
    let ws = idempotent_basis(k, &g, &enumerate_k_labeled(k, CatalogBounds::new(4, 4, 2)).unwrap());
    println!("idempotents: {} classes over {} maps", ws.len(), ws[0].len());
    let mut sum = ws[0].zero_like();
    let mut ok = true;
    for (i, w) in ws.iter().enumerate() {
        ok &= algebra_product(w, w) == *w;
        for w2 in ws.iter().skip(i + 1) {
            ok &= algebra_product(w, w2) == w.zero_like();
        }
        sum = sum.add(w);
    }
    ok &= sum == AlgebraVector::unit(g.m(), k);
    println!("w_i w_j == delta_ij w_i and sum w_i == unit: {ok}");
}
