#[test]
fn dbg_sigma() {
    let flux = bhlab_core::calculus::ConvexFlux::quartic(8.0);
    let r = bhlab_core::calculus::sigma_c1_check(&flux, 1.0, &[1e-2, 1e-3, 1e-4, 1e-5]).unwrap();
    for e in &r.estimates {
        println!("h={:e} fwd={:.12} cen={:.12} skew={:.12} target={}", e.step, e.forward, e.centered, e.skew, r.target);
    }
    println!("orders {:?}", r.observed_orders);
}
