use aqf_core::hyperfield::find_isomorphism;
use aqf_core::igr::{algebra_a, gamma, hyperbolic_quotient_q, spectral_report};
use aqf_core::ktheory::compute_k;
use aqf_core::pool;
use aqf_core::sgroup::{enumerate_orderings, reality_report};
use aqf_core::witt::{conjecture_suite, graded_witt, ConjectureParams, WittContext};

#[test]
#[ignore]
fn probe() {
    for m in pool::zoo() {
        let ax = m.check_multiring_axioms();
        let quad = m.check_quadratic_axioms();
        match quad {
            Ok(q) => println!(
                "{:<4} multiring={} multifield={} hyperbolic={} pre={} special={}",
                m.name(),
                ax.is_multiring,
                ax.multifield,
                q.hyperbolic.ok,
                q.pre_special,
                q.special
            ),
            Err(_) => println!(
                "{:<4} multiring={} multifield={} (quadratic skipped)",
                m.name(),
                ax.is_multiring,
                ax.multifield
            ),
        }
    }
    println!("--- f7/sq quad: {:?}", pool::f7_mod_squares().check_quadratic_axioms().map(|q| (q.pre_special, q.special)));
    println!("--- q2xq2 quad: {:?}", pool::q2xq2().check_quadratic_axioms().map(|q| (q.pre_special, q.special)));
    let kp = compute_k(&pool::q2xq2(), 4, None).unwrap();
    println!("--- k(q2xq2) dims {:?}", kp.dims());
    let kf = compute_k(&pool::f7_mod_squares(), 4, None).unwrap();
    println!("--- k(f7/sq) dims {:?}", kf.dims());
    let g = gamma(kf.igr()).unwrap();
    println!(
        "--- gamma(k(f7/sq)) iso to f7/sq: {}",
        find_isomorphism(&g, &pool::f7_mod_squares()).is_some()
    );
    let psg = pool::product_sg();
    println!(
        "--- product_sg orderings: {} reality {:?}",
        enumerate_orderings(&psg).len(),
        reality_report(&psg)
    );
    for r in pool::igr_pool(3) {
        let q = hyperbolic_quotient_q(&r).unwrap();
        print!(
            "igr {:<22} dims {:?} igr1={} igrh={} plus={} can={}",
            r.name(),
            r.dims(),
            q.in_igr1,
            q.in_igr_h,
            q.in_igr_plus,
            q.can_iso
        );
        match algebra_a(&r) {
            Ok(a) => print!(
                " | A dim {} boolean {} degen {}",
                a.algebra.dim(),
                a.algebra.is_boolean(),
                a.degenerate
            ),
            Err(e) => print!(" | A err {e}"),
        }
        match spectral_report(&r) {
            Ok(s) => println!(" | orderings {} mc {}", s.hull_dim, s.mc),
            Err(e) => println!(" | spectral err {e}"),
        }
    }
    // Product group conjecture suite at bound 6.
    let ctx = WittContext::new(&psg, 6).unwrap();
    let gw = graded_witt(&ctx, 4, None);
    println!("--- graded witt product group: {:?}", gw.map(|g| g.dims()));
    let rep = conjecture_suite(
        &ctx,
        ConjectureParams {
            truncation: 4,
            bound: 6,
            dim_cap: 6,
            ap_max: 2,
            torsion_bound: 8,
        },
    );
    match rep {
        Ok(r) => println!(
            "--- product suite: reduced={} mc={:?} smc={} ap={} lg={} graded_inj={:?} agree={:?}",
            r.reduced,
            r.mc.as_ref().map(|v| v.ok),
            r.smc.all_injective,
            r.ap.ok,
            r.local_global.ok,
            r.graded_transitions_injective,
            r.mc_encoding_agrees
        ),
        Err(e) => println!("--- product suite err: {e}"),
    }
}
