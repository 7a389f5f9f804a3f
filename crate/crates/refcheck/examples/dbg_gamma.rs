use hspinor_core::extended::{gamma_cdd, Cdd, Dd};

fn spouge(a_int: usize, z0: Cdd) -> Cdd {
    if z0.re.hi < 0.5 {
        let pi = Cdd::new(Dd::PI, Dd::ZERO);
        let s = pi.mul(z0).sin();
        return pi.div(s.mul(spouge(a_int, Cdd::ONE.sub(z0))));
    }
    // downward recursion into Re in (2.5, 3.5]
    let mut z = z0;
    let mut prod = Cdd::ONE;
    while z.re.hi > 3.5 {
        z = z.sub(Cdd::ONE);
        prod = prod.mul(z);
    }
    let w = z.sub(Cdd::ONE);
    let a = Dd::from_f64(a_int as f64);
    let wa = w.add(Cdd::new(a, Dd::ZERO));
    let half = Dd::from_ratio(1.0, 2.0);
    let pre = wa.powc(w.add(Cdd::new(half, Dd::ZERO))).mul(wa.neg().exp());
    let mut sum = Cdd::new(Dd::TWO_PI.sqrt(), Dd::ZERO);
    let mut factorial = Dd::ONE;
    for k in 1..a_int {
        if k > 1 {
            factorial = factorial.mul_f64((k - 1) as f64);
        }
        let amk = Dd::from_f64((a_int - k) as f64);
        let pow = amk.ln().mul(Dd::from_f64(k as f64 - 0.5)).exp();
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let ck = pow.mul(amk.exp()).div(factorial).mul_f64(sign);
        sum = sum.add(Cdd::new(ck, Dd::ZERO).div(w.add(Cdd::from_f64(k as f64, 0.0))));
    }
    prod.mul(pre.mul(sum))
}

fn main() {
    for &a in &[21usize, 25, 29, 33] {
        let mut worst = 0.0f64;
        let mut worst_at = (0.0, 0.0);
        let mut re: f64 = -6.0;
        while re <= 20.0 {
            let mut im: f64 = -20.0;
            while im <= 20.0 {
                // skip near-pole neighborhoods on the real axis
                if !(im.abs() < 0.3 && re < 0.6 && (re - re.round()).abs() < 0.25) {
                    let z = Cdd::from_f64(re, im);
                    let s = spouge(a, z);
                    let g = gamma_cdd(z);
                    let rel = s.sub(g).abs().to_f64() / g.abs().to_f64().max(1e-300);
                    if rel > worst {
                        worst = rel;
                        worst_at = (re, im);
                    }
                }
                im += 1.6180339887; // irrational step avoids lattice artifacts
            }
            re += 0.7320508075688772;
        }
        println!("a = {a}: worst rel diff vs Stirling = {:.3e} at {:?}", worst, worst_at);
    }
}
