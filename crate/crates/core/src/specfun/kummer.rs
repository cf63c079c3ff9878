//! Kummer's confluent hypergeometric series M(a, b, z).

/// Neumaier (improved Kahan) running sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Series value together with the sum of absolute term magnitudes, which
/// bounds the rounding error at roughly `eps * abs_sum`.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: f64,
    pub abs_sum: f64,
    pub last_term: f64,
}

/// M(a, b, z) = sum_k (a)_k z^k / ((b)_k k!), summed until terms drop below
/// 1e-17 of the running magnitude.
pub fn kummer_m(a: f64, b: f64, z: f64) -> SeriesValue {
    let mut sum = CompensatedSum::default();
    let mut term = 1.0;
    let mut abs_sum = 0.0;
    let mut k = 0usize;
    loop {
        sum.add(term);
        abs_sum += term.abs();
        if term == 0.0 || (k > 2 && term.abs() < 1e-17 * abs_sum) || k > 5000 {
            break;
        }
        let kf = k as f64;
        term *= (a + kf) * z / ((b + kf) * (kf + 1.0));
        k += 1;
    }
    SeriesValue { value: sum.value(), abs_sum, last_term: term.abs() }
}
