//! Double-double arithmetic for polynomial evaluations whose terms cancel.

use num_complex::Complex64;

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub(crate) const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub(crate) fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    pub(crate) fn product(a: f64, b: f64) -> Self {
        let p = a * b;
        Dd {
            hi: p,
            lo: a.mul_add(b, -p),
        }
    }

    fn from_parts(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub(crate) fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let (t, f) = two_sum(self.lo, other.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Dd::from_parts(s, e + f)
    }

    pub(crate) fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub(crate) fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub(crate) fn mul(self, other: Dd) -> Dd {
        let p = Dd::product(self.hi, other.hi);
        Dd::from_parts(p.hi, p.lo + (self.hi * other.lo + self.lo * other.hi))
    }

    pub(crate) fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let r = self.sub(Dd::product(q1, d));
        let q2 = r.hi / d;
        let r = r.sub(Dd::product(q2, d));
        let q3 = r.hi / d;
        Dd::from_parts(q1, q2).add(Dd::new(q3))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DdComplex {
    pub(crate) re: Dd,
    pub(crate) im: Dd,
}

impl DdComplex {
    pub(crate) const ZERO: DdComplex = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    pub(crate) fn new(z: Complex64) -> Self {
        DdComplex {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }

    pub(crate) fn real(x: Dd) -> Self {
        DdComplex { re: x, im: Dd::ZERO }
    }

    /// Exact product of a complex double and a real double.
    pub(crate) fn scaled_exact(z: Complex64, x: f64) -> Self {
        DdComplex {
            re: Dd::product(z.re, x),
            im: Dd::product(z.im, x),
        }
    }

    pub(crate) fn value(self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    pub(crate) fn add(self, o: DdComplex) -> Self {
        DdComplex {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub(crate) fn sub(self, o: DdComplex) -> Self {
        DdComplex {
            re: self.re.sub(o.re),
            im: self.im.sub(o.im),
        }
    }

    pub(crate) fn neg(self) -> Self {
        DdComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub(crate) fn mul(self, o: DdComplex) -> Self {
        DdComplex {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub(crate) fn scale(self, x: Dd) -> Self {
        DdComplex {
            re: self.re.mul(x),
            im: self.im.mul(x),
        }
    }

    pub(crate) fn div_f64(self, d: f64) -> Self {
        DdComplex {
            re: self.re.div_f64(d),
            im: self.im.div_f64(d),
        }
    }
}
