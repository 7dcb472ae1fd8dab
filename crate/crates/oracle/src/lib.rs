//! Multiprecision reference values for the test suites.
//!
//! Everything here is computed with `astro-float` at [`DEFAULT_BITS`] bits,
//! written directly from the closed forms and independent of the interval
//! code under test.

use astro_float::{BigFloat, Consts, RoundingMode};
use hypvol_core::Interval;

pub const DEFAULT_BITS: usize = 192;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unary {
    Sqr,
    Recip,
    Sqrt,
    Exp,
    Ln,
    Cosh,
    Sinh,
    Tanh,
    Acosh,
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Binary {
    Add,
    Sub,
    Mul,
    Div,
}

pub struct Oracle {
    p: usize,
    cc: Consts,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_BITS)
    }
}

impl Oracle {
    pub fn new(bits: usize) -> Self {
        assert!(bits >= 100);
        Oracle {
            p: bits,
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn bits(&self) -> usize {
        self.p
    }

    /// Exact conversion.
    pub fn num(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p.max(64))
    }

    pub fn unary(&mut self, op: Unary, x: f64) -> BigFloat {
        let a = self.num(x);
        self.apply1(op, &a)
    }

    pub fn apply1(&mut self, op: Unary, a: &BigFloat) -> BigFloat {
        let p = self.p;
        let cc = &mut self.cc;
        match op {
            Unary::Sqr => a.mul(a, p, RM),
            Unary::Recip => BigFloat::from_f64(1.0, p).div(a, p, RM),
            Unary::Sqrt => a.sqrt(p, RM),
            Unary::Exp => a.exp(p, RM, cc),
            Unary::Ln => a.ln(p, RM, cc),
            Unary::Cosh => a.cosh(p, RM, cc),
            Unary::Sinh => a.sinh(p, RM, cc),
            Unary::Tanh => a.tanh(p, RM, cc),
            Unary::Acosh => a.acosh(p, RM, cc),
            Unary::Cos => a.cos(p, RM, cc),
        }
    }

    pub fn binary(&mut self, op: Binary, x: f64, y: f64) -> BigFloat {
        let (a, b) = (self.num(x), self.num(y));
        let p = self.p;
        match op {
            Binary::Add => a.add(&b, p, RM),
            Binary::Sub => a.sub(&b, p, RM),
            Binary::Mul => a.mul(&b, p, RM),
            Binary::Div => a.div(&b, p, RM),
        }
    }

    /// Whether `iv` contains `y`, allowing for the oracle's own rounding
    /// error (a few units at `bits - 8`).
    pub fn contains(&self, iv: Interval, y: &BigFloat) -> bool {
        assert!(!y.is_nan(), "oracle produced NaN");
        let tol = y.abs().mul(
            &BigFloat::from_f64(2f64.powi(8 - self.p as i32), 64),
            self.p,
            RM,
        );
        let lo = self.num(iv.lo()).sub(&tol, self.p, RM);
        let hi = self.num(iv.hi()).add(&tol, self.p, RM);
        matches!(lo.cmp(y), Some(c) if c <= 0) && matches!(y.cmp(&hi), Some(c) if c <= 0)
    }

    pub fn to_f64(&mut self, y: &BigFloat) -> f64 {
        let s = y
            .format(astro_float::Radix::Dec, RM, &mut self.cc)
            .expect("formatting");
        s.parse().unwrap_or_else(|_| panic!("cannot parse {s:?}"))
    }

    fn c(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }
    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }
    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }
    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }
    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.p, RM)
    }
    fn acosh(&mut self, a: &BigFloat) -> BigFloat {
        a.acosh(self.p, RM, &mut self.cc)
    }
    fn sinh_of(&mut self, a: &BigFloat) -> BigFloat {
        a.sinh(self.p, RM, &mut self.cc)
    }
    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    /// `cos(2π/9)`.
    pub fn cos_two_pi_ninths(&mut self) -> BigFloat {
        let pi = self.pi();
        let x = self.div(&self.mul(&pi, &self.c(2.0)), &self.c(9.0));
        x.cos(self.p, RM, &mut self.cc)
    }

    pub fn cosh_r(&self, c: &BigFloat) -> BigFloat {
        let den = self.sub(&self.mul(&self.c(2.0), c), &self.c(2.0));
        self.sqrt(&self.add(&self.c(1.0), &self.div(&self.c(1.0), &den)))
    }

    pub fn cosh_a(&self, c: &BigFloat) -> BigFloat {
        let t = self.div(
            &self.mul(&self.c(2.0), &self.add(c, &self.c(1.0))),
            &self.c(3.0),
        );
        self.sqrt(&t)
    }

    fn tanh_sq(&self, c: &BigFloat) -> BigFloat {
        self.sub(&self.c(1.0), &self.div(&self.c(1.0), &self.mul(c, c)))
    }

    fn sinh_from_cosh(&self, x: &BigFloat) -> BigFloat {
        self.sqrt(&self.sub(&self.mul(x, x), &self.c(1.0)))
    }

    fn ell2_from_d12(&self, c: &BigFloat, cosh_d: &BigFloat) -> BigFloat {
        let den = self.sub(
            &self.mul(&self.mul(cosh_d, cosh_d), &self.tanh_sq(c)),
            &self.c(1.0),
        );
        self.add(&self.div(&self.c(2.0), &den), &self.c(1.0))
    }

    fn ell2_from_d22(&self, c: &BigFloat, cosh_d: &BigFloat) -> BigFloat {
        let t = self.div(&self.add(c, &self.c(1.0)), &self.sub(cosh_d, &self.c(1.0)));
        self.sqrt(&self.add(&t, &self.c(1.0)))
    }

    pub fn cosh_e(&self, c: &BigFloat) -> BigFloat {
        let r = self.cosh_r(c);
        let rp = self.sub(&self.c(3.0), &r);
        let sum = self.add(
            &self.mul(&r, &rp),
            &self.mul(&self.sinh_from_cosh(&r), &self.sinh_from_cosh(&rp)),
        );
        self.ell2_from_d12(c, &sum)
    }

    pub fn cosh_f(&self, c_num: &BigFloat, c_rad: &BigFloat) -> BigFloat {
        let rp = self.sub(&self.c(3.0), &self.cosh_r(c_rad));
        let c2 = self.sub(&self.mul(&self.c(2.0), &self.mul(&rp, &rp)), &self.c(1.0));
        self.ell2_from_d22(c_num, &c2)
    }

    /// `cosh 2R''`.
    pub fn cosh_2rpp(&mut self) -> BigFloat {
        let k = self.cos_two_pi_ninths();
        self.div(&k, &self.sub(&self.c(1.0), &k))
    }

    pub fn cosh_l(&mut self, c: &BigFloat) -> BigFloat {
        let k = self.cosh_2rpp();
        self.ell2_from_d12(c, &k)
    }

    pub fn cosh_m(&mut self, c: &BigFloat) -> BigFloat {
        let k = self.cosh_2rpp();
        self.ell2_from_d22(c, &k)
    }

    pub fn lm_threshold(&mut self) -> BigFloat {
        let k = self.cos_two_pi_ninths();
        self.div(&k, &self.sub(&self.mul(&self.c(2.0), &k), &self.c(1.0)))
    }

    pub fn muffin(&mut self, c: &BigFloat) -> BigFloat {
        let r = self.cosh_r(c);
        let arg = self.div(
            &self.add(&self.mul(&self.c(4.0), c), &self.c(1.0)),
            &self.c(3.0),
        );
        let t = self.acosh(&arg);
        let l1 = self.acosh(c);
        let pi = self.pi();
        self.mul(&pi, &self.sub(&self.mul(&r, &t), &l1))
    }

    pub fn area(&mut self, c: &BigFloat) -> BigFloat {
        let pi = self.pi();
        let r = self.cosh_r(c);
        self.mul(&self.mul(&self.c(4.0), &pi), &self.sub(&self.c(2.0), &r))
    }

    /// Collar height at a single `cosh ℓ₁`, using `E`/`F` when `ef` and
    /// `L`/`M` when `lm`.
    pub fn height(&mut self, c: &BigFloat, ef: bool, lm: bool) -> BigFloat {
        let a = {
            let x = self.cosh_a(c);
            self.acosh(&x)
        };
        let mut ell2 = self.acosh(c);
        if ef {
            let e = self.cosh_e(c);
            let f = self.cosh_f(c, c);
            let m = self.acosh(&e.min(&f));
            ell2 = ell2.max(&m);
        }
        if lm {
            let l = self.cosh_l(c);
            let m = self.cosh_m(c);
            let x = self.acosh(&l.min(&m));
            ell2 = ell2.max(&x);
        }
        a.min(&self.div(&ell2, &self.c(2.0)))
    }

    /// The volume bound at a single `cosh ℓ₁`.
    pub fn km_volume(&mut self, c: &BigFloat, ef: bool, lm: bool) -> BigFloat {
        let h = self.height(c, ef, lm);
        let two_h = self.mul(&self.c(2.0), &h);
        let s = self.sinh_of(&two_h);
        let area = self.area(c);
        let collar = self.div(&self.mul(&area, &self.add(&two_h, &s)), &self.c(4.0));
        let m = self.muffin(c);
        self.add(&m, &collar)
    }

    pub fn q(&mut self, c: &BigFloat) -> BigFloat {
        let arg = self.div(
            &self.add(&self.mul(&self.c(4.0), c), &self.c(1.0)),
            &self.c(3.0),
        );
        let t = self.acosh(&arg);
        let l1 = self.acosh(c);
        self.sub(&self.sub(&t, &l1), &self.sinh_from_cosh(c))
    }

    pub fn v_combined(&mut self, c: &BigFloat) -> BigFloat {
        let l1 = self.acosh(c);
        let s = self.sinh_from_cosh(c);
        let q = self.q(c);
        let r = self.cosh_r(c);
        let pi = self.pi();
        let inner = self.add(
            &self.add(&l1, &self.mul(&self.c(2.0), &s)),
            &self.mul(&r, &q),
        );
        self.mul(&pi, &inner)
    }

    /// `2 acosh(x / cosh(acosh(x)/2)) - acosh x`.
    pub fn boundary_gap(&mut self, x: &BigFloat) -> BigFloat {
        let d = self.acosh(x);
        let half = self.div(&d, &self.c(2.0));
        let ch = half.cosh(self.p, RM, &mut self.cc);
        let ratio = self.div(x, &ch);
        let l = self.acosh(&ratio);
        self.sub(&self.mul(&self.c(2.0), &l), &d)
    }

    /// `cosh d` opposite the side `l''` in a right-angled hexagon.
    pub fn hexagon(&self, cl: &BigFloat, clp: &BigFloat, clpp: &BigFloat) -> BigFloat {
        let num = self.add(&self.mul(cl, clp), clpp);
        self.div(
            &num,
            &self.mul(&self.sinh_from_cosh(cl), &self.sinh_from_cosh(clp)),
        )
    }
}

/// The interval operation under test for `op`; `None` where the argument
/// leaves the domain.
pub fn interval_unary(op: Unary, x: Interval) -> Option<Interval> {
    match op {
        Unary::Sqr => Some(x.sqr()),
        Unary::Recip => x.recip().ok(),
        Unary::Sqrt => x.sqrt().ok(),
        Unary::Exp => Some(x.exp()),
        Unary::Ln => x.ln().ok(),
        Unary::Cosh => Some(x.cosh()),
        Unary::Sinh => Some(x.sinh()),
        Unary::Tanh => Some(x.tanh()),
        Unary::Acosh => x.acosh().ok(),
        Unary::Cos => Some(x.cos()),
    }
}

pub fn interval_binary(op: Binary, x: Interval, y: Interval) -> Option<Interval> {
    match op {
        Binary::Add => Some(x + y),
        Binary::Sub => Some(x - y),
        Binary::Mul => Some(x * y),
        Binary::Div => x.checked_div(y).ok(),
    }
}

pub const UNARY: [Unary; 10] = [
    Unary::Sqr,
    Unary::Recip,
    Unary::Sqrt,
    Unary::Exp,
    Unary::Ln,
    Unary::Cosh,
    Unary::Sinh,
    Unary::Tanh,
    Unary::Acosh,
    Unary::Cos,
];

pub const BINARY: [Binary; 4] = [Binary::Add, Binary::Sub, Binary::Mul, Binary::Div];
