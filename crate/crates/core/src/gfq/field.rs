//! GF(2), GF(4), GF(8) and GF(16) via exp/log tables.
//!
//! Elements are stored as polynomial bit patterns over GF(2) modulo a fixed
//! primitive polynomial, so addition is XOR.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub type Elem = u8;

#[derive(Debug)]
pub struct Field {
    order: u32,
    degree: u32,
    exp: Vec<Elem>,
    log: Vec<i32>,
    mul_table: Vec<Elem>,
}

impl Field {
    fn build(degree: u32, modulus: u32) -> Field {
        let order = 1u32 << degree;
        let mut exp = vec![0 as Elem; 2 * order as usize];
        let mut log = vec![-1i32; order as usize];
        let mut x: u32 = 1;
        for i in 0..(order - 1) {
            exp[i as usize] = x as Elem;
            log[x as usize] = i as i32;
            x <<= 1;
            if x & order != 0 {
                x ^= modulus;
            }
        }
        for i in (order - 1) as usize..exp.len() {
            exp[i] = exp[i - (order - 1) as usize];
        }
        let mut f = Field {
            order,
            degree,
            exp,
            log,
            mul_table: Vec::new(),
        };
        let n = order as usize;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = f.mul_slow(a as Elem, b as Elem);
            }
        }
        f.mul_table = table;
        f
    }

    /// The field of the given order, one of 2, 4, 8, 16.
    pub fn get(order: u32) -> Result<&'static Field> {
        static FIELDS: OnceLock<[Field; 4]> = OnceLock::new();
        let fields = FIELDS.get_or_init(|| {
            [
                Field::build(1, 0b11),
                Field::build(2, 0b111),
                Field::build(3, 0b1011),
                Field::build(4, 0b10011),
            ]
        });
        match order {
            2 => Ok(&fields[0]),
            4 => Ok(&fields[1]),
            8 => Ok(&fields[2]),
            16 => Ok(&fields[3]),
            _ => Err(Error::Precondition(format!("unsupported field order {order}"))),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `log₂` of the order.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[s as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul_table[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.order as i32 - 1 - l) % (self.order as i32 - 1)) as usize])
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * k % (self.order as u64 - 1);
        self.exp[l as usize]
    }

    /// The generator `α` of the multiplicative group.
    pub fn primitive(&self) -> Elem {
        self.exp[1]
    }

    /// `α^i`.
    pub fn exp(&self, i: usize) -> Elem {
        self.exp[i % (self.order as usize - 1)]
    }

    /// Discrete log base `α`, `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        let l = self.log[a as usize];
        (l >= 0).then_some(l as u32)
    }

    pub fn frobenius(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    /// The involutory automorphism `a ↦ a^√q` (GF(4): `a ↦ a²`).
    pub fn conjugate(&self, a: Elem) -> Elem {
        let half = self.degree / 2;
        let mut x = a;
        for _ in 0..half {
            x = self.frobenius(x);
        }
        x
    }

    /// Elements `0, 1, …, q-1` as bit patterns.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    /// Primitive cube root of unity; requires an even-degree field.
    pub fn omega(&self) -> Option<Elem> {
        (self.degree % 2 == 0).then(|| self.exp((self.order as usize - 1) / 3))
    }
}
