//! Helpers on coordinate vectors (`[Scalar]`).

use super::scalar::{Field, Scalar};

pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(v: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * s).collect()
}

pub fn scale_in_place(v: &mut [Scalar], s: &Scalar) {
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = &*x * s;
        }
    }
}

/// `acc += s * v`.
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(s, x);
    }
}

/// Kronecker product of coordinate vectors: index `i * b.len() + j`.
pub fn kron(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a.first().or(b.first()).map(Scalar::field);
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() { field.unwrap().zero() } else { x * y });
        }
    }
    out
}

/// Renders a coordinate vector as `(a, b, c)`.
pub fn show(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
