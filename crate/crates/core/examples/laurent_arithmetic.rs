//! Build, multiply, divide and evaluate Laurent polynomials in the `Y` variables.

use std::collections::BTreeMap;

use bruhat_minors::laurent::{LaurentPoly, Variable};
use num_rational::BigRational;

fn main() {
    let r = 2;
    let a = &LaurentPoly::y(r, 1, 1) + &LaurentPoly::y_pow(r, 1, 2, -1);
    let b = &LaurentPoly::y(r, 2, 1) + &LaurentPoly::one();
    let prod = &a * &b;
    println!("a     = {a}");
    println!("b     = {b}");
    println!("a*b   = {prod}");
    println!("a*b/b = {}", prod.exact_div(&b).expect("b divides a*b"));

    let parsed: LaurentPoly = prod.to_string().parse().expect("printed form parses");
    assert_eq!(parsed, prod);

    let mut point = BTreeMap::new();
    for v in prod.variables() {
        point.insert(v, BigRational::from_integer(2.into()));
    }
    point.insert(Variable::y(1, 2).unwrap(), BigRational::new(1.into(), 3.into()));
    println!("a*b at the point = {}", prod.eval_at(&point).unwrap());
    println!("json: {}", serde_json::to_string(&prod.to_json()).unwrap());
}
