//! Builds set expressions by hand and evaluates them with the decomposition
//! engine, then shows the single reduction step behind one quadric.

use nash_zeta::scissor::{beta_eval, euler_characteristic, quadric_reduce, Level, SetExpression};

fn main() {
    // A torus, S^1 x S^1
    let torus = SetExpression::product([SetExpression::Sphere(1), SetExpression::Sphere(1)]);
    // R^3 with a cone removed
    let complement = SetExpression::difference(SetExpression::AffineSpace(3), SetExpression::quadric(0, 2, 1));
    // X^1_{3,2} split by its hyperbolic pair
    let step = quadric_reduce(Level::Plus, 3, 2).expect("reducible");

    for (name, set) in [("torus", &torus), ("R^3 minus cone", &complement), ("X^1_{3,2} step", &step)] {
        println!("{name}: {set}");
        println!("  beta = {}", beta_eval(set).unwrap());
        println!("  chi  = {}", euler_characteristic(set).unwrap());
        println!("  json = {}", set.to_json());
    }
    assert_eq!(beta_eval(&step).unwrap(), beta_eval(&SetExpression::quadric(1, 3, 2)).unwrap());
}
