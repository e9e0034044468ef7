//! Cartesian positions to collective and hyperspherical coordinates.

use wolfes4::coordinates::{
    from_collective, to_collective, to_hyperspherical, AngleRange, CartesianPoint,
};

fn main() {
    let x = CartesianPoint([1.0, -0.5, 0.6, 0.3]);
    let q = to_collective(&x);
    println!("collective {:?}", q.as_array());
    println!("round trip {:?}", from_collective(&q).0);
    println!("|x|^2 = {}, |q|^2 = {}", x.norm_sq(), q.norm_sq());

    for range in [AngleRange::Full, AngleRange::Octant] {
        let h = to_hyperspherical(&q, range);
        println!(
            "{range:?}: r {:.6} alpha {:.6} theta {:.6} phi {:.6}",
            h.r, h.alpha, h.theta, h.phi
        );
    }
}
