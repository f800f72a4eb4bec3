use fkdv::field::Field;
use fkdv::grid::make_grid;
use fkdv::ground_state::*;
use fkdv::params::ModelParams;

fn main() {
    let p = ModelParams::new(1, 1.0, 2, 1.0).unwrap();
    let g = make_grid(1, &[800.0], &[32768]).unwrap();
    let gs = petviashvili_solve(&p, &g, None, SolveOptions { tol: 1e-12, ..Default::default() }).unwrap();
    match rescale(&gs, 4.0) {
        Ok(up) => {
            let expect = Field::from_fn(g.clone(), |x| 16.0 / (1.0 + 16.0 * x[0] * x[0])).unwrap();
            println!("c=4: sup err vs closed form = {:.2e}, residual = {:.2e}", up.q.sub(&expect).sup_norm(), up.residual);
            let back = rescale(&up, 1.0).unwrap();
            println!("roundtrip sup err = {:.2e}, residual = {:.2e}", back.q.sub(&gs.q).sup_norm(), back.residual);
        }
        Err(e) => println!("rescale failed: {e}"),
    }
    // KdV c=2 path
    let pk = ModelParams::new(1, 2.0, 2, 1.0).unwrap();
    let gk = make_grid(1, &[80.0], &[2048]).unwrap();
    let gsk = petviashvili_solve(&pk, &gk, None, SolveOptions::default()).unwrap();
    let upk = rescale(&gsk, 2.0).unwrap();
    let expk = Field::from_fn(gk.clone(), |x| {
        let ch = (x[0] / 2.0f64.sqrt()).cosh();
        6.0 / (ch * ch)
    }).unwrap();
    println!("kdv c=2: sup err = {:.2e}, residual = {:.2e}", upk.q.sub(&expk).sup_norm(), upk.residual);
}
