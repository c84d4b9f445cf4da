use jordan_lie::freejordan::FreeJordan;
use jordan_lie::tkk;

fn main() {
    let t = std::time::Instant::now();
    let mut fj = FreeJordan::new(2);
    for n in 1..=6 {
        println!("dim J_{}(2) = {} ({:?})", n, fj.dim_component(n), t.elapsed());
    }
    let t = std::time::Instant::now();
    let mut fj = FreeJordan::new(2);
    let a = fj.truncated_algebra(5).unwrap();
    println!("J(2)/J+^5: dim {} in {:?}", a.dim(), t.elapsed());
    let t = std::time::Instant::now();
    let g = tkk::build(a, true).unwrap();
    println!("tkk dim {} central {} in {:?}", g.dim(), g.central_part_dim(), t.elapsed());
    let t = std::time::Instant::now();
    g.verify_jacobi().unwrap();
    println!("jacobi {:?}", t.elapsed());

    let t = std::time::Instant::now();
    let mut f3 = FreeJordan::new(3);
    let a3 = f3.truncated_algebra(3).unwrap();
    let g3 = tkk::build(a3, true).unwrap();
    g3.verify_jacobi().unwrap();
    println!("J(3)/J+^3 tkk dim {} central {} in {:?}", g3.dim(), g3.central_part_dim(), t.elapsed());
}
