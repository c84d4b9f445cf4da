use jordan_lie::jordan::albert_algebra;
use jordan_lie::tkk;

fn main() {
    let t = std::time::Instant::now();
    let a = albert_algebra();
    println!("build albert: {:?}", t.elapsed());

    let t = std::time::Instant::now();
    let g = tkk::build(a, true).unwrap();
    println!(
        "build tkk: {:?} (dim {}, central part {})",
        t.elapsed(),
        g.dim(),
        g.central_part_dim()
    );

    let t = std::time::Instant::now();
    g.verify_jacobi().unwrap();
    println!("jacobi: {:?}", t.elapsed());

    let t = std::time::Instant::now();
    let cover = tkk::central_cover_map(&g).unwrap();
    println!("cover map: {:?} kernel={}", t.elapsed(), cover.kernel_dim);
}
