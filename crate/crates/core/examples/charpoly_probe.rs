use spectral_bound::graph::circulant;
use std::time::Instant;

fn main() {
    for n in [50usize, 100, 126, 170] {
        let g = circulant(n, &[1, 2, 5]).unwrap();
        let t = Instant::now();
        let p = g.char_poly().unwrap();
        let tp = t.elapsed();
        let t = Instant::now();
        let s = g.spectrum().unwrap();
        let roots = s.roots().unwrap().len();
        println!("n={n}: charpoly {:?} (deg {}), roots {roots} in {:?}", tp, p.degree().unwrap(), t.elapsed());
    }
}
