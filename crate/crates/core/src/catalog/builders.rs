//! Constructions for the named graphs that are built rather than loaded
//! from frozen data. Each returns the raw graph; certification against
//! the expected invariants happens in [`super::build`].

use super::field::FiniteField;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hamiltonian cycle on `len * reps` vertices plus the chord i -> i + p[i mod len]
/// for every i, with offsets taken mod n (negative offsets allowed).
pub fn lcf(pattern: &[i64], reps: usize) -> Result<Graph> {
    if pattern.is_empty() || reps == 0 {
        return Err(Error::Domain("empty chord pattern".into()));
    }
    let n = pattern.len() * reps;
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        let j = (i as i64 + pattern[i % pattern.len()]).rem_euclid(n as i64) as usize;
        g.add_edge(i, j)?;
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// K_{a,b} with part A = 0..a and part B = a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v)?;
        }
    }
    Ok(g)
}

/// Complement of the line graph of K_{2,m}: an (m-1)-regular graph on 2m
/// vertices, the crown graph (K_{m,m} minus a perfect matching).
pub fn complement_line_k2m(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::Domain(format!(
            "complement of L(K_{{2,{m}}}) is disconnected for m < 3"
        )));
    }
    Ok(complete_bipartite(2, m)?.line_graph()?.complement())
}

/// Robertson's pentagon/pentagram model: 5 pentagons P_h and 5 pentagrams
/// Q_i, with P_{h,j} adjacent to Q_{i,k} exactly when k = hi + j (mod 5).
pub fn hoffman_singleton() -> Result<Graph> {
    let mut g = Graph::empty(50)?;
    let p = |h: usize, j: usize| 5 * h + j;
    let q = |i: usize, k: usize| 25 + 5 * i + k;
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(p(h, j), p(h, (j + 1) % 5))?;
            g.add_edge(q(h, j), q(h, (j + 2) % 5))?;
            for i in 0..5 {
                g.add_edge(p(h, j), q(i, (h * i + j) % 5))?;
            }
        }
    }
    Ok(g)
}

/// Even-weight words of length 5, adjacent when their XOR has weight 4.
pub fn clebsch() -> Result<Graph> {
    let words: Vec<u32> = (0u32..32).filter(|w| w.count_ones() % 2 == 0).collect();
    let mut g = Graph::empty(16)?;
    for (a, &u) in words.iter().enumerate() {
        for (b, &v) in words.iter().enumerate().skip(a + 1) {
            if (u ^ v).count_ones() == 4 {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// Intersection graph of the 27 lines on a cubic surface in the standard
/// {a_i, b_i, c_ij} labelling: a_i meets b_j for i != j, a_i and b_i meet
/// c_jk when i is one of j,k, and c_ij meets c_kl when the pairs are
/// disjoint. 10-regular on 27 vertices; its complement is the 16-regular
/// graph of skew line pairs.
pub fn schlafli_complement() -> Result<Graph> {
    let mut g = Graph::empty(27)?;
    let mut pairs = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            pairs.push((i, j));
        }
    }
    let a = |i: usize| i;
    let b = |i: usize| 6 + i;
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                g.add_edge(a(i), b(j))?;
            }
        }
        for (t, &(j, k)) in pairs.iter().enumerate() {
            if i == j || i == k {
                g.add_edge(a(i), 12 + t)?;
                g.add_edge(b(i), 12 + t)?;
            }
        }
    }
    for (s, &(i, j)) in pairs.iter().enumerate() {
        for (t, &(k, l)) in pairs.iter().enumerate().skip(s + 1) {
            if i != k && i != l && j != k && j != l {
                g.add_edge(12 + s, 12 + t)?;
            }
        }
    }
    Ok(g)
}

/// Points of the projective plane over F_q as normalized triples with the
/// first nonzero coordinate 1, in enumeration order (1,y,z), (0,1,z), (0,0,1).
fn plane_points(q: usize) -> Vec<[u8; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for y in 0..q as u8 {
        for z in 0..q as u8 {
            pts.push([1, y, z]);
        }
    }
    for z in 0..q as u8 {
        pts.push([0, 1, z]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Point-line incidence graph of PG(2,q): points first, then lines (as the
/// dual triples), with P = [x,y,z] on L = [a,b,c] when ax + by + cz = 0.
/// (q+1)-regular bipartite on 2(q^2 + q + 1) vertices, girth 6.
pub fn pg_incidence(q: u64) -> Result<Graph> {
    let f = FiniteField::new(q)?;
    let q = f.q();
    let pts = plane_points(q);
    let m = pts.len();
    let mut g = Graph::empty(2 * m)?;
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            let s = f.add(
                f.add(f.mul(p[0], l[0]), f.mul(p[1], l[1])),
                f.mul(p[2], l[2]),
            );
            if s == 0 {
                g.add_edge(i, m + j)?;
            }
        }
    }
    Ok(g)
}

/// Point-line incidence graph of the symplectic quadrangle W(q): all points
/// of PG(3,q), and as lines the projective lines that are totally isotropic
/// for the alternating form B(u,v) = u0 v1 - u1 v0 + u2 v3 - u3 v2. Since B
/// is bilinear and alternating, a line is totally isotropic exactly when one
/// (hence every) spanning pair is. (q+1)-regular bipartite on
/// 2 (q+1)(q^2+1) vertices, girth 8.
pub fn gq_incidence(q: u64) -> Result<Graph> {
    if !matches!(q, 2 | 3 | 4) {
        return Err(Error::UnsupportedField(q));
    }
    let f = FiniteField::new(q)?;
    let q = f.q();

    let mut pts: Vec<[u8; 4]> = Vec::new();
    for lead in 0..4 {
        let mut v = [0u8; 4];
        v[lead] = 1;
        let free = lead + 1..4;
        let mut tail = vec![0u8; free.len()];
        loop {
            for (t, &x) in tail.iter().enumerate() {
                v[lead + 1 + t] = x;
            }
            pts.push(v);
            let mut carry = true;
            for x in tail.iter_mut().rev() {
                if carry {
                    *x += 1;
                    if *x as usize == q {
                        *x = 0;
                    } else {
                        carry = false;
                    }
                }
            }
            if carry {
                break;
            }
        }
    }
    let m = pts.len();
    debug_assert_eq!(m, (q + 1) * (q * q + 1));
    let index: std::collections::HashMap<[u8; 4], usize> =
        pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let normalize = |v: [u8; 4]| -> [u8; 4] {
        let lead = v.iter().position(|&x| x != 0).expect("nonzero vector");
        let s = f.inv(v[lead]);
        let mut w = [0u8; 4];
        for (t, &x) in v.iter().enumerate() {
            w[t] = f.mul(s, x);
        }
        w
    };
    let b = |u: &[u8; 4], v: &[u8; 4]| -> u8 {
        f.add(
            f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0])),
            f.sub(f.mul(u[2], v[3]), f.mul(u[3], v[2])),
        )
    };

    let mut lines: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    for (i, u) in pts.iter().enumerate() {
        for v in pts.iter().skip(i + 1) {
            if b(u, v) != 0 {
                continue;
            }
            let mut ids = vec![index[&normalize(*v)]];
            for t in 0..q as u8 {
                let mut w = [0u8; 4];
                for (s, x) in w.iter_mut().enumerate() {
                    *x = f.add(u[s], f.mul(t, v[s]));
                }
                ids.push(index[&normalize(w)]);
            }
            ids.sort_unstable();
            lines.insert(ids);
        }
    }
    if lines.len() != m {
        return Err(Error::Domain(format!(
            "expected {m} totally isotropic lines, found {}",
            lines.len()
        )));
    }

    let mut g = Graph::empty(2 * m)?;
    for (j, line) in lines.iter().enumerate() {
        for &p in line {
            g.add_edge(p, m + j)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcf_vertex_count_and_regularity() {
        let heawood = lcf(&[5, -5], 7).unwrap();
        assert_eq!(heawood.n(), 14);
        assert_eq!(heawood.regularity(), Some(3));
        assert_eq!(heawood.girth(), Some(6));
    }

    #[test]
    fn crown_graph_shape() {
        let g = complement_line_k2m(4).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.girth(), Some(4));
        assert!(complement_line_k2m(2).is_err());
    }

    #[test]
    fn hoffman_singleton_is_a_moore_graph() {
        let g = hoffman_singleton().unwrap();
        assert_eq!(g.n(), 50);
        assert_eq!(g.regularity(), Some(7));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn clebsch_shape() {
        let g = clebsch().unwrap();
        assert_eq!(g.n(), 16);
        assert_eq!(g.regularity(), Some(5));
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn schlafli_complement_shape() {
        let g = schlafli_complement().unwrap();
        assert_eq!(g.n(), 27);
        assert_eq!(g.regularity(), Some(10));
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn pg_incidence_shape() {
        for q in [2u64, 3, 4] {
            let g = pg_incidence(q).unwrap();
            let m = (q * q + q + 1) as usize;
            assert_eq!(g.n(), 2 * m);
            assert_eq!(g.regularity(), Some(q as usize + 1));
            assert_eq!(g.girth(), Some(6), "girth of PG(2,{q}) incidence graph");
        }
    }

    #[test]
    fn gq_incidence_shape() {
        for q in [2u64, 3] {
            let g = gq_incidence(q).unwrap();
            let m = ((q + 1) * (q * q + 1)) as usize;
            assert_eq!(g.n(), 2 * m);
            assert_eq!(g.regularity(), Some(q as usize + 1));
            assert_eq!(g.girth(), Some(8), "girth of W({q}) incidence graph");
        }
    }
}
