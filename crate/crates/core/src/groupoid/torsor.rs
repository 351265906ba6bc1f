use super::{Groupoid, LawReport};
use crate::error::{Error, Result};

/// The ternary product `(abc) = a ∗ b^{-1} ∗ c`, defined when
/// `source(a) = source(b)` and `target(b) = target(c)`.
pub fn ternary<G: Groupoid>(g: &G, a: &G::Arrow, b: &G::Arrow, c: &G::Arrow) -> Result<G::Arrow> {
    if !g.objects_eq(&g.source(a), &g.source(b)) || !g.objects_eq(&g.target(b), &g.target(c)) {
        return Err(Error::NotComposable("ternary product needs source(a) = source(b) and target(b) = target(c)".into()));
    }
    let ab = g.compose(a, &g.inverse(b))?;
    g.compose(&ab, c)
}

/// Checks idempotency `(xyy) = x = (yyx)` and para-associativity
/// `((uvw)yz) = (uv(wyz)) = (u(ywv)z)` on 5-tuples with
/// `source(u) = source(v)`, `target(v) = target(w)`, `source(w) = source(y)`,
/// `target(y) = target(z)`. Returns the two reports `(IP, PA)`.
pub fn check_torsor<G, S>(g: &G, law_prefix: &str, samples: usize, mut sampler: S) -> (LawReport, LawReport)
where
    G: Groupoid,
    S: FnMut() -> Result<[G::Arrow; 5]>,
{
    let mut ip = LawReport::new(format!("{law_prefix}/idempotency"));
    let mut pa = LawReport::new(format!("{law_prefix}/para-associativity"));
    for _ in 0..samples {
        let tuple = match sampler() {
            Ok(t) => t,
            Err(e) => {
                ip.record(Some(format!("sampler error: {e}")));
                pa.record(Some(format!("sampler error: {e}")));
                continue;
            }
        };
        let [u, v, w, y, z] = &tuple;
        let eq = |a: &G::Arrow, b: &G::Arrow| g.arrows_eq(a, b);

        let idem = (|| -> Result<bool> {
            // (u v v) = u uses source(u) = source(v); (w w v) = v uses target(w) = target(v)
            Ok(eq(&ternary(g, u, v, v)?, u) && eq(&ternary(g, w, w, v)?, v))
        })();
        ip.record(match idem {
            Ok(true) => None,
            Ok(false) => Some(format!("(xyy) = x = (yyx) fails: u={u:?}, v={v:?}, w={w:?}")),
            Err(e) => Some(format!("{e}: u={u:?}, v={v:?}, w={w:?}")),
        });

        let para = (|| -> Result<bool> {
            let left = ternary(g, &ternary(g, u, v, w)?, y, z)?;
            let middle = ternary(g, u, v, &ternary(g, w, y, z)?)?;
            let right = ternary(g, u, &ternary(g, y, w, v)?, z)?;
            Ok(eq(&left, &middle) && eq(&middle, &right))
        })();
        pa.record(match para {
            Ok(true) => None,
            Ok(false) => Some(format!("para-associativity fails on {tuple:?}")),
            Err(e) => Some(format!("{e}: {tuple:?}")),
        });
    }
    (ip, pa)
}
