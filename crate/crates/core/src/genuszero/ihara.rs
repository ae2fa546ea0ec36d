use crate::freealg::{is_primitive, Series, Word, Y};

/// D_g(h) with D_g(x) = 0, D_g(y) = [y, g], extended by Leibniz.
pub fn ihara_derivation(g: &Series, h: &Series) -> Series {
    let y = Series::letter(g.alpha, Y);
    let dy = y.bracket(g);
    let mut out = Series::zero(h.alpha);
    for (w, q) in h.iter() {
        for i in 0..w.len() {
            if w.get(i) != Y {
                continue;
            }
            let pre = w.slice(0, i);
            let post = w.slice(i + 1, w.len());
            for (u, c) in dy.iter() {
                out.add_term(pre.concat(*u).concat(post), q * c);
            }
        }
    }
    out
}

/// {g, h} = [g, h] + D_g(h) − D_h(g).
pub fn ihara_bracket(g: &Series, h: &Series) -> Series {
    let mut out = g.bracket(h);
    out.add_scaled(&ihara_derivation(g, h), &crate::Q::one());
    out.add_scaled(&ihara_derivation(h, g), &crate::Q::int(-1));
    out
}

#[derive(Debug, thiserror::Error)]
#[error("the left factor of a diamond product must be a Lie polynomial")]
pub struct NotLie;

/// g ⋄ h = g h + D_g(h), for Lie g.
pub fn diamond(g: &Series, h: &Series) -> Result<Series, NotLie> {
    for (_, part) in g.by_degree() {
        if !is_primitive(&part) {
            return Err(NotLie);
        }
    }
    let mut out = g * h;
    out.add_scaled(&ihara_derivation(g, h), &crate::Q::one());
    Ok(out)
}

/// Right-to-left diamond product g1 ⋄ (g2 ⋄ (… ⋄ gn)); only gn may be non-Lie.
pub fn diamond_chain(gs: &[Series]) -> Result<Series, NotLie> {
    let Some((last, rest)) = gs.split_last() else {
        return Ok(Series::word(crate::Alphabet::XY, Word::EMPTY));
    };
    let mut acc = last.clone();
    for g in rest.iter().rev() {
        acc = diamond(g, &acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{parse_series, Alphabet};

    fn s(t: &str) -> Series {
        parse_series(t, Alphabet::XY).unwrap()
    }

    #[test]
    fn derivation_on_letters() {
        let g2 = s("[xy]");
        assert_eq!(ihara_derivation(&g2, &s("y")), s("[y[xy]]"));
        assert!(ihara_derivation(&g2, &s("x")).is_zero());
    }

    #[test]
    fn bracket_alternating() {
        let g = s("[x[xy]] + [[xy]y]");
        assert!(ihara_bracket(&g, &g).is_zero());
        let one = s("1");
        assert_eq!(diamond(&g, &one).unwrap(), g);
        assert!(diamond(&s("xy"), &one).is_err());
    }
}
