//! Surgery on a crossing pair and the descending path it produces.
//!
//! With `v` and `w` in minimal position, let `p` be the crossing nearest to
//! `P2` along `v`. The arc that follows `w` from `P1` to `p` and then `v` from
//! `p` to `P2` is disjoint from `w` and crosses `v` fewer times than `w` did.
//! Repeating the step walks from `w` to `v` through pairwise disjoint arcs.

use alloc::vec;
use alloc::vec::Vec;

use crate::arc::{intersection, tighten, ArcWord, RawWord};
use crate::error::Error;
use crate::leveling::ArcSequence;
use crate::overlay::build_overlay;
use crate::surface::{Marked, Triangulation};

/// Which side of `v` the new arc is pushed to after turning at `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// Stay in the triangle `w` occupies just before reaching `p`.
    Primary,
    /// Continue across `v` first.
    Alternative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryTrace {
    pub v: ArcWord,
    pub w: ArcWord,
    /// Position of `p` among the crossings, counted along `v` from `P1`.
    pub crossing: usize,
    pub resolution: Resolution,
    pub w_prime: ArcWord,
    /// `i(v, w)`.
    pub before: usize,
    /// `i(v, w')`.
    pub after: usize,
}

pub fn surgery_step(t: &Triangulation, v: &ArcWord, w: &ArcWord) -> Result<SurgeryTrace, Error> {
    let before = intersection(t, v, w)?;
    if before == 0 {
        return Err(Error::Disjoint);
    }
    let overlay = build_overlay(t, v, w)?;
    if overlay.crossing_count() != before {
        return Err(Error::Postcondition(
            "overlay crossing count differs from i(v, w)",
        ));
    }
    let p = *overlay.crossings.last().unwrap();
    let frame = overlay.frame();
    let wf = &overlay.w_frame;
    let x = wf.crossings()[p.w_index];
    let toward_p2 = |s: crate::surface::Slot| {
        if frame.vertex(s.tail()) == Marked::P2 {
            s.tail()
        } else {
            s.head()
        }
    };
    let candidates = [
        (
            Resolution::Primary,
            RawWord {
                start: wf.start(),
                crossings: wf.crossings()[..p.w_index].to_vec(),
                end: toward_p2(x),
            },
        ),
        (
            Resolution::Alternative,
            RawWord {
                start: wf.start(),
                crossings: wf.crossings()[..=p.w_index].to_vec(),
                end: toward_p2(frame.twin(x)),
            },
        ),
    ];
    for (resolution, raw) in candidates {
        let in_frame = tighten(frame, &raw)?;
        let w_prime = overlay.straightening.path.backward(&in_frame)?;
        let after = intersection(t, v, &w_prime)?;
        if intersection(t, w, &w_prime)? == 0 && after < before {
            return Ok(SurgeryTrace {
                v: v.clone(),
                w: w.clone(),
                crossing: p.along_v,
                resolution,
                w_prime,
                before,
                after,
            });
        }
    }
    Err(Error::Postcondition(
        "neither resolution of the surgery verifies",
    ))
}

/// Path `w = u_0, u_1, ..., u_m = v` of pairwise consecutive-disjoint arcs
/// with `m <= i(v, w) + 1`.
pub fn path_between(t: &Triangulation, v: &ArcWord, w: &ArcWord) -> Result<ArcSequence, Error> {
    let mut arcs = vec![w.clone()];
    let mut cur = w.clone();
    let mut remaining = intersection(t, v, w)?;
    while cur != *v {
        if remaining == 0 {
            arcs.push(v.clone());
            break;
        }
        let step = surgery_step(t, v, &cur)?;
        if step.after >= remaining {
            return Err(Error::Postcondition("surgery did not descend"));
        }
        remaining = step.after;
        cur = step.w_prime;
        arcs.push(cur.clone());
    }
    let seq = ArcSequence::new(arcs);
    if let Some(bad) = seq.validate(t).first() {
        return Err(Error::InvalidSequence { index: bad.index });
    }
    Ok(seq)
}

/// Every arc in `seq`, paired with its intersection with `v`.
pub fn descent_profile(
    t: &Triangulation,
    v: &ArcWord,
    seq: &ArcSequence,
) -> Result<Vec<usize>, Error> {
    seq.arcs().iter().map(|u| intersection(t, v, u)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::random_arc;

    #[test]
    fn disjoint_pair_is_rejected() {
        let t = Triangulation::standard(1).unwrap();
        let e = t.p1_p2_edges();
        let v = ArcWord::from_edge(&t, e[0]).unwrap();
        let w = ArcWord::from_edge(&t, e[1]).unwrap();
        assert_eq!(surgery_step(&t, &v, &w), Err(Error::Disjoint));
        assert_eq!(path_between(&t, &v, &w).unwrap().arcs().len(), 2);
        assert_eq!(path_between(&t, &v, &v).unwrap().arcs().len(), 1);
    }

    #[test]
    fn surgery_descends() {
        let t = Triangulation::standard(1).unwrap();
        let mut tested = 0;
        for seed in 0..60 {
            let v = random_arc(&t, seed, 20).unwrap();
            let w = random_arc(&t, seed + 500, 20).unwrap();
            if intersection(&t, &v, &w).unwrap() == 0 {
                continue;
            }
            let tr = surgery_step(&t, &v, &w).unwrap();
            assert_eq!(intersection(&t, &w, &tr.w_prime).unwrap(), 0);
            assert!(tr.after < tr.before);
            tested += 1;
        }
        assert!(tested > 20);
    }
}
