use crate::algebra::field::NfElem;
use crate::algebra::{Coeff, MPoly};
use crate::curve::LocalPoly;
use crate::Error;

use super::germ::shear;

const MAX_SHEAR: i64 = 64;

fn unit_at_origin(f: &MPoly<NfElem>) -> bool {
    !f.constant_term().is_zero()
}

/// Coefficient of `y^n` in the top form after the shear `x -> x + k y`.
fn regular_after(f: &MPoly<NfElem>, k: i64) -> bool {
    let n = f.total_degree().unwrap();
    let top = f.homogeneous_part(n);
    !top.eval(&[NfElem::from_i64(k), NfElem::one()]).is_zero()
}

/// Local intersection number at the origin of two germs over a common field.
///
/// Both germs are sheared by `x -> x + k y` for the first `k` making them
/// `y`-regular with constant leading coefficient and with no common zero on
/// `x = 0` besides the origin; the answer is then the order at `x = 0` of
/// their resultant in `y`. A common factor is only computed when the
/// resultant vanishes.
pub fn local_intersection(f: &MPoly<NfElem>, g: &MPoly<NfElem>) -> Result<u32, Error> {
    if unit_at_origin(f) || unit_at_origin(g) {
        return Ok(0);
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::SharedComponent);
    }
    if let Some(n) = coprime_intersection(f, g)? {
        return Ok(n);
    }
    let h = f.gcd(g);
    if !unit_at_origin(&h) {
        return Err(Error::SharedComponent);
    }
    let (f, g) = (f.div_exact(&h).unwrap(), g.div_exact(&h).unwrap());
    if unit_at_origin(&f) || unit_at_origin(&g) {
        return Ok(0);
    }
    coprime_intersection(&f, &g)?.ok_or(Error::SharedComponent)
}

/// `None` when the resultant vanishes, i.e. the germs share a factor.
fn coprime_intersection(f: &MPoly<NfElem>, g: &MPoly<NfElem>) -> Result<Option<u32>, Error> {
    let mut checked = false;
    for k in 0..MAX_SHEAR {
        if !regular_after(f, k) || !regular_after(g, k) {
            continue;
        }
        let (fs, gs) = (shear(f, k), shear(g, k));
        let r = fs.resultant(&gs, 1).to_upoly(0);
        if r.is_zero() {
            assert!(!checked, "a shear cannot create a common factor");
            return Ok(None);
        }
        checked = true;
        let on_axis = |p: &MPoly<NfElem>| p.eval_var(0, &NfElem::zero()).to_upoly(1);
        let common = on_axis(&fs).gcd(&on_axis(&gs));
        // the only common root on x = 0 must be y = 0
        if common.degree() != common.order() {
            continue;
        }
        return Ok(Some(r.order().unwrap() as u32));
    }
    Err(Error::InvalidInput(
        "no admissible shear for the intersection".into(),
    ))
}

/// Milnor number: the local intersection number of the two partials.
///
/// A germ with Milnor number `mu` is `(mu + 1)`-determined, so the number is
/// read off the first jet of degree `k` whose own Milnor number is below `k`.
pub fn milnor_number(f: &LocalPoly) -> Result<u32, Error> {
    let top = f.poly.total_degree().unwrap_or(0);
    for k in f.order() + 1..top {
        let jet = MPoly::from_terms(
            2,
            f.poly
                .terms()
                .iter()
                .filter(|(e, _)| e[0] + e[1] <= k)
                .map(|(e, c)| (e.clone(), c.clone())),
        );
        if let Ok(mu) = partials_intersection(&jet) {
            if mu < k {
                return Ok(mu);
            }
        }
    }
    partials_intersection(&f.poly)
}

fn partials_intersection(f: &MPoly<NfElem>) -> Result<u32, Error> {
    let (fx, fy) = (f.derivative(0), f.derivative(1));
    if unit_at_origin(&fx) || unit_at_origin(&fy) {
        return Ok(0);
    }
    local_intersection(&fx, &fy).map_err(|e| match e {
        Error::SharedComponent => Error::NonIsolated,
        e => e,
    })
}
