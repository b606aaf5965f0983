use crate::algebra::{MPoly, Rat};
use crate::curve::{HomogPoly, ProjPoint};
use crate::singular::check_squarefree;
use crate::Error;

#[derive(Clone, Copy, Debug)]
pub struct DualCurveOptions {
    /// Largest input degree attempted.
    pub max_degree: u32,
}

impl Default for DualCurveOptions {
    fn default() -> Self {
        DualCurveOptions { max_degree: 4 }
    }
}

/// Norm to `Q` of the pencil line `p0 u + p1 v + p2` of a point, as a
/// polynomial in `(u, v)`.
fn line_norm(p: &ProjPoint) -> MPoly<Rat> {
    let lift = |i: usize| {
        let c = p.coords[i].to_poly();
        MPoly::from_upoly(3, 0, &c)
    };
    let line = lift(0)
        .mul(&MPoly::var(3, 1))
        .add(&lift(1).mul(&MPoly::var(3, 2)))
        .add(&lift(2));
    match &p.field {
        None => line.remove_var(0),
        Some(k) => {
            if line.degree_in(0).unwrap_or(0) == 0 {
                return line.remove_var(0);
            }
            MPoly::from_upoly(3, 0, k.minpoly())
                .resultant(&line, 0)
                .remove_var(0)
        }
    }
}

/// Equation of the dual curve in line coordinates `u, v, w`.
///
/// The discriminant in `x` of `F(x, 1, -(u x + v))` vanishes on the tangent
/// lines and on the pencils through the singular points; removing the pencils
/// leaves the dual curve in the chart `w = 1`.
pub fn dual_curve(
    f: &HomogPoly,
    singular: &[ProjPoint],
    d_hat: i64,
    opts: &DualCurveOptions,
) -> Result<HomogPoly, Error> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::DegenerateDegree(d as usize));
    }
    if d > opts.max_degree {
        return Err(Error::DualFailure(format!(
            "degree {d} exceeds the limit {}",
            opts.max_degree
        )));
    }
    if d_hat < 2 {
        return Err(Error::DualFailure(format!(
            "predicted class {d_hat} is too small"
        )));
    }
    // variables (x, u, v)
    let x = MPoly::var(3, 0);
    let z = x.mul(&MPoly::var(3, 1)).add(&MPoly::var(3, 2)).neg();
    let g = f.poly().substitute(&[x, MPoly::one(3), z]);
    let lc = g.coeffs_in(0).pop().unwrap();
    let res = g.resultant(&g.derivative(0), 0);
    let mut disc = res
        .div_exact(&lc)
        .ok_or_else(|| {
            Error::DualFailure("leading coefficient does not divide the resultant".into())
        })?
        .remove_var(0);
    for p in singular {
        let norm = line_norm(p);
        if norm.is_constant() {
            continue;
        }
        while let Some(q) = disc.div_exact(&norm) {
            disc = q;
        }
    }
    let target = d_hat as u32;
    if disc.total_degree() != Some(target) {
        disc = disc.squarefree_part();
    }
    if disc.total_degree() != Some(target) {
        return Err(Error::DualFailure(format!(
            "eliminant has degree {:?}, expected {target}",
            disc.total_degree()
        )));
    }
    let dual = HomogPoly::new(disc.primitive_integer().homogenize(target), ["u", "v", "w"])?;
    check_squarefree(&dual)
        .map_err(|_| Error::DualFailure("dual equation is not squarefree".into()))?;
    Ok(dual)
}

/// Whether two curves agree up to a nonzero constant, ignoring names.
pub fn same_curve(a: &HomogPoly, b: &HomogPoly) -> bool {
    a.poly().primitive_integer() == b.poly().primitive_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ExtensionConfig;
    use crate::singular::singular_points;

    fn dual(f: &HomogPoly, d_hat: i64) -> HomogPoly {
        let pts: Vec<_> = singular_points(f, &ExtensionConfig::default())
            .unwrap()
            .points
            .into_iter()
            .map(|p| p.point)
            .collect();
        dual_curve(f, &pts, d_hat, &DualCurveOptions::default()).unwrap()
    }

    #[test]
    fn conic_dual() {
        let f = HomogPoly::parse("x^2 + 2*y^2 - z^2").unwrap();
        // the dual of x^2 + 2y^2 - z^2 is u^2 + v^2/2 - w^2
        assert_eq!(dual(&f, 2).to_string(), "2*u^2 + v^2 - 2*w^2");
    }

    #[test]
    fn cuspidal_cubic_is_self_dual_up_to_coordinates() {
        let f = HomogPoly::parse("y^2*z - x^3").unwrap();
        let g = dual(&f, 3);
        assert_eq!(g.degree(), 3);
        let back = dual(&g.renamed(["x", "y", "z"]), 3);
        assert!(same_curve(&back, &f));
    }

    #[test]
    fn nodal_cubic_round_trip() {
        let f = HomogPoly::parse("y^2*z - x^2*(x + z)").unwrap();
        let g = dual(&f, 4);
        assert_eq!(g.degree(), 4);
        let back = dual(&g.renamed(["x", "y", "z"]), 3);
        assert!(same_curve(&back, &f));
    }

    #[test]
    fn oversize_input_is_refused() {
        let f = HomogPoly::parse("x^5 + y^5 + z^5").unwrap();
        assert!(matches!(
            dual_curve(&f, &[], 20, &DualCurveOptions::default()),
            Err(Error::DualFailure(_))
        ));
    }
}
