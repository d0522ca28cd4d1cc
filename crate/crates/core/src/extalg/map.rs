use std::collections::HashMap;

use crate::coeffring::{same_chart, ChartKind, ChartRef, Poly, ScalarExpr};

use super::form::DiffForm;
use super::ExtError;

/// A map between charts given by the images of the target coordinates,
/// expressed on the source chart.
#[derive(Clone, Debug)]
pub struct ChartMap {
    source: ChartRef,
    target: ChartRef,
    images: Vec<ScalarExpr>,
    radical_image: Option<ScalarExpr>,
}

impl ChartMap {
    /// Checks the image count and charts, conjugate pairing on complex
    /// targets, and `radical_image² = Σ z_j·zb_j` when the target has a
    /// radical.
    pub fn new(
        source: &ChartRef,
        target: &ChartRef,
        images: Vec<ScalarExpr>,
        radical_image: Option<ScalarExpr>,
    ) -> Result<Self, ExtError> {
        if images.len() != target.num_vars() {
            return Err(ExtError::InvalidMap(format!(
                "{} images for {} target variables",
                images.len(),
                target.num_vars()
            )));
        }
        for e in images.iter().chain(radical_image.iter()) {
            if !same_chart(e.chart(), source) {
                return Err(ExtError::chart_mismatch(source, e.chart()));
            }
        }
        if target.kind() == ChartKind::Complex {
            for j in 0..target.complex_dim() {
                if images[2 * j + 1] != images[2 * j].conjugate() {
                    return Err(ExtError::InvalidMap(format!(
                        "image of {} is not the conjugate of the image of {}",
                        target.variables()[2 * j + 1],
                        target.variables()[2 * j]
                    )));
                }
            }
        }
        match (target.has_radical(), &radical_image) {
            (true, None) => return Err(ExtError::InvalidMap("target has a radical; radical_image required".into())),
            (false, Some(_)) => return Err(ExtError::InvalidMap("target has no radical".into())),
            (true, Some(r)) => {
                let mut norm = ScalarExpr::zero(source);
                for j in 0..target.complex_dim() {
                    norm = &norm + &(&images[2 * j] * &images[2 * j + 1]);
                }
                if r * r != norm {
                    return Err(ExtError::InvalidMap(
                        "radical_image squared differs from the norm of the image".into(),
                    ));
                }
            }
            (false, None) => {}
        }
        Ok(ChartMap {
            source: source.clone(),
            target: target.clone(),
            images,
            radical_image,
        })
    }

    /// Map to a complex target given only the holomorphic images; the
    /// conjugates are filled in.
    pub fn holomorphic(
        source: &ChartRef,
        target: &ChartRef,
        z_images: Vec<ScalarExpr>,
        radical_image: Option<ScalarExpr>,
    ) -> Result<Self, ExtError> {
        let mut images = Vec::with_capacity(2 * z_images.len());
        for z in z_images {
            let zb = z.conjugate();
            images.push(z);
            images.push(zb);
        }
        Self::new(source, target, images, radical_image)
    }

    pub fn source(&self) -> &ChartRef {
        &self.source
    }

    pub fn target(&self) -> &ChartRef {
        &self.target
    }

    pub fn images(&self) -> &[ScalarExpr] {
        &self.images
    }

    pub fn radical_image(&self) -> Option<&ScalarExpr> {
        self.radical_image.as_ref()
    }

    fn slot_image(&self, slot: usize) -> &ScalarExpr {
        if slot < self.images.len() {
            &self.images[slot]
        } else {
            self.radical_image.as_ref().expect("radical slot without image")
        }
    }

    fn pull_poly(&self, p: &Poly, powers: &mut HashMap<(usize, u8), ScalarExpr>) -> ScalarExpr {
        let mut out = ScalarExpr::zero(&self.source);
        for (m, c) in p.terms() {
            let mut t = ScalarExpr::constant(&self.source, c.clone());
            for slot in 0..self.target.num_slots() {
                let e = m.exp(slot);
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((slot, e))
                    .or_insert_with(|| self.slot_image(slot).pow(u32::from(e)))
                    .clone();
                t = &t * &pw;
            }
            out = &out + &t;
        }
        out
    }

    /// Pull a function on the target back to the source.
    pub fn pullback_function(&self, f: &ScalarExpr) -> Result<ScalarExpr, ExtError> {
        if !same_chart(f.chart(), &self.target) {
            return Err(ExtError::chart_mismatch(&self.target, f.chart()));
        }
        let mut powers = HashMap::new();
        let num = self.pull_poly(f.numerator(), &mut powers);
        let mut den = ScalarExpr::one(&self.source);
        for (b, e) in f.denominator_factors() {
            den = &den * &self.pull_poly(b, &mut powers).pow(*e);
        }
        num.try_div(&den).map_err(|_| ExtError::PullbackSingular)
    }

    pub fn pullback(&self, a: &DiffForm) -> Result<DiffForm, ExtError> {
        if !same_chart(a.chart(), &self.target) {
            return Err(ExtError::chart_mismatch(&self.target, a.chart()));
        }
        let differentials: Vec<DiffForm> = self
            .images
            .iter()
            .map(|img| DiffForm::function(img).exterior_derivative())
            .collect();
        let mut out = DiffForm::zero(&self.source);
        for (idx, c) in a.terms() {
            let mut t = DiffForm::function(&self.pullback_function(c)?);
            for &v in idx {
                t = t.wedge(&differentials[v])?;
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }
}
