use super::ast::{ConstructionExpr, SurfaceExpr};
use super::{DslError, DslErrorKind};
use crate::catalog::{instantiate, SurfaceModel};
use crate::constructions::{blow_up, log_transform, product, Curve, ThreefoldModel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    Surface(SurfaceModel),
    Threefold(ThreefoldModel),
}

pub fn evaluate(e: &ConstructionExpr) -> Result<Model, DslError> {
    match e {
        ConstructionExpr::Surface(s) => evaluate_surface(s).map(Model::Surface),
        ConstructionExpr::Product { surface, genus, span } => {
            let s = evaluate_surface(surface)?;
            product(&s, Curve::new(*genus))
                .map(Model::Threefold)
                .map_err(|err| DslError::new(DslErrorKind::Eval(err), *span))
        }
    }
}

pub fn evaluate_surface(e: &SurfaceExpr) -> Result<SurfaceModel, DslError> {
    let at = |span| move |err| DslError::new(DslErrorKind::Eval(err), span);
    match e {
        SurfaceExpr::Family { family, span } => instantiate(*family).map_err(at(*span)),
        SurfaceExpr::BlowUp { child, k, span } => blow_up(&evaluate_surface(child)?, *k).map_err(at(*span)),
        SurfaceExpr::LogTransform { child, p, q, span } => {
            log_transform(&evaluate_surface(child)?, *p, *q).map_err(at(*span))
        }
    }
}
