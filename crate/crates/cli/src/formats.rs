//! JSON files for instances, colorings and verdicts. Numbers are JSON
//! integers or strings holding an exact rational such as `"-7/3"`.

use std::str::FromStr;

use regioncolor_core::geom::{BaselineRect, BottomlessRect, HalfPlane, Point, Side};
use regioncolor_core::instance::UnknownFamily;
use regioncolor_core::{Coloring, Family, Instance, Rational, Realizer, Verdict};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad number `{0}`")]
    Number(String),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Family(#[from] UnknownFamily),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn value(&self) -> Result<Rational, FormatError> {
        match self {
            Num::Int(v) => Ok(Rational::from_integer(*v)),
            Num::Text(s) => Rational::from_str(s).map_err(|_| FormatError::Number(s.clone())),
        }
    }

    fn of(r: &Rational) -> Num {
        match r.as_i64() {
            Some(v) => Num::Int(v),
            None => Num::Text(r.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Region {
    Above,
    Below,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RectJson {
    a: Num,
    b: Num,
    c: Num,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BaselineJson {
    a: Num,
    b: Num,
    bottom: Num,
    top: Num,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HalfPlaneJson {
    slope: Num,
    intercept: Num,
    region: Region,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<[Num; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rects: Option<Vec<RectJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    halfplanes: Option<Vec<HalfPlaneJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    baseline_rects: Option<Vec<BaselineJson>>,
}

/// An instance file: the objects and, optionally, the family they are meant for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDoc {
    pub family: Option<Family>,
    pub instance: Instance,
}

fn collect<T, U>(items: &[T], f: impl Fn(&T) -> Result<U, FormatError>) -> Result<Vec<U>, FormatError> {
    items.iter().map(f).collect()
}

pub fn parse_instance(text: &str) -> Result<InstanceDoc, FormatError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    let family = file.family.as_deref().map(Family::from_str).transpose()?;
    let present = [file.points.is_some(), file.rects.is_some(), file.halfplanes.is_some(), file.baseline_rects.is_some()];
    if present.iter().filter(|&&p| p).count() != 1 {
        return Err(FormatError::Shape(
            "expected exactly one of `points`, `rects`, `halfplanes`, `baseline_rects`".into(),
        ));
    }
    let instance = if let Some(points) = &file.points {
        Instance::Points(collect(points, |[x, y]| Ok(Point { x: x.value()?, y: y.value()? }))?)
    } else if let Some(rects) = &file.rects {
        Instance::BottomlessRects(collect(rects, |r| {
            Ok(BottomlessRect { a: r.a.value()?, b: r.b.value()?, c: r.c.value()? })
        })?)
    } else if let Some(hs) = &file.halfplanes {
        Instance::HalfPlanes(collect(hs, |h| {
            let region = match h.region {
                Region::Above => Side::Above,
                Region::Below => Side::Below,
            };
            Ok(HalfPlane { slope: h.slope.value()?, intercept: h.intercept.value()?, region })
        })?)
    } else {
        let rects = file.baseline_rects.as_ref().unwrap();
        Instance::BaselineRects(collect(rects, |r| {
            Ok(BaselineRect { a: r.a.value()?, b: r.b.value()?, bottom: r.bottom.value()?, top: r.top.value()? })
        })?)
    };
    Ok(InstanceDoc { family, instance })
}

fn rect_json(r: &BottomlessRect) -> RectJson {
    RectJson { a: Num::of(&r.a), b: Num::of(&r.b), c: Num::of(&r.c) }
}

fn baseline_json(r: &BaselineRect) -> BaselineJson {
    BaselineJson { a: Num::of(&r.a), b: Num::of(&r.b), bottom: Num::of(&r.bottom), top: Num::of(&r.top) }
}

fn halfplane_json(h: &HalfPlane) -> HalfPlaneJson {
    let region = match h.region {
        Side::Above => Region::Above,
        Side::Below => Region::Below,
    };
    HalfPlaneJson { slope: Num::of(&h.slope), intercept: Num::of(&h.intercept), region }
}

fn point_json(p: &Point) -> [Num; 2] {
    [Num::of(&p.x), Num::of(&p.y)]
}

pub fn instance_to_json(doc: &InstanceDoc) -> String {
    let mut file = InstanceFile { family: doc.family.map(|f| f.name().to_string()), ..Default::default() };
    match &doc.instance {
        Instance::Points(p) => file.points = Some(p.iter().map(point_json).collect()),
        Instance::BottomlessRects(r) => file.rects = Some(r.iter().map(rect_json).collect()),
        Instance::HalfPlanes(h) => file.halfplanes = Some(h.iter().map(halfplane_json).collect()),
        Instance::BaselineRects(r) => file.baseline_rects = Some(r.iter().map(baseline_json).collect()),
    }
    serde_json::to_string_pretty(&file).expect("instances serialize") + "\n"
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringFile {
    palette: usize,
    colors: Vec<usize>,
}

pub fn parse_coloring(text: &str) -> Result<Coloring, FormatError> {
    let file: ColoringFile = serde_json::from_str(text)?;
    if let Some(c) = file.colors.iter().find(|&&c| c >= file.palette) {
        return Err(FormatError::Shape(format!("color {c} outside palette {}", file.palette)));
    }
    Ok(Coloring::new(file.palette, file.colors))
}

pub fn coloring_to_json(col: &Coloring) -> String {
    let file = ColoringFile { palette: col.palette, colors: col.colors.clone() };
    serde_json::to_string(&file).expect("colorings serialize") + "\n"
}

pub fn realizer_to_json(r: &Realizer) -> Value {
    fn to(v: impl Serialize) -> Value {
        serde_json::to_value(v).expect("realizers serialize")
    }
    match r {
        Realizer::Bottomless(rect) => json!({ "bottomless": to(rect_json(rect)) }),
        Realizer::Baseline(rect) => json!({ "baseline": to(baseline_json(rect)) }),
        Realizer::HalfPlane(h) => json!({ "halfplane": to(halfplane_json(h)) }),
        Realizer::Point(p) => json!({ "point": to(point_json(p)) }),
    }
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    match &v.witness {
        None => json!({ "valid": true }),
        Some(w) => json!({
            "valid": false,
            "witness": { "edge": w.edge, "realizer": realizer_to_json(&w.realizer) },
        }),
    }
}
