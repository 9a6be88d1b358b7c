use std::fs;
use std::path::Path;

use ecover_core::conformance;
use ecover_core::degeneration::{deform, Slot};
use ecover_core::exact::rat;
use ecover_core::{build_family, staircase, CertificateBlock, CoverDocument, Error, QPoly, RatFunc, Var};
use serde_json::{json, Map, Value};

use crate::report::{Check, Certificate};

/// Failure before any mathematical check ran: exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

pub type Outcome = Result<Certificate, UsageError>;

fn check_genus(genus: i64, min: i64, max: i64) -> Result<(), UsageError> {
    if genus < min {
        return Err(UsageError(format!("genus must be at least {min}, got {genus}")));
    }
    if genus > max {
        return Err(UsageError(format!("genus {genus} exceeds --max-genus {max}")));
    }
    Ok(())
}

fn passed_or_failed(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

pub fn generate(genus: i64, max_genus: i64) -> Outcome {
    check_genus(genus, 1, max_genus)?;
    let family = build_family(genus)?;
    let cert = family.certify()?;
    let n = family.cover.degree;

    let mut out = Certificate::new("generate", json!({ "genus": genus }))
        .with("cover", CoverDocument::from_cover(&family.cover))
        .with("certificate", CertificateBlock::from(&cert))
        .with("j", family.j.to_string())
        .with("k", family.k.to_string());
    out.check(Check::new("cover_identity", cert.identity.holds, format!("difference = {}", cert.identity.difference)));
    let expected = RatFunc::from_poly(QPoly::monomial(rat(n as i64), family.genus - 1, Var::X));
    out.check(Check::new(
        "pullback_law",
        cert.pullback == expected,
        format!("lambda = {} (expected {expected})", cert.pullback),
    ));
    let r = &cert.ramification;
    out.check(Check::new(
        "total_ramification",
        r.ramification_index == n && r.vanishing_order_at_origin == 2 * family.genus - 2,
        format!(
            "e = {} over x = {}, lambda vanishes to order {} at x = 0",
            r.ramification_index, r.branch_point_x, r.vanishing_order_at_origin
        ),
    ));
    out.check(Check::new("riemann_hurwitz", r.riemann_hurwitz_balanced, format!("2*{}-2 = {}*0 + ({}-1)", family.genus, n, r.ramification_index)));
    out.check(Check::new(
        "companion_norm",
        cert.companions.norm_identity,
        format!("(x+1)*k^2 = j^2 + x^{n} {}", passed_or_failed(cert.companions.norm_identity)),
    ));
    out.check(Check::new(
        "companion_derivative",
        cert.companions.derivative_identity,
        format!("{n}*j - 2*x*j' = {n}*k {}", passed_or_failed(cert.companions.derivative_identity)),
    ));
    Ok(out)
}

/// The equations of a `generate` certificate as plain text.
pub fn generate_text(cert: &Certificate) -> String {
    let field = |outer: &str, inner: &str| {
        cert.payload[outer][inner].as_str().unwrap_or_default().to_string()
    };
    let top = |key: &str| cert.payload[key].as_str().unwrap_or_default().to_string();
    let mut out = String::new();
    out.push_str(&format!("genus {}, degree {}\n", cert.inputs["genus"], cert.payload["cover"]["degree"]));
    out.push_str(&format!("C_t: y^2 = {}\n", field("cover", "source_rhs")));
    out.push_str(&format!("E_t: y^2 = {}\n", field("cover", "target_rhs")));
    out.push_str(&format!("f1(x) = {}\n", field("cover", "f1")));
    out.push_str(&format!("f2(x) = {}\n", field("cover", "f2")));
    out.push_str("(x, y) -> (f1(x), f2(x)*y)\n");
    out.push_str(&format!("j(x) = {}\n", top("j")));
    out.push_str(&format!("k(x) = {}\n", top("k")));
    out.push_str(&format!("f^*(dx/y) = {} dx/y\n", field("certificate", "pullback")));
    out.push_str("checks:\n");
    out.push_str(&cert.checks_as_text());
    out
}

pub fn verify(path: &Path) -> Outcome {
    let src = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&src)
        .map_err(|e| UsageError(format!("{}: not valid JSON: {e}", path.display())))?;
    let doc = CoverDocument::from_value(&value)?;
    let cover = doc.to_cover()?;

    let mut out = Certificate::new("verify", json!({ "file": path.display().to_string() })).with("cover", &doc);
    let identity = cover.verify_identity();
    out.check(Check::new("cover_identity", identity.holds, format!("difference = {}", identity.difference)));
    if identity.holds {
        match cover.ramification_report() {
            Ok(r) => {
                out.check(Check::new(
                    "total_ramification",
                    r.ramification_index == cover.degree,
                    format!("e = {} over x = {}, degree {}", r.ramification_index, r.branch_point_x, cover.degree),
                ));
                out.check(Check::new(
                    "riemann_hurwitz",
                    r.riemann_hurwitz_balanced,
                    format!("pullback {} dx/y", r.pullback_coefficient),
                ));
            }
            Err(Error::UnsupportedShape(why)) => eprintln!("ramification not analysed: {why}"),
            Err(e) => out.check(Check::new("ramification", false, e.to_string())),
        }
    }
    Ok(out)
}

pub fn origami(genus: i64, max_genus: i64) -> Outcome {
    check_genus(genus, 1, max_genus)?;
    let d = staircase(genus)?;
    let n = d.n();
    let cycle_type = d.monodromy_cycle_type();
    let vertices = d.vertex_count();
    let computed = d.genus();
    let mut out = Certificate::new("origami", json!({ "genus": genus }))
        .with("diagram", d.to_string())
        .with("squares", n)
        .with("monodromy", d.commutator().to_string())
        .with("cycle_type", &cycle_type)
        .with("vertex_count", vertices)
        .with("genus", computed.as_ref().ok());
    out.check(Check::new("connected", d.is_connected(), format!("{n} squares")));
    out.check(Check::new("single_cycle", cycle_type == [n], format!("cycle type {cycle_type:?}")));
    out.check(Check::new("one_vertex", vertices == 1, format!("vertex count {vertices}")));
    out.check(Check::new(
        "genus",
        computed.as_ref().ok() == Some(&(genus as usize)),
        match &computed {
            Ok(c) => format!("{c}, expected {genus}"),
            Err(e) => e.to_string(),
        },
    ));
    Ok(out)
}

fn slot_text(slot: Slot) -> String {
    match slot {
        Slot::Curve(e) => format!("curve x^{e}"),
        Slot::Denominator(e) => format!("denominator x^{e}"),
        Slot::F2Numerator(e) => format!("f2 numerator x^{e}"),
    }
}

pub fn degenerate(genus: i64, max_genus: i64) -> Outcome {
    check_genus(genus, 2, max_genus)?;
    let mut out = Certificate::new("degenerate", json!({ "genus": genus }));
    match deform(genus) {
        Ok(d) => {
            let r = &d.report;
            let mut coefficients = Map::new();
            for (u, v) in r.unknowns.iter().zip(&r.values) {
                coefficients.insert(u.name.clone(), Value::String(v.to_string()));
            }
            let unknowns: Vec<Value> =
                r.unknowns.iter().map(|u| json!({ "name": u.name, "perturbs": slot_text(u.slot) })).collect();
            let report = json!({
                "ansatz": format!(
                    "source x^{0}(x+1) + t*(curve unknowns), map denominator and f2 numerator perturbed at order t, target x(x+1)(x+t)",
                    2 * genus
                ),
                "unknowns": unknowns,
                "rows": r.rows,
                "cols": r.cols,
                "coefficients": coefficients,
                "nullity": r.nullity,
                "exact": r.exact,
            });
            out = out.with("report", report).with("cover", CoverDocument::from_cover(&d.family.cover));
            out.check(Check::new("exact_in_t", r.exact, "cover identity holds over Q(t)"));
            out.check(Check::new(
                "map_unperturbed",
                r.map_perturbation_is_zero(),
                "solved map perturbations vanish",
            ));
            let explicit = build_family(genus)?;
            out.check(Check::new(
                "agrees_with_generate",
                d.family == explicit,
                format!("C_t: y^2 = {}", d.family.cover.source.rhs()),
            ));
        }
        Err(e @ (Error::DeformationFailed(_) | Error::FirstOrderOnly(_) | Error::Pipeline(_))) => {
            out.check(Check::new("deformation", false, e.to_string()));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

pub fn selftest(max_genus: i64) -> Outcome {
    check_genus(max_genus, 1, i64::MAX)?;
    let mut out = Certificate::new("selftest", json!({ "max_genus": max_genus }));
    for c in conformance::run_all(max_genus) {
        eprintln!("{}", c.line());
        out.check(Check::new(&format!("criterion_{}", c.id), c.passed, format!("{}: {}", c.title, c.detail)));
    }
    Ok(out)
}
