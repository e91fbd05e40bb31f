//! Versioned JSON session files: bindings in canonical text form plus the
//! active configuration. Saving then loading reproduces identical bindings.

use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value as Json};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::local_cohomology::{make_class, SopData};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingSpec};

use super::exec::{Env, Value};

const VERSION: u64 = 1;

fn ring_fields(ring: &RingSpec) -> Json {
    json!({
        "prime": ring.prime(),
        "vars": ring.ambient().vars(),
        "defining": ring.defining().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn value_json(name: &str, value: &Value) -> Option<Json> {
    match value {
        Value::Ring(r) => {
            let mut j = ring_fields(r);
            j["name"] = json!(name);
            j["kind"] = json!("ring");
            Some(j)
        }
        Value::Poly(p) => Some(json!({
            "name": name,
            "kind": "poly",
            "prime": p.ring().prime(),
            "vars": p.ring().vars(),
            "text": p.to_string(),
        })),
        Value::Ideal(i) => Some(json!({
            "name": name,
            "kind": "ideal",
            "prime": i.ring().prime(),
            "vars": i.ring().vars(),
            "gens": i.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })),
        Value::Class(c) => {
            let ring = c.sop().ring();
            let mut j = ring_fields(ring);
            j["name"] = json!(name);
            j["kind"] = json!("class");
            j["sop"] = json!(c.sop().sop().iter().map(|f| f.to_string()).collect::<Vec<_>>());
            j["rep"] = json!(c.representative().to_string());
            j["level"] = json!(c.level());
            Some(j)
        }
        _ => None,
    }
}

/// Write the persistable bindings; returns (written, skipped names).
pub fn save_session(env: &Env, path: &Path) -> Result<(usize, Vec<String>)> {
    let cfg = Config::global();
    let mut bindings = Vec::new();
    let mut skipped = Vec::new();
    for (name, value) in env.bindings() {
        match value_json(name, value) {
            Some(j) => bindings.push(j),
            None => skipped.push(name.clone()),
        }
    }
    let written = bindings.len();
    let doc = json!({
        "version": VERSION,
        "config": {
            "prime_cap": cfg.prime_cap,
            "e_max": cfg.e_max,
            "q_cap": cfg.q_cap,
            "level_cap": cfg.level_cap,
            "gb_max_basis": cfg.gb_max_basis,
            "gb_max_reductions": cfg.gb_max_reductions,
        },
        "bindings": bindings,
    });
    let text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok((written, skipped))
}

pub struct LoadedSession {
    pub bindings: Vec<(String, Value)>,
    pub config: Option<Config>,
}

fn get_str(j: &Json, key: &str) -> Result<String> {
    j.get(key)
        .and_then(|v| v.as_str())
        .map(|s| s.to_string())
        .ok_or_else(|| Error::Io(format!("session field `{key}` missing or not a string")))
}

fn get_u64(j: &Json, key: &str) -> Result<u64> {
    j.get(key)
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::Io(format!("session field `{key}` missing or not an integer")))
}

fn get_strings(j: &Json, key: &str) -> Result<Vec<String>> {
    j.get(key)
        .and_then(|v| v.as_array())
        .map(|a| {
            a.iter()
                .map(|s| s.as_str().map(|s| s.to_string()))
                .collect::<Option<Vec<_>>>()
        })
        .flatten()
        .ok_or_else(|| Error::Io(format!("session field `{key}` missing or not a string list")))
}

fn ambient_of(j: &Json) -> Result<PolyRing> {
    PolyRing::new(get_u64(j, "prime")?, get_strings(j, "vars")?)
}

fn ring_of(j: &Json) -> Result<RingSpec> {
    let ambient = ambient_of(j)?;
    let defining = get_strings(j, "defining")?
        .iter()
        .map(|t| Polynomial::parse(&ambient, t))
        .collect::<Result<Vec<_>>>()?;
    RingSpec::new(ambient, defining)
}

pub fn load_session(path: &Path) -> Result<LoadedSession> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let doc: Json = serde_json::from_str(&text).map_err(|e| Error::Io(e.to_string()))?;
    let version = get_u64(&doc, "version")?;
    if version != VERSION {
        return Err(Error::UnsupportedInput(format!(
            "session version {version} is not supported (expected {VERSION})"
        )));
    }
    let config = doc.get("config").map(|c| {
        Ok::<Config, Error>(Config {
            prime_cap: get_u64(c, "prime_cap")?,
            e_max: get_u64(c, "e_max")? as u32,
            q_cap: get_u64(c, "q_cap")?,
            level_cap: get_u64(c, "level_cap")?,
            gb_max_basis: get_u64(c, "gb_max_basis")? as usize,
            gb_max_reductions: get_u64(c, "gb_max_reductions")?,
        })
    });
    let config = match config {
        Some(c) => Some(c?),
        None => None,
    };
    let mut bindings = Vec::new();
    let entries = doc
        .get("bindings")
        .and_then(|b| b.as_array())
        .ok_or_else(|| Error::Io("session field `bindings` missing".into()))?;
    for entry in entries {
        let name = get_str(entry, "name")?;
        let kind = get_str(entry, "kind")?;
        let value = match kind.as_str() {
            "ring" => Value::Ring(ring_of(entry)?),
            "poly" => {
                let ambient = ambient_of(entry)?;
                Value::Poly(Polynomial::parse(&ambient, &get_str(entry, "text")?)?)
            }
            "ideal" => {
                let ambient = ambient_of(entry)?;
                let gens = get_strings(entry, "gens")?
                    .iter()
                    .map(|t| Polynomial::parse(&ambient, t))
                    .collect::<Result<Vec<_>>>()?;
                Value::Ideal(Ideal::new(&ambient, gens)?)
            }
            "class" => {
                let ring = ring_of(entry)?;
                let ambient = ring.ambient().clone();
                let sop = get_strings(entry, "sop")?
                    .iter()
                    .map(|t| Polynomial::parse(&ambient, t))
                    .collect::<Result<Vec<_>>>()?;
                let sop = Arc::new(SopData::new(ring, sop)?);
                let rep = Polynomial::parse(&ambient, &get_str(entry, "rep")?)?;
                let level = get_u64(entry, "level")? as u32;
                Value::Class(make_class(&rep, level, &sop)?)
            }
            other => {
                return Err(Error::UnsupportedInput(format!(
                    "unknown session binding kind `{other}`"
                )))
            }
        };
        bindings.push((name, value));
    }
    Ok(LoadedSession { bindings, config })
}
