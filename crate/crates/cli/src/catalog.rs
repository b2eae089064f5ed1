//! Catalog documents and their serialized forms.
//!
//! Exact values must survive serialization, so every coordinate is written
//! as a `numstr`: `"p/q"` for rationals, `"p/q+r/s*sqrt(n)"` (or with `-`)
//! for quadratic surds. JSON and CSV encode the same entry information.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use diogon::exact::{Rat, Surd};
use diogon::model::CatalogEntry;
use diogon::search::{NgonResult, PointSetRecord, SearchConfig, SearchResult};

/// `p/q`, with the denominator always explicit.
pub fn rat_str(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `p/q` when rational, otherwise `p/q+r/s*sqrt(n)` with the coefficient
/// sign folded into the separator.
pub fn surd_str(s: &Surd) -> String {
    if s.is_rational() {
        rat_str(s.base())
    } else if s.coeff().is_negative() {
        format!(
            "{}-{}*sqrt({})",
            rat_str(s.base()),
            rat_str(&s.coeff().abs()),
            s.radicand()
        )
    } else {
        format!(
            "{}+{}*sqrt({})",
            rat_str(s.base()),
            rat_str(s.coeff()),
            s.radicand()
        )
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().with_context(|| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.trim().parse().with_context(|| format!("bad denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        bail!("zero denominator in {s:?}");
    }
    Ok(Rat::new(n, d))
}

pub fn parse_surd(s: &str) -> Result<Surd> {
    let Some(star) = s.find("*sqrt(") else {
        return Ok(Surd::from_rat(parse_rat(s)?));
    };
    let left = &s[..star];
    let rad = s[star + 6..]
        .strip_suffix(')')
        .ok_or_else(|| anyhow!("unterminated sqrt in {s:?}"))?;
    let radicand: u64 = rad.parse().with_context(|| format!("bad radicand in {s:?}"))?;
    // Split base and coefficient at the sign that follows a digit.
    let mut split = None;
    for (i, ch) in left.char_indices().skip(1) {
        if (ch == '+' || ch == '-')
            && left[..i].chars().last().is_some_and(|p| p.is_ascii_digit())
        {
            split = Some((i, ch));
            break;
        }
    }
    let (i, sign) = split.ok_or_else(|| anyhow!("missing coefficient separator in {s:?}"))?;
    let base = parse_rat(&left[..i])?;
    let coeff = parse_rat(&left[i + 1..])?;
    let coeff = if sign == '-' { -coeff } else { coeff };
    Ok(Surd::new(base, coeff, radicand))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistancesDoc {
    pub ab: u32,
    pub bc: u32,
    pub cd: u32,
    pub da: u32,
    pub ac: u32,
    pub bd: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsDoc {
    pub cyclic: bool,
    pub tangential: bool,
    pub trapezoid: bool,
    pub parallelogram: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KRoleDoc {
    pub k: u32,
    pub role: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub distances: DistancesDoc,
    pub class: String,
    pub flags: FlagsDoc,
    pub k_roles: Vec<KRoleDoc>,
    pub radicand: u64,
    pub coords: Vec<[String; 2]>,
}

impl EntryDoc {
    pub fn from_entry(e: &CatalogEntry) -> Self {
        let q = e.canonical;
        let coords = (0..4)
            .map(|i| {
                let (x, y) = e.embedding.point(i);
                [surd_str(&x), surd_str(&y)]
            })
            .collect();
        EntryDoc {
            distances: DistancesDoc {
                ab: q.ab,
                bc: q.bc,
                cd: q.cd,
                da: q.da,
                ac: q.ac,
                bd: q.bd,
            },
            class: e.class.kind_str().to_string(),
            flags: FlagsDoc {
                cyclic: e.cyclic,
                tangential: e.tangential,
                trapezoid: e.trapezoid.is_trapezoid(),
                parallelogram: e.trapezoid == diogon::model::TrapezoidKind::Parallelogram,
            },
            k_roles: e
                .k_roles
                .iter()
                .map(|r| KRoleDoc {
                    k: r.k,
                    role: r.role.as_str().to_string(),
                })
                .collect(),
            radicand: e.radicand,
            coords,
        }
    }

    pub fn distances_array(&self) -> [u32; 6] {
        let d = &self.distances;
        [d.ab, d.bc, d.cd, d.da, d.ac, d.bd]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub n: u8,
    pub k: u32,
    pub k_role: String,
    pub dmax: u32,
    pub shape: String,
    pub require_cyclic: bool,
    pub require_tangential: bool,
    pub require_trapezoid: bool,
    pub include_degenerate: bool,
    pub threads: usize,
}

impl ConfigDoc {
    pub fn from_config(cfg: &SearchConfig) -> Self {
        ConfigDoc {
            n: cfg.n,
            k: cfg.k,
            k_role: cfg.k_role.as_str().to_string(),
            dmax: cfg.dmax,
            shape: cfg.shape.as_str().to_string(),
            require_cyclic: cfg.require_cyclic,
            require_tangential: cfg.require_tangential,
            require_trapezoid: cfg.require_trapezoid,
            include_degenerate: cfg.include_degenerate,
            threads: cfg.threads,
        }
    }

    /// The digest-relevant part: everything except the thread count, which
    /// cannot change the result.
    pub fn same_search(&self, other: &ConfigDoc) -> bool {
        let mut a = self.clone();
        let mut b = other.clone();
        a.threads = 1;
        b.threads = 1;
        a == b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestDoc {
    pub version: String,
    pub config: ConfigDoc,
    pub started: String,
    pub finished: String,
    pub visited: u64,
    pub digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDoc {
    pub manifest: ManifestDoc,
    pub entries: Vec<EntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetDoc {
    pub n: u8,
    pub dists: Vec<Vec<u32>>,
    pub radicand: u64,
    pub coords: Vec<[String; 2]>,
}

impl PointSetDoc {
    pub fn from_record(r: &PointSetRecord) -> Self {
        let coords = (0..r.points.len())
            .map(|i| {
                let (x, y) = r.points.point(i);
                [surd_str(&x), surd_str(&y)]
            })
            .collect();
        PointSetDoc {
            n: r.points.len() as u8,
            dists: r.dists.clone(),
            radicand: r.points.radicand(),
            coords,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetCatalogDoc {
    pub manifest: ManifestDoc,
    pub pointsets: Vec<PointSetDoc>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCatalogDoc {
    pub manifest: ManifestDoc,
    pub triangles: Vec<[u32; 3]>,
}

/// Content digest of any serializable payload, as `sha256:<hex>`.
pub fn digest_of<T: Serialize>(payload: &T) -> String {
    let json = serde_json::to_string(payload).expect("serializable payload");
    let hash = Sha256::digest(json.as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn manifest(
    cfg: &SearchConfig,
    started: String,
    finished: String,
    visited: u64,
    digest: String,
) -> ManifestDoc {
    ManifestDoc {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: ConfigDoc::from_config(cfg),
        started,
        finished,
        visited,
        digest,
    }
}

pub fn catalog_doc(
    cfg: &SearchConfig,
    res: &SearchResult,
    started: String,
    finished: String,
) -> CatalogDoc {
    let entries: Vec<EntryDoc> = res.entries.iter().map(EntryDoc::from_entry).collect();
    let digest = digest_of(&entries);
    CatalogDoc {
        manifest: manifest(cfg, started, finished, res.visited, digest),
        entries,
    }
}

pub fn pointset_doc(
    cfg: &SearchConfig,
    res: &NgonResult,
    started: String,
    finished: String,
) -> PointSetCatalogDoc {
    let pointsets: Vec<PointSetDoc> = res.sets.iter().map(PointSetDoc::from_record).collect();
    let digest = digest_of(&pointsets);
    PointSetCatalogDoc {
        manifest: manifest(cfg, started, finished, res.visited, digest),
        pointsets,
        complete: res.complete,
    }
}

pub fn parse_catalog(json: &str) -> Result<CatalogDoc> {
    Ok(serde_json::from_str(json)?)
}

const CSV_HEADER: [&str; 21] = [
    "ab", "bc", "cd", "da", "ac", "bd", "class", "cyclic", "tangential", "trapezoid",
    "parallelogram", "k_roles", "radicand", "ax", "ay", "bx", "by", "cx", "cy", "dx", "dy",
];

/// Entries as CSV, one row per entry, identical information to the JSON
/// entry objects.
pub fn entries_csv(entries: &[EntryDoc]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for e in entries {
        let d = &e.distances;
        let k_roles = e
            .k_roles
            .iter()
            .map(|r| format!("{}:{}", r.k, r.role))
            .collect::<Vec<_>>()
            .join(";");
        let mut rec = vec![
            d.ab.to_string(),
            d.bc.to_string(),
            d.cd.to_string(),
            d.da.to_string(),
            d.ac.to_string(),
            d.bd.to_string(),
            e.class.clone(),
            e.flags.cyclic.to_string(),
            e.flags.tangential.to_string(),
            e.flags.trapezoid.to_string(),
            e.flags.parallelogram.to_string(),
            k_roles,
            e.radicand.to_string(),
        ];
        for point in &e.coords {
            rec.push(point[0].clone());
            rec.push(point[1].clone());
        }
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn parse_entries_csv(text: &str) -> Result<Vec<EntryDoc>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        if rec.len() != CSV_HEADER.len() {
            bail!("expected {} fields, got {}", CSV_HEADER.len(), rec.len());
        }
        let get = |i: usize| rec.get(i).unwrap().to_string();
        let num = |i: usize| -> Result<u32> { Ok(rec.get(i).unwrap().parse()?) };
        let flag = |i: usize| -> Result<bool> { Ok(rec.get(i).unwrap().parse()?) };
        let k_roles = rec
            .get(11)
            .unwrap()
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|s| {
                let (k, role) = s
                    .split_once(':')
                    .ok_or_else(|| anyhow!("bad k_role field {s:?}"))?;
                Ok(KRoleDoc {
                    k: k.parse()?,
                    role: role.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let coords = (0..4)
            .map(|p| [get(13 + 2 * p), get(14 + 2 * p)])
            .collect();
        out.push(EntryDoc {
            distances: DistancesDoc {
                ab: num(0)?,
                bc: num(1)?,
                cd: num(2)?,
                da: num(3)?,
                ac: num(4)?,
                bd: num(5)?,
            },
            class: get(6),
            flags: FlagsDoc {
                cyclic: flag(7)?,
                tangential: flag(8)?,
                trapezoid: flag(9)?,
                parallelogram: flag(10)?,
            },
            k_roles,
            radicand: rec.get(12).unwrap().parse()?,
            coords,
        });
    }
    Ok(out)
}
