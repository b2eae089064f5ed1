//! Resumable search checkpoints: the manifest-relevant configuration, the
//! index of the last completed partition, and the entries found so far.
//! Resuming re-verifies the stored digest before continuing.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use diogon::model::{CatalogEntry, QuadDistances};
use diogon::search::{merge_chunk_results, partition, run_chunks_threaded, SearchConfig};

use crate::catalog::{digest_of, ConfigDoc, EntryDoc};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointDoc {
    pub version: String,
    pub config: ConfigDoc,
    pub completed_chunks: usize,
    pub visited: u64,
    pub entries_digest: String,
    pub entries: Vec<EntryDoc>,
}

pub fn save(path: &Path, doc: &CheckpointDoc) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_string(doc)?)
        .with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming to {}", path.display()))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Option<CheckpointDoc>> {
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Some(serde_json::from_str(&text)?))
}

/// Runs the quadrilateral search with chunk-level checkpointing. A fresh run
/// writes a checkpoint after every `every` chunks; an interrupted run is
/// resumed from the stored partition index after the digest and the rebuilt
/// entry prefix are verified.
pub fn search_with_checkpoint(
    cfg: &SearchConfig,
    path: &Path,
    every: usize,
) -> Result<(Vec<CatalogEntry>, u64)> {
    let every = every.max(1);
    let chunks = partition(cfg);
    let mut state: BTreeMap<QuadDistances, CatalogEntry> = BTreeMap::new();
    let mut visited = 0u64;
    let mut next_chunk = 0usize;

    if let Some(doc) = load(path)? {
        if doc.version != env!("CARGO_PKG_VERSION") {
            bail!(
                "checkpoint {} was written by version {}, not {}",
                path.display(),
                doc.version,
                env!("CARGO_PKG_VERSION")
            );
        }
        if !doc.config.same_search(&ConfigDoc::from_config(cfg)) {
            bail!("checkpoint {} holds a different search", path.display());
        }
        if doc.completed_chunks > chunks.len() {
            bail!("checkpoint {} is ahead of this partition", path.display());
        }
        if digest_of(&doc.entries) != doc.entries_digest {
            bail!("checkpoint {} failed digest verification", path.display());
        }
        for stored in &doc.entries {
            let q = QuadDistances::from_array(stored.distances_array());
            let entry = CatalogEntry::build(&q, cfg.k)
                .with_context(|| format!("checkpoint entry {q} no longer validates"))?;
            let rebuilt = EntryDoc::from_entry(&entry);
            if &rebuilt != stored {
                bail!("checkpoint entry {q} does not match its stored form");
            }
            state.insert(entry.canonical, entry);
        }
        visited = doc.visited;
        next_chunk = doc.completed_chunks;
    }

    while next_chunk < chunks.len() {
        let end = (next_chunk + every).min(chunks.len());
        let results = run_chunks_threaded(cfg, &chunks[next_chunk..end]);
        let (entries, batch_visited) = merge_chunk_results(results);
        visited += batch_visited;
        for e in entries {
            state.entry(e.canonical).or_insert(e);
        }
        next_chunk = end;
        let entry_docs: Vec<EntryDoc> = state.values().map(EntryDoc::from_entry).collect();
        let doc = CheckpointDoc {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config: ConfigDoc::from_config(cfg),
            completed_chunks: next_chunk,
            visited,
            entries_digest: digest_of(&entry_docs),
            entries: entry_docs,
        };
        save(path, &doc)?;
    }

    Ok((state.into_values().collect(), visited))
}
