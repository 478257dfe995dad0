//! On-disk character cache.
//!
//! Layout, all integers little-endian `u64`:
//!
//! ```text
//! header : magic "RGWCHR01" | degree | record count
//! record : payload length | payload | FNV-1a checksum of payload
//! payload: d | len ρ | ρ parts.. | len μ | μ parts.. | len v | v (signed LE bytes)
//! ```
//!
//! Partitions are written as descending part lists. A file that fails any
//! check is ignored and the table recomputed.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;

use super::CharacterTable;
use crate::partitions::{partitions_of, Partition};

const MAGIC: &[u8; 8] = b"RGWCHR01";

pub fn cache_file_name(degree: u32) -> String {
    format!("characters-d{degree}.bin")
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn put(buf: &mut Vec<u8>, x: u64) {
    buf.extend_from_slice(&x.to_le_bytes());
}

fn put_partition(buf: &mut Vec<u8>, p: &Partition) {
    let parts = p.parts();
    put(buf, parts.len() as u64);
    for k in parts {
        put(buf, u64::from(k));
    }
}

fn encode_record(d: u32, rho: &Partition, mu: &Partition, value: &BigInt) -> Vec<u8> {
    let mut payload = Vec::new();
    put(&mut payload, u64::from(d));
    put_partition(&mut payload, rho);
    put_partition(&mut payload, mu);
    let bytes = value.to_signed_bytes_le();
    put(&mut payload, bytes.len() as u64);
    payload.extend_from_slice(&bytes);

    let mut record = Vec::with_capacity(payload.len() + 16);
    put(&mut record, payload.len() as u64);
    record.extend_from_slice(&payload);
    put(&mut record, fnv1a(&payload));
    record
}

pub fn encode(table: &CharacterTable) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    put(&mut out, u64::from(table.degree()));
    let n = table.partitions().len() as u64;
    put(&mut out, n * n);
    for (rho, mu, v) in table.iter() {
        out.extend_from_slice(&encode_record(table.degree(), rho, mu, v));
    }
    out
}

/// Writes through a temporary file so readers never see a torn cache.
pub fn write_cache(path: &Path, table: &CharacterTable) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&encode(table))?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

pub fn read_cache(path: &Path, degree: u32) -> Option<CharacterTable> {
    let bytes = fs::read(path).ok()?;
    decode(&bytes, degree)
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        let end = self.pos.checked_add(n)?;
        let out = self.bytes.get(self.pos..end)?;
        self.pos = end;
        Some(out)
    }

    fn u64(&mut self) -> Option<u64> {
        Some(u64::from_le_bytes(self.take(8)?.try_into().ok()?))
    }

    fn partition(&mut self) -> Option<Partition> {
        let len = self.u64()?;
        if len > 1 << 20 {
            return None;
        }
        let mut parts = Vec::with_capacity(len as usize);
        for _ in 0..len {
            parts.push(u32::try_from(self.u64()?).ok()?);
        }
        // only canonical (descending) encodings are accepted
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Partition::from_parts(&parts).ok()
    }
}

pub fn decode(bytes: &[u8], degree: u32) -> Option<CharacterTable> {
    let mut r = Reader { bytes, pos: 0 };
    if r.take(8)? != MAGIC {
        return None;
    }
    if r.u64()? != u64::from(degree) {
        return None;
    }
    let partitions = partitions_of(degree).ok()?;
    let n = partitions.len();
    if r.u64()? != (n * n) as u64 {
        return None;
    }
    let mut entries: Vec<Option<BigInt>> = vec![None; n * n];
    let position = |p: &Partition| partitions.iter().position(|q| q == p);
    for _ in 0..n * n {
        let len = usize::try_from(r.u64()?).ok()?;
        let payload = r.take(len)?;
        if r.u64()? != fnv1a(payload) {
            return None;
        }
        let mut pr = Reader {
            bytes: payload,
            pos: 0,
        };
        if pr.u64()? != u64::from(degree) {
            return None;
        }
        let rho = pr.partition()?;
        let mu = pr.partition()?;
        let vlen = usize::try_from(pr.u64()?).ok()?;
        let value = BigInt::from_signed_bytes_le(pr.take(vlen)?);
        if pr.pos != payload.len() {
            return None;
        }
        let slot = position(&rho)? * n + position(&mu)?;
        if entries[slot].replace(value).is_some() {
            return None;
        }
    }
    if r.pos != bytes.len() {
        return None;
    }
    let entries = entries.into_iter().collect::<Option<Vec<_>>>()?;
    let table = CharacterTable::from_parts(degree, partitions, entries);
    table.dimensions_positive().then_some(table)
}
