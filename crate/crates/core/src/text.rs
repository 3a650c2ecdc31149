use crate::{Error, Result, TruthTable};

/// Lowercase hex of the table, one byte per 8 points, point `8i` in the
/// least significant bit of byte `i`.
pub fn to_hex(f: &TruthTable) -> String {
    let nbytes = (f.len() / 8).max(1);
    let mut s = String::with_capacity(2 * nbytes);
    for i in 0..nbytes {
        let byte = (f.words()[i / 8] >> ((i % 8) * 8)) & 0xff;
        s.push_str(&format!("{byte:02x}"));
    }
    s
}

/// Inverse of [`to_hex`].
pub fn from_hex(n: usize, hex: &str) -> Result<TruthTable> {
    let hex = hex.trim();
    if n == 0 || n > crate::MAX_VARS {
        return Err(Error::capacity(format!("unsupported variable count {n}")));
    }
    let nbytes = ((1usize << n) / 8).max(1);
    if hex.len() != 2 * nbytes {
        return Err(Error::arg(format!("expected {} hex digits for n={n}, got {}", 2 * nbytes, hex.len())));
    }
    let mut words = vec![0u64; nbytes.div_ceil(8)];
    for (i, pair) in hex.as_bytes().chunks(2).enumerate() {
        let txt = std::str::from_utf8(pair).map_err(|_| Error::arg("non-ascii hex"))?;
        let byte = u8::from_str_radix(txt, 16).map_err(|_| Error::arg(format!("bad hex byte {txt:?}")))?;
        words[i / 8] |= (byte as u64) << ((i % 8) * 8);
    }
    TruthTable::from_words(n, words)
}

/// Two-line text form: `n=<k>` then the hex table.
pub fn to_text(f: &TruthTable) -> String {
    format!("n={}\n{}\n", f.n(), to_hex(f))
}

pub fn from_text(text: &str) -> Result<TruthTable> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let n: usize = header
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::parse(hl + 1, "expected header `n=<k>`"))?;
    let (bl, body) = lines.next().ok_or_else(|| Error::parse(hl + 2, "missing hex line"))?;
    if let Some((el, _)) = lines.next() {
        return Err(Error::parse(el + 1, "unexpected trailing content"));
    }
    from_hex(n, body).map_err(|e| match e {
        Error::Argument(m) | Error::Capacity(m) => Error::parse(bl + 1, m),
        other => other,
    })
}
