//! Number formatting shared by JSON reports: 12 significant digits, and
//! non-finite values as `null`.

use serde::Serializer;

pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn to_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap()
}

pub fn round_sig<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(to_sig(*x))
    } else {
        s.serialize_none()
    }
}

pub fn round_sig_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        if x.is_finite() {
            seq.serialize_element(&to_sig(*x))?;
        } else {
            seq.serialize_element(&Option::<f64>::None)?;
        }
    }
    seq.end()
}

pub fn round_sig_map<S: Serializer>(
    map: &std::collections::BTreeMap<String, f64>,
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(map.len()))?;
    for (k, &v) in map {
        if v.is_finite() {
            m.serialize_entry(k, &to_sig(v))?;
        } else {
            m.serialize_entry(k, &Option::<f64>::None)?;
        }
    }
    m.end()
}
