use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact charge value; serialized as `{"num": .., "den": ..}` in lowest terms.
pub type Charge = Rational64;

#[derive(Serialize, Deserialize)]
struct Repr {
    num: i64,
    den: i64,
}

pub fn serialize<S: Serializer>(q: &Charge, s: S) -> Result<S::Ok, S::Error> {
    Repr {
        num: *q.numer(),
        den: *q.denom(),
    }
    .serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Charge, D::Error> {
    let r = Repr::deserialize(d)?;
    if r.den == 0 {
        return Err(serde::de::Error::custom("zero denominator"));
    }
    Ok(Charge::new(r.num, r.den))
}

pub mod vec {
    use super::*;

    #[derive(Serialize)]
    struct Item<'a>(#[serde(with = "super")] &'a Charge);

    pub fn serialize<S: Serializer>(qs: &[Charge], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(qs.iter().map(Item))
    }
}

pub fn json(q: Charge) -> serde_json::Value {
    serde_json::json!({ "num": q.numer(), "den": q.denom() })
}
