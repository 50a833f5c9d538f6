//! The per-triple output record shared by `compute` and `enumerate`, with
//! JSON and CSV encodings.

use brieskorn::dinv::{self, Method};
use brieskorn::triples::Triple;
use serde::Serialize;

/// Fixed CSV header; the column order is part of the output contract.
pub const CSV_HEADER: &str =
    "p,q,r,n_p,l,t,alpha,s_num,s_den,D,d,witness_a,witness_m,method,d_equals_D";

#[derive(Serialize)]
pub struct OutputRecord {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub n_p: Option<i64>,
    pub l: Option<i64>,
    pub t: Option<i64>,
    pub alpha: Option<i64>,
    pub s_num: Option<i64>,
    pub s_den: Option<i64>,
    #[serde(rename = "D")]
    pub big_d: i128,
    pub d: i128,
    pub witness_a: Option<i64>,
    pub witness_m: Option<i64>,
    pub method: String,
    #[serde(rename = "d_equals_D")]
    pub d_equals_big_d: bool,
    pub applicable_theorems: Vec<String>,
}

impl OutputRecord {
    pub fn build(triple: &Triple, method: Method) -> brieskorn::Result<Self> {
        let report = dinv::classify(triple)?;
        let res = dinv::d(triple, method)?;
        let dec = triple.decompose().ok();
        Ok(OutputRecord {
            p: triple.p(),
            q: triple.q(),
            r: triple.r(),
            n_p: dec.map(|d| d.n_p),
            l: dec.map(|d| d.l),
            t: dec.map(|d| d.t),
            alpha: dec.map(|d| d.alpha),
            s_num: dec.map(|d| d.s_raw().0),
            s_den: dec.map(|d| d.s_raw().1),
            big_d: report.big_d,
            d: res.value,
            witness_a: res.witness.map(|w| w.0),
            witness_m: res.witness.map(|w| w.1),
            method: res.method.to_string(),
            d_equals_big_d: res.value == report.big_d,
            applicable_theorems: report.matches.iter().map(|m| m.name.to_string()).collect(),
        })
    }

    pub fn to_csv_row(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or(String::new(), |x| x.to_string())
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.p,
            self.q,
            self.r,
            opt(&self.n_p),
            opt(&self.l),
            opt(&self.t),
            opt(&self.alpha),
            opt(&self.s_num),
            opt(&self.s_den),
            self.big_d,
            self.d,
            opt(&self.witness_a),
            opt(&self.witness_m),
            self.method,
            self.d_equals_big_d,
        )
    }
}
