//! Text renderings shared by the command line: JSON, CSV and LaTeX.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::Value;

use crate::charney::CdReport;
use crate::qsym::QSymElem;
use crate::{Error, LaurentQT};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Csv,
    Latex,
}

impl FromStr for OutFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(OutFormat::Json),
            "csv" => Ok(OutFormat::Csv),
            "latex" => Ok(OutFormat::Latex),
            other => Err(Error::arg(format!(
                "unknown output format {other:?}; expected json, csv or latex"
            ))),
        }
    }
}

/// Pretty JSON with a trailing newline. Object keys come out sorted.
pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializing a JSON value cannot fail");
    s.push('\n');
    s
}

fn laurent_rows(p: &LaurentQT, prefix: &str, out: &mut String) {
    for (t, c) in p.terms() {
        for (q, a) in c.terms() {
            let _ = writeln!(out, "{prefix}{t},{q},{a}");
        }
    }
}

pub fn laurent(p: &LaurentQT, fmt: OutFormat) -> String {
    match fmt {
        OutFormat::Json => json(&p.to_json()),
        OutFormat::Latex => format!("{p}\n"),
        OutFormat::Csv => {
            let mut out = String::from("t,q,coeff\n");
            laurent_rows(p, "", &mut out);
            out
        }
    }
}

pub fn qsym(e: &QSymElem, fmt: OutFormat) -> String {
    match fmt {
        OutFormat::Json => json(&e.to_json()),
        OutFormat::Latex => format!("{}\n", e.to_latex()),
        OutFormat::Csv => {
            let mut out = String::from("degree,subset,t,q,coeff\n");
            for (n, s, c) in e.terms() {
                let subset: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                laurent_rows(c, &format!("{n},{},", subset.join(";")), &mut out);
            }
            out
        }
    }
}

pub fn cd_report(rep: &CdReport, fmt: OutFormat) -> String {
    let mut routes = vec![
        ("eval", &rep.eval),
        ("descents", &rep.descents),
        ("secant", &rep.secant),
    ];
    if let Some(d) = &rep.determinant {
        routes.push(("determinant", d));
    }
    routes.push(("normalized", &rep.normalized));
    match fmt {
        OutFormat::Json => json(&rep.to_json()),
        OutFormat::Csv => {
            let mut out = String::from("route,t,q,coeff\n");
            for (name, p) in routes {
                laurent_rows(p, &format!("{name},"), &mut out);
            }
            out
        }
        OutFormat::Latex => {
            let mut out = String::new();
            for (name, p) in routes {
                let _ = writeln!(out, "{name}: {p}");
            }
            let _ = writeln!(out, "agreement: {}", rep.agreement);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, Variant};

    #[test]
    fn laurent_formats() {
        let p = LaurentQT::from_t_dense(&[1, 4, 1]);
        assert_eq!(laurent(&p, OutFormat::Latex), "1+4t+t^2\n");
        assert_eq!(
            laurent(&p, OutFormat::Csv),
            "t,q,coeff\n0,0,1\n1,0,4\n2,0,1\n"
        );
        let back =
            LaurentQT::from_json(&serde_json::from_str(&laurent(&p, OutFormat::Json)).unwrap())
                .unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn qsym_csv_lists_subsets() {
        let mut e = QSymElem::zero();
        e.add_term(
            3,
            crate::Subset::from_elems([1, 2]),
            &LaurentQT::monomial(1, QPoly::q_pow(2)),
        );
        assert_eq!(
            qsym(&e, OutFormat::Csv),
            "degree,subset,t,q,coeff\n3,1;2,1,2,1\n"
        );
    }

    #[test]
    fn cd_report_latex() {
        let rep = CdReport::compute(2, 3, Variant::Augmented).unwrap();
        let text = cd_report(&rep, OutFormat::Latex);
        assert!(text.ends_with("agreement: true\n"), "{text}");
        assert!(text.starts_with("eval: "));
    }

    #[test]
    fn unknown_format() {
        assert!("yaml".parse::<OutFormat>().is_err());
    }
}
