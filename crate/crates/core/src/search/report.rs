use std::fmt;

use super::SearchReport;

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "search over {} records", self.records)?;
        writeln!(
            f,
            "config: a in {{{}}}, b in {{{}}}{}, a_l bound {}, galois bound {}, timeout {} s, seed {:#x}",
            join(&c.a_values),
            join(&c.b_values),
            if c.exempt_wild_b { " (any b for p = 3, 7)" } else { "" },
            c.a_ell_bound,
            c.galois_bound,
            c.timeout_secs,
            c.seed
        )?;
        if let Some(m) = &c.max_abs_disc {
            writeln!(f, "discriminant bound: |disc| <= {m}")?;
        }
        writeln!(f, "stages:")?;
        for s in &self.stages {
            writeln!(f, "  ({:>3}) {:>6}  {}", s.stage, s.survivors, s.description)?;
        }
        for (n, p) in self.pairs.iter().enumerate() {
            writeln!(f, "pair {}: {} / {}", n + 1, p.label_a, p.label_b)?;
            writeln!(f, "  {}: {}", p.label_a, p.poly_a)?;
            writeln!(f, "  {}: {}", p.label_b, p.poly_b)?;
            writeln!(f, "  field discriminant {}, signature {:?}", p.field_disc, p.signature)?;
            writeln!(
                f,
                "  galois: {} ({:?}), {} ({:?})",
                p.galois_a.label, p.galois_a.status, p.galois_b.label, p.galois_b.status
            )?;
            let cert = &p.certificate;
            writeln!(
                f,
                "  equivalence: {} via {}, compositum degrees [{}], a_l agrees at {} primes <= {}",
                cert.verdict,
                cert.method.map_or("-".to_string(), |m| m.to_string()),
                join(cert.compositum_degrees.iter().flatten()),
                cert.a_ell_primes_checked,
                cert.a_ell_checked_bound
            )?;
            for r in &p.comparisons {
                writeln!(
                    f,
                    "  l = {:<6} {} sum {}  vs  {} sum {}  v_l(disc) = {}{}{}",
                    r.prime,
                    r.type_k,
                    r.sum_k,
                    r.type_k1,
                    r.sum_k1,
                    r.disc_valuation,
                    if r.wild { " wild" } else { "" },
                    if r.differs { "  DIFFERS" } else { "" }
                )?;
                if !r.arithmetic_types_agree {
                    writeln!(f, "    note: arithmetic types differ at this ramified prime")?;
                }
            }
            for w in &p.window_checks {
                writeln!(
                    f,
                    "  window at l = {}: v = {} in {{{}}}: {}",
                    w.prime,
                    w.valuation,
                    join(&w.window),
                    if w.inside { "yes" } else { "NO" }
                )?;
            }
        }
        if !self.inconclusive.is_empty() {
            writeln!(f, "inconclusive:")?;
            for s in &self.inconclusive {
                writeln!(f, "  {} / {}: {}", s.label_a, s.label_b, s.reason)?;
            }
        }
        if !self.warnings.is_empty() {
            writeln!(f, "warnings:")?;
            for w in &self.warnings {
                writeln!(f, "  {w}")?;
            }
        }
        Ok(())
    }
}
