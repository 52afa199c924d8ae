//! Closed-form edge counts: Turán numbers of edge blow-ups, the construction
//! counts `t_p`, `h`, `h'`, and the Chvátal–Hanson function.

use crate::error::{Error, Result};
use crate::graph::{complete, complete_bipartite, cycle, matching, path, star, Graph};
use serde::{Deserialize, Serialize};
use std::fmt;

pub fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `t_p(n)`, the number of edges of the balanced complete `p`-partite graph.
pub fn t_p_edges(n: usize, p: usize) -> u64 {
    assert!(p >= 1, "t_p(n) needs p >= 1");
    let (n, p) = (n as u64, p as u64);
    let (q, r) = (n / p, n % p);
    // r parts of size q+1, p-r parts of size q
    let squares = r * (q + 1) * (q + 1) + (p - r) * q * q;
    (n * n - squares) / 2
}

/// `h(n,p,s) = C(s-1,2) + (s-1)(n-s+1) + t_p(n-s+1)`.
pub fn h_edges(n: usize, p: usize, s: usize) -> u64 {
    h_prime_edges(n, p, s) + binom2(s.saturating_sub(1) as u64)
}

/// `h'(n,p,s) = (s-1)(n-s+1) + t_p(n-s+1)`.
pub fn h_prime_edges(n: usize, p: usize, s: usize) -> u64 {
    assert!(s >= 1 && n + 1 >= s, "h(n,p,s) needs n >= s-1 >= 0");
    let a = s - 1;
    let rest = n - a;
    (a * rest) as u64 + t_p_edges(rest, p)
}

/// Chvátal–Hanson: the maximum number of edges of a graph with `ν <= nu` and
/// `Δ <= delta`. Zero when either argument is zero.
pub fn f_chvatal_hanson(nu: usize, delta: usize) -> u64 {
    if nu == 0 || delta == 0 {
        return 0;
    }
    let (nu, d) = (nu as u64, delta as u64);
    nu * d + (d / 2) * (nu / d.div_ceil(2))
}

/// Piecewise diagonal value, meant to equal `f(k-1, k-1)`.
pub fn f_diag(k: usize) -> u64 {
    assert!(k >= 2);
    let k = k as u64;
    if k % 2 == 1 {
        k * k - k
    } else {
        k * k - 3 * k / 2
    }
}

/// `g(k-1, k-1)`: `(2k^2 - 3k - 1)/2` for odd `k`, `k^2 - 2k + 1` for even `k`.
pub fn g_diag(k: usize) -> u64 {
    assert!(k >= 2);
    let k = k as u64;
    if k % 2 == 1 {
        (2 * k * k - 3 * k - 1) / 2
    } else {
        k * k - 2 * k + 1
    }
}

/// Base graphs with a closed-form Turán number for their edge blow-up.
///
/// `Matching { t }` is `M_{2t}`, `Star { t }` is `S_{t+1}`, and the remaining
/// kinds are indexed by vertex count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlowupKind {
    Matching { t: usize },
    Star { t: usize },
    Path { t: usize },
    Cycle { t: usize },
    Clique { t: usize },
    CompleteBipartite { s: usize, t: usize },
}

impl BlowupKind {
    pub fn base_graph(&self) -> Result<Graph> {
        match *self {
            BlowupKind::Matching { t } => matching(2 * t),
            BlowupKind::Star { t } => star(t + 1),
            BlowupKind::Path { t } => path(t),
            BlowupKind::Cycle { t } => cycle(t),
            BlowupKind::Clique { t } => complete(t),
            BlowupKind::CompleteBipartite { s, t } => complete_bipartite(s, t),
        }
    }

    /// Parses `matching:2`, `star:3`, `path:6`, `cycle:5`, `clique:4`, `kst:2,3`.
    pub fn parse(text: &str) -> Result<Self> {
        let (name, args) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(0, "expected <kind>:<parameters>"))?;
        let offset = name.len() + 1;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::parse(offset, e.to_string()))?;
        let one = |nums: &[usize]| match nums {
            [t] => Ok(*t),
            _ => Err(Error::parse(offset, "expected one parameter")),
        };
        match name.trim() {
            "matching" => Ok(BlowupKind::Matching { t: one(&nums)? }),
            "star" => Ok(BlowupKind::Star { t: one(&nums)? }),
            "path" => Ok(BlowupKind::Path { t: one(&nums)? }),
            "cycle" => Ok(BlowupKind::Cycle { t: one(&nums)? }),
            "clique" => Ok(BlowupKind::Clique { t: one(&nums)? }),
            "kst" => match nums[..] {
                [s, t] => Ok(BlowupKind::CompleteBipartite { s, t }),
                _ => Err(Error::parse(offset, "expected s,t")),
            },
            other => Err(Error::parse(0, format!("unknown kind `{other}`"))),
        }
    }
}

impl fmt::Display for BlowupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowupKind::Matching { t } => write!(f, "matching:{t}"),
            BlowupKind::Star { t } => write!(f, "star:{t}"),
            BlowupKind::Path { t } => write!(f, "path:{t}"),
            BlowupKind::Cycle { t } => write!(f, "cycle:{t}"),
            BlowupKind::Clique { t } => write!(f, "clique:{t}"),
            BlowupKind::CompleteBipartite { s, t } => write!(f, "kst:{s},{t}"),
        }
    }
}

/// A formula value, possibly still carrying the unresolved constant `p(s,t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub value: u64,
    /// Set when the true value is `value + p(s,t)` for an undetermined constant.
    pub unresolved: Option<String>,
    pub validity: String,
    pub source: String,
}

pub const LARGE_N: &str = "asserted only for sufficiently large n";

impl FormulaResult {
    fn exact(value: u64, source: &str) -> Self {
        FormulaResult {
            value,
            unresolved: None,
            validity: LARGE_N.to_string(),
            source: source.to_string(),
        }
    }

    /// Substitute a value for the unresolved constant.
    pub fn resolve(&self, constant: i64) -> Result<FormulaResult> {
        if self.unresolved.is_none() {
            return Err(Error::param("formula has no unresolved constant"));
        }
        let value = self
            .value
            .checked_add_signed(constant)
            .ok_or_else(|| Error::param("resolved value is negative"))?;
        Ok(FormulaResult {
            value,
            unresolved: None,
            ..self.clone()
        })
    }
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

/// `ex(n, G^{p+1})` for the catalogued base graphs.
pub fn ex_blowup_formula(kind: BlowupKind, n: usize, p: usize) -> Result<FormulaResult> {
    let fits = |s: usize| -> Result<()> { need(n + 1 >= s, || format!("n = {n} too small for s = {s}")) };
    match kind {
        BlowupKind::Matching { t } => {
            need(t >= 1, || "matching needs t >= 1".into())?;
            need(p >= 2, || format!("matching blow-up needs p >= 2, got {p}"))?;
            fits(t)?;
            Ok(FormulaResult::exact(h_edges(n, p, t), "cor-matching"))
        }
        BlowupKind::Star { t } => {
            need(t >= 1, || "star needs t >= 1".into())?;
            need(p >= 2, || format!("star blow-up needs p >= 2, got {p}"))?;
            Ok(FormulaResult::exact(h_edges(n, p, 1) + f_chvatal_hanson(t - 1, t - 1), "cor-star"))
        }
        BlowupKind::Path { t } => {
            need(t >= 2, || "path needs t >= 2 vertices".into())?;
            need(p >= 3, || format!("path blow-up needs p >= 3, got {p}"))?;
            fits(t / 2)?;
            Ok(FormulaResult::exact(h_edges(n, p, t / 2) + (t % 2) as u64, "cor-path"))
        }
        BlowupKind::Cycle { t } => {
            need(t >= 3, || "cycle needs t >= 3".into())?;
            if t % 2 == 0 {
                need(p >= 3, || format!("even cycle blow-up needs p >= 3, got {p}"))?;
                fits(t / 2)?;
                Ok(FormulaResult::exact(h_edges(n, p, t / 2) + 1, "cor-cycle"))
            } else {
                need(p >= 4, || format!("odd cycle blow-up needs p >= 4, got {p}"))?;
                fits(t.div_ceil(2))?;
                Ok(FormulaResult::exact(h_edges(n, p, t.div_ceil(2)), "cor-cycle"))
            }
        }
        BlowupKind::Clique { t } => {
            need(t >= 2, || "clique needs t >= 2".into())?;
            need(p > t, || format!("clique blow-up needs p >= t+1 = {}, got {p}", t + 1))?;
            let a = binom2(t as u64 - 1) as usize;
            need(n >= a, || format!("n = {n} below C(t-1,2) = {a}"))?;
            Ok(FormulaResult::exact((a * (n - a)) as u64 + t_p_edges(n - a, p), "thm-clique"))
        }
        BlowupKind::CompleteBipartite { s, t } => {
            need(1 <= s && s <= t, || format!("K_{{s,t}} needs 1 <= s <= t, got s={s}, t={t}"))?;
            need(p >= 3, || format!("K_{{s,t}} blow-up needs p >= 3, got {p}"))?;
            fits(s)?;
            Ok(FormulaResult {
                unresolved: Some(format!("p({s},{t})")),
                ..FormulaResult::exact(h_prime_edges(n, p, s), "thm-kst")
            })
        }
    }
}

/// The NIM correction `C(q-1,2) - ex(q-1, B)`; zero for the sentinel `B = {K_q}`.
pub fn nim_correction(q: usize, ex_q1_b: Option<u64>) -> u64 {
    match ex_q1_b {
        None => 0,
        Some(e) => binom2(q as u64 - 1) - e,
    }
}

/// `g(n, G^{p+1})` for catalogued kinds satisfying the NIM theorem's hypothesis:
/// cliques `K_t` (`t >= 3`) and odd cycles. The bipartite kinds all have `q = |A|`.
pub fn nim_formula(kind: BlowupKind, n: usize, p: usize) -> Result<FormulaResult> {
    let ex = ex_blowup_formula(kind, n, p)?;
    let extra = match kind {
        BlowupKind::Clique { t } if t >= 3 => {
            // q = C(t-1,2) + 1 and B = {K_2}, so ex(q-1, B) = 0
            let q = binom2(t as u64 - 1) as usize + 1;
            nim_correction(q, Some(0))
        }
        BlowupKind::Cycle { t } if t % 2 == 1 => nim_correction(t.div_ceil(2), None),
        other => {
            return Err(Error::Parameter(format!(
                "{other}: the NIM theorem needs a bipartite base with q < |A| or a non-bipartite base"
            )))
        }
    };
    Ok(FormulaResult {
        value: ex.value + extra,
        source: "thm-nim".into(),
        ..ex
    })
}

/// The conjectured `ex(n, M(K_{s,t}^{p+1}))`, for `n >= s + 2t`.
pub fn conjectured_kst_family_ex(n: usize, s: usize, t: usize) -> Result<u64> {
    need(1 <= s && s <= t, || format!("needs 1 <= s <= t, got s={s}, t={t}"))?;
    need(n >= s + 2 * t, || format!("needs n >= s+2t = {}", s + 2 * t))?;
    let i = u64::from(s == t && s % 2 == 0);
    Ok(h_edges(n, 1, s) + f_chvatal_hanson(t - 1, t - 1) + i - (s as u64 - 1).div_ceil(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_values() {
        assert_eq!(t_p_edges(9, 2), 20);
        assert_eq!(t_p_edges(8, 3), 21);
        assert_eq!(t_p_edges(11, 1), 0);
        assert_eq!(t_p_edges(4, 7), 6);
        assert_eq!(h_edges(10, 2, 2), 29);
        assert_eq!(h_prime_edges(10, 3, 3), 37);
        assert_eq!(f_chvatal_hanson(3, 3), 10);
        assert_eq!(f_chvatal_hanson(5, 5), 27);
        assert_eq!(f_chvatal_hanson(2, 2), 6);
        assert_eq!((f_diag(4), g_diag(4), g_diag(3)), (10, 9, 4));
    }

    #[test]
    fn blowup_examples() {
        let v = |k, n, p| ex_blowup_formula(k, n, p).unwrap().value;
        assert_eq!(v(BlowupKind::Matching { t: 2 }, 13, 3), 60);
        assert_eq!(v(BlowupKind::Clique { t: 3 }, 13, 4), 66);
        assert_eq!(v(BlowupKind::Path { t: 6 }, 20, 3), h_edges(20, 3, 3));
        assert_eq!(v(BlowupKind::Path { t: 7 }, 20, 3), h_edges(20, 3, 3) + 1);
        assert_eq!(v(BlowupKind::Star { t: 3 }, 20, 2), t_p_edges(20, 2) + 6);
        assert_eq!(v(BlowupKind::Cycle { t: 6 }, 20, 3), h_edges(20, 3, 3) + 1);
        assert_eq!(v(BlowupKind::Cycle { t: 7 }, 20, 4), h_edges(20, 4, 4));
        let kst = ex_blowup_formula(BlowupKind::CompleteBipartite { s: 2, t: 3 }, 20, 3).unwrap();
        assert_eq!(kst.unresolved.as_deref(), Some("p(2,3)"));
        assert_eq!(kst.resolve(4).unwrap().value, h_prime_edges(20, 3, 2) + 4);
        assert!(kst.validity.contains("sufficiently large"));
    }

    #[test]
    fn out_of_range_p() {
        for (k, p) in [
            (BlowupKind::Matching { t: 2 }, 1),
            (BlowupKind::Path { t: 5 }, 2),
            (BlowupKind::Cycle { t: 4 }, 2),
            (BlowupKind::Cycle { t: 5 }, 3),
            (BlowupKind::Clique { t: 4 }, 4),
            (BlowupKind::CompleteBipartite { s: 2, t: 2 }, 2),
        ] {
            assert!(matches!(ex_blowup_formula(k, 30, p), Err(Error::Parameter(_))), "{k}");
        }
    }

    #[test]
    fn nim_examples() {
        let ex = |k, n, p| ex_blowup_formula(k, n, p).unwrap().value;
        let g = |k, n, p| nim_formula(k, n, p).unwrap().value;
        let k4 = BlowupKind::Clique { t: 4 };
        assert_eq!(g(k4, 30, 5), ex(k4, 30, 5) + 3);
        let k3 = BlowupKind::Clique { t: 3 };
        assert_eq!(g(k3, 30, 4), ex(k3, 30, 4));
        let c7 = BlowupKind::Cycle { t: 7 };
        assert_eq!(g(c7, 30, 4), ex(c7, 30, 4));
        let k5 = BlowupKind::Clique { t: 5 };
        assert_eq!(g(k5, 40, 6), ex(k5, 40, 6) + 15);
        for k in [BlowupKind::Matching { t: 2 }, BlowupKind::Star { t: 3 }, BlowupKind::Cycle { t: 6 }] {
            assert!(nim_formula(k, 30, 4).is_err());
        }
    }

    #[test]
    fn conjecture_value() {
        // s = t = 2: h(n,1,2) + f(1,1) - 1 + 1
        assert_eq!(conjectured_kst_family_ex(6, 2, 2).unwrap(), h_edges(6, 1, 2) + 1);
        assert!(conjectured_kst_family_ex(5, 2, 2).is_err());
    }

    #[test]
    fn kind_parse_round_trip() {
        for k in [
            BlowupKind::Matching { t: 2 },
            BlowupKind::Star { t: 3 },
            BlowupKind::Path { t: 6 },
            BlowupKind::Cycle { t: 5 },
            BlowupKind::Clique { t: 4 },
            BlowupKind::CompleteBipartite { s: 2, t: 3 },
        ] {
            assert_eq!(BlowupKind::parse(&k.to_string()).unwrap(), k);
        }
        assert!(BlowupKind::parse("wheel:4").is_err());
        assert!(BlowupKind::parse("kst:2").is_err());
        assert!(BlowupKind::parse("path").is_err());
    }

    #[test]
    fn diagonal_identity() {
        for k in 2..=200 {
            assert_eq!(f_diag(k), f_chvatal_hanson(k - 1, k - 1), "k = {k}");
            assert!(g_diag(k) <= f_diag(k));
        }
    }

    proptest! {
        #[test]
        fn turan_count_matches_construction(n in 0usize..40, p in 1usize..8) {
            prop_assert_eq!(t_p_edges(n, p), crate::constructions::turan_graph(n, p).unwrap().size() as u64);
        }

        #[test]
        fn matching_formula_is_h(t in 1usize..6, n in 10usize..200, p in 2usize..7) {
            prop_assert_eq!(ex_blowup_formula(BlowupKind::Matching { t }, n, p).unwrap().value, h_edges(n, p, t));
        }

        #[test]
        fn formulas_nondecreasing_in_n(t in 3usize..7, p in 4usize..8, n in 40usize..300) {
            for k in [
                BlowupKind::Matching { t },
                BlowupKind::Star { t },
                BlowupKind::Path { t },
                BlowupKind::Cycle { t },
                BlowupKind::CompleteBipartite { s: 2, t },
            ] {
                let a = ex_blowup_formula(k, n, p).unwrap().value;
                let b = ex_blowup_formula(k, n + 1, p).unwrap().value;
                prop_assert!(a <= b, "{} at n = {}", k, n);
            }
            if p > t {
                let k = BlowupKind::Clique { t };
                prop_assert!(ex_blowup_formula(k, n, p).unwrap().value <= ex_blowup_formula(k, n + 1, p).unwrap().value);
            }
        }

        #[test]
        fn f_is_monotone(nu in 0usize..30, d in 0usize..30) {
            prop_assert!(f_chvatal_hanson(nu, d) <= f_chvatal_hanson(nu + 1, d));
            prop_assert!(f_chvatal_hanson(nu, d) <= f_chvatal_hanson(nu, d + 1));
        }
    }
}
