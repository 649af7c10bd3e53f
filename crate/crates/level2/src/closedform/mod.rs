//! Registry of closed-form point counts: tabulated equivariant counts and every displayed
//! count of a discriminant component, each with a verbatim anchor.

mod displays;
mod tables;

use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{divisors, mobius};
pub use crate::poly::{CountPolynomial, ParseError, ScaledPolynomial};
use crate::reptheory::{counts_to_traces, decompose, CharacterTable, ClassFunction, CohomologyTable, Partition, RepError};

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error("no tabulated count for partition {0}")]
    UnknownPartition(Partition),
    #[error("component {component:?} of {lambda} is not transcribed")]
    NotTranscribed { lambda: Partition, component: String },
    #[error("formula {0:?} has non-integral coefficients")]
    NotIntegral(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    Q2,
    M08,
    #[serde(rename = "H3_S8")]
    H3S8,
    #[serde(rename = "H3_S7")]
    H3S7,
    DeltaComponent,
}

/// Ambient set `U(λ) ⊂ (P²)^7` in which a component count lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum USpec {
    /// All conjugate λ-tuples of pairwise distinct points.
    Full,
    /// The three rational points are not collinear.
    LastThreeNotCollinear,
    FirstFourGeneralPosition,
    FirstFiveGeneralPosition,
    FirstSixNoThreeCollinear,
}

/// How an entry's polynomial was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EntryKind {
    /// Parsed from a displayed formula or table row; the anchor is the display itself.
    Displayed,
    /// A count stated in words (an empty intersection); the anchor is the sentence.
    Prose,
    /// Inclusion–exclusion over displayed pieces, or the ambient count.
    Assembled,
    /// Assembled, with a displayed piece replaced by the value its own derivation gives.
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    S8,
    S7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinearGroup {
    PGL3,
    PGL2,
    Sp6F2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaEntry {
    pub space: Space,
    pub lambda: Partition,
    pub component: Option<String>,
    pub uspec: USpec,
    /// Numerator; the count is `poly / denominator`.
    pub poly: CountPolynomial,
    pub denominator: i64,
    pub kind: EntryKind,
    pub anchor: String,
}

impl FormulaEntry {
    pub fn value(&self) -> ScaledPolynomial {
        ScaledPolynomial::new(self.poly.clone(), self.denominator)
    }

    /// Exact count at `q`; `None` if the denominator does not divide.
    pub fn eval(&self, q: i128) -> Option<i128> {
        self.value().eval(q)
    }

    pub fn integral(&self) -> Option<&CountPolynomial> {
        (self.denominator == 1).then_some(&self.poly)
    }
}

/// Turns a displayed formula into the plain syntax of [`CountPolynomial::parse`]:
/// the right-hand side of the last `=` (or last `&` for table rows) with TeX markup removed.
pub fn latex_to_expr(latex: &str) -> String {
    const PGL3: &str = "((q^2+q+1)(q^2+q)q^2(q^2-2q+1))";
    let mut s = latex.replace(r"_{|\mathrm{PGL}(3)|}", "").replace(r"\underbrace", "");
    s = s.replace(r"|\mathrm{PGL}(3)|", PGL3);
    s = expand_command(&s, r"\binom", |n, k| {
        let (n, k): (u64, u64) = (n.trim().parse().unwrap(), k.trim().parse().unwrap());
        ((n - k + 1..=n).product::<u64>() / (1..=k).product::<u64>()).to_string()
    });
    s = expand_command(&s, r"\frac", |a, b| format!("(({a})/({b}))"));
    let rhs = match s.rfind('=') {
        Some(i) => &s[i + 1..],
        None => s.rsplit('&').next().unwrap_or(&s),
    };
    let mut s = rhs.to_string();
    for junk in [r"\left", r"\right", r"\\", r"\,", r"\ ", r"\quad", "&"] {
        s = s.replace(junk, " ");
    }
    s = s.replace(r"\cdot", "*").replace('{', "(").replace('}', ")");
    let mut s: String = s.split_whitespace().collect();
    while s.contains("++") {
        s = s.replace("++", "+");
    }
    s.trim_end_matches(['.', ',', ':']).to_string()
}

/// Replaces `\cmd{a}{b}` by `f(a, b)` for brace-balanced arguments.
fn expand_command(s: &str, cmd: &str, f: impl Fn(&str, &str) -> String) -> String {
    let mut out = String::new();
    let mut rest = s;
    while let Some(i) = rest.find(cmd) {
        out.push_str(&rest[..i]);
        let after = &rest[i + cmd.len()..];
        let (a, after) = braced(after);
        let (b, after) = braced(after);
        out.push_str(&f(a, b));
        rest = after;
    }
    out.push_str(rest);
    out
}

fn braced(s: &str) -> (&str, &str) {
    let s = s.trim_start();
    assert!(s.starts_with('{'), "expected a braced argument in {s:?}");
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return (&s[1..i], &s[i + 1..]);
                }
            }
            _ => {}
        }
    }
    panic!("unbalanced braces in {s:?}")
}

/// `|U(λ)|` for `USpec::Full`: `Π_i Π_{j<a_i} (S_i(q) − i·j)` where `S_i` counts the points of
/// P² with field of definition exactly `F_{q^i}`.
pub fn ambient_full_polynomial(lambda: &Partition) -> CountPolynomial {
    let q = CountPolynomial::var();
    let plane = |e: u32| &(&q.pow(2 * e) + &q.pow(e)) + &CountPolynomial::constant(1);
    let mut total = CountPolynomial::constant(1);
    for (i, a) in lambda.multiplicities() {
        let strict: CountPolynomial =
            divisors(i).into_iter().map(|e| plane(e).scale(mobius(i / e))).sum();
        for j in 0..a {
            total = &total * &(&strict - &CountPolynomial::constant((i * j) as i64));
        }
    }
    total
}

pub fn group_order_polynomial(which: LinearGroup) -> CountPolynomial {
    let p = |s: &str| CountPolynomial::parse(s).unwrap();
    match which {
        LinearGroup::PGL3 => p("q^3(q^3-1)(q^2-1)"),
        LinearGroup::PGL2 => p("q^3-q"),
        LinearGroup::Sp6F2 => CountPolynomial::constant(1_451_520),
    }
}

pub fn group_order(which: LinearGroup, q: u64) -> i128 {
    group_order_polynomial(which).eval(q as i128)
}

/// Terms of an assembled count.
enum Term {
    /// A registry entry of the same partition, by label.
    Label(&'static str),
    /// `|U(λ)|` for the full ambient set.
    Ambient,
    /// A count in plain syntax, with a description.
    Count(&'static str, &'static str),
    /// A displayed piece replaced by the value its derivation gives; (label, formula, reason).
    Fix(&'static str, &'static str, &'static str),
}

struct Assembly {
    lambda: &'static str,
    component: &'static str,
    terms: &'static [(i64, Term)],
}

use Term::*;

static ASSEMBLIES: &[Assembly] = &[
    Assembly { lambda: "7", component: "U", terms: &[(1, Ambient)] },
    Assembly { lambda: "6,1", component: "U", terms: &[(1, Ambient)] },
    Assembly {
        lambda: "6,1",
        component: "Δ_l",
        terms: &[(1, Label("Δ_{l,1}")), (1, Label("Δ_{l,2}")), (1, Label("Δ_{l,3}")), (-1, Label("Δ_{l,2}∩Δ_{l,3}"))],
    },
    Assembly { lambda: "4,3", component: "U", terms: &[(1, Ambient)] },
    Assembly { lambda: "4,2,1", component: "U", terms: &[(1, Ambient)] },
    Assembly {
        lambda: "4,1^3",
        component: "U",
        terms: &[(1, Count("(q^8-q^2)(q^2+q+1)(q^2+q)q^2", "a conjugate 4-tuple times three non-collinear rational points"))],
    },
    Assembly { lambda: "3^2,1", component: "U", terms: &[(1, Ambient)] },
    Assembly {
        lambda: "3^2,1",
        component: "Δ_l",
        terms: &[
            (1, Label("Δ_{l,1}")),
            (1, Label("Δ_{l,2}")),
            (1, Label("Δ_{l,3}")),
            (1, Label("Δ_{l,4}")),
            (1, Label("Δ_{l,5}")),
            (-1, Label("Δ_{l,1}∩Δ_{l,3}")),
            (-1, Label("Δ_{l,2}∩Δ_{l,4}")),
            (-1, Label("Δ_{l,1}∩Δ_{l,4}")),
            (-1, Label("Δ_{l,1}∩Δ_{l,5}")),
            (-1, Label("Δ_{l,4}∩Δ_{l,5}")),
            (-1, Label("Δ_{l,2}∩Δ_{l,5}")),
            (-1, Label("Δ_{l,3}∩Δ_{l,5}")),
            (1, Label("Δ_{l,1}∩Δ_{l,4}∩Δ_{l,5}")),
        ],
    },
    Assembly { lambda: "3,2^2", component: "U", terms: &[(1, Ambient)] },
    Assembly {
        lambda: "3,2^2",
        component: "Δ_l",
        terms: &[(1, Label("Δ_{l,1}")), (1, Label("Δ_{l,2}")), (-1, Label("Δ_{l,1}∩Δ_{l,2}"))],
    },
    Assembly { lambda: "3,2,1^2", component: "U", terms: &[(1, Ambient)] },
    Assembly {
        lambda: "3,2,1^2",
        component: "Δ_l",
        terms: &[
            (1, Label("Δ_{l,1}")),
            (1, Label("Δ_{l,2}^6")),
            (1, Label("Δ_{l,2}^7")),
            (-1, Label("Δ_{l,1}∩Δ_{l,2}^6")),
            (-1, Label("Δ_{l,1}∩Δ_{l,2}^7")),
            (-1, Label("Δ_{l,2}^6∩Δ_{l,2}^7")),
            (1, Label("Δ_{l,1}∩Δ_{l,2}^6∩Δ_{l,2}^7")),
        ],
    },
    Assembly {
        lambda: "3,2,1^2",
        component: "Δ_c",
        terms: &[(1, Label("Δ_c, with multiplicity")), (-1, Label("Δ_c, excess"))],
    },
    Assembly {
        lambda: "3,1^4",
        component: "U",
        terms: &[(1, Count("(q^2+q+1)(q^2+q)q^2(q^2-2q+1)(q^6+q^3-q^2-q)", "a frame of rational points times a conjugate triple"))],
    },
    Assembly {
        lambda: "3,1^4",
        component: "Δ_c",
        terms: &[(1, Label("Δ_c, with multiplicity")), (-1, Label("Δ_c, excess"))],
    },
    Assembly {
        lambda: "2^3,1",
        component: "U",
        terms: &[(1, Count("(q^4-q)(q^4-q^2)(q^4-6q^2+q+8)(q^2+q+1)", "three conjugate pairs with no three collinear times a rational point"))],
    },
    Assembly {
        lambda: "2^3,1",
        component: "Δ_l",
        terms: &[
            (1, Label("Δ_{l,1}^a")),
            (1, Label("Δ_{l,1}^b")),
            (1, Label("Δ_{l,1}^c")),
            (2, Label("Δ_{l,2}^{P_1,Q_i}")),
            (2, Label("Δ_{l,2}^{P_1,R_i}")),
            (2, Label("Δ_{l,2}^{Q_1,R_i}")),
            (-1, Label("Δ_{l,1}^a∩Δ_{l,1}^b")),
            (-1, Label("Δ_{l,1}^a∩Δ_{l,1}^c")),
            (-1, Label("Δ_{l,1}^b∩Δ_{l,1}^c")),
            (-2, Label("Δ_{l,1}^a∩Δ_{l,2}^{Q_1,R_i}")),
            (-2, Label("Δ_{l,1}^b∩Δ_{l,2}^{P_1,R_i}")),
            (-2, Label("Δ_{l,1}^c∩Δ_{l,2}^{P_1,Q_i}")),
            (1, Label("Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_{l,1}^c")),
        ],
    },
    Assembly {
        lambda: "2^3,1",
        component: "Δ_l∩Δ_c",
        terms: &[
            (1, Label("Δ_{l,1}^a∩Δ_c")),
            (1, Label("Δ_{l,1}^b∩Δ_c")),
            (1, Label("Δ_{l,1}^c∩Δ_c")),
            (2, Label("Δ_{l,2}^{P_1,Q_i}∩Δ_c")),
            (2, Label("Δ_{l,2}^{P_1,R_i}∩Δ_c")),
            (2, Label("Δ_{l,2}^{Q_1,R_i}∩Δ_c")),
            (-1, Label("Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_c")),
            (-1, Label("Δ_{l,1}^a∩Δ_{l,1}^c∩Δ_c")),
            (-1, Label("Δ_{l,1}^b∩Δ_{l,1}^c∩Δ_c")),
            (-6, Label("Δ_{l,1}^a∩Δ_{l,2}^{Q_1,R_1}∩Δ_c, O outside")),
            (-6, Label("Δ_{l,1}^a∩Δ_{l,2}^{Q_1,R_1}∩Δ_c, O inside")),
            (1, Label("Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_{l,1}^c∩Δ_c, O outside")),
            (
                1,
                Fix(
                    "Δ_{l,1}^a∩Δ_{l,1}^b∩Δ_{l,1}^c∩Δ_c, O inside",
                    "(1/2)(q^5-q^2)(q^2-q)(q+1)(q-1)(q-3)",
                    "O is chosen among the (q^2-q)/2 inside points, not the (q^2+q)/2 outside ones",
                ),
            ),
        ],
    },
    Assembly {
        lambda: "2^2,1^3",
        component: "U",
        terms: &[(
            1,
            Count(
                "(q^2+q+1)(q^2+q)q^2(q^4-3q^3+3q^2-q)(q^4-q-2)",
                "three rational points and a conjugate pair in general position times a second pair",
            ),
        )],
    },
    Assembly {
        lambda: "2^2,1^3",
        component: "Δ_l",
        terms: &[
            (3, Label("Δ_{l,1}^i")),
            (1, Label("Δ_{l,2}")),
            (6, Label("Δ_{l,3}^{i,j}")),
            (-3, Label("Δ_{l,1}^i∩Δ_{l,1}^j")),
            (-12, Label("Δ_{l,1}^i∩Δ_{l,3}^{j,k}")),
            (-6, Label("Δ_{l,3}^{1,i}∩Δ_{l,3}^{2,j}")),
            (6, Label("Δ_{l,1}^i∩Δ_{l,1}^j∩Δ_{l,3}^{r,s}")),
            (6, Label("Δ_{l,1}^i∩Δ_{l,3}^{1,j}∩Δ_{l,3}^{2,s}")),
        ],
    },
    Assembly {
        lambda: "2^2,1^3",
        component: "Δ_c",
        terms: &[
            (
                1,
                Fix(
                    "Δ_c, one choice of P",
                    "3(q^5-q^2)(q+1)q(q^2-q)(q^2-q-2)(q^2-q)",
                    "the displayed count is for one choice of P among the three rational points",
                ),
            ),
            (-1, Label("Δ_c, excess")),
        ],
    },
    Assembly {
        lambda: "2^2,1^3",
        component: "Δ_l∩Δ_c",
        terms: &[
            (3, Label("Δ_{l,1}^i∩Δ_c, P_i outside")),
            (3, Label("Δ_{l,1}^i∩Δ_c, P_i inside")),
            (6, Label("Δ_{l,3}^{i,j}∩Δ_c, P_j outside")),
            (6, Label("Δ_{l,3}^{i,j}∩Δ_c, P_j inside")),
        ],
    },
    Assembly {
        lambda: "2,1^5",
        component: "U",
        terms: &[(
            1,
            Count(
                "(q^2+q+1)(q^2+q)q^2(q^2-2q+1)(q^2-5q+6)(q^4-q)",
                "five rational points in general position times a conjugate pair",
            ),
        )],
    },
    Assembly {
        lambda: "2,1^5",
        component: "Δ_c",
        terms: &[(1, Label("Δ_c, with multiplicity")), (-1, Label("Δ_c, excess"))],
    },
    Assembly {
        lambda: "2,1^5",
        component: "Δ_l∩Δ_c",
        terms: &[
            (5, Label("A_{i,0}^out")),
            (5, Label("A_{i,1}^out")),
            (5, Label("A_{i,2}^out")),
            (
                5,
                Fix(
                    "A_i^in",
                    "(1/2)(q^5-q^2)(q^2-q)(q+1)(q+1)(q-1)(q-3)(q-5)",
                    "the (q+1)/2 lines through P_i and the (q+1)(q-1)(q-3)(q-5) choices both contribute a factor q+1",
                ),
            ),
        ],
    },
];

fn parse_partition(s: &str) -> Partition {
    s.parse().unwrap_or_else(|e| panic!("bad partition {s:?}: {e}"))
}

fn build() -> Vec<FormulaEntry> {
    let mut out = Vec::new();
    let parse = |expr: &str| {
        ScaledPolynomial::parse(expr).unwrap_or_else(|e| panic!("registry formula does not parse: {e}"))
    };
    for (space, rows) in [
        (Space::Q2, tables::QUARTIC_ROWS),
        (Space::M08, tables::M08_ROWS),
        (Space::H3S8, tables::H3_S8_ROWS),
        (Space::H3S7, tables::H3_S7_ROWS),
    ] {
        for row in rows {
            let open = row.find(r"\left[").unwrap() + r"\left[".len();
            let close = row.find(r"\right]").unwrap();
            let v = parse(&latex_to_expr(row));
            out.push(FormulaEntry {
                space,
                lambda: parse_partition(&row[open..close]),
                component: None,
                uspec: USpec::Full,
                poly: v.num,
                denominator: v.den,
                kind: EntryKind::Displayed,
                anchor: row.to_string(),
            });
        }
    }
    for d in displays::DISPLAYS {
        let v = parse(&latex_to_expr(d.latex));
        for label in d.labels {
            out.push(FormulaEntry {
                space: Space::DeltaComponent,
                lambda: parse_partition(d.lambda),
                component: Some(label.to_string()),
                uspec: d.uspec,
                poly: v.num.clone(),
                denominator: v.den,
                kind: EntryKind::Displayed,
                anchor: d.latex.to_string(),
            });
        }
    }
    for &(lambda, uspec, sentence) in displays::EMPTY_INTERSECTIONS {
        out.push(FormulaEntry {
            space: Space::DeltaComponent,
            lambda: parse_partition(lambda),
            component: Some("Δ_l∩Δ_c".into()),
            uspec,
            poly: CountPolynomial::zero(),
            denominator: 1,
            kind: EntryKind::Prose,
            anchor: sentence.to_string(),
        });
    }
    for a in ASSEMBLIES {
        let lambda = parse_partition(a.lambda);
        let uspec = out
            .iter()
            .find(|e| e.space == Space::DeltaComponent && e.lambda == lambda)
            .map_or(USpec::Full, |e| e.uspec);
        let mut total = ScaledPolynomial::int(CountPolynomial::zero());
        let mut parts = Vec::new();
        let mut fixes = Vec::new();
        for (coef, term) in a.terms {
            let (value, name) = match term {
                Label(label) => {
                    let e = out
                        .iter()
                        .find(|e| e.lambda == lambda && e.component.as_deref() == Some(label))
                        .unwrap_or_else(|| panic!("assembly of {} for {lambda} needs {label}", a.component));
                    (e.value(), format!("|{label}|"))
                }
                Ambient => (ambient_full_polynomial(&lambda).into(), "|U(λ)|".to_string()),
                Count(expr, what) => (parse(expr), format!("{expr} ({what})")),
                Fix(label, expr, why) => {
                    fixes.push(format!("|{label}| taken as {expr}: {why}"));
                    (parse(expr), format!("|{label}|*"))
                }
            };
            total = total + value.scale(*coef);
            parts.push(match coef {
                1 => format!("+ {name}"),
                -1 => format!("− {name}"),
                c if *c < 0 => format!("− {}·{name}", -c),
                c => format!("+ {c}·{name}"),
            });
        }
        let mut anchor = parts.join(" ").trim_start_matches("+ ").to_string();
        if !fixes.is_empty() {
            anchor = format!("{anchor}; * {}", fixes.join("; "));
        }
        out.push(FormulaEntry {
            space: Space::DeltaComponent,
            lambda,
            component: Some(a.component.to_string()),
            uspec,
            poly: total.num,
            denominator: total.den,
            kind: if fixes.is_empty() { EntryKind::Assembled } else { EntryKind::Corrected },
            anchor,
        });
    }
    out
}

/// Every entry, built once.
pub fn registry() -> &'static [FormulaEntry] {
    static REG: OnceLock<Vec<FormulaEntry>> = OnceLock::new();
    REG.get_or_init(build)
}

fn table_entry(space: Space, lambda: &Partition) -> Result<&'static CountPolynomial, ClosedFormError> {
    registry()
        .iter()
        .find(|e| e.space == space && &e.lambda == lambda)
        .map(|e| &e.poly)
        .ok_or_else(|| ClosedFormError::UnknownPartition(lambda.clone()))
}

/// `|Q[2]^{F·σ_λ}|` for λ ⊢ 7.
pub fn quartic_locus_count(lambda: &Partition) -> Result<CountPolynomial, ClosedFormError> {
    table_entry(Space::Q2, lambda).cloned()
}

/// `|M_{0,8}^{F·σ_λ}|` for λ ⊢ 8.
pub fn m08_count(lambda: &Partition) -> Result<CountPolynomial, ClosedFormError> {
    table_entry(Space::M08, lambda).cloned()
}

/// `|H_3[2]^{F·σ_λ}|` for the S8 (λ ⊢ 8) or S7 (λ ⊢ 7) action.
pub fn h3_count(lambda: &Partition, group: Group) -> Result<CountPolynomial, ClosedFormError> {
    let space = match group {
        Group::S8 => Space::H3S8,
        Group::S7 => Space::H3S7,
    };
    table_entry(space, lambda).cloned()
}

pub fn delta_component_formula(
    lambda: &Partition,
    component: &str,
) -> Result<&'static FormulaEntry, ClosedFormError> {
    registry()
        .iter()
        .find(|e| e.space == Space::DeltaComponent && &e.lambda == lambda && e.component.as_deref() == Some(component))
        .ok_or_else(|| ClosedFormError::NotTranscribed { lambda: lambda.clone(), component: component.to_string() })
}

/// All component entries of λ, in registry order.
pub fn components(lambda: &Partition) -> impl Iterator<Item = &'static FormulaEntry> + '_ {
    registry().iter().filter(move |e| e.space == Space::DeltaComponent && &e.lambda == lambda)
}

/// The four counts entering `|U| − |Δ_l| − |Δ_c| + |Δ_l∩Δ_c| = |PGL₃|·|Q[2]^{Fσ}|`.
#[derive(Debug, Clone, Copy)]
pub struct Decomposition {
    pub ambient: &'static FormulaEntry,
    pub delta_l: &'static FormulaEntry,
    pub delta_c: &'static FormulaEntry,
    pub intersection: &'static FormulaEntry,
}

impl Decomposition {
    pub fn uspec(&self) -> USpec {
        self.ambient.uspec
    }

    /// `|U| − |Δ_l| − |Δ_c| + |Δ_l∩Δ_c|`.
    pub fn complement(&self) -> ScaledPolynomial {
        self.ambient.value() - self.delta_l.value() - self.delta_c.value() + self.intersection.value()
    }

    /// The complement divided by `|PGL₃|`, if the division is exact.
    pub fn quotient(&self) -> Option<CountPolynomial> {
        let c = self.complement().to_integral()?;
        divide_exact(&c, &group_order_polynomial(LinearGroup::PGL3))
    }
}

/// Complete decomposition of λ, when all four counts are in the registry.
pub fn decomposition(lambda: &Partition) -> Option<Decomposition> {
    let get = |c: &str| delta_component_formula(lambda, c).ok();
    Some(Decomposition { ambient: get("U")?, delta_l: get("Δ_l")?, delta_c: get("Δ_c")?, intersection: get("Δ_l∩Δ_c")? })
}

/// Polynomial long division, `None` unless the remainder is zero and the quotient integral.
pub fn divide_exact(a: &CountPolynomial, b: &CountPolynomial) -> Option<CountPolynomial> {
    let db = b.degree()?;
    let lead = b.leading();
    let mut rem: Vec<i64> = a.coeffs().to_vec();
    if rem.len() <= db {
        return rem.is_empty().then(CountPolynomial::zero);
    }
    let mut quot = vec![0i64; rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db];
        if c % lead != 0 {
            return None;
        }
        let f = c / lead;
        quot[k] = f;
        for (j, &bc) in b.coeffs().iter().enumerate() {
            rem[k + j] -= f * bc;
        }
    }
    rem.iter().all(|&c| c == 0).then(|| CountPolynomial::new(quot))
}

/// Printed multiplicities of S7-irreducibles in `H^k(Q[2])`, k = 0..=6.
pub fn printed_quartic_cohomology() -> CohomologyTable {
    CohomologyTable {
        dim: 6,
        irreps: Partition::all(7),
        rows: vec![
            vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 3, 4, 4, 3, 5, 1, 3, 1, 1, 0, 0, 0, 0, 0],
            vec![1, 8, 14, 18, 14, 30, 16, 16, 12, 18, 4, 6, 3, 0, 0],
            vec![4, 20, 44, 47, 44, 99, 56, 56, 54, 83, 32, 31, 25, 6, 1],
            vec![6, 33, 76, 76, 72, 178, 97, 104, 105, 169, 71, 65, 64, 26, 3],
            vec![6, 23, 51, 54, 54, 127, 74, 76, 77, 126, 54, 54, 50, 22, 5],
        ],
    }
}

/// Printed multiplicities of S7-irreducibles in `H^k(H_3[2])`, k = 0..=5.
pub fn printed_hyperelliptic_cohomology() -> CohomologyTable {
    CohomologyTable {
        dim: 5,
        irreps: Partition::all(7),
        rows: vec![
            vec![2, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![2, 7, 9, 5, 5, 7, 1, 3, 2, 1, 0, 0, 0, 0, 0],
            vec![3, 18, 30, 31, 25, 50, 20, 26, 19, 26, 5, 7, 4, 0, 0],
            vec![6, 35, 74, 80, 72, 162, 86, 92, 83, 129, 43, 45, 36, 10, 1],
            vec![8, 48, 114, 117, 109, 271, 150, 157, 158, 254, 105, 96, 92, 35, 4],
            vec![5, 31, 72, 77, 72, 180, 103, 108, 108, 180, 77, 72, 72, 31, 5],
        ],
    }
}

/// `H^*(Q[2])` as S7-representations, from the tabulated counts under minimal purity.
pub fn quartic_cohomology() -> Result<CohomologyTable, RepError> {
    let counts = ClassFunction::from_fn(7, |p| quartic_locus_count(p).expect("every class is tabulated"));
    decompose(&counts_to_traces(&counts, 6)?, &CharacterTable::new(7))
}

/// `H^*(H_3[2])` as S7-representations, from the tabulated counts under minimal purity.
pub fn hyperelliptic_cohomology() -> Result<CohomologyTable, RepError> {
    let counts = ClassFunction::from_fn(7, |p| h3_count(p, Group::S7).expect("every class is tabulated"));
    decompose(&counts_to_traces(&counts, 5)?, &CharacterTable::new(7))
}

/// Printed Poincaré polynomial of `Q[2]`, ascending in `t`.
pub const QUARTIC_POINCARE: [i64; 7] = [1, 35, 490, 3485, 13174, 24920, 18375];
/// Printed Poincaré polynomial of `H_3[2]`, ascending in `t`.
pub const HYPERELLIPTIC_POINCARE: [i64; 6] = [36, 720, 5580, 20880, 37584, 25920];

#[derive(Serialize)]
struct JsonEntry<'a> {
    space: Space,
    lambda: &'a Partition,
    component: Option<&'a str>,
    uspec: USpec,
    coeffs: &'a [i64],
    denominator: i64,
    kind: EntryKind,
    anchor: &'a str,
}

/// The registry as a JSON array of `{space, lambda, component, uspec, coeffs, denominator, kind, anchor}`.
pub fn formulas_json() -> serde_json::Value {
    let rows: Vec<_> = registry()
        .iter()
        .map(|e| JsonEntry {
            space: e.space,
            lambda: &e.lambda,
            component: e.component.as_deref(),
            uspec: e.uspec,
            coeffs: e.poly.coeffs(),
            denominator: e.denominator,
            kind: e.kind,
            anchor: &e.anchor,
        })
        .collect();
    serde_json::to_value(rows).expect("registry serializes")
}

pub fn write_formulas_json(path: &Path) -> Result<(), ClosedFormError> {
    let text = serde_json::to_string_pretty(&formulas_json()).expect("registry serializes");
    std::fs::write(path, text).map_err(|source| ClosedFormError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> CountPolynomial {
        CountPolynomial::parse(s).unwrap()
    }

    #[test]
    fn normalises_displays() {
        assert_eq!(latex_to_expr(r"|\Delta_l| = (q^2+q+1) \cdot (q^7-q)."), "(q^2+q+1)*(q^7-q)");
        assert_eq!(latex_to_expr(r"& \left[8\right] & \, &2\,{q}^{5}+2\,{q}^{3}"), "2(q)^(5)+2(q)^(3)");
        assert_eq!(latex_to_expr(r"\binom{4}{2} \cdot 2 \cdot \frac{1}{2}(q-1)"), "6*2*((1)/(2))(q-1)");
    }

    #[test]
    fn tabulated_examples() {
        assert_eq!(quartic_locus_count(&part("7")).unwrap(), p("q^6+q^3"));
        assert_eq!(quartic_locus_count(&part("1^7")).unwrap().eval(9), 240);
        assert_eq!(m08_count(&part("8")).unwrap().eval(3), 270);
        assert_eq!(m08_count(&part("2,1^6")).unwrap().eval(7), 2520);
        assert_eq!(h3_count(&part("7"), Group::S7).unwrap().eval(3), 364);
        assert!(matches!(quartic_locus_count(&part("8")), Err(ClosedFormError::UnknownPartition(_))));
    }

    #[test]
    fn every_table_is_complete() {
        for (space, n) in [(Space::Q2, 7), (Space::M08, 8), (Space::H3S8, 8), (Space::H3S7, 7)] {
            for lambda in Partition::all(n) {
                assert!(table_entry(space, &lambda).is_ok(), "{space:?} {lambda}");
            }
        }
    }

    #[test]
    fn labels_are_unique() {
        let mut seen = std::collections::HashSet::new();
        for e in registry() {
            assert!(seen.insert((e.space, e.lambda.clone(), e.component.clone())), "{e:?}");
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(LinearGroup::PGL3, 3), 5616);
        assert_eq!(group_order(LinearGroup::PGL2, 3), 24);
        assert_eq!(group_order(LinearGroup::Sp6F2, 3), 1_451_520);
        assert_eq!(group_order_polynomial(LinearGroup::PGL3), p("(q^2+q+1)(q^2+q)q^2(q^2-2q+1)"));
    }

    #[test]
    fn exact_division() {
        let a = p("(q^2-1)(q^3+2)");
        assert_eq!(divide_exact(&a, &p("q+1")), Some(p("(q-1)(q^3+2)")));
        assert_eq!(divide_exact(&a, &p("q+2")), None);
    }

    #[test]
    fn spec_examples() {
        let e = delta_component_formula(&part("7"), "Δ_l").unwrap();
        assert_eq!(e.poly, p("(q^2+q+1)(q^7-q)"));
        assert_eq!(e.uspec, USpec::Full);
        let e = delta_component_formula(&part("6,1"), "Δ_l∩Δ_c").unwrap();
        assert_eq!(e.poly, p("(q^5-q^2)q^2(q^3-q)"));
        assert!(matches!(
            delta_component_formula(&part("5,2"), "Δ_l"),
            Err(ClosedFormError::NotTranscribed { .. })
        ));
    }
}
