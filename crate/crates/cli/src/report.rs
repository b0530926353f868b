use std::fmt::Write as _;

use antiatom_core::partition::box_hook_set;
use antiatom_core::{
    enumeration, AntiAtomSolution, NumericalSemigroup, NumericalSet, Partition, ScanReport,
    VoidPoset,
};
use serde::Serialize;

/// Everything `analyze` prints about a semigroup.
#[derive(Serialize)]
pub struct SemigroupReport {
    pub semigroup: NumericalSemigroup,
    pub frobenius: i64,
    pub genus: usize,
    pub multiplicity: u32,
    pub depth: u32,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub symmetric: bool,
    pub pseudo_frobenius: Vec<u32>,
    pub special_gaps: Vec<u32>,
    pub void: Vec<u32>,
    pub hasse_edges: Vec<[u32; 2]>,
    pub pa: usize,
    pub sizes: Vec<u64>,
    pub base_size: u64,
    pub min_size: u64,
    pub lambda_minimal: bool,
    pub witness_ideal: Vec<u32>,
    pub witness_partition: Partition,
}

impl SemigroupReport {
    /// `solution` is `None` exactly for the naturals.
    pub fn new(s: &NumericalSemigroup, solution: Option<&AntiAtomSolution>) -> Self {
        let hasse_edges = match VoidPoset::new(s) {
            Ok(poset) => poset.hasse_edges().into_iter().map(|(x, y)| [x, y]).collect(),
            Err(_) => Vec::new(),
        };
        let (pa, sizes, base_size, min_size, lambda_minimal, witness_ideal, witness_partition) =
            match solution {
                Some(sol) => (
                    sol.pa,
                    sol.sizes(),
                    sol.base_size,
                    sol.min_size,
                    sol.lambda_minimal,
                    sol.witness().ideal.members().to_vec(),
                    sol.witness().partition(),
                ),
                None => (1, vec![0], 0, 0, true, Vec::new(), Partition::empty()),
            };
        SemigroupReport {
            semigroup: s.clone(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
            depth: s.depth(),
            semigroup_type: s.semigroup_type(),
            symmetric: s.is_symmetric(),
            pseudo_frobenius: s.pseudo_frobenius().map(<[u32]>::to_vec).unwrap_or_default(),
            special_gaps: s.special_gaps(),
            void: s.void().to_vec(),
            hasse_edges,
            pa,
            sizes,
            base_size,
            min_size,
            lambda_minimal,
            witness_ideal,
            witness_partition,
        }
    }

    pub fn text(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let edges: Vec<String> = self.hasse_edges.iter().map(|[x, y]| format!("{x}<{y}")).collect();
        let rows = [
            ("semigroup", self.semigroup.to_string()),
            ("gaps", join(self.semigroup.gaps())),
            ("frobenius", self.frobenius.to_string()),
            ("genus", self.genus.to_string()),
            ("multiplicity", self.multiplicity.to_string()),
            ("depth", self.depth.to_string()),
            ("type", self.semigroup_type.to_string()),
            ("symmetric", yes_no(self.symmetric).to_string()),
            ("PF", join(&self.pseudo_frobenius)),
            ("special gaps", join(&self.special_gaps)),
            ("void", join(&self.void)),
            ("hasse edges", edges.join(" ")),
            ("Pa", self.pa.to_string()),
            ("sizes", join(&self.sizes)),
            ("|λ(S)|", self.base_size.to_string()),
            ("min size", self.min_size.to_string()),
            ("λ-minimal", yes_no(self.lambda_minimal).to_string()),
            ("witness ideal", format!("{{{}}}", join(&self.witness_ideal))),
            ("witness", self.witness_partition.to_string()),
        ];
        table(&rows)
    }
}

/// `analyze` on a numerical set that is not itself a semigroup (or given as
/// a partition): the set, its partition, and the report of its atom monoid.
#[derive(Serialize)]
pub struct NumericalSetReport {
    pub numerical_set: NumericalSet,
    pub partition: Partition,
    pub partition_size: u64,
    pub hook_set: Vec<u32>,
    pub is_semigroup: bool,
    pub atom_monoid: SemigroupReport,
}

impl NumericalSetReport {
    pub fn new(t: &NumericalSet, atom_monoid: SemigroupReport) -> Self {
        let partition = enumeration(t);
        NumericalSetReport {
            numerical_set: t.clone(),
            partition_size: partition.size(),
            hook_set: box_hook_set(t).into_iter().collect(),
            partition,
            is_semigroup: t.is_semigroup(),
            atom_monoid,
        }
    }

    pub fn text(&self) -> String {
        let rows = [
            ("numerical set", self.numerical_set.to_string()),
            ("partition", self.partition.to_string()),
            ("size", self.partition_size.to_string()),
            ("hook set", join(&self.hook_set)),
            ("atom monoid", self.atom_monoid.semigroup.to_string()),
        ];
        let mut out = table(&rows);
        out.push('\n');
        out.push_str(&self.atom_monoid.text());
        out
    }
}

pub fn scan_text(report: &ScanReport) -> String {
    let mode = report.query.mode.to_string();
    let width = mode.len().max(5);
    let mut out = format!("{mode:>width$}  semigroups  non-minimal\n");
    for b in &report.buckets {
        let _ = writeln!(out, "{:>width$}  {:>10}  {:>11}", b.bucket, b.semigroups, b.non_minimal);
    }
    let _ = writeln!(out, "total {}, non-minimal {}", report.total, report.non_minimal.len());
    for s in &report.non_minimal {
        let _ = writeln!(out, "{s}");
    }
    out
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "{k}{}  {v}", " ".repeat(pad));
    }
    out
}
