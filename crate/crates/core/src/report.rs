//! Axiom identifiers and validation reports shared by every checker.
//!
//! Identifiers are stable strings (`A1`..`A8`, `G1`..`G3`, `D1`..`D4`, ...)
//! so scripts can grep for them in CLI output.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AxiomId {
    // Category axioms.
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    // Groupoid axioms.
    G1,
    G2,
    G3,
    // Derived identities; a failure with primitives passing is a soundness bug.
    D1,
    D2,
    D3,
    D4,
    // Homomorphism squares.
    H1,
    H2,
    H3,
    // Classical presentation items i) to v).
    C1,
    C2,
    C3,
    C4,
    C5,
    // Group tables.
    Grp1,
    Grp2,
    Grp3,
    // Algebras, maps and bimodules.
    Alg1,
    Alg2,
    Alg3,
    Alg4,
    Alg5,
    Alg6,
    Alg7,
    Proj,
    Bim1,
    Bim2,
    Bim3,
    // Cogroupoid diagrams.
    CoA1,
    CoA2,
    CoA3,
    CoA4,
    CoA5,
    CoA6,
    CoA7,
    CoA8,
    CoA9,
    CoA10,
    CoA11,
    CoA12,
    CoA13,
    CoA14,
    CoA15,
    CoA16,
    CoA17,
    // Hopf algebra axioms.
    Hopf1,
    Hopf2,
    Hopf3,
    Hopf4,
    Hopf5,
    // Actions.
    Act1,
    Act2,
    Act3,
    Act4,
}

impl AxiomId {
    pub fn code(self) -> &'static str {
        use AxiomId::*;
        match self {
            A1 => "A1",
            A2 => "A2",
            A3 => "A3",
            A4 => "A4",
            A5 => "A5",
            A6 => "A6",
            A7 => "A7",
            A8 => "A8",
            G1 => "G1",
            G2 => "G2",
            G3 => "G3",
            D1 => "D1",
            D2 => "D2",
            D3 => "D3",
            D4 => "D4",
            H1 => "H1",
            H2 => "H2",
            H3 => "H3",
            C1 => "C1",
            C2 => "C2",
            C3 => "C3",
            C4 => "C4",
            C5 => "C5",
            Grp1 => "Grp1",
            Grp2 => "Grp2",
            Grp3 => "Grp3",
            Alg1 => "Alg1",
            Alg2 => "Alg2",
            Alg3 => "Alg3",
            Alg4 => "Alg4",
            Alg5 => "Alg5",
            Alg6 => "Alg6",
            Alg7 => "Alg7",
            Proj => "Proj",
            Bim1 => "Bim1",
            Bim2 => "Bim2",
            Bim3 => "Bim3",
            CoA1 => "coA1",
            CoA2 => "coA2",
            CoA3 => "coA3",
            CoA4 => "coA4",
            CoA5 => "coA5",
            CoA6 => "coA6",
            CoA7 => "coA7",
            CoA8 => "coA8",
            CoA9 => "coA9",
            CoA10 => "coA10",
            CoA11 => "coA11",
            CoA12 => "coA12",
            CoA13 => "coA13",
            CoA14 => "coA14",
            CoA15 => "coA15",
            CoA16 => "coA16",
            CoA17 => "coA17",
            Hopf1 => "Hopf1",
            Hopf2 => "Hopf2",
            Hopf3 => "Hopf3",
            Hopf4 => "Hopf4",
            Hopf5 => "Hopf5",
            Act1 => "Act1",
            Act2 => "Act2",
            Act3 => "Act3",
            Act4 => "Act4",
        }
    }

    /// Short statement of the law.
    pub fn law(self) -> &'static str {
        use AxiomId::*;
        match self {
            A1 => "TΣ=Σ",
            A2 => "ΣT=T",
            A3 => "μ(g,f) defined iff Σg=Tf",
            A4 => "μ(f,Σf)=f",
            A5 => "μ(Tf,f)=f",
            A6 => "Σμ(g,f)=Σf",
            A7 => "Tμ(g,f)=Tg",
            A8 => "μ(μ(h,g),f)=μ(h,μ(g,f))",
            G1 => "TΥ=Σ, ΥΣ=Σ, ΥΥ=id",
            G2 => "μ(g,Υg)=Tg",
            G3 => "μ(Υg,g)=Σg",
            D1 => "ΣΣ=Σ, TT=T",
            D2 => "ΣΥ=T",
            D3 => "FΥ=ΥF",
            D4 => "F×F maps composable pairs to composable pairs",
            H1 => "FΣ=ΣF",
            H2 => "FT=TF",
            H3 => "F(μ(g,f))=μ(Fg,Ff)",
            C1 => "σ(μ(h,g))=σ(g), τ(μ(h,g))=τ(h), μ defined on σ(h)=τ(g)",
            C2 => "μ associative",
            C3 => "ε injective, σ(ε(x))=τ(ε(x))=x",
            C4 => "μ(g,ε(σ(g)))=g, μ(ε(τ(g)),g)=g",
            C5 => "σι=τ, τι=σ, μ(ι(g),g)=ε(σ(g)), μ(g,ι(g))=ε(τ(g))",
            Grp1 => "associativity",
            Grp2 => "two-sided unit",
            Grp3 => "two-sided inverses",
            Alg1 => "associative multiplication",
            Alg2 => "commutative multiplication",
            Alg3 => "unit element",
            Alg4 => "map is multiplicative",
            Alg5 => "map preserves the unit",
            Alg6 => "G₂ basis spans {(g,f) : Σg=Tf}",
            Alg7 => "G₂ closed under (g,f)(g',f')=(gg',ff')",
            Proj => "P∘P=P",
            Bim1 => "left action: (hh')·n=h·(h'·n)",
            Bim2 => "right action: n·(hh')=(n·h)·h'",
            Bim3 => "(h·n)·h'=h·(n·h')",
            CoA1 => "S²=S",
            CoA2 => "T²=T",
            CoA3 => "ST=S",
            CoA4 => "TS=T",
            CoA5 => "UT=S",
            CoA6 => "SU=S",
            CoA7 => "U²=id",
            CoA8 => "i₁S=i₂T",
            CoA9 => "mT=i₁T",
            CoA10 => "mS=i₂S",
            CoA11 => "δ(T⊔id)m=id",
            CoA12 => "δ(id⊔S)m=id",
            CoA13 => "δ(U⊔id)m=S",
            CoA14 => "δ(id⊔U)m=T",
            CoA15 => "(m⊔id)m=(id⊔m)m",
            CoA16 => "S, T, U, m, i₁, i₂ are unital algebra maps",
            CoA17 => "(C², i₁, i₂) is a pushout of (S, T)",
            Hopf1 => "(ε⊗id)m=id=(id⊗ε)m",
            Hopf2 => "μ(U⊗id)m=ιε=μ(id⊗U)m",
            Hopf3 => "(m⊗id)m=(id⊗m)m",
            Hopf4 => "m and ε are unital algebra maps",
            Hopf5 => "m(1)=1⊗1",
            Act1 => "θ(g,e) defined iff Σg=Σφ(e)",
            Act2 => "θ(Σφ(e),e)=e",
            Act3 => "Σφ(θ(g,e))=Tg",
            Act4 => "θ(μ(h,g),e)=θ(h,θ(g,e))",
        }
    }

    /// Derived identities are theorems of the primitive axioms.
    pub fn is_derived(self) -> bool {
        matches!(self, AxiomId::D1 | AxiomId::D2 | AxiomId::D3 | AxiomId::D4)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: AxiomId,
    /// Concrete witness, e.g. `"g=1: TΥ(g)=0, Σ(g)=1"`.
    pub detail: String,
}

impl Violation {
    pub fn new(axiom: AxiomId, detail: impl Into<String>) -> Violation {
        Violation { axiom, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.axiom.is_derived() { "DERIVED-VIOLATION " } else { "" };
        write!(f, "{kind}{} [{}] {}", self.axiom, self.axiom.law(), self.detail)
    }
}

/// All violations found by a checker. Checkers never stop at the first
/// failure. Each axiom contributes at most [`ValidationReport::PER_AXIOM`]
/// witnesses so large carriers do not flood the output.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Informational lines (e.g. the computed base object).
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub const PER_AXIOM: usize = 8;

    pub fn new() -> ValidationReport {
        ValidationReport::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: AxiomId, detail: impl Into<String>) {
        let seen = self.violations.iter().filter(|v| v.axiom == axiom).count();
        if seen < Self::PER_AXIOM {
            self.violations.push(Violation::new(axiom, detail));
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn check(&mut self, ok: bool, axiom: AxiomId, detail: impl FnOnce() -> String) {
        if !ok {
            self.push(axiom, detail());
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        for v in other.violations {
            self.push(v.axiom, v.detail);
        }
        self.notes.extend(other.notes);
    }

    pub fn has(&self, axiom: AxiomId) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    /// Distinct violated identifiers in first-seen order.
    pub fn axioms(&self) -> Vec<AxiomId> {
        let mut out: Vec<AxiomId> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom) {
                out.push(v.axiom);
            }
        }
        out
    }

    /// `true` if a derived identity failed while no primitive axiom did.
    pub fn has_soundness_bug(&self) -> bool {
        let derived = self.violations.iter().any(|v| v.axiom.is_derived());
        let primitive = self.violations.iter().any(|v| !v.axiom.is_derived());
        derived && !primitive
    }

    pub fn into_result(self, what: &str) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::rejected(what, self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        let codes: Vec<&str> = self.axioms().iter().map(|a| a.code()).collect();
        write!(f, "violated {}", codes.join(", "))
    }
}
