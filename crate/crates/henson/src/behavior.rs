//! Behaviours of canonical maps on 2-types, and the case analyses over
//! them.
//!
//! A canonical map out of an ordered homogeneous digraph is determined,
//! on pairs, by where it sends the three increasing 2-types `N`, `E`,
//! `E*`; its action on decreasing pairs follows by reading pairs in the
//! other order. That leaves 27 behaviours. For each behaviour, in each
//! of several contexts (no constants, an independent orbit, an orbit
//! pair in either order relation, the star of a distinguished vertex),
//! the analysis assigns a verdict together with a finite certificate:
//! an impossibility witness (a digraph in the class whose image leaves
//! the class), a closure check, or an alignment / deletion /
//! linearization / composition trace. Verdicts are symbolic labels
//! transcribed from the case analysis; only the certificates are
//! asserted as facts, and every certificate re-verifies from scratch.

use crate::builder::{free_amalgam, Amalgam, AmalgamError};
use crate::canon::CanonicalCode;
use crate::digraph::{Digraph, OrderedDigraph, PairType, Tournament};
use crate::forbidden::{ForbiddenSet, Violation};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

use PairType::{Backward as B, Forward as E, NonEdge as N};

/// A map on the three 2-types, read on increasing pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Behavior {
    pub non_edge: PairType,
    pub forward: PairType,
    pub backward: PairType,
}

impl Behavior {
    pub const IDENTITY: Behavior = Behavior {
        non_edge: N,
        forward: E,
        backward: B,
    };

    /// The edge-reversal behaviour.
    pub const REVERSAL: Behavior = Behavior {
        non_edge: N,
        forward: B,
        backward: E,
    };

    pub fn new(non_edge: PairType, forward: PairType, backward: PairType) -> Self {
        Behavior {
            non_edge,
            forward,
            backward,
        }
    }

    pub fn apply(&self, t: PairType) -> PairType {
        match t {
            N => self.non_edge,
            E => self.forward,
            B => self.backward,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Behavior::IDENTITY
    }

    fn triple(&self) -> (PairType, PairType, PairType) {
        (self.non_edge, self.forward, self.backward)
    }

    /// The behaviour with the roles of `E` and `E*` exchanged throughout.
    pub fn dual(&self) -> Behavior {
        Behavior {
            non_edge: self.non_edge.swap(),
            forward: self.backward.swap(),
            backward: self.forward.swap(),
        }
    }

    /// Plain function composition `self ∘ first`.
    pub fn after(&self, first: &Behavior) -> Behavior {
        Behavior {
            non_edge: self.apply(first.non_edge),
            forward: self.apply(first.forward),
            backward: self.apply(first.backward),
        }
    }

    /// The preimages of `t`, in the preference order `N`, `E`, `E*`.
    fn preimages(&self, t: PairType) -> Vec<PairType> {
        [N, E, B]
            .into_iter()
            .filter(|&s| self.apply(s) == t)
            .collect()
    }
}

impl fmt::Display for Behavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N>{} E>{} E*>{}",
            self.non_edge.symbol(),
            self.forward.symbol(),
            self.backward.symbol()
        )
    }
}

/// All 27 behaviours, in a fixed deterministic order.
pub fn enumerate_behaviors() -> Vec<Behavior> {
    let mut out = Vec::with_capacity(27);
    for n in PairType::ALL {
        for e in PairType::ALL {
            for b in PairType::ALL {
                out.push(Behavior::new(n, e, b));
            }
        }
    }
    out
}

/// Applies a behaviour to every increasing pair of an ordered digraph.
pub fn apply_behavior(b: &Behavior, d: &OrderedDigraph) -> Digraph {
    let src = d.digraph();
    let mut out = Digraph::empty(src.n());
    for u in 0..src.n() {
        for v in u + 1..src.n() {
            out.set_pair(u, v, b.apply(src.pair_type(u, v)));
        }
    }
    out
}

/// The behaviours achievable by applying `first`, re-embedding the image
/// with either order orientation, then applying `second`. Each source
/// type independently picks an orientation, so up to 8 behaviours arise.
pub fn compose_behaviors(second: &Behavior, first: &Behavior) -> BTreeSet<Behavior> {
    let options = |t: PairType| -> Vec<PairType> {
        let mid = first.apply(t);
        let mut opts = vec![second.apply(mid), second.apply(mid.swap()).swap()];
        opts.dedup();
        opts
    };
    let ns = options(N);
    let es = options(E);
    let bs = options(B);
    let mut out = BTreeSet::new();
    for &n in &ns {
        for &e in &es {
            for &b in &bs {
                out.insert(Behavior::new(n, e, b));
            }
        }
    }
    out
}

/// Image for the edges at one vertex under a star rewrite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StarImage {
    None,
    /// Edge into the distinguished vertex.
    In,
    /// Edge out of the distinguished vertex.
    Out,
}

/// A rewrite rule for the edges meeting one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StarRule {
    pub incoming: StarImage,
    pub outgoing: StarImage,
}

/// Rewrites the edges meeting `v` according to `rule`; edges not meeting
/// `v` (and non-edges) are unchanged.
pub fn transform_star(t: &Tournament, v: usize, rule: StarRule) -> Digraph {
    let src = t.digraph();
    let mut out = src.clone();
    for u in 0..src.n() {
        if u == v {
            continue;
        }
        let image = if src.has_edge(u, v) {
            rule.incoming
        } else if src.has_edge(v, u) {
            rule.outgoing
        } else {
            continue;
        };
        out.set_pair(
            u,
            v,
            match image {
                StarImage::None => PairType::NonEdge,
                StarImage::In => PairType::Forward,   // u -> v
                StarImage::Out => PairType::Backward, // v -> u
            },
        );
    }
    out
}

/// Free amalgam of `a` and a constants part over the distinguished
/// vertex `a0`: the realization argument for independent orbits. Any
/// tournament in the result lies wholly in one side, so the amalgam
/// stays in the class whenever both sides do.
pub fn realize_over_independent(
    a: &Digraph,
    a0: usize,
    constants_part: &Digraph,
    a0_in_constants: usize,
) -> Result<Amalgam, AmalgamError> {
    free_amalgam(a, constants_part, &[(a0, a0_in_constants)])
}

/// How a behaviour acts on a concrete finite digraph in each context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AppliedMap {
    /// Every increasing pair is transformed.
    Full(Behavior),
    /// Only pairs `(x, center)` are transformed, read in that coordinate
    /// order; the rest of the digraph is fixed.
    Star { behavior: Behavior, center: usize },
    /// Star at `center`: pairs `(x, center)` are transformed by
    /// `increasing` when `x < center` and by `decreasing` when
    /// `x > center`.
    StarDirected {
        increasing: Behavior,
        decreasing: Behavior,
        center: usize,
    },
}

impl AppliedMap {
    pub fn apply(&self, d: &Digraph) -> Digraph {
        match self {
            AppliedMap::Full(b) => apply_behavior(b, &OrderedDigraph(d.clone())),
            AppliedMap::Star { behavior, center } => {
                let mut out = d.clone();
                for x in 0..d.n() {
                    if x != *center {
                        out.set_pair(x, *center, behavior.apply(d.pair_type(x, *center)));
                    }
                }
                out
            }
            AppliedMap::StarDirected {
                increasing,
                decreasing,
                center,
            } => {
                let mut out = d.clone();
                for x in 0..d.n() {
                    if x == *center {
                        continue;
                    }
                    let b = if x < *center { increasing } else { decreasing };
                    out.set_pair(x, *center, b.apply(d.pair_type(x, *center)));
                }
                out
            }
        }
    }

    fn center(&self) -> Option<usize> {
        match self {
            AppliedMap::Full(_) => None,
            AppliedMap::Star { center, .. } | AppliedMap::StarDirected { center, .. } => {
                Some(*center)
            }
        }
    }
}

/// The symbolic outcome assigned to a behaviour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Identity,
    GeneratesMinus,
    GeneratesSw,
    DominatesGraphAut,
    FullSym,
    Impossible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Identity => "Identity",
            Verdict::GeneratesMinus => "GeneratesMinus",
            Verdict::GeneratesSw => "GeneratesSw",
            Verdict::DominatesGraphAut => "DominatesGraphAut",
            Verdict::FullSym => "FullSym",
            Verdict::Impossible => "Impossible",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrbitOrder {
    Below,
    Above,
    Interdense,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BehaviorContext {
    NoConstants,
    OneIndependentOrbit,
    OrbitPair { order: OrbitOrder },
    ConstantStar,
}

impl fmt::Display for BehaviorContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BehaviorContext::NoConstants => write!(f, "no-constants"),
            BehaviorContext::OneIndependentOrbit => write!(f, "one-orbit"),
            BehaviorContext::OrbitPair { order } => match order {
                OrbitOrder::Below => write!(f, "orbit-pair/below"),
                OrbitOrder::Above => write!(f, "orbit-pair/above"),
                OrbitOrder::Interdense => write!(f, "orbit-pair/interdense"),
            },
            BehaviorContext::ConstantStar => write!(f, "constant-star"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ContextBehavior {
    Single(Behavior),
    Directed {
        increasing: Behavior,
        decreasing: Behavior,
    },
}

impl fmt::Display for ContextBehavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextBehavior::Single(b) => write!(f, "{b}"),
            ContextBehavior::Directed {
                increasing,
                decreasing,
            } => write!(f, "inc[{increasing}] dec[{decreasing}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureKind {
    Minus,
    Sw,
}

/// Closure evidence: each member, transformed, still embeds a member.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureCert {
    pub kind: ClosureKind,
    pub evidence: Vec<ClosureEvidence>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureEvidence {
    pub member_index: usize,
    /// Switched vertex, for `Sw`.
    pub vertex: Option<usize>,
    pub transformed: Digraph,
    pub violation: Violation,
}

/// A verified impossibility: `witness` lies in the class, its image
/// under `map` embeds a forbidden tournament.
#[derive(Clone, Debug, Serialize)]
pub struct ImpossibleCert {
    pub map: AppliedMap,
    pub witness: Digraph,
    pub image: Digraph,
    pub violation: Violation,
    /// Preceding images when the witness arises as an iterate.
    pub steps: Vec<Digraph>,
    pub note: String,
    /// Realization of the witness over a constants part, where the
    /// context calls for it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub amalgam: Option<Amalgam>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlignKind {
    Increasing,
    Decreasing,
    IntoCenter,
    OutOfCenter,
}

/// An edge-alignment trace: the image keeps the underlying graph and
/// points every transformed edge the same way.
#[derive(Clone, Debug, Serialize)]
pub struct AlignmentCert {
    pub map: AppliedMap,
    pub kind: AlignKind,
    pub input: Digraph,
    pub image: Digraph,
}

/// An edge-deletion trace: the image has strictly fewer edges.
#[derive(Clone, Debug, Serialize)]
pub struct DeletionCert {
    pub map: AppliedMap,
    pub input: Digraph,
    pub image: Digraph,
}

/// A single-edge-flip trace: exactly one pair changes direction and
/// everything else is fixed.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeFlipCert {
    pub map: AppliedMap,
    pub input: Digraph,
    pub image: Digraph,
    pub flipped: (usize, usize),
}

/// Distinct inputs collapsing onto one transitive tournament.
#[derive(Clone, Debug, Serialize)]
pub struct LinearizationCert {
    pub map: AppliedMap,
    pub inputs: Vec<Digraph>,
    pub image: Digraph,
}

/// A reduction through the composition of the behaviour with itself.
#[derive(Clone, Debug, Serialize)]
pub struct CompositionCert {
    pub square: Vec<Behavior>,
    pub target: Behavior,
    /// Members of the square outside the target's case shape; recorded,
    /// not failed on.
    pub extras: Vec<Behavior>,
    pub inner: Box<Certificate>,
}

#[derive(Clone, Debug, Serialize)]
pub enum Certificate {
    Identity,
    Closure(ClosureCert),
    Impossible(ImpossibleCert),
    Alignment(AlignmentCert),
    Deletion(DeletionCert),
    EdgeFlip(EdgeFlipCert),
    Linearization(LinearizationCert),
    Composition(CompositionCert),
}

impl Certificate {
    pub fn summary(&self) -> String {
        match self {
            Certificate::Identity => "identity".to_string(),
            Certificate::Closure(c) => format!(
                "closure({:?}) checked on {} member transforms",
                c.kind,
                c.evidence.len()
            ),
            Certificate::Impossible(c) => format!(
                "witness {} -> image embeds member {} ({})",
                c.witness, c.violation.member_index, c.note
            ),
            Certificate::Alignment(c) => format!("aligns {} ({:?})", c.input, c.kind),
            Certificate::Deletion(c) => format!("deletes edges: {} -> {}", c.input, c.image),
            Certificate::EdgeFlip(c) => {
                format!("flips exactly the pair {:?} of {}", c.flipped, c.input)
            }
            Certificate::Linearization(c) => {
                format!("{} inputs collapse onto {}", c.inputs.len(), c.image)
            }
            Certificate::Composition(c) => format!(
                "square reduces to [{}] ({} extras); then {}",
                c.target,
                c.extras.len(),
                c.inner.summary()
            ),
        }
    }

    /// Re-verifies the certificate from scratch against `t`.
    pub fn verify(&self, t: &ForbiddenSet) -> Result<(), String> {
        match self {
            Certificate::Identity => Ok(()),
            Certificate::Closure(c) => {
                if c.evidence.is_empty() {
                    return Err("closure certificate carries no evidence".into());
                }
                for ev in &c.evidence {
                    let member = t
                        .members()
                        .get(ev.member_index)
                        .ok_or("member index out of range")?;
                    let expect = match (c.kind, ev.vertex) {
                        (ClosureKind::Minus, None) => member.reverse(),
                        (ClosureKind::Sw, Some(v)) => {
                            member.switch_vertex(v).map_err(|e| e.to_string())?
                        }
                        _ => return Err("closure evidence shape mismatch".into()),
                    };
                    if expect.digraph() != &ev.transformed {
                        return Err("recorded transform does not match".into());
                    }
                    let inner = t
                        .members()
                        .get(ev.violation.member_index)
                        .ok_or("violation member out of range")?;
                    if !ev.violation.embedding.verify(inner, &ev.transformed) {
                        return Err("closure embedding does not verify".into());
                    }
                }
                Ok(())
            }
            Certificate::Impossible(c) => {
                if !t.admits(&c.witness) {
                    return Err("impossibility witness is not in the class".into());
                }
                let image = c.map.apply(&c.witness);
                if image != c.image {
                    return Err("recorded image does not match".into());
                }
                let member = t
                    .members()
                    .get(c.violation.member_index)
                    .ok_or("violation member out of range")?;
                if !c.violation.embedding.verify(member, &image) {
                    return Err("violation embedding does not verify".into());
                }
                if let Some(am) = &c.amalgam {
                    if !t.admits(&am.digraph) {
                        return Err("realization amalgam left the class".into());
                    }
                }
                Ok(())
            }
            Certificate::Alignment(c) => {
                if !t.admits(&c.input) {
                    return Err("alignment input not in the class".into());
                }
                let image = c.map.apply(&c.input);
                if image != c.image {
                    return Err("recorded alignment image does not match".into());
                }
                if image.underlying_graph() != c.input.underlying_graph() {
                    return Err("alignment changed the underlying graph".into());
                }
                let ok = match c.kind {
                    AlignKind::Increasing => image.edges().iter().all(|&(u, v)| u < v),
                    AlignKind::Decreasing => image.edges().iter().all(|&(u, v)| u > v),
                    AlignKind::IntoCenter => match c.map.center() {
                        Some(center) => {
                            (0..image.n()).all(|x| x == center || !image.has_edge(center, x))
                        }
                        None => false,
                    },
                    AlignKind::OutOfCenter => match c.map.center() {
                        Some(center) => {
                            (0..image.n()).all(|x| x == center || !image.has_edge(x, center))
                        }
                        None => false,
                    },
                };
                if !ok {
                    return Err("image is not aligned".into());
                }
                Ok(())
            }
            Certificate::Deletion(c) => {
                if !t.admits(&c.input) {
                    return Err("deletion input not in the class".into());
                }
                let image = c.map.apply(&c.input);
                if image != c.image {
                    return Err("recorded deletion image does not match".into());
                }
                if c.input.edge_count() == 0 || image.edge_count() >= c.input.edge_count() {
                    return Err("image does not lose edges".into());
                }
                Ok(())
            }
            Certificate::EdgeFlip(c) => {
                if !t.admits(&c.input) {
                    return Err("flip input not in the class".into());
                }
                let image = c.map.apply(&c.input);
                if image != c.image {
                    return Err("recorded flip image does not match".into());
                }
                let (a, b) = c.flipped;
                let mut diffs = 0;
                for u in 0..c.input.n() {
                    for v in u + 1..c.input.n() {
                        if c.input.pair_type(u, v) != image.pair_type(u, v) {
                            diffs += 1;
                            let hit = (u, v) == (a.min(b), a.max(b));
                            if !hit {
                                return Err("an unexpected pair changed".into());
                            }
                        }
                    }
                }
                if diffs != 1 {
                    return Err("flip did not change exactly one pair".into());
                }
                if c.input.pair_type(a, b) != image.pair_type(a, b).swap()
                    || c.input.pair_type(a, b) == PairType::NonEdge
                {
                    return Err("changed pair is not a direction flip".into());
                }
                Ok(())
            }
            Certificate::Linearization(c) => {
                if c.inputs.len() < 2 {
                    return Err("need at least two collapsing inputs".into());
                }
                for input in &c.inputs {
                    if !t.admits(input) {
                        return Err("linearization input not in the class".into());
                    }
                    if c.map.apply(input) != c.image {
                        return Err("inputs do not collapse onto the image".into());
                    }
                }
                if c.inputs.windows(2).any(|w| w[0] == w[1]) {
                    return Err("linearization inputs are not distinct".into());
                }
                if !c.image.is_tournament() || !c.image.three_cycles().is_empty() {
                    return Err("image is not a transitive tournament".into());
                }
                Ok(())
            }
            Certificate::Composition(c) => {
                if !c.square.contains(&c.target) {
                    return Err("target not in composition square".into());
                }
                c.inner.verify(t)
            }
        }
    }
}

/// One row of a case analysis.
#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub context: BehaviorContext,
    pub behavior: ContextBehavior,
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl CaseReport {
    pub fn summary_line(&self) -> String {
        format!(
            "{:<24} {:<30} {:<18} {}",
            self.context.to_string(),
            self.behavior.to_string(),
            self.verdict.to_string(),
            self.certificate.summary()
        )
    }
}

/// The case analyses available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    NoConstants,
    OneOrbit,
    OrbitsOrdered,
    OrbitsInterdense,
    ConstantStars,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::NoConstants,
        Lemma::OneOrbit,
        Lemma::OrbitsOrdered,
        Lemma::OrbitsInterdense,
        Lemma::ConstantStars,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Lemma::NoConstants => "L-noconstants",
            Lemma::OneOrbit => "L-oneorbit",
            Lemma::OrbitsOrdered => "L-xlessthany",
            Lemma::OrbitsInterdense => "L-xyinterdense",
            Lemma::ConstantStars => "L-constants",
        }
    }

    pub fn from_id(id: &str) -> Option<Lemma> {
        Lemma::ALL.into_iter().find(|l| l.id() == id)
    }
}

#[derive(Debug, Error)]
pub enum BehaviorError {
    #[error("witness construction failed for behaviour [{behavior}] in {context}: {detail}")]
    WitnessConstruction {
        context: String,
        behavior: String,
        detail: String,
    },
    #[error("certificate for behaviour [{behavior}] failed re-verification: {detail}")]
    CertificateInvalid { behavior: String, detail: String },
}

/// Runs the chosen case analysis for every behaviour, re-verifying every
/// certificate before returning.
pub fn verify_lemma_table(
    lemma: Lemma,
    t: &ForbiddenSet,
) -> Result<Vec<CaseReport>, BehaviorError> {
    let reports = match lemma {
        Lemma::NoConstants => full_table(t, BehaviorContext::NoConstants)?,
        Lemma::OneOrbit => full_table(t, BehaviorContext::OneIndependentOrbit)?,
        Lemma::OrbitsOrdered => star_table(
            t,
            BehaviorContext::OrbitPair {
                order: OrbitOrder::Below,
            },
        )?,
        Lemma::OrbitsInterdense => interdense_table(t)?,
        Lemma::ConstantStars => star_table(t, BehaviorContext::ConstantStar)?,
    };
    for r in &reports {
        if let Err(detail) = r.certificate.verify(t) {
            return Err(BehaviorError::CertificateInvalid {
                behavior: r.behavior.to_string(),
                detail,
            });
        }
    }
    Ok(reports)
}

fn full_table(
    t: &ForbiddenSet,
    context: BehaviorContext,
) -> Result<Vec<CaseReport>, BehaviorError> {
    enumerate_behaviors()
        .into_iter()
        .map(|b| {
            let (verdict, certificate) = classify_full(&b, t, context)?;
            Ok(CaseReport {
                context,
                behavior: ContextBehavior::Single(b),
                verdict,
                certificate,
            })
        })
        .collect()
}

fn star_table(
    t: &ForbiddenSet,
    context: BehaviorContext,
) -> Result<Vec<CaseReport>, BehaviorError> {
    enumerate_behaviors()
        .into_iter()
        .map(|b| {
            let (verdict, certificate) = classify_star(&b, t, context)?;
            Ok(CaseReport {
                context,
                behavior: ContextBehavior::Single(b),
                verdict,
                certificate,
            })
        })
        .collect()
}

type Classified = (Verdict, Certificate);

fn err(context: BehaviorContext, b: &Behavior, detail: impl Into<String>) -> BehaviorError {
    BehaviorError::WitnessConstruction {
        context: context.to_string(),
        behavior: b.to_string(),
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------------
// Full-structure contexts (no constants / one independent orbit)
// ---------------------------------------------------------------------

fn classify_full(
    b: &Behavior,
    t: &ForbiddenSet,
    context: BehaviorContext,
) -> Result<Classified, BehaviorError> {
    let map = AppliedMap::Full(*b);
    match b.triple() {
        (N, E, B) => Ok((Verdict::Identity, Certificate::Identity)),
        (N, B, E) => reversal_row(b, t, map, context),
        // The eight shapes whose single or iterated application re-creates
        // a forbidden tournament.
        (E, E, B) | (B, E, B) => impossible_row(b, t, &map, &[Route::EdgeDelete, Route::Preimage], context),
        (E, B, E) | (B, B, E) => impossible_row(b, t, &map, &[Route::Preimage, Route::Chain], context),
        (E, B, N) | (E, N, B) | (B, N, E) | (B, E, N) => {
            impossible_row(b, t, &map, &[Route::Chain, Route::Preimage], context)
        }
        (N, E, E) => Ok((
            Verdict::DominatesGraphAut,
            alignment_cert(map, AlignKind::Increasing),
        )),
        (N, B, B) => Ok((
            Verdict::DominatesGraphAut,
            alignment_cert(map, AlignKind::Decreasing),
        )),
        (E, N, N) | (B, N, N) => composition_row(b, context, CompTarget::Alignment),
        (N, _, _) => Ok((Verdict::FullSym, deletion_cert(map))),
        (E, E, E) | (B, B, B) => Ok((Verdict::FullSym, linearization_cert(map))),
        _ => composition_row(b, context, CompTarget::FullSym),
    }
}

fn impossible_row(
    b: &Behavior,
    t: &ForbiddenSet,
    map: &AppliedMap,
    routes: &[Route],
    context: BehaviorContext,
) -> Result<Classified, BehaviorError> {
    let cert = find_impossible(b, t, map, routes)
        .ok_or_else(|| err(context, b, "no witness construction verified"))?;
    Ok((Verdict::Impossible, Certificate::Impossible(cert)))
}

fn reversal_row(
    b: &Behavior,
    t: &ForbiddenSet,
    map: AppliedMap,
    context: BehaviorContext,
) -> Result<Classified, BehaviorError> {
    let star = !matches!(map, AppliedMap::Full(_));
    let closed = if star {
        t.closed_under_sw()
    } else {
        t.closed_under_minus()
    };
    if closed {
        let (verdict, cert) = if star {
            (Verdict::GeneratesSw, sw_closure_cert(t))
        } else {
            (Verdict::GeneratesMinus, minus_closure_cert(t))
        };
        Ok((verdict, Certificate::Closure(cert)))
    } else {
        let cert = find_impossible(b, t, &map, &[Route::Preimage])
            .ok_or_else(|| err(context, b, "closure fails but no reversal witness found"))?;
        Ok((Verdict::Impossible, Certificate::Impossible(cert)))
    }
}

fn minus_closure_cert(t: &ForbiddenSet) -> ClosureCert {
    let evidence = t
        .members()
        .iter()
        .enumerate()
        .map(|(member_index, m)| {
            let transformed = m.reverse();
            let violation = t
                .violation(transformed.digraph())
                .expect("closure holds, so the reversal embeds a member");
            ClosureEvidence {
                member_index,
                vertex: None,
                transformed: transformed.digraph().clone(),
                violation,
            }
        })
        .collect();
    ClosureCert {
        kind: ClosureKind::Minus,
        evidence,
    }
}

fn sw_closure_cert(t: &ForbiddenSet) -> ClosureCert {
    let mut evidence = Vec::new();
    for (member_index, m) in t.members().iter().enumerate() {
        for v in 0..m.n() {
            let transformed = m.switch_vertex(v).expect("vertex in range");
            let violation = t
                .violation(transformed.digraph())
                .expect("closure holds, so the switch embeds a member");
            evidence.push(ClosureEvidence {
                member_index,
                vertex: Some(v),
                transformed: transformed.digraph().clone(),
                violation,
            });
        }
    }
    ClosureCert {
        kind: ClosureKind::Sw,
        evidence,
    }
}

enum CompTarget {
    Alignment,
    FullSym,
}

fn is_alignment_shape(c: &Behavior) -> bool {
    matches!(c.triple(), (N, E, E) | (N, B, B))
}

fn is_linearization_shape(c: &Behavior) -> bool {
    matches!(c.triple(), (E, E, E) | (B, B, B))
}

fn is_deletion_shape(c: &Behavior) -> bool {
    c.non_edge == N && (c.forward == N || c.backward == N)
}

fn composition_row(
    b: &Behavior,
    context: BehaviorContext,
    want: CompTarget,
) -> Result<Classified, BehaviorError> {
    let square: Vec<Behavior> = compose_behaviors(b, b).into_iter().collect();
    let (verdict, target) = match want {
        CompTarget::Alignment => (
            Verdict::DominatesGraphAut,
            square.iter().find(|c| is_alignment_shape(c)),
        ),
        CompTarget::FullSym => (
            Verdict::FullSym,
            square
                .iter()
                .find(|c| is_linearization_shape(c))
                .or_else(|| square.iter().find(|c| is_deletion_shape(c))),
        ),
    };
    let target = *target.ok_or_else(|| err(context, b, "square contains no reduction target"))?;
    let inner = if is_alignment_shape(&target) {
        let kind = if target.forward == E {
            AlignKind::Increasing
        } else {
            AlignKind::Decreasing
        };
        alignment_cert(AppliedMap::Full(target), kind)
    } else if is_linearization_shape(&target) {
        linearization_cert(AppliedMap::Full(target))
    } else {
        deletion_cert(AppliedMap::Full(target))
    };
    let in_target_class = |c: &Behavior| match want {
        CompTarget::Alignment => is_alignment_shape(c),
        CompTarget::FullSym => is_linearization_shape(c) || is_deletion_shape(c),
    };
    let extras = square
        .iter()
        .filter(|c| !in_target_class(c))
        .copied()
        .collect();
    Ok((
        verdict,
        Certificate::Composition(CompositionCert {
            square,
            target,
            extras,
            inner: Box::new(inner),
        }),
    ))
}

// ---------------------------------------------------------------------
// Demonstration inputs; each lies in every valid class (no three
// pairwise-adjacent vertices).
// ---------------------------------------------------------------------

// One increasing edge, one decreasing edge, one non-adjacent pair.
fn mixed_demo() -> Digraph {
    Digraph::new(3, [(1, 2), (2, 0)]).unwrap()
}

/// Star analogue: one edge into the center, one out of it, one further
/// vertex non-adjacent to it; non-star pairs non-adjacent.
fn star_mixed_demo(center: usize) -> Digraph {
    let n = 4;
    let mut d = Digraph::empty(n);
    let others: Vec<usize> = (0..n).filter(|&v| v != center).collect();
    d.set_pair(others[0], center, PairType::Forward);
    d.set_pair(others[1], center, PairType::Backward);
    d
}

fn alignment_cert(map: AppliedMap, kind: AlignKind) -> Certificate {
    let input = match map.center() {
        None => mixed_demo(),
        Some(center) => star_mixed_demo(center),
    };
    let image = map.apply(&input);
    Certificate::Alignment(AlignmentCert {
        map,
        kind,
        input,
        image,
    })
}

fn deletion_cert(map: AppliedMap) -> Certificate {
    let input = match map.center() {
        None => mixed_demo(),
        Some(center) => star_mixed_demo(center),
    };
    let image = map.apply(&input);
    Certificate::Deletion(DeletionCert { map, input, image })
}

fn linearization_cert(map: AppliedMap) -> Certificate {
    let inputs = match map.center() {
        None => vec![mixed_demo(), Digraph::new(3, [(2, 0)]).unwrap()],
        Some(center) => star_linearization_inputs(center),
    };
    let image = map.apply(&inputs[0]);
    Certificate::Linearization(LinearizationCert { map, inputs, image })
}

/// Two distinct three-vertex inputs whose non-star part is a linear
/// order and whose star types differ; any all-edges star image collapses
/// them onto the same tournament.
fn star_linearization_inputs(center: usize) -> Vec<Digraph> {
    let n = 3;
    let others: Vec<usize> = (0..n).filter(|&v| v != center).collect();
    let mk = |types: [PairType; 2]| {
        let mut d = Digraph::empty(n);
        d.set_pair(others[0], others[1], PairType::Forward);
        for (i, ty) in types.into_iter().enumerate() {
            d.set_pair(others[i], center, ty);
        }
        d
    };
    vec![mk([N, B]), mk([B, N])]
}

// ---------------------------------------------------------------------
// Impossibility witnesses
// ---------------------------------------------------------------------

enum Route {
    /// Delete one pair of type `b(N)` from a member; the image restores it.
    EdgeDelete,
    /// Build a preimage of a member pair-by-pair from inverse images.
    Preimage,
    /// Iterate the map on an ordered member until it re-creates a member.
    Chain,
}

fn find_impossible(
    b: &Behavior,
    t: &ForbiddenSet,
    map: &AppliedMap,
    routes: &[Route],
) -> Option<ImpossibleCert> {
    for route in routes {
        let found = match (route, map) {
            (Route::EdgeDelete, AppliedMap::Full(_)) => edge_delete_witness(b, t),
            (Route::Preimage, AppliedMap::Full(_)) => preimage_witness(b, t),
            (Route::Chain, AppliedMap::Full(_)) => chain_witness(b, t),
            (Route::EdgeDelete, _) | (Route::Preimage, _) => star_preimage_witness(b, t, map),
            (Route::Chain, _) => star_chain_witness(b, t, map),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

impl ImpossibleCert {
    fn build(
        map: &AppliedMap,
        witness: Digraph,
        t: &ForbiddenSet,
        steps: Vec<Digraph>,
        note: String,
        amalgam: Option<Amalgam>,
    ) -> Option<ImpossibleCert> {
        if !t.admits(&witness) {
            return None;
        }
        let image = map.apply(&witness);
        let violation = t.violation(&image)?;
        Some(ImpossibleCert {
            map: map.clone(),
            witness,
            image,
            violation,
            steps,
            note,
            amalgam,
        })
    }
}

/// Orderings of a member worth trying: the identity labelling, its
/// reversal, then lexicographic permutations up to a cap.
fn orderings(n: usize) -> Vec<Vec<usize>> {
    const CAP: usize = 1000;
    let identity: Vec<usize> = (0..n).collect();
    let reversed: Vec<usize> = (0..n).rev().collect();
    let mut out = vec![identity.clone(), reversed];
    let mut perm = identity;
    let mut count = 0;
    permute_collect(&mut perm, 0, &mut out, &mut count, CAP);
    out.dedup();
    out
}

fn permute_collect(
    perm: &mut Vec<usize>,
    k: usize,
    out: &mut Vec<Vec<usize>>,
    count: &mut usize,
    cap: usize,
) {
    if *count >= cap {
        return;
    }
    if k == perm.len() {
        out.push(perm.clone());
        *count += 1;
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_collect(perm, k + 1, out, count, cap);
        perm.swap(k, i);
    }
}

/// For behaviours fixing both edge types with `b(N)` an edge: delete one
/// pair of type `b(N)` from an ordered member; the image restores it.
fn edge_delete_witness(b: &Behavior, t: &ForbiddenSet) -> Option<ImpossibleCert> {
    if b.forward != E || b.backward != B || b.non_edge == N {
        return None;
    }
    let map = AppliedMap::Full(*b);
    for member in t.members() {
        let d = member.digraph();
        for order in orderings(d.n()) {
            let placed = d.induced(&order);
            let target = (0..placed.n())
                .flat_map(|u| (u + 1..placed.n()).map(move |v| (u, v)))
                .find(|&(u, v)| placed.pair_type(u, v) == b.non_edge);
            let Some((u, v)) = target else { continue };
            let mut witness = placed;
            witness.clear_pair(u, v);
            if let Some(cert) = ImpossibleCert::build(
                &map,
                witness,
                t,
                Vec::new(),
                "member minus one edge; the image restores it".into(),
                None,
            ) {
                return Some(cert);
            }
        }
    }
    None
}

/// Builds a preimage of an ordered member pair-by-pair from the
/// behaviour's inverse images, preferring non-edges.
fn preimage_witness(b: &Behavior, t: &ForbiddenSet) -> Option<ImpossibleCert> {
    let map = AppliedMap::Full(*b);
    for member in t.members() {
        let d = member.digraph();
        let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
        for order in orderings(d.n()) {
            let placed = d.induced(&order);
            let mut witness = Digraph::empty(placed.n());
            let mut ok = true;
            'pairs: for u in 0..placed.n() {
                for v in u + 1..placed.n() {
                    let needed = placed.pair_type(u, v);
                    match b.preimages(needed).first() {
                        Some(&p) => witness.set_pair(u, v, p),
                        None => {
                            ok = false;
                            break 'pairs;
                        }
                    }
                }
            }
            if !ok {
                break; // inverse images do not depend on the ordering
            }
            if !seen.insert(witness.canonical_code()) {
                continue;
            }
            if let Some(cert) = ImpossibleCert::build(
                &map,
                witness,
                t,
                Vec::new(),
                "preimage of the member under the behaviour".into(),
                None,
            ) {
                return Some(cert);
            }
        }
    }
    None
}

/// Iterates the map on an ordered member: if some iterate lies in the
/// class and its successor does not, that iterate is a witness.
fn chain_witness(b: &Behavior, t: &ForbiddenSet) -> Option<ImpossibleCert> {
    let map = AppliedMap::Full(*b);
    for member in t.members() {
        let d = member.digraph();
        for order in orderings(d.n()).into_iter().take(16) {
            let start = d.induced(&order);
            if let Some(cert) = chain_from(&map, start, t) {
                return Some(cert);
            }
        }
    }
    None
}

fn chain_from(map: &AppliedMap, start: Digraph, t: &ForbiddenSet) -> Option<ImpossibleCert> {
    let mut steps = vec![start.clone()];
    let mut current = map.apply(&start);
    for _ in 0..3 {
        if t.admits(&current) {
            let next = map.apply(&current);
            if t.violation(&next).is_some() {
                let note = format!(
                    "iterate {} of the ordered member re-creates a member",
                    steps.len()
                );
                return ImpossibleCert::build(map, current, t, steps, note, None);
            }
        }
        steps.push(current.clone());
        current = map.apply(&current);
    }
    None
}

// ---------------------------------------------------------------------
// Star contexts (orbit pairs and constant stars)
// ---------------------------------------------------------------------

fn classify_star(
    b: &Behavior,
    t: &ForbiddenSet,
    context: BehaviorContext,
) -> Result<Classified, BehaviorError> {
    match b.triple() {
        (N, E, B) => Ok((Verdict::Identity, Certificate::Identity)),
        (N, B, E) => reversal_row(b, t, star_map(b, 0), context),
        // Families whose star construction re-creates a member: the
        // non-edge image is an edge and the star rewrite has preimages.
        (E, B, _) | (E, E, B) | (E, N, B) | (B, _, E) | (B, E, B) | (B, E, N) => impossible_row(
            b,
            t,
            &star_map(b, 0),
            &[Route::Preimage, Route::Chain],
            context,
        ),
        (N, E, E) => Ok((
            Verdict::DominatesGraphAut,
            alignment_cert(star_map(b, 3), AlignKind::IntoCenter),
        )),
        (N, B, B) => Ok((
            Verdict::DominatesGraphAut,
            alignment_cert(star_map(b, 3), AlignKind::OutOfCenter),
        )),
        (E, N, N) | (B, N, N) => star_composition_row(b, context, CompTarget::Alignment),
        (N, _, _) => Ok((Verdict::FullSym, deletion_cert(star_map(b, 3)))),
        (E, E, E) | (B, B, B) => Ok((Verdict::FullSym, linearization_cert(star_map(b, 2)))),
        _ => star_composition_row(b, context, CompTarget::FullSym),
    }
}

fn star_map(b: &Behavior, center: usize) -> AppliedMap {
    AppliedMap::Star {
        behavior: *b,
        center,
    }
}

/// In star contexts the intermediate re-embedding keeps the
/// distinguished vertex distinguished, so the square is plain
/// composition and is single-valued.
fn star_composition_row(
    b: &Behavior,
    context: BehaviorContext,
    want: CompTarget,
) -> Result<Classified, BehaviorError> {
    let square = b.after(b);
    let ok = match want {
        CompTarget::Alignment => is_alignment_shape(&square),
        CompTarget::FullSym => is_linearization_shape(&square) || is_deletion_shape(&square),
    };
    if !ok {
        return Err(err(context, b, "star square is not of the reduced shape"));
    }
    let inner = if is_alignment_shape(&square) {
        let kind = if square.forward == E {
            AlignKind::IntoCenter
        } else {
            AlignKind::OutOfCenter
        };
        alignment_cert(star_map(&square, 3), kind)
    } else if is_linearization_shape(&square) {
        linearization_cert(star_map(&square, 2))
    } else {
        deletion_cert(star_map(&square, 3))
    };
    let verdict = match want {
        CompTarget::Alignment => Verdict::DominatesGraphAut,
        CompTarget::FullSym => Verdict::FullSym,
    };
    Ok((
        verdict,
        Certificate::Composition(CompositionCert {
            square: vec![square],
            target: square,
            extras: Vec::new(),
            inner: Box::new(inner),
        }),
    ))
}

/// Star preimage: rewrite the star of a chosen vertex of a member from
/// the behaviour's inverse images (preferring non-edges), keep the rest;
/// the star map restores the member. The witness is also realized over a
/// one-constant part by free amalgamation.
fn star_preimage_witness(
    b: &Behavior,
    t: &ForbiddenSet,
    map: &AppliedMap,
) -> Option<ImpossibleCert> {
    for member in t.members() {
        let d = member.digraph();
        let n = d.n();
        let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
        for center in 0..n {
            // Place the center last: in a below-ordered pair context every
            // orbit element precedes the distinguished vertex.
            let mut order: Vec<usize> = (0..n).filter(|&v| v != center).collect();
            order.push(center);
            let placed = d.induced(&order);
            let placed_center = n - 1;
            let mut witness = placed.clone();
            let mut ok = true;
            for x in 0..n - 1 {
                let needed = placed.pair_type(x, placed_center);
                match b.preimages(needed).first() {
                    Some(&p) => witness.set_pair(x, placed_center, p),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            if !seen.insert(witness.canonical_code()) {
                continue;
            }
            let remapped = remap_center(map, placed_center);
            let amalgam = star_realization(&witness, placed_center, t);
            if let Some(cert) = ImpossibleCert::build(
                &remapped,
                witness,
                t,
                Vec::new(),
                "member with its star rewritten from inverse images".into(),
                amalgam,
            ) {
                return Some(cert);
            }
        }
    }
    None
}

/// Realizes a star witness over a one-constant part: the distinguished
/// vertex gets a constant neighbour, everything else amalgamates freely.
fn star_realization(witness: &Digraph, center: usize, t: &ForbiddenSet) -> Option<Amalgam> {
    let constants_part = Digraph::new(2, [(1, 0)]).unwrap(); // constant -> center
    let amalgam = realize_over_independent(witness, center, &constants_part, 0).ok()?;
    if t.admits(&amalgam.digraph) {
        Some(amalgam)
    } else {
        None
    }
}

fn star_chain_witness(b: &Behavior, t: &ForbiddenSet, map: &AppliedMap) -> Option<ImpossibleCert> {
    for member in t.members() {
        let d = member.digraph();
        let n = d.n();
        for center in 0..n {
            let mut order: Vec<usize> = (0..n).filter(|&v| v != center).collect();
            order.push(center);
            let start = d.induced(&order);
            let remapped = remap_center(map, n - 1);
            if let Some(cert) = chain_from(&remapped, start, t) {
                return Some(cert);
            }
        }
    }
    let _ = b;
    None
}

fn remap_center(map: &AppliedMap, center: usize) -> AppliedMap {
    match map {
        AppliedMap::Full(b) => AppliedMap::Full(*b),
        AppliedMap::Star { behavior, .. } => AppliedMap::Star {
            behavior: *behavior,
            center,
        },
        AppliedMap::StarDirected {
            increasing,
            decreasing,
            ..
        } => AppliedMap::StarDirected {
            increasing: *increasing,
            decreasing: *decreasing,
            center,
        },
    }
}

// ---------------------------------------------------------------------
// Interdense orbit pairs: one behaviour per order direction
// ---------------------------------------------------------------------

fn interdense_table(t: &ForbiddenSet) -> Result<Vec<CaseReport>, BehaviorError> {
    let context = BehaviorContext::OrbitPair {
        order: OrbitOrder::Interdense,
    };
    let behaviors = enumerate_behaviors();
    let mut per_direction = Vec::with_capacity(27);
    for b in &behaviors {
        per_direction.push(classify_star(b, t, context)?);
    }
    let mut out = Vec::with_capacity(27 * 27);
    for (i, inc) in behaviors.iter().enumerate() {
        for (j, dec) in behaviors.iter().enumerate() {
            let (verdict, certificate) = combine_interdense(
                inc,
                dec,
                &per_direction[i],
                &per_direction[j],
                t,
                context,
            )?;
            out.push(CaseReport {
                context,
                behavior: ContextBehavior::Directed {
                    increasing: *inc,
                    decreasing: *dec,
                },
                verdict,
                certificate,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Inc,
    Dec,
}

fn combine_interdense(
    inc: &Behavior,
    dec: &Behavior,
    inc_class: &Classified,
    dec_class: &Classified,
    t: &ForbiddenSet,
    context: BehaviorContext,
) -> Result<Classified, BehaviorError> {
    let sides = [(Side::Inc, inc, inc_class), (Side::Dec, dec, dec_class)];
    // A one-sided impossibility carries over: place the distinguished
    // vertex at the end where only that side acts.
    for (side, b, class) in sides {
        if class.0 == Verdict::Impossible {
            let cert = transfer_impossible(side, inc, dec, &class.1, t)
                .ok_or_else(|| err(context, b, "one-sided witness did not transfer"))?;
            return Ok((Verdict::Impossible, cert));
        }
    }
    for want in [Verdict::FullSym, Verdict::DominatesGraphAut] {
        for (side, b, class) in sides {
            if class.0 == want {
                let cert = directed_side_cert(side, b, inc, dec, context)?;
                return Ok((want, cert));
            }
        }
    }
    // Both sides behave like the identity or like the switch.
    let id_inc = inc_class.0 == Verdict::Identity;
    let id_dec = dec_class.0 == Verdict::Identity;
    match (id_inc, id_dec) {
        (true, true) => Ok((Verdict::Identity, Certificate::Identity)),
        (false, false) => {
            if t.closed_under_sw() {
                Ok((
                    Verdict::GeneratesSw,
                    Certificate::Closure(sw_closure_cert(t)),
                ))
            } else {
                let cert = both_switch_witness(inc, dec, t)
                    .ok_or_else(|| err(context, inc, "no double-switch witness found"))?;
                Ok((Verdict::Impossible, Certificate::Impossible(cert)))
            }
        }
        _ => Ok((
            Verdict::DominatesGraphAut,
            mixed_switch_cert(inc, dec, id_inc),
        )),
    }
}

/// Re-places a one-sided star witness so the center sits at the end
/// where the given side acts, and re-verifies under the directed map.
fn transfer_impossible(
    side: Side,
    inc: &Behavior,
    dec: &Behavior,
    cert: &Certificate,
    t: &ForbiddenSet,
) -> Option<Certificate> {
    let Certificate::Impossible(c) = cert else {
        return None;
    };
    let old_center = c.map.center()?;
    let n = c.witness.n();
    let mut order: Vec<usize> = (0..n).filter(|&v| v != old_center).collect();
    let center = match side {
        Side::Inc => {
            order.push(old_center);
            n - 1
        }
        Side::Dec => {
            order.insert(0, old_center);
            0
        }
    };
    let witness = c.witness.induced(&order);
    let map = AppliedMap::StarDirected {
        increasing: *inc,
        decreasing: *dec,
        center,
    };
    let side_name = match side {
        Side::Inc => "increasing",
        Side::Dec => "decreasing",
    };
    ImpossibleCert::build(
        &map,
        witness,
        t,
        Vec::new(),
        format!("{} ({side_name} side of the interdense pair)", c.note),
        c.amalgam.clone(),
    )
    .map(Certificate::Impossible)
}

/// Builds the demonstration certificate for the acting side of an
/// interdense pair: the demo places every orbit vertex on that side of
/// the center, so the other direction's behaviour never acts.
fn directed_side_cert(
    side: Side,
    side_behavior: &Behavior,
    inc: &Behavior,
    dec: &Behavior,
    context: BehaviorContext,
) -> Result<Certificate, BehaviorError> {
    let directed = |n: usize| {
        let center = match side {
            Side::Inc => n - 1,
            Side::Dec => 0,
        };
        AppliedMap::StarDirected {
            increasing: *inc,
            decreasing: *dec,
            center,
        }
    };
    let cert = match side_behavior.triple() {
        (N, E, E) => alignment_cert(directed(4), AlignKind::IntoCenter),
        (N, B, B) => alignment_cert(directed(4), AlignKind::OutOfCenter),
        (N, _, _) => deletion_cert(directed(4)),
        (E, E, E) | (B, B, B) => linearization_cert(directed(3)),
        _ => {
            // Composition shape: square the acting side, then demonstrate
            // the reduced single behaviour.
            let square = side_behavior.after(side_behavior);
            let inner = if is_alignment_shape(&square) {
                let kind = if square.forward == E {
                    AlignKind::IntoCenter
                } else {
                    AlignKind::OutOfCenter
                };
                alignment_cert(star_map(&square, 3), kind)
            } else if is_linearization_shape(&square) {
                linearization_cert(star_map(&square, 2))
            } else if is_deletion_shape(&square) {
                deletion_cert(star_map(&square, 3))
            } else {
                return Err(err(
                    context,
                    side_behavior,
                    "interdense side square has no reduced shape",
                ));
            };
            Certificate::Composition(CompositionCert {
                square: vec![square],
                target: square,
                extras: Vec::new(),
                inner: Box::new(inner),
            })
        }
    };
    Ok(cert)
}

/// Both directions switch: a switched member switches back.
fn both_switch_witness(inc: &Behavior, dec: &Behavior, t: &ForbiddenSet) -> Option<ImpossibleCert> {
    let violation = t.sw_closure_violation()?;
    let member = &t.members()[violation.member_index];
    let v = violation.vertex?;
    let n = member.n();
    let switched = member.switch_vertex(v).ok()?;
    let mut order: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    order.push(v);
    let witness = switched.digraph().induced(&order);
    let map = AppliedMap::StarDirected {
        increasing: *inc,
        decreasing: *dec,
        center: n - 1,
    };
    ImpossibleCert::build(
        &map,
        witness,
        t,
        Vec::new(),
        "switched member; both directions switch the star back".into(),
        None,
    )
}

/// The mixed identity/switch interdense case: exactly one edge across
/// the pair changes direction while everything else is preserved.
fn mixed_switch_cert(inc: &Behavior, dec: &Behavior, inc_is_id: bool) -> Certificate {
    let center = 1usize;
    // Put the single edge on the switching side of the center.
    let edge_end = if inc_is_id { 2usize } else { 0usize };
    let mut input = Digraph::empty(3);
    input.set_pair(edge_end, center, PairType::Forward);
    let map = AppliedMap::StarDirected {
        increasing: *inc,
        decreasing: *dec,
        center,
    };
    let image = map.apply(&input);
    Certificate::EdgeFlip(EdgeFlipCert {
        map,
        input,
        image,
        flipped: (edge_end.min(center), edge_end.max(center)),
    })
}
