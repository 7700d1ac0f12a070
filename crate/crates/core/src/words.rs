//! Elements of a right-angled Artin group A(Γ).
//!
//! Words are plain letter sequences; a [`Raag`] supplies the ambient graph
//! and decides everything about them. Normal forms are the
//! lexicographically least geodesic spelling under the order
//! `v0 < v0^-1 < v1 < v1^-1 < …`, computed by a stack reduction followed
//! by a greedy left-to-right extraction.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{RaagError, Result};
use crate::graph::{bit, mask_to_vec, vec_to_mask, Graph};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Letter {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "v{}^-1", self.gen)
        } else {
            write!(f, "v{}", self.gen)
        }
    }
}

/// A word in the vertex generators. Serialized as its literal, e.g.
/// `"v0 v2^-1"`; the empty string is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn gen(v: usize) -> Word {
        Word(vec![Letter::new(v, false)])
    }

    /// `v^k` for any integer `k`.
    pub fn power_of_gen(v: usize, k: i64) -> Word {
        Word(vec![Letter::new(v, k < 0); k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self^k`; negative `k` uses the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    pub fn generators(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.0.iter().map(|l| l.gen).collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = RaagError;
    fn try_from(s: String) -> Result<Word> {
        s.parse()
    }
}

impl FromStr for Word {
    type Err = RaagError;

    /// Whitespace-separated tokens `v3`, `v3^-1`, `v3^k`; `1` or the empty
    /// string is the identity.
    fn from_str(s: &str) -> Result<Word> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let bad = || RaagError::Parse(format!("bad word token {tok:?}"));
            let body = tok.strip_prefix('v').ok_or_else(bad)?;
            let (g, e) = match body.split_once('^') {
                Some((g, e)) => (g, e.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let g = g.parse::<usize>().map_err(|_| bad())?;
            out.extend(Word::power_of_gen(g, e).0);
        }
        Ok(Word(out))
    }
}

/// The canonical geodesic spelling of a group element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct NormalForm(Vec<Letter>);

impl NormalForm {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn into_word(self) -> Word {
        Word(self.0)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

impl From<NormalForm> for String {
    fn from(n: NormalForm) -> String {
        n.to_string()
    }
}

// Deserializing trusts the producer; callers re-normalize before use.
impl TryFrom<String> for NormalForm {
    type Error = RaagError;
    fn try_from(s: String) -> Result<NormalForm> {
        Ok(NormalForm(s.parse::<Word>()?.0))
    }
}

/// Exponent sums per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AbelianVector(pub Vec<i64>);

impl AbelianVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// `w = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CyclicReduction {
    pub core: NormalForm,
    pub conjugator: Word,
}

/// Centralizer of a nontrivial element: with `w = g·x·g⁻¹`, `x` cyclically
/// reduced, `C(w) = g·(⟨u_1⟩ × … × ⟨u_k⟩ × ⟨link(supp x)⟩)·g⁻¹`, where
/// `x = u_1^{m_1} ⋯ u_k^{m_k}` over the join factors of `supp x`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CentralizerDescription {
    pub roots: Vec<(Word, u32)>,
    pub link_generators: Vec<usize>,
    pub conjugator: Word,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CentralizerOutcome {
    /// The identity is centralized by everything.
    WholeGroup,
    Described(CentralizerDescription),
}

/// The right-angled Artin group on a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Raag {
    graph: Graph,
}

impl Raag {
    pub fn new(graph: Graph) -> Raag {
        Raag { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Generators commute iff equal or adjacent.
    #[inline]
    pub fn gens_commute(&self, a: usize, b: usize) -> bool {
        a == b || self.graph.has_edge(a, b)
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        for l in &w.0 {
            self.graph.check_vertex(l.gen)?;
        }
        Ok(())
    }

    /// Geodesic spelling by a single stack pass: an incoming letter cancels
    /// the nearest copy of its inverse reachable through commuting letters.
    pub(crate) fn reduce_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for &x in letters {
            self.push_letter(&mut out, x);
        }
        out
    }

    fn push_letter(&self, out: &mut Vec<Letter>, x: Letter) {
        let mut hit = None;
        for i in (0..out.len()).rev() {
            let y = out[i];
            if y.gen == x.gen {
                if y.inverse != x.inverse {
                    hit = Some(i);
                }
                break;
            }
            if !self.graph.has_edge(y.gen, x.gen) {
                break;
            }
        }
        match hit {
            Some(i) => {
                out.remove(i);
            }
            None => out.push(x),
        }
    }

    /// Greedy lexicographically least shuffle of a geodesic.
    fn lex_form(&self, mut rest: Vec<Letter>) -> Vec<Letter> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            // Union of generators seen so far that block later letters.
            let mut blockers: Vec<usize> = Vec::new();
            for (i, &l) in rest.iter().enumerate() {
                let free = blockers
                    .iter()
                    .all(|&b| b != l.gen && self.graph.has_edge(b, l.gen));
                if free && best.is_none_or(|b| l < rest[b]) {
                    best = Some(i);
                }
                blockers.push(l.gen);
            }
            out.push(rest.remove(best.expect("first letter is always available")));
        }
        out
    }

    pub(crate) fn nf(&self, letters: &[Letter]) -> NormalForm {
        NormalForm(self.lex_form(self.reduce_letters(letters)))
    }

    pub fn normalize(&self, w: &Word) -> Result<NormalForm> {
        self.check(w)?;
        Ok(self.nf(&w.0))
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        Ok(self.normalize(a)? == self.normalize(b)?)
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool> {
        Ok(self.normalize(w)?.is_identity())
    }

    pub fn multiply(&self, a: &Word, b: &Word) -> Result<NormalForm> {
        self.normalize(&a.concat(b))
    }

    /// `[a, b] = 1`.
    pub fn commutes(&self, a: &Word, b: &Word) -> Result<bool> {
        self.equal(&a.concat(b), &b.concat(a))
    }

    /// Positions of `letters` that can be shuffled to the front.
    fn front_positions(&self, letters: &[Letter]) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, l) in letters.iter().enumerate() {
            if letters[..i]
                .iter()
                .all(|m| m.gen != l.gen && self.graph.has_edge(m.gen, l.gen))
            {
                out.push(i);
            }
        }
        out
    }

    fn back_positions(&self, letters: &[Letter]) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, l) in letters.iter().enumerate() {
            if letters[i + 1..]
                .iter()
                .all(|m| m.gen != l.gen && self.graph.has_edge(m.gen, l.gen))
            {
                out.push(i);
            }
        }
        out
    }

    /// Strip letters that can be moved to the front while their inverse
    /// can be moved to the back, accumulating the conjugator.
    pub fn cyclically_reduce(&self, w: &Word) -> Result<CyclicReduction> {
        self.check(w)?;
        let mut cur = self.reduce_letters(&w.0);
        let mut conj = Vec::new();
        loop {
            let fronts = self.front_positions(&cur);
            let backs = self.back_positions(&cur);
            let mut pick: Option<(usize, usize)> = None;
            for &i in &fronts {
                for &j in &backs {
                    if i != j && cur[j] == cur[i].inv() {
                        let better = match pick {
                            None => true,
                            Some((pi, _)) => cur[i] < cur[pi],
                        };
                        if better {
                            pick = Some((i, j));
                        }
                    }
                }
            }
            let Some((i, j)) = pick else { break };
            conj.push(cur[i]);
            let (hi, lo) = (i.max(j), i.min(j));
            cur.remove(hi);
            cur.remove(lo);
        }
        Ok(CyclicReduction {
            core: NormalForm(self.lex_form(cur)),
            conjugator: Word(conj),
        })
    }

    pub fn is_cyclically_reduced(&self, w: &Word) -> Result<bool> {
        let nf = self.normalize(w)?;
        Ok(self.cyclically_reduce(w)?.core.len() == nf.len())
    }

    /// Generators occurring in the normal form.
    pub fn support(&self, w: &Word) -> Result<Vec<usize>> {
        Ok(self.normalize(w)?.to_word().generators())
    }

    pub(crate) fn support_mask(&self, letters: &[Letter]) -> u64 {
        letters.iter().fold(0, |m, l| m | bit(l.gen))
    }

    pub fn abelianize(&self, w: &Word) -> Result<AbelianVector> {
        self.check(w)?;
        let mut v = vec![0i64; self.rank()];
        for l in &w.0 {
            v[l.gen] += l.exponent();
        }
        Ok(AbelianVector(v))
    }

    /// Delete every letter whose generator is in `kill` and re-normalize in
    /// the same ambient group. This is the quotient map onto the special
    /// subgroup on the remaining vertices.
    pub fn erase(&self, w: &Word, kill: &[usize]) -> Result<NormalForm> {
        self.check(w)?;
        let km = vec_to_mask(kill);
        let kept: Vec<Letter> =
            w.0.iter()
                .copied()
                .filter(|l| km & bit(l.gen) == 0)
                .collect();
        Ok(self.nf(&kept))
    }

    /// Keep only letters with generators in `keep`.
    pub(crate) fn project(&self, letters: &[Letter], keep: u64) -> NormalForm {
        let kept: Vec<Letter> = letters
            .iter()
            .copied()
            .filter(|l| keep & bit(l.gen) != 0)
            .collect();
        self.nf(&kept)
    }

    /// Image of `w` in A(Γ)/⟨⟨kill⟩⟩ ≅ A(Γ ∖ kill). Returns the quotient
    /// group (vertices renumbered in increasing order) and the image word.
    pub fn project_quotient(&self, w: &Word, kill: &[usize]) -> Result<(Raag, Word)> {
        for &v in kill {
            self.graph.check_vertex(v)?;
        }
        let km = vec_to_mask(kill);
        let keep: Vec<usize> = self
            .graph
            .vertices()
            .filter(|&v| km & bit(v) == 0)
            .collect();
        let mut new_id = vec![usize::MAX; self.rank()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let quotient = Raag::new(self.graph.induced(&keep)?);
        let image = self.erase(w, kill)?;
        let relabeled = Word(
            image
                .letters()
                .iter()
                .map(|l| Letter::new(new_id[l.gen], l.inverse))
                .collect(),
        );
        let nf = quotient.normalize(&relabeled)?;
        Ok((quotient, nf.into_word()))
    }

    /// Downward-closed position sets of size `size` of a geodesic: each
    /// is a left divisor of the element.
    fn left_divisors(&self, letters: &[Letter], size: usize) -> Vec<Vec<Letter>> {
        let n = letters.len();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(size);
        let mut blocked = vec![false; n];
        self.divisors_rec(letters, 0, size, &mut chosen, &mut blocked, &mut out);
        out
    }

    fn divisors_rec(
        &self,
        letters: &[Letter],
        pos: usize,
        size: usize,
        chosen: &mut Vec<usize>,
        blocked: &mut Vec<bool>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if chosen.len() == size {
            out.push(chosen.iter().map(|&i| letters[i]).collect());
            return;
        }
        if pos == letters.len() || letters.len() - pos < size - chosen.len() {
            return;
        }
        if !blocked[pos] {
            chosen.push(pos);
            self.divisors_rec(letters, pos + 1, size, chosen, blocked, out);
            chosen.pop();
        }
        // Excluding `pos` excludes everything after it that depends on it.
        let saved = blocked.clone();
        let mut newly = vec![pos];
        for j in pos + 1..letters.len() {
            if newly
                .iter()
                .any(|&i| !self.gens_commute_strict(letters[i], letters[j]))
            {
                blocked[j] = true;
                newly.push(j);
            }
        }
        self.divisors_rec(letters, pos + 1, size, chosen, blocked, out);
        *blocked = saved;
    }

    /// Letters that may swap places (distinct adjacent generators).
    #[inline]
    fn gens_commute_strict(&self, a: Letter, b: Letter) -> bool {
        a.gen != b.gen && self.graph.has_edge(a.gen, b.gen)
    }

    /// Maximal `m` and `u` with `w = u^m`. Requires `w` nontrivial,
    /// cyclically reduced, with join-indecomposable support.
    pub fn root_of(&self, w: &Word) -> Result<(Word, u32)> {
        let nf = self.normalize(w)?;
        if nf.is_identity() {
            return Err(RaagError::precondition("the identity has no root"));
        }
        if self.cyclically_reduce(w)?.core.len() != nf.len() {
            return Err(RaagError::precondition(format!(
                "{w} is not cyclically reduced"
            )));
        }
        let supp = self.support_mask(nf.letters());
        if self.graph.join_factor_masks(supp).len() > 1 {
            return Err(RaagError::precondition(format!(
                "support of {w} splits as a join; split it first"
            )));
        }
        Ok(self.root_unchecked(&nf))
    }

    fn root_unchecked(&self, nf: &NormalForm) -> (Word, u32) {
        let len = nf.len();
        for m in (2..=len).rev() {
            if len % m != 0 {
                continue;
            }
            for cand in self.left_divisors(nf.letters(), len / m) {
                let u = Word(cand);
                if self.nf(&u.pow(m as i64).0) == *nf {
                    return (self.nf(&u.0).into_word(), m as u32);
                }
            }
        }
        (nf.to_word(), 1)
    }

    /// Largest `d` with `w` a `d`-th power (0 for the identity). For
    /// `x = Π u_i^{m_i}` over join factors this is `gcd(m_i)`.
    pub fn power_exponent(&self, w: &Word) -> Result<u32> {
        let cr = self.cyclically_reduce(w)?;
        if cr.core.is_identity() {
            return Ok(0);
        }
        let supp = self.support_mask(cr.core.letters());
        let mut g = 0u32;
        for f in self.graph.join_factor_masks(supp) {
            let piece = self.project(cr.core.letters(), f);
            g = gcd(g as i64, self.root_unchecked(&piece).1 as i64) as u32;
        }
        Ok(g)
    }

    /// Servatius centralizer. Restricted to paths and cycles.
    pub fn centralizer_ear(&self, w: &Word) -> Result<CentralizerOutcome> {
        if !(self.graph.is_path() || self.graph.is_cycle()) {
            return Err(RaagError::Unsupported(
                "centralizers are computed on path and cycle graphs only".into(),
            ));
        }
        self.centralizer(w)
    }

    /// The same decomposition without the ear restriction (used internally
    /// where the ambient graph is known to be benign).
    pub(crate) fn centralizer(&self, w: &Word) -> Result<CentralizerOutcome> {
        let cr = self.cyclically_reduce(w)?;
        if cr.core.is_identity() {
            return Ok(CentralizerOutcome::WholeGroup);
        }
        let supp = self.support_mask(cr.core.letters());
        let mut roots = Vec::new();
        for f in self.graph.join_factor_masks(supp) {
            let piece = self.project(cr.core.letters(), f);
            roots.push(self.root_unchecked(&piece));
        }
        Ok(CentralizerOutcome::Described(CentralizerDescription {
            roots,
            link_generators: mask_to_vec(self.graph.link_mask(supp)),
            conjugator: cr.conjugator,
        }))
    }

    /// All reduced products of at most `radius` factors from `gens^{±1}`,
    /// keyed by value, each with one shortest spelling (factor index, inverse).
    pub fn ball(
        &self,
        gens: &[Word],
        radius: usize,
    ) -> Result<HashMap<NormalForm, Vec<(usize, bool)>>> {
        for g in gens {
            self.check(g)?;
        }
        let steps: Vec<(usize, bool, Vec<Letter>)> = gens
            .iter()
            .enumerate()
            .flat_map(|(i, g)| [(i, false, g.0.clone()), (i, true, g.inverse().0)])
            .collect();
        let mut seen: HashMap<NormalForm, Vec<(usize, bool)>> = HashMap::new();
        seen.insert(NormalForm(Vec::new()), Vec::new());
        let mut frontier = vec![NormalForm(Vec::new())];
        for _ in 0..radius {
            let mut next = Vec::new();
            for nf in &frontier {
                let spelling = seen[nf].clone();
                for (i, inv, letters) in &steps {
                    if let Some(&(pi, pinv)) = spelling.last() {
                        if pi == *i && pinv != *inv {
                            continue;
                        }
                    }
                    let mut cat = nf.0.clone();
                    cat.extend_from_slice(letters);
                    let val = self.nf(&cat);
                    if !seen.contains_key(&val) {
                        let mut sp = spelling.clone();
                        sp.push((*i, *inv));
                        seen.insert(val.clone(), sp);
                        next.push(val);
                    }
                }
            }
            frontier = next;
        }
        Ok(seen)
    }
}

impl CentralizerDescription {
    /// Generators of the centralizer, conjugated back to the input.
    pub fn generators(&self) -> Vec<Word> {
        let g = &self.conjugator;
        self.roots
            .iter()
            .map(|(u, _)| u.conjugate_by(g))
            .chain(
                self.link_generators
                    .iter()
                    .map(|&v| Word::gen(v).conjugate_by(g)),
            )
            .collect()
    }

    /// Exact membership: conjugate into the cyclically reduced frame and
    /// split into coordinates of the direct product.
    pub fn contains(&self, raag: &Raag, h: &Word) -> Result<bool> {
        let g = &self.conjugator;
        let hp = raag.normalize(&g.inverse().concat(h).concat(g))?;
        let root_masks: Vec<u64> = self
            .roots
            .iter()
            .map(|(u, _)| raag.support_mask(u.letters()))
            .collect();
        let link = vec_to_mask(&self.link_generators);
        let allowed = root_masks.iter().fold(link, |m, r| m | r);
        if raag.support_mask(hp.letters()) & !allowed != 0 {
            return Ok(false);
        }
        for ((u, _), &mask) in self.roots.iter().zip(&root_masks) {
            let piece = raag.project(hp.letters(), mask);
            if piece.is_identity() {
                continue;
            }
            if piece.len() % u.len() != 0 {
                return Ok(false);
            }
            let k = (piece.len() / u.len()) as i64;
            if raag.nf(&u.pow(k).0) != piece && raag.nf(&u.pow(-k).0) != piece {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Z^k × A(link)` rendered compactly: `Z`, `Z^2`, `Z x F2`, …
    pub fn shape(&self, raag: &Raag) -> CentralizerShape {
        let lg = raag
            .graph()
            .induced(&self.link_generators)
            .expect("link vertices are in range");
        let l = lg.vertex_count();
        let link = if l == 0 {
            LinkShape::Trivial
        } else if lg.edge_count() == l * (l - 1) / 2 {
            LinkShape::FreeAbelian(l)
        } else if lg.edge_count() == 0 {
            LinkShape::Free(l)
        } else {
            LinkShape::Other(lg)
        };
        CentralizerShape {
            cyclic_factors: self.roots.len(),
            link,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinkShape {
    Trivial,
    FreeAbelian(usize),
    Free(usize),
    Other(Graph),
}

/// Isomorphism type `Z^cyclic_factors × A(link)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralizerShape {
    pub cyclic_factors: usize,
    pub link: LinkShape,
}

impl CentralizerShape {
    pub fn free_abelian_rank(&self) -> Option<usize> {
        match self.link {
            LinkShape::Trivial => Some(self.cyclic_factors),
            LinkShape::FreeAbelian(l) => Some(self.cyclic_factors + l),
            LinkShape::Free(1) => Some(self.cyclic_factors + 1),
            _ => None,
        }
    }

    /// `Z × F2`.
    pub fn is_z_times_f2(&self) -> bool {
        self.cyclic_factors == 1 && self.link == LinkShape::Free(2)
    }
}

impl fmt::Display for CentralizerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.free_abelian_rank() {
            return if r == 1 {
                write!(f, "Z")
            } else {
                write!(f, "Z^{r}")
            };
        }
        let z = match self.cyclic_factors {
            1 => "Z".to_string(),
            k => format!("Z^{k}"),
        };
        match &self.link {
            LinkShape::Free(l) => write!(f, "{z} x F{l}"),
            LinkShape::Other(g) => write!(f, "{z} x A({g})"),
            _ => unreachable!("abelian shapes handled above"),
        }
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A vector of ℤ² is primitive (extends to a basis) iff its gcd is 1.
pub fn is_primitive_vector(v: &AbelianVector) -> bool {
    v.0.iter().fold(0, |g, &x| gcd(g, x)) == 1
}

/// Two vectors of ℤ² form a basis iff their determinant is ±1.
pub fn is_unimodular_pair(a: &AbelianVector, b: &AbelianVector) -> Result<bool> {
    if a.0.len() != 2 || b.0.len() != 2 {
        return Err(RaagError::InvalidInput(format!(
            "expected vectors of length 2, got {} and {}",
            a.0.len(),
            b.0.len()
        )));
    }
    Ok((a.0[0] * b.0[1] - a.0[1] * b.0[0]).abs() == 1)
}
