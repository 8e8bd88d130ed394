//! Individualisation-refinement search over vertex-coloured, edge-labelled graphs.
//!
//! The left side follows one fixed path of individualisations; the right side
//! branches over every vertex of the matching cell. Colour ids are ranks of
//! sorted refinement signatures, so they mean the same thing on both sides as
//! long as the per-round signature traces agree. Each automorphism preserving
//! the labels is reached by exactly one right-hand leaf.

use std::ops::ControlFlow;

use crate::graph::Graph;

/// One refinement round: distinct signatures in sorted order with multiplicities.
type Round = Vec<(Vec<u64>, u32)>;

pub(crate) struct Labelled<'a> {
    g: &'a Graph,
    initial: Vec<u32>,
    edge_labels: Option<&'a [u32]>,
}

impl<'a> Labelled<'a> {
    /// `vertex` defaults to a single colour; `edge_labels` to no labels.
    pub(crate) fn new(
        g: &'a Graph,
        vertex: Option<&[u32]>,
        edge_labels: Option<&'a [u32]>,
    ) -> Self {
        let initial = match vertex {
            Some(cols) => ranks(cols),
            None => vec![0; g.n()],
        };
        Labelled {
            g,
            initial,
            edge_labels,
        }
    }

    fn label(&self, e: usize) -> u64 {
        self.edge_labels.map_or(0, |l| l[e] as u64)
    }

    /// Refines `colours` to the coarsest equitable partition below it. When
    /// `expected` is given, each round must reproduce it or `None` is returned.
    fn refine(&self, colours: &mut [u32], expected: Option<&[Round]>) -> Option<Vec<Round>> {
        let n = self.g.n();
        let mut rounds = Vec::new();
        let mut classes = count_classes(colours);
        loop {
            let mut sigs: Vec<(Vec<u64>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<u64> = self
                        .g
                        .incident(v)
                        .iter()
                        .map(|&(w, e)| (self.label(e) << 32) | colours[w] as u64)
                        .collect();
                    nb.sort_unstable();
                    let mut sig = Vec::with_capacity(nb.len() + 1);
                    sig.push(colours[v] as u64);
                    sig.extend(nb);
                    (sig, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut round: Round = Vec::new();
            for (sig, v) in &sigs {
                match round.last_mut() {
                    Some((last, count)) if last == sig => *count += 1,
                    _ => round.push((sig.clone(), 1)),
                }
                colours[*v] = round.len() as u32 - 1;
            }
            if let Some(exp) = expected {
                if exp.get(rounds.len()) != Some(&round) {
                    return None;
                }
            }
            let new_classes = round.len();
            rounds.push(round);
            if new_classes == classes {
                if let Some(exp) = expected {
                    if exp.len() != rounds.len() {
                        return None;
                    }
                }
                return Some(rounds);
            }
            classes = new_classes;
        }
    }

    fn is_label_preserving(&self, image: &[usize]) -> bool {
        if (0..self.g.n()).any(|v| self.initial[v] != self.initial[image[v]]) {
            return false;
        }
        self.g.edges().iter().enumerate().all(|(e, &(u, v))| {
            self.g
                .edge_index(image[u], image[v])
                .is_some_and(|f| self.label(e) == self.label(f))
        })
    }

    /// Calls `visit` on every label-preserving automorphism (as a vertex image
    /// vector) until it returns `Break`.
    pub(crate) fn for_each_automorphism<B>(
        &self,
        mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        let n = self.g.n();
        let mut cols = self.initial.clone();
        let trace = self
            .refine(&mut cols, None)
            .expect("unconstrained refinement");
        let mut path = vec![Level {
            colours: cols,
            trace,
            split: None,
        }];
        loop {
            let top = path.last().unwrap();
            let Some((cell, v)) = target_cell(&top.colours) else {
                break;
            };
            let mut next = top.colours.clone();
            individualise(&mut next, v);
            let trace = self
                .refine(&mut next, None)
                .expect("unconstrained refinement");
            path.last_mut().unwrap().split = Some((cell, v));
            path.push(Level {
                colours: next,
                trace,
                split: None,
            });
        }
        let mut image = vec![0; n];
        let start = path[0].colours.clone();
        self.descend(&path, 0, start, &mut image, &mut visit)
    }

    fn descend<B>(
        &self,
        path: &[Level],
        depth: usize,
        right: Vec<u32>,
        image: &mut [usize],
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        let level = &path[depth];
        let Some((cell, _)) = level.split else {
            // Both partitions are discrete: colour c sits at left vertex v and right vertex w.
            let mut at = vec![0; right.len()];
            for (w, &c) in right.iter().enumerate() {
                at[c as usize] = w;
            }
            for (v, &c) in level.colours.iter().enumerate() {
                image[v] = at[c as usize];
            }
            if self.is_label_preserving(image) {
                if let ControlFlow::Break(b) = visit(image) {
                    return Some(b);
                }
            }
            return None;
        };
        let expected = &path[depth + 1].trace;
        for w in 0..right.len() {
            if right[w] != cell {
                continue;
            }
            let mut next = right.clone();
            individualise(&mut next, w);
            if self.refine(&mut next, Some(expected)).is_some() {
                if let Some(b) = self.descend(path, depth + 1, next, image, visit) {
                    return Some(b);
                }
            }
        }
        None
    }

    /// Canonical certificate: the lexicographically least relabelled
    /// `(vertex colours, labelled edge list)` over all leaves of the search tree.
    ///
    /// Two leaves with equal certificates differ by an automorphism. Those are
    /// kept as generators, and a child is skipped when some generator fixing the
    /// current path maps it onto an already explored sibling, since both
    /// subtrees then yield the same certificates.
    pub(crate) fn canonical_labelling(&self) -> (Vec<usize>, Vec<u64>) {
        let mut cols = self.initial.clone();
        self.refine(&mut cols, None);
        let mut state = CanonState {
            best: None,
            generators: Vec::new(),
        };
        self.canon_descend(cols, &mut Vec::new(), &mut state);
        let (cert, labelling) = state.best.expect("search tree has a leaf");
        (labelling, cert)
    }

    fn canon_descend(&self, colours: Vec<u32>, path: &mut Vec<usize>, state: &mut CanonState) {
        let Some((cell, _)) = target_cell(&colours) else {
            let labelling: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
            let cert = self.certificate(&labelling);
            match &state.best {
                Some((b, best)) if cert == *b => {
                    // best^-1 . labelling is an automorphism.
                    let mut inverse = vec![0; best.len()];
                    for (v, &x) in best.iter().enumerate() {
                        inverse[x] = v;
                    }
                    let gamma: Vec<usize> = labelling.iter().map(|&x| inverse[x]).collect();
                    state.generators.push(gamma);
                }
                Some((b, _)) if cert > *b => {}
                _ => state.best = Some((cert, labelling)),
            }
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for w in 0..colours.len() {
            if colours[w] != cell {
                continue;
            }
            if !explored.is_empty() && same_orbit_as_any(&state.generators, path, w, &explored) {
                continue;
            }
            explored.push(w);
            let mut next = colours.clone();
            individualise(&mut next, w);
            self.refine(&mut next, None);
            path.push(w);
            self.canon_descend(next, path, state);
            path.pop();
        }
    }

    fn certificate(&self, labelling: &[usize]) -> Vec<u64> {
        let n = self.g.n();
        let mut vcols = vec![0u64; n];
        for v in 0..n {
            vcols[labelling[v]] = self.initial[v] as u64;
        }
        let mut edges: Vec<u64> = self
            .g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                let (a, b) = (
                    labelling[u].min(labelling[v]),
                    labelling[u].max(labelling[v]),
                );
                ((a as u64) << 48) | ((b as u64) << 32) | self.label(e)
            })
            .collect();
        edges.sort_unstable();
        vcols.extend(edges);
        vcols
    }
}

struct CanonState {
    best: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

/// Whether `w` shares an orbit with a vertex of `explored` under the group
/// generated by the generators that fix every vertex of `path`.
fn same_orbit_as_any(
    generators: &[Vec<usize>],
    path: &[usize],
    w: usize,
    explored: &[usize],
) -> bool {
    let usable: Vec<&Vec<usize>> = generators
        .iter()
        .filter(|g| path.iter().all(|&v| g[v] == v))
        .collect();
    if usable.is_empty() {
        return false;
    }
    let n = usable[0].len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in usable {
        for (v, &image) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, image));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let target = find(&mut parent, w);
    explored.iter().any(|&x| find(&mut parent, x) == target)
}

struct Level {
    colours: Vec<u32>,
    // Rounds that produced `colours` from the parent's individualised partition.
    trace: Vec<Round>,
    // Cell split at this level and the left vertex individualised in it.
    split: Option<(u32, usize)>,
}

fn ranks(values: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    values
        .iter()
        .map(|v| distinct.binary_search(v).unwrap() as u32)
        .collect()
}

fn count_classes(colours: &[u32]) -> usize {
    let mut seen: Vec<u32> = colours.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// First cell (by colour id) with more than one vertex, and its least vertex.
fn target_cell(colours: &[u32]) -> Option<(u32, usize)> {
    let mut size = vec![0u32; colours.len()];
    for &c in colours {
        size[c as usize] += 1;
    }
    let cell = size.iter().position(|&s| s > 1)? as u32;
    let v = colours.iter().position(|&c| c == cell).unwrap();
    Some((cell, v))
}

fn individualise(colours: &mut [u32], v: usize) {
    colours[v] = colours.len() as u32;
}
