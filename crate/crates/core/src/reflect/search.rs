use std::collections::HashSet;

use super::{fingerprint, identify, is_irreducible, is_reflection, Fingerprint, Identification, DEFAULT_LINE_CAP};
use crate::error::Result;
use crate::ffmat::{closure, FieldRef, Mat, MatGroup};

/// All reflections of `GL₂(K)`, in lexicographic order of their entries.
pub fn gl2_reflections(field: &FieldRef) -> Result<Vec<Mat>> {
    let q = field.order() as u32;
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = Mat::from_vec(field, 2, 2, vec![a, b, c, d])?;
                    if m.det() != 0 && is_reflection(&m)? {
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// One representative per `GL₂(K)`-conjugacy class of reflections:
/// `diag(a, 1)` for `a ≠ 0, 1` and the transvection `[[1,1],[0,1]]`.
fn class_representatives(field: &FieldRef) -> Result<Vec<Mat>> {
    let mut reps: Vec<Mat> = (2..field.order() as u32).map(|a| Mat::diag(field, &[a, 1])).collect();
    reps.push(Mat::from_vec(field, 2, 2, vec![1, 1, 0, 1])?);
    Ok(reps)
}

pub struct FoundReflectionGroup {
    pub group: MatGroup,
    pub generators: (Mat, Mat),
    pub fingerprint: Fingerprint,
    pub identification: Identification,
}

/// Irreducible subgroups of `GL₂(K)` of a given order generated by two
/// reflections, up to conjugacy in the choice of the first generator.
///
/// Every pair `(s, t)` is conjugate to one with `s` a class representative,
/// so the scan is exhaustive for two-generated reflection groups. Subgroups
/// already produced are skipped.
pub struct ReflectionPairSearch {
    field: FieldRef,
    target: u64,
    reps: Vec<Mat>,
    reflections: Vec<Mat>,
    i: usize,
    j: usize,
    seen: HashSet<Vec<Mat>>,
}

impl ReflectionPairSearch {
    pub fn new(field: &FieldRef, target: u64) -> Result<Self> {
        Ok(ReflectionPairSearch {
            field: field.clone(),
            target,
            reps: class_representatives(field)?,
            reflections: gl2_reflections(field)?,
            i: 0,
            j: 0,
            seen: HashSet::new(),
        })
    }

    fn try_pair(&mut self, s: &Mat, t: &Mat) -> Result<Option<FoundReflectionGroup>> {
        let id = Mat::identity(&self.field, 2);
        let gens = [s.clone(), t.clone()];
        let target = self.target as usize;
        let Some(els) = closure(&id, &gens, target + 1, |n| n <= target)? else {
            return Ok(None);
        };
        if els.len() != target {
            return Ok(None);
        }
        let mut key: Vec<Mat> = els.iter().cloned().collect();
        key.sort();
        if !self.seen.insert(key) {
            return Ok(None);
        }
        let group = MatGroup::from_elements(&self.field, 2, gens.to_vec(), els)?;
        if !is_irreducible(&group, DEFAULT_LINE_CAP)? {
            return Ok(None);
        }
        let fp = fingerprint(&group)?;
        let identification = identify(&group, &fp)?;
        Ok(Some(FoundReflectionGroup {
            group,
            generators: (s.clone(), t.clone()),
            fingerprint: fp,
            identification,
        }))
    }

    pub fn next_found(&mut self) -> Result<Option<FoundReflectionGroup>> {
        while self.i < self.reps.len() {
            while self.j < self.reflections.len() {
                let s = self.reps[self.i].clone();
                let t = self.reflections[self.j].clone();
                self.j += 1;
                if s == t {
                    continue;
                }
                if let Some(found) = self.try_pair(&s, &t)? {
                    return Ok(Some(found));
                }
            }
            self.i += 1;
            self.j = 0;
        }
        Ok(None)
    }
}

impl Iterator for ReflectionPairSearch {
    type Item = Result<FoundReflectionGroup>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_found().transpose()
    }
}

/// First irreducible two-reflection subgroup of `GL₂(K)` of order `target`.
pub fn find_reflection_subgroup(field: &FieldRef, target: u64) -> Result<Option<FoundReflectionGroup>> {
    ReflectionPairSearch::new(field, target)?.next_found()
}
