//! Small fixed-capacity permutations for exhaustive monodromy enumeration.

use crate::partitions::Partition;

pub const MAX_DEGREE: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    img: [u8; MAX_DEGREE],
    len: u8,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        assert!(d <= MAX_DEGREE);
        let mut img = [0u8; MAX_DEGREE];
        for (i, x) in img.iter_mut().enumerate().take(d) {
            *x = i as u8;
        }
        Perm { img, len: d as u8 }
    }

    pub fn from_images(images: &[u8]) -> Self {
        let mut p = Perm::identity(images.len());
        p.img[..images.len()].copy_from_slice(images);
        p
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.img[..self.len as usize]
    }

    /// `(self · other)(i) = self(other(i))`
    #[inline]
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut out = *self;
        for i in 0..self.len as usize {
            out.img[i] = self.img[other.img[i] as usize];
        }
        out
    }

    #[inline]
    pub fn inverse(&self) -> Perm {
        let mut out = *self;
        for i in 0..self.len as usize {
            out.img[self.img[i] as usize] = i as u8;
        }
        out
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.compose(b).compose(&a.inverse()).compose(&b.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycle lengths sorted descending.
    pub fn cycle_type(&self) -> Vec<u32> {
        let n = self.len as usize;
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn has_cycle_type(&self, lambda: &Partition) -> bool {
        self.cycle_type() == lambda.parts()
    }
}

/// All of `S_d` in lexicographic order of image lists.
pub fn symmetric_group(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..d as u8).collect();
    loop {
        out.push(Perm::from_images(&images));
        // next lexicographic permutation
        let Some(i) = (1..images.len()).rev().find(|&i| images[i - 1] < images[i]) else {
            break;
        };
        let j = (i..images.len()).rev().find(|&j| images[j] > images[i - 1]).unwrap();
        images.swap(i - 1, j);
        images[i..].reverse();
    }
    out
}
