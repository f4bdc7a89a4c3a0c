use crate::partition::Partition;

/// The Young diagram of a shape with box `(i, j)` (1-based row, column)
/// filled with its content `j − i`.
#[derive(Debug, Clone, Copy)]
pub struct TableauView<'a> {
    shape: &'a Partition,
}

impl<'a> TableauView<'a> {
    pub fn new(shape: &'a Partition) -> Self {
        TableauView { shape }
    }

    pub fn shape(&self) -> &'a Partition {
        self.shape
    }

    /// Content of box `(i, j)`, or `None` if the box is outside the diagram.
    pub fn entry(&self, i: usize, j: usize) -> Option<i64> {
        if i == 0 || j == 0 {
            return None;
        }
        let row = *self.shape.parts().get(i - 1)? as usize;
        (j <= row).then(|| j as i64 - i as i64)
    }

    /// All boxes in row-major order as `(i, j, content)`.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize, i64)> + 'a {
        let shape = self.shape;
        shape.parts().iter().enumerate().flat_map(|(r, &len)| {
            (1..=len as usize).map(move |j| (r + 1, j, j as i64 - (r as i64 + 1)))
        })
    }
}

/// Sum of all entries of the content tableau.
pub fn content_sum(p: &Partition) -> i64 {
    TableauView::new(p).boxes().map(|(_, _, t)| t).sum()
}

/// `(arm sum, leg sum)` for each diagonal box `(d, d)`: the arm is the rest of
/// row `d` to its right, the leg the rest of column `d` below it.
///
/// The empty partition has no diagonal; `(1)` yields `[(0, 0)]`.
pub fn arm_leg_decomposition(p: &Partition) -> Vec<(i64, i64)> {
    let view = TableauView::new(p);
    let mut out = Vec::new();
    let mut d = 1;
    while view.entry(d, d).is_some() {
        let arm: i64 = (d + 1..).map_while(|j| view.entry(d, j)).sum();
        let leg: i64 = (d + 1..).map_while(|i| view.entry(i, d)).sum();
        out.push((arm, leg));
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_tableau() {
        let shape = p(&[4, 3, 1]);
        let t = TableauView::new(&shape);
        assert_eq!(t.entry(1, 4), Some(3));
        assert_eq!(t.entry(2, 3), Some(1));
        assert_eq!(t.entry(3, 1), Some(-2));
        assert_eq!(t.entry(3, 2), None);
        assert_eq!(t.entry(4, 1), None);
        assert_eq!(t.entry(0, 1), None);
        assert_eq!(t.boxes().count(), 8);
    }

    #[test]
    fn diagonal_is_zero_and_transpose_negates() {
        let shape = p(&[5, 3, 3, 1]);
        let conj = shape.conjugate();
        let (t, tc) = (TableauView::new(&shape), TableauView::new(&conj));
        for (i, j, v) in t.boxes() {
            if i == j {
                assert_eq!(v, 0);
            }
            assert_eq!(tc.entry(j, i), Some(-v));
        }
    }

    #[test]
    fn content_sum_examples() {
        assert_eq!(content_sum(&p(&[4, 3, 1])), 4);
        assert_eq!(content_sum(&p(&[1])), 0);
        assert_eq!(content_sum(&p(&[5, 4, 1, 1, 1])), 3);
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(arm_leg_decomposition(&p(&[4, 3, 1])), vec![(6, -3), (1, 0)]);
        assert_eq!(arm_leg_decomposition(&p(&[1])), vec![(0, 0)]);
        assert_eq!(
            arm_leg_decomposition(&p(&[3, 3, 3])),
            vec![(3, -3), (1, -1), (0, 0)]
        );
        assert!(arm_leg_decomposition(&Partition::empty()).is_empty());
    }
}
