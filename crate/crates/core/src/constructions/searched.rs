// Families recovered by `crate::search` and embedded verbatim. The default
// sequential search reproduces each of them exactly; see the search tests.

pub(crate) const PDF_7_3_1: &[&[i64]] = &[&[0, 1, 3]];

pub(crate) const PDF_31_3_1: &[&[i64]] = &[&[0, 1, 15], &[0, 3, 13], &[0, 4, 12], &[0, 5, 11], &[0, 2, 9]];

pub(crate) const PDF_49_4_1: &[&[i64]] = &[&[0, 2, 10, 24], &[0, 7, 12, 23], &[0, 1, 18, 21], &[0, 4, 13, 19]];

pub(crate) const PDF_61_4_1: &[&[i64]] =
    &[&[0, 1, 10, 30], &[0, 2, 16, 28], &[0, 4, 21, 27], &[0, 3, 18, 25], &[0, 5, 13, 24]];

pub(crate) const CDF_37_4_1: &[&[i64]] = &[&[0, 1, 3, 24], &[0, 4, 9, 15], &[0, 7, 17, 25]];

// Five blocks over Z_6 covering each nonzero residue 12 times.
pub(crate) const CDF_6_4_12: &[&[i64]] = &[&[0, 1, 2, 3], &[0, 1, 2, 3], &[0, 1, 2, 4], &[0, 1, 2, 4], &[0, 1, 3, 4]];
