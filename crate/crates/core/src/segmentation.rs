//! Blue-background seed segmentation: automatic thresholding, connected
//! components with traced contours, region filtering and per-seed cropping.

use thiserror::Error;

use crate::morphfeat::perimeter_length;
use crate::raster::{BinaryMask, RgbRaster};

/// Segmentation failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SegmentError {
    /// Histogram concentrated in a single bin — no threshold separates it.
    #[error("degenerate histogram: all mass in one bin, no threshold exists")]
    DegenerateHistogram,
}

/// One 8-connected seed region with its traced outer contour.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedRegion {
    /// Positive region id, assigned in raster-scan order of first pixel.
    pub label: u32,
    /// Member coordinates (x, y), sorted in raster order.
    pub pixels: Vec<(usize, usize)>,
    /// Tight inclusive bounds (x_min, y_min, x_max, y_max).
    pub bbox: (usize, usize, usize, usize),
    /// Center of mass of the member pixels.
    pub centroid: (f64, f64),
    /// Cyclic Moore-traced boundary, clockwise from the topmost-leftmost pixel.
    pub contour: Vec<(usize, usize)>,
}

impl SeedRegion {
    pub fn area(&self) -> usize {
        self.pixels.len()
    }

    /// 4π·Area/Perimeter² over the traced contour.
    pub fn circularity(&self) -> f64 {
        let p = perimeter_length::<f64>(&self.contour);
        4.0 * std::f64::consts::PI * self.area() as f64 / (p * p)
    }
}

/// Area and circularity bounds used to reject dust and scanning artefacts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionFilter {
    pub min_area: usize,
    pub max_area: usize,
    pub circ_min: f64,
    pub circ_max: f64,
}

impl RegionFilter {
    /// Defaults for an image of the given pixel count: area in
    /// [50, image_area/4], circularity unconstrained in [0, 1].
    pub fn default_for(image_area: usize) -> Self {
        Self {
            min_area: 50,
            max_area: image_area / 4,
            circ_min: 0.0,
            circ_max: 1.0,
        }
    }

    pub fn keeps(&self, region: &SeedRegion) -> bool {
        let area = region.area();
        let circ = region.circularity();
        area >= self.min_area
            && area <= self.max_area
            && circ >= self.circ_min
            && circ <= self.circ_max
    }
}

/// 256-bin intensity histogram of one channel.
pub fn channel_histogram(img: &RgbRaster, channel: usize) -> [u64; 256] {
    let mut hist = [0u64; 256];
    for px in img.pixels() {
        hist[px[channel] as usize] += 1;
    }
    hist
}

/// Otsu's threshold: maximizes between-class variance over splits
/// {≤ t, > t}; ties broken toward the smallest t.
pub fn otsu_threshold(hist: &[u64; 256]) -> Result<u8, SegmentError> {
    let total: u64 = hist.iter().sum();
    let occupied = hist.iter().filter(|&&c| c > 0).count();
    if occupied <= 1 {
        return Err(SegmentError::DegenerateHistogram);
    }
    let total_f = total as f64;
    let grand_sum: f64 = hist
        .iter()
        .enumerate()
        .map(|(g, &c)| g as f64 * c as f64)
        .sum();

    let mut best_t = 0u8;
    let mut best_var = f64::NEG_INFINITY;
    let mut w0 = 0.0;
    let mut sum0 = 0.0;
    for (t, &count) in hist.iter().enumerate() {
        w0 += count as f64;
        sum0 += t as f64 * count as f64;
        let w1 = total_f - w0;
        if w0 == 0.0 || w1 == 0.0 {
            continue;
        }
        let m0 = sum0 / w0;
        let m1 = (grand_sum - sum0) / w1;
        let var = w0 * w1 * (m0 - m1) * (m0 - m1);
        if var > best_var {
            best_var = var;
            best_t = t as u8;
        }
    }
    Ok(best_t)
}

/// Flip any background component that does not touch the image border to
/// foreground (4-connected background flood from the borders).
pub fn fill_holes(mask: &BinaryMask) -> BinaryMask {
    let (w, h) = (mask.width(), mask.height());
    let mut reached = vec![false; w * h];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let push = |x: usize, y: usize, reached: &mut Vec<bool>, stack: &mut Vec<(usize, usize)>| {
        if !mask.get(x, y) && !reached[y * w + x] {
            reached[y * w + x] = true;
            stack.push((x, y));
        }
    };
    for x in 0..w {
        push(x, 0, &mut reached, &mut stack);
        push(x, h - 1, &mut reached, &mut stack);
    }
    for y in 0..h {
        push(0, y, &mut reached, &mut stack);
        push(w - 1, y, &mut reached, &mut stack);
    }
    while let Some((x, y)) = stack.pop() {
        let mut visit = |nx: isize, ny: isize| {
            if nx >= 0 && ny >= 0 && (nx as usize) < w && (ny as usize) < h {
                let (nx, ny) = (nx as usize, ny as usize);
                if !mask.get(nx, ny) && !reached[ny * w + nx] {
                    reached[ny * w + nx] = true;
                    stack.push((nx, ny));
                }
            }
        };
        visit(x as isize - 1, y as isize);
        visit(x as isize + 1, y as isize);
        visit(x as isize, y as isize - 1);
        visit(x as isize, y as isize + 1);
    }
    let bits = (0..w * h).map(|i| mask.bits()[i] || !reached[i]).collect();
    BinaryMask::new(w, h, bits).expect("same dims")
}

/// Seed/background split for a blue-background scan.
///
/// Foreground = blue below the Otsu threshold of the blue histogram, or blue
/// not strictly dominant (B ≤ max(R, G)); holes are then filled. When the
/// blue channel is constant Otsu is undefined and the dominance test alone
/// decides; if that fallback claims every pixel is a seed the image cannot be
/// a blue-background scan and `DegenerateHistogram` is returned.
pub fn blue_background_mask(img: &RgbRaster) -> Result<BinaryMask, SegmentError> {
    let hist = channel_histogram(img, 2);
    let threshold = otsu_threshold(&hist).ok();

    let bits: Vec<bool> = img
        .pixels()
        .iter()
        .map(|&[r, g, b]| {
            let below = threshold.is_some_and(|t| b < t);
            below || b <= r.max(g)
        })
        .collect();
    if threshold.is_none() && bits.iter().all(|&fg| fg) {
        return Err(SegmentError::DegenerateHistogram);
    }
    let mask = BinaryMask::new(img.width(), img.height(), bits).expect("same dims");
    Ok(fill_holes(&mask))
}

/// Moore neighbourhood in clockwise order (y grows downward):
/// N, NE, E, SE, S, SW, W, NW.
const MOORE: [(isize, isize); 8] = [
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
];

/// Clockwise Moore-neighbour boundary trace from the topmost-leftmost pixel.
/// `is_fg` must answer for arbitrary (possibly out-of-bounds) coordinates.
fn moore_trace(
    start: (usize, usize),
    area: usize,
    is_fg: &dyn Fn(isize, isize) -> bool,
) -> Vec<(usize, usize)> {
    let s = (start.0 as isize, start.1 as isize);
    let has_neighbor = MOORE.iter().any(|&(dx, dy)| is_fg(s.0 + dx, s.1 + dy));
    if !has_neighbor {
        return vec![start];
    }

    let dir_index = |from: (isize, isize), to: (isize, isize)| -> usize {
        let d = (to.0 - from.0, to.1 - from.1);
        MOORE.iter().position(|&m| m == d).expect("8-neighbour")
    };

    let mut contour = vec![start];
    let mut cur = s;
    // Entering the start from the west matches the raster-scan discovery
    // direction; the west neighbour of a topmost-leftmost pixel is background.
    let mut backtrack = (s.0 - 1, s.1);
    let mut first_next: Option<(isize, isize)> = None;
    let mut steps = 0usize;
    // Each boundary pixel is visited at most a handful of times; the cap only
    // guards against a logic error turning into an infinite loop.
    let step_cap = 8 * area + 64;

    loop {
        steps += 1;
        if steps > step_cap {
            debug_assert!(false, "moore trace exceeded step cap");
            break;
        }
        let bi = dir_index(cur, backtrack);
        let mut next = None;
        for k in 1..=8 {
            let idx = (bi + k) % 8;
            let cand = (cur.0 + MOORE[idx].0, cur.1 + MOORE[idx].1);
            if is_fg(cand.0, cand.1) {
                let prev_idx = (bi + k - 1) % 8;
                next = Some((cand, (cur.0 + MOORE[prev_idx].0, cur.1 + MOORE[prev_idx].1)));
                break;
            }
        }
        let (next, new_backtrack) = next.expect("region has a neighbour");
        if cur == s {
            match first_next {
                None => first_next = Some(next),
                Some(fnext) => {
                    if next == fnext {
                        break; // back at the start, about to repeat the walk
                    }
                }
            }
        }
        contour.push((next.0 as usize, next.1 as usize));
        backtrack = new_backtrack;
        cur = next;
    }
    // The loop appends the start again when closing the cycle; drop the tail
    // so the sequence is cyclic without duplicating its first point.
    while contour.len() > 1 && *contour.last().unwrap() == start {
        contour.pop();
    }
    contour
}

/// 8-connected components, labelled in raster-scan order of first pixel,
/// each with bbox, centroid and a clockwise Moore-traced contour.
pub fn connected_components(mask: &BinaryMask) -> Vec<SeedRegion> {
    let (w, h) = (mask.width(), mask.height());
    let mut labels = vec![0u32; w * h];
    let mut regions = Vec::new();
    let mut next_label = 1u32;

    for y in 0..h {
        for x in 0..w {
            if !mask.get(x, y) || labels[y * w + x] != 0 {
                continue;
            }
            let label = next_label;
            next_label += 1;
            let mut pixels = Vec::new();
            let mut stack = vec![(x, y)];
            labels[y * w + x] = label;
            while let Some((px, py)) = stack.pop() {
                pixels.push((px, py));
                for &(dx, dy) in &MOORE {
                    let (nx, ny) = (px as isize + dx, py as isize + dy);
                    if nx >= 0 && ny >= 0 && (nx as usize) < w && (ny as usize) < h {
                        let (nx, ny) = (nx as usize, ny as usize);
                        if mask.get(nx, ny) && labels[ny * w + nx] == 0 {
                            labels[ny * w + nx] = label;
                            stack.push((nx, ny));
                        }
                    }
                }
            }
            pixels.sort_unstable_by_key(|&(px, py)| (py, px));

            let xs = pixels.iter().map(|&(px, _)| px);
            let ys = pixels.iter().map(|&(_, py)| py);
            let bbox = (
                xs.clone().min().unwrap(),
                ys.clone().min().unwrap(),
                xs.max().unwrap(),
                ys.max().unwrap(),
            );
            let n = pixels.len() as f64;
            let centroid = (
                pixels.iter().map(|&(px, _)| px as f64).sum::<f64>() / n,
                pixels.iter().map(|&(_, py)| py as f64).sum::<f64>() / n,
            );
            let start = pixels
                .iter()
                .copied()
                .min_by_key(|&(px, py)| (py, px))
                .unwrap();
            let is_fg = |cx: isize, cy: isize| {
                cx >= 0
                    && cy >= 0
                    && (cx as usize) < w
                    && (cy as usize) < h
                    && labels[cy as usize * w + cx as usize] == label
            };
            let contour = moore_trace(start, pixels.len(), &is_fg);

            regions.push(SeedRegion {
                label,
                pixels,
                bbox,
                centroid,
                contour,
            });
        }
    }
    regions
}

/// Keep regions within the filter's area and circularity bounds,
/// preserving input order.
pub fn filter_regions(regions: Vec<SeedRegion>, f: &RegionFilter) -> Vec<SeedRegion> {
    regions.into_iter().filter(|r| f.keeps(r)).collect()
}

/// Crop the region's bbox expanded by `pad` (clamped to the image), erasing
/// every other region from the cropped mask.
pub fn crop_region(
    img: &RgbRaster,
    mask: &BinaryMask,
    r: &SeedRegion,
    pad: usize,
) -> (RgbRaster, BinaryMask) {
    debug_assert_eq!((img.width(), img.height()), (mask.width(), mask.height()));
    let (x0, y0, x1, y1) = r.bbox;
    let cx0 = x0.saturating_sub(pad);
    let cy0 = y0.saturating_sub(pad);
    let cx1 = (x1 + pad).min(img.width() - 1);
    let cy1 = (y1 + pad).min(img.height() - 1);
    let (cw, ch) = (cx1 - cx0 + 1, cy1 - cy0 + 1);

    let mut pixels = Vec::with_capacity(cw * ch);
    for y in cy0..=cy1 {
        for x in cx0..=cx1 {
            pixels.push(img.get(x, y));
        }
    }
    let crop = RgbRaster::new(cw, ch, pixels).expect("non-empty crop");

    let mut crop_mask = BinaryMask::blank(cw, ch);
    for &(px, py) in &r.pixels {
        crop_mask.set(px - cx0, py - cy0, true);
    }
    (crop, crop_mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive-search Otsu oracle: evaluates every split directly.
    fn otsu_oracle(hist: &[u64; 256]) -> Option<u8> {
        let total: u64 = hist.iter().sum();
        if hist.iter().filter(|&&c| c > 0).count() <= 1 {
            return None;
        }
        let mut best = (f64::NEG_INFINITY, 0u8);
        for t in 0..256usize {
            let w0: u64 = hist[..=t].iter().sum();
            let w1 = total - w0;
            if w0 == 0 || w1 == 0 {
                continue;
            }
            let m0 = hist[..=t]
                .iter()
                .enumerate()
                .map(|(g, &c)| g as f64 * c as f64)
                .sum::<f64>()
                / w0 as f64;
            let m1 = hist[t + 1..]
                .iter()
                .enumerate()
                .map(|(g, &c)| (g + t + 1) as f64 * c as f64)
                .sum::<f64>()
                / w1 as f64;
            let var = w0 as f64 * w1 as f64 * (m0 - m1) * (m0 - m1);
            if var > best.0 {
                best = (var, t as u8);
            }
        }
        Some(best.1)
    }

    #[test]
    fn otsu_bimodal_matches_exhaustive_search() {
        let mut hist = [0u64; 256];
        hist[10] = 500;
        hist[200] = 500;
        let t = otsu_threshold(&hist).unwrap();
        assert!((10..=199).contains(&t));
        assert_eq!(t, otsu_oracle(&hist).unwrap());
    }

    #[test]
    fn otsu_symmetric_tie_breaks_low() {
        let mut hist = [0u64; 256];
        hist[0] = 100;
        hist[255] = 100;
        let t = otsu_threshold(&hist).unwrap();
        assert_eq!(t, otsu_oracle(&hist).unwrap());
        assert_eq!(t, 0, "all splits below 255 tie; smallest t wins");
    }

    #[test]
    fn otsu_single_bin_is_degenerate() {
        let mut hist = [0u64; 256];
        hist[77] = 123;
        assert_eq!(
            otsu_threshold(&hist),
            Err(SegmentError::DegenerateHistogram)
        );
    }

    #[test]
    fn otsu_matches_oracle_on_random_histograms() {
        let mut state = 0x243F_6A88_85A3_08D3u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..200 {
            let mut hist = [0u64; 256];
            let bins = 2 + (next() % 6) as usize;
            for _ in 0..bins {
                hist[(next() % 256) as usize] += 1 + next() % 1000;
            }
            if hist.iter().filter(|&&c| c > 0).count() <= 1 {
                continue;
            }
            assert_eq!(otsu_threshold(&hist).unwrap(), otsu_oracle(&hist).unwrap());
        }
    }

    #[test]
    fn uniform_navy_is_all_background() {
        let img = RgbRaster::filled(16, 12, [20, 20, 160]);
        let mask = blue_background_mask(&img).unwrap();
        assert_eq!(mask.count_foreground(), 0);
    }

    #[test]
    fn constant_blue_without_dominance_is_degenerate() {
        // A uniform brown image has a constant blue channel and no pixel with
        // dominant blue: not a blue-background scan.
        let img = RgbRaster::filled(8, 8, [140, 90, 60]);
        assert_eq!(
            blue_background_mask(&img),
            Err(SegmentError::DegenerateHistogram)
        );
    }

    fn navy_with_rect(w: usize, h: usize, rect: (usize, usize, usize, usize)) -> RgbRaster {
        let mut img = RgbRaster::filled(w, h, [20, 20, 160]);
        for y in rect.1..=rect.3 {
            for x in rect.0..=rect.2 {
                img.set(x, y, [140, 90, 60]);
            }
        }
        img
    }

    #[test]
    fn brown_rectangle_on_navy_segments_exactly() {
        let img = navy_with_rect(40, 30, (5, 6, 20, 18));
        let mask = blue_background_mask(&img).unwrap();
        for y in 0..30 {
            for x in 0..40 {
                let inside = (5..=20).contains(&x) && (6..=18).contains(&y);
                assert_eq!(mask.get(x, y), inside, "at ({x},{y})");
            }
        }
    }

    #[test]
    fn enclosed_blue_speck_is_filled() {
        let mut img = navy_with_rect(40, 30, (5, 6, 20, 18));
        img.set(10, 10, [20, 20, 140]); // dark-blue speck inside the seed
        let mask = blue_background_mask(&img).unwrap();
        assert!(mask.get(10, 10), "hole filling claims the enclosed speck");
    }

    #[test]
    fn mask_invariant_under_background_brightening() {
        let img = navy_with_rect(40, 30, (5, 6, 20, 18));
        let mut brighter = img.clone();
        for y in 0..30 {
            for x in 0..40 {
                let [r, g, b] = brighter.get(x, y);
                if b > r.max(g) {
                    brighter.set(x, y, [r, g, b.saturating_add(40)]);
                }
            }
        }
        assert_eq!(
            blue_background_mask(&img).unwrap(),
            blue_background_mask(&brighter).unwrap()
        );
    }

    fn mask_of(w: usize, h: usize, coords: &[(usize, usize)]) -> BinaryMask {
        let mut m = BinaryMask::blank(w, h);
        for &(x, y) in coords {
            m.set(x, y, true);
        }
        m
    }

    #[test]
    fn empty_mask_has_no_components() {
        assert!(connected_components(&BinaryMask::blank(7, 5)).is_empty());
    }

    #[test]
    fn full_mask_is_one_component() {
        let m = BinaryMask::new(6, 4, vec![true; 24]).unwrap();
        let regions = connected_components(&m);
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].area(), 24);
        assert_eq!(regions[0].bbox, (0, 0, 5, 3));
    }

    #[test]
    fn diagonal_pair_is_one_component() {
        let m = mask_of(4, 4, &[(1, 1), (2, 2)]);
        let regions = connected_components(&m);
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].area(), 2);
    }

    #[test]
    fn labels_follow_raster_order() {
        let m = mask_of(10, 4, &[(7, 0), (1, 2), (2, 2)]);
        let regions = connected_components(&m);
        assert_eq!(regions.len(), 2);
        assert_eq!(regions[0].label, 1);
        assert_eq!(regions[0].pixels, vec![(7, 0)]);
        assert_eq!(regions[1].label, 2);
        assert_eq!(regions[1].pixels, vec![(1, 2), (2, 2)]);
    }

    #[test]
    fn square_contour_is_the_boundary_ring_clockwise() {
        let mut m = BinaryMask::blank(12, 12);
        for y in 1..11 {
            for x in 1..11 {
                m.set(x, y, true);
            }
        }
        let regions = connected_components(&m);
        assert_eq!(regions.len(), 1);
        let contour = &regions[0].contour;
        assert_eq!(contour.len(), 36, "10×10 square has a 36-pixel ring");
        assert_eq!(contour[0], (1, 1));
        assert_eq!(contour[1], (2, 1), "clockwise start heads east");
        // Every contour pixel is a member with a background 4-neighbour.
        for &(x, y) in contour {
            assert!(m.get(x, y));
            let bg4 = [(1isize, 0isize), (-1, 0), (0, 1), (0, -1)]
                .iter()
                .any(|&(dx, dy)| !m.get_checked(x as isize + dx, y as isize + dy));
            assert!(bg4);
        }
    }

    #[test]
    fn component_areas_sum_to_foreground_count() {
        let mut m = BinaryMask::blank(32, 32);
        let mut state = 0xDEADBEEFu64;
        for y in 0..32 {
            for x in 0..32 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                if (state >> 60) & 1 == 1 {
                    m.set(x, y, true);
                }
            }
        }
        let regions = connected_components(&m);
        let total: usize = regions.iter().map(|r| r.area()).sum();
        assert_eq!(total, m.count_foreground());
    }

    #[test]
    fn relabeling_reconstructed_mask_is_idempotent() {
        let mut m = BinaryMask::blank(24, 24);
        let mut state = 0x1234_5678u64;
        for y in 0..24 {
            for x in 0..24 {
                state = state
                    .wrapping_mul(2862933555777941757)
                    .wrapping_add(3037000493);
                if (state >> 61) & 3 == 3 {
                    m.set(x, y, true);
                }
            }
        }
        let regions = connected_components(&m);
        let mut rebuilt = BinaryMask::blank(24, 24);
        for r in &regions {
            for &(x, y) in &r.pixels {
                rebuilt.set(x, y, true);
            }
        }
        let again = connected_components(&rebuilt);
        assert_eq!(regions, again);
    }

    #[test]
    fn filter_keeps_only_in_range_areas() {
        let mut m = BinaryMask::blank(300, 300);
        // ~5 px, ~500 px and ~50000 px blobs: 2×2, 22×22, 224×224 squares.
        for (ox, oy, side) in [(0usize, 0usize, 2usize), (10, 10, 22), (40, 40, 224)] {
            for y in oy..oy + side {
                for x in ox..ox + side {
                    m.set(x, y, true);
                }
            }
        }
        let regions = connected_components(&m);
        assert_eq!(regions.len(), 3);
        let filter = RegionFilter {
            min_area: 100,
            max_area: 10_000,
            circ_min: 0.0,
            circ_max: 1.0,
        };
        let kept = filter_regions(regions, &filter);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].area(), 22 * 22);
    }

    #[test]
    fn permissive_filter_is_identity() {
        // Step-sum perimeters understate tiny shapes, so their circularity
        // can exceed 1; a truly permissive filter needs an open ceiling.
        let m = mask_of(8, 8, &[(1, 1), (2, 1), (1, 2), (2, 2), (5, 5)]);
        let regions = connected_components(&m);
        let filter = RegionFilter {
            min_area: 0,
            max_area: usize::MAX,
            circ_min: 0.0,
            circ_max: f64::INFINITY,
        };
        let kept = filter_regions(regions.clone(), &filter);
        assert_eq!(kept, regions);
    }

    #[test]
    fn elongated_bar_fails_high_circularity_bound() {
        let mut m = BinaryMask::blank(70, 10);
        for y in 2..5 {
            for x in 3..63 {
                m.set(x, y, true);
            }
        }
        let regions = connected_components(&m);
        assert_eq!(regions.len(), 1);
        // Brute-force circularity of a 60×3 bar: P = 122 steps, A = 180.
        let circ = regions[0].circularity();
        assert!((circ - 4.0 * std::f64::consts::PI * 180.0 / (122.0 * 122.0)).abs() < 1e-12);
        let filter = RegionFilter {
            min_area: 0,
            max_area: usize::MAX,
            circ_min: 0.8,
            circ_max: 1.0,
        };
        assert!(filter_regions(regions, &filter).is_empty());
    }

    #[test]
    fn crop_without_pad_matches_bbox() {
        let img = navy_with_rect(40, 30, (5, 6, 20, 18));
        let mask = blue_background_mask(&img).unwrap();
        let regions = connected_components(&mask);
        let (crop, crop_mask) = crop_region(&img, &mask, &regions[0], 0);
        assert_eq!((crop.width(), crop.height()), (16, 13));
        assert_eq!(crop_mask.count_foreground(), regions[0].area());
    }

    #[test]
    fn crop_pad_clamps_at_image_corner() {
        let img = navy_with_rect(40, 30, (0, 0, 7, 5));
        let mask = blue_background_mask(&img).unwrap();
        let regions = connected_components(&mask);
        let (crop, _) = crop_region(&img, &mask, &regions[0], 10);
        assert_eq!((crop.width(), crop.height()), (18, 16));
    }

    #[test]
    fn overlapping_bboxes_yield_disjoint_crop_masks() {
        // Two L-shaped seeds whose bboxes overlap but whose pixels don't touch.
        let mut m = BinaryMask::blank(20, 20);
        for (x, y) in [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (2, 5), (2, 6)] {
            m.set(x, y, true);
        }
        for (x, y) in [(6, 6), (5, 6), (4, 6), (6, 5), (6, 4)] {
            m.set(x, y, true);
        }
        let img = RgbRaster::filled(20, 20, [0, 0, 0]);
        let regions = connected_components(&m);
        assert_eq!(regions.len(), 2);
        let (_, m0) = crop_region(&img, &m, &regions[0], 0);
        let (_, m1) = crop_region(&img, &m, &regions[1], 0);
        assert_eq!(m0.count_foreground(), regions[0].area());
        assert_eq!(m1.count_foreground(), regions[1].area());
    }
}
