//! `segment`: detect seeds in one scan, write crops and masks.

use std::fs;

use carpo_core::features::CategorySet;
use carpo_core::io::image::{load_rgb, mask_to_raster, save_png};
use carpo_core::io::ingest::segment_image;
use carpo_core::segmentation::crop_region;

use crate::args::SegmentArgs;
use crate::dataio::ingest_config;
use crate::error::CliError;

pub fn run(args: &SegmentArgs) -> Result<(), CliError> {
    let img = load_rgb(&args.image)?;
    let cfg = ingest_config(&args.filter, CategorySet::ALL);
    let (mask, regions) = segment_image(&img, &cfg)?;

    fs::create_dir_all(&args.out)?;
    let stem = args
        .image
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("image");
    save_png(
        &args.out.join(format!("{stem}_mask.png")),
        &mask_to_raster(&mask),
    )?;

    println!("region  area  bbox            circularity");
    for region in &regions {
        let (crop, crop_mask) = crop_region(&img, &mask, region, cfg.crop_pad);
        let label = region.label;
        save_png(&args.out.join(format!("{stem}_seed{label}.png")), &crop)?;
        save_png(
            &args.out.join(format!("{stem}_seed{label}_mask.png")),
            &mask_to_raster(&crop_mask),
        )?;
        let (x0, y0, x1, y1) = region.bbox;
        println!(
            "{label:<7} {:<5} ({x0},{y0})-({x1},{y1})  {:.4}",
            region.area(),
            region.circularity()
        );
    }
    println!(
        "{} region(s) written to {}",
        regions.len(),
        args.out.display()
    );
    Ok(())
}
