//! Worst-case master-to-slave distance inside a rectangular cabin.
//!
//! The cabin is an axis-aligned empty box with a master transmitter mounted
//! on the ceiling; seats, luggage and bodies are ignored. The farthest point
//! of a closed box from any point inside it is one of the eight corners, so
//! the worst case maximizes over corners, and the per-axis distance to the
//! farther wall is what each corner contributes.

use crate::error::{Error, Result};

/// Default interior dimensions in meters, modeling a high-speed railway
/// trailer cabin. Placing the master at the ceiling center of this box puts
/// the farthest slave position just under 10 m away.
pub const DEFAULT_LENGTH_M: f64 = 18.70;
pub const DEFAULT_WIDTH_M: f64 = 2.90;
pub const DEFAULT_HEIGHT_M: f64 = 2.50;

/// Axis-aligned cabin with a master device position inside it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CabinGeometry {
    length: f64,
    width: f64,
    height: f64,
    master: [f64; 3],
}

impl CabinGeometry {
    /// Cabin with the master at the ceiling center (length/2, width/2, height).
    pub fn new(length: f64, width: f64, height: f64) -> Result<Self> {
        Self::with_master(length, width, height, [length / 2.0, width / 2.0, height])
    }

    /// Cabin with the master at an explicit ceiling position.
    pub fn with_master_xy(length: f64, width: f64, height: f64, x: f64, y: f64) -> Result<Self> {
        Self::with_master(length, width, height, [x, y, height])
    }

    /// Cabin with the master anywhere inside or on the box.
    pub fn with_master(length: f64, width: f64, height: f64, master: [f64; 3]) -> Result<Self> {
        for (dim, name) in [(length, "length"), (width, "width"), (height, "height")] {
            if !dim.is_finite() || dim <= 0.0 {
                return Err(Error::InvalidGeometry(format!(
                    "{name} must be positive, got {dim} m"
                )));
            }
        }
        let bounds = [length, width, height];
        for axis in 0..3 {
            let m = master[axis];
            if !m.is_finite() || m < 0.0 || m > bounds[axis] {
                return Err(Error::InvalidGeometry(format!(
                    "master {} = {m} m lies outside the cabin [0, {} m]",
                    ["x", "y", "z"][axis],
                    bounds[axis]
                )));
            }
        }
        Ok(CabinGeometry {
            length,
            width,
            height,
            master,
        })
    }

    /// The default cabin with a ceiling-center master.
    pub fn default_cabin() -> Self {
        Self::new(DEFAULT_LENGTH_M, DEFAULT_WIDTH_M, DEFAULT_HEIGHT_M)
            .expect("default dimensions are valid")
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn master(&self) -> [f64; 3] {
        self.master
    }

    /// The eight corners of the box.
    pub fn corners(&self) -> [[f64; 3]; 8] {
        let mut corners = [[0.0; 3]; 8];
        for (i, corner) in corners.iter_mut().enumerate() {
            *corner = [
                if i & 1 == 0 { 0.0 } else { self.length },
                if i & 2 == 0 { 0.0 } else { self.width },
                if i & 4 == 0 { 0.0 } else { self.height },
            ];
        }
        corners
    }
}

fn distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Largest Euclidean distance from the master to any point of the closed
/// cabin.
pub fn worst_case_distance(g: &CabinGeometry) -> f64 {
    worst_case_corner(g).1
}

/// The corner attaining the worst-case distance, with that distance. Ties
/// resolve to the first corner in the fixed corner order.
pub fn worst_case_corner(g: &CabinGeometry) -> ([f64; 3], f64) {
    let master = g.master();
    let mut best_corner = [0.0; 3];
    let mut best = -1.0;
    for corner in g.corners() {
        let d = distance(corner, master);
        if d > best {
            best = d;
            best_corner = corner;
        }
    }
    (best_corner, best)
}

/// Ceiling position minimizing the worst-case distance. Each axis is
/// independent and max(x, length - x) is minimized at the midpoint, so the
/// optimum is the ceiling center.
pub fn optimal_master_xy(g: &CabinGeometry) -> [f64; 2] {
    [g.length() / 2.0, g.width() / 2.0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_cube_master_at_top_center() {
        let g = CabinGeometry::new(1.0, 1.0, 1.0).unwrap();
        let d = worst_case_distance(&g);
        assert!((d - 1.224744871391589).abs() < 1e-12, "got {d}");
    }

    #[test]
    fn unit_cube_master_at_top_corner() {
        let g = CabinGeometry::with_master_xy(1.0, 1.0, 1.0, 0.0, 0.0).unwrap();
        let (corner, d) = worst_case_corner(&g);
        assert!((d - 3f64.sqrt()).abs() < 1e-12, "got {d}");
        assert_eq!(corner, [1.0, 1.0, 0.0]);
    }

    #[test]
    fn default_cabin_worst_case() {
        let g = CabinGeometry::default_cabin();
        let d = worst_case_distance(&g);
        // sqrt(9.35^2 + 1.45^2 + 2.5^2)
        assert!((d - 9.786470252343283).abs() < 1e-12, "got {d}");
        assert!((d - 9.787).abs() < 0.001);
    }

    #[test]
    fn optimal_master_is_ceiling_center() {
        let g = CabinGeometry::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(optimal_master_xy(&g), [0.5, 0.5]);
        let g = CabinGeometry::default_cabin();
        assert_eq!(optimal_master_xy(&g), [9.35, 1.45]);
    }

    #[test]
    fn optimal_master_agrees_with_ceiling_grid_search() {
        // 1 cm grid over the ceiling; the analytic center must be within one
        // grid step of the brute-force minimizer.
        for (l, w, h) in [(4.0f64, 2.0, 2.5), (7.3, 2.9, 2.1)] {
            let step = 0.01;
            let mut best = (f64::INFINITY, 0.0, 0.0);
            let nx = (l / step).round() as usize;
            let ny = (w / step).round() as usize;
            for ix in 0..=nx {
                for iy in 0..=ny {
                    let (x, y) = (ix as f64 * step, iy as f64 * step);
                    let g = CabinGeometry::with_master_xy(l, w, h, x.min(l), y.min(w)).unwrap();
                    let d = worst_case_distance(&g);
                    if d < best.0 {
                        best = (d, x, y);
                    }
                }
            }
            let center = optimal_master_xy(&CabinGeometry::new(l, w, h).unwrap());
            assert!((best.1 - center[0]).abs() <= step + 1e-12, "x: {best:?}");
            assert!((best.2 - center[1]).abs() <= step + 1e-12, "y: {best:?}");
        }
    }

    #[test]
    fn corner_always_beats_interior_grid() {
        // Dense 3D grid oracle on a small box: no interior or surface point
        // may exceed the corner maximum.
        let g = CabinGeometry::with_master_xy(2.0, 1.5, 1.0, 0.4, 1.1).unwrap();
        let analytic = worst_case_distance(&g);
        let n = 40;
        let mut grid_max: f64 = 0.0;
        for ix in 0..=n {
            for iy in 0..=n {
                for iz in 0..=n {
                    let p = [
                        2.0 * ix as f64 / n as f64,
                        1.5 * iy as f64 / n as f64,
                        1.0 * iz as f64 / n as f64,
                    ];
                    grid_max = grid_max.max(distance(p, g.master()));
                }
            }
        }
        assert!(grid_max <= analytic + 1e-12);
        assert!(analytic - grid_max < 1e-9, "a corner is on the grid");
    }

    #[test]
    fn translation_leaves_distance_unchanged() {
        // Shifting box and master together is a rigid motion; the corner
        // distances recomputed in the shifted frame match the library value.
        let g = CabinGeometry::with_master_xy(5.0, 3.0, 2.0, 1.0, 2.0).unwrap();
        let reference = worst_case_distance(&g);
        for shift in [[10.0, -4.0, 2.5], [-1.0, 0.0, 100.0]] {
            let master = [
                g.master()[0] + shift[0],
                g.master()[1] + shift[1],
                g.master()[2] + shift[2],
            ];
            let mut shifted_max: f64 = 0.0;
            for corner in g.corners() {
                let c = [
                    corner[0] + shift[0],
                    corner[1] + shift[1],
                    corner[2] + shift[2],
                ];
                shifted_max = shifted_max.max(distance(c, master));
            }
            assert!((shifted_max - reference).abs() < 1e-12);
        }
    }

    #[test]
    fn center_is_no_worse_than_any_perturbation() {
        let g = CabinGeometry::default_cabin();
        let at_center = worst_case_distance(&g);
        for (dx, dy) in [(0.3, 0.0), (-0.3, 0.0), (0.0, 0.2), (0.0, -0.2), (0.5, 0.4)] {
            let moved = CabinGeometry::with_master_xy(
                g.length(),
                g.width(),
                g.height(),
                g.length() / 2.0 + dx,
                g.width() / 2.0 + dy,
            )
            .unwrap();
            assert!(worst_case_distance(&moved) >= at_center);
        }
    }

    #[test]
    fn invalid_geometry_is_rejected() {
        assert!(CabinGeometry::new(-5.0, 2.0, 2.0).is_err());
        assert!(CabinGeometry::new(5.0, 0.0, 2.0).is_err());
        assert!(CabinGeometry::new(5.0, 2.0, f64::NAN).is_err());
        assert!(CabinGeometry::with_master_xy(5.0, 2.0, 2.0, 6.0, 1.0).is_err());
        assert!(CabinGeometry::with_master(5.0, 2.0, 2.0, [1.0, 1.0, -0.1]).is_err());
    }
}
