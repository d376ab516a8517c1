//! Simulation core for an optical-wireless spine-and-leaf data center fabric.
//!
//! The crate models four subsystems:
//!
//! * [`scene`] — room geometry, ceiling transmitters, rack-top receivers, and
//!   the built-in four-rack scenario.
//! * [`channel`] — line-of-sight and up-to-second-order diffuse ray tracing,
//!   impulse responses, and delay spreads per link.
//! * [`linkbudget`] — noise, SNR, BER, and Shannon capacity per link, with
//!   best-branch selection for angle-diversity receivers.
//! * [`pon`] — the two-AWGR passive optical network interconnecting the
//!   ceiling access points and the OLT, with an exact wavelength-assignment
//!   solver and validator.
//! * [`power`] — power-consumption totals for the proposed fabric and a
//!   conventional spine-and-leaf baseline.
//!
//! Everything is deterministic: identical inputs produce identical outputs,
//! bit for bit.

pub mod channel;
pub mod error;
pub mod geom;
pub mod linkbudget;
pub mod pon;
pub mod power;
pub mod scene;

pub use error::Error;
pub use geom::Vec3;
pub use scene::{Receiver, ReceiverKind, Room, Scenario, SurfaceElement, Transmitter, Wavelength};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Elementary charge, coulombs.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
