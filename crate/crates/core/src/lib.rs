pub mod bits;
pub mod classify;
pub mod error;
pub mod fibration;
pub mod levi;
pub mod parabolic;
pub mod rootspace;
pub mod satake;
