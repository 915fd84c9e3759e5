#![allow(dead_code)]

pub mod classical;
