#![allow(dead_code)]

pub mod printed;
