use serde::Serialize;

/// A measured quantity together with the bound it must not exceed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    pub value: f64,
    pub bound: f64,
}

impl Residual {
    pub fn new(value: f64, bound: f64) -> Self {
        Self { value, bound }
    }

    pub fn passes(&self) -> bool {
        self.value <= self.bound
    }
}
