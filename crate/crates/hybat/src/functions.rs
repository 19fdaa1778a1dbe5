//! Five-function benchmark suite: Griewank, Rosenbrock, sphere, Rastrigin,
//! and a chained two-dimensional Ackley. Evaluation is pure; each function
//! carries a fixed symmetric domain and a known global minimum of zero.

use crate::error::{Error, Result};
use std::f64::consts::{E, PI};

/// Identity of one benchmark function, in suite order `f1..f5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Function {
    Griewank,
    Rosenbrock,
    Sphere,
    Rastrigin,
    Ackley,
}

impl Function {
    pub const ALL: [Function; 5] = [
        Function::Griewank,
        Function::Rosenbrock,
        Function::Sphere,
        Function::Rastrigin,
        Function::Ackley,
    ];

    /// Suite id, `f1..f5`.
    pub fn short_name(self) -> &'static str {
        match self {
            Function::Griewank => "f1",
            Function::Rosenbrock => "f2",
            Function::Sphere => "f3",
            Function::Rastrigin => "f4",
            Function::Ackley => "f5",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            Function::Griewank => "griewank",
            Function::Rosenbrock => "rosenbrock",
            Function::Sphere => "sphere",
            Function::Rastrigin => "rastrigin",
            Function::Ackley => "ackley",
        }
    }

    /// Half-width of the symmetric search domain per coordinate.
    pub fn domain_half_width(self) -> f64 {
        match self {
            Function::Griewank => 600.0,
            Function::Rosenbrock => 15.0,
            Function::Sphere => 15.0,
            Function::Rastrigin => 15.0,
            Function::Ackley => 32.0,
        }
    }

    /// Smallest dimension the function is defined for. Rosenbrock and the
    /// chained Ackley sum over coordinate pairs, so they need two.
    pub fn min_dimension(self) -> usize {
        match self {
            Function::Rosenbrock | Function::Ackley => 2,
            _ => 1,
        }
    }

    /// Coordinates of the global minimum (fitness zero).
    pub fn optimum(self, dimension: usize) -> Vec<f64> {
        match self {
            Function::Rosenbrock => vec![1.0; dimension],
            _ => vec![0.0; dimension],
        }
    }

    /// Accepts `f1..f5` or long names, case-insensitively.
    pub fn parse(name: &str) -> Result<Function> {
        let lowered = name.trim().to_ascii_lowercase();
        for function in Function::ALL {
            if lowered == function.short_name() || lowered == function.long_name() {
                return Ok(function);
            }
        }
        Err(Error::UnknownFunction {
            name: name.to_string(),
        })
    }
}

/// A benchmark function pinned to a dimension and its per-coordinate bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveSpec {
    pub function: Function,
    pub dimension: usize,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

impl ObjectiveSpec {
    /// Builds a spec with the suite's standard bounds for `function`.
    pub fn new(function: Function, dimension: usize) -> Result<Self> {
        if dimension < function.min_dimension() {
            return Err(Error::InvalidParameter {
                name: "dimension",
                reason: format!(
                    "{} needs dimension >= {}, got {dimension}",
                    function.long_name(),
                    function.min_dimension()
                ),
            });
        }
        let half_width = function.domain_half_width();
        Ok(ObjectiveSpec {
            function,
            dimension,
            lower_bound: -half_width,
            upper_bound: half_width,
        })
    }

    /// `new` with the function looked up by name (`f1..f5` or long name).
    pub fn by_name(name: &str, dimension: usize) -> Result<Self> {
        ObjectiveSpec::new(Function::parse(name)?, dimension)
    }

    /// Evaluates the objective at `x`. Pure: identical inputs give
    /// bitwise-identical outputs. Bounds are not enforced here.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                actual: x.len(),
            });
        }
        if let Some(index) = x.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput { index });
        }
        Ok(match self.function {
            Function::Griewank => griewank(x),
            Function::Rosenbrock => rosenbrock(x),
            Function::Sphere => sphere(x),
            Function::Rastrigin => rastrigin(x),
            Function::Ackley => ackley_chain(x),
        })
    }
}

/// `-prod cos(x_i / sqrt(i)) + sum x_i^2 / 4000 + 1`, 1-based `i`.
fn griewank(x: &[f64]) -> f64 {
    let product: f64 = x
        .iter()
        .enumerate()
        .map(|(i, xi)| (xi / ((i + 1) as f64).sqrt()).cos())
        .product();
    let sum: f64 = x.iter().map(|xi| xi * xi / 4000.0).sum();
    -product + sum + 1.0
}

/// `sum 100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2` over consecutive pairs.
fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|xi| xi * xi).sum()
}

/// `10 n + sum (x_i^2 - 10 cos(2 pi x_i))`.
fn rastrigin(x: &[f64]) -> f64 {
    let modulated: f64 = x
        .iter()
        .map(|xi| xi * xi - 10.0 * (2.0 * PI * xi).cos())
        .sum();
    10.0 * x.len() as f64 + modulated
}

/// Chained Ackley: the two-dimensional Ackley term summed over consecutive
/// coordinate pairs, not the more common single-term n-dimensional form.
fn ackley_chain(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            20.0 + E
                - 20.0 * (-0.2 * (0.5 * (b * b + a * a)).sqrt()).exp()
                - (0.5 * ((2.0 * PI * b).cos() + (2.0 * PI * a).cos())).exp()
        })
        .sum()
}
