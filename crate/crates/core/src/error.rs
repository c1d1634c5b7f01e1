use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomials live over different variable lists: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("degree-0 input where a curve of positive degree is required")]
    DegreeZero,
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant exceeds the declared degree bound {bound}")]
    DegreeBoundViolation { bound: u32 },
    #[error("variable `{0}` occurs in neither polynomial")]
    VariableAbsent(String),
    #[error("the conchoidal transform is identically zero (both curves are z = 0)")]
    IdenticallyZero,
    #[error("point is at infinity; an affine point [a:b:1] is required")]
    PointAtInfinity,
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    #[error("the line at infinity is a component of the base curve")]
    InfinityComponent,
    #[error("genus {genus} is inconsistent with a smooth curve of degree {degree}")]
    InconsistentGenus { degree: u32, genus: String },
    #[error("curve is not squarefree")]
    NotSquarefree,
    #[error("degenerate conic")]
    DegenerateConic,
    #[error("expected a conic, got degree {0}")]
    NotAConic(u32),
    #[error("decomposition mismatch: {0}")]
    DecompositionMismatch(String),
    #[error("an intermediate resultant vanished identically")]
    ZeroResultant,
    #[error("imaginary unit is not available over Q")]
    ImaginaryUnitOverQ,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
