pub struct Code2D;
pub struct Grid2D;
pub struct DecodeState;
pub struct DecodeTrace;
pub struct DecodeOutcome;
