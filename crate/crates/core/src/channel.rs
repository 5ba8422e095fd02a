pub struct ErasurePattern;
