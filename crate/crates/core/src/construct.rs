pub struct ConstructionReport;
