#include "bandix/errors.hpp"

namespace bandix {

std::string status_name(const std::exception& e) {
    // most derived first
    if (dynamic_cast<const ZeroPivot*>(&e)) return "ZeroPivot";
    if (dynamic_cast<const ReductionPivotZero*>(&e)) return "ReductionPivotZero";
    if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
    if (dynamic_cast<const ZeroDiagonal*>(&e)) return "ZeroDiagonal";
    if (dynamic_cast<const MaxIterationsExceeded*>(&e)) return "MaxIterationsExceeded";
    if (dynamic_cast<const Diverged*>(&e)) return "Diverged";
    if (dynamic_cast<const Stagnated*>(&e)) return "Stagnated";
    if (dynamic_cast<const DenseSizeExceeded*>(&e)) return "DenseSizeExceeded";
    if (dynamic_cast<const NonAffine*>(&e)) return "NonAffine";
    if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const InvalidSpec*>(&e)) return "InvalidSpec";
    if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
    if (dynamic_cast<const SolverError*>(&e)) return "SolverError";
    return "Error";
}

}  // namespace bandix
