// StancePhaseImpl: behaviour of component StancePhase.
// Written once by amdsl; never overwritten.
#pragma once

#include "StancePhase_hull.h"

namespace amdsl_gen {

class StancePhaseImpl : public StancePhaseHull {
public:
    using StancePhaseHull::StancePhaseHull;

    void onInit() override;
    void onExecute() override;
    bool checkCriterion() override;
};

} // namespace amdsl_gen
