// SwingPhaseImpl: behaviour of component SwingPhase.
// Written once by amdsl; never overwritten.
#pragma once

#include "SwingPhase_hull.h"

namespace amdsl_gen {

class SwingPhaseImpl : public SwingPhaseHull {
public:
    using SwingPhaseHull::SwingPhaseHull;

    void onInit() override;
    void onExecute() override;
    void onOfflineLearning() override;
    bool checkCriterion() override;
};

} // namespace amdsl_gen
