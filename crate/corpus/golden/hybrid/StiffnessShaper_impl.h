// StiffnessShaperImpl: behaviour of component StiffnessShaper.
// Written once by amdsl; never overwritten.
#pragma once

#include "StiffnessShaper_hull.h"

namespace amdsl_gen {

class StiffnessShaperImpl : public StiffnessShaperHull {
public:
    using StiffnessShaperHull::StiffnessShaperHull;

    void onInit() override;
    void onExecute() override;
    void onOfflineLearning() override;
    bool checkCriterion() override;
};

} // namespace amdsl_gen
