// ForceTrackerImpl: behaviour of component ForceTracker.
// Written once by amdsl; never overwritten.
#pragma once

#include "ForceTracker_hull.h"

namespace amdsl_gen {

class ForceTrackerImpl : public ForceTrackerHull {
public:
    using ForceTrackerHull::ForceTrackerHull;

    void onInit() override;
    void onExecute() override;
    void onOnlineLearning() override;
    void onOfflineLearning() override;
};

} // namespace amdsl_gen
