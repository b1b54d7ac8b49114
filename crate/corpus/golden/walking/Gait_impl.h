// GaitImpl: behaviour of component Gait.
// Written once by amdsl; never overwritten.
#pragma once

#include "Gait_hull.h"

namespace amdsl_gen {

class GaitImpl : public GaitHull {
public:
    using GaitHull::GaitHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
