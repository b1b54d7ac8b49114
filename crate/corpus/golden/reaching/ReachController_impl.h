// ReachControllerImpl: behaviour of component ReachController.
// Written once by amdsl; never overwritten.
#pragma once

#include "ReachController_hull.h"

namespace amdsl_gen {

class ReachControllerImpl : public ReachControllerHull {
public:
    using ReachControllerHull::ReachControllerHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
