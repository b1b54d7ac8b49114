// Cam_to_baseImpl: behaviour of component cam_to_base.
// Written once by amdsl; never overwritten.
#pragma once

#include "cam_to_base_hull.h"

namespace amdsl_gen {

class Cam_to_baseImpl : public Cam_to_baseHull {
public:
    using Cam_to_baseHull::Cam_to_baseHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
