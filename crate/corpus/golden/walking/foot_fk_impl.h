// Foot_fkImpl: behaviour of component foot_fk.
// Written once by amdsl; never overwritten.
#pragma once

#include "foot_fk_hull.h"

namespace amdsl_gen {

class Foot_fkImpl : public Foot_fkHull {
public:
    using Foot_fkHull::Foot_fkHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
