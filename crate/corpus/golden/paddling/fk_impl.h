// FkImpl: behaviour of component fk.
// Written once by amdsl; never overwritten.
#pragma once

#include "fk_hull.h"

namespace amdsl_gen {

class FkImpl : public FkHull {
public:
    using FkHull::FkHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
