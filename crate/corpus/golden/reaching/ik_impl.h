// IkImpl: behaviour of component ik.
// Written once by amdsl; never overwritten.
#pragma once

#include "ik_hull.h"

namespace amdsl_gen {

class IkImpl : public IkHull {
public:
    using IkHull::IkHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
