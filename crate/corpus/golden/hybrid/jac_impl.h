// JacImpl: behaviour of component jac.
// Written once by amdsl; never overwritten.
#pragma once

#include "jac_hull.h"

namespace amdsl_gen {

class JacImpl : public JacHull {
public:
    using JacHull::JacHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
