// Fk_toolImpl: behaviour of component fk_tool.
// Written once by amdsl; never overwritten.
#pragma once

#include "fk_tool_hull.h"

namespace amdsl_gen {

class Fk_toolImpl : public Fk_toolHull {
public:
    using Fk_toolHull::Fk_toolHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
