// Ft_to_wrenchImpl: behaviour of component ft_to_wrench.
// Written once by amdsl; never overwritten.
#pragma once

#include "ft_to_wrench_hull.h"

namespace amdsl_gen {

class Ft_to_wrenchImpl : public Ft_to_wrenchHull {
public:
    using Ft_to_wrenchHull::Ft_to_wrenchHull;

    void onInit() override;
    void onExecute() override;
};

} // namespace amdsl_gen
