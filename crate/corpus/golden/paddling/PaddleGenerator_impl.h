// PaddleGeneratorImpl: behaviour of component PaddleGenerator.
// Written once by amdsl; never overwritten.
#pragma once

#include "PaddleGenerator_hull.h"

namespace amdsl_gen {

class PaddleGeneratorImpl : public PaddleGeneratorHull {
public:
    using PaddleGeneratorHull::PaddleGeneratorHull;

    void onInit() override;
    void onExecute() override;
    void onOnlineLearning() override;
};

} // namespace amdsl_gen
