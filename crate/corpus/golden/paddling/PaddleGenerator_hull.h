// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// PaddleGenerator (PatternGenerator)
class PaddleGeneratorHull : public cca::Component {
public:
    explicit PaddleGeneratorHull(const char* name) : cca::Component(name) {}
    ~PaddleGeneratorHull() override = default;

    cca::In<cca::Port<JointAngles, 7>> exec_q_left;
    cca::In<cca::Port<JointAngles, 7>> learn_q_demo;
    cca::In<cca::Port<JointAngles, 7>> param_goal;
    cca::In<cca::Port<Scalar, 1>> param_speed;
    cca::Out<cca::Port<JointAngles, 7>> out_u;

    void onInit() override = 0;
    void onExecute() override = 0;
    void onOnlineLearning() override = 0;
};

} // namespace amdsl_gen
