// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// fk_tool (Mapping.ForwardKinematics)
class Fk_toolHull : public cca::Component {
public:
    explicit Fk_toolHull(const char* name) : cca::Component(name) {}
    ~Fk_toolHull() override = default;

    cca::In<cca::Port<JointAngles, 6>> in;
    cca::Out<cca::Port<CartesianPose, 6>> out;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
