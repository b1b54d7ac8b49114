// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// fk (Mapping.ForwardKinematics)
class FkHull : public cca::Component {
public:
    explicit FkHull(const char* name) : cca::Component(name) {}
    ~FkHull() override = default;

    cca::In<cca::Port<JointAngles, 7>> in;
    cca::Out<cca::Port<CartesianPose, 6>> out;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
