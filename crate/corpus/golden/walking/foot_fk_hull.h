// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// foot_fk (Mapping.ForwardKinematics)
class Foot_fkHull : public cca::Component {
public:
    explicit Foot_fkHull(const char* name) : cca::Component(name) {}
    ~Foot_fkHull() override = default;

    cca::In<cca::Port<JointAngles, 12>> in;
    cca::Out<cca::Port<CartesianPosition, 3>> out;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
