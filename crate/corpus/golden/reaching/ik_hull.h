// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// ik (Mapping.InverseKinematics)
class IkHull : public cca::Component {
public:
    explicit IkHull(const char* name) : cca::Component(name) {}
    ~IkHull() override = default;

    cca::In<cca::Port<CartesianPosition, 3>> in;
    cca::Out<cca::Port<JointAngles, 6>> out;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
