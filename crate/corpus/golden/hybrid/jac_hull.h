// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// jac (Mapping.Jacobian)
class JacHull : public cca::Component {
public:
    explicit JacHull(const char* name) : cca::Component(name) {}
    ~JacHull() override = default;

    cca::In<cca::Port<CartesianWrench, 6>> in;
    cca::Out<cca::Port<JointTorques, 7>> out;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
