// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// ft_to_wrench (Mapping.Custom_ft_model)
class Ft_to_wrenchHull : public cca::Component {
public:
    explicit Ft_to_wrenchHull(const char* name) : cca::Component(name) {}
    ~Ft_to_wrenchHull() override = default;

    cca::In<cca::Port<ForceTorque, 6>> in;
    cca::Out<cca::Port<CartesianWrench, 6>> out;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
