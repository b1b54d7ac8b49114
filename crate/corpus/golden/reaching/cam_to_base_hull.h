// GENERATED by amdsl v0.1.0 — DO NOT EDIT
// runtime include: cca/runtime.h
#pragma once

#include <cca/runtime.h>

namespace amdsl_gen {
using namespace cca::types;

// cam_to_base (Transformation.CoordinateTransformation)
class Cam_to_baseHull : public cca::Component {
public:
    explicit Cam_to_baseHull(const char* name) : cca::Component(name) {}
    ~Cam_to_baseHull() override = default;

    cca::In<cca::Port<CartesianPosition, 3>> in;
    cca::Out<cca::Port<CartesianPosition, 3>> out;

    void onInit() override = 0;
    void onExecute() override = 0;
};

} // namespace amdsl_gen
